// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Thresholds are fixed here, not taken from the command line.

#include "bidisk/commutant.hpp"
#include "bidisk/spectral.hpp"
#include "bidisk/structure.hpp"
#include "bidisk/subspace.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace bidisk;

namespace {

constexpr double kTol = 1e-8;
constexpr double kGap = 1e4;  // same as kRequiredGap, restated so a change there shows up here
constexpr int kMaxGrade = 8;
constexpr int kSafeGrade = 4;
constexpr int kTrials = 20;
constexpr std::uint64_t kSeed = 0;

struct Outcome {
  bool passed = true;
  std::string detail;
};

std::vector<std::pair<int, int>> shapes(int max) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= max; ++k) {
    for (int l = 1; l <= max; ++l) out.emplace_back(k, l);
  }
  return out;
}

std::string shape(int k, int l) { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

void fail(Outcome& o, const std::string& why) {
  if (o.passed) o.detail = why;
  o.passed = false;
}

Outcome structure_counts() {
  Outcome o;
  for (auto [k, l] : shapes(4)) {
    const Context ctx = build_context(k, l);
    const StructureReport r = structure_report(ctx);
    const int d = ctx.delta();
    const bool ok = r.m == (d * d - d) / 2 && r.m_prime == k * l - d * d + 2 * d &&
                    4 * r.m + r.m_prime == k * l + d * d && r.dim_predicted == k * l + d * d &&
                    r.minimal_count == k * l + d && r.abelian == (d == 1);
    if (!ok) fail(o, "count identity broken at " + shape(k, l));
  }
  if (structure_report(build_context(1, 1)).minimal_count != 2) fail(o, "(1,1) minimal_count != 2");
  if (o.passed) o.detail = "16 shapes, exact integer equality";
  return o;
}

Outcome commutant() {
  Outcome o;
  double worst_gap = 1e300;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {2, 4}, {3, 3}}) {
    const Context ctx = build_context(k, l);
    const std::size_t want = static_cast<std::size_t>(k * l + ctx.delta() * ctx.delta());
    for (int N : {6, 7, 8}) {
      const NullityResult r = commutant_dimension(ctx, make_window(N, N - 4), kTol);
      if (r.nullity != want) {
        fail(o, shape(k, l) + " N=" + std::to_string(N) + " measured " + std::to_string(r.nullity) +
                    ", expected " + std::to_string(want));
      }
      if (N == 8) {
        worst_gap = std::min(worst_gap, r.gap_ratio);
        if (!(r.gap_ratio >= kGap)) fail(o, shape(k, l) + " singular gap below 1e4");
      }
    }
  }
  if (o.passed) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "6 shapes, N=6,7,8 agree, smallest gap ratio %.2e", worst_gap);
    o.detail = buf;
  }
  return o;
}

Outcome lemmas() {
  Outcome o;
  std::size_t cases = 0;
  for (auto [k, l] : shapes(4)) {
    const LemmaReport r = lemma_suite(build_context(k, l), kMaxGrade);
    for (const LemmaCheck& c : r.checks) {
      cases += c.cases;
      if (!c.passed || !c.counterexamples.empty()) fail(o, c.name + " fails at " + shape(k, l));
    }
  }
  if (o.passed) o.detail = std::to_string(cases) + " cases, zero counterexamples";
  return o;
}

Outcome eigen_consistency() {
  Outcome o;
  std::size_t count = 0;
  for (auto [k, l] : shapes(4)) {
    const Context ctx = build_context(k, l);
    const Window w = make_window(kMaxGrade);
    for (const MonomialIndex& x : window_basis(ctx, w)) {
      const SparseVector e = SparseVector::monomial(x, w);
      ++count;
      if (!(apply(ctx, OpTag::T, e) == e * lambda_of(ctx, x))) fail(o, "T eigenvalue at " + shape(k, l));
      if (x.grade() > kMaxGrade - 2) continue;
      const SparseVector c = apply(ctx, OpTag::MpStar, apply(ctx, OpTag::Mp, e)) -
                             apply(ctx, OpTag::Mp, apply(ctx, OpTag::MpStar, e));
      if (!(c == apply(ctx, OpTag::T, e))) fail(o, "commutator at " + shape(k, l));
    }
  }
  if (o.passed) o.detail = std::to_string(count) + " window indices, exact";
  return o;
}

Outcome minimality() {
  Outcome o;
  const Window w = make_window(kMaxGrade, kSafeGrade);
  std::size_t count = 0;
  for (auto [k, l] : shapes(3)) {
    const Context ctx = build_context(k, l);
    for (const SubspaceLabel& label : minimal_labels(ctx)) {
      ++count;
      const Subspace M = canonical_subspace(ctx, label, w);
      const std::string where = to_string(label) + " at " + shape(k, l);
      if (!is_minimal(ctx, M, w, kTrials, kSeed)) fail(o, where + " not minimal");
      const Subspace G = generate_reducing(ctx, wandering_generator(ctx, label, w), w);
      if (!agree_up_to_grade(G, M, kSafeGrade)) fail(o, where + " not generated by its corner vector");
      const Subspace W = wandering_space(ctx, M, w);
      if (W.empty() || !agree_up_to_grade(generate_reducing(ctx, W.basis(), w), M, kSafeGrade)) {
        fail(o, where + " closure of wandering space differs");
      }
    }
  }
  if (o.passed) o.detail = std::to_string(count) + " canonical subspaces, 20 trials, safe grade 4";
  return o;
}

Outcome equivalence() {
  Outcome o;
  const Window w = make_window(kMaxGrade, kSafeGrade);
  std::size_t pairs = 0;
  for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {2, 4}}) {
    const Context ctx = build_context(k, l);
    for (const auto& [c1, c2] : mirrored_pairs(ctx)) {
      if (!swap_unitary_check(ctx, c1, c2, w)) fail(o, "swap check at " + shape(k, l));
    }
    const auto labels = minimal_labels(ctx);
    std::vector<Subspace> spaces;
    for (const auto& label : labels) spaces.push_back(canonical_subspace(ctx, label, w));
    const auto matrix = intertwiner_matrix(ctx, spaces, w, kTol);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      for (std::size_t j = 0; j < labels.size(); ++j) {
        ++pairs;
        bool equivalent = i == j;
        if (i != j && labels[i].kind == SubspaceKind::L && labels[j].kind == SubspaceKind::L) {
          const auto p = partner_cell(ctx, ctx.cell(labels[i].a, labels[i].b));
          equivalent = p && p->a == labels[j].a && p->b == labels[j].b;
        }
        const NullityResult& r = matrix[i][j];
        if (r.nullity != (equivalent ? 1U : 0U) || !(r.gap_ratio >= kGap)) {
          fail(o, to_string(labels[i]) + " -> " + to_string(labels[j]) + " at " + shape(k, l) +
                      " measured " + std::to_string(r.nullity));
        }
      }
    }
  }
  if (o.passed) o.detail = std::to_string(pairs) + " ordered pairs, N=8";
  return o;
}

Outcome wandering() {
  Outcome o;
  const Window w = make_window(kMaxGrade, kSafeGrade);
  for (auto [k, l] : shapes(3)) {
    const Context ctx = build_context(k, l);
    for (const SubspaceLabel& label : minimal_labels(ctx)) {
      const Subspace W = wandering_space(ctx, canonical_subspace(ctx, label, w), w);
      const std::vector<SparseVector> want{wandering_generator(ctx, label, w)};
      if (W.dimension() != 1 || !same_span(W.basis(), want)) {
        fail(o, "wandering space of " + to_string(label) + " at " + shape(k, l));
      }
    }
    for (const Cell& c : ctx.cells()) {
      for (int r = 1; r <= 5; ++r) {
        if (!grading_step_holds(ctx, c.a, c.b, r, w)) fail(o, "grading step at " + shape(k, l));
      }
    }
  }
  if (o.passed) o.detail = "9 shapes, exact spans, grading steps r=1..5";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "structure counts", 1.0, structure_counts},
      {2, "commutant dimension", 300.0, commutant},
      {3, "lemma suite", 60.0, lemmas},
      {4, "eigenvalue and commutator consistency", 60.0, eigen_consistency},
      {5, "minimality and generation", 120.0, minimality},
      {6, "equivalence classification", 120.0, equivalence},
      {7, "wandering spaces and grading", 120.0, wandering},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) {
      o.passed = false;
      o.detail += " (over the time budget)";
    }
    all = all && o.passed;
    std::printf("criterion %d %s: %s  [%s; %.2fs of %.0fs]\n", c.id, c.name, o.passed ? "PASS" : "FAIL",
                o.detail.c_str(), secs, c.budget_seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
