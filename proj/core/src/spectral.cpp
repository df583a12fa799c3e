#include "bidisk/spectral.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

namespace bidisk {

Rational phi(const Rational& u, int n) {
  if (sgn(u) <= 0 || u > 1) {
    throw std::domain_error("phi requires 0 < u <= 1, got " + to_string(u));
  }
  if (n < 0) {
    throw std::domain_error("phi requires n >= 0");
  }
  Rational out;
  if (n == 0) {
    out = u / (u + 1);
  } else {
    out = 1 / ((u + n) * (u + n + 1));
  }
  out.canonicalize();
  return out;
}

Rational lambda_of(const Context& ctx, const MonomialIndex& idx) {
  const Cell& c = ctx.cell(idx.a, idx.b);
  Rational out = phi(c.s, idx.n) + phi(c.t, idx.m);
  out.canonicalize();
  return out;
}

namespace {

// All x >= 0 with phi(u, x) == r.
std::vector<int> solve_phi(const Rational& u, const Rational& r) {
  std::vector<int> out;
  if (sgn(r) <= 0) return out;
  if (r == phi(u, 0)) out.push_back(0);
  // 1/((u+x)(u+x+1)) = r  <=>  y^2 + y - 1/r = 0 with y = u + x.
  const Rational disc = 1 + 4 / r;
  Rational root;
  if (!exact_sqrt(disc, &root)) return out;
  Rational y = (root - 1) / 2;
  Rational x = y - u;
  x.canonicalize();
  if (x.get_den() == 1 && x.get_num() >= 1 && x.get_num().fits_sint_p()) {
    out.push_back(static_cast<int>(x.get_num().get_si()));
  }
  return out;
}

}  // namespace

int level_set_search_bound(const Rational& lambda) {
  if (sgn(lambda) <= 0) return 0;
  // With min(n, m) = q >= 1 both terms are below 1/(q(q+1)), so
  // q(q+1) < 2/lambda.
  const Rational limit = 2 / lambda;
  int q = 0;
  while (Rational((q + 1) * (q + 2)) <= limit) ++q;
  return q;
}

std::vector<MonomialIndex> level_set(const Context& ctx, const Rational& lambda) {
  std::set<MonomialIndex> found;
  const int bound = level_set_search_bound(lambda);
  for (const Cell& c : ctx.cells()) {
    for (int q = 0; q <= bound; ++q) {
      for (int m : solve_phi(c.t, lambda - phi(c.s, q))) {
        found.insert(ctx.index(c.a, c.b, q, m));
      }
      for (int n : solve_phi(c.s, lambda - phi(c.t, q))) {
        found.insert(ctx.index(c.a, c.b, n, q));
      }
    }
  }
  return {found.begin(), found.end()};
}

EquivalenceClass class_of(const Context& ctx, const MonomialIndex& idx) {
  EquivalenceClass out;
  out.lambda = lambda_of(ctx, idx);
  out.members = level_set(ctx, out.lambda);
  out.complete = true;
  return out;
}

std::vector<EquivalenceClass> partition_window(const Context& ctx, const Window& window) {
  std::vector<EquivalenceClass> classes;
  std::map<Rational, std::size_t> slot;
  for (const MonomialIndex& x : window_basis(ctx, window)) {
    Rational lam = lambda_of(ctx, x);
    auto [it, inserted] = slot.try_emplace(lam, classes.size());
    if (inserted) {
      EquivalenceClass cls;
      cls.lambda = lam;
      classes.push_back(std::move(cls));
    }
    classes[it->second].members.push_back(x);
  }
  for (EquivalenceClass& cls : classes) {
    cls.complete = level_set(ctx, cls.lambda).size() == cls.members.size();
  }
  return classes;
}

SparseVector spectral_project(const std::vector<EquivalenceClass>& classes,
                              const Rational& lambda, const SparseVector& f) {
  SparseVector out(f.window());
  auto it = std::find_if(classes.begin(), classes.end(),
                         [&](const EquivalenceClass& c) { return c.lambda == lambda; });
  if (it == classes.end()) return out;
  for (const MonomialIndex& x : it->members) {
    out.add(x, f.coefficient(x));
  }
  return out;
}

bool LemmaReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

namespace {

constexpr std::size_t kMaxCounterexamples = 5;

class CellRelation {
 public:
  explicit CellRelation(const Cell& cell) : cell_(cell) {}

  const Rational& lambda(int n, int m) {
    auto key = std::make_pair(n, m);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      it = cache_.emplace(key, phi(cell_.s, n) + phi(cell_.t, m)).first;
    }
    return it->second;
  }
  bool equivalent(int n, int m, int n2, int m2) { return lambda(n, m) == lambda(n2, m2); }

 private:
  const Cell& cell_;
  std::map<std::pair<int, int>, Rational> cache_;
};

LemmaCheck named_check(std::string name, std::string statement) {
  LemmaCheck check;
  check.name = std::move(name);
  check.statement = std::move(statement);
  return check;
}

void record(LemmaCheck& check, const Cell& cell, std::vector<std::pair<int, int>> points,
            std::string note) {
  check.passed = false;
  if (check.counterexamples.size() < kMaxCounterexamples) {
    check.counterexamples.push_back(Counterexample{cell.a, cell.b, std::move(points), std::move(note)});
  }
}

}  // namespace

LemmaReport lemma_suite(const Context& ctx, int range_bound) {
  if (range_bound < 2) {
    throw std::invalid_argument("lemma_suite requires range_bound >= 2");
  }
  const int B = range_bound;
  LemmaReport report;
  report.k = ctx.k();
  report.l = ctx.l();
  report.range_bound = B;

  LemmaCheck swap = named_check("diagonal_swap", "(r,0) ~ (0,r) iff s == t, r >= 1");
  LemmaCheck chain = named_check("boundary_chain",
                   "(n+1,0) ~ (n,1) implies (n,0) !~ (n-1,1) for n >= 2, and symmetrically in m");
  LemmaCheck corner = named_check("corner_vs_interior", "s == t implies (n+m,0) !~ (n,m) for n, m >= 1");
  LemmaCheck split = named_check("antidiagonal_split", "for r >= 2 the grade-r slice is not a single class");
  LemmaCheck sym = named_check("same_grade_symmetry",
                 "same grade, distinct, equivalent, both interior or both on an axis implies "
                 "s == t and (n,m) = (m',n')");

  for (const Cell& cell : ctx.cells()) {
    CellRelation rel(cell);
    const bool diagonal = cell.kind == CellKind::Omega2;

    for (int r = 1; r <= B; ++r) {
      ++swap.cases;
      if (rel.equivalent(r, 0, 0, r) != diagonal) {
        record(swap, cell, {{r, 0}, {0, r}}, diagonal ? "expected ~" : "expected !~");
      }
    }

    for (int n = 2; n + 1 <= B; ++n) {
      ++chain.cases;
      if (rel.equivalent(n + 1, 0, n, 1) && rel.equivalent(n, 0, n - 1, 1)) {
        record(chain, cell, {{n + 1, 0}, {n, 1}, {n, 0}, {n - 1, 1}}, "z-direction chain");
      }
      ++chain.cases;
      if (rel.equivalent(0, n + 1, 1, n) && rel.equivalent(0, n, 1, n - 1)) {
        record(chain, cell, {{0, n + 1}, {1, n}, {0, n}, {1, n - 1}}, "w-direction chain");
      }
    }

    if (diagonal) {
      for (int n = 1; n <= B; ++n) {
        for (int m = 1; n + m <= B; ++m) {
          ++corner.cases;
          if (rel.equivalent(n + m, 0, n, m)) {
            record(corner, cell, {{n + m, 0}, {n, m}}, "corner equivalent to interior point");
          }
        }
      }
    }

    for (int r = 2; r <= B; ++r) {
      ++split.cases;
      bool single = true;
      for (int n = r - 1; n >= 0 && single; --n) {
        single = rel.equivalent(r, 0, n, r - n);
      }
      if (single) {
        record(split, cell, {{r, 0}, {0, r}}, "whole slice in one class");
      }
    }

    for (int g = 1; g <= B; ++g) {
      for (int n = g; n >= 0; --n) {
        for (int n2 = n - 1; n2 >= 0; --n2) {
          const int m = g - n;
          const int m2 = g - n2;
          const bool in_e = n >= 1 && m >= 1;
          const bool in_e2 = n2 >= 1 && m2 >= 1;
          if (in_e != in_e2) continue;
          ++sym.cases;
          if (!rel.equivalent(n, m, n2, m2)) continue;
          if (!(diagonal && n == m2 && m == n2)) {
            record(sym, cell, {{n, m}, {n2, m2}}, "equivalent without being a mirrored pair");
          }
        }
      }
    }
  }

  report.checks = {std::move(swap), std::move(chain), std::move(corner), std::move(split),
                   std::move(sym)};
  return report;
}

}  // namespace bidisk
