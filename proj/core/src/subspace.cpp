#include "bidisk/subspace.hpp"

#include "bidisk/spectral.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>

namespace bidisk {

const char* to_string(SubspaceKind kind) {
  switch (kind) {
    case SubspaceKind::L: return "L";
    case SubspaceKind::Mplus: return "Mplus";
    case SubspaceKind::Mminus: return "Mminus";
    case SubspaceKind::Er: return "Er";
    case SubspaceKind::Generated: return "Generated";
  }
  return "?";
}

std::string to_string(const SubspaceLabel& label) {
  std::string out = to_string(label.kind);
  if (label.kind == SubspaceKind::Generated) return out;
  out += "(" + std::to_string(label.a) + "," + std::to_string(label.b);
  if (label.kind == SubspaceKind::Er) out += "," + std::to_string(label.r);
  return out + ")";
}

Subspace::Subspace(std::vector<SparseVector> orthogonal_basis, Window window,
                   std::optional<SubspaceLabel> label)
    : basis_(std::move(orthogonal_basis)), window_(window), label_(label) {
  norms_.reserve(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].is_zero()) throw std::invalid_argument("subspace basis holds a zero vector");
    for (std::size_t j = 0; j < i; ++j) {
      if (sgn(inner_product(basis_[i], basis_[j])) != 0) {
        throw std::invalid_argument("subspace basis is not orthogonal");
      }
    }
    norms_.push_back(inner_product(basis_[i], basis_[i]));
  }
}

Subspace Subspace::spanned_by(std::span<const SparseVector> vectors, Window window,
                              std::optional<SubspaceLabel> label) {
  return Subspace(orthogonalize(vectors), window, label);
}

bool Subspace::graded() const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [](const SparseVector& v) { return v.homogeneous_grade().has_value(); });
}

SparseVector Subspace::project(const SparseVector& f) const {
  SparseVector out(f.window());
  for (std::size_t q = 0; q < basis_.size(); ++q) {
    const Rational ip = inner_product(f, basis_[q]);
    if (sgn(ip) != 0) out += basis_[q] * (ip / norms_[q]);
  }
  return out;
}

EchelonSpan Subspace::echelon() const {
  EchelonSpan span(window_);
  for (const SparseVector& v : basis_) span.insert(v);
  return span;
}

Subspace canonical_subspace(const Context& ctx, const SubspaceLabel& label, const Window& window) {
  const Cell& cell = ctx.cell(label.a, label.b);
  std::vector<SparseVector> basis;
  switch (label.kind) {
    case SubspaceKind::L:
      for (int g = 0; g <= window.max_grade; ++g) {
        for (const MonomialIndex& x : grade_slice(ctx, label.a, label.b, g)) {
          basis.push_back(SparseVector::monomial(x, window));
        }
      }
      break;
    case SubspaceKind::Mplus:
    case SubspaceKind::Mminus: {
      if (cell.kind != CellKind::Omega2) {
        throw std::invalid_argument(std::string(to_string(label.kind)) +
                                    " needs a cell with s == t");
      }
      const bool plus = label.kind == SubspaceKind::Mplus;
      for (int g = 0; g <= window.max_grade; ++g) {
        for (int n = g; 2 * n >= g; --n) {
          const int m = g - n;
          if (n == m && !plus) continue;
          SparseVector v = SparseVector::monomial(ctx.index(label.a, label.b, n, m), window);
          if (n != m) {
            v.add(ctx.index(label.a, label.b, m, n), plus ? Rational(1) : Rational(-1));
          }
          basis.push_back(std::move(v));
        }
      }
      break;
    }
    case SubspaceKind::Er:
      if (label.r < 0 || label.r > window.max_grade) {
        throw std::invalid_argument("Er grade outside the window");
      }
      for (const MonomialIndex& x : grade_slice(ctx, label.a, label.b, label.r)) {
        basis.push_back(SparseVector::monomial(x, window));
      }
      break;
    case SubspaceKind::Generated:
      throw std::invalid_argument("Generated is not a canonical subspace");
  }
  return Subspace(std::move(basis), window, label);
}

Closure reducing_closure(const Context& ctx, std::span<const SparseVector> generators,
                         const Window& window) {
  Closure out{EchelonSpan(window), 0};
  std::vector<SparseVector> frontier;
  for (const SparseVector& g : generators) {
    if (out.span.insert(g)) frontier.push_back(g);
  }
  if (frontier.empty()) throw std::invalid_argument("cannot generate from the zero vector");
  while (!frontier.empty()) {
    ++out.iterations;
    std::vector<SparseVector> next;
    for (const SparseVector& v : frontier) {
      for (OpTag op : {OpTag::Mp, OpTag::MpStar}) {
        SparseVector w = apply(ctx, op, v);
        if (!w.is_zero() && out.span.insert(w)) next.push_back(std::move(w));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

Subspace generate_reducing(const Context& ctx, std::span<const SparseVector> generators,
                           const Window& window) {
  Closure c = reducing_closure(ctx, generators, window);
  const std::vector<SparseVector> rows = c.span.basis();
  return Subspace::spanned_by(rows, window);
}

Subspace generate_reducing(const Context& ctx, const SparseVector& f, const Window& window) {
  return generate_reducing(ctx, std::span<const SparseVector>(&f, 1), window);
}

Subspace s_p_span(const Context& ctx, const Subspace& F, const Window& window, int word_bound) {
  if (word_bound < 0) throw std::invalid_argument("word_bound must be non-negative");
  EchelonSpan result(window);
  // layer[net] spans all words of the current length with that net degree.
  std::map<int, std::vector<SparseVector>> layer;
  layer[0] = F.basis();
  for (int len = 1; len <= word_bound; ++len) {
    std::map<int, EchelonSpan> next;
    const int remaining = word_bound - len;
    auto push = [&](int net, SparseVector w) {
      if (w.is_zero() || std::abs(net - 1) > remaining) return;
      next.try_emplace(net, window).first->second.insert(w);
    };
    for (const auto& [net, vecs] : layer) {
      for (const SparseVector& v : vecs) {
        push(net + 1, apply(ctx, OpTag::Mp, v));
        push(net - 1, apply(ctx, OpTag::MpStar, v));
      }
    }
    layer.clear();
    for (auto& [net, span] : next) {
      std::vector<SparseVector> rows = span.basis();
      if (net == 1) {
        for (const SparseVector& v : rows) result.insert(v);
      }
      layer[net] = std::move(rows);
    }
  }
  const std::vector<SparseVector> rows = result.basis();
  return Subspace::spanned_by(rows, window);
}

int default_word_bound(const Window& window) { return 2 * window.safe_grade + 1; }

Subspace wandering_space(const Context& ctx, const Subspace& M, const Window& window) {
  const Subspace S = s_p_span(ctx, M, window, default_word_bound(window));
  EchelonSpan residuals(window);
  for (const SparseVector& v : M.basis()) {
    residuals.insert(v - S.project(v));
  }
  const std::vector<SparseVector> rows = residuals.basis_up_to_grade(window.safe_grade);
  return Subspace::spanned_by(rows, window);
}

std::vector<SparseVector> restrict_to_grade(const Subspace& M, int grade) {
  return M.echelon().basis_up_to_grade(grade);
}

bool agree_up_to_grade(const Subspace& M, const Subspace& N, int grade) {
  return same_span(restrict_to_grade(M, grade), restrict_to_grade(N, grade));
}

namespace {

SparseVector random_member(const std::vector<SparseVector>& pool, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> num(-9, 8);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  SparseVector f(pool.front().window());
  for (const SparseVector& v : pool) {
    if (coin(rng) == 0) continue;
    int n = num(rng);
    if (n >= 0) ++n;  // skip zero
    Rational c(n, den(rng));
    c.canonicalize();
    f += v * c;
  }
  if (f.is_zero()) f = pool[pick(rng)];
  return f;
}

}  // namespace

MinimalityResult minimality_test(const Context& ctx, const Subspace& M, const Window& window,
                                 int trials, std::uint64_t seed) {
  if (M.empty()) throw std::invalid_argument("minimality of the zero subspace is undefined");
  const int safe = window.safe_grade;
  const EchelonSpan target = M.echelon();
  MinimalityResult out;
  out.target_dimension = target.dimension_up_to_grade(safe);

  std::vector<SparseVector> pool;
  for (const SparseVector& v : M.basis()) {
    if (v.top_grade() <= safe) pool.push_back(v);
  }
  if (pool.size() != out.target_dimension) pool = target.basis_up_to_grade(safe);
  if (pool.empty()) return out;

  auto probe = [&](const SparseVector& g) {
    if (g.is_zero()) return false;
    ++out.probes;
    const Closure c = reducing_closure(ctx, std::span<const SparseVector>(&g, 1), window);
    const std::size_t d = c.span.dimension_up_to_grade(safe);
    if (d > out.target_dimension) {
      throw std::invalid_argument("subspace is not reducing on the safe window");
    }
    if (d < out.target_dimension) {
      out.minimal = false;
      out.witness = g;
      out.witness_dimension = d;
      return true;
    }
    return false;
  };

  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    const SparseVector f = random_member(pool, rng);
    if (probe(f)) return out;
    if (t != 0) continue;
    std::map<Rational, SparseVector> components;
    for (const auto& [x, c] : f.terms()) {
      components.try_emplace(lambda_of(ctx, x), f.window()).first->second.add(x, c);
    }
    if (components.size() < 2) continue;
    for (const auto& [lam, g] : components) {
      if (probe(g)) return out;
    }
  }
  return out;
}

bool is_minimal(const Context& ctx, const Subspace& M, const Window& window, int trials,
                std::uint64_t seed) {
  return minimality_test(ctx, M, window, trials, seed).minimal;
}

bool projection_commutes(const Context& ctx, const Subspace& M, const Window& window) {
  for (const MonomialIndex& x : window_basis(ctx, make_window(window.safe_grade))) {
    const SparseVector e = SparseVector::monomial(x, window);
    const SparseVector Pe = M.project(e);
    for (OpTag op : {OpTag::Mp, OpTag::MpStar}) {
      if (!(M.project(apply(ctx, op, e)) == apply(ctx, op, Pe))) return false;
    }
  }
  return true;
}

bool grading_step_holds(const Context& ctx, int a, int b, int r, const Window& window) {
  if (r < 0 || r + 1 > window.max_grade) {
    throw std::invalid_argument("grading step needs r + 1 <= max_grade");
  }
  EchelonSpan image(window);
  for (const MonomialIndex& x : grade_slice(ctx, a, b, r)) {
    const SparseVector up = apply(ctx, OpTag::Mp, SparseVector::monomial(x, window));
    image.insert(up);
    image.insert(apply(ctx, OpTag::T, up));
  }
  const std::vector<MonomialIndex> slice = grade_slice(ctx, a, b, r + 1);
  if (image.dimension() != slice.size()) return false;
  return std::all_of(slice.begin(), slice.end(), [&](const MonomialIndex& x) {
    return image.contains(SparseVector::monomial(x, window));
  });
}

SparseVector wandering_generator(const Context& ctx, const SubspaceLabel& label,
                                 const Window& window) {
  switch (label.kind) {
    case SubspaceKind::L:
    case SubspaceKind::Mplus:
      return SparseVector::monomial(ctx.index(label.a, label.b, 0, 0), window);
    case SubspaceKind::Mminus: {
      SparseVector v = SparseVector::monomial(ctx.index(label.a, label.b, 1, 0), window);
      v.add(ctx.index(label.a, label.b, 0, 1), Rational(-1));
      return v;
    }
    default:
      throw std::invalid_argument("no wandering generator for " + to_string(label));
  }
}

std::vector<SubspaceLabel> minimal_labels(const Context& ctx) {
  std::vector<SubspaceLabel> out;
  for (const Cell& c : ctx.cells()) {
    if (c.kind == CellKind::Omega2) {
      out.push_back({SubspaceKind::Mplus, c.a, c.b, 0});
      out.push_back({SubspaceKind::Mminus, c.a, c.b, 0});
    } else {
      out.push_back({SubspaceKind::L, c.a, c.b, 0});
    }
  }
  return out;
}

}  // namespace bidisk
