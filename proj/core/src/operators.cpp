#include "bidisk/operators.hpp"

#include "bidisk/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bidisk {

SparseVector SparseVector::monomial(const MonomialIndex& idx, Window window,
                                    const Rational& coeff) {
  SparseVector v(window);
  v.add(idx, coeff);
  return v;
}

Rational SparseVector::coefficient(const MonomialIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparseVector::add(const MonomialIndex& idx, const Rational& c) {
  if (sgn(c) == 0) return;
  if (idx.grade() > window_.max_grade) {
    throw std::out_of_range("monomial grade " + std::to_string(idx.grade()) +
                            " exceeds window " + std::to_string(window_.max_grade));
  }
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void SparseVector::set(const MonomialIndex& idx, const Rational& c) {
  terms_.erase(idx);
  add(idx, c);
}

int SparseVector::top_grade() const {
  int g = -1;
  for (const auto& [idx, c] : terms_) g = std::max(g, idx.grade());
  return g;
}

std::optional<int> SparseVector::homogeneous_grade() const {
  if (terms_.empty()) return std::nullopt;
  const int g = terms_.begin()->first.grade();
  for (const auto& [idx, c] : terms_) {
    if (idx.grade() != g) return std::nullopt;
  }
  return g;
}

void SparseVector::absorb_window(const Window& other) {
  if (other.max_grade > window_.max_grade) window_ = other;
}

SparseVector& SparseVector::operator+=(const SparseVector& other) {
  absorb_window(other.window_);
  for (const auto& [idx, c] : other.terms_) add(idx, c);
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& other) {
  absorb_window(other.window_);
  for (const auto& [idx, c] : other.terms_) add(idx, -c);
  return *this;
}

SparseVector& SparseVector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, v] : terms_) v *= c;
  return *this;
}

std::string to_string(const SparseVector& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [idx, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*z^" + std::to_string(idx.i) + "w^" + std::to_string(idx.j);
  }
  return out;
}

const char* to_string(OpTag op) {
  switch (op) {
    case OpTag::Mzk: return "Mzk";
    case OpTag::MzkStar: return "MzkStar";
    case OpTag::Mwl: return "Mwl";
    case OpTag::MwlStar: return "MwlStar";
    case OpTag::Mp: return "Mp";
    case OpTag::MpStar: return "MpStar";
    case OpTag::T: return "T";
  }
  return "?";
}

namespace {

// Lowering weight (u + n - 1)/(u + n) of the adjoint shift from level n.
Rational lowering_weight(const Rational& u, int n) {
  Rational num = u + (n - 1);
  Rational den = u + n;
  Rational w = num / den;
  w.canonicalize();
  return w;
}

void apply_term(const Context& ctx, OpTag op, const MonomialIndex& x, const Rational& c,
                SparseVector& out) {
  const Cell& cell = ctx.cell(x.a, x.b);
  const int N = out.window().max_grade;
  auto raise_z = [&] {
    if (x.grade() + 1 <= N) out.add(ctx.index(x.a, x.b, x.n + 1, x.m), c);
  };
  auto raise_w = [&] {
    if (x.grade() + 1 <= N) out.add(ctx.index(x.a, x.b, x.n, x.m + 1), c);
  };
  auto lower_z = [&] {
    if (x.n >= 1) out.add(ctx.index(x.a, x.b, x.n - 1, x.m), c * lowering_weight(cell.s, x.n));
  };
  auto lower_w = [&] {
    if (x.m >= 1) out.add(ctx.index(x.a, x.b, x.n, x.m - 1), c * lowering_weight(cell.t, x.m));
  };
  switch (op) {
    case OpTag::Mzk: raise_z(); break;
    case OpTag::Mwl: raise_w(); break;
    case OpTag::MzkStar: lower_z(); break;
    case OpTag::MwlStar: lower_w(); break;
    case OpTag::Mp:
      raise_z();
      raise_w();
      break;
    case OpTag::MpStar:
      lower_z();
      lower_w();
      break;
    case OpTag::T: out.add(x, c * lambda_of(ctx, x)); break;
  }
}

}  // namespace

SparseVector apply(const Context& ctx, OpTag op, const SparseVector& f) {
  SparseVector out(f.window());
  for (const auto& [x, c] : f.terms()) {
    if (!ctx.owns(x)) {
      throw std::invalid_argument("monomial z^" + std::to_string(x.i) + "w^" +
                                  std::to_string(x.j) + " does not belong to this context");
    }
    apply_term(ctx, op, x, c, out);
  }
  return out;
}

Rational monomial_norm2(const MonomialIndex& idx) {
  Rational r(1, static_cast<long>(idx.i + 1) * static_cast<long>(idx.j + 1));
  r.canonicalize();
  return r;
}

Rational inner_product(const SparseVector& f, const SparseVector& g) {
  Rational sum(0);
  const auto& small = f.size() <= g.size() ? f.terms() : g.terms();
  const auto& large = f.size() <= g.size() ? g.terms() : f.terms();
  for (const auto& [idx, c] : small) {
    auto it = large.find(idx);
    if (it != large.end()) sum += c * it->second * monomial_norm2(idx);
  }
  return sum;
}

Eigen::MatrixXd matrix_normalized(const Context& ctx, OpTag op, const Window& window) {
  const auto basis = window_basis(ctx, window);
  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);

  OpTag base = op;
  bool transpose = false;
  if (op == OpTag::MzkStar) { base = OpTag::Mzk; transpose = true; }
  if (op == OpTag::MwlStar) { base = OpTag::Mwl; transpose = true; }
  if (op == OpTag::MpStar) { base = OpTag::Mp; transpose = true; }

  std::map<MonomialIndex, Eigen::Index> position;
  for (Eigen::Index p = 0; p < dim; ++p) position.emplace(basis[static_cast<std::size_t>(p)], p);

  // A monomial coefficient c from x to y becomes c * ||y|| / ||x|| in the
  // orthonormal basis.
  for (Eigen::Index col = 0; col < dim; ++col) {
    const MonomialIndex& x = basis[static_cast<std::size_t>(col)];
    const SparseVector image = apply(ctx, base, SparseVector::monomial(x, window));
    for (const auto& [y, c] : image.terms()) {
      const Rational ratio = monomial_norm2(y) / monomial_norm2(x);
      mat(position.at(y), col) = c.get_d() * std::sqrt(ratio.get_d());
    }
  }
  if (transpose) mat.transposeInPlace();
  return mat;
}

}  // namespace bidisk
