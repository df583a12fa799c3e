#pragma once

#include "bidisk/lattice.hpp"
#include "bidisk/rational.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <map>
#include <optional>
#include <string>

namespace bidisk {

/// Finitely supported polynomial in a truncation window, stored as exact
/// rational coefficients on monomials. Zero coefficients are never stored.
class SparseVector {
 public:
  using Terms = std::map<MonomialIndex, Rational>;

  SparseVector() = default;
  explicit SparseVector(Window window) : window_(window) {}

  static SparseVector monomial(const MonomialIndex& idx, Window window,
                               const Rational& coeff = Rational(1));

  const Terms& terms() const { return terms_; }
  const Window& window() const { return window_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Rational coefficient(const MonomialIndex& idx) const;
  /// Adds c to the coefficient of idx. Throws std::out_of_range when idx lies
  /// above the window.
  void add(const MonomialIndex& idx, const Rational& c);
  void set(const MonomialIndex& idx, const Rational& c);

  /// Largest grade in the support (-1 for the zero vector).
  int top_grade() const;
  /// The common grade when every term has the same grade.
  std::optional<int> homogeneous_grade() const;

  SparseVector& operator+=(const SparseVector& other);
  SparseVector& operator-=(const SparseVector& other);
  SparseVector& operator*=(const Rational& c);

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(SparseVector a, const Rational& c) { return a *= c; }
  friend SparseVector operator*(const Rational& c, SparseVector a) { return a *= c; }

  /// Compares coefficients only; windows may differ.
  bool operator==(const SparseVector& other) const { return terms_ == other.terms_; }

 private:
  void absorb_window(const Window& other);

  Terms terms_;
  Window window_{};
};

/// Human-readable polynomial, e.g. "1/2*z^1w^0 + -3/1*z^0w^2".
std::string to_string(const SparseVector& f);

enum class OpTag { Mzk, MzkStar, Mwl, MwlStar, Mp, MpStar, T };

const char* to_string(OpTag op);

/// Exact action of op on f. Raising operators drop terms that would leave the
/// window; the result keeps f's window. Throws std::invalid_argument when f
/// holds an index that does not belong to ctx.
SparseVector apply(const Context& ctx, OpTag op, const SparseVector& f);

/// Weighted Bergman pairing: sum of f_x g_x / ((i+1)(j+1)) over shared
/// monomials z^i w^j.
Rational inner_product(const SparseVector& f, const SparseVector& g);

/// Squared norm of the monomial z^i w^j, i.e. 1/((i+1)(j+1)).
Rational monomial_norm2(const MonomialIndex& idx);

/// Matrix of the compressed operator in the orthonormal basis
/// sqrt((i+1)(j+1)) z^i w^j, indexed by window_basis order. Adjoint tags are
/// the transposes of their base tags.
Eigen::MatrixXd matrix_normalized(const Context& ctx, OpTag op, const Window& window);

}  // namespace bidisk
