#pragma once

// Exact linear algebra over sparse rational vectors.

#include "bidisk/lattice.hpp"
#include "bidisk/operators.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace bidisk {

/// Incremental row-echelon form of a span.
///
/// Each stored row has its largest monomial in grade-major order as pivot,
/// with pivot coefficient one. Because pivots sit on the highest grade of a
/// row, the rows whose pivot grade is <= g span exactly the intersection of
/// the span with the monomials of grade <= g.
class EchelonSpan {
 public:
  EchelonSpan() = default;
  explicit EchelonSpan(Window window) : window_(window) {}

  /// Returns true when v was independent of the current rows.
  bool insert(const SparseVector& v);
  /// Residual of v after elimination against the rows.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }

  std::size_t dimension() const { return rows_.size(); }
  const Window& window() const { return window_; }

  /// Rows in ascending pivot order.
  std::vector<SparseVector> basis() const;
  /// Basis of the intersection with grades 0..grade.
  std::vector<SparseVector> basis_up_to_grade(int grade) const;
  std::size_t dimension_up_to_grade(int grade) const;

 private:
  struct PivotOrder {
    bool operator()(const MonomialIndex& x, const MonomialIndex& y) const;
  };
  static MonomialIndex pivot_of(const SparseVector& v);

  Window window_{};
  std::map<MonomialIndex, SparseVector, PivotOrder> rows_;
};

/// Gram-Schmidt under the Bergman pairing; zero residuals are dropped and each
/// output vector is rescaled to primitive integer coefficients.
std::vector<SparseVector> orthogonalize(std::span<const SparseVector> vectors);

/// Rescales v to integer coefficients with unit gcd and positive leading term.
SparseVector primitive(SparseVector v);

bool same_span(std::span<const SparseVector> lhs, std::span<const SparseVector> rhs);

}  // namespace bidisk
