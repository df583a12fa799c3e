#pragma once

// Monomial lattice of the symbol p(z, w) = z^k + w^l.
//
// The exponent plane splits into k*l residue cells (a, b) with
// 0 <= a < k, 0 <= b < l. Inside a cell the monomial z^(a+n*k) w^(b+m*l) is
// addressed by the lattice point (n, m); its grade n + m is what p raises or
// lowers by exactly one.

#include "bidisk/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace bidisk {

enum class CellKind {
  Omega1,  ///< s != t
  Omega2,  ///< s == t
};

const char* to_string(CellKind kind);

struct Cell {
  int a = 0;
  int b = 0;
  Rational s;  ///< (a + 1) / k
  Rational t;  ///< (b + 1) / l
  CellKind kind = CellKind::Omega1;

  bool operator==(const Cell& other) const { return a == other.a && b == other.b; }
};

/// One basis monomial z^i w^j with i = a + n*k, j = b + m*l.
///
/// Ordering is the deterministic basis order used everywhere in the library:
/// cell-major (a, b), then grade ascending, then n descending.
struct MonomialIndex {
  int a = 0;
  int b = 0;
  int n = 0;
  int m = 0;
  int i = 0;  ///< absolute z exponent
  int j = 0;  ///< absolute w exponent

  int grade() const { return n + m; }
  /// Both lattice coordinates are at least one.
  bool interior() const { return n >= 1 && m >= 1; }

  std::strong_ordering operator<=>(const MonomialIndex& o) const {
    if (auto c = a <=> o.a; c != 0) return c;
    if (auto c = b <=> o.b; c != 0) return c;
    if (auto c = grade() <=> o.grade(); c != 0) return c;
    return o.n <=> n;
  }
  bool operator==(const MonomialIndex& o) const {
    return a == o.a && b == o.b && n == o.n && m == o.m;
  }
};

/// Truncation of the infinite lattice to grades 0..max_grade. Results are
/// only claimed to be exact on grades 0..safe_grade.
struct Window {
  int max_grade = 0;
  int safe_grade = 0;

  bool operator==(const Window&) const = default;
};

/// Throws std::invalid_argument unless 0 <= safe_grade <= max_grade.
Window make_window(int max_grade, int safe_grade);
/// Window whose safe region is the whole window.
Window make_window(int max_grade);

/// The problem instance for p = z^k + w^l. Immutable after construction.
class Context {
 public:
  int k() const { return k_; }
  int l() const { return l_; }
  int delta() const { return delta_; }

  /// All k*l cells in lexicographic (a, b) order.
  std::span<const Cell> cells() const { return cells_; }
  bool contains(int a, int b) const { return a >= 0 && a < k_ && b >= 0 && b < l_; }
  /// Throws std::out_of_range for (a, b) outside the cell grid.
  const Cell& cell(int a, int b) const;
  std::size_t cell_index(int a, int b) const;

  /// Address of z^(a+n*k) w^(b+m*l). Throws std::out_of_range when (a, b) is
  /// not a cell or n, m is negative.
  MonomialIndex index(int a, int b, int n, int m) const;
  /// Unique address of z^i w^j.
  MonomialIndex locate(int i, int j) const;
  /// True when idx is a well-formed address in this context.
  bool owns(const MonomialIndex& idx) const;

  std::size_t omega2_count() const;

 private:
  friend Context build_context(int k, int l);
  Context(int k, int l);

  int k_;
  int l_;
  int delta_;
  std::vector<Cell> cells_;
};

/// Throws std::domain_error when k or l is below one.
Context build_context(int k, int l);

/// All monomials of grade <= window.max_grade in basis order; the size is
/// k*l*(N+1)*(N+2)/2.
std::vector<MonomialIndex> window_basis(const Context& ctx, const Window& window);

/// Monomials of a single cell with grade exactly r (the slice E_r), n
/// descending.
std::vector<MonomialIndex> grade_slice(const Context& ctx, int a, int b, int r);

/// The mirrored cell (a', b') with s' = t and t' = s. A cell with s == t is its
/// own mirror; cells without an integral mirror have none.
std::optional<Cell> partner_cell(const Context& ctx, const Cell& cell);

/// Unordered pairs {c, c'} of distinct cells with partner_cell(c) == c'.
std::vector<std::pair<Cell, Cell>> mirrored_pairs(const Context& ctx);

}  // namespace bidisk
