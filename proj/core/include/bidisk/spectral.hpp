#pragma once

// Eigenvalues of the self-commutator T = Mp* Mp - Mp Mp*, which is diagonal on
// monomials, and the equivalence "same T-eigenvalue" on cells x lattice.

#include "bidisk/lattice.hpp"
#include "bidisk/operators.hpp"
#include "bidisk/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace bidisk {

/// 1/((u+n)(u+n+1)) for n >= 1 and u/(u+1) for n == 0. Throws
/// std::domain_error unless 0 < u <= 1 and n >= 0.
Rational phi(const Rational& u, int n);

/// T-eigenvalue phi(s, n) + phi(t, m) of a monomial.
Rational lambda_of(const Context& ctx, const MonomialIndex& idx);

struct EquivalenceClass {
  Rational lambda;
  std::vector<MonomialIndex> members;  ///< distinct, basis order
  bool complete = false;               ///< members is the whole level set
};

/// Every monomial of every cell whose eigenvalue equals lambda. The level set
/// is finite; it is enumerated by fixing the smaller lattice coordinate and
/// solving for the other one exactly.
std::vector<MonomialIndex> level_set(const Context& ctx, const Rational& lambda);

/// Largest value the smaller coordinate min(n, m) can take on the level set
/// of lambda, over all cells.
int level_set_search_bound(const Rational& lambda);

/// The complete global class of idx.
EquivalenceClass class_of(const Context& ctx, const MonomialIndex& idx);

/// Window basis grouped by exact eigenvalue. Classes appear in order of their
/// first member; `complete` is set when the window holds the whole level set.
std::vector<EquivalenceClass> partition_window(const Context& ctx, const Window& window);

/// Keeps the coefficients of f on members of the class with eigenvalue
/// lambda; zero when no listed class has that eigenvalue.
SparseVector spectral_project(const std::vector<EquivalenceClass>& classes,
                              const Rational& lambda, const SparseVector& f);

struct Counterexample {
  int a = 0;
  int b = 0;
  std::vector<std::pair<int, int>> points;
  std::string note;
};

struct LemmaCheck {
  std::string name;
  std::string statement;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<Counterexample> counterexamples;  ///< first few only
};

struct LemmaReport {
  int k = 0;
  int l = 0;
  int range_bound = 0;
  std::vector<LemmaCheck> checks;

  bool all_passed() const;
};

/// Exhaustive exact check, over all cells and lattice coordinates up to
/// range_bound, of the combinatorial facts about the equivalence that the
/// minimality arguments rely on:
///
///   diagonal_swap        (r,0) ~ (0,r) exactly on cells with s == t
///   boundary_chain       (n+1,0) ~ (n,1) forces (n,0) !~ (n-1,1), n >= 2,
///                        and the mirrored statement in m
///   corner_vs_interior   on s == t cells, (n+m,0) !~ (n,m) for n, m >= 1
///   antidiagonal_split   for r >= 2 the grade-r slice is never one class
///   same_grade_symmetry  distinct same-grade equivalent points that are both
///                        interior or both on the axes force s == t and
///                        (n,m) = (m',n')
///
/// Throws std::invalid_argument when range_bound < 2.
LemmaReport lemma_suite(const Context& ctx, int range_bound);

}  // namespace bidisk
