#pragma once

// Truncated reducing subspaces of Mp: the cell spaces L(a,b), their symmetric
// and antisymmetric halves on s == t cells, graded slices, and subspaces
// generated by closure under Mp and Mp*.
//
// Every computation runs inside a Window of max grade N. Raising operators
// drop what leaves the window, so results are only asserted on grades up to
// window.safe_grade. Words of length L starting at grade g can feel the
// boundary only when g + (L+1)/2 > N, hence N >= 2*safe keeps the default
// word bound 2*safe+1 clear of it.

#include "bidisk/lattice.hpp"
#include "bidisk/operators.hpp"
#include "bidisk/span.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bidisk {

enum class SubspaceKind { L, Mplus, Mminus, Er, Generated };

struct SubspaceLabel {
  SubspaceKind kind = SubspaceKind::Generated;
  int a = 0;
  int b = 0;
  int r = 0;  ///< grade, only for Er

  bool operator==(const SubspaceLabel&) const = default;
};

std::string to_string(const SubspaceLabel& label);
const char* to_string(SubspaceKind kind);

/// Span of pairwise orthogonal, nonzero sparse vectors.
class Subspace {
 public:
  Subspace() = default;
  /// Throws std::invalid_argument when the vectors are not pairwise orthogonal
  /// or one of them is zero.
  Subspace(std::vector<SparseVector> orthogonal_basis, Window window,
           std::optional<SubspaceLabel> label = std::nullopt);

  /// Orthogonalizes an arbitrary spanning set.
  static Subspace spanned_by(std::span<const SparseVector> vectors, Window window,
                             std::optional<SubspaceLabel> label = std::nullopt);

  const std::vector<SparseVector>& basis() const { return basis_; }
  const Window& window() const { return window_; }
  const std::optional<SubspaceLabel>& label() const { return label_; }
  std::size_t dimension() const { return basis_.size(); }
  bool empty() const { return basis_.empty(); }
  /// Every basis vector is homogeneous in grade.
  bool graded() const;

  /// Orthogonal projection of f onto the span.
  SparseVector project(const SparseVector& f) const;
  EchelonSpan echelon() const;

 private:
  std::vector<SparseVector> basis_;
  std::vector<Rational> norms_;
  Window window_{};
  std::optional<SubspaceLabel> label_;
};

/// L(a,b), Mplus(a,b), Mminus(a,b) or Er(a,b,r) truncated to the window.
/// Throws std::invalid_argument for Mplus/Mminus on a cell with s != t, for Er
/// above the window, and for the Generated kind.
Subspace canonical_subspace(const Context& ctx, const SubspaceLabel& label, const Window& window);

/// Smallest subspace of the window containing f that is closed under the
/// compressed Mp and Mp*. Throws std::invalid_argument when f is zero.
Subspace generate_reducing(const Context& ctx, const SparseVector& f, const Window& window);
/// Same, for the subspace generated by several vectors.
Subspace generate_reducing(const Context& ctx, std::span<const SparseVector> generators,
                           const Window& window);

struct Closure {
  EchelonSpan span;
  int iterations = 0;
};
/// Closure as an echelon span, without orthogonalization.
Closure reducing_closure(const Context& ctx, std::span<const SparseVector> generators,
                         const Window& window);

/// Span of every word in Mp, Mp* of length <= word_bound whose raising count
/// exceeds its lowering count by one, applied to F.
Subspace s_p_span(const Context& ctx, const Subspace& F, const Window& window, int word_bound);

/// The word bound used for wandering spaces: 2*safe_grade + 1.
int default_word_bound(const Window& window);

/// M minus the closed span of its net-degree-one words, restricted to grades
/// <= window.safe_grade.
Subspace wandering_space(const Context& ctx, const Subspace& M, const Window& window);

struct MinimalityResult {
  bool minimal = true;
  std::optional<SparseVector> witness;  ///< generates a strictly smaller subspace
  std::size_t witness_dimension = 0;    ///< safe-window dimension of [witness]
  std::size_t target_dimension = 0;     ///< safe-window dimension of M
  std::size_t probes = 0;
};

/// Randomized minimality test. Each trial draws a nonzero rational vector f
/// from M (support in the safe window) and compares [f] with M on the safe
/// window. The first trial also probes every T-eigencomponent of f, since
/// [f] contains each of them. A smaller closure is a conclusive witness; a
/// positive answer is evidence only. Throws std::invalid_argument for an
/// empty M.
MinimalityResult minimality_test(const Context& ctx, const Subspace& M, const Window& window,
                                 int trials = 20, std::uint64_t seed = 0);
bool is_minimal(const Context& ctx, const Subspace& M, const Window& window, int trials = 20,
                std::uint64_t seed = 0);

/// True when P_M commutes with Mp and Mp* on every monomial of grade <= safe.
bool projection_commutes(const Context& ctx, const Subspace& M, const Window& window);

/// Basis of M intersected with the monomials of grade <= grade.
std::vector<SparseVector> restrict_to_grade(const Subspace& M, int grade);

/// M and N span the same space once both are cut down to grades <= grade.
bool agree_up_to_grade(const Subspace& M, const Subspace& N, int grade);

/// span(Mp E_r  u  T Mp E_r) == E_{r+1} inside cell (a, b). Requires
/// r + 1 <= window.max_grade.
bool grading_step_holds(const Context& ctx, int a, int b, int r, const Window& window);

/// Expected one-dimensional wandering space of a canonical minimal subspace:
/// z^a w^b for L and Mplus, z^a w^b (z^k - w^l) for Mminus.
SparseVector wandering_generator(const Context& ctx, const SubspaceLabel& label,
                                 const Window& window);

/// The canonical minimal reducing subspaces: L(a,b) for s != t cells and
/// Mplus(a,b), Mminus(a,b) for s == t cells, in cell order.
std::vector<SubspaceLabel> minimal_labels(const Context& ctx);

}  // namespace bidisk
