#pragma once

// Numeric dimension of intertwiner spaces and of the commutant of the
// compressed Mp.
//
// With A the normalized matrix of Mp on a window, the unknown X solves
// XA = AX and XA^T = A^T X. Compression breaks these identities only at the
// top grade, and it does so in a specific way: each cell acquires a top-grade
// vector killed by both A and A^T, a spurious one-dimensional
// subrepresentation. Its projection solves the compressed system although it
// has no counterpart in the untruncated operator. The system is therefore
// solved on the complement of that joint kernel: X must vanish on it and map
// into its orthogonal complement. The remaining solution count is stable in
// the window size.
//
// A and X respect grades, so the unknowns split by grade difference and each
// block is solved by its own SVD.

#include "bidisk/lattice.hpp"
#include "bidisk/subspace.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace bidisk {

struct NullityResult {
  std::size_t nullity = 0;
  double max_null_sv = 0.0;  ///< largest singular value counted as null
  double min_kept_sv = 0.0;  ///< smallest singular value above tol (0 if none)
  double gap_ratio = 0.0;    ///< min_kept / max_null, infinite when max_null == 0
  bool clean_gap = false;    ///< gap_ratio >= kRequiredGap
  std::vector<double> smallest;  ///< the smallest singular values seen, ascending
  std::size_t unknowns = 0;
  std::size_t equations = 0;
};

inline constexpr double kRequiredGap = 1e4;
inline constexpr std::size_t kReportedSingularValues = 16;

/// Nullity of {Y : A2 Y = Y A1, A2^T Y = Y A1^T, Y K1 = 0, K2^T Y = 0}, where
/// Ki spans the joint kernel of Ai and Ai^T. grades1/grades2 give the grade of
/// each basis vector; A must raise grade by exactly one.
NullityResult intertwiner_nullity(const Eigen::MatrixXd& A1, const std::vector<int>& grades1,
                                  const Eigen::MatrixXd& A2, const std::vector<int>& grades2,
                                  double tol);

/// Orthonormal coordinates of M's basis in the normalized window basis, one
/// column per basis vector of M.
Eigen::MatrixXd orthonormal_frame(const Context& ctx, const Subspace& M, const Window& window);

/// Dimension of the space of intertwiners from M1 to M2. Throws
/// std::invalid_argument when either subspace is not reducing on the safe
/// window or is not graded.
NullityResult intertwiner_dimension(const Context& ctx, const Subspace& M1, const Subspace& M2,
                                    const Window& window, double tol);

/// intertwiner_dimension for every ordered pair of the given subspaces, with
/// the operator matrix and frames computed once. Entry [i][j] maps
/// subspaces[i] into subspaces[j].
std::vector<std::vector<NullityResult>> intertwiner_matrix(const Context& ctx,
                                                           const std::vector<Subspace>& subspaces,
                                                           const Window& window, double tol);

/// Dimension of the commutant, summed over ordered pairs of cells. Throws
/// std::invalid_argument when window.max_grade < 4.
NullityResult commutant_dimension(const Context& ctx, const Window& window, double tol);

}  // namespace bidisk
