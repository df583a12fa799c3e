#pragma once

// Inventory of the minimal reducing subspaces of Mp and the shape of the
// commutant algebra they determine.
//
// Two distinct minimal subspaces are unitarily equivalent exactly when they
// are L(a,b) and L(a',b') on mirrored cells (s' = t, t' = s). Each such pair
// contributes a 2x2 matrix block to the commutant, every other minimal
// subspace a scalar block.

#include "bidisk/lattice.hpp"
#include "bidisk/subspace.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace bidisk {

struct MinimalEntry {
  SubspaceLabel label;
  std::optional<Cell> paired_with;  ///< mirrored partner for L kinds
};

struct StructureReport {
  int k = 0;
  int l = 0;
  int delta = 0;
  std::vector<MinimalEntry> minimal_subspaces;
  std::vector<std::pair<Cell, Cell>> pairs;
  int m = 0;        ///< number of 2x2 blocks
  int m_prime = 0;  ///< number of scalar blocks
  int dim_predicted = 0;
  std::optional<int> dim_measured;
  int minimal_count = 0;
  bool abelian = false;
};

/// Enumerates the minimal subspaces from the cell grid and fills the block
/// counts. The counts are derived from the enumeration, not from closed forms,
/// so tests can hold them against (delta^2 - delta)/2 and kl - delta^2 + 2delta.
StructureReport structure_report(const Context& ctx);

/// Exact check that the index swap (n, m) on cell1 -> (m, n) on cell2
/// intertwines Mp and Mp* on normalized basis vectors of grade <= safe_grade.
/// Normalized coefficients are square roots of rationals; they are compared
/// through their signs and exact squares. Throws std::invalid_argument unless
/// cell1 and cell2 are distinct mirrored cells.
bool swap_unitary_check(const Context& ctx, const Cell& cell1, const Cell& cell2,
                        const Window& window);

}  // namespace bidisk
