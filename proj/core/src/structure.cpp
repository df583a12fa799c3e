#include "bidisk/structure.hpp"

#include "bidisk/operators.hpp"

#include <map>
#include <stdexcept>

namespace bidisk {

StructureReport structure_report(const Context& ctx) {
  StructureReport out;
  out.k = ctx.k();
  out.l = ctx.l();
  out.delta = ctx.delta();
  out.pairs = mirrored_pairs(ctx);

  int scalar_blocks = 0;
  for (const SubspaceLabel& label : minimal_labels(ctx)) {
    MinimalEntry entry{label, std::nullopt};
    if (label.kind == SubspaceKind::L) {
      const Cell& cell = ctx.cell(label.a, label.b);
      entry.paired_with = partner_cell(ctx, cell);
      if (!entry.paired_with) ++scalar_blocks;
    } else {
      ++scalar_blocks;
    }
    out.minimal_subspaces.push_back(entry);
  }
  out.m = static_cast<int>(out.pairs.size());
  out.m_prime = scalar_blocks;
  out.dim_predicted = 4 * out.m + out.m_prime;
  out.minimal_count = static_cast<int>(out.minimal_subspaces.size());
  out.abelian = out.m == 0;
  return out;
}

namespace {

// Squared normalized coefficient of op from x to y, with the sign of c.
struct Entry {
  Rational square;
  int sign;
  bool operator==(const Entry&) const = default;
};

std::map<MonomialIndex, Entry> normalized_image(const Context& ctx, OpTag op,
                                                const MonomialIndex& x, const Window& window) {
  std::map<MonomialIndex, Entry> out;
  const SparseVector image = apply(ctx, op, SparseVector::monomial(x, window));
  for (const auto& [y, c] : image.terms()) {
    Rational sq = c * c * monomial_norm2(y) / monomial_norm2(x);
    sq.canonicalize();
    out.emplace(y, Entry{sq, sgn(c)});
  }
  return out;
}

}  // namespace

bool swap_unitary_check(const Context& ctx, const Cell& cell1, const Cell& cell2,
                        const Window& window) {
  if (cell1 == cell2) throw std::invalid_argument("swap check needs two distinct cells");
  const std::optional<Cell> partner = partner_cell(ctx, cell1);
  if (!partner || !(*partner == cell2)) {
    throw std::invalid_argument("cells are not mirrored partners");
  }
  auto swap = [&](const MonomialIndex& x) { return ctx.index(cell2.a, cell2.b, x.m, x.n); };

  // Grade safe+1 so that Mp* is checked on the images of Mp as well.
  const Window probe = make_window(window.safe_grade + 1);
  for (int g = 0; g <= window.safe_grade; ++g) {
    for (const MonomialIndex& x : grade_slice(ctx, cell1.a, cell1.b, g)) {
      for (OpTag op : {OpTag::Mp, OpTag::MpStar}) {
        const auto lhs = normalized_image(ctx, op, x, probe);
        const auto rhs = normalized_image(ctx, op, swap(x), probe);
        if (lhs.size() != rhs.size()) return false;
        for (const auto& [y, e] : lhs) {
          auto it = rhs.find(swap(y));
          if (it == rhs.end() || !(it->second == e)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace bidisk
