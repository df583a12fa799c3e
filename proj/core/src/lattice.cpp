#include "bidisk/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace bidisk {

const char* to_string(CellKind kind) {
  return kind == CellKind::Omega2 ? "Omega2" : "Omega1";
}

Window make_window(int max_grade, int safe_grade) {
  if (max_grade < 0 || safe_grade < 0 || safe_grade > max_grade) {
    throw std::invalid_argument("window requires 0 <= safe_grade <= max_grade (got max " +
                                std::to_string(max_grade) + ", safe " +
                                std::to_string(safe_grade) + ")");
  }
  return Window{max_grade, safe_grade};
}

Window make_window(int max_grade) { return make_window(max_grade, max_grade); }

Context::Context(int k, int l) : k_(k), l_(l), delta_(std::gcd(k, l)) {
  cells_.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(l));
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < l; ++b) {
      Cell c;
      c.a = a;
      c.b = b;
      c.s = Rational(a + 1, k);
      c.s.canonicalize();
      c.t = Rational(b + 1, l);
      c.t.canonicalize();
      // s == t  <=>  l(a+1) == k(b+1)
      c.kind = (l * (a + 1) == k * (b + 1)) ? CellKind::Omega2 : CellKind::Omega1;
      cells_.push_back(std::move(c));
    }
  }
}

Context build_context(int k, int l) {
  if (k < 1 || l < 1) {
    throw std::domain_error("exponents must be positive (k = " + std::to_string(k) +
                            ", l = " + std::to_string(l) + ")");
  }
  return Context(k, l);
}

std::size_t Context::cell_index(int a, int b) const {
  if (!contains(a, b)) {
    throw std::out_of_range("cell (" + std::to_string(a) + ", " + std::to_string(b) +
                            ") is outside the " + std::to_string(k_) + "x" +
                            std::to_string(l_) + " grid");
  }
  return static_cast<std::size_t>(a) * static_cast<std::size_t>(l_) +
         static_cast<std::size_t>(b);
}

const Cell& Context::cell(int a, int b) const { return cells_[cell_index(a, b)]; }

MonomialIndex Context::index(int a, int b, int n, int m) const {
  if (!contains(a, b) || n < 0 || m < 0) {
    throw std::out_of_range("invalid monomial address (" + std::to_string(a) + ", " +
                            std::to_string(b) + ", " + std::to_string(n) + ", " +
                            std::to_string(m) + ")");
  }
  return MonomialIndex{a, b, n, m, a + n * k_, b + m * l_};
}

MonomialIndex Context::locate(int i, int j) const {
  if (i < 0 || j < 0) {
    throw std::out_of_range("negative exponent");
  }
  return index(i % k_, j % l_, i / k_, j / l_);
}

bool Context::owns(const MonomialIndex& idx) const {
  return contains(idx.a, idx.b) && idx.n >= 0 && idx.m >= 0 && idx.i == idx.a + idx.n * k_ &&
         idx.j == idx.b + idx.m * l_;
}

std::size_t Context::omega2_count() const {
  std::size_t count = 0;
  for (const Cell& c : cells_) {
    if (c.kind == CellKind::Omega2) ++count;
  }
  return count;
}

std::vector<MonomialIndex> grade_slice(const Context& ctx, int a, int b, int r) {
  std::vector<MonomialIndex> out;
  if (r < 0) return out;
  out.reserve(static_cast<std::size_t>(r) + 1);
  for (int n = r; n >= 0; --n) {
    out.push_back(ctx.index(a, b, n, r - n));
  }
  return out;
}

std::vector<MonomialIndex> window_basis(const Context& ctx, const Window& window) {
  const auto per_cell = static_cast<std::size_t>(window.max_grade + 1) *
                        static_cast<std::size_t>(window.max_grade + 2) / 2;
  std::vector<MonomialIndex> out;
  out.reserve(ctx.cells().size() * per_cell);
  for (const Cell& c : ctx.cells()) {
    for (int g = 0; g <= window.max_grade; ++g) {
      for (int n = g; n >= 0; --n) {
        out.push_back(ctx.index(c.a, c.b, n, g - n));
      }
    }
  }
  return out;
}

std::optional<Cell> partner_cell(const Context& ctx, const Cell& cell) {
  if (cell.kind == CellKind::Omega2) {
    return cell;
  }
  // s' = t  =>  a' = k(b+1)/l - 1;  t' = s  =>  b' = l(a+1)/k - 1.
  const int k = ctx.k();
  const int l = ctx.l();
  if ((k * (cell.b + 1)) % l != 0 || (l * (cell.a + 1)) % k != 0) {
    return std::nullopt;
  }
  const int a2 = k * (cell.b + 1) / l - 1;
  const int b2 = l * (cell.a + 1) / k - 1;
  if (!ctx.contains(a2, b2)) {
    return std::nullopt;
  }
  return ctx.cell(a2, b2);
}

std::vector<std::pair<Cell, Cell>> mirrored_pairs(const Context& ctx) {
  std::vector<std::pair<Cell, Cell>> out;
  for (const Cell& c : ctx.cells()) {
    auto p = partner_cell(ctx, c);
    if (!p || *p == c) continue;
    if (ctx.cell_index(c.a, c.b) < ctx.cell_index(p->a, p->b)) {
      out.emplace_back(c, *p);
    }
  }
  return out;
}

}  // namespace bidisk
