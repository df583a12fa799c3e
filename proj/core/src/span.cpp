#include "bidisk/span.hpp"

#include <algorithm>

namespace bidisk {

bool EchelonSpan::PivotOrder::operator()(const MonomialIndex& x, const MonomialIndex& y) const {
  if (x.grade() != y.grade()) return x.grade() < y.grade();
  return x < y;
}

MonomialIndex EchelonSpan::pivot_of(const SparseVector& v) {
  PivotOrder less;
  auto it = std::max_element(v.terms().begin(), v.terms().end(),
                             [&](const auto& p, const auto& q) { return less(p.first, q.first); });
  return it->first;
}

SparseVector EchelonSpan::reduce(SparseVector v) const {
  // Each step clears the current pivot and only touches smaller monomials.
  while (!v.is_zero()) {
    const MonomialIndex p = pivot_of(v);
    auto it = rows_.find(p);
    if (it == rows_.end()) break;
    const Rational c = v.coefficient(p);
    v -= it->second * c;
  }
  return v;
}

bool EchelonSpan::insert(const SparseVector& v) {
  SparseVector r = reduce(v);
  if (r.is_zero()) return false;
  const MonomialIndex p = pivot_of(r);
  const Rational lead = r.coefficient(p);
  r *= Rational(1) / lead;
  rows_.emplace(p, std::move(r));
  return true;
}

std::vector<SparseVector> EchelonSpan::basis() const {
  std::vector<SparseVector> out;
  out.reserve(rows_.size());
  for (const auto& [p, row] : rows_) out.push_back(row);
  return out;
}

std::vector<SparseVector> EchelonSpan::basis_up_to_grade(int grade) const {
  std::vector<SparseVector> out;
  for (const auto& [p, row] : rows_) {
    if (p.grade() > grade) break;
    out.push_back(row);
  }
  return out;
}

std::size_t EchelonSpan::dimension_up_to_grade(int grade) const {
  std::size_t count = 0;
  for (const auto& [p, row] : rows_) {
    if (p.grade() > grade) break;
    ++count;
  }
  return count;
}

SparseVector primitive(SparseVector v) {
  if (v.is_zero()) return v;
  mpz_class den_lcm = 1;
  for (const auto& [idx, c] : v.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& [idx, c] : v.terms()) {
    mpz_class scaled = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  Rational factor(den_lcm, num_gcd);
  factor.canonicalize();
  if (sgn(v.terms().begin()->second) < 0) factor = -factor;
  v *= factor;
  return v;
}

std::vector<SparseVector> orthogonalize(std::span<const SparseVector> vectors) {
  std::vector<SparseVector> out;
  std::vector<Rational> norms;
  for (const SparseVector& v : vectors) {
    SparseVector u = v;
    for (std::size_t q = 0; q < out.size(); ++q) {
      const Rational ip = inner_product(v, out[q]);
      if (sgn(ip) != 0) u -= out[q] * (ip / norms[q]);
    }
    if (u.is_zero()) continue;
    u = primitive(std::move(u));
    norms.push_back(inner_product(u, u));
    out.push_back(std::move(u));
  }
  return out;
}

bool same_span(std::span<const SparseVector> lhs, std::span<const SparseVector> rhs) {
  EchelonSpan a;
  EchelonSpan b;
  int top = 0;
  for (const auto& v : lhs) top = std::max(top, v.top_grade());
  for (const auto& v : rhs) top = std::max(top, v.top_grade());
  a = EchelonSpan(make_window(top));
  b = EchelonSpan(make_window(top));
  for (const auto& v : lhs) a.insert(v);
  for (const auto& v : rhs) b.insert(v);
  if (a.dimension() != b.dimension()) return false;
  for (const auto& v : rhs) {
    if (!a.contains(v)) return false;
  }
  return true;
}

}  // namespace bidisk
