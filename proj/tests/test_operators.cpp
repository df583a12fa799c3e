#include "bidisk/operators.hpp"
#include "bidisk/spectral.hpp"

#include "support/gen.hpp"
#include "support/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace bidisk;

namespace {

SparseVector poly(const Context& ctx, const Window& w,
                  std::initializer_list<std::tuple<int, int, Rational>> terms) {
  SparseVector f(w);
  for (const auto& [i, j, c] : terms) f.add(ctx.locate(i, j), c);
  return f;
}

oracle::Poly to_oracle(const SparseVector& f) {
  oracle::Poly p;
  for (const auto& [x, c] : f.terms()) oracle::add(p, {x.i, x.j}, c);
  return p;
}

}  // namespace

TEST(SparseVector, ZerosAreNotStored) {
  const Context ctx = build_context(1, 1);
  SparseVector f(make_window(2));
  f.add(ctx.locate(1, 0), Rational(1, 2));
  f.add(ctx.locate(1, 0), Rational(-1, 2));
  EXPECT_TRUE(f.is_zero());
  EXPECT_EQ(f.top_grade(), -1);
}

TEST(SparseVector, RejectsIndexAboveWindow) {
  const Context ctx = build_context(1, 1);
  SparseVector f(make_window(1));
  EXPECT_THROW(f.add(ctx.locate(2, 0), 1), std::out_of_range);
}

TEST(Apply, MpOnOne) {
  const Context ctx = build_context(1, 1);
  const Window w = make_window(3);
  EXPECT_EQ(apply(ctx, OpTag::Mp, poly(ctx, w, {{0, 0, 1}})), poly(ctx, w, {{1, 0, 1}, {0, 1, 1}}));
}

TEST(Apply, MpStarOnZW) {
  const Context ctx = build_context(1, 1);
  const Window w = make_window(3);
  EXPECT_EQ(apply(ctx, OpTag::MpStar, poly(ctx, w, {{1, 1, 1}})),
            poly(ctx, w, {{0, 1, Rational(1, 2)}, {1, 0, Rational(1, 2)}}));
}

TEST(Apply, TOnOne) {
  const Context ctx = build_context(1, 1);
  const Window w = make_window(3);
  EXPECT_EQ(apply(ctx, OpTag::T, poly(ctx, w, {{0, 0, 1}})), poly(ctx, w, {{0, 0, 1}}));
}

TEST(Apply, TOnZInTwoByTwo) {
  const Context ctx = build_context(2, 2);
  const Window w = make_window(3);
  EXPECT_EQ(apply(ctx, OpTag::T, poly(ctx, w, {{1, 0, 1}})), poly(ctx, w, {{1, 0, Rational(5, 6)}}));
}

TEST(Apply, RaisingDropsWhatLeavesTheWindow) {
  const Context ctx = build_context(1, 1);
  const Window w = make_window(1);
  EXPECT_TRUE(apply(ctx, OpTag::Mp, poly(ctx, w, {{1, 0, 1}})).is_zero());
}

TEST(Apply, ForeignIndexRejected) {
  const Context c22 = build_context(2, 2);
  const Context c11 = build_context(1, 1);
  const Window w = make_window(3);
  const SparseVector f = SparseVector::monomial(c22.index(1, 1, 0, 0), w);
  EXPECT_THROW(apply(c11, OpTag::Mp, f), std::invalid_argument);
}

TEST(InnerProduct, Examples) {
  const Context ctx = build_context(1, 1);
  const Window w = make_window(3);
  const auto z = poly(ctx, w, {{1, 0, 1}});
  const auto zw = poly(ctx, w, {{1, 1, 1}});
  const auto one = poly(ctx, w, {{0, 0, 1}});
  EXPECT_EQ(inner_product(z, z), Rational(1, 2));
  EXPECT_EQ(inner_product(zw, zw), Rational(1, 4));
  EXPECT_EQ(inner_product(one, z), 0);
}

TEST(MatrixNormalized, Entries) {
  const Context ctx = build_context(1, 1);
  const Window w = make_window(1);
  const Eigen::MatrixXd A = matrix_normalized(ctx, OpTag::Mp, w);
  // basis order: 1, z, w
  EXPECT_NEAR(A(1, 0), 0.70710678, 1e-8);
  EXPECT_NEAR(A(2, 0), 0.70710678, 1e-8);
  const Eigen::MatrixXd T = matrix_normalized(build_context(1, 1), OpTag::T, make_window(2));
  EXPECT_DOUBLE_EQ(T(0, 0), 1.0);
}

TEST(MatrixNormalizedProperty, AdjointIsTransposeAndTIsDiagonal) {
  for (auto [k, l] : gen::shapes(3, 3)) {
    const Context ctx = build_context(k, l);
    const Window w = make_window(4);
    const auto basis = window_basis(ctx, w);
    const Eigen::MatrixXd A = matrix_normalized(ctx, OpTag::Mp, w);
    const Eigen::MatrixXd As = matrix_normalized(ctx, OpTag::MpStar, w);
    EXPECT_EQ((As - A.transpose()).cwiseAbs().maxCoeff(), 0.0);
    const Eigen::MatrixXd T = matrix_normalized(ctx, OpTag::T, w);
    for (Eigen::Index r = 0; r < T.rows(); ++r) {
      for (Eigen::Index c = 0; c < T.cols(); ++c) {
        const double want =
            r == c ? to_double(lambda_of(ctx, basis[static_cast<std::size_t>(r)])) : 0.0;
        EXPECT_NEAR(T(r, c), want, 1e-14);
      }
    }
  }
}

// The library composes Mp from the cell formula; the oracle composes k single
// shifts in raw exponents. They must agree wherever truncation is not involved.
TEST(ApplyProperty, AgreesWithShiftOracle) {
  gen::Rng rng(2024);
  for (auto [k, l] : gen::shapes(4, 4)) {
    const Context ctx = build_context(k, l);
    const Window w = make_window(6);
    for (int trial = 0; trial < 20; ++trial) {
      const SparseVector f = gen::sparse_vector(rng, ctx, w, 4, 5);
      const oracle::Poly p = to_oracle(f);
      EXPECT_EQ(to_oracle(apply(ctx, OpTag::Mp, f)), oracle::mp(p, k, l, false));
      EXPECT_EQ(to_oracle(apply(ctx, OpTag::MpStar, f)), oracle::mp(p, k, l, true));
    }
  }
}

TEST(ApplyProperty, AdjointIdentity) {
  gen::Rng rng(7);
  for (auto [k, l] : gen::shapes(3, 3)) {
    const Context ctx = build_context(k, l);
    const Window w = make_window(7);
    for (int trial = 0; trial < 25; ++trial) {
      const SparseVector f = gen::sparse_vector(rng, ctx, w, 5, 6);
      const SparseVector g = gen::sparse_vector(rng, ctx, w, 5, 6);
      EXPECT_EQ(inner_product(apply(ctx, OpTag::Mp, f), g),
                inner_product(f, apply(ctx, OpTag::MpStar, g)));
    }
  }
}

TEST(ApplyProperty, InnerProductMatchesOracle) {
  gen::Rng rng(99);
  const Context ctx = build_context(2, 3);
  const Window w = make_window(5);
  for (int trial = 0; trial < 40; ++trial) {
    const SparseVector f = gen::sparse_vector(rng, ctx, w, 6, 5);
    const SparseVector g = gen::sparse_vector(rng, ctx, w, 6, 5);
    EXPECT_EQ(inner_product(f, g), oracle::inner(to_oracle(f), to_oracle(g)));
    EXPECT_EQ(inner_product(f, g), inner_product(g, f));
  }
}

TEST(ApplyProperty, CommutatorEqualsTBelowTheTop) {
  for (auto [k, l] : gen::shapes(4, 4)) {
    const Context ctx = build_context(k, l);
    const Window w = make_window(6);
    for (const MonomialIndex& x : window_basis(ctx, make_window(4))) {
      const SparseVector e = SparseVector::monomial(x, w);
      const SparseVector lhs = apply(ctx, OpTag::MpStar, apply(ctx, OpTag::Mp, e)) -
                               apply(ctx, OpTag::Mp, apply(ctx, OpTag::MpStar, e));
      EXPECT_EQ(lhs, apply(ctx, OpTag::T, e));
    }
  }
}

TEST(ApplyProperty, MonomialNormMatchesIntegral) {
  const Context ctx = build_context(3, 2);
  for (const MonomialIndex& x : window_basis(ctx, make_window(5))) {
    EXPECT_EQ(monomial_norm2(x), oracle::norm2(x.i, x.j));
  }
}

// Mp*^(n+m) z^(a+nk) w^(b+ml) = C(n+m, n) st / ((s+n)(t+m)) z^a w^b.
TEST(ApplyProperty, RepeatedAdjointCollapsesToCorner) {
  for (auto [k, l] : gen::shapes(3, 3)) {
    const Context ctx = build_context(k, l);
    const Window w = make_window(8);
    for (const Cell& c : ctx.cells()) {
      for (int n = 0; n <= 4; ++n) {
        for (int m = 0; m <= 4; ++m) {
          SparseVector f = SparseVector::monomial(ctx.index(c.a, c.b, n, m), w);
          for (int r = 0; r < n + m; ++r) f = apply(ctx, OpTag::MpStar, f);
          Rational want = Rational(oracle::binomial(n + m, n)) * c.s * c.t / ((c.s + n) * (c.t + m));
          want.canonicalize();
          EXPECT_EQ(f, SparseVector::monomial(ctx.index(c.a, c.b, 0, 0), w, want));
        }
      }
    }
  }
}
