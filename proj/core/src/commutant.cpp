#include "bidisk/commutant.hpp"

#include "bidisk/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace bidisk {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;

// Columns spanning ker A  n  ker A^T. A changes grade by one in each
// direction, so the stacked system splits over the grade of the column.
MatrixXd joint_kernel(const MatrixXd& A, const std::vector<int>& grades, double tol,
                      std::vector<int>* kernel_grades) {
  const Index d = A.cols();
  std::map<int, std::vector<Index>> by_grade;
  for (Index c = 0; c < d; ++c) by_grade[grades[static_cast<std::size_t>(c)]].push_back(c);

  std::vector<Eigen::VectorXd> columns;
  for (const auto& [g, cols] : by_grade) {
    const Index w = static_cast<Index>(cols.size());
    MatrixXd stacked(2 * d, w);
    for (Index q = 0; q < w; ++q) {
      stacked.col(q) << A.col(cols[static_cast<std::size_t>(q)]),
          A.row(cols[static_cast<std::size_t>(q)]).transpose();
    }
    Eigen::JacobiSVD<MatrixXd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    for (Index q = 0; q < w; ++q) {
      if (q < sv.size() && sv(q) >= tol) continue;
      Eigen::VectorXd v = Eigen::VectorXd::Zero(d);
      for (Index r = 0; r < w; ++r) v(cols[static_cast<std::size_t>(r)]) = svd.matrixV()(r, q);
      columns.push_back(std::move(v));
      kernel_grades->push_back(g);
    }
  }
  MatrixXd K(d, static_cast<Index>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) K.col(static_cast<Index>(c)) = columns[c];
  return K;
}

void merge(NullityResult& into, const NullityResult& part) {
  into.nullity += part.nullity;
  into.unknowns += part.unknowns;
  into.equations += part.equations;
  into.max_null_sv = std::max(into.max_null_sv, part.max_null_sv);
  if (part.min_kept_sv > 0.0 && (into.min_kept_sv == 0.0 || part.min_kept_sv < into.min_kept_sv)) {
    into.min_kept_sv = part.min_kept_sv;
  }
  into.smallest.insert(into.smallest.end(), part.smallest.begin(), part.smallest.end());
  std::sort(into.smallest.begin(), into.smallest.end());
  if (into.smallest.size() > kReportedSingularValues) into.smallest.resize(kReportedSingularValues);
}

void finish(NullityResult& r) {
  if (r.max_null_sv == 0.0) {
    r.gap_ratio = std::numeric_limits<double>::infinity();
  } else {
    r.gap_ratio = r.min_kept_sv / r.max_null_sv;
  }
  // With nothing kept there is no threshold to misjudge.
  if (r.min_kept_sv == 0.0) r.gap_ratio = std::numeric_limits<double>::infinity();
  r.clean_gap = r.gap_ratio >= kRequiredGap;
}

struct Group {
  std::map<std::pair<Index, Index>, Index> column;  // (i, j) -> unknown
  std::vector<Eigen::VectorXd> rows;
};

}  // namespace

NullityResult intertwiner_nullity(const MatrixXd& A1, const std::vector<int>& grades1,
                                  const MatrixXd& A2, const std::vector<int>& grades2, double tol) {
  const Index d1 = A1.rows();
  const Index d2 = A2.rows();
  if (static_cast<Index>(grades1.size()) != d1 || static_cast<Index>(grades2.size()) != d2) {
    throw std::invalid_argument("grade list does not match matrix size");
  }
  std::vector<int> kg1;
  std::vector<int> kg2;
  const MatrixXd K1 = joint_kernel(A1, grades1, tol, &kg1);
  const MatrixXd K2 = joint_kernel(A2, grades2, tol, &kg2);
  auto g1 = [&](Index j) { return grades1[static_cast<std::size_t>(j)]; };
  auto g2 = [&](Index i) { return grades2[static_cast<std::size_t>(i)]; };

  std::map<int, Group> groups;
  for (Index i = 0; i < d2; ++i) {
    for (Index j = 0; j < d1; ++j) {
      Group& grp = groups[g2(i) - g1(j)];
      grp.column.emplace(std::make_pair(i, j), static_cast<Index>(grp.column.size()));
    }
  }

  auto emit = [&](int delta, const std::vector<std::pair<std::pair<Index, Index>, double>>& terms) {
    auto it = groups.find(delta);
    if (it == groups.end()) return;
    Eigen::VectorXd row = Eigen::VectorXd::Zero(static_cast<Index>(it->second.column.size()));
    bool any = false;
    for (const auto& [ij, c] : terms) {
      if (c == 0.0) continue;
      row(it->second.column.at(ij)) += c;
      any = true;
    }
    if (any) it->second.rows.push_back(std::move(row));
  };

  std::vector<std::pair<std::pair<Index, Index>, double>> terms;
  for (Index i = 0; i < d2; ++i) {
    for (Index j = 0; j < d1; ++j) {
      // (A2 Y - Y A1)(i, j)
      terms.clear();
      for (Index p = 0; p < d2; ++p) terms.push_back({{p, j}, A2(i, p)});
      for (Index q = 0; q < d1; ++q) terms.push_back({{i, q}, -A1(q, j)});
      emit(g2(i) - 1 - g1(j), terms);
      // (A2^T Y - Y A1^T)(i, j)
      terms.clear();
      for (Index p = 0; p < d2; ++p) terms.push_back({{p, j}, A2(p, i)});
      for (Index q = 0; q < d1; ++q) terms.push_back({{i, q}, -A1(j, q)});
      emit(g2(i) + 1 - g1(j), terms);
    }
  }
  for (Index i = 0; i < d2; ++i) {
    for (Index c = 0; c < K1.cols(); ++c) {
      terms.clear();
      for (Index j = 0; j < d1; ++j) terms.push_back({{i, j}, K1(j, c)});
      emit(g2(i) - kg1[static_cast<std::size_t>(c)], terms);
    }
  }
  for (Index c = 0; c < K2.cols(); ++c) {
    for (Index j = 0; j < d1; ++j) {
      terms.clear();
      for (Index i = 0; i < d2; ++i) terms.push_back({{i, j}, K2(i, c)});
      emit(kg2[static_cast<std::size_t>(c)] - g1(j), terms);
    }
  }

  NullityResult total;
  for (auto& [delta, grp] : groups) {
    NullityResult part;
    const Index cols = static_cast<Index>(grp.column.size());
    const Index rows = static_cast<Index>(grp.rows.size());
    part.unknowns = static_cast<std::size_t>(cols);
    part.equations = static_cast<std::size_t>(rows);
    std::vector<double> sv;
    if (rows > 0) {
      MatrixXd S(rows, cols);
      for (Index r = 0; r < rows; ++r) S.row(r) = grp.rows[static_cast<std::size_t>(r)].transpose();
      Eigen::BDCSVD<MatrixXd> svd(S);
      const auto& values = svd.singularValues();
      sv.assign(values.data(), values.data() + values.size());
    }
    // A wide system has at least cols - rows free directions.
    while (static_cast<Index>(sv.size()) < cols) sv.push_back(0.0);
    for (double s : sv) {
      if (s < tol) {
        ++part.nullity;
        part.max_null_sv = std::max(part.max_null_sv, s);
      } else if (part.min_kept_sv == 0.0 || s < part.min_kept_sv) {
        part.min_kept_sv = s;
      }
    }
    std::sort(sv.begin(), sv.end());
    if (sv.size() > kReportedSingularValues) sv.resize(kReportedSingularValues);
    part.smallest = std::move(sv);
    merge(total, part);
  }
  finish(total);
  return total;
}

MatrixXd orthonormal_frame(const Context& ctx, const Subspace& M, const Window& window) {
  const auto basis = window_basis(ctx, window);
  std::map<MonomialIndex, Index> position;
  for (std::size_t p = 0; p < basis.size(); ++p) position.emplace(basis[p], static_cast<Index>(p));
  MatrixXd Q = MatrixXd::Zero(static_cast<Index>(basis.size()), static_cast<Index>(M.dimension()));
  for (std::size_t c = 0; c < M.dimension(); ++c) {
    const SparseVector& v = M.basis()[c];
    const double norm = std::sqrt(to_double(inner_product(v, v)));
    for (const auto& [x, coeff] : v.terms()) {
      Q(position.at(x), static_cast<Index>(c)) =
          to_double(coeff) * std::sqrt(to_double(monomial_norm2(x))) / norm;
    }
  }
  return Q;
}

namespace {

std::vector<int> grades_of(const Subspace& M) {
  std::vector<int> out;
  for (const SparseVector& v : M.basis()) {
    const auto g = v.homogeneous_grade();
    if (!g) throw std::invalid_argument("intertwiner computation needs a graded basis");
    out.push_back(*g);
  }
  return out;
}

}  // namespace

NullityResult intertwiner_dimension(const Context& ctx, const Subspace& M1, const Subspace& M2,
                                    const Window& window, double tol) {
  if (!projection_commutes(ctx, M1, window) || !projection_commutes(ctx, M2, window)) {
    throw std::invalid_argument("intertwiner_dimension needs reducing subspaces");
  }
  const std::vector<int> g1 = grades_of(M1);
  const std::vector<int> g2 = grades_of(M2);
  const MatrixXd A = matrix_normalized(ctx, OpTag::Mp, window);
  const MatrixXd Q1 = orthonormal_frame(ctx, M1, window);
  const MatrixXd Q2 = orthonormal_frame(ctx, M2, window);
  const MatrixXd A1 = Q1.transpose() * A * Q1;
  const MatrixXd A2 = Q2.transpose() * A * Q2;
  return intertwiner_nullity(A1, g1, A2, g2, tol);
}

std::vector<std::vector<NullityResult>> intertwiner_matrix(const Context& ctx,
                                                           const std::vector<Subspace>& subspaces,
                                                           const Window& window, double tol) {
  const MatrixXd A = matrix_normalized(ctx, OpTag::Mp, window);
  std::vector<MatrixXd> compressed;
  std::vector<std::vector<int>> grades;
  for (const Subspace& M : subspaces) {
    if (!projection_commutes(ctx, M, window)) {
      throw std::invalid_argument("intertwiner_matrix needs reducing subspaces");
    }
    grades.push_back(grades_of(M));
    const MatrixXd Q = orthonormal_frame(ctx, M, window);
    compressed.push_back(Q.transpose() * A * Q);
  }
  std::vector<std::vector<NullityResult>> out(subspaces.size());
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    for (std::size_t j = 0; j < subspaces.size(); ++j) {
      out[i].push_back(intertwiner_nullity(compressed[i], grades[i], compressed[j], grades[j], tol));
    }
  }
  return out;
}

NullityResult commutant_dimension(const Context& ctx, const Window& window, double tol) {
  if (window.max_grade < 4) throw std::invalid_argument("commutant_dimension needs max_grade >= 4");
  const auto basis = window_basis(ctx, window);
  const MatrixXd A = matrix_normalized(ctx, OpTag::Mp, window);

  struct Block {
    MatrixXd A;
    std::vector<int> grades;
  };
  std::vector<Block> blocks;
  for (const Cell& cell : ctx.cells()) {
    std::vector<Index> members;
    Block block;
    for (std::size_t p = 0; p < basis.size(); ++p) {
      if (basis[p].a == cell.a && basis[p].b == cell.b) {
        members.push_back(static_cast<Index>(p));
        block.grades.push_back(basis[p].grade());
      }
    }
    block.A = A(members, members);
    blocks.push_back(std::move(block));
  }

  NullityResult total;
  for (const Block& from : blocks) {
    for (const Block& to : blocks) {
      merge(total, intertwiner_nullity(from.A, from.grades, to.A, to.grades, tol));
    }
  }
  finish(total);
  return total;
}

}  // namespace bidisk
