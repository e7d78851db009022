#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "swlab/gl_group.hpp"
#include "swlab/linalg.hpp"
#include "test_util.hpp"

using namespace swlab;

namespace {
std::vector<oracle::Row> rows_of(const Matrix<Elem>& m) {
  std::vector<oracle::Row> out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.emplace_back(m.row(i).begin(), m.row(i).end());
  return out;
}

Matrix<Elem> random_matrix(const Ring& k, std::size_t r, std::size_t c, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, k.size() - 1);
  Matrix<Elem> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = pick(rng);
  return m;
}

bool is_rref(const Matrix<Elem>& m, std::size_t rank) {
  std::size_t last = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::size_t p = 0;
    while (p < m.cols() && m(i, p) == 0) ++p;
    if (i >= rank) {
      if (p != m.cols()) return false;
      continue;
    }
    if (p == m.cols() || m(i, p) != 1 || (i > 0 && p <= last)) return false;
    for (std::size_t k = 0; k < m.rows(); ++k)
      if (k != i && m(k, p) != 0) return false;
    last = p;
  }
  return true;
}
}  // namespace

TEST(Rref, Examples) {
  Ring f2 = Ring::prime_field(2);
  auto r = rref(f2, Matrix<Elem>{{1, 1}, {1, 1}});
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
  EXPECT_EQ(rank(Ring::prime_field(5), identity_matrix(3)), 3u);
}

TEST(Rref, InvertibleMatricesOverF2SpanEnd) {
  Ring f2 = Ring::prime_field(2);
  auto gl = enumerate_gl(f2, 2);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < gl.order(); ++i) rows.push_back(gl.element(i).data());
  auto m = Matrix<Elem>::from_rows(rows, 4);
  EXPECT_EQ(rank(f2, m), 4u);
  EXPECT_EQ(oracle::rank_mod_p(rows_of(m), 2), 4u);
}

TEST(Rref, EmptyMatrices) {
  Ring f3 = Ring::prime_field(3);
  EXPECT_EQ(rank(f3, Matrix<Elem>(0, 4)), 0u);
  EXPECT_EQ(rank(f3, Matrix<Elem>(3, 0)), 0u);
  EXPECT_EQ(solve_kernel(f3, Matrix<Elem>(0, 3)).kernel.size(), 3u);
}

TEST(Rref, NotAField) {
  EXPECT_ERRC(rref(Ring::int_mod(6), identity_matrix(2)), Errc::not_a_field);
  EXPECT_ERRC(rref(Ring::integers(), Matrix<Elem>(1, 1)), Errc::not_a_field);
}

TEST(Rref, RandomAgainstOracleAndProperties) {
  std::mt19937 rng(7);
  for (const char* name : {"F2", "F3", "F7", "F4", "F9"}) {
    Ring k = Ring::parse(name);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_matrix(k, 1 + rng() % 6, 1 + rng() % 6, rng);
      auto r = rref(k, a);
      EXPECT_TRUE(is_rref(r.rref, r.rank));
      EXPECT_EQ(r.rank, r.pivots.size());
      EXPECT_EQ(rref(k, r.rref).rref, r.rref);                // idempotent
      EXPECT_EQ(rank(k, a.transpose()), r.rank);              // row rank = column rank
      if (k.kind() == RingKind::prime_field) {
        EXPECT_EQ(r.rank, oracle::rank_mod_p(rows_of(a), k.characteristic()));
      }
      // Row space preserved: stacking either onto the other adds no rank.
      std::vector<Vec> both;
      for (std::size_t i = 0; i < a.rows(); ++i) both.emplace_back(a.row(i).begin(), a.row(i).end());
      for (std::size_t i = 0; i < r.rank; ++i) both.emplace_back(r.rref.row(i).begin(), r.rref.row(i).end());
      EXPECT_EQ(rank(k, Matrix<Elem>::from_rows(both, a.cols())), r.rank);
    }
  }
}

TEST(SolveKernel, Examples) {
  Ring f3 = Ring::prime_field(3);
  auto s = solve_kernel(f3, identity_matrix(2), Vec{2, 1});
  ASSERT_TRUE(s.solution);
  EXPECT_EQ(*s.solution, (Vec{2, 1}));
  EXPECT_TRUE(s.kernel.empty());

  Ring f2 = Ring::prime_field(2);
  auto t = solve_kernel(f2, Matrix<Elem>{{1, 1}}, Vec{1});
  ASSERT_TRUE(t.solution);
  EXPECT_EQ(*t.solution, (Vec{1, 0}));
  ASSERT_EQ(t.kernel.size(), 1u);
  EXPECT_EQ(t.kernel[0], (Vec{1, 1}));
}

TEST(SolveKernel, Inconsistent) {
  Ring f5 = Ring::prime_field(5);
  auto s = solve_kernel(f5, Matrix<Elem>{{1, 2}, {2, 4}}, Vec{1, 1});
  EXPECT_FALSE(s.solution);
  EXPECT_EQ(s.kernel.size(), 1u);
  EXPECT_ERRC(solve_kernel(f5, identity_matrix(2), Vec{1}), Errc::dimension_mismatch);
}

TEST(SolveKernel, RandomSystemsAreSolvedExactly) {
  std::mt19937 rng(11);
  for (const char* name : {"F2", "F5", "F8"}) {
    Ring k = Ring::parse(name);
    for (int trial = 0; trial < 40; ++trial) {
      auto a = random_matrix(k, 1 + rng() % 5, 1 + rng() % 7, rng);
      Vec b(a.rows());
      for (auto& x : b) x = static_cast<Elem>(rng() % static_cast<unsigned>(k.size()));
      auto s = solve_kernel(k, a, b);
      EXPECT_EQ(s.kernel.size(), a.cols() - rank(k, a));
      for (const auto& v : s.kernel) EXPECT_EQ(apply(k, a, v), Vec(a.rows(), 0));
      if (s.solution) {
        EXPECT_EQ(apply(k, a, *s.solution), b);
      }
      // Consistency is decided correctly: b lies in the column space iff appending it keeps the rank.
      Matrix<Elem> ab(a.rows(), a.cols() + 1);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) ab(i, j) = a(i, j);
        ab(i, a.cols()) = b[i];
      }
      EXPECT_EQ(s.solution.has_value(), rank(k, ab) == rank(k, a));
    }
  }
}

TEST(EchelonBasis, IncrementalMatchesBatchRank) {
  Ring f3 = Ring::prime_field(3);
  std::mt19937 rng(3);
  auto a = random_matrix(f3, 12, 6, rng);
  EchelonBasis e(f3, 6);
  for (std::size_t i = 0; i < a.rows(); ++i) e.insert(Vec(a.row(i).begin(), a.row(i).end()));
  EXPECT_EQ(e.rank(), rank(f3, a));
  EXPECT_EQ(e.canonical_basis(), [&] {
    auto r = rref(f3, a);
    Matrix<Elem> m(r.rank, 6);
    for (std::size_t i = 0; i < r.rank; ++i) std::copy(r.rref.row(i).begin(), r.rref.row(i).end(), m.row(i).begin());
    return m;
  }());
  for (std::size_t i = 0; i < a.rows(); ++i) EXPECT_TRUE(e.contains(Vec(a.row(i).begin(), a.row(i).end())));
}
