#pragma once

// Finite-dimensional algebras over finite fields given by structure
// constants: center, Jacobson radical, central idempotents and blocks.
// Everything here is enumeration-based and meant for small dimensions.

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "swlab/gl_group.hpp"
#include "swlab/linalg.hpp"
#include "swlab/schur_algebra.hpp"

namespace swlab {

using SparseVec = std::vector<std::pair<std::uint32_t, Elem>>;

class FDAlgebra {
 public:
  /// products[a * dim + b] holds the nonzero coordinates of b_a * b_b.
  FDAlgebra(Ring ring, std::size_t dim, std::vector<SparseVec> products, Vec unit)
      : ring_(std::move(ring)), dim_(dim), products_(std::move(products)), unit_(std::move(unit)) {
    detail::require_field(ring_);
    if (products_.size() != dim_ * dim_ || unit_.size() != dim_)
      fail(Errc::dimension_mismatch, "structure constants must cover dim x dim pairs");
  }

  const Ring& ring() const { return ring_; }
  std::size_t dim() const { return dim_; }
  const Vec& unit() const { return unit_; }
  const SparseVec& product(std::size_t a, std::size_t b) const { return products_[a * dim_ + b]; }

  Vec basis(std::size_t a) const {
    Vec v(dim_, 0);
    v[a] = ring_.one();
    return v;
  }

  Vec mult(const Vec& x, const Vec& y) const {
    Vec out(dim_, 0);
    for (std::size_t a = 0; a < dim_; ++a) {
      if (x[a] == 0) continue;
      for (std::size_t b = 0; b < dim_; ++b) {
        if (y[b] == 0) continue;
        Elem f = ring_.mul(x[a], y[b]);
        for (auto [c, v] : product(a, b)) out[c] = ring_.add(out[c], ring_.mul(f, v));
      }
    }
    return out;
  }

  bool is_commutative() const {
    for (std::size_t a = 0; a < dim_; ++a)
      for (std::size_t b = a + 1; b < dim_; ++b)
        if (product(a, b) != product(b, a)) return false;
    return true;
  }

 private:
  Ring ring_;
  std::size_t dim_;
  std::vector<SparseVec> products_;
  Vec unit_;
};

namespace detail {
inline SparseVec sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  return out;
}

inline bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](Elem x) { return x == 0; });
}
}  // namespace detail

inline Vec add_vec(const Ring& ring, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.add(x[i], y[i]);
  return out;
}

/// First basis triple or pair violating associativity or the unit law, as
/// text; empty when the axioms hold.
inline std::string algebra_axiom_violation(const FDAlgebra& A) {
  const std::size_t n = A.dim();
  for (std::size_t a = 0; a < n; ++a) {
    Vec ba = A.basis(a);
    if (A.mult(A.unit(), ba) != ba || A.mult(ba, A.unit()) != ba) return "unit law fails at " + std::to_string(a);
    for (std::size_t b = 0; b < n; ++b) {
      Vec ab = A.mult(ba, A.basis(b));
      for (std::size_t c = 0; c < n; ++c)
        if (A.mult(ab, A.basis(c)) != A.mult(ba, A.mult(A.basis(b), A.basis(c))))
          return "associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                 std::to_string(c) + ")";
    }
  }
  return {};
}

/// k[G] from a multiplication table of indices (0-based); checks the group
/// axioms exhaustively.
inline FDAlgebra group_algebra(const Ring& ring, const std::vector<std::vector<std::size_t>>& table) {
  const std::size_t n = table.size();
  check_guard(static_cast<double>(n), 256.0, "group order");
  if (n == 0) fail(Errc::not_a_group, "empty table");
  for (const auto& row : table) {
    if (row.size() != n) fail(Errc::not_a_group, "table is not square");
    std::vector<bool> seen(n, false);
    for (auto x : row) {
      if (x >= n || seen[x]) fail(Errc::not_a_group, "row is not a permutation");
      seen[x] = true;
    }
  }
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = table[i][j] == j && table[j][i] == j;
    if (ok) e = i;
  }
  if (e == n) fail(Errc::not_a_group, "no identity element");
  for (std::size_t a = 0; a < n; ++a) {
    bool has_inverse = false;
    for (std::size_t b = 0; b < n && !has_inverse; ++b) has_inverse = table[a][b] == e && table[b][a] == e;
    if (!has_inverse) fail(Errc::not_a_group, "element " + std::to_string(a) + " has no inverse");
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          fail(Errc::not_a_group, "table is not associative");
  }
  std::vector<SparseVec> products(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      products[a * n + b] = {{static_cast<std::uint32_t>(table[a][b]), ring.one()}};
  Vec unit(n, 0);
  unit[e] = ring.one();
  return FDAlgebra(ring, n, std::move(products), std::move(unit));
}

inline std::vector<std::vector<std::size_t>> multiplication_table(const GlGroup& g) {
  check_guard(static_cast<double>(g.order()), 256.0, "group order");
  std::vector<std::vector<std::size_t>> t(g.order(), std::vector<std::size_t>(g.order()));
  for (std::size_t i = 0; i < g.order(); ++i)
    for (std::size_t j = 0; j < g.order(); ++j) t[i][j] = g.multiply(i, j);
  return t;
}

inline FDAlgebra group_algebra(const GlGroup& g) { return group_algebra(g.ring(), multiplication_table(g)); }

inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

/// k[eps] with basis {1, eps}.
inline FDAlgebra dual_numbers(const Ring& ring) {
  const Elem one = ring.one();
  return FDAlgebra(ring, 2, {{{0, one}}, {{1, one}}, {{1, one}}, {}}, Vec{one, 0});
}

/// M_m(k) with basis E_ij, index i * m + j.
inline FDAlgebra matrix_algebra(const Ring& ring, std::size_t m) {
  std::vector<SparseVec> products(m * m * m * m);
  Vec unit(m * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    unit[i * m + i] = ring.one();
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t l = 0; l < m; ++l)
        products[(i * m + j) * m * m + (j * m + l)] = {{static_cast<std::uint32_t>(i * m + l), ring.one()}};
  }
  return FDAlgebra(ring, m * m, std::move(products), std::move(unit));
}

inline FDAlgebra direct_sum(const std::vector<FDAlgebra>& parts) {
  if (parts.empty()) fail(Errc::bad_parameters, "empty direct sum");
  std::size_t dim = 0;
  for (const auto& p : parts) {
    if (!(p.ring() == parts.front().ring())) fail(Errc::ring_mismatch, "direct sum over different rings");
    dim += p.dim();
  }
  std::vector<SparseVec> products(dim * dim);
  Vec unit(dim, 0);
  std::size_t off = 0;
  for (const auto& p : parts) {
    for (std::size_t a = 0; a < p.dim(); ++a) {
      unit[off + a] = p.unit()[a];
      for (std::size_t b = 0; b < p.dim(); ++b) {
        SparseVec& dst = products[(off + a) * dim + off + b];
        for (auto [c, v] : p.product(a, b)) dst.emplace_back(static_cast<std::uint32_t>(off + c), v);
      }
    }
    off += p.dim();
  }
  return FDAlgebra(parts.front().ring(), dim, std::move(products), std::move(unit));
}

/// S_k(n,d) as an FDAlgebra, structure constants reduced into k.
inline FDAlgebra schur_fd_algebra(const SchurAlgebra& s) {
  const Ring& ring = s.ring();
  std::vector<SparseVec> products(s.dim() * s.dim());
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      for (const auto& t : s.product(a, b)) {
        Elem c = ring.from_int(t.coeff);
        if (c != 0) products[a * s.dim() + b].emplace_back(t.index, c);
      }
  return FDAlgebra(ring, s.dim(), std::move(products), s.unit());
}

/// Center as the rows of a reduced row echelon basis.
inline std::vector<Vec> center(const FDAlgebra& A) {
  const std::size_t n = A.dim();
  const Ring& ring = A.ring();
  // Row (i, c): coefficient of b_c in x b_i - b_i x, as a function of x.
  Matrix<Elem> sys(n * n, n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      for (auto [c, v] : A.product(a, i)) sys(i * n + c, a) = ring.add(sys(i * n + c, a), v);
      for (auto [c, v] : A.product(i, a)) sys(i * n + c, a) = ring.sub(sys(i * n + c, a), v);
    }
  EchelonBasis span(ring, n);
  for (auto& v : solve_kernel(ring, sys).kernel) span.insert(std::move(v));
  auto basis = span.canonical_basis();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) out.emplace_back(basis.row(i).begin(), basis.row(i).end());
  return out;
}

/// Two-sided ideal generated by x: the span of b_i x b_j.
inline EchelonBasis generated_ideal(const FDAlgebra& A, const Vec& x) {
  EchelonBasis span(A.ring(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    Vec left = A.mult(A.basis(i), x);
    if (detail::is_zero(left)) continue;
    for (std::size_t j = 0; j < A.dim() && span.rank() < A.dim(); ++j) span.insert(A.mult(left, A.basis(j)));
  }
  return span;
}

/// I^k = 0 for some k, deciding by powers until they vanish or stop shrinking.
inline bool is_nilpotent_ideal(const FDAlgebra& A, const std::vector<Vec>& ideal) {
  std::vector<Vec> power = ideal;
  while (!power.empty()) {
    EchelonBasis next(A.ring(), A.dim());
    for (const auto& p : power)
      for (const auto& q : ideal) next.insert(A.mult(p, q));
    if (next.rank() == power.size()) return false;
    power = next.rows();
  }
  return true;
}

namespace detail {
inline void for_each_element(const Ring& ring, std::size_t dim, const std::function<bool(const Vec&)>& visit) {
  const auto q = static_cast<std::uint64_t>(ring.size());
  check_guard(std::pow(static_cast<double>(q), static_cast<double>(dim)), 1048576.0, "element count |k|^dim");
  Vec v(dim, 0);
  for (;;) {
    if (!visit(v)) return;
    std::size_t i = 0;
    while (i < dim && static_cast<std::uint64_t>(v[i]) + 1 == q) v[i++] = 0;
    if (i == dim) return;
    ++v[i];
  }
}

// x as coordinates in a combination of `basis`.
inline Vec combine(const Ring& ring, const std::vector<Vec>& basis, const Vec& coeffs, std::size_t width) {
  Vec out(width, 0);
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (coeffs[i] != 0) axpy(ring, out, coeffs[i], basis[i]);
  return out;
}
}  // namespace detail

/// Jacobson radical by enumeration: x lies in it iff the ideal generated by
/// x is nilpotent. Returned as a reduced row echelon basis.
inline std::vector<Vec> brute_radical(const FDAlgebra& A) {
  EchelonBasis rad(A.ring(), A.dim());
  detail::for_each_element(A.ring(), A.dim(), [&](const Vec& x) {
    if (!rad.contains(x) && is_nilpotent_ideal(A, generated_ideal(A, x).rows())) rad.insert(x);
    return true;
  });
  auto basis = rad.canonical_basis();
  std::vector<Vec> out;
  for (std::size_t i = 0; i < basis.rows(); ++i) out.emplace_back(basis.row(i).begin(), basis.row(i).end());
  return out;
}

/// A / I for a two-sided ideal I, on the complement basis {b_j : j not a
/// pivot column of I's echelon form}.
inline FDAlgebra quotient(const FDAlgebra& A, const std::vector<Vec>& ideal) {
  EchelonBasis I(A.ring(), A.dim());
  for (const auto& v : ideal) I.insert(v);
  std::vector<bool> pivot(A.dim(), false);
  for (auto p : I.pivots()) pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < A.dim(); ++j)
    if (!pivot[j]) keep.push_back(j);
  auto project = [&](const Vec& v) {
    Vec r = I.reduce(v), out(keep.size());
    for (std::size_t k = 0; k < keep.size(); ++k) out[k] = r[keep[k]];
    return out;
  };
  const std::size_t m = keep.size();
  std::vector<SparseVec> products(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      products[a * m + b] = detail::sparse(project(A.mult(A.basis(keep[a]), A.basis(keep[b]))));
  return FDAlgebra(A.ring(), m, std::move(products), project(A.unit()));
}

/// eA for a central idempotent e, in the reduced echelon basis of eA, with
/// unit e.
inline FDAlgebra corner_algebra(const FDAlgebra& A, const Vec& e) {
  EchelonBasis span(A.ring(), A.dim());
  for (std::size_t i = 0; i < A.dim(); ++i) span.insert(A.mult(e, A.basis(i)));
  auto cb = span.canonical_basis();
  std::vector<Vec> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < cb.rows(); ++i) {
    basis.emplace_back(cb.row(i).begin(), cb.row(i).end());
    std::size_t p = 0;
    while (basis.back()[p] == 0) ++p;
    pivots.push_back(p);
  }
  // In reduced echelon form the coordinate on basis i is the entry at pivot i.
  auto coords = [&](const Vec& v) {
    Vec out(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] = v[pivots[i]];
    return out;
  };
  const std::size_t m = basis.size();
  std::vector<SparseVec> products(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) products[a * m + b] = detail::sparse(coords(A.mult(basis[a], basis[b])));
  return FDAlgebra(A.ring(), m, std::move(products), coords(e));
}

struct Block {
  Vec idempotent;
  std::size_t dim = 0;
  std::size_t radical_dim = 0;
  bool commutative = false;
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  bool partition_of_unity = false;
  bool orthogonal = false;
  bool central = false;
  bool primitive = false;
};

/// All nonzero central idempotents, in enumeration order of center coordinates.
inline std::vector<Vec> central_idempotents(const FDAlgebra& A) {
  auto z = center(A);
  std::vector<Vec> out;
  detail::for_each_element(A.ring(), z.size(), [&](const Vec& c) {
    Vec e = detail::combine(A.ring(), z, c, A.dim());
    if (!detail::is_zero(e) && A.mult(e, e) == e) out.push_back(std::move(e));
    return true;
  });
  return out;
}

/// Primitive central idempotents (those with no smaller nonzero central
/// idempotent f, f e = f), checked and described block by block.
inline BlockDecomposition central_idempotent_blocks(const FDAlgebra& A) {
  auto all = central_idempotents(A);
  BlockDecomposition out;
  for (const auto& e : all) {
    bool minimal = true;
    for (const auto& f : all)
      if (f != e && A.mult(f, e) == f) minimal = false;
    if (!minimal) continue;
    FDAlgebra block = corner_algebra(A, e);
    out.blocks.push_back({e, block.dim(), brute_radical(block).size(), block.is_commutative()});
  }
  Vec sum(A.dim(), 0);
  out.orthogonal = out.central = out.primitive = true;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    const Vec& e = out.blocks[i].idempotent;
    detail::axpy(A.ring(), sum, A.ring().one(), e);
    for (std::size_t a = 0; a < A.dim(); ++a)
      if (A.mult(e, A.basis(a)) != A.mult(A.basis(a), e)) out.central = false;
    for (std::size_t j = 0; j < out.blocks.size(); ++j)
      if (i != j && !detail::is_zero(A.mult(e, out.blocks[j].idempotent))) out.orthogonal = false;
    for (const auto& f : all)
      for (const auto& g : all)
        if (detail::is_zero(A.mult(f, g)) && add_vec(A.ring(), f, g) == e) out.primitive = false;
  }
  out.partition_of_unity = sum == A.unit();
  return out;
}

struct AlgebraProfile {
  std::size_t dim = 0;
  bool commutative = false;
  std::size_t center_dim = 0;
  std::size_t radical_dim = 0;
  std::size_t ss_dim = 0;
  std::vector<std::size_t> block_dims;  // ascending

  bool operator==(const AlgebraProfile&) const = default;
};

inline AlgebraProfile algebra_profile(const FDAlgebra& A) {
  AlgebraProfile p;
  p.dim = A.dim();
  p.commutative = A.is_commutative();
  p.center_dim = center(A).size();
  p.radical_dim = brute_radical(A).size();
  p.ss_dim = p.dim - p.radical_dim;
  for (const auto& b : central_idempotent_blocks(A).blocks) p.block_dims.push_back(b.dim);
  std::sort(p.block_dims.begin(), p.block_dims.end());
  return p;
}

/// Names of the profile fields on which a and b disagree.
inline std::vector<std::string> profile_differences(const AlgebraProfile& a, const AlgebraProfile& b) {
  std::vector<std::string> out;
  if (a.dim != b.dim) out.emplace_back("dim");
  if (a.commutative != b.commutative) out.emplace_back("commutative");
  if (a.center_dim != b.center_dim) out.emplace_back("center_dim");
  if (a.radical_dim != b.radical_dim) out.emplace_back("radical_dim");
  if (a.ss_dim != b.ss_dim) out.emplace_back("ss_dim");
  if (a.block_dims != b.block_dims) out.emplace_back("block_dims");
  return out;
}

}  // namespace swlab
