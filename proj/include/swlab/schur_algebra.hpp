#pragma once

// The Schur algebra S_k(n,d), realized as TS^d(End(k^n)) with the orbit basis
// and multiplied through its embedding into End(E^(x)d), plus the fixed-point
// realization End(E^(x)d)^{S_d}.
//
// End(k^n) has basis E_11, E_12, ..., E_nn (row-major); E_rs is symbol
// r*n + s with 0-based r, s. The orbit basis element for nu embeds as the sum
// of matrix units E_{u,v} over the word pairs (u, v) in E^(x)d whose letter
// pairs (u_i, v_i) have content nu. Those pair orbits partition all word
// pairs, so structure constants are counts of intermediate words:
//   c_{ab}^c = #{t : (u_c, t) in orbit a and (t, v_c) in orbit b}
// for any fixed representative (u_c, v_c) of orbit c.

#include <algorithm>
#include <memory>
#include <ostream>
#include <vector>

#include "swlab/integer_linalg.hpp"
#include "swlab/linalg.hpp"
#include "swlab/symmetric_tensors.hpp"

namespace swlab {

struct Term {
  std::uint32_t index;
  std::int64_t coeff;
};

class SchurAlgebra {
 public:
  /// Structure constants are computed once over Z; `ring` only selects the
  /// coefficient ring for elements (reduction happens on multiplication).
  static std::shared_ptr<const SchurAlgebra> build(const Ring& ring, int n, int d) {
    if (n < 1 || d < 0) fail(Errc::bad_parameters, "need n >= 1 and d >= 0");
    check_guard(static_cast<double>(swlab::tensor_dim(n, d)), 4096.0, "tensor dimension n^d");
    return std::shared_ptr<const SchurAlgebra>(new SchurAlgebra(ring, n, d));
  }

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  int d() const { return d_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t tensor_dim() const { return N_; }
  const MultisetBasis& basis() const { return basis_; }

  /// Basis index of the orbit containing the word pair (u, v), given by
  /// word ranks.
  std::size_t orbit_index(std::size_t u, std::size_t v) const {
    std::vector<int> symbols(static_cast<std::size_t>(d_));
    const auto n = static_cast<std::size_t>(n_);
    for (int i = d_ - 1; i >= 0; --i) {
      symbols[static_cast<std::size_t>(i)] = static_cast<int>((u % n) * n + (v % n));
      u /= n;
      v /= n;
    }
    std::sort(symbols.begin(), symbols.end());
    return basis_.rank_sorted(symbols);
  }

  /// Word pairs (u, v) making up orbit a.
  std::vector<std::pair<std::size_t, std::size_t>> orbit(std::size_t a) const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto n = static_cast<std::size_t>(n_);
    for (const auto& arr : arrangements(basis_[a])) {
      std::size_t u = 0, v = 0;
      for (int s : arr) {
        u = u * n + static_cast<std::size_t>(s) / n;
        v = v * n + static_cast<std::size_t>(s) % n;
      }
      out.emplace_back(u, v);
    }
    return out;
  }

  /// Nonzero structure constants of basis_a * basis_b, ascending in c.
  std::span<const Term> product(std::size_t a, std::size_t b) const {
    const std::size_t k = a * dim() + b;
    return {terms_.data() + offsets_[k], offsets_[k + 1] - offsets_[k]};
  }

  std::int64_t constant(std::size_t a, std::size_t b, std::size_t c) const {
    for (const auto& t : product(a, b))
      if (t.index == c) return t.coeff;
    return 0;
  }

  /// gamma_d(I_n): 1 on every index supported on the diagonal symbols E_ii.
  IntVec unit_integer() const {
    IntVec u(dim(), Int(0));
    for (std::size_t a = 0; a < dim(); ++a) {
      bool diagonal = true;
      for (int s : sorted_word(basis_[a]))
        if (s / n_ != s % n_) diagonal = false;
      if (diagonal) u[a] = 1;
    }
    return u;
  }

  Vec unit() const {
    Vec u(dim(), 0);
    IntVec ui = unit_integer();
    for (std::size_t a = 0; a < dim(); ++a) u[a] = ui[a] == 0 ? 0 : ring_.one();
    return u;
  }

  bool same_as(const SchurAlgebra& o) const { return ring_ == o.ring_ && n_ == o.n_ && d_ == o.d_; }

 private:
  SchurAlgebra(const Ring& ring, int n, int d)
      : ring_(ring), n_(n), d_(d), N_(swlab::tensor_dim(n, d)), basis_(n * n, d) {
    const std::size_t D = basis_.size();
    struct Triple {
      std::size_t ab;
      std::uint32_t c;
    };
    std::vector<Triple> hits;
    hits.reserve(D * N_);
    for (std::size_t c = 0; c < D; ++c) {
      auto [u, v] = orbit(c).front();
      for (std::size_t t = 0; t < N_; ++t)
        hits.push_back({orbit_index(u, t) * D + orbit_index(t, v), static_cast<std::uint32_t>(c)});
    }
    std::sort(hits.begin(), hits.end(), [](const Triple& x, const Triple& y) {
      return x.ab != y.ab ? x.ab < y.ab : x.c < y.c;
    });
    offsets_.assign(D * D + 1, 0);
    for (std::size_t i = 0; i < hits.size();) {
      std::size_t j = i;
      while (j < hits.size() && hits[j].ab == hits[i].ab && hits[j].c == hits[i].c) ++j;
      terms_.push_back({hits[i].c, static_cast<std::int64_t>(j - i)});
      ++offsets_[hits[i].ab + 1];
      i = j;
    }
    for (std::size_t k = 0; k < D * D; ++k) offsets_[k + 1] += offsets_[k];
  }

  Ring ring_;
  int n_, d_;
  std::size_t N_;
  MultisetBasis basis_;
  std::vector<std::size_t> offsets_;
  std::vector<Term> terms_;
};

using SchurPtr = std::shared_ptr<const SchurAlgebra>;

inline SchurPtr build_schur(const Ring& ring, int n, int d) { return SchurAlgebra::build(ring, n, d); }

/// An element of S_k(n,d) over a finite ring, in the orbit basis.
struct SchurElement {
  SchurPtr owner;
  Vec coeffs;

  bool operator==(const SchurElement& o) const {
    return owner->same_as(*o.owner) && coeffs == o.coeffs;
  }
};

inline SchurElement schur_identity(const SchurPtr& s) { return {s, s->unit()}; }

inline SchurElement schur_basis_element(const SchurPtr& s, std::size_t a) {
  Vec v(s->dim(), 0);
  v[a] = s->ring().one();
  return {s, std::move(v)};
}

inline SchurElement schur_mult(const SchurElement& x, const SchurElement& y) {
  if (!x.owner->same_as(*y.owner)) fail(Errc::owner_mismatch, "elements of different Schur algebras");
  const SchurAlgebra& s = *x.owner;
  const Ring& ring = s.ring();
  Vec out(s.dim(), 0);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (x.coeffs[a] == 0) continue;
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (y.coeffs[b] == 0) continue;
      Elem f = ring.mul(x.coeffs[a], y.coeffs[b]);
      for (const auto& t : s.product(a, b))
        out[t.index] = ring.add(out[t.index], ring.mul(f, ring.from_int(t.coeff)));
    }
  }
  return {x.owner, std::move(out)};
}

/// Product of two integer coefficient vectors (the algebra over Z).
inline IntVec multiply_integer(const SchurAlgebra& s, const IntVec& x, const IntVec& y) {
  if (x.size() != s.dim() || y.size() != s.dim()) fail(Errc::dimension_mismatch, "coefficient length");
  IntVec out(s.dim(), Int(0));
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (x[a] == 0) continue;
    for (std::size_t b = 0; b < s.dim(); ++b) {
      if (y[b] == 0) continue;
      Int f = x[a] * y[b];
      for (const auto& t : s.product(a, b)) out[t.index] += f * t.coeff;
    }
  }
  return out;
}

/// The n^d x n^d matrix by which x acts on E^(x)d.
inline Matrix<Elem> embed_to_end(const SchurElement& x) {
  const SchurAlgebra& s = *x.owner;
  Matrix<Elem> m(s.tensor_dim(), s.tensor_dim(), 0);
  for (std::size_t a = 0; a < s.dim(); ++a) {
    if (x.coeffs[a] == 0) continue;
    for (auto [u, v] : s.orbit(a)) m(u, v) = x.coeffs[a];
  }
  return m;
}

namespace detail {
// Linear system {P f - f P = 0 : P adjacent transposition} on the entries
// f[u][v] of End(E^(x)d), flattened as u * N + v.
inline Matrix<Int> invariance_system(int n, int d) {
  const std::size_t N = tensor_dim(n, d);
  const double unknowns = static_cast<double>(N) * static_cast<double>(N);
  check_guard(unknowns * unknowns * std::max(1, d - 1), 1e7, "fixed-point system size");
  std::vector<IntVec> rows;
  for (int i = 1; i < d; ++i) {
    Perm sigma = Perm::transposition(d, i, i + 1);
    std::vector<std::size_t> pi(N);
    for (std::size_t w = 0; w < N; ++w) pi[w] = permute_word_rank(sigma, w, n);
    for (std::size_t u = 0; u < N; ++u)
      for (std::size_t v = 0; v < N; ++v) {
        // (P f)[u][v] = f[pi(u)][v], (f P)[u][v] = f[u][pi(v)]  (pi is an involution)
        std::size_t lhs = pi[u] * N + v, rhs = u * N + pi[v];
        if (lhs == rhs) continue;
        IntVec row(N * N, Int(0));
        row[lhs] += 1;
        row[rhs] -= 1;
        rows.push_back(std::move(row));
      }
  }
  return Matrix<Int>::from_rows(rows, N * N);
}

}  // namespace detail

/// Basis of End(E^(x)d)^{S_d} over a field, solved directly from the
/// invariance equations (kernel basis in rref-derived canonical form).
inline std::vector<Matrix<Elem>> invariant_realization(const Ring& ring, int n, int d) {
  detail::require_field(ring);
  if (n < 1 || d < 0) fail(Errc::bad_parameters, "need n >= 1 and d >= 0");
  check_guard(static_cast<double>(binomial(static_cast<std::uint64_t>(n * n + d - 1), static_cast<std::uint64_t>(d))),
              4096.0, "Schur algebra dimension");
  const std::size_t N = tensor_dim(n, d);
  Matrix<Int> sys = detail::invariance_system(n, d);
  Matrix<Elem> a(sys.rows(), sys.cols(), 0);
  for (std::size_t i = 0; i < sys.rows(); ++i)
    for (std::size_t j = 0; j < sys.cols(); ++j)
      a(i, j) = ring.from_int(static_cast<std::int64_t>(sys(i, j)));
  std::vector<Matrix<Elem>> out;
  for (const auto& v : solve_kernel(ring, a).kernel) {
    Matrix<Elem> m(N, N);
    for (std::size_t k = 0; k < v.size(); ++k) m(k / N, k % N) = v[k];
    out.push_back(std::move(m));
  }
  return out;
}

/// Lattice basis of End_Z((Z^n)^(x)d)^{S_d} (integer kernel of the same system).
inline std::vector<Matrix<Int>> invariant_realization_integer(int n, int d) {
  const std::size_t N = tensor_dim(n, d);
  Matrix<Int> sys = detail::invariance_system(n, d);
  Matrix<Int> ker;
  if (sys.rows() == 0) {
    ker = Matrix<Int>(N * N, N * N, Int(0));
    for (std::size_t i = 0; i < N * N; ++i) ker(i, i) = 1;
  } else {
    ker = integer_kernel(sys);
  }
  std::vector<Matrix<Int>> out;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Matrix<Int> m(N, N);
    for (std::size_t k = 0; k < N * N; ++k) m(k / N, k % N) = ker(i, k);
    out.push_back(std::move(m));
  }
  return out;
}

/// "a b c coeff" per nonzero constant (after reduction into the ring), in
/// lexicographic (a, b, c) order.
inline void write_structure_constants(std::ostream& os, const SchurAlgebra& s) {
  const Ring& ring = s.ring();
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b)
      for (const auto& t : s.product(a, b)) {
        if (ring.is_finite()) {
          Elem c = ring.from_int(t.coeff);
          if (c == 0) continue;
          os << a << ' ' << b << ' ' << t.index << ' ' << ring.format(c) << '\n';
        } else {
          os << a << ' ' << b << ' ' << t.index << ' ' << t.coeff << '\n';
        }
      }
}

}  // namespace swlab
