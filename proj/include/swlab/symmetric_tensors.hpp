#pragma once

// Symmetric tensors TS^d(M) for free M of rank dimM, their orbit-sum basis,
// gamma_d, and the correspondence between homogeneous degree-d polynomial
// maps M -> N and linear maps TS^d(M) -> N.
//
// A multiset index nu (exponent vector, |nu| = d) is also handled as its
// sorted word: the nondecreasing sequence of 0-based symbols with content nu.
// Indices are ordered by ascending lexicographic order of sorted words, e.g.
// (3,0), (2,1), (1,2), (0,3) for dimM = 2, d = 3.

#include <cstdint>
#include <vector>

#include "swlab/tensor_space.hpp"

namespace swlab {

using MultisetIndex = std::vector<int>;

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline std::vector<int> sorted_word(const MultisetIndex& nu) {
  std::vector<int> w;
  for (std::size_t s = 0; s < nu.size(); ++s)
    for (int c = 0; c < nu[s]; ++c) w.push_back(static_cast<int>(s));
  return w;
}

inline MultisetIndex content(std::span<const int> symbols, int alphabet) {
  MultisetIndex nu(static_cast<std::size_t>(alphabet), 0);
  for (int s : symbols) ++nu[static_cast<std::size_t>(s)];
  return nu;
}

/// The ordered orbit basis of TS^d over an alphabet of `alphabet` symbols,
/// with constant-time ranking of sorted words.
class MultisetBasis {
 public:
  MultisetBasis(int alphabet, int d) : alphabet_(alphabet), d_(d) {
    if (alphabet < 1 || d < 0) fail(Errc::bad_parameters, "need dimM >= 1 and d >= 0");
    const auto m = static_cast<std::uint64_t>(alphabet);
    const auto dd = static_cast<std::uint64_t>(d);
    check_guard(static_cast<double>(binomial(m + dd - 1, dd)), 4096.0, "multiset count C(dimM+d-1,d)");
    // tail_[len][s]: nondecreasing words of length len over symbols s..m-1.
    tail_.assign(static_cast<std::size_t>(d) + 1, std::vector<std::uint64_t>(m + 1, 0));
    for (std::uint64_t len = 0; len <= dd; ++len)
      for (std::uint64_t s = 0; s <= m; ++s)
        tail_[len][s] = (s == m) ? (len == 0 ? 1 : 0) : binomial(m - s + len - 1, len);
    std::vector<int> w(static_cast<std::size_t>(d), 0);
    for (;;) {
      indices_.push_back(content(w, alphabet));
      int i = d - 1;
      while (i >= 0 && w[static_cast<std::size_t>(i)] == alphabet - 1) --i;
      if (i < 0) break;
      int v = w[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < d; ++j) w[static_cast<std::size_t>(j)] = v;
    }
  }

  int alphabet() const { return alphabet_; }
  int degree() const { return d_; }
  std::size_t size() const { return indices_.size(); }
  const MultisetIndex& operator[](std::size_t i) const { return indices_[i]; }
  const std::vector<MultisetIndex>& indices() const { return indices_; }

  /// Rank of a nondecreasing word of 0-based symbols.
  std::size_t rank_sorted(std::span<const int> w) const {
    std::uint64_t r = 0;
    int prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::size_t len = w.size() - i - 1;
      for (int s = prev; s < w[i]; ++s) r += tail_[len][static_cast<std::size_t>(s)];
      prev = w[i];
    }
    return static_cast<std::size_t>(r);
  }

  std::size_t index_of(const MultisetIndex& nu) const {
    if (static_cast<int>(nu.size()) != alphabet_) fail(Errc::dimension_mismatch, "index length");
    int total = 0;
    for (int x : nu) {
      if (x < 0) fail(Errc::out_of_range, "negative exponent");
      total += x;
    }
    if (total != d_) fail(Errc::out_of_range, "|nu| != d");
    return rank_sorted(sorted_word(nu));
  }

 private:
  int alphabet_, d_;
  std::vector<std::vector<std::uint64_t>> tail_;
  std::vector<MultisetIndex> indices_;
};

inline std::vector<MultisetIndex> ts_basis(int dimM, int d) { return MultisetBasis(dimM, d).indices(); }

/// Number of distinct words with content nu (the multinomial coefficient).
inline std::uint64_t orbit_size(const MultisetIndex& nu) {
  std::uint64_t r = 1;
  std::uint64_t n = 0;
  for (int x : nu) {
    for (int i = 1; i <= x; ++i) r = r * (++n) / static_cast<std::uint64_t>(i);
  }
  return r;
}

/// Each distinct arrangement of the symbols of nu, in lexicographic order.
inline std::vector<std::vector<int>> arrangements(const MultisetIndex& nu) {
  std::vector<int> w = sorted_word(nu);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// sum_nu coeffs[nu] * orbit_nu, where orbit_nu is the sum (coefficient 1)
/// of the distinct words with content nu.
struct SymTensor {
  Ring ring;
  int dimM = 0;
  int d = 0;
  Vec coeffs;
};

inline TensorVector expand(const SymTensor& t) {
  MultisetBasis basis(t.dimM, t.d);
  if (t.coeffs.size() != basis.size()) fail(Errc::dimension_mismatch, "symmetric tensor length");
  auto out = TensorVector::zero(t.ring, t.dimM, t.d);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (t.coeffs[i] == 0) continue;
    for (const auto& w : arrangements(basis[i])) {
      Word word(w.begin(), w.end());
      for (auto& x : word) ++x;
      out.coeffs[word_rank(word, t.dimM)] = t.coeffs[i];
    }
  }
  return out;
}

/// lambda^nu = prod_i x_i^{nu_i} for each basis index, i.e. x (x) ... (x) x
/// in the orbit basis.
inline SymTensor gamma_d(const Ring& ring, std::span<const Elem> x, int d) {
  MultisetBasis basis(static_cast<int>(x.size()), d);
  SymTensor t{ring, static_cast<int>(x.size()), d, Vec(basis.size(), 0)};
  for (std::size_t i = 0; i < basis.size(); ++i) {
    Elem v = ring.one();
    for (int s : sorted_word(basis[i])) {
      v = ring.mul(v, x[static_cast<std::size_t>(s)]);
      if (v == 0) break;
    }
    t.coeffs[i] = v;
  }
  return t;
}

/// True iff v is fixed by every adjacent transposition (these generate S_d).
inline bool is_symmetric(const TensorVector& v) {
  for (int i = 1; i < v.d; ++i)
    if (!(perm_act(Perm::transposition(v.d, i, i + 1), v) == v)) return false;
  return true;
}

/// A homogeneous degree-d polynomial map M -> N, x = sum lambda_i x_i
/// |-> sum_nu lambda^nu y_nu; family[i] is y_nu for the i-th basis index.
struct PolyMapSpec {
  Ring ring;
  int dimM = 0;
  int d = 0;
  int dimN = 0;
  std::vector<Vec> family;
};

inline void validate(const PolyMapSpec& spec) {
  MultisetBasis basis(spec.dimM, spec.d);
  if (spec.family.size() != basis.size()) fail(Errc::dimension_mismatch, "family needs one entry per index");
  for (const auto& y : spec.family)
    if (y.size() != static_cast<std::size_t>(spec.dimN)) fail(Errc::dimension_mismatch, "y_nu length");
}

/// h : TS^d(M) -> N with h(orbit_nu) = y_nu, as a dimN x |basis| matrix.
inline Matrix<Elem> linear_of_polymap(const PolyMapSpec& spec) {
  validate(spec);
  Matrix<Elem> h(static_cast<std::size_t>(spec.dimN), spec.family.size(), 0);
  for (std::size_t j = 0; j < spec.family.size(); ++j)
    for (std::size_t i = 0; i < static_cast<std::size_t>(spec.dimN); ++i) h(i, j) = spec.family[j][i];
  return h;
}

inline PolyMapSpec polymap_of_linear(const Ring& ring, int dimM, int d, const Matrix<Elem>& h) {
  MultisetBasis basis(dimM, d);
  if (h.cols() != basis.size()) fail(Errc::dimension_mismatch, "h must be defined on the orbit basis");
  PolyMapSpec spec{ring, dimM, d, static_cast<int>(h.rows()), {}};
  for (std::size_t j = 0; j < h.cols(); ++j) {
    Vec y(h.rows());
    for (std::size_t i = 0; i < h.rows(); ++i) y[i] = h(i, j);
    spec.family.push_back(std::move(y));
  }
  return spec;
}

inline Vec poly_eval(const PolyMapSpec& spec, std::span<const Elem> x) {
  if (x.size() != static_cast<std::size_t>(spec.dimM)) fail(Errc::dimension_mismatch, "argument length");
  validate(spec);
  const Ring& ring = spec.ring;
  MultisetBasis basis(spec.dimM, spec.d);
  Vec out(static_cast<std::size_t>(spec.dimN), 0);
  for (std::size_t j = 0; j < spec.family.size(); ++j) {
    Elem monomial = ring.one();
    for (std::size_t s = 0; s < x.size() && monomial != 0; ++s)
      monomial = ring.mul(monomial, ring.pow(x[s], static_cast<std::uint64_t>(basis[j][s])));
    if (monomial == 0) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      out[i] = ring.add(out[i], ring.mul(monomial, spec.family[j][i]));
  }
  return out;
}

}  // namespace swlab
