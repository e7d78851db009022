#pragma once

// E = k^n, its d-th tensor power with the word basis, the place-permutation
// action of S_d and the diagonal action of GL_k(n).

#include <numeric>
#include <vector>

#include "swlab/matrix.hpp"

namespace swlab {

/// Letters 1..n, leftmost most significant in the lexicographic rank.
using Word = std::vector<int>;

inline std::size_t tensor_dim(int n, int d) {
  std::size_t s = 1;
  for (int i = 0; i < d; ++i) s *= static_cast<std::size_t>(n);
  return s;
}

inline std::size_t word_rank(const Word& w, int n) {
  std::size_t r = 0;
  for (int letter : w) {
    if (letter < 1 || letter > n) fail(Errc::out_of_range, "letter " + std::to_string(letter));
    r = r * static_cast<std::size_t>(n) + static_cast<std::size_t>(letter - 1);
  }
  return r;
}

inline Word word_unrank(std::size_t rank, int n, int d) {
  if (rank >= tensor_dim(n, d)) fail(Errc::out_of_range, "word rank " + std::to_string(rank));
  Word w(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    w[static_cast<std::size_t>(i)] = static_cast<int>(rank % static_cast<std::size_t>(n)) + 1;
    rank /= static_cast<std::size_t>(n);
  }
  return w;
}

/// A permutation of {1..d} stored as (sigma(1), ..., sigma(d)).
/// Composition follows functions: (sigma * tau)(i) = sigma(tau(i)).
class Perm {
 public:
  explicit Perm(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x - 1)])
        fail(Errc::bad_parameters, "not a permutation");
      seen[static_cast<std::size_t>(x - 1)] = true;
    }
  }

  static Perm identity(int d) {
    std::vector<int> im(static_cast<std::size_t>(d));
    std::iota(im.begin(), im.end(), 1);
    return Perm(std::move(im));
  }

  /// Transposition of positions i and j (1-based).
  static Perm transposition(int d, int i, int j) {
    auto p = identity(d).images_;
    std::swap(p[static_cast<std::size_t>(i - 1)], p[static_cast<std::size_t>(j - 1)]);
    return Perm(std::move(p));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Perm operator*(const Perm& tau) const {
    if (tau.degree() != degree()) fail(Errc::degree_mismatch, "composing permutations");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= degree(); ++i) im[static_cast<std::size_t>(i - 1)] = (*this)(tau(i));
    return Perm(std::move(im));
  }

  Perm inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= degree(); ++i) im[static_cast<std::size_t>((*this)(i) - 1)] = i;
    return Perm(std::move(im));
  }

  bool operator==(const Perm&) const = default;

 private:
  std::vector<int> images_;
};

/// All permutations of degree d in lexicographic order of their images.
inline std::vector<Perm> all_perms(int d) {
  std::vector<int> im(static_cast<std::size_t>(d));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

struct TensorVector {
  Ring ring;
  int n = 0;
  int d = 0;
  Vec coeffs;  // indexed by word rank

  static TensorVector zero(Ring ring, int n, int d) {
    return {std::move(ring), n, d, Vec(tensor_dim(n, d), 0)};
  }
  static TensorVector basis(Ring ring, int n, int d, const Word& w) {
    auto v = zero(std::move(ring), n, d);
    v.coeffs[word_rank(w, n)] = 1;
    return v;
  }
  bool operator==(const TensorVector& o) const {
    return ring == o.ring && n == o.n && d == o.d && coeffs == o.coeffs;
  }
};

/// Image of word rank `w` under the left place-permutation action: the letter
/// in position i moves to position sigma(i). This is the rule
/// x_1 (x) ... (x) x_d -> x_{s(1)} (x) ... (x) x_{s(d)} taken with s = sigma^-1,
/// which turns the literal right action into a left action.
inline std::size_t permute_word_rank(const Perm& sigma, std::size_t w, int n) {
  const int d = sigma.degree();
  Word word = word_unrank(w, n, d);
  Word out(word.size());
  for (int i = 1; i <= d; ++i) out[static_cast<std::size_t>(sigma(i) - 1)] = word[static_cast<std::size_t>(i - 1)];
  return word_rank(out, n);
}

inline TensorVector perm_act(const Perm& sigma, const TensorVector& v) {
  if (sigma.degree() != v.d) fail(Errc::degree_mismatch, "permutation degree vs tensor degree");
  TensorVector out = TensorVector::zero(v.ring, v.n, v.d);
  for (std::size_t w = 0; w < v.coeffs.size(); ++w) {
    if (v.coeffs[w] == 0) continue;
    std::size_t t = permute_word_rank(sigma, w, v.n);
    out.coeffs[t] = v.ring.add(out.coeffs[t], v.coeffs[w]);
  }
  return out;
}

/// Matrix of perm_act(sigma, .) on E^(x)d.
inline Matrix<Elem> perm_matrix(const Perm& sigma, int n) {
  const std::size_t N = tensor_dim(n, sigma.degree());
  Matrix<Elem> m(N, N, 0);
  for (std::size_t w = 0; w < N; ++w) m(permute_word_rank(sigma, w, n), w) = 1;
  return m;
}

/// g (x) ... (x) g applied to v, one tensor slot at a time.
inline TensorVector gl_diag_act(const Matrix<Elem>& g, const TensorVector& v) {
  const auto n = static_cast<std::size_t>(v.n);
  if (g.rows() != n || g.cols() != n) fail(Errc::dimension_mismatch, "g must be n x n");
  const Ring& ring = v.ring;
  Vec cur = v.coeffs;
  const std::size_t N = cur.size();
  std::size_t stride = N;
  for (int slot = 0; slot < v.d; ++slot) {
    stride /= n;  // weight of the letter in this slot
    Vec next(N, 0);
    for (std::size_t w = 0; w < N; ++w) {
      if (cur[w] == 0) continue;
      std::size_t letter = (w / stride) % n;
      std::size_t base = w - letter * stride;
      for (std::size_t r = 0; r < n; ++r) {
        Elem f = g(r, letter);
        if (f == 0) continue;
        std::size_t t = base + r * stride;
        next[t] = ring.add(next[t], ring.mul(f, cur[w]));
      }
    }
    cur = std::move(next);
  }
  return {v.ring, v.n, v.d, std::move(cur)};
}

/// d-fold Kronecker power g (x) ... (x) g (d = 0 gives the 1x1 identity).
inline Matrix<Elem> kronecker_power(const Ring& ring, const Matrix<Elem>& g, int d) {
  Matrix<Elem> out = identity_matrix(1);
  for (int i = 0; i < d; ++i) out = kronecker(ring, out, g);
  return out;
}

}  // namespace swlab
