#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "swlab/matrix.hpp"

namespace swlab {

/// Determinant by cofactor expansion along the first row; valid over any
/// commutative ring (no division).
inline Elem determinant(const Ring& ring, const Matrix<Elem>& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) fail(Errc::dimension_mismatch, "determinant of a non-square matrix");
  if (n == 0) return ring.one();
  if (n == 1) return m(0, 0);
  if (n == 2) return ring.sub(ring.mul(m(0, 0), m(1, 1)), ring.mul(m(0, 1), m(1, 0)));
  Elem det = 0;
  Matrix<Elem> minor(n - 1, n - 1);
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    Elem term = ring.mul(m(0, j), determinant(ring, minor));
    det = (j % 2 == 0) ? ring.add(det, term) : ring.sub(det, term);
  }
  return det;
}

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
inline std::uint64_t gl_order_formula(std::uint64_t q, int n) {
  std::uint64_t qn = 1;
  for (int i = 0; i < n; ++i) qn *= q;
  std::uint64_t order = 1, qi = 1;
  for (int i = 0; i < n; ++i) {
    order *= (qn - qi);
    qi *= q;
  }
  return order;
}

/// GL_n(k) for finite k. Elements are stored as codes: the flattened entry
/// codes read as base-|k| digits, first entry most significant, so ascending
/// codes are the lexicographic order on flattened entries.
class GlGroup {
 public:
  static GlGroup enumerate(const Ring& ring, int n) {
    if (!ring.is_finite()) fail(Errc::infinite_ring, "GL_n(Z) is infinite");
    if (n < 1) fail(Errc::bad_parameters, "n must be positive");
    const double total = std::pow(static_cast<double>(ring.size()), n * n);
    check_guard(total, 1e7, "matrix count |k|^(n^2)");
    GlGroup g(ring, n);
    const auto count = static_cast<std::uint64_t>(total + 0.5);
    Matrix<Elem> m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), 0);
    for (std::uint64_t code = 0; code < count; ++code) {
      g.decode_into(code, m);
      if (ring.is_unit(determinant(ring, m))) g.codes_.push_back(code);
    }
    if (ring.is_field()) {
      auto expected = gl_order_formula(static_cast<std::uint64_t>(ring.size()), n);
      if (g.codes_.size() != expected)
        fail(Errc::not_a_group, "GL order " + std::to_string(g.codes_.size()) + " != " + std::to_string(expected));
    }
    return g;
  }

  const Ring& ring() const { return ring_; }
  int n() const { return n_; }
  std::size_t order() const { return codes_.size(); }
  std::uint64_t code(std::size_t i) const { return codes_[i]; }

  Matrix<Elem> element(std::size_t i) const {
    Matrix<Elem> m(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
    decode_into(codes_[i], m);
    return m;
  }

  std::uint64_t encode(const Matrix<Elem>& m) const {
    std::uint64_t code = 0;
    const auto q = static_cast<std::uint64_t>(ring_.size());
    for (Elem x : m.data()) code = code * q + static_cast<std::uint64_t>(x);
    return code;
  }

  std::optional<std::size_t> find(const Matrix<Elem>& m) const {
    if (m.rows() != static_cast<std::size_t>(n_) || m.cols() != static_cast<std::size_t>(n_)) return std::nullopt;
    auto it = std::lower_bound(codes_.begin(), codes_.end(), encode(m));
    if (it == codes_.end() || *it != encode(m)) return std::nullopt;
    return static_cast<std::size_t>(it - codes_.begin());
  }

  std::size_t index_of(const Matrix<Elem>& m) const {
    auto i = find(m);
    if (!i) fail(Errc::out_of_range, "matrix is not in the group");
    return *i;
  }

  std::size_t multiply(std::size_t i, std::size_t j) const {
    return index_of(swlab::multiply(ring_, element(i), element(j)));
  }

  std::size_t identity_index() const {
    return index_of(identity_matrix(static_cast<std::size_t>(n_)));
  }

 private:
  GlGroup(Ring ring, int n) : ring_(std::move(ring)), n_(n) {}

  void decode_into(std::uint64_t code, Matrix<Elem>& m) const {
    const auto q = static_cast<std::uint64_t>(ring_.size());
    const std::size_t cells = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    for (std::size_t k = cells; k-- > 0;) {
      m(k / static_cast<std::size_t>(n_), k % static_cast<std::size_t>(n_)) = static_cast<Elem>(code % q);
      code /= q;
    }
  }

  Ring ring_;
  int n_;
  std::vector<std::uint64_t> codes_;
};

inline GlGroup enumerate_gl(const Ring& ring, int n) { return GlGroup::enumerate(ring, n); }

}  // namespace swlab
