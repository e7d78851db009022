#pragma once

// Exact linear algebra over finite fields.

#include <optional>
#include <vector>

#include "swlab/matrix.hpp"

namespace swlab {

namespace detail {
inline void require_field(const Ring& ring) {
  if (!ring.is_field()) fail(Errc::not_a_field, ring.name());
}

// dst += f * src
inline void axpy(const Ring& ring, std::span<Elem> dst, Elem f, std::span<const Elem> src) {
  if (f == 0) return;
  if (ring.kind() == RingKind::prime_field) {
    const Elem p = ring.characteristic();
    for (std::size_t j = 0; j < dst.size(); ++j)
      if (src[j] != 0) dst[j] = (dst[j] + f * src[j]) % p;
    return;
  }
  for (std::size_t j = 0; j < dst.size(); ++j)
    if (src[j] != 0) dst[j] = ring.add(dst[j], ring.mul(f, src[j]));
}
}  // namespace detail

struct RrefResult {
  Matrix<Elem> rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(const Ring& ring, Matrix<Elem> a) {
  detail::require_field(ring);
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(r, j));
    Elem inv = ring.inv(a(r, c));
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = ring.mul(inv, a(r, j));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      detail::axpy(ring, a.row(i), ring.neg(a(i, c)), a.row(r));
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.rref = std::move(a);
  return out;
}

inline std::size_t rank(const Ring& ring, const Matrix<Elem>& a) { return rref(ring, a).rank; }

struct SolveResult {
  std::optional<Vec> solution;  // empty when the system is inconsistent
  std::vector<Vec> kernel;
};

/// Particular solution of a x = b (free variables set to 0) and a kernel
/// basis with one vector per free column: 1 at the free column and the
/// negated rref entries at the pivot columns.
inline SolveResult solve_kernel(const Ring& ring, const Matrix<Elem>& a,
                                const std::optional<Vec>& b = std::nullopt) {
  detail::require_field(ring);
  if (b && b->size() != a.rows()) fail(Errc::dimension_mismatch, "right-hand side length");
  const std::size_t n = a.cols();
  Matrix<Elem> aug(a.rows(), n + (b ? 1 : 0), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    if (b) aug(i, n) = (*b)[i];
  }
  auto red = rref(ring, std::move(aug));
  SolveResult out;
  std::vector<bool> is_pivot(n, false);
  for (auto c : red.pivots)
    if (c < n) is_pivot[c] = true;
  if (b) {
    bool consistent = red.pivots.empty() || red.pivots.back() != n;
    if (consistent) {
      Vec x(n, 0);
      for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.rref(i, n);
      out.solution = std::move(x);
    }
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      if (red.pivots[i] >= n) break;
      v[red.pivots[i]] = ring.neg(red.rref(i, f));
    }
    out.kernel.push_back(std::move(v));
  }
  return out;
}

/// Incrementally built row space. Stored rows have a leading 1 at their
/// pivot and vanish at the pivots of earlier rows, so reducing in insertion
/// order clears every pivot column.
class EchelonBasis {
 public:
  EchelonBasis(Ring ring, std::size_t width) : ring_(std::move(ring)), width_(width) {
    detail::require_field(ring_);
  }

  std::size_t width() const { return width_; }
  std::size_t rank() const { return rows_.size(); }
  const Ring& ring() const { return ring_; }

  Vec reduce(Vec v) const {
    if (v.size() != width_) fail(Errc::dimension_mismatch, "vector width");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Elem c = v[pivots_[i]];
      if (c != 0) detail::axpy(ring_, v, ring_.neg(c), rows_[i]);
    }
    return v;
  }

  bool contains(const Vec& v) const {
    Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
  }

  /// Adds v to the span; returns true when the rank grew.
  bool insert(Vec v) {
    v = reduce(std::move(v));
    std::size_t piv = 0;
    while (piv < width_ && v[piv] == 0) ++piv;
    if (piv == width_) return false;
    Elem inv = ring_.inv(v[piv]);
    for (auto& x : v) x = ring_.mul(inv, x);
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  const std::vector<Vec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Canonical basis: the nonzero rows of the reduced row echelon form.
  Matrix<Elem> canonical_basis() const {
    Matrix<Elem> m = Matrix<Elem>::from_rows(rows_, width_);
    auto red = rref(ring_, std::move(m));
    Matrix<Elem> out(red.rank, width_);
    for (std::size_t i = 0; i < red.rank; ++i)
      std::copy(red.rref.row(i).begin(), red.rref.row(i).end(), out.row(i).begin());
    return out;
  }

 private:
  Ring ring_;
  std::size_t width_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Rows of `rref` that are nonzero.
inline std::vector<Vec> nonzero_rows(const RrefResult& r) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < r.rank; ++i) out.emplace_back(r.rref.row(i).begin(), r.rref.row(i).end());
  return out;
}

}  // namespace swlab
