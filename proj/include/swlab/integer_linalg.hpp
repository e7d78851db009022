#pragma once

// Integer lattices: Hermite and Smith normal forms, integer kernels and
// lattice span saturation.

#include <functional>
#include <optional>
#include <vector>

#include "swlab/matrix.hpp"

namespace swlab {

namespace detail {

inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline void row_axpy(Matrix<Int>& m, std::size_t dst, const Int& f, std::size_t src) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0) m(dst, j) += f * m(src, j);
}

inline void col_axpy(Matrix<Int>& m, std::size_t dst, const Int& f, std::size_t src) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0) m(i, dst) += f * m(i, src);
}

inline void swap_rows(Matrix<Int>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

inline void swap_cols(Matrix<Int>& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

inline void negate_row(Matrix<Int>& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace detail

struct HnfResult {
  Matrix<Int> h;          // same shape as the input, zero rows last
  Matrix<Int> transform;  // unimodular U with U * A = H (empty unless requested)
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Row-style Hermite normal form: echelon, positive pivots, entries above a
/// pivot reduced into [0, pivot).
inline HnfResult hnf_with_transform(Matrix<Int> a, bool track = true) {
  const std::size_t rows = a.rows();
  Matrix<Int> u;
  if (track) {
    u = Matrix<Int>(rows, rows, Int(0));
    for (std::size_t i = 0; i < rows; ++i) u(i, i) = 1;
  }
  auto row_op = [&](std::size_t dst, const Int& f, std::size_t src) {
    detail::row_axpy(a, dst, f, src);
    if (track) detail::row_axpy(u, dst, f, src);
  };
  auto swap_op = [&](std::size_t x, std::size_t y) {
    detail::swap_rows(a, x, y);
    if (track) detail::swap_rows(u, x, y);
  };
  HnfResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        if (!best || detail::abs_int(a(i, c)) < detail::abs_int(a(*best, c))) best = i;
      }
      if (!best) break;
      swap_op(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Int q = detail::floor_div(a(i, c), a(r, c));
        row_op(i, -q, r);
        if (a(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      detail::negate_row(a, r);
      if (track) detail::negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q = detail::floor_div(a(i, c), a(r, c));
      row_op(i, -q, r);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.h = std::move(a);
  out.transform = std::move(u);
  return out;
}

inline Matrix<Int> hnf(const Matrix<Int>& a) { return hnf_with_transform(a, false).h; }

/// Nonzero rows of the Hermite normal form (a canonical lattice basis).
inline Matrix<Int> hnf_basis(const Matrix<Int>& a) {
  auto res = hnf_with_transform(a, false);
  Matrix<Int> out(res.rank, a.cols());
  for (std::size_t i = 0; i < res.rank; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = res.h(i, j);
  return out;
}

struct SnfResult {
  std::vector<Int> divisors;  // d_1 | d_2 | ..., length min(rows, cols), zeros last
  std::optional<Matrix<Int>> left, right;  // U, V with U * A * V = diag(divisors)
};

inline SnfResult snf(Matrix<Int> a, bool with_transforms = false) {
  const std::size_t rows = a.rows(), cols = a.cols();
  Matrix<Int> u, v;
  if (with_transforms) {
    u = Matrix<Int>(rows, rows, Int(0));
    v = Matrix<Int>(cols, cols, Int(0));
    for (std::size_t i = 0; i < rows; ++i) u(i, i) = 1;
    for (std::size_t j = 0; j < cols; ++j) v(j, j) = 1;
  }
  auto row_op = [&](std::size_t dst, const Int& f, std::size_t src) {
    detail::row_axpy(a, dst, f, src);
    if (with_transforms) detail::row_axpy(u, dst, f, src);
  };
  auto col_op = [&](std::size_t dst, const Int& f, std::size_t src) {
    detail::col_axpy(a, dst, f, src);
    if (with_transforms) detail::col_axpy(v, dst, f, src);
  };
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::optional<std::pair<std::size_t, std::size_t>> best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          if (!best || detail::abs_int(a(i, j)) < detail::abs_int(a(best->first, best->second)))
            best = {i, j};
        }
      if (!best) break;
      detail::swap_rows(a, t, best->first);
      if (with_transforms) detail::swap_rows(u, t, best->first);
      detail::swap_cols(a, t, best->second);
      if (with_transforms) detail::swap_cols(v, t, best->second);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, -detail::floor_div(a(i, t), a(t, t)), t);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, -detail::floor_div(a(t, j), a(t, t)), t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      row_op(t, Int(1), *bad_row);
    }
    if (a(t, t) < 0) {
      detail::negate_row(a, t);
      if (with_transforms) detail::negate_row(u, t);
    }
  }
  SnfResult out;
  for (std::size_t t = 0; t < steps; ++t) out.divisors.push_back(a(t, t));
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

/// Lattice basis (in Hermite normal form) of {v in Z^cols : A v = 0}.
inline Matrix<Int> integer_kernel(const Matrix<Int>& a) {
  auto res = hnf_with_transform(a.transpose(), true);
  const std::size_t n = a.cols();
  Matrix<Int> ker(n - res.rank, n);
  for (std::size_t i = res.rank; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ker(i - res.rank, j) = res.transform(i, j);
  return hnf_basis(ker);
}

struct SaturationResult {
  Matrix<Int> hnf_basis;
  /// True when the stream ran dry (the lattice is exactly the span of all
  /// generators) or the last `rounds_stable` batches left the lattice
  /// unchanged. The latter is a heuristic stopping signal, not a proof.
  bool stabilized = false;
  bool exhausted = false;
  std::size_t generators_consumed = 0;
  std::size_t batches = 0;
};

using BatchSource = std::function<std::optional<std::vector<IntVec>>()>;

/// Consumes batches of generators until the stream ends or `rounds_stable`
/// consecutive batches do not change the spanned lattice.
inline SaturationResult span_saturate(const BatchSource& next_batch, std::size_t rounds_stable) {
  if (rounds_stable < 1) fail(Errc::bad_parameters, "rounds_stable must be >= 1");
  SaturationResult out;
  std::optional<std::size_t> width;
  Matrix<Int> basis;
  std::size_t unchanged = 0;
  for (;;) {
    auto batch = next_batch();
    if (!batch) {
      out.exhausted = true;
      out.stabilized = true;
      break;
    }
    ++out.batches;
    for (const auto& g : *batch) {
      if (!width) width = g.size();
      if (g.size() != *width) fail(Errc::dimension_mismatch, "generator length");
    }
    if (batch->empty()) {
      if (++unchanged >= rounds_stable && width) {
        out.stabilized = true;
        break;
      }
      continue;
    }
    out.generators_consumed += batch->size();
    Matrix<Int> stacked(basis.rows() + batch->size(), *width);
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j < *width; ++j) stacked(i, j) = basis(i, j);
    for (std::size_t k = 0; k < batch->size(); ++k)
      for (std::size_t j = 0; j < *width; ++j) stacked(basis.rows() + k, j) = (*batch)[k][j];
    Matrix<Int> next = hnf_basis(stacked);
    if (next == basis && basis.rows() > 0) {
      ++unchanged;
    } else {
      unchanged = 0;
    }
    basis = std::move(next);
    if (unchanged >= rounds_stable) {
      out.stabilized = true;
      break;
    }
  }
  if (!width) fail(Errc::empty_stream, "no generators");
  out.hnf_basis = basis.rows() ? std::move(basis) : Matrix<Int>(0, *width);
  return out;
}

/// Treats each generator as its own batch.
inline SaturationResult span_saturate(const std::vector<IntVec>& generators,
                                      std::size_t rounds_stable) {
  std::size_t pos = 0;
  return span_saturate(
      [&]() -> std::optional<std::vector<IntVec>> {
        if (pos == generators.size()) return std::nullopt;
        return std::vector<IntVec>{generators[pos++]};
      },
      rounds_stable);
}

}  // namespace swlab
