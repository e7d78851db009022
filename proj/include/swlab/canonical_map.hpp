#pragma once

// The canonical map phi : k GL_k(n) -> S_k(n,d), g |-> g (x) ... (x) g, and
// the questions asked of it: surjectivity, the ring-epimorphism property,
// mod-p obstructions for the integral map and lattice lower bounds for its
// image.

#include <array>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "swlab/gl_group.hpp"
#include "swlab/integer_linalg.hpp"
#include "swlab/linalg.hpp"
#include "swlab/schur_algebra.hpp"

namespace swlab {

/// gamma_d(g) in the orbit basis: the coefficient of nu is prod g_rs^{nu_rs}.
inline SchurElement phi(const Matrix<Elem>& g, const SchurPtr& s) {
  const auto n = static_cast<std::size_t>(s->n());
  if (g.rows() != n || g.cols() != n) fail(Errc::dimension_mismatch, "g must be n x n");
  const Ring& ring = s->ring();
  Vec c(s->dim(), 0);
  for (std::size_t a = 0; a < s->dim(); ++a) {
    Elem v = ring.one();
    for (int sym : sorted_word(s->basis()[a])) {
      v = ring.mul(v, g.data()[static_cast<std::size_t>(sym)]);
      if (v == 0) break;
    }
    c[a] = v;
  }
  return {s, std::move(c)};
}

inline IntVec phi_integer(const Matrix<Int>& g, const SchurAlgebra& s) {
  const auto n = static_cast<std::size_t>(s.n());
  if (g.rows() != n || g.cols() != n) fail(Errc::dimension_mismatch, "g must be n x n");
  IntVec c(s.dim(), Int(1));
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (int sym : sorted_word(s.basis()[a])) c[a] *= g.data()[static_cast<std::size_t>(sym)];
  return c;
}

class PhiContext {
 public:
  PhiContext(GlGroup group, SchurPtr schur) : group_(std::move(group)), schur_(std::move(schur)) {
    if (!(group_.ring() == schur_->ring()) || group_.n() != schur_->n())
      fail(Errc::dimension_mismatch, "group and Schur algebra disagree on ring or n");
  }

  const GlGroup& group() const { return group_; }
  const SchurPtr& schur() const { return schur_; }
  const Ring& ring() const { return schur_->ring(); }
  SchurElement image(std::size_t i) const { return phi(group_.element(i), schur_); }

 private:
  GlGroup group_;
  SchurPtr schur_;
};

inline PhiContext make_phi_context(const Ring& ring, int n, int d) {
  return PhiContext(enumerate_gl(ring, n), build_schur(ring, n, d));
}

namespace detail {
// Visits group indices in the order i * stride mod |G|. The span does not
// depend on the order; spreading the visits reaches full rank sooner than the
// lexicographic order, where long runs share their first rows.
inline std::size_t scatter_stride(std::size_t order) {
  if (order <= 2) return 1;
  auto s = static_cast<std::size_t>(static_cast<double>(order) * 0.6180339887) | 1U;
  while (std::gcd(s, order) != 1) ++s;
  return s;
}
}  // namespace detail

/// Span of {phi(g)} over a field. With `stop_when_full`, scanning stops once
/// the span is all of S.
inline EchelonBasis image_span(const PhiContext& ctx, bool stop_when_full = true) {
  detail::require_field(ctx.ring());
  const std::size_t dim = ctx.schur()->dim();
  const std::size_t order = ctx.group().order();
  EchelonBasis span(ctx.ring(), dim);
  const std::size_t stride = detail::scatter_stride(order);
  std::size_t idx = 0;
  for (std::size_t k = 0; k < order; ++k) {
    span.insert(ctx.image(idx).coeffs);
    if (stop_when_full && span.rank() == dim) break;
    idx = (idx + stride) % order;
  }
  return span;
}

struct ImageRank {
  std::size_t rank = 0;
  std::size_t dim = 0;
  bool surjective = false;
};

inline ImageRank image_rank(const PhiContext& ctx) {
  auto span = image_span(ctx);
  return {span.rank(), ctx.schur()->dim(), span.rank() == ctx.schur()->dim()};
}

struct ModularImage {
  std::vector<Int> divisors;   // SNF of the integer lift of the image vectors
  std::size_t coprime_count = 0;  // divisors coprime to m: the free rank of the image
  std::size_t dim = 0;
  bool surjective = false;
};

/// Surjectivity over Z/m through the Smith form of the integer lift:
/// surjective iff dim divisors exist and all are coprime to m.
inline ModularImage image_mod_m(const PhiContext& ctx) {
  const Ring& ring = ctx.ring();
  if (!ring.is_finite() || ring.kind() == RingKind::ext_field)
    fail(Errc::bad_parameters, "integer-lift route needs F_p or Z/m");
  const std::size_t dim = ctx.schur()->dim();
  const Int m = ring.characteristic();
  Matrix<Int> basis(0, dim);
  const std::size_t chunk = 4 * dim + 8;
  std::vector<IntVec> pending;
  auto flush = [&] {
    Matrix<Int> stacked(basis.rows() + pending.size(), dim);
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t j = 0; j < dim; ++j) stacked(i, j) = basis(i, j);
    for (std::size_t k = 0; k < pending.size(); ++k)
      for (std::size_t j = 0; j < dim; ++j) stacked(basis.rows() + k, j) = pending[k][j];
    basis = hnf_basis(stacked);
    pending.clear();
  };
  for (std::size_t i = 0; i < ctx.group().order(); ++i) {
    auto img = ctx.image(i);
    pending.emplace_back(img.coeffs.begin(), img.coeffs.end());
    if (pending.size() >= chunk) flush();
  }
  flush();
  ModularImage out;
  out.dim = dim;
  Matrix<Int> padded(dim, dim, Int(0));
  for (std::size_t i = 0; i < basis.rows(); ++i)
    for (std::size_t j = 0; j < dim; ++j) padded(i, j) = basis(i, j);
  out.divisors = snf(padded).divisors;
  for (const auto& dv : out.divisors)
    if (boost::multiprecision::gcd(dv, m) == 1) ++out.coprime_count;
  out.surjective = out.coprime_count == dim;
  return out;
}

struct EpiResult {
  std::size_t dim_balanced = 0;  // dim of B (x)_A B
  std::size_t relation_rank = 0;
  std::size_t relations = 0;  // relation vectors generated
  bool is_epi = false;
};

namespace detail {

// Rank of the relations {x a (x) y - x (x) a y} over basis x, y of B and a in
// `elements`, inside B (x)_k B (index x * dim + y). Scanning stops at rank
// dim^2 - dim: multiplication B (x)_A B -> B is onto, so the quotient
// never drops below dim B.
inline EpiResult balanced_tensor(const SchurPtr& s, const std::vector<Vec>& elements) {
  const Ring& ring = s->ring();
  const std::size_t dim = s->dim();
  const std::size_t width = dim * dim;
  const std::size_t max_rank = width - dim;
  EchelonBasis rel(ring, width);
  EpiResult out;
  for (const auto& a_coeffs : elements) {
    SchurElement a{s, a_coeffs};
    std::vector<Vec> right(dim), left(dim);  // e_x * a and a * e_y
    for (std::size_t x = 0; x < dim; ++x) {
      right[x] = schur_mult(schur_basis_element(s, x), a).coeffs;
      left[x] = schur_mult(a, schur_basis_element(s, x)).coeffs;
    }
    for (std::size_t x = 0; x < dim && rel.rank() < max_rank; ++x)
      for (std::size_t y = 0; y < dim && rel.rank() < max_rank; ++y) {
        Vec row(width, 0);
        for (std::size_t c = 0; c < dim; ++c) {
          if (right[x][c] != 0) row[c * dim + y] = ring.add(row[c * dim + y], right[x][c]);
          if (left[y][c] != 0) row[x * dim + c] = ring.sub(row[x * dim + c], left[y][c]);
        }
        ++out.relations;
        rel.insert(std::move(row));
      }
    if (rel.rank() >= max_rank) break;
  }
  out.relation_rank = rel.rank();
  out.dim_balanced = width - rel.rank();
  out.is_epi = out.dim_balanced == dim;
  return out;
}

}  // namespace detail

/// Epimorphism test by the balanced tensor criterion: phi is an epimorphism
/// iff dim(B (x)_A B) = dim B. The relations are linear in a, so a basis of
/// the image span stands in for all group elements.
inline EpiResult epi_test(const PhiContext& ctx) {
  detail::require_field(ctx.ring());
  const auto dim = static_cast<double>(ctx.schur()->dim());
  auto span = image_span(ctx);
  check_guard(dim * dim * dim * dim * static_cast<double>(span.rank()), 1e7,
              "balanced tensor relation matrix entries");
  return detail::balanced_tensor(ctx.schur(), span.rows());
}

/// The same quotient with one relation block per group element.
inline EpiResult epi_test_group_elements(const PhiContext& ctx) {
  detail::require_field(ctx.ring());
  const auto dim = static_cast<double>(ctx.schur()->dim());
  check_guard(dim * dim * dim * dim * static_cast<double>(ctx.group().order()), 1e7,
              "balanced tensor relation matrix entries");
  std::vector<Vec> elems;
  for (std::size_t i = 0; i < ctx.group().order(); ++i) elems.push_back(ctx.image(i).coeffs);
  return detail::balanced_tensor(ctx.schur(), elems);
}

struct StrongEpiReport {
  std::size_t dim = 0;
  std::size_t rank = 0;
  std::size_t dim_balanced = 0;
  bool surjective = false;
  bool is_epi = false;
  bool strong_epi = false;   // over a field: strong epimorphism iff surjective
  bool equivalence = false;  // module categories equivalent iff strong epimorphism
  bool consistent = false;   // surjective implies epi
};

inline StrongEpiReport strong_epi_report(const PhiContext& ctx) {
  detail::require_field(ctx.ring());
  auto ir = image_rank(ctx);
  auto epi = epi_test(ctx);
  StrongEpiReport r;
  r.dim = ir.dim;
  r.rank = ir.rank;
  r.dim_balanced = epi.dim_balanced;
  r.surjective = ir.surjective;
  r.is_epi = epi.is_epi;
  r.strong_epi = ir.surjective;
  r.equivalence = r.strong_epi;
  r.consistent = !r.surjective || r.is_epi;
  return r;
}

struct ObstructionCertificate {
  int n = 0;
  int d = 0;
  std::int64_t p = 0;
  std::size_t fp_rank = 0;
  std::size_t dimS = 0;
  /// True: the F_p image is proper, and since the reduction of the Z-image
  /// lies in it while S_Z(n,d) reduces onto S_{F_p}(n,d), the map over Z is
  /// not surjective either.
  bool obstruction = false;
};

inline ObstructionCertificate z_mod_p_obstruction(int n, int d, std::int64_t p) {
  Ring fp = Ring::prime_field(p);
  auto ir = image_rank(make_phi_context(fp, n, d));
  return {n, d, p, ir.rank, ir.dim, !ir.surjective};
}

using Mat2 = std::array<std::int64_t, 4>;

/// Generators of GL_2(Z) used for word enumeration: the elementary
/// transvections with +-1, the coordinate swap and -I.
inline std::vector<Mat2> gl2z_generators() {
  return {Mat2{1, 1, 0, 1}, Mat2{1, -1, 0, 1}, Mat2{1, 0, 1, 1},
          Mat2{1, 0, -1, 1}, Mat2{0, 1, 1, 0}, Mat2{-1, 0, 0, -1}};
}

struct ZImageResult {
  SaturationResult saturation;
  std::vector<Int> divisors;  // Smith form of the generated sublattice (zeros last)
  std::size_t rank = 0;
  std::size_t dim = 0;
  std::size_t matrices = 0;  // distinct group elements whose images were used
  std::string note = "lower bound on image lattice - not a completeness proof";
};

/// Lattice spanned by gamma_d of all words of length <= word_len in
/// `generators` (one batch per word length). Only a lower bound for the
/// image of phi over Z.
inline ZImageResult z_image_saturate(int n, int d, int word_len, const std::vector<Mat2>& generators,
                                     std::size_t rounds_stable = 2) {
  if (n != 2) fail(Errc::bad_parameters, "word enumeration is implemented for n = 2");
  if (generators.empty()) fail(Errc::empty_stream, "no generators");
  if (word_len < 1) fail(Errc::bad_parameters, "word length must be >= 1");
  check_guard(word_len, 12, "word length");
  auto s = build_schur(Ring::integers(), n, d);
  std::set<Mat2> seen{Mat2{1, 0, 0, 1}};
  std::vector<Mat2> frontier{Mat2{1, 0, 0, 1}};
  int level = 0;
  std::size_t matrices = 0;
  auto to_batch = [&](const std::vector<Mat2>& mats) {
    std::vector<IntVec> batch;
    for (const auto& m : mats) {
      Matrix<Int> g(2, 2);
      for (std::size_t k = 0; k < 4; ++k) g(k / 2, k % 2) = m[k];
      batch.push_back(phi_integer(g, *s));
    }
    matrices += mats.size();
    return batch;
  };
  BatchSource source = [&]() -> std::optional<std::vector<IntVec>> {
    if (level == 0) {
      ++level;
      return to_batch(frontier);
    }
    if (level > word_len) return std::nullopt;
    ++level;
    std::vector<Mat2> next;
    for (const auto& m : frontier)
      for (const auto& g : generators) {
        Mat2 p{m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3], m[2] * g[0] + m[3] * g[2],
               m[2] * g[1] + m[3] * g[3]};
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
    return to_batch(frontier);
  };
  ZImageResult out;
  out.saturation = span_saturate(source, rounds_stable);
  out.dim = s->dim();
  out.rank = out.saturation.hnf_basis.rows();
  out.matrices = matrices;
  Matrix<Int> padded(out.dim, out.dim, Int(0));
  for (std::size_t i = 0; i < out.rank; ++i)
    for (std::size_t j = 0; j < out.dim; ++j) padded(i, j) = out.saturation.hnf_basis(i, j);
  out.divisors = snf(padded).divisors;
  return out;
}

inline ZImageResult z_image_saturate(int n, int d, int word_len) {
  return z_image_saturate(n, d, word_len, gl2z_generators());
}

struct SweepRow {
  std::int64_t q = 0;
  int n = 0;
  int d = 0;
  std::optional<std::size_t> dimS, rank;
  std::optional<bool> surjective, is_epi;
  std::string note;  // why a field is missing, if any
};

inline SweepRow sweep_cell(std::int64_t q, int n, int d) {
  SweepRow row{q, n, d, {}, {}, {}, {}, {}};
  try {
    PhiContext ctx = make_phi_context(Ring::finite_field(q), n, d);
    row.dimS = ctx.schur()->dim();
    auto ir = image_rank(ctx);
    row.rank = ir.rank;
    row.surjective = ir.surjective;
    row.is_epi = epi_test(ctx).is_epi;
  } catch (const Error& e) {
    row.note = e.what();
  }
  return row;
}

/// One row per (q, n, d), q outermost, in input order.
inline std::vector<SweepRow> threshold_sweep(const std::vector<std::int64_t>& q_list,
                                             const std::vector<int>& n_list,
                                             const std::vector<int>& d_list) {
  std::vector<SweepRow> rows;
  for (auto q : q_list)
    for (int n : n_list)
      for (int d : d_list) rows.push_back(sweep_cell(q, n, d));
  return rows;
}

/// Violations of: q > d implies surjective (Benson-Doty), and surjective
/// implies epimorphism.
inline std::vector<std::string> sweep_violations(const std::vector<SweepRow>& rows) {
  std::vector<std::string> out;
  for (const auto& r : rows) {
    std::string cell = "q=" + std::to_string(r.q) + " n=" + std::to_string(r.n) + " d=" + std::to_string(r.d);
    if (r.q > r.d && !(r.surjective && *r.surjective))
      out.push_back(cell + ": q > d but surjectivity not established" + (r.note.empty() ? "" : " (" + r.note + ")"));
    if (r.surjective && *r.surjective && r.is_epi && !*r.is_epi)
      out.push_back(cell + ": surjective but not an epimorphism");
  }
  return out;
}

}  // namespace swlab
