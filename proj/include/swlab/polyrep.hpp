#pragma once

// Degree-d polynomial representations of GL_k(n) and modules over S_k(n,d):
// the polynomial-entry format, the coefficient-family format, restriction of
// modules along phi, and lifting of coefficient families back to modules.
//
// A family Y assigns to each multiset index nu over the symbols E_rs a
// dimV x dimV matrix (stored row-major); it represents
// x |-> sum_nu x^nu Y_nu with x^nu = prod x_rs^{nu_rs}. In the entry format
// f_ij is entry (i, j) of that matrix, so the identity polynomials f_ij = X_ij
// give the defining representation.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swlab/canonical_map.hpp"

namespace swlab {

struct PolyRepSpec {
  Ring ring;
  int n = 0;
  int d = 0;
  int dimV = 0;
  PolyMapSpec family;  // dimM = n^2, dimN = dimV^2

  bool operator==(const PolyRepSpec& o) const {
    return ring == o.ring && n == o.n && d == o.d && dimV == o.dimV && family.family == o.family.family;
  }
};

inline PolyRepSpec make_polyrep(const Ring& ring, int n, int d, int dimV, std::vector<Matrix<Elem>> ys) {
  PolyRepSpec spec{ring, n, d, dimV, {ring, n * n, d, dimV * dimV, {}}};
  for (auto& y : ys) {
    if (y.rows() != static_cast<std::size_t>(dimV) || y.cols() != static_cast<std::size_t>(dimV))
      fail(Errc::dimension_mismatch, "Y_nu must be dimV x dimV");
    spec.family.family.push_back(y.data());
  }
  validate(spec.family);
  return spec;
}

inline Matrix<Elem> family_matrix(const PolyRepSpec& spec, std::size_t idx) {
  const auto v = static_cast<std::size_t>(spec.dimV);
  Matrix<Elem> m(v, v);
  std::copy(spec.family.family[idx].begin(), spec.family.family[idx].end(), m.data().begin());
  return m;
}

/// sum_nu g^nu Y_nu.
inline Matrix<Elem> evaluate(const PolyRepSpec& spec, const Matrix<Elem>& g) {
  const auto v = static_cast<std::size_t>(spec.dimV);
  Vec flat = poly_eval(spec.family, g.data());
  Matrix<Elem> m(v, v);
  std::copy(flat.begin(), flat.end(), m.data().begin());
  return m;
}

struct Monomial {
  std::vector<std::array<int, 3>> exps;  // (r, s, e): X_rs^e, r and s 1-based
  Elem coeff = 0;
  bool operator==(const Monomial&) const = default;
};

struct PolyEntry {
  int i = 0;  // 1-based
  int j = 0;
  std::vector<Monomial> monomials;
  bool operator==(const PolyEntry&) const = default;
};

struct PolynomialMatrixSpec {
  Ring ring;
  int n = 0;
  int d = 0;
  int dimV = 0;
  std::vector<PolyEntry> entries;

  bool operator==(const PolynomialMatrixSpec& o) const {
    return ring == o.ring && n == o.n && d == o.d && dimV == o.dimV && entries == o.entries;
  }
};

inline PolyRepSpec coeffs_of_polynomials(const PolynomialMatrixSpec& spec) {
  MultisetBasis basis(spec.n * spec.n, spec.d);
  const auto v = static_cast<std::size_t>(spec.dimV);
  std::vector<Matrix<Elem>> ys(basis.size(), Matrix<Elem>(v, v, 0));
  for (const auto& entry : spec.entries) {
    if (entry.i < 1 || entry.i > spec.dimV || entry.j < 1 || entry.j > spec.dimV)
      fail(Errc::out_of_range, "entry (" + std::to_string(entry.i) + "," + std::to_string(entry.j) + ")");
    for (const auto& mono : entry.monomials) {
      MultisetIndex nu(static_cast<std::size_t>(spec.n * spec.n), 0);
      int degree = 0;
      for (auto [r, s, e] : mono.exps) {
        if (r < 1 || r > spec.n || s < 1 || s > spec.n || e < 0)
          fail(Errc::out_of_range, "variable X_" + std::to_string(r) + std::to_string(s));
        nu[static_cast<std::size_t>((r - 1) * spec.n + (s - 1))] += e;
        degree += e;
      }
      if (degree != spec.d)
        fail(Errc::not_homogeneous, "entry (" + std::to_string(entry.i) + "," + std::to_string(entry.j) +
                                        ") has a monomial of degree " + std::to_string(degree));
      auto& y = ys[basis.index_of(nu)](static_cast<std::size_t>(entry.i - 1), static_cast<std::size_t>(entry.j - 1));
      y = spec.ring.add(y, mono.coeff);
    }
  }
  return make_polyrep(spec.ring, spec.n, spec.d, spec.dimV, std::move(ys));
}

/// Canonical entry format: nonzero entries in row-major order, monomials in
/// basis order, variables ascending in (r, s).
inline PolynomialMatrixSpec polynomials_of_coeffs(const PolyRepSpec& spec) {
  MultisetBasis basis(spec.n * spec.n, spec.d);
  PolynomialMatrixSpec out{spec.ring, spec.n, spec.d, spec.dimV, {}};
  const auto v = static_cast<std::size_t>(spec.dimV);
  for (std::size_t i = 0; i < v; ++i)
    for (std::size_t j = 0; j < v; ++j) {
      PolyEntry entry{static_cast<int>(i + 1), static_cast<int>(j + 1), {}};
      for (std::size_t idx = 0; idx < basis.size(); ++idx) {
        Elem c = spec.family.family[idx][i * v + j];
        if (c == 0) continue;
        Monomial mono{{}, c};
        for (std::size_t sym = 0; sym < basis[idx].size(); ++sym)
          if (basis[idx][sym] > 0)
            mono.exps.push_back({static_cast<int>(sym) / spec.n + 1, static_cast<int>(sym) % spec.n + 1, basis[idx][sym]});
        entry.monomials.push_back(std::move(mono));
      }
      if (!entry.monomials.empty()) out.entries.push_back(std::move(entry));
    }
  return out;
}

struct SModule {
  SchurPtr schur;
  int dimV = 0;
  std::vector<Matrix<Elem>> action;  // one per orbit basis element

  bool operator==(const SModule& o) const {
    return schur->same_as(*o.schur) && dimV == o.dimV && action == o.action;
  }
};

/// Action of a general element: sum_a x_a action(a).
inline Matrix<Elem> act(const SModule& m, const Vec& x) {
  const Ring& ring = m.schur->ring();
  const auto v = static_cast<std::size_t>(m.dimV);
  Matrix<Elem> out(v, v, 0);
  for (std::size_t a = 0; a < x.size(); ++a)
    if (x[a] != 0) detail::axpy(ring, out.data(), x[a], m.action[a].data());
  return out;
}

struct Obstruction {
  std::size_t a = 0;
  std::size_t b = 0;
  bool unit = false;  // the unit law failed rather than a product
  std::string message;
};

/// First failure of action(a) action(b) = sum_c c_ab^c action(c) or of the
/// unit law.
inline std::optional<Obstruction> module_violation(const SModule& m) {
  const SchurAlgebra& s = *m.schur;
  const Ring& ring = s.ring();
  const auto v = static_cast<std::size_t>(m.dimV);
  if (m.action.size() != s.dim()) fail(Errc::dimension_mismatch, "one action matrix per basis element");
  if (!(act(m, s.unit()) == identity_matrix(v))) return Obstruction{0, 0, true, "unit acts as a non-identity"};
  for (std::size_t a = 0; a < s.dim(); ++a)
    for (std::size_t b = 0; b < s.dim(); ++b) {
      Matrix<Elem> rhs(v, v, 0);
      for (const auto& t : s.product(a, b)) detail::axpy(ring, rhs.data(), ring.from_int(t.coeff), m.action[t.index].data());
      if (!(multiply(ring, m.action[a], m.action[b]) == rhs))
        return Obstruction{a, b, false, "product of basis elements " + std::to_string(a) + " and " + std::to_string(b) +
                                            " is not respected"};
    }
  return std::nullopt;
}

struct GroupRep {
  GlGroup group;
  int dimV = 0;
  std::vector<Matrix<Elem>> matrices;  // by group index
};

struct Restriction {
  GroupRep rep;
  PolyRepSpec certificate;  // Y_nu = action(nu); evaluates to rep at every g
};

inline Restriction restrict_smodule(const SModule& m) {
  const SchurPtr& s = m.schur;
  PhiContext ctx(enumerate_gl(s->ring(), s->n()), s);
  GroupRep rep{ctx.group(), m.dimV, {}};
  for (std::size_t i = 0; i < ctx.group().order(); ++i) rep.matrices.push_back(act(m, ctx.image(i).coeffs));
  return {std::move(rep), make_polyrep(s->ring(), s->n(), s->d(), m.dimV, m.action)};
}

/// First group element at which the certificate disagrees with the rep.
inline std::optional<std::size_t> certificate_mismatch(const GroupRep& rep, const PolyRepSpec& cert) {
  for (std::size_t i = 0; i < rep.group.order(); ++i)
    if (!(evaluate(cert, rep.group.element(i)) == rep.matrices[i])) return i;
  return std::nullopt;
}

struct LiftResult {
  std::optional<SModule> module;
  std::optional<Obstruction> obstruction;
};

/// The module with action(orbit_nu) = Y_nu, if that is an algebra map.
inline LiftResult lift_polyrep(const PolyRepSpec& spec) {
  validate(spec.family);
  SModule m{build_schur(spec.ring, spec.n, spec.d), spec.dimV, {}};
  for (std::size_t idx = 0; idx < spec.family.family.size(); ++idx) m.action.push_back(family_matrix(spec, idx));
  if (auto bad = module_violation(m)) return {std::nullopt, bad};
  return {std::move(m), std::nullopt};
}

struct HomCheck {
  bool ok = true;
  std::size_t pairs_checked = 0;
  bool exhaustive = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (g, h) with rho(g) rho(h) != rho(gh)
  bool identity_failed = false;
};

inline HomCheck is_group_hom(const GroupRep& rep, std::uint64_t seed = 20240601) {
  const GlGroup& g = rep.group;
  const Ring& ring = g.ring();
  HomCheck out;
  if (!(rep.matrices[g.identity_index()] == identity_matrix(static_cast<std::size_t>(rep.dimV)))) {
    out.ok = false;
    out.identity_failed = true;
    return out;
  }
  auto check = [&](std::size_t i, std::size_t j) {
    ++out.pairs_checked;
    if (!(multiply(ring, rep.matrices[i], rep.matrices[j]) == rep.matrices[g.multiply(i, j)])) {
      out.ok = false;
      out.witness = {i, j};
    }
    return out.ok;
  };
  const std::size_t order = g.order();
  if (order * order <= 10000) {
    out.exhaustive = true;
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        if (!check(i, j)) return out;
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, order - 1);
    for (int k = 0; k < 10000; ++k)
      if (!check(pick(rng), pick(rng))) return out;
  }
  return out;
}

struct RoundtripReport {
  bool lift_ok = false;
  bool equal = false;
  bool unique = true;  // the lift is determined by the certificate: h(orbit_nu) = Y_nu
  bool certificate_ok = false;
  bool surjective = false;  // phi onto S, for context
  std::size_t phi_rank = 0;
};

inline RoundtripReport roundtrip_check(const SModule& m) {
  detail::require_field(m.schur->ring());
  auto res = restrict_smodule(m);
  RoundtripReport r;
  r.certificate_ok = !certificate_mismatch(res.rep, res.certificate);
  auto lifted = lift_polyrep(res.certificate);
  r.lift_ok = lifted.module.has_value();
  r.equal = r.lift_ok && *lifted.module == m;
  auto ir = image_rank(PhiContext(res.rep.group, m.schur));
  r.surjective = ir.surjective;
  r.phi_rank = ir.rank;
  return r;
}

inline PolyRepSpec tensor_power_rep(const Ring& ring, int n, int d) {
  auto s = build_schur(ring, n, d);
  std::vector<Matrix<Elem>> ys;
  for (std::size_t a = 0; a < s->dim(); ++a) ys.push_back(embed_to_end(schur_basis_element(s, a)));
  return make_polyrep(ring, n, d, static_cast<int>(s->tensor_dim()), std::move(ys));
}

/// det = sum_sigma sgn(sigma) prod_i X_{i,sigma(i)}; distinct sigma give
/// distinct monomials.
inline PolyRepSpec determinant_rep(const Ring& ring, int n, int d) {
  if (d != n) fail(Errc::bad_parameters, "the determinant has degree n");
  MultisetBasis basis(n * n, d);
  std::vector<Matrix<Elem>> ys(basis.size(), Matrix<Elem>(1, 1, 0));
  for (const auto& sigma : all_perms(n)) {
    std::vector<int> symbols;
    int inversions = 0;
    for (int i = 1; i <= n; ++i) {
      symbols.push_back((i - 1) * n + sigma(i) - 1);
      for (int j = i + 1; j <= n; ++j)
        if (sigma(i) > sigma(j)) ++inversions;
    }
    ys[basis.index_of(content(symbols, n * n))](0, 0) = inversions % 2 ? ring.neg(ring.one()) : ring.one();
  }
  return make_polyrep(ring, n, d, 1, std::move(ys));
}

inline PolyRepSpec defining_rep(const Ring& ring, int n, int d) {
  if (d != 1) fail(Errc::bad_parameters, "the defining representation has degree 1");
  MultisetBasis basis(n * n, 1);
  const auto nn = static_cast<std::size_t>(n);
  std::vector<Matrix<Elem>> ys(basis.size(), Matrix<Elem>(nn, nn, 0));
  for (std::size_t sym = 0; sym < nn * nn; ++sym) {
    MultisetIndex nu(nn * nn, 0);
    nu[sym] = 1;
    ys[basis.index_of(nu)](sym / nn, sym % nn) = ring.one();
  }
  return make_polyrep(ring, n, 1, n, std::move(ys));
}

inline PolyRepSpec builtin_rep(const std::string& name, const Ring& ring, int n, int d) {
  if (name == "tensor_power") return tensor_power_rep(ring, n, d);
  if (name == "determinant") return determinant_rep(ring, n, d);
  if (name == "defining") return defining_rep(ring, n, d);
  fail(Errc::bad_parameters, "unknown representation " + name);
}

/// S acting on itself by left multiplication: L_a[c][b] = c_ab^c.
inline SModule regular_module(const SchurPtr& s) {
  const Ring& ring = s->ring();
  SModule m{s, static_cast<int>(s->dim()), {}};
  for (std::size_t a = 0; a < s->dim(); ++a) {
    Matrix<Elem> l(s->dim(), s->dim(), 0);
    for (std::size_t b = 0; b < s->dim(); ++b)
      for (const auto& t : s->product(a, b)) l(t.index, b) = ring.from_int(t.coeff);
    m.action.push_back(std::move(l));
  }
  return m;
}

/// E^(x)d with S acting through its embedding into End(E^(x)d).
inline SModule tensor_module(const SchurPtr& s) {
  SModule m{s, static_cast<int>(s->tensor_dim()), {}};
  for (std::size_t a = 0; a < s->dim(); ++a) m.action.push_back(embed_to_end(schur_basis_element(s, a)));
  return m;
}

inline SModule determinant_module(const SchurPtr& s) {
  auto lifted = lift_polyrep(determinant_rep(s->ring(), s->n(), s->d()));
  if (!lifted.module) fail(Errc::bad_parameters, "determinant does not lift: " + lifted.obstruction->message);
  return *lifted.module;
}

}  // namespace swlab
