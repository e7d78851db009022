#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "swlab/polyrep.hpp"
#include "test_util.hpp"

using namespace swlab;

namespace {
const Ring F2 = Ring::prime_field(2);
const Ring F3 = Ring::prime_field(3);

PolynomialMatrixSpec determinant_polynomial(const Ring& k) {
  return {k, 2, 2, 1, {{1, 1, {{{{1, 1, 1}, {2, 2, 1}}, 1}, {{{1, 2, 1}, {2, 1, 1}}, k.neg(1)}}}}};
}

// P L_a P^-1 for the swap-of-first-two-coordinates P: another module structure.
SModule conjugated(const SModule& m) {
  const auto v = static_cast<std::size_t>(m.dimV);
  Matrix<Elem> p = identity_matrix(v);
  p(0, 0) = p(1, 1) = 0;
  p(0, 1) = p(1, 0) = 1;
  SModule out{m.schur, m.dimV, {}};
  for (const auto& a : m.action) out.action.push_back(multiply(m.schur->ring(), multiply(m.schur->ring(), p, a), p));
  return out;
}
}  // namespace

TEST(Polynomials, DeterminantToCoefficients) {
  auto spec = coeffs_of_polynomials(determinant_polynomial(F3));
  MultisetBasis b(4, 2);
  for (std::size_t i = 0; i < b.size(); ++i) {
    Elem expect = b[i] == MultisetIndex{1, 0, 0, 1} ? 1 : b[i] == MultisetIndex{0, 1, 1, 0} ? 2 : 0;
    EXPECT_EQ(spec.family.family[i], Vec{expect});
  }
  EXPECT_EQ(spec, determinant_rep(F3, 2, 2));
}

TEST(Polynomials, IdentityEntriesGiveTheDefiningRep) {
  PolynomialMatrixSpec p{F2, 2, 1, 2, {}};
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) p.entries.push_back({i, j, {{{{i, j, 1}}, 1}}});
  auto spec = coeffs_of_polynomials(p);
  EXPECT_EQ(spec, defining_rep(F2, 2, 1));
  auto gl = enumerate_gl(F2, 2);
  for (std::size_t i = 0; i < gl.order(); ++i) EXPECT_EQ(evaluate(spec, gl.element(i)), gl.element(i));
}

TEST(Polynomials, ZeroPolynomialsGiveZeroFamily) {
  auto spec = coeffs_of_polynomials({F3, 2, 2, 2, {}});
  for (const auto& y : spec.family.family) EXPECT_EQ(y, Vec(4, 0));
  EXPECT_TRUE(polynomials_of_coeffs(spec).entries.empty());
}

TEST(Polynomials, RoundTripBothWays) {
  auto canonical = polynomials_of_coeffs(coeffs_of_polynomials(determinant_polynomial(F3)));
  EXPECT_EQ(canonical, determinant_polynomial(F3));
  for (const auto& spec : {tensor_power_rep(F2, 2, 2), determinant_rep(F3, 2, 2), defining_rep(F3, 2, 1)}) {
    auto poly = polynomials_of_coeffs(spec);
    EXPECT_EQ(coeffs_of_polynomials(poly), spec);
    EXPECT_EQ(polynomials_of_coeffs(coeffs_of_polynomials(poly)), poly);
  }
}

TEST(Polynomials, DuplicateMonomialsAreSummed) {
  PolynomialMatrixSpec p{F3, 1, 2, 1, {{1, 1, {{{{1, 1, 2}}, 1}, {{{1, 1, 1}, {1, 1, 1}}, 1}}}}};
  EXPECT_EQ(coeffs_of_polynomials(p).family.family[0], Vec{2});
}

TEST(Polynomials, Errors) {
  PolynomialMatrixSpec p{F3, 2, 2, 1, {{1, 1, {{{{1, 1, 1}}, 1}}}}};
  EXPECT_ERRC(coeffs_of_polynomials(p), Errc::not_homogeneous);
  p.entries[0].monomials[0].exps = {{3, 1, 2}};
  EXPECT_ERRC(coeffs_of_polynomials(p), Errc::out_of_range);
  p.entries[0] = {2, 1, {}};
  EXPECT_ERRC(coeffs_of_polynomials(p), Errc::out_of_range);
}

TEST(Builtins, Examples) {
  auto def = defining_rep(F2, 2, 1);
  MultisetBasis b(4, 1);
  for (std::size_t sym = 0; sym < 4; ++sym) {
    MultisetIndex nu(4, 0);
    nu[sym] = 1;
    Matrix<Elem> e(2, 2, 0);
    e(sym / 2, sym % 2) = 1;
    EXPECT_EQ(family_matrix(def, b.index_of(nu)), e);
  }
  auto tp = tensor_power_rep(F2, 2, 2);
  auto gl = enumerate_gl(F2, 2);
  for (std::size_t i = 0; i < gl.order(); ++i) EXPECT_EQ(evaluate(tp, gl.element(i)), kronecker(F2, gl.element(i), gl.element(i)));
  EXPECT_EQ(evaluate(determinant_rep(F3, 2, 2), Matrix<Elem>{{1, 1}, {0, 1}}), Matrix<Elem>(1, 1, 1));
  EXPECT_ERRC(determinant_rep(F3, 2, 3), Errc::bad_parameters);
  EXPECT_ERRC(defining_rep(F3, 2, 2), Errc::bad_parameters);
  EXPECT_ERRC(builtin_rep("sym", F3, 2, 2), Errc::bad_parameters);
  EXPECT_EQ(builtin_rep("determinant", F3, 2, 2), determinant_rep(F3, 2, 2));
}

TEST(Builtins, DeterminantOfThreeByThree) {
  auto spec = determinant_rep(F2, 3, 3);
  auto gl = enumerate_gl(F2, 3);
  for (std::size_t i = 0; i < gl.order(); ++i) EXPECT_EQ(evaluate(spec, gl.element(i)), Matrix<Elem>(1, 1, 1));
  EXPECT_EQ(evaluate(spec, Matrix<Elem>(3, 3, 1)), Matrix<Elem>(1, 1, 0));
}

TEST(GroupHom, Examples) {
  auto gl3 = enumerate_gl(F3, 2);
  GroupRep def{gl3, 2, {}};
  for (std::size_t i = 0; i < gl3.order(); ++i) def.matrices.push_back(gl3.element(i));
  auto r = is_group_hom(def);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.exhaustive);
  EXPECT_EQ(r.pairs_checked, 48u * 48u);

  auto gl2 = enumerate_gl(F2, 2);
  GroupRep tensor{gl2, 4, {}};
  for (std::size_t i = 0; i < gl2.order(); ++i) tensor.matrices.push_back(kronecker(F2, gl2.element(i), gl2.element(i)));
  EXPECT_TRUE(is_group_hom(tensor).ok);
  EXPECT_EQ(is_group_hom(tensor).pairs_checked, 36u);

  auto broken = def;
  std::size_t victim = gl3.identity_index() == 0 ? 1 : 0;
  broken.matrices[victim] = Matrix<Elem>(2, 2, 0);
  auto b = is_group_hom(broken);
  EXPECT_FALSE(b.ok);
  ASSERT_TRUE(b.witness);
  auto [g, h] = *b.witness;
  EXPECT_NE(multiply(F3, broken.matrices[g], broken.matrices[h]), broken.matrices[gl3.multiply(g, h)]);

  auto no_unit = def;
  no_unit.matrices[gl3.identity_index()] = Matrix<Elem>(2, 2, 0);
  EXPECT_TRUE(is_group_hom(no_unit).identity_failed);
}

TEST(GroupHom, LargeGroupsAreSampledDeterministically) {
  Ring f5 = Ring::prime_field(5);
  auto gl = enumerate_gl(f5, 2);
  GroupRep def{gl, 2, {}};
  for (std::size_t i = 0; i < gl.order(); ++i) def.matrices.push_back(gl.element(i));
  auto r = is_group_hom(def);
  EXPECT_TRUE(r.ok);
  EXPECT_FALSE(r.exhaustive);
  EXPECT_EQ(r.pairs_checked, 10000u);
}

TEST(Restriction, RegularModuleOfF3) {
  auto s = build_schur(F3, 2, 2);
  auto m = regular_module(s);
  EXPECT_FALSE(module_violation(m));
  auto res = restrict_smodule(m);
  EXPECT_EQ(res.rep.dimV, 10);
  EXPECT_EQ(res.rep.group.order(), 48u);
  auto h = is_group_hom(res.rep);
  EXPECT_TRUE(h.ok);
  EXPECT_TRUE(h.exhaustive);
  EXPECT_FALSE(certificate_mismatch(res.rep, res.certificate));
}

TEST(Restriction, TensorModuleGivesKroneckerSquare) {
  auto s = build_schur(F2, 2, 2);
  auto res = restrict_smodule(tensor_module(s));
  for (std::size_t i = 0; i < res.rep.group.order(); ++i) {
    auto g = res.rep.group.element(i);
    std::vector<oracle::Row> og{{g(0, 0), g(0, 1)}, {g(1, 0), g(1, 1)}};
    auto k = oracle::kron_power(og, 2, 2);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(res.rep.matrices[i](r, c), k[r][c]);
  }
}

TEST(Restriction, DefiningModuleGivesTheGroup) {
  auto m = *lift_polyrep(defining_rep(F3, 2, 1)).module;
  auto res = restrict_smodule(m);
  for (std::size_t i = 0; i < res.rep.group.order(); ++i) EXPECT_EQ(res.rep.matrices[i], res.rep.group.element(i));
}

TEST(Restriction, CertificatesHoldForEveryBuiltinModule) {
  for (const auto& k : {F2, F3}) {
    auto s = build_schur(k, 2, 2);
    for (const auto& m : {regular_module(s), tensor_module(s), determinant_module(s)}) {
      auto res = restrict_smodule(m);
      EXPECT_FALSE(certificate_mismatch(res.rep, res.certificate));
      EXPECT_TRUE(is_group_hom(res.rep).ok);
      auto lifted = lift_polyrep(res.certificate);
      ASSERT_TRUE(lifted.module);
      EXPECT_EQ(*lifted.module, m);
    }
  }
}

TEST(Restriction, FaithfulOnDistinctModulesOverF3) {
  auto s = build_schur(F3, 2, 2);
  auto m1 = regular_module(s), m2 = conjugated(m1);
  ASSERT_FALSE(module_violation(m2));
  ASSERT_NE(m1, m2);
  auto r1 = restrict_smodule(m1), r2 = restrict_smodule(m2);
  EXPECT_NE(r1.rep.matrices, r2.rep.matrices);
}

TEST(Lift, DeterminantSucceeds) {
  for (const auto& k : {F2, F3, Ring::prime_field(5)}) {
    auto lifted = lift_polyrep(determinant_rep(k, 2, 2));
    ASSERT_TRUE(lifted.module);
    EXPECT_EQ(lifted.module->dimV, 1);
  }
}

TEST(Lift, TamperedFamilyIsObstructed) {
  auto spec = tensor_power_rep(F3, 2, 2);
  spec.family.family[1][0] = F3.add(spec.family.family[1][0], 1);  // off the unit's support
  auto lifted = lift_polyrep(spec);
  EXPECT_FALSE(lifted.module);
  ASSERT_TRUE(lifted.obstruction);
  EXPECT_FALSE(lifted.obstruction->unit);
  // The named pair really is violated.
  auto s = build_schur(F3, 2, 2);
  auto [a, b] = std::pair{lifted.obstruction->a, lifted.obstruction->b};
  Matrix<Elem> rhs(4, 4, 0);
  for (const auto& t : s->product(a, b))
    rhs = add(F3, rhs, scale(F3, F3.from_int(t.coeff), family_matrix(spec, t.index)));
  EXPECT_NE(multiply(F3, family_matrix(spec, a), family_matrix(spec, b)), rhs);
}

TEST(Lift, BrokenUnitIsReported) {
  auto spec = defining_rep(F3, 2, 1);
  spec.family.family[0][0] = 2;  // Y_(E11) now has a 2 in position (1,1)
  auto lifted = lift_polyrep(spec);
  ASSERT_TRUE(lifted.obstruction);
  EXPECT_TRUE(lifted.obstruction->unit);
}

TEST(Roundtrip, Examples) {
  auto reg = roundtrip_check(regular_module(build_schur(F3, 2, 2)));
  EXPECT_TRUE(reg.equal);
  EXPECT_TRUE(reg.surjective);
  EXPECT_TRUE(reg.unique);

  auto ten = roundtrip_check(tensor_module(build_schur(F2, 2, 2)));
  EXPECT_TRUE(ten.equal);
  EXPECT_FALSE(ten.surjective);
  EXPECT_EQ(ten.phi_rank, 6u);

  auto det = roundtrip_check(determinant_module(build_schur(F3, 2, 2)));
  EXPECT_TRUE(det.equal);
  EXPECT_TRUE(det.certificate_ok);
}

TEST(Roundtrip, DegreeZero) {
  auto s = build_schur(F3, 2, 0);
  auto r = roundtrip_check(regular_module(s));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.surjective);
}

TEST(Roundtrip, NeedsAField) {
  EXPECT_ERRC(roundtrip_check(regular_module(build_schur(Ring::int_mod(4), 2, 1))), Errc::not_a_field);
}
