#include <random>

#include "bimult/fourier.hpp"
#include "doctest.h"

using namespace bimult;

namespace {

SkewMatrix single(const SkewPoly& f) {
  SkewMatrix m(f.field(), 1, 1);
  m.at(0, 0) = f;
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("fourier");

TEST_CASE("constants for F - 1: r = 0, r' = 1, scalars -1 and -1/3") {
  Field F3 = Field::create(3, 1);
  SkewPoly f = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  ConstantsReport c = constants(single(f));
  REQUIRE(c.has_scalars);
  CHECK(c.d == 1);
  CHECK(c.r == 0);
  CHECK(c.r_prime == 1);
  CHECK(c.scalar_forward(3) == mpq_class(-1));
  CHECK(c.scalar_backward(3) == mpq_class(-1, 3));
}

TEST_CASE("constants for unit monomials: r = -m, r' = m, product 1") {
  Field F3 = Field::create(3, 1);
  for (long m : {-2L, 1L, 3L}) {
    ConstantsReport c = constants(single(SkewPoly::phi_power(F3, m)));
    REQUIRE(c.has_scalars);
    CHECK(c.r == -m);
    CHECK(c.r_prime == m);
    CHECK(c.pi0_dim == 0);
  }
}

TEST_CASE("symmetric f = Phi + Phi^-1: r = r' = 1 and |pi0| = p^2") {
  Field F2 = Field::create(2, 1);
  SkewPoly f = SkewPoly::phi_power(F2, 1) + SkewPoly::phi_power(F2, -1);
  ConstantsReport c = constants(single(f));
  REQUIRE(c.has_scalars);
  CHECK(c.r == 1);
  CHECK(c.r_prime == 1);
  CHECK(c.pi0_dim == 2);
}

TEST_CASE("zero polynomial: trivial constants and identity matrices") {
  Field F3 = Field::create(3, 1);
  FourierSetting s = analyze_setting(single(SkewPoly::zero(F3)));
  REQUIRE(s.consts.has_scalars);
  CHECK(s.consts.d == 0);
  CHECK(s.consts.r == 0);
  CHECK(s.consts.r_prime == 0);
  CycloMatrix fwd = change_of_basis(s, CobDirection::Y_from_X, true);
  CHECK(fwd == CycloMatrix::identity(3, 1));
  CycloMatrix bwd = change_of_basis(s, CobDirection::X_from_Y, true);
  CHECK(bwd == CycloMatrix::identity(3, 1));
  CHECK(s.dims.D == 2);
}

TEST_CASE("pinned worked instance: forward matrix is -(zeta^(ab))") {
  Field F3 = Field::create(3, 1);
  SkewPoly f = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  FourierSetting s = analyze_setting(single(f));
  CycloMatrix fwd = change_of_basis(s, CobDirection::Y_from_X, true);
  REQUIRE(fwd.rows() == 3);
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) {
      long a = s.table.left_labels[i][0].prime_residue();
      long b = s.table.right_labels[j][0].prime_residue();
      CHECK(fwd.at(i, j) == -psi(3, a * b));
    }
  InversionCertificate inv = verify_inversion(s);
  CHECK(inv.unscaled_ok);
  CHECK(inv.scaled_available);
  CHECK(inv.scaled_ok);
  // (zeta^(ab))(zeta^(-ab))^T = 3I and (-1)(-1/3) * 3I = I
  CycloMatrix bwd = change_of_basis(s, CobDirection::X_from_Y, true);
  CHECK(fwd * bwd == CycloMatrix::identity(3, 3));
}

TEST_CASE("1x1 scalar case for unit monomials: forward = (-p^m)") {
  Field F3 = Field::create(3, 1);
  for (long m : {1L, 2L}) {
    FourierSetting s = analyze_setting(single(SkewPoly::phi_power(F3, m)));
    CycloMatrix fwd = change_of_basis(s, CobDirection::Y_from_X, true);
    long pm = 1;
    for (long i = 0; i < m; ++i) pm *= 3;
    CHECK(fwd.at(0, 0) == CycloElem::from_rational(3, -pm));
    CycloMatrix bwd = change_of_basis(s, CobDirection::X_from_Y, true);
    CHECK(fwd * bwd == CycloMatrix::identity(3, 1));
  }
}

TEST_CASE("block-diagonal tensor structure with summed constants") {
  Field F2 = Field::create(2, 1);
  SkewPoly as = SkewPoly::phi_power(F2, 1) - SkewPoly::constant(F2, F2.one());
  SkewMatrix D(F2, 2, 2);
  D.at(0, 0) = as;
  D.at(1, 1) = as;
  FourierSetting s = analyze_setting(D);
  REQUIRE(s.consts.has_scalars);
  CHECK(s.consts.d == 2);
  CHECK(s.consts.r == 0);
  CHECK(s.consts.r_prime == 2);
  CycloMatrix fwd = change_of_basis(s, CobDirection::Y_from_X, true);
  REQUIRE(fwd.rows() == 4);
  // sign (+1) = (-1)(-1); entries are the products of the 2x2 blocks
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j) {
      long b = 0;
      for (long c = 0; c < 2; ++c)
        b += s.table.left_labels[i][c].prime_residue() *
             s.table.right_labels[j][c].prime_residue();
      CHECK(fwd.at(i, j) == psi(2, b));
    }
  CHECK(verify_inversion(s).scaled_ok);
}

TEST_CASE("general matrices emit only model-free identities") {
  Field F3 = Field::create(3, 1);
  SkewMatrix F(F3, 2, 2);
  F.at(0, 0) = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  F.at(0, 1) = SkewPoly::constant(F3, F3.one());
  F.at(1, 1) = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  FourierSetting s = analyze_setting(F);
  CHECK_FALSE(s.consts.has_scalars);
  CHECK_THROWS_AS(change_of_basis(s, CobDirection::Y_from_X, true), ModelDependentUnsupported);
  CycloMatrix un = change_of_basis(s, CobDirection::Y_from_X, false);
  CHECK(un.rows() == s.table.left_size());
  InversionCertificate inv = verify_inversion(s);
  CHECK(inv.unscaled_ok);
  CHECK_FALSE(inv.scaled_available);
}

TEST_CASE("inversion certificate on random single polynomials") {
  std::mt19937_64 rng(67);
  for (long p : {2L, 3L, 5L}) {
    Field Fp = Field::create(p, 1);
    int done = 0;
    while (done < 6) {
      std::map<long, FFElem> t;
      for (long k = -2; k <= 2; ++k)
        if (rng() % 2) t.emplace(k, Fp.from_int(static_cast<long>(rng() % p)));
      SkewPoly f(Fp, t);
      if (f.is_zero() || f.span() > 3) continue;
      KernelData probe = etale_kernel(f, false);
      if (probe.definition_degree * Fp.n() >
          static_cast<unsigned long long>(limits().max_dense_dim))
        continue;
      FourierSetting s = analyze_setting(single(f));
      InversionCertificate inv = verify_inversion(s);
      CHECK(inv.unscaled_ok);
      if (inv.scaled_available) CHECK(inv.scaled_ok);
      ++done;
    }
  }
}

TEST_CASE("intertwiner certificate, exhaustive on the pinned cases") {
  Field F3 = Field::create(3, 1);
  SkewPoly f3 = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  FourierSetting s3 = analyze_setting(single(f3));
  IntertwinerCertificate c3 = verify_intertwiner(s3);
  CHECK(c3.unscaled_ok);
  CHECK(c3.scaled_ok);
  CHECK(c3.exhaustive);
  CHECK(c3.elements_checked == 27);

  Field F2 = Field::create(2, 1);
  SkewPoly f2 = SkewPoly::phi_power(F2, 2) - SkewPoly::constant(F2, F2.one());
  FourierSetting s2 = analyze_setting(single(f2));
  IntertwinerCertificate c2 = verify_intertwiner(s2);
  CHECK(c2.unscaled_ok);
  CHECK(c2.exhaustive);
  CHECK(c2.elements_checked == 32);

  // trivial group: both models one-dimensional
  FourierSetting st = analyze_setting(single(SkewPoly::phi_power(F3, 2)));
  IntertwinerCertificate ct = verify_intertwiner(st);
  CHECK(ct.unscaled_ok);
  CHECK(ct.elements_checked == 3);
}

TEST_CASE("intertwiner holds for an asymmetric pairing") {
  // B is asymmetric here, so the b1 x b2 and b2 x b1 orientations genuinely
  // differ; this pins the orientation of the coordinate-change map
  Field F2 = Field::create(2, 1);
  SkewPoly f = SkewPoly::phi_power(F2, -1) + SkewPoly::phi_power(F2, 2);
  FourierSetting s = analyze_setting(single(f));
  IntertwinerCertificate c = verify_intertwiner(s);
  CHECK(c.unscaled_ok);
  CHECK(c.exhaustive);
  CHECK(c.elements_checked == 128);
  // direct dense confirmation over the whole group
  HeisenbergGroup G = build_group(s.ker_f, s.ker_fstar, s.table);
  Rep rx = svn_rep(G, RepModel::X);
  Rep ry = svn_rep(G, RepModel::Y);
  CycloMatrix M = change_of_basis(s, CobDirection::X_from_Y, false).transpose();
  for (unsigned long long t = 0; t < G.order(); ++t) {
    GroupElem g = G.element_at(t);
    CHECK(M * rx.matrix(g) == ry.matrix(g) * M);
  }
}

TEST_CASE("psi twists leave inversion and intertwining true") {
  Field F5 = Field::create(5, 1);
  SkewPoly f = SkewPoly::phi_power(F5, 1) - SkewPoly::constant(F5, F5.from_int(2));
  for (long u = 1; u < 5; ++u) {
    FourierSetting s = analyze_setting(single(f), u);
    CHECK(verify_inversion(s).unscaled_ok);
    CHECK(verify_intertwiner(s).unscaled_ok);
  }
}

TEST_CASE("basis spaces carry the degree and twist bookkeeping") {
  Field F3 = Field::create(3, 1);
  SkewPoly f = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  FourierSetting s = analyze_setting(single(f));
  BasisSpace bx = basis_space(s, RepModel::X);
  BasisSpace by = basis_space(s, RepModel::Y);
  CHECK(bx.labels.size() == 3);
  CHECK(by.labels.size() == 3);
  CHECK(bx.degree == 2);
  CHECK(bx.twist == 1);
}

TEST_SUITE_END();
