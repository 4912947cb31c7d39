#include <random>

#include "bimult/kernel.hpp"
#include "bimult/skew.hpp"
#include "doctest.h"

using namespace bimult;

namespace {

SkewPoly random_poly(const Field& F, std::mt19937_64& rng, long lo = -3, long hi = 3) {
  std::map<long, FFElem> t;
  for (long k = lo; k <= hi; ++k) {
    if (rng() % 2) continue;
    FFElem c = F.element_at(rng() % F.size());
    if (!c.is_zero()) t.emplace(k, c);
  }
  return SkewPoly(F, std::move(t));
}

FFElem random_elem(const Field& F, std::mt19937_64& rng) { return F.element_at(rng() % F.size()); }

}  // namespace

TEST_SUITE_BEGIN("skew");

TEST_CASE("twist rule: Phi * a = a^p * Phi") {
  Field F9 = Field::create(3, 2, std::vector<long>{1, 0, 1});
  FFElem a = F9.gen() + F9.one();
  SkewPoly lhs = SkewPoly::phi_power(F9, 1) * SkewPoly::constant(F9, a);
  SkewPoly rhs = SkewPoly::monomial(frobenius(a, 1), 1);
  CHECK(lhs == rhs);
}

TEST_CASE("multiplicative unit") {
  Field F5 = Field::create(5, 1);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 20; ++i) {
    SkewPoly f = random_poly(F5, rng);
    CHECK(f * SkewPoly::constant(F5, F5.one()) == f);
    CHECK(SkewPoly::constant(F5, F5.one()) * f == f);
  }
}

TEST_CASE("(Phi+1)(Phi-1) = Phi^2 - 1 over F_3") {
  Field F3 = Field::create(3, 1);
  SkewPoly one = SkewPoly::constant(F3, F3.one());
  SkewPoly phi = SkewPoly::phi_power(F3, 1);
  SkewPoly prod = (phi + one) * (phi - one);
  SkewPoly expect = SkewPoly::phi_power(F3, 2) - one;
  CHECK(prod == expect);
}

TEST_CASE("degree exponents add in products") {
  Field F4 = Field::create(2, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 30; ++i) {
    SkewPoly f = random_poly(F4, rng), g = random_poly(F4, rng);
    if (f.is_zero() || g.is_zero()) continue;
    SkewPoly h = f * g;
    CHECK(h.max_exp() == f.max_exp() + g.max_exp());
    CHECK(h.min_exp() == f.min_exp() + g.min_exp());
  }
}

TEST_CASE("adjoint on the pinned instances") {
  Field F9 = Field::create(3, 2, std::vector<long>{1, 0, 1});
  CHECK(adjoint(SkewPoly::phi_power(F9, 2)) == SkewPoly::phi_power(F9, -2));
  FFElem c = F9.gen() + F9.from_int(2);
  CHECK(adjoint(SkewPoly::constant(F9, c)) == SkewPoly::constant(F9, c));
  SkewPoly f = SkewPoly::monomial(F9.gen(), 1);
  SkewPoly fs = adjoint(f);
  CHECK(fs == SkewPoly::monomial(frobenius(F9.gen(), -1), -1));
  CHECK(adjoint(fs) == f);
}

TEST_CASE("adjoint is an involutive anti-homomorphism") {
  Field F9 = Field::create(3, 2);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    SkewPoly f = random_poly(F9, rng), g = random_poly(F9, rng);
    CHECK(adjoint(adjoint(f)) == f);
    CHECK(adjoint(f * g) == adjoint(g) * adjoint(f));
    CHECK(adjoint(f + g) == adjoint(f) + adjoint(g));
  }
}

TEST_CASE("evaluation: definition, Artin-Schreier kernel, p-th root") {
  Field F3 = Field::create(3, 1);
  Field F27 = Field::create(3, 3);
  SkewPoly phi3 = SkewPoly::phi_power(F3, 1);
  for (unsigned long long i = 0; i < 27; ++i) {
    FFElem x = F27.element_at(i);
    CHECK(evaluate(phi3, x) == frobenius(x, 1));
  }
  SkewPoly as = phi3 - SkewPoly::constant(F3, F3.one());
  for (long c = 0; c < 3; ++c) CHECK(evaluate(as, F3.from_int(c)).is_zero());
  SkewPoly phinv = SkewPoly::phi_power(F3, -1);
  for (unsigned long long i = 0; i < 27; ++i) {
    FFElem x = F27.element_at(i);
    FFElem r = evaluate(phinv, x);
    CHECK(frobenius(r, 1) == x);  // unique p-th root
  }
}

TEST_CASE("evaluation is additive and respects composition") {
  Field F9 = Field::create(3, 2);
  Field L = Field::extension_of(F9, 2);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    SkewPoly f = random_poly(F9, rng), g = random_poly(F9, rng);
    FFElem x = random_elem(L, rng), y = random_elem(L, rng);
    CHECK(evaluate(f, x + y) == evaluate(f, x) + evaluate(f, y));
    CHECK(evaluate(f * g, x) == evaluate(f, evaluate(g, x)));
  }
}

TEST_CASE("coefficients must embed into the point field") {
  Field F9 = Field::create(3, 2);
  Field F3 = Field::create(3, 1);
  SkewPoly f = SkewPoly::monomial(F9.gen(), 1);
  CHECK_THROWS_AS(evaluate(f, F3.one()), NoEmbedding);
}

TEST_CASE("g-form of a constant is zero and of Phi is x*y^(1/p)") {
  Field F3 = Field::create(3, 1);
  CHECK(g_form(SkewPoly::constant(F3, F3.from_int(2))).monomials().empty());

  GForm g = g_form(SkewPoly::phi_power(F3, 1));
  REQUIRE(g.monomials().size() == 1);
  CHECK(g.monomials()[0].coeff == F3.one());
  CHECK(g.monomials()[0].xe == 0);
  CHECK(g.monomials()[0].ye == -1);
  // on F_p x F_p the cube root is the identity, so g(x,y) = xy
  for (long a = 0; a < 3; ++a)
    for (long b = 0; b < 3; ++b)
      CHECK(g.eval(F3.from_int(a), F3.from_int(b)) == F3.from_int(a * b));
}

TEST_CASE("g-form defining equation, randomized over p in {2,3,5}") {
  std::mt19937_64 rng(23);
  for (long p : {2L, 3L, 5L}) {
    Field Fp = Field::create(p, 1);
    Field L = Field::extension_of(Fp, 6);
    for (int i = 0; i < 40; ++i) {
      SkewPoly f = random_poly(Fp, rng);
      GForm g = g_form(f);
      SkewPoly fs = adjoint(f);
      FFElem x = random_elem(L, rng), y = random_elem(L, rng);
      FFElem gv = g.eval(x, y);
      FFElem lhs = frobenius(gv, 1) - gv;
      FFElem rhs = evaluate(f, x) * y - x * evaluate(fs, y);
      CHECK(lhs == rhs);
      CHECK(g.eval(L.zero(), y).is_zero());
      CHECK(g.eval(x, L.zero()).is_zero());
    }
  }
}

TEST_CASE("g-form over an extension coefficient field") {
  Field F9 = Field::create(3, 2);
  Field L = Field::extension_of(F9, 3);
  std::mt19937_64 rng(29);
  for (int i = 0; i < 25; ++i) {
    SkewPoly f = random_poly(F9, rng);
    GForm g = g_form(f);
    FFElem x = random_elem(L, rng), y = random_elem(L, rng);
    FFElem gv = g.eval(x, y);
    CHECK(frobenius(gv, 1) - gv == evaluate(f, x) * y - x * evaluate(adjoint(f), y));
  }
}

TEST_CASE("matrix g-form: base case and diagonal additivity") {
  Field F3 = Field::create(3, 1);
  SkewPoly f1 = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  SkewPoly f2 = SkewPoly::phi_power(F3, 2);

  SkewMatrix F11(F3, 1, 1);
  F11.at(0, 0) = f1;
  Field L = Field::extension_of(F3, 4);
  std::mt19937_64 rng(31);
  for (int i = 0; i < 10; ++i) {
    FFElem x = random_elem(L, rng), y = random_elem(L, rng);
    CHECK(g_eval_matrix(F11, {x}, {y}) == g_form(f1).eval(x, y));
  }

  SkewMatrix D(F3, 2, 2);
  D.at(0, 0) = f1;
  D.at(1, 1) = f2;
  for (int i = 0; i < 10; ++i) {
    FFElem x1 = random_elem(L, rng), y1 = random_elem(L, rng), y2 = random_elem(L, rng);
    CHECK(g_eval_matrix(D, {x1, L.zero()}, {y1, y2}) == g_form(f1).eval(x1, y1));
  }
}

TEST_CASE("matrix g-form defining equation for an upper triangular matrix") {
  Field F3 = Field::create(3, 1);
  SkewMatrix F(F3, 2, 2);
  F.at(0, 0) = SkewPoly::phi_power(F3, 1);
  F.at(0, 1) = SkewPoly::constant(F3, F3.one());
  F.at(1, 1) = SkewPoly::phi_power(F3, 1) - SkewPoly::constant(F3, F3.one());
  SkewMatrix Fs = F.adjoint_transpose();
  Field L = Field::extension_of(F3, 5);
  std::mt19937_64 rng(37);
  for (int i = 0; i < 20; ++i) {
    std::vector<FFElem> x = {random_elem(L, rng), random_elem(L, rng)};
    std::vector<FFElem> y = {random_elem(L, rng), random_elem(L, rng)};
    FFElem gv = g_eval_matrix(F, x, y);
    FFElem lhs = frobenius(gv, 1) - gv;
    auto Fx = F.apply(x);
    auto Fsy = Fs.apply(y);
    FFElem rhs = L.zero();
    for (long j = 0; j < 2; ++j) rhs = rhs + Fx[j] * y[j];
    for (long j = 0; j < 2; ++j) rhs = rhs - x[j] * Fsy[j];
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical printing uses ascending exponents") {
  Field F3 = Field::create(3, 1);
  SkewPoly f = SkewPoly::phi_power(F3, 2) - SkewPoly::phi_power(F3, -1) +
               SkewPoly::constant(F3, F3.from_int(2));
  CHECK(f.to_string() == "2*F^-1 + 2 + F^2");
}

TEST_SUITE_END();
