#include <atomic>
#include <random>
#include <thread>

#include "bimult/ff.hpp"
#include "doctest.h"

using namespace bimult;

TEST_SUITE_BEGIN("ff");

TEST_CASE("prime field gets modulus t") {
  Field F3 = Field::create(3, 1);
  CHECK(F3.modulus() == std::vector<long>{0, 1});
  CHECK(F3.spec_text() == "p=3 n=1");
}

TEST_CASE("t^2+1 is irreducible mod 3 but not mod 2") {
  Field F9 = Field::create(3, 2, std::vector<long>{1, 0, 1});
  CHECK(F9.n() == 2);
  // no root mod 3, by enumeration
  for (long r = 0; r < 3; ++r) CHECK((r * r + 1) % 3 != 0);
  // (t+1)^2 = t^2+1 mod 2
  CHECK_THROWS_AS(Field::create(2, 2, std::vector<long>{1, 0, 1}), ReducibleModulus);
}

TEST_CASE("non-prime characteristic is rejected") {
  CHECK_THROWS_AS(Field::create(4, 1), NonPrime);
  CHECK_THROWS_AS(Field::create(1, 1), NonPrime);
}

TEST_CASE("frobenius on the prime field is the identity") {
  Field F3 = Field::create(3, 1);
  for (long c = 0; c < 3; ++c) CHECK(frobenius(F3.from_int(c), 1) == F3.from_int(c));
}

TEST_CASE("frobenius of t in F_9 = F_3[t]/(t^2+1)") {
  Field F9 = Field::create(3, 2, std::vector<long>{1, 0, 1});
  FFElem t = F9.gen();
  // t^3 = t*t^2 = -t = 2t
  CHECK(frobenius(t, 1) == F9.from_coeffs({0, 2}));
}

TEST_CASE("inverse frobenius composes to the identity") {
  Field F8 = Field::create(2, 3);
  for (unsigned long long i = 0; i < 8; ++i) {
    FFElem x = F8.element_at(i);
    CHECK(frobenius(frobenius(x, -1), 1) == x);
  }
}

TEST_CASE("frobenius exponents add and respect the ring structure") {
  Field F27 = Field::create(3, 3);
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    FFElem x = F27.element_at(rng() % 27);
    FFElem y = F27.element_at(rng() % 27);
    for (long a = -3; a <= 3; ++a)
      for (long b = -3; b <= 3; ++b)
        CHECK(frobenius(frobenius(x, a), b) == frobenius(x, a + b));
    CHECK(frobenius(x + y, 2) == frobenius(x, 2) + frobenius(y, 2));
    CHECK(frobenius(x * y, -1) == frobenius(x, -1) * frobenius(y, -1));
  }
}

TEST_CASE("field arithmetic: inverses and distributivity") {
  Field F25 = Field::create(5, 2);
  for (unsigned long long i = 1; i < 25; ++i) {
    FFElem x = F25.element_at(i);
    CHECK(x * x.inverse() == F25.one());
  }
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    FFElem a = F25.element_at(rng() % 25), b = F25.element_at(rng() % 25),
           c = F25.element_at(rng() % 25);
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("fp_kernel on pinned instances") {
  FpMatrix id3(3, 3, 3);
  for (long i = 0; i < 3; ++i) id3.at(i, i) = 1;
  CHECK(fp_kernel(id3).empty());

  FpMatrix z2(3, 2, 2);
  CHECK(fp_kernel(z2).size() == 2);

  FpMatrix m(5, 2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  auto ker = fp_kernel(m);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<long>{3, 1});
}

TEST_CASE("fp_kernel vectors annihilate and rank-nullity holds") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 40; ++it) {
    long p = std::vector<long>{2, 3, 5}[it % 3];
    long r = 1 + static_cast<long>(rng() % 5), c = 1 + static_cast<long>(rng() % 5);
    FpMatrix M(p, r, c);
    for (auto& x : M.a) x = static_cast<long>(rng() % p);
    auto ker = fp_kernel(M);
    CHECK(fp_rank(M) + static_cast<long>(ker.size()) == c);
    for (const auto& v : ker)
      for (long i = 0; i < r; ++i) {
        long acc = 0;
        for (long j = 0; j < c; ++j) acc = (acc + M.at(i, j) * v[j]) % p;
        CHECK(acc == 0);
      }
  }
}

TEST_CASE("embed: unital, identity, and modulus root") {
  Field F3 = Field::create(3, 1);
  Field F9 = Field::create(3, 2, std::vector<long>{1, 0, 1});
  CHECK(embed(F3.one(), F9) == F9.one());
  CHECK(embed(F3.from_int(2), F3) == F3.from_int(2));

  Field F4 = Field::create(2, 2);
  Field F16 = Field::create(2, 4);
  FFElem g = F4.gen();
  FFElem img = embed(g, F16);
  // image satisfies the F_4 modulus exactly
  FFElem acc = F16.zero(), pw = F16.one();
  for (long i = 0; i <= 2; ++i) {
    acc = acc + F16.from_int(F4.modulus()[i]) * pw;
    pw = pw * img;
  }
  CHECK(acc.is_zero());
}

TEST_CASE("embed is a ring homomorphism commuting with frobenius") {
  Field F4 = Field::create(2, 2);
  Field F64 = Field::create(2, 6);
  for (unsigned long long i = 0; i < 4; ++i)
    for (unsigned long long j = 0; j < 4; ++j) {
      FFElem x = F4.element_at(i), y = F4.element_at(j);
      CHECK(embed(x + y, F64) == embed(x, F64) + embed(y, F64));
      CHECK(embed(x * y, F64) == embed(x, F64) * embed(y, F64));
      CHECK(embed(frobenius(x, 1), F64) == frobenius(embed(x, F64), 1));
    }
  // injectivity on a finite check
  for (unsigned long long i = 0; i < 4; ++i)
    for (unsigned long long j = i + 1; j < 4; ++j)
      CHECK(embed(F4.element_at(i), F64) != embed(F4.element_at(j), F64));
}

TEST_CASE("embed refuses non-dividing degrees") {
  Field F4 = Field::create(2, 2);
  Field F8 = Field::create(2, 3);
  CHECK_THROWS_AS(embed(F4.gen(), F8), NoEmbedding);
}

TEST_CASE("tower coherence through a recorded base field") {
  Field F9 = Field::create(3, 2);
  Field mid = Field::extension_of(F9, 2);   // F_{3^4}
  Field top = Field::extension_of(F9, 4);   // F_{3^8}
  FFElem g = F9.gen();
  CHECK(embed(embed(g, mid), top) == embed(g, top));
}

TEST_CASE("concurrent readers share the embedding and frobenius caches") {
  Field F4 = Field::create(2, 2);
  Field top = Field::extension_of(F4, 5);
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([&] {
      for (int it = 0; it < 50; ++it) {
        FFElem g = embed(F4.gen(), top);
        if (!(frobenius(frobenius(g, 1), -1) == g)) ok = false;
        FFElem h = embed(frobenius(F4.gen(), 1), top);
        if (!(h == frobenius(g, 1))) ok = false;
      }
    });
  for (auto& t : workers) t.join();
  CHECK(ok);
}

TEST_SUITE_END();
