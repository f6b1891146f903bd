// Copyright 2026 The Anyon Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "anyon/cyclo.hpp"
#include "anyon/errors.hpp"
#include "doctest.h"

using namespace anyon;

namespace {

CycloNumber random_cyclo(std::mt19937& rng, int m, int nterms) {
  std::uniform_int_distribution<long> e(0, m - 1), c(-9, 9), d(1, 5);
  std::vector<std::pair<long, Rational>> terms;
  for (int i = 0; i < nterms; ++i) terms.push_back({e(rng), Rational(c(rng), d(rng))});
  return CycloNumber::from_terms(m, terms);
}

bool close(std::complex<double> a, std::complex<double> b, double tol = 1e-9) {
  return std::abs(a - b) < tol;
}

}  // namespace

TEST_CASE("cyclotomic polynomial and reduction table") {
  const CycloField& f = CycloField::get(48);
  CHECK(f.degree() == 16);
  // Phi_48 = x^16 - x^8 + 1.
  std::vector<long> expect(17, 0);
  expect[0] = 1;
  expect[8] = -1;
  expect[16] = 1;
  CHECK(f.cyclotomic_polynomial() == expect);
  CHECK(CycloField::get(10).degree() == 4);
  CHECK(CycloField::get(1).degree() == 1);
  CHECK(CycloField::get(2).degree() == 1);
  // Every table entry embeds to the matching root of unity.
  for (int m : {5, 12, 16, 40, 48}) {
    for (int e = 0; e < m; ++e) {
      CycloNumber z = CycloNumber::zeta(m, e);
      CHECK(close(z.embed(), std::polar(1.0, 2 * M_PI * e / m)));
    }
  }
}

TEST_CASE("root_of_unity follows e^{2 pi i q}") {
  CHECK(CycloNumber::root_of_unity(4, Rational(1, 2)) == CycloNumber(-1));
  CHECK(CycloNumber::root_of_unity(48, Rational(1, 12)) == CycloNumber::zeta(48, 4));
  CycloNumber omega = CycloNumber::zeta(48, 8) - CycloNumber(1);
  CHECK(CycloNumber::root_of_unity(48, Rational(1, 3)) == omega);
  CHECK(omega * omega * omega == CycloNumber(1));
  CHECK_THROWS_AS(CycloNumber::root_of_unity(10, Rational(1, 3)), UnrepresentableError);
  for (int k = -5; k <= 7; ++k) {
    CHECK(CycloNumber::root_of_unity(48, Rational(1, 12)).pow(k) ==
          CycloNumber::root_of_unity(48, Rational(k, 12)));
  }
}

TEST_CASE("embedding examples") {
  CHECK(close(CycloNumber::zeta(4, 8).embed(), {1.0, 0.0}));
  CycloNumber omega = CycloNumber::zeta(48, 8) - CycloNumber(1);
  CHECK(close(omega.embed(), {-0.5, std::sqrt(3.0) / 2}, 1e-15));
  BigComplex big = omega.embed_big();
  CHECK(boost::multiprecision::abs(big.re + BigReal("0.5")) < BigReal("1e-70"));
  CHECK(boost::multiprecision::abs(big.im - boost::multiprecision::sqrt(BigReal(3)) / 2) <
        BigReal("1e-70"));
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(7);
  for (int m : {10, 16, 48}) {
    for (int it = 0; it < 25; ++it) {
      CycloNumber a = random_cyclo(rng, m, 4), b = random_cyclo(rng, m, 3),
                  c = random_cyclo(rng, m, 5);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      CHECK((a - a).terms().empty());
      if (!a.is_zero()) CHECK(a * a.inv() == CycloNumber(1));
      CHECK(close((a * b).embed(), a.embed() * b.embed(), 1e-8));
      CHECK(close(a.conj().embed(), std::conj(a.embed()), 1e-9));
    }
  }
  CHECK(CycloNumber(1).inv() == CycloNumber(1));
  CHECK_THROWS_AS(CycloNumber().inv(), ArithmeticError);
}

TEST_CASE("mixed orders lift to the common field") {
  CycloNumber i4 = CycloNumber::zeta(4, 1);
  CycloNumber z8 = CycloNumber::zeta(8, 1);
  CHECK(z8 * z8 == i4);
  CHECK(i4.lift(48) == CycloNumber::zeta(48, 12));
  CHECK(CycloNumber::zeta(48, 24) == CycloNumber(-1));
  CHECK(CycloNumber::zeta(48, 24).is_rational());
}

TEST_CASE("square roots of squarefree integers") {
  auto r3 = sqrt_squarefree_integer(3, 12);
  REQUIRE(r3);
  CHECK(*r3 * *r3 == CycloNumber(3));
  CHECK(sqrt_squarefree_integer(3, 48));
  CHECK(!sqrt_squarefree_integer(3, 6));
  CHECK(sqrt_squarefree_integer(-3, 3));
  CHECK(sqrt_squarefree_integer(5, 10));
  CHECK(!sqrt_squarefree_integer(2, 4));
  CHECK(sqrt_squarefree_integer(-2, 8));
  CHECK(sqrt_squarefree_integer(-1, 4));
  CHECK(!sqrt_squarefree_integer(-1, 10));
}

TEST_CASE("cyclo_sqrt finds roots or reports absence") {
  auto r = cyclo_sqrt(CycloNumber(Rational(4, 9)), 10);
  REQUIRE(r);
  CHECK(*r * *r == CycloNumber(Rational(4, 9)));
  CHECK(!cyclo_sqrt(CycloNumber(2), 10));
  auto s = cyclo_sqrt(CycloNumber(Rational(3, 4)), 48);
  REQUIRE(s);
  CHECK(*s * *s == CycloNumber(Rational(3, 4)));
  // Non-rational radicand: (zeta^3 + 2 zeta)^2.
  CycloNumber z = CycloNumber::zeta(48, 1);
  CycloNumber b = z.pow(3) + CycloNumber(2) * z;
  auto t = cyclo_sqrt(b * b, 48);
  REQUIRE(t);
  CHECK((*t == b || *t == -b));
  // 1/phi with phi the golden ratio is not a square in Q(zeta_10).
  CycloNumber sqrt5 = *sqrt_squarefree_integer(5, 10);
  CycloNumber golden = (CycloNumber(1) + sqrt5) / CycloNumber(2);
  CHECK(!cyclo_sqrt(golden.inv(), 10));
  CHECK(cyclo_sqrt(golden * golden, 10));
}
