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

#include "anyon/errors.hpp"
#include "anyon/tower.hpp"
#include "doctest.h"

using namespace anyon;

TEST_CASE("difference of squares over Q(sqrt 3)") {
  TowerPtr t = Tower::extend(nullptr, TowerNumber(3), 1);
  TowerNumber y = TowerNumber::radical(t, 0);
  CHECK((TowerNumber(1) + y) * (TowerNumber(1) - y) == TowerNumber(-2));
  CHECK(y * y == TowerNumber(3));
  CHECK(std::abs(y.embed() - std::complex<double>(std::sqrt(3.0), 0)) < 1e-14);
}

TEST_CASE("nested radicals: arithmetic and inverses") {
  const int m = 10;
  TowerPtr t1 = Tower::extend(nullptr, TowerNumber(CycloNumber::zeta(m, 1) + CycloNumber(2)), m);
  TowerNumber y0 = TowerNumber::radical(t1, 0);
  TowerPtr t2 = Tower::extend(t1, y0 + TowerNumber(5), m);
  TowerNumber y1 = TowerNumber::radical(t2, 1);
  CHECK(y1 * y1 == y0 + TowerNumber(5));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-4, 4), e(0, m - 1);
  for (int it = 0; it < 20; ++it) {
    TowerNumber x;
    for (int mask = 0; mask < 4; ++mask) {
      TowerNumber coeff = TowerNumber(CycloNumber::zeta(m, e(rng)) * CycloNumber(c(rng)));
      TowerNumber mono(1);
      if (mask & 1) mono *= y0;
      if (mask & 2) mono *= y1;
      x += coeff * mono;
    }
    if (x.is_zero()) continue;
    CHECK(x * x.inv() == TowerNumber(1));
    TowerNumber z = x * x + y1;
    CHECK(std::abs(z.embed() - (x.embed() * x.embed() + y1.embed())) < 1e-9);
  }
}

TEST_CASE("tower square roots") {
  const int m = 10;
  CycloNumber sqrt5 = *sqrt_squarefree_integer(5, m);
  CycloNumber inv_golden = (sqrt5 - CycloNumber(1)) / CycloNumber(2);
  // 1/phi is not a square in Q(zeta_10); adjoin it.
  CHECK(!tower_sqrt(TowerNumber(inv_golden), m));
  TowerPtr t = Tower::extend(nullptr, TowerNumber(inv_golden), m);
  TowerNumber y = TowerNumber::radical(t, 0);
  CHECK(y.embed().real() > 0);
  // Squares of mixed elements are recognized.
  TowerNumber x = TowerNumber(CycloNumber(2)) + TowerNumber(CycloNumber::zeta(m, 3)) * y;
  auto r = tower_sqrt(x * x, m);
  REQUIRE(r);
  CHECK((*r == x || *r == -x));
  CHECK(r->embed().real() > 0);
  // A radicand equal to alpha times a square: sqrt(4 / phi) = 2 y.
  TowerNumber four_over_phi(t, TowerNumber(CycloNumber(4) * inv_golden).terms());
  auto s = tower_sqrt(four_over_phi, m);
  REQUIRE(s);
  CHECK(*s == TowerNumber(2) * y);
  // 8 becomes a square once sqrt 2 is adjoined.
  CHECK(!tower_sqrt(TowerNumber(8), m));
  TowerPtr t2 = Tower::extend(t, TowerNumber(2), m);
  auto q4 = tower_sqrt(TowerNumber(t2, TowerNumber(8).terms()), m);
  REQUIRE(q4);
  CHECK(*q4 * *q4 == TowerNumber(8));
  CHECK(std::abs(q4->embed() - std::complex<double>(std::sqrt(8.0), 0)) < 1e-12);
}

TEST_CASE("incompatible towers are rejected") {
  TowerPtr a = Tower::extend(nullptr, TowerNumber(2), 1);
  TowerPtr b = Tower::extend(nullptr, TowerNumber(3), 1);
  CHECK_THROWS_AS(TowerNumber::radical(a, 0) + TowerNumber::radical(b, 0), DomainError);
}
