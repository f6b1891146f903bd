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

#include <algorithm>

#include "anyon/catalog.hpp"
#include "anyon/errors.hpp"
#include "doctest.h"

using namespace anyon;

namespace {

std::vector<std::string> names(const FusionRing& r, const std::vector<int>& xs) {
  std::vector<std::string> out;
  for (int x : xs) out.push_back(r.label_names()[x]);
  return out;
}

// Truncated Clebsch-Gordan rule written independently of the catalog.
bool su2_rule(int k, int a, int b, int c) {
  if (c < std::abs(a - b) || c > a + b || (a + b + c) % 2) return false;
  return a + b + c <= 2 * k;
}

}  // namespace

TEST_CASE("fuse examples") {
  FusionRing su24 = builtin("su2-4");
  CHECK(su24.label_names() == std::vector<std::string>{"one", "X_e", "Y", "X_ep", "Z"});
  int xe = su24.label_index("X_e");
  CHECK(names(su24, su24.fuse(xe, xe)) == std::vector<std::string>{"one", "Y"});
  CHECK(names(su24, su24.fuse(su24.label(xe), su24.label(xe))) ==
        std::vector<std::string>{"one", "Y"});

  FusionRing fib = builtin("fibonacci");
  CHECK(fib.rank() == 2);
  CHECK(names(fib, fib.fuse(1, 1)) == std::vector<std::string>{"one", "tau"});
  CHECK(fib.dual(0) == 0);
  CHECK(fib.dual(1) == 1);

  FusionRing su22 = builtin("su2-2");
  CHECK(su22.fuse(1, 1) == std::vector<int>{0, 2});

  for (const auto& name : builtin_names()) {
    FusionRing r = builtin(name);
    for (int a = 0; a < r.rank(); ++a) {
      CHECK(r.fuse(a, r.vacuum()) == std::vector<int>{a});
      for (int b = 0; b < r.rank(); ++b) CHECK(r.fuse(a, b) == r.fuse(b, a));
    }
  }
}

TEST_CASE("labels from another ring are rejected") {
  FusionRing fib = builtin("fibonacci");
  FusionRing ising = builtin("ising");
  CHECK_THROWS_AS(fib.fuse(ising.label(2), ising.label(2)), DomainError);
  CHECK_THROWS_AS(fib.fuse(0, 5), DomainError);
  CHECK_THROWS_AS(fib.label_index("sigma"), NotFoundError);
  CHECK_THROWS_AS(builtin("su3-2"), NotFoundError);
  CHECK_THROWS_AS(builtin("su2-0"), NotFoundError);
}

TEST_CASE("su2-k fusion agrees with the truncated Clebsch-Gordan rule") {
  for (int k = 1; k <= 7; ++k) {
    FusionRing r = su2_ring(k);
    CHECK(r.rank() == k + 1);
    CHECK(r.cyclo_order() == 8 * (k + 2));
    for (int a = 0; a <= k; ++a)
      for (int b = 0; b <= k; ++b)
        for (int c = 0; c <= k; ++c) CHECK(r.N(a, b, c) == su2_rule(k, a, b, c));
    CHECK(verify_ring_axioms(r).ok());
  }
}

TEST_CASE("admissible sextuples") {
  FusionRing fib = builtin("fibonacci");
  CHECK(fib.is_admissible_sextuple({1, 1, 1, 1, 0, 0}));
  CHECK(fib.is_admissible_sextuple({0, 0, 0, 0, 0, 0}));
  CHECK(!fib.is_admissible_sextuple({1, 1, 1, 0, 0, 0}));
}

TEST_CASE("sextuple index counts and round trip") {
  // Counts from a brute-force enumeration over all label sextuples.
  const std::vector<std::pair<std::string, int>> expected = {
      {"fibonacci", 5}, {"ising", 14}, {"su2-1", 1}, {"su2-2", 14}, {"su2-3", 71}, {"su2-4", 238}};
  for (const auto& [name, count] : expected) {
    FusionRing r = builtin(name);
    SextupleIndex idx(r);
    CHECK_MESSAGE(idx.size() == count, name);
    for (int i = 0; i < idx.size(); ++i) {
      const Sextuple& s = idx.sextuple(i);
      CHECK(idx.index(s) == i);
      CHECK(r.is_admissible_sextuple(s));
      CHECK(s[0] != r.vacuum());
      CHECK(s[1] != r.vacuum());
      CHECK(s[2] != r.vacuum());
      if (i > 0) CHECK(idx.sextuple(i - 1) < s);
    }
  }
  FusionRing trivial("trivial", {"one"}, 1);
  trivial.set_N(0, 0, 0, true);
  CHECK(SextupleIndex(trivial).size() == 0);
}

TEST_CASE("builtin rings pass the axiom checks") {
  for (const auto& name : builtin_names()) {
    AxiomReport rep = verify_ring_axioms(builtin(name));
    CHECK_MESSAGE(rep.ok(), name);
    for (const auto& f : rep.failures()) MESSAGE(f);
  }
  FusionRing ising = builtin("ising");
  CHECK(ising.dual(1) == 1);
  CHECK(ising.pivotal(ising.vacuum()) == 1);
}

TEST_CASE("axiom violations carry witnesses") {
  FusionRing fib = builtin("fibonacci");
  fib.set_N(0, 1, 0, true);
  AxiomReport rep = verify_ring_axioms(fib);
  CHECK(!rep.ok());
  auto it = std::find_if(rep.checks.begin(), rep.checks.end(),
                         [](const AxiomCheck& c) { return c.name == "commutativity"; });
  REQUIRE(it != rep.checks.end());
  CHECK(!it->passed());
  CHECK(std::find(it->witnesses.begin(), it->witnesses.end(), "(0,1,0)") != it->witnesses.end());

  FusionRing bad_piv = builtin("ising");
  bad_piv.set_pivotal(0, -1);
  CHECK(!verify_ring_axioms(bad_piv).ok());

  FusionRing extra_r = builtin("fibonacci");
  extra_r.set_R(1, 0, 0, Rational(0));
  CHECK(!verify_ring_axioms(extra_r).ok());
}

TEST_CASE("R-symbols and twists are roots of unity") {
  FusionRing fib = builtin("fibonacci");
  CHECK(fib.R(1, 1, 0) == CycloNumber::zeta(10, -4));
  CHECK(fib.R(1, 1, 1) == CycloNumber::zeta(10, 3));
  CHECK(fib.twist(1) == CycloNumber::zeta(10, 4));
  CHECK_THROWS_AS(fib.R(1, 0, 0), DataError);
  FusionRing su24 = builtin("su2-4");
  CHECK(su24.R(1, 1, 2) == CycloNumber::zeta(48, 2));
  CHECK(su24.R(1, 1, 0) == CycloNumber::root_of_unity(48, Rational(3, 8)));
  // Ribbon relation R^{ab}_c R^{ba}_c = theta_c / (theta_a theta_b) on every admissible triple.
  for (const auto& name : builtin_names()) {
    FusionRing r = builtin(name);
    for (int a = 0; a < r.rank(); ++a)
      for (int b = 0; b < r.rank(); ++b)
        for (int c : r.fuse(a, b))
          CHECK_MESSAGE(r.R(a, b, c) * r.R(b, a, c) * r.twist(a) * r.twist(b) == r.twist(c), name);
  }
}

TEST_CASE("ring json round trip") {
  for (const auto& name : builtin_names()) {
    FusionRing r = builtin(name);
    nlohmann::json j = ring_to_json(r);
    FusionRing back = ring_from_json(nlohmann::json::parse(j.dump()));
    CHECK(ring_to_json(back) == j);
    CHECK(verify_ring_axioms(back).ok());
  }
  CHECK_THROWS_AS(ring_from_json(nlohmann::json::parse(R"({"name":"x"})")), DataError);
}
