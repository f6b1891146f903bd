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


#include <random>

#include "anyon/braidrep.hpp"
#include "anyon/gatelab.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace anyon;
using namespace anyon::testing;

namespace {

std::vector<std::string> names(const FusionRing& ring, const std::vector<BasisState>& basis) {
  std::vector<std::string> out;
  for (const auto& s : basis) out.push_back(state_str(ring, s));
  return out;
}

TowerNumber z48(long e) { return TowerNumber(CycloNumber::zeta(48, e)); }

}  // namespace

TEST_CASE("comp_basis reproduces the SU(2)_4 metaplectic basis") {
  FusionRing ring = builtin("su2-4");
  auto basis = comp_basis(ring, ring.label_index("X_e"), ring.label_index("Y"), 4);
  CHECK(names(ring, basis) == std::vector<std::string>{"(Y,Y)", "(Y,one)", "(one,Y)"});
}

TEST_CASE("comp_basis small cases") {
  FusionRing fib = builtin("fibonacci");
  const int tau = fib.label_index("tau");
  CHECK(names(fib, comp_basis(fib, tau, tau, 3)) == std::vector<std::string>{"(tau)", "(one)"});
  FusionRing ising = builtin("ising");
  const int sigma = ising.label_index("sigma");
  CHECK(comp_basis(ising, sigma, sigma, 4).empty());
  CHECK(comp_basis(ising, sigma, ising.label_index("one"), 5).empty());
  CHECK_THROWS_AS(comp_basis(fib, tau, tau, 2), DomainError);
  CHECK_THROWS_AS(comp_basis(fib, tau, 7, 3), DomainError);
}

TEST_CASE("comp_basis size equals the fusion multiplicity and states are admissible") {
  for (const auto& name : builtin_names()) {
    FusionRing ring = builtin(name);
    for (int a = 0; a < ring.rank(); ++a)
      for (int b = 0; b < ring.rank(); ++b)
        for (int m = 3; m <= 7; ++m) {
          auto basis = comp_basis(ring, a, b, m);
          CAPTURE(name);
          CAPTURE(m);
          CHECK(static_cast<long>(basis.size()) == fusion_multiplicity(ring, a, b, m));
          CHECK(basis == comp_basis(ring, a, b, m));
          for (std::size_t i = 1; i < basis.size(); ++i) CHECK(basis[i] < basis[i - 1]);
          const int r = m / 2;
          for (const auto& s : basis) {
            REQUIRE(static_cast<int>(s.t.size()) == r);
            REQUIRE(static_cast<int>(s.l.size()) == (m % 2 ? r - 1 : r - 2));
            for (int t : s.t) CHECK(ring.N(a, a, t));
            std::vector<int> ch{s.t[0]};
            ch.insert(ch.end(), s.l.begin(), s.l.end());
            for (std::size_t k = 1; k < ch.size(); ++k) CHECK(ring.N(ch[k - 1], s.t[k], ch[k]));
            if (m % 2) {
              CHECK(ring.N(ch.back(), a, b));
            } else {
              CHECK(ring.N(ch.back(), s.t[r - 1], b));
            }
          }
        }
  }
}

TEST_CASE("SU(2)_4 odd generators after the basis transposition") {
  const FSymbolTable& t = solved("su2-4");
  const FusionRing& ring = t.ring();
  BraidRep rep = build_rep(t, ring.label_index("X_e"), ring.label_index("Y"), 4);
  REQUIRE(rep.dim() == 3);
  const TowerMatrix T = swap_last_two();
  const TowerNumber gamma = z48(2);
  const TowerNumber omega = z48(8) - TowerNumber(1L);
  const TowerNumber one(1L);
  CHECK((T * rep.generators[0] * T).scaled(gamma.inv()) == TowerMatrix::diagonal({one, omega, one}));
  CHECK((T * rep.generators[2] * T).scaled(gamma.inv()) == TowerMatrix::diagonal({one, one, omega}));
}

TEST_CASE("odd generators are diagonal with R^{aa}_{t_j}") {
  for (const auto& rc : braid_cases(20)) {
    const FSymbolTable& t = solved(rc.ring);
    BraidContext ctx(t, rc.a, rc.b, rc.m);
    for (int j = 1; 2 * j - 1 <= rc.m - 1; ++j) {
      TowerMatrix s = ctx.sigma_odd(j);
      CHECK(s.is_diagonal());
      for (int i = 0; i < ctx.dim(); ++i)
        CHECK(s(i, i) == TowerNumber(t.ring().R(rc.a, rc.a, ctx.basis()[i].t[j - 1])));
    }
    CHECK_THROWS_AS(ctx.sigma_odd(0), DomainError);
    CHECK_THROWS_AS(ctx.sigma(rc.m), DomainError);
  }
}

TEST_CASE("sigma2_b3 for Fibonacci and Ising") {
  const FSymbolTable& fib = solved("fibonacci");
  const int tau = fib.ring().label_index("tau");
  TowerMatrix s2 = sigma2_b3(fib, tau, tau);
  REQUIRE(s2.rows() == 2);
  BraidContext ctx(fib, tau, tau, 3);
  TowerMatrix s1 = ctx.sigma_odd(1);
  CHECK(s1 == TowerMatrix::diagonal({TowerNumber(fib.ring().R(tau, tau, tau)), TowerNumber(fib.ring().R(tau, tau, 0))}));
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK(s1 != s2);

  const FSymbolTable& ising = solved("ising");
  const int sigma = ising.ring().label_index("sigma");
  BigMatrix u = to_big(sigma2_b3(ising, sigma, sigma));
  CHECK(distance_from_identity_inf(u.adjoint() * u) < BigReal(1e-30));

  // Unique intermediate label: the B_3 block is the scalar sigma_1.
  BraidContext one_dim(fib, tau, 0, 3);
  REQUIRE(one_dim.dim() == 1);
  CHECK(sigma2_b3(fib, tau, 0) == one_dim.sigma_odd(1));
}

TEST_CASE("sigma2_b4 one-dimensional case and unitarity") {
  const FSymbolTable& su21 = solved("su2-1");
  const int half = 1;
  TowerMatrix s = sigma2_b4(su21, half, 0);
  REQUIRE(s.rows() == 1);
  CHECK(s(0, 0) == TowerNumber(su21.ring().R(half, half, 0)));

  const FSymbolTable& su24 = solved("su2-4");
  const FusionRing& ring = su24.ring();
  BigMatrix u = to_big(sigma2_b4(su24, ring.label_index("X_e"), ring.label_index("Y")));
  CHECK(distance_from_identity_inf(u.adjoint() * u) < BigReal(1e-30));
}

TEST_CASE("braid relations hold exactly on every catalog representation") {
  int checked = 0;
  for (const auto& rc : braid_cases()) {
    const FSymbolTable& t = solved(rc.ring);
    BraidRep rep = build_rep(t, rc.a, rc.b, rc.m);
    std::string why;
    CAPTURE(rc.ring);
    CAPTURE(rc.a);
    CAPTURE(rc.b);
    CAPTURE(rc.m);
    CHECK_MESSAGE(braid_relations_hold(rep.generators, &why), why);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("braid relation check rejects mismatched odd generators") {
  const FSymbolTable& fib = solved("fibonacci");
  BraidRep rep = build_rep(fib, 1, 1, 3);
  std::vector<TowerMatrix> g{rep.inverses[0], rep.generators[1]};
  CHECK_FALSE(braid_relations_hold(g));
}

TEST_CASE("even generators couple only the local labels") {
  for (const auto& rc : braid_cases(30)) {
    const FSymbolTable& t = solved(rc.ring);
    BraidContext ctx(t, rc.a, rc.b, rc.m);
    const int r = rc.m / 2;
    for (int j = 1; 2 * j <= rc.m - 1; ++j) {
      TowerMatrix s = ctx.sigma_even(j);
      const bool tail = rc.m % 2 == 1 && j == r;
      for (int i = 0; i < ctx.dim(); ++i)
        for (int k = 0; k < ctx.dim(); ++k) {
          if (s(i, k).is_zero()) continue;
          const BasisState& x = ctx.basis()[i];
          const BasisState& y = ctx.basis()[k];
          for (int q = 0; q < r; ++q) {
            const bool coupled = tail ? q == r - 1 : (q == j - 1 || q == j);
            if (!coupled) CHECK(x.t[q] == y.t[q]);
          }
          // Chain index of l_{j-1} (or l_{r-1} in the tail case) in s.l.
          const int free_l = tail ? r - 2 : j - 2;
          for (int q = 0; q < static_cast<int>(x.l.size()); ++q)
            if (q != free_l) CHECK(x.l[q] == y.l[q]);
        }
    }
  }
}

TEST_CASE("Fibonacci five strands uses the odd tail block") {
  const FSymbolTable& fib = solved("fibonacci");
  BraidContext ctx(fib, 1, 1, 5);
  REQUIRE(ctx.dim() == 5);
  TowerMatrix s3 = ctx.sigma(3), s4 = ctx.sigma(4);
  CHECK_FALSE(s4.is_diagonal());
  CHECK(s3 * s4 * s3 == s4 * s3 * s4);
}

TEST_CASE("generators are unitary at high precision") {
  for (const auto& rc : braid_cases(20)) {
    BraidRep rep = build_rep(solved(rc.ring), rc.a, rc.b, rc.m);
    for (const auto& g : rep.generators) {
      BigMatrix u = to_big(g);
      CHECK(distance_from_identity_inf(u.adjoint() * u) < BigReal(1e-30));
    }
  }
}

TEST_CASE("build_rep inverses and domain errors") {
  const FSymbolTable& su24 = solved("su2-4");
  const FusionRing& ring = su24.ring();
  BraidRep rep = build_rep(su24, ring.label_index("X_e"), ring.label_index("Y"), 4);
  for (std::size_t i = 0; i < rep.generators.size(); ++i)
    CHECK(rep.generators[i] * rep.inverses[i] == TowerMatrix::identity(rep.dim()));
  CHECK_THROWS_AS(rep.generator(0), DomainError);
  CHECK_THROWS_AS(rep.generator(4), DomainError);
  CHECK_THROWS_AS(build_rep(solved("ising"), 1, 1, 4), DomainError);
  CHECK_THROWS_AS(build_rep(solved("ising"), 1, 1, 2), DomainError);
}

TEST_CASE("word traces are invariant under symmetric sign gauges") {
  std::mt19937 rng(7);
  for (const std::string name : {"fibonacci", "ising"}) {
    const FSymbolTable& t = solved(name);
    const int a = 1;
    for (int trial = 0; trial < 3; ++trial) {
      FSymbolTable g = apply_gauge(t, random_sign_gauge(t.ring(), rng));
      for (int b = 0; b < t.ring().rank(); ++b) {
        if (fusion_multiplicity(t.ring(), a, b, 4) == 0) continue;
        BraidRep x = build_rep(t, a, b, 4), y = build_rep(g, a, b, 4);
        for (int len = 1; len <= 4; ++len) {
          std::vector<std::vector<int>> words;
          all_words(3, len, words);
          for (const auto& w : words) CHECK(word_matrix(x, w).trace() == word_matrix(y, w).trace());
        }
      }
    }
  }
}

TEST_CASE("representation export") {
  const FSymbolTable& su24 = solved("su2-4");
  const FusionRing& ring = su24.ring();
  BraidRep rep = build_rep(su24, ring.label_index("X_e"), ring.label_index("Y"), 4);
  auto j = rep_to_json(rep, 20);
  CHECK(j["basis"] == nlohmann::json::array({"(Y,Y)", "(Y,one)", "(one,Y)"}));
  REQUIRE(j["generators"].size() == 3);
  CHECK(j["generators"][0][0][0][0].get<std::string>().substr(0, 8) == "0.965925");
  std::string text = rep_to_text(rep);
  CHECK(text.rfind("(Y,Y) (Y,one) (one,Y)\n", 0) == 0);
  CHECK(text.find("sigma_3:") != std::string::npos);
}
