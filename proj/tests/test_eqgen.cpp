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
#include <complex>
#include <map>
#include <set>
#include <sstream>

#include "anyon/eqgen.hpp"
#include "doctest.h"

using namespace anyon;

namespace {

using Cx = std::complex<double>;
using Dense = std::map<std::vector<int>, CycloNumber>;

// Brute-force oracle: every tuple of C^9 (resp. C^6), F-entries looked up by
// the admissibility rule directly, dense exponent maps, monic dedup.
struct Oracle {
  const FusionRing& r;
  const SextupleIndex& idx;
  int n;

  bool adm(int a, int b, int c, int d, int e, int f) const {
    return r.N(a, b, e) && r.N(e, c, d) && r.N(b, c, f) && r.N(a, f, d);
  }
  // Returns false for a zero entry; otherwise appends the variable or nothing.
  bool entry(std::vector<int>& exps, int a, int b, int c, int d, int e, int f) const {
    if (!adm(a, b, c, d, e, f)) return false;
    if (a == r.vacuum() || b == r.vacuum() || c == r.vacuum()) return true;
    exps[idx.index(Sextuple{a, b, c, d, e, f})] += 1;
    return true;
  }
  static std::string monic_key(Dense p) {
    for (auto it = p.begin(); it != p.end();) it = it->second.is_zero() ? p.erase(it) : std::next(it);
    if (p.empty()) return "";
    // Any fixed term works as a normalizer for equality up to scaling.
    CycloNumber lead = p.rbegin()->second;
    std::ostringstream os;
    for (const auto& [e, c] : p) {
      for (int x : e) os << x << ",";
      os << ":" << (c / lead).str() << ";";
    }
    return os.str();
  }
  std::size_t pentagons() const {
    std::set<std::string> keys;
    std::vector<int> t(9);
    for (long code = 0; code < std::lround(std::pow(n, 9)); ++code) {
      long x = code;
      for (int i = 8; i >= 0; --i) {
        t[i] = x % n;
        x /= n;
      }
      auto [a, b, c, d, e, f, g, k, l] = std::tuple(t[0], t[1], t[2], t[3], t[4], t[5], t[6], t[7], t[8]);
      Dense p;
      std::vector<int> ex(idx.size(), 0);
      if (entry(ex, f, c, d, e, g, l) && entry(ex, a, b, l, e, f, k)) p[ex] += CycloNumber(1);
      for (int h = 0; h < n; ++h) {
        std::vector<int> ey(idx.size(), 0);
        if (entry(ey, a, b, c, g, f, h) && entry(ey, a, h, d, e, g, k) && entry(ey, b, c, d, k, h, l))
          p[ey] -= CycloNumber(1);
      }
      std::string key = monic_key(p);
      if (!key.empty()) keys.insert(key);
    }
    return keys.size();
  }
  std::size_t hexagons(int sign) const {
    std::set<std::string> keys;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          for (int d = 0; d < n; ++d)
            for (int e = 0; e < n; ++e)
              for (int g = 0; g < n; ++g) {
                auto R = [&](int x, int y, int z) { return sign > 0 ? r.R(x, y, z) : r.R(x, y, z).inv(); };
                Dense p;
                std::vector<int> ex(idx.size(), 0);
                if (r.N(a, c, e) && r.N(b, c, g) && entry(ex, a, c, b, d, e, g)) p[ex] += R(a, c, e) * R(b, c, g);
                for (int f = 0; f < n; ++f) {
                  std::vector<int> ey(idx.size(), 0);
                  if (r.N(f, c, d) && entry(ey, c, a, b, d, e, f) && entry(ey, a, b, c, d, f, g)) p[ey] -= R(f, c, d);
                }
                std::string key = monic_key(p);
                if (!key.empty()) keys.insert(key);
              }
    return keys.size();
  }
};

Cx eval(const CPoly& p, const std::vector<Cx>& xs) {
  Cx s = 0;
  for (const auto& [m, c] : p.terms()) {
    Cx t = c.embed();
    for (const auto& vp : m.pairs()) t *= std::pow(xs[vp.var], vp.pow);
    s += t;
  }
  return s;
}

// Textbook Fibonacci F-symbols: F^{ttt}_t = [[1/phi, 1/sqrt phi], [1/sqrt phi, -1/phi]].
std::vector<Cx> fibonacci_values(const SextupleIndex& idx) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  std::vector<Cx> xs(idx.size(), 1.0);
  xs[idx.index(Sextuple{1, 1, 1, 1, 0, 0})] = 1 / phi;
  xs[idx.index(Sextuple{1, 1, 1, 1, 0, 1})] = 1 / std::sqrt(phi);
  xs[idx.index(Sextuple{1, 1, 1, 1, 1, 0})] = 1 / std::sqrt(phi);
  xs[idx.index(Sextuple{1, 1, 1, 1, 1, 1})] = -1 / phi;
  return xs;
}

}  // namespace

TEST_CASE("trivial ring generates nothing") {
  FusionRing trivial("trivial", {"one"}, 1);
  trivial.set_N(0, 0, 0, true);
  trivial.set_R(0, 0, 0, Rational(0));
  SextupleIndex idx(trivial);
  CHECK(gen_pentagon(trivial, idx).size() == 0);
  CHECK(gen_hexagon(trivial, idx, 1).size() == 0);
  CHECK(gen_orthogonality(trivial, idx).size() == 0);
  CHECK(fixed_assignments(trivial).size() == 1);
}

TEST_CASE("equation counts match the brute-force oracle") {
  for (const char* name : {"fibonacci", "ising", "su2-2"}) {
    FusionRing r = builtin(name);
    SextupleIndex idx(r);
    Oracle o{r, idx, r.rank()};
    EquationSystem pent = gen_pentagon(r, idx);
    CHECK_MESSAGE(pent.size() == o.pentagons(), name);
    CHECK(pent.tuples_covered == static_cast<std::uint64_t>(std::lround(std::pow(r.rank(), 9))));
    for (int sign : {1, -1}) CHECK_MESSAGE(gen_hexagon(r, idx, sign).size() == o.hexagons(sign), name);
  }
}

TEST_CASE("pentagon structure") {
  FusionRing r = builtin("su2-2");
  SextupleIndex idx(r);
  EquationSystem pent = gen_pentagon(r, idx);
  for (const auto& p : pent.polys) {
    CHECK(p.total_degree() <= 3);
    CHECK(p.is_canonical());
    CHECK(p.leading_coefficient().is_one());
    for (const auto& t : p.terms()) CHECK(t.first.degree() <= 3);
  }
  CHECK(pent.provenance.size() == pent.size());
  CHECK(pent.generated >= pent.size());
}

TEST_CASE("striped generation does not depend on the worker count") {
  FusionRing r = builtin("ising");
  SextupleIndex idx(r);
  EquationSystem one = gen_pentagon(r, idx, {1, nullptr});
  EquationSystem four = gen_pentagon(r, idx, {4, nullptr});
  CHECK(one.polys == four.polys);
  CHECK(one.provenance == four.provenance);
  CHECK(gen_hexagon(r, idx, 1, {3, nullptr}).polys == gen_hexagon(r, idx, 1, {1, nullptr}).polys);
}

TEST_CASE("orthogonality blocks") {
  FusionRing fib = builtin("fibonacci");
  SextupleIndex idx(fib);
  EquationSystem orth = gen_orthogonality(fib, idx);
  int from_tttt = 0;
  for (const auto& t : orth.provenance)
    if (t[0] == 1 && t[1] == 1 && t[2] == 1 && t[3] == 1) ++from_tttt;
  CHECK(from_tttt == 3);
  // The 1x1 block F^{ttt}_1 gives x^2 - 1.
  int x = idx.index(Sextuple{1, 1, 1, 0, 1, 1});
  CPoly expected = CPoly::variable(idx.size(), x) * CPoly::variable(idx.size(), x) - CPoly(idx.size(), CycloNumber(1));
  CHECK(std::find(orth.polys.begin(), orth.polys.end(), expected) != orth.polys.end());
  auto [rows, cols] = f_block_labels(fib, 1, 1, 1, 1);
  CHECK(rows == std::vector<int>{0, 1});
  CHECK(cols == std::vector<int>{0, 1});
}

TEST_CASE("fixed assignments follow the triangle axiom") {
  FusionRing fib = builtin("fibonacci");
  SextupleIndex idx(fib);
  auto fixed = fixed_assignments(fib);
  bool found = false;
  for (const auto& [s, v] : fixed) {
    CHECK(v == CycloNumber(1));
    CHECK(idx.index(s) == -1);
    if (s == Sextuple{0, 1, 1, 0, 1, 0}) found = true;
  }
  CHECK(found);  // F^{1tt}_1 = [1] with row tau and column one
  CHECK(f_entry(fib, idx, 0, 1, 1, 0, 1, 0).constant == 1);
  CHECK(f_entry(fib, idx, 1, 1, 1, 0, 0, 0).constant == 0);
}

TEST_CASE("textbook Fibonacci data annihilates the generated systems") {
  FusionRing fib = builtin("fibonacci");
  SextupleIndex idx(fib);
  auto xs = fibonacci_values(idx);
  for (const auto& p : gen_pentagon(fib, idx).polys) CHECK(std::abs(eval(p, xs)) < 1e-12);
  for (int sign : {1, -1})
    for (const auto& p : gen_hexagon(fib, idx, sign).polys) CHECK(std::abs(eval(p, xs)) < 1e-12);
  for (const auto& p : gen_orthogonality(fib, idx).polys) CHECK(std::abs(eval(p, xs)) < 1e-12);
  // Negating one off-diagonal entry violates the pentagon.
  xs[idx.index(Sextuple{1, 1, 1, 1, 0, 1})] *= -1.0;
  double worst = 0;
  for (const auto& p : gen_pentagon(fib, idx).polys) worst = std::max(worst, std::abs(eval(p, xs)));
  CHECK(worst > 1e-3);
}

TEST_CASE("debug dump names variables by sextuple") {
  FusionRing fib = builtin("fibonacci");
  SextupleIndex idx(fib);
  std::ostringstream os;
  gen_orthogonality(fib, idx).dump(os, fsymbol_namer(fib, idx));
  CHECK(os.str().find("F[tau,tau,tau,one,tau,tau]^2 - 1") != std::string::npos);
}
