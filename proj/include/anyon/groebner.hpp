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

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "anyon/sparsepoly.hpp"

namespace anyon {

/** Full reduction of p modulo basis; the remainder has no term divisible by a leading monomial. */
template <class K>
Poly<K> reduce_full(Poly<K> p, const std::vector<const Poly<K>*>& basis) {
  std::vector<typename Poly<K>::Term> rem;
  while (!p.is_zero()) {
    const auto& [m, c] = p.terms().front();
    const Poly<K>* div = nullptr;
    for (const Poly<K>* g : basis) {
      if (g->leading_monomial().divides(m)) {
        div = g;
        break;
      }
    }
    if (div) {
      K q = c / div->leading_coefficient();
      p -= div->mul_term(m.divide(div->leading_monomial()), q);
    } else {
      rem.push_back(p.terms().front());
      std::vector<typename Poly<K>::Term> tail(p.terms().begin() + 1, p.terms().end());
      p = Poly<K>::from_terms(p.nvars(), std::move(tail));
    }
  }
  return Poly<K>::from_terms(p.nvars(), std::move(rem));
}

template <class K>
Poly<K> reduce_full(const Poly<K>& p, const std::vector<Poly<K>>& basis) {
  std::vector<const Poly<K>*> ptrs;
  for (const auto& g : basis) ptrs.push_back(&g);
  return reduce_full(p, ptrs);
}

/**
 * Reduced Groebner basis under degrevlex, monic and sorted by increasing
 * leading monomial; {1} for the unit ideal and {} for the zero ideal.
 * nullopt when the input has more than var_limit distinct variables.
 * Pairs are chosen by the normal strategy and pruned with the Gebauer-Moeller
 * criteria.
 */
template <class K>
std::optional<std::vector<Poly<K>>> buchberger(const std::vector<Poly<K>>& input, int var_limit) {
  std::vector<int> vars;
  int nvars = 0;
  for (const auto& p : input) {
    for (int v : p.variables()) vars.push_back(v);
    nvars = std::max(nvars, p.nvars());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (static_cast<int>(vars.size()) > var_limit) return std::nullopt;

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Poly<K>> polys;
  std::vector<char> active;
  std::vector<Pair> pairs;

  auto unit = [&]() { return std::vector<Poly<K>>{Poly<K>(nvars, K(1))}; };

  auto active_ptrs = [&]() {
    std::vector<const Poly<K>*> out;
    for (std::size_t k = 0; k < polys.size(); ++k)
      if (active[k]) out.push_back(&polys[k]);
    return out;
  };

  auto update = [&](Poly<K> h) {
    std::size_t hi = polys.size();
    const Monomial hm = h.leading_monomial();
    polys.push_back(std::move(h));
    active.push_back(1);
    std::vector<Pair> c, d;
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g]) c.push_back({g, hi, Monomial::lcm(polys[g].leading_monomial(), hm)});
    for (std::size_t k = 0; k < c.size(); ++k) {
      bool keep = Monomial::coprime(hm, polys[c[k].i].leading_monomial());
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l)
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        for (std::size_t l = 0; l < d.size() && keep; ++l)
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      const Monomial& lg1 = polys[p.i].leading_monomial();
      const Monomial& lg2 = polys[p.j].leading_monomial();
      if (!hm.divides(p.lcm) || Monomial::lcm(lg1, hm) == p.lcm || Monomial::lcm(hm, lg2) == p.lcm) {
        next.push_back(std::move(p));
      }
    }
    for (auto& p : d)
      if (!Monomial::coprime(hm, polys[p.i].leading_monomial())) next.push_back(std::move(p));
    pairs = std::move(next);
    for (std::size_t g = 0; g < hi; ++g)
      if (active[g] && hm.divides(polys[g].leading_monomial())) active[g] = 0;
  };

  // Seed with the inputs reduced against each other as they arrive.
  std::vector<Poly<K>> seeds;
  for (const auto& p : input)
    if (!p.is_zero()) seeds.push_back(p.monic());
  std::sort(seeds.begin(), seeds.end(), [](const Poly<K>& a, const Poly<K>& b) {
    return degrevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  for (auto& s : seeds) {
    Poly<K> r = reduce_full(s, active_ptrs());
    if (r.is_zero()) continue;
    if (r.is_unit_constant()) return unit();
    update(r.monic());
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
      int c = degrevlex_cmp(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
    });
    Pair p = *best;
    pairs.erase(best);
    const Poly<K>& f = polys[p.i];
    const Poly<K>& g = polys[p.j];
    Poly<K> s = f.mul_term(p.lcm.divide(f.leading_monomial()), g.leading_coefficient()) -
                g.mul_term(p.lcm.divide(g.leading_monomial()), f.leading_coefficient());
    Poly<K> r = reduce_full(std::move(s), active_ptrs());
    if (r.is_zero()) continue;
    if (r.is_unit_constant()) return unit();
    update(r.monic());
  }

  // Interreduce the minimal basis.
  std::vector<Poly<K>> g;
  for (std::size_t k = 0; k < polys.size(); ++k)
    if (active[k]) g.push_back(polys[k]);
  std::vector<Poly<K>> out;
  for (std::size_t k = 0; k < g.size(); ++k) {
    std::vector<const Poly<K>*> others;
    for (std::size_t l = 0; l < g.size(); ++l)
      if (l != k) others.push_back(&g[l]);
    Poly<K> r = reduce_full(g[k], others);
    out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [](const Poly<K>& a, const Poly<K>& b) {
    return degrevlex_cmp(a.leading_monomial(), b.leading_monomial()) < 0;
  });
  return out;
}

}  // namespace anyon
