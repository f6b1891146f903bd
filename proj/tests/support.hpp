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

#include <map>
#include <random>
#include <string>
#include <vector>

#include "anyon/braidrep.hpp"
#include "anyon/fsolve.hpp"

namespace anyon::testing {

inline const FSymbolTable& solved(const std::string& name) {
  static std::map<std::string, FSymbolTable> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, solve(builtin(name))).first;
  return it->second;
}

/** Symmetric sign gauge: f^{ab}_c = f^{ba}_c, 1 on vacuum triples. */
inline Gauge random_sign_gauge(const FusionRing& ring, std::mt19937& rng) {
  Gauge g;
  std::bernoulli_distribution coin(0.5);
  const int one = ring.vacuum();
  for (int a = 0; a < ring.rank(); ++a)
    for (int b = a; b < ring.rank(); ++b)
      for (int c : ring.fuse(a, b)) {
        if (a == one || b == one) continue;
        TowerNumber s(coin(rng) ? 1L : -1L);
        g[{a, b, c}] = s;
        g[{b, a, c}] = s;
      }
  return g;
}

/** Multiplicity of b in a^m from repeated fusion with a. */
inline long fusion_multiplicity(const FusionRing& ring, int a, int b, int m) {
  std::vector<long> v(ring.rank(), 0);
  v[a] = 1;
  for (int k = 1; k < m; ++k) {
    std::vector<long> w(ring.rank(), 0);
    for (int d = 0; d < ring.rank(); ++d)
      for (int c = 0; c < ring.rank(); ++c)
        if (ring.N(d, a, c)) w[c] += v[d];
    v = w;
  }
  return v[b];
}

/** Every (a, b, m) with 3 <= m <= 6 and 1 <= dim <= max_dim. */
struct RepCase {
  std::string ring;
  int a, b, m;
};

inline std::vector<RepCase> braid_cases(int max_dim = 40) {
  std::vector<RepCase> out;
  for (const auto& name : builtin_names()) {
    FusionRing ring = builtin(name);
    for (int a = 0; a < ring.rank(); ++a)
      for (int b = 0; b < ring.rank(); ++b)
        for (int m = 3; m <= 6; ++m) {
          long d = fusion_multiplicity(ring, a, b, m);
          if (d >= 1 && d <= max_dim) out.push_back({name, a, b, m});
        }
  }
  return out;
}

inline bool braid_relations_hold(const std::vector<TowerMatrix>& g, std::string* failure = nullptr) {
  for (std::size_t i = 0; i + 1 < g.size(); ++i) {
    if (g[i] * g[i + 1] * g[i] != g[i + 1] * g[i] * g[i + 1]) {
      if (failure) *failure = "sigma_" + std::to_string(i + 1) + " sigma_" + std::to_string(i + 2) + " braid relation";
      return false;
    }
  }
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t k = i + 2; k < g.size(); ++k)
      if (g[i] * g[k] != g[k] * g[i]) {
        if (failure) *failure = "sigma_" + std::to_string(i + 1) + " sigma_" + std::to_string(k + 1) + " commutation";
        return false;
      }
  return true;
}

/** Swaps basis states 1 and 2 (0-based) of a 3-dimensional rep. */
inline TowerMatrix swap_last_two() {
  TowerMatrix t(3, 3);
  t(0, 0) = TowerNumber(1L);
  t(1, 2) = TowerNumber(1L);
  t(2, 1) = TowerNumber(1L);
  return t;
}

/** All words over +-1..+-k of length exactly len, in lex order. */
inline void all_words(int k, int len, std::vector<std::vector<int>>& out, std::vector<int> prefix = {}) {
  if (static_cast<int>(prefix.size()) == len) {
    out.push_back(prefix);
    return;
  }
  for (int g = 1; g <= k; ++g)
    for (int s : {1, -1}) {
      prefix.push_back(s * g);
      all_words(k, len, out, prefix);
      prefix.pop_back();
    }
}

}  // namespace anyon::testing
