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

#include "anyon/sparsepoly.hpp"

namespace anyon {

Monomial Monomial::from_pairs(std::vector<VarPow> pairs) {
  std::sort(pairs.begin(), pairs.end(), [](const VarPow& a, const VarPow& b) { return a.var < b.var; });
  Monomial m;
  for (const auto& vp : pairs) {
    if (vp.pow < 0) throw DomainError("negative exponent");
    if (vp.pow == 0) continue;
    if (!m.e_.empty() && m.e_.back().var == vp.var) {
      m.e_.back().pow += vp.pow;
    } else {
      m.e_.push_back(vp);
    }
    m.degree_ += vp.pow;
  }
  return m;
}

int Monomial::degree_in(int v) const {
  for (const auto& vp : e_) {
    if (vp.var == v) return vp.pow;
    if (vp.var > v) break;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  const auto& x = a.e_;
  const auto& y = b.e_;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].var < y[j].var)) {
      r.e_.push_back(x[i++]);
    } else if (i == x.size() || y[j].var < x[i].var) {
      r.e_.push_back(y[j++]);
    } else {
      r.e_.push_back({x[i].var, x[i].pow + y[j].pow});
      ++i;
      ++j;
    }
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

bool Monomial::divides(const Monomial& b) const {
  if (degree_ > b.degree_) return false;
  std::size_t j = 0;
  for (const auto& vp : e_) {
    while (j < b.e_.size() && b.e_[j].var < vp.var) ++j;
    if (j == b.e_.size() || b.e_[j].var != vp.var || b.e_[j].pow < vp.pow) return false;
  }
  return true;
}

Monomial Monomial::divide(const Monomial& o) const {
  Monomial r;
  std::size_t j = 0;
  for (const auto& vp : e_) {
    int p = vp.pow;
    if (j < o.e_.size() && o.e_[j].var == vp.var) p -= o.e_[j++].pow;
    if (p < 0) throw DomainError("monomial division with remainder");
    if (p > 0) r.e_.push_back({vp.var, p});
  }
  if (j != o.e_.size()) throw DomainError("monomial division with remainder");
  r.degree_ = degree_ - o.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t i = 0, j = 0;
  while (i < a.e_.size() || j < b.e_.size()) {
    if (j == b.e_.size() || (i < a.e_.size() && a.e_[i].var < b.e_[j].var)) {
      r.e_.push_back(a.e_[i++]);
    } else if (i == a.e_.size() || b.e_[j].var < a.e_[i].var) {
      r.e_.push_back(b.e_[j++]);
    } else {
      r.e_.push_back({a.e_[i].var, std::max(a.e_[i].pow, b.e_[j].pow)});
      ++i;
      ++j;
    }
    r.degree_ += r.e_.back().pow;
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  std::size_t j = 0;
  for (const auto& vp : a.e_) {
    while (j < b.e_.size() && b.e_[j].var < vp.var) ++j;
    if (j < b.e_.size() && b.e_[j].var == vp.var) {
      r.e_.push_back({vp.var, std::min(vp.pow, b.e_[j].pow)});
      r.degree_ += r.e_.back().pow;
    }
  }
  return r;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b) {
  std::size_t j = 0;
  for (const auto& vp : a.e_) {
    while (j < b.e_.size() && b.e_[j].var < vp.var) ++j;
    if (j < b.e_.size() && b.e_[j].var == vp.var) return false;
  }
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = static_cast<std::size_t>(degree_) * 0x100000001b3ULL;
  for (const auto& vp : e_) {
    h ^= (static_cast<std::size_t>(vp.var) << 8 | static_cast<std::size_t>(vp.pow)) + 0x9e3779b97f4a7c15ULL +
         (h << 6) + (h >> 2);
  }
  return h;
}

std::string Monomial::str(const std::function<std::string(int)>& namer) const {
  if (e_.empty()) return "1";
  std::string s;
  for (const auto& vp : e_) {
    if (!s.empty()) s += "*";
    s += namer(vp.var);
    if (vp.pow > 1) s += "^" + std::to_string(vp.pow);
  }
  return s;
}

int degrevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  const auto& x = a.pairs();
  const auto& y = b.pairs();
  // Equal degree: the first difference from the smallest variable decides,
  // and a smaller exponent there means a larger monomial.
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].var != y[i].var) return x[i].var < y[i].var ? -1 : 1;
    if (x[i].pow != y[i].pow) return x[i].pow < y[i].pow ? 1 : -1;
  }
  return 0;
}

std::string default_var_name(int v) { return "x" + std::to_string(v); }

std::atomic<std::size_t>& PolyDiagnostics::oversize_count() {
  static std::atomic<std::size_t> count{0};
  return count;
}

std::atomic<std::size_t>& PolyDiagnostics::max_terms_seen() {
  static std::atomic<std::size_t> m{0};
  return m;
}

void PolyDiagnostics::note_size(std::size_t terms) {
  if (terms > kSoftTermLimit) oversize_count().fetch_add(1, std::memory_order_relaxed);
  auto& m = max_terms_seen();
  std::size_t cur = m.load(std::memory_order_relaxed);
  while (terms > cur && !m.compare_exchange_weak(cur, terms, std::memory_order_relaxed)) {
  }
}

namespace detail {

std::vector<std::vector<int>> collect_components(const std::vector<int>& vertices, DisjointSets& ds) {
  std::map<int, std::vector<int>> by_root;
  for (int v : vertices) by_root[ds.find(v)].push_back(v);
  std::vector<std::vector<int>> comps;
  for (auto& [root, vs] : by_root) comps.push_back(std::move(vs));
  std::stable_sort(comps.begin(), comps.end(),
                   [](const std::vector<int>& a, const std::vector<int>& b) { return a.size() > b.size(); });
  return comps;
}

}  // namespace detail

TPoly to_tower(const CPoly& p) {
  std::vector<TPoly::Term> ts;
  ts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) ts.push_back({m, TowerNumber(c)});
  return TPoly::from_terms(p.nvars(), std::move(ts));
}

}  // namespace anyon
