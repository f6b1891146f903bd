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
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "anyon/cyclo.hpp"
#include "anyon/errors.hpp"
#include "anyon/tower.hpp"

namespace anyon {

struct VarPow {
  int var;
  int pow;
  bool operator==(const VarPow& o) const { return var == o.var && pow == o.pow; }
};

/**
 * Sparse exponent vector: (variable, power) pairs with power > 0 and strictly
 * increasing variable index. Variables are ordered x_0 < x_1 < ...
 */
class Monomial {
 public:
  using Storage = boost::container::small_vector<VarPow, 4>;

  Monomial() = default;
  /** Pairs may be unsorted and repeated; zero powers are dropped. */
  static Monomial from_pairs(std::vector<VarPow> pairs);
  static Monomial var(int v, int pow = 1) {
    Monomial m;
    if (pow > 0) {
      m.e_.push_back({v, pow});
      m.degree_ = pow;
    }
    return m;
  }

  const Storage& pairs() const { return e_; }
  bool is_one() const { return e_.empty(); }
  int degree() const { return degree_; }
  int degree_in(int v) const;
  /** Largest variable index, or -1 for the unit monomial. */
  int max_var() const { return e_.empty() ? -1 : e_.back().var; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool divides(const Monomial& b) const;
  /** Requires o.divides(*this). */
  Monomial divide(const Monomial& o) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial gcd(const Monomial& a, const Monomial& b);
  /** True when the monomials share no variable. */
  static bool coprime(const Monomial& a, const Monomial& b);

  bool operator==(const Monomial& o) const { return degree_ == o.degree_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }
  std::size_t hash() const;
  std::string str(const std::function<std::string(int)>& namer) const;

 private:
  Storage e_;
  int degree_ = 0;
};

/** Degree-reverse-lexicographic comparison: -1, 0 or +1 as a <, =, > b. */
int degrevlex_cmp(const Monomial& a, const Monomial& b);

inline bool degrevlex_greater(const Monomial& a, const Monomial& b) { return degrevlex_cmp(a, b) > 0; }

std::string default_var_name(int v);

/** Counts polynomials that exceeded the soft term limit. */
struct PolyDiagnostics {
  static constexpr std::size_t kSoftTermLimit = 20;
  static std::atomic<std::size_t>& oversize_count();
  static std::atomic<std::size_t>& max_terms_seen();
  static void note_size(std::size_t terms);
};

/**
 * Polynomial over K with terms in strictly decreasing degrevlex order and no
 * zero coefficients. nvars is the ambient variable count.
 */
template <class K>
class Poly {
 public:
  using Term = std::pair<Monomial, K>;

  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const K& constant) : nvars_(nvars) {
    if (!constant.is_zero()) terms_.push_back({Monomial(), constant});
  }
  static Poly variable(int nvars, int v) {
    check_var(nvars, v);
    Poly p(nvars);
    p.terms_.push_back({Monomial::var(v), K(1)});
    return p;
  }
  static Poly term(int nvars, Monomial m, K c) {
    if (m.max_var() >= nvars) throw DomainError("monomial variable outside the ring");
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /** Sorts, merges like terms and drops zeros. */
  static Poly from_terms(int nvars, std::vector<Term> terms) {
    for (const auto& t : terms) {
      if (t.first.max_var() >= nvars) throw DomainError("monomial variable outside the ring");
    }
    Poly p(nvars);
    p.terms_ = canonicalize(std::move(terms));
    return p;
  }

  int nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  /** Nonzero constant. */
  bool is_unit_constant() const { return terms_.size() == 1 && terms_[0].first.is_one(); }
  K constant_value() const {
    if (terms_.empty()) return K(0);
    return terms_.back().first.is_one() ? terms_.back().second : K(0);
  }
  const Monomial& leading_monomial() const { return terms_.front().first; }
  const K& leading_coefficient() const { return terms_.front().second; }
  int total_degree() const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }
  /** Largest variable index occurring, or -1. */
  int max_var() const {
    int v = -1;
    for (const auto& t : terms_) v = std::max(v, t.first.max_var());
    return v;
  }
  /** Sorted distinct variable indices. */
  std::vector<int> variables() const {
    std::vector<int> vs;
    for (const auto& t : terms_)
      for (const auto& vp : t.first.pairs()) vs.push_back(vp.var);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
  }
  int degree_in(int v) const {
    int d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree_in(v));
    return d;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = merge(*this, o, false); }
  Poly& operator-=(const Poly& o) { return *this = merge(*this, o, true); }
  friend Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
  friend Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check_compatible(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.nvars_);
    if (b.size() == 1) return a.mul_term(b.terms_[0].first, b.terms_[0].second);
    if (a.size() == 1) return b.mul_term(a.terms_[0].first, a.terms_[0].second);
    std::vector<Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) prod.push_back({s.first * t.first, s.second * t.second});
    Poly r(a.nvars_);
    r.terms_ = canonicalize(std::move(prod));
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly scalar_mul(const K& c) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly r = *this;
    for (auto& t : r.terms_) t.second = t.second * c;
    return r;
  }
  /** Multiplication by c*m; order is preserved since degrevlex is a monomial order. */
  Poly mul_term(const Monomial& m, const K& c) const {
    if (c.is_zero()) return Poly(nvars_);
    Poly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
    return r;
  }
  Poly pow(int n) const {
    Poly r(nvars_, K(1)), b = *this;
    for (; n > 0; n >>= 1) {
      if (n & 1) r *= b;
      if (n > 1) b *= b;
    }
    return r;
  }
  /** Leading coefficient scaled to 1; zero stays zero. */
  Poly monic() const {
    if (is_zero() || leading_coefficient().is_one()) return *this;
    return scalar_mul(leading_coefficient().inv());
  }

  bool operator==(const Poly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].first != o.terms_[i].first || terms_[i].second != o.terms_[i].second) return false;
    }
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }
  std::size_t hash() const {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (const auto& t : terms_) {
      h ^= t.first.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
      h ^= t.second.hash() + 0x9e3779b9 + (h << 6) + (h >> 2);
    }
    return h;
  }

  /** True when terms are strictly decreasing with nonzero coefficients. */
  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (terms_[i].second.is_zero()) return false;
      if (i > 0 && degrevlex_cmp(terms_[i - 1].first, terms_[i].first) <= 0) return false;
    }
    return true;
  }

  std::string str(const std::function<std::string(int)>& namer = default_var_name) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string cs = c.str();
      bool compound = cs.find_first_of("+- ", 1) != std::string::npos;
      bool neg = !compound && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      if (m.is_one()) {
        os << (compound ? "(" + cs + ")" : cs);
      } else if (cs == "1") {
        os << m.str(namer);
      } else {
        os << (compound ? "(" + cs + ")" : cs) << "*" << m.str(namer);
      }
    }
    return os.str();
  }

 private:
  static void check_var(int nvars, int v) {
    if (v < 0 || v >= nvars) throw DomainError("variable index outside the ring");
  }
  static void check_compatible(const Poly& a, const Poly& b) {
    if (a.nvars_ != b.nvars_) {
      throw DomainError("polynomials over different variable counts (" + std::to_string(a.nvars_) +
                        " vs " + std::to_string(b.nvars_) + ")");
    }
  }
  static std::vector<Term> canonicalize(std::vector<Term> ts) {
    std::sort(ts.begin(), ts.end(),
              [](const Term& x, const Term& y) { return degrevlex_cmp(x.first, y.first) > 0; });
    std::vector<Term> out;
    out.reserve(ts.size());
    for (auto& t : ts) {
      if (!out.empty() && out.back().first == t.first) {
        out.back().second += t.second;
      } else {
        if (!out.empty() && out.back().second.is_zero()) out.pop_back();
        out.push_back(std::move(t));
      }
    }
    if (!out.empty() && out.back().second.is_zero()) out.pop_back();
    return out;
  }
  static Poly merge(const Poly& a, const Poly& b, bool subtract) {
    check_compatible(a, b);
    Poly r(a.nvars_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      int c = i == a.size() ? -1 : j == b.size() ? 1 : degrevlex_cmp(a.terms_[i].first, b.terms_[j].first);
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        r.terms_.push_back({b.terms_[j].first, subtract ? -b.terms_[j].second : b.terms_[j].second});
        ++j;
      } else {
        K s = subtract ? a.terms_[i].second - b.terms_[j].second : a.terms_[i].second + b.terms_[j].second;
        if (!s.is_zero()) r.terms_.push_back({a.terms_[i].first, std::move(s)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  int nvars_ = 0;
  std::vector<Term> terms_;
};

using CPoly = Poly<CycloNumber>;
using TPoly = Poly<TowerNumber>;

/**
 * Read-only reduction state shared by workers in a round: triangular
 * assignments x_j := value(x_i, i < j), known squares x_j^2 = alpha_j, the
 * known-nonzero variables and optional precomputed powers of assigned values.
 */
template <class K>
class ReductionTables {
 public:
  explicit ReductionTables(int nvars = 0)
      : nvars_(nvars), assignments_(nvars), known_squares_(nvars), nonzero_(nvars, 1), powers_(nvars) {}

  int nvars() const { return nvars_; }
  /** Throws DomainError unless every variable of value is smaller than v. */
  void assign(int v, Poly<K> value) {
    if (value.max_var() >= v) {
      throw DomainError("non-triangular assignment for x" + std::to_string(v));
    }
    assignments_.at(v) = std::move(value);
    powers_[v].clear();
  }
  void clear_assignment(int v) {
    assignments_.at(v).reset();
    powers_[v].clear();
  }
  const std::optional<Poly<K>>& assignment(int v) const { return assignments_[v]; }
  bool is_assigned(int v) const { return assignments_[v].has_value(); }
  void set_known_square(int v, K alpha) {
    if (alpha.is_zero()) throw DomainError("known square must be nonzero");
    known_squares_.at(v) = std::move(alpha);
  }
  const std::optional<K>& known_square(int v) const { return known_squares_[v]; }
  void set_nonzero(int v, bool nz) { nonzero_.at(v) = nz ? 1 : 0; }
  bool is_nonzero(int v) const { return nonzero_[v] != 0; }

  /** Precomputes value^k for k <= var_degs[v] on assigned variables. */
  void precompute_powers(const std::vector<int>& var_degs) {
    for (int v = 0; v < nvars_; ++v) {
      if (!assignments_[v] || v >= static_cast<int>(var_degs.size())) continue;
      auto& pw = powers_[v];
      if (pw.empty()) pw.push_back(Poly<K>(nvars_, K(1)));
      while (static_cast<int>(pw.size()) <= var_degs[v]) pw.push_back(pw.back() * *assignments_[v]);
    }
  }
  /** value(v)^k, from the precomputed table when available. */
  Poly<K> power(int v, int k) const {
    const auto& pw = powers_[v];
    if (k < static_cast<int>(pw.size())) return pw[k];
    return assignments_[v]->pow(k);
  }

 private:
  int nvars_;
  std::vector<std::optional<Poly<K>>> assignments_;
  std::vector<std::optional<K>> known_squares_;
  std::vector<char> nonzero_;
  std::vector<std::vector<Poly<K>>> powers_;
};

/**
 * Replaces every assigned variable until none remains. Terminates because
 * assignments are triangular.
 */
template <class K>
Poly<K> substitute(const Poly<K>& p, const ReductionTables<K>& tables) {
  Poly<K> cur = p;
  for (;;) {
    bool hit = false;
    for (const auto& t : cur.terms()) {
      for (const auto& vp : t.first.pairs()) {
        if (tables.is_assigned(vp.var)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) return cur;
    std::vector<typename Poly<K>::Term> keep;
    Poly<K> acc(p.nvars());
    for (const auto& [m, c] : cur.terms()) {
      std::vector<VarPow> rest;
      std::vector<VarPow> subst;
      for (const auto& vp : m.pairs()) (tables.is_assigned(vp.var) ? subst : rest).push_back(vp);
      if (subst.empty()) {
        keep.push_back({m, c});
        continue;
      }
      Poly<K> prod = Poly<K>::term(p.nvars(), Monomial::from_pairs(rest), c);
      for (const auto& vp : subst) {
        prod *= tables.power(vp.var, vp.pow);
        if (prod.is_zero()) break;
      }
      acc += prod;
    }
    cur = Poly<K>::from_terms(p.nvars(), std::move(keep)) + acc;
  }
}

/** Substitution from a plain map; checks triangularity of each value. */
template <class K>
Poly<K> substitute(const Poly<K>& p, const std::map<int, Poly<K>>& assignments) {
  ReductionTables<K> tables(p.nvars());
  for (const auto& [v, value] : assignments) tables.assign(v, value);
  return substitute(p, tables);
}

/** Reduces x_j^{2k+r} to alpha_j^k x_j^r for every known square alpha_j. */
template <class K>
Poly<K> reduce_squares(const Poly<K>& p, const ReductionTables<K>& tables) {
  Poly<K> s = p;
  bool squares = false;
  for (const auto& t : s.terms()) {
    for (const auto& vp : t.first.pairs()) {
      if (vp.pow >= 2 && tables.known_square(vp.var)) squares = true;
    }
  }
  if (squares) {
    std::vector<typename Poly<K>::Term> ts;
    ts.reserve(s.size());
    for (const auto& [m, c] : s.terms()) {
      K coeff = c;
      std::vector<VarPow> pairs;
      for (const auto& vp : m.pairs()) {
        const auto& alpha = tables.known_square(vp.var);
        if (alpha && vp.pow >= 2) {
          coeff *= alpha->pow(vp.pow / 2);
          if (vp.pow % 2) pairs.push_back({vp.var, 1});
        } else {
          pairs.push_back(vp);
        }
      }
      ts.push_back({Monomial::from_pairs(std::move(pairs)), std::move(coeff)});
    }
    s = Poly<K>::from_terms(s.nvars(), std::move(ts));
  }
  return s;
}

/**
 * Substitutes assignments, reduces x_j^{2k+r} to alpha_j^k x_j^r, divides out
 * the monomial gcd over known-nonzero variables and makes the result monic.
 */
template <class K>
Poly<K> update_reduce(const Poly<K>& p, const ReductionTables<K>& tables) {
  Poly<K> s = reduce_squares(substitute(p, tables), tables);
  if (s.is_zero()) return s;
  std::optional<Monomial> g;
  for (const auto& t : s.terms()) {
    g = g ? Monomial::gcd(*g, t.first) : t.first;
    if (g->is_one()) break;
  }
  std::vector<VarPow> gp;
  for (const auto& vp : g->pairs()) {
    if (tables.is_nonzero(vp.var)) gp.push_back(vp);
  }
  if (!gp.empty()) {
    Monomial d = Monomial::from_pairs(std::move(gp));
    std::vector<typename Poly<K>::Term> ts;
    for (const auto& [m, c] : s.terms()) ts.push_back({m.divide(d), c});
    s = Poly<K>::from_terms(s.nvars(), std::move(ts));
  }
  PolyDiagnostics::note_size(s.size());
  return s.monic();
}

/** Undirected graph on variables; edge {i,j} when some term is divisible by x_i x_j. */
struct EquationsGraph {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;
  /** Connected components by decreasing size, ties by smallest vertex. */
  std::vector<std::vector<int>> components;
};

namespace detail {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

std::vector<std::vector<int>> collect_components(const std::vector<int>& vertices, DisjointSets& ds);

}  // namespace detail

template <class K>
EquationsGraph equations_graph(const std::vector<Poly<K>>& polys) {
  EquationsGraph g;
  int n = 0;
  for (const auto& p : polys) n = std::max(n, p.max_var() + 1);
  std::vector<char> seen(n, 0);
  detail::DisjointSets ds(n);
  for (const auto& p : polys) {
    for (const auto& t : p.terms()) {
      const auto& ps = t.first.pairs();
      for (std::size_t i = 0; i < ps.size(); ++i) {
        seen[ps[i].var] = 1;
        for (std::size_t j = i + 1; j < ps.size(); ++j) {
          g.edges.push_back({ps[i].var, ps[j].var});
          ds.unite(ps[i].var, ps[j].var);
        }
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  for (int v = 0; v < n; ++v)
    if (seen[v]) g.vertices.push_back(v);
  g.components = detail::collect_components(g.vertices, ds);
  return g;
}

/**
 * Groups variables that occur together in some polynomial, ordered like
 * EquationsGraph::components. Polynomials of different groups share no variable.
 */
template <class K>
std::vector<std::vector<int>> cooccurrence_components(const std::vector<Poly<K>>& polys) {
  int n = 0;
  for (const auto& p : polys) n = std::max(n, p.max_var() + 1);
  std::vector<char> seen(n, 0);
  detail::DisjointSets ds(n);
  for (const auto& p : polys) {
    auto vs = p.variables();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      seen[vs[i]] = 1;
      if (i > 0) ds.unite(vs[0], vs[i]);
    }
  }
  std::vector<int> vertices;
  for (int v = 0; v < n; ++v)
    if (seen[v]) vertices.push_back(v);
  return detail::collect_components(vertices, ds);
}

/** Exact image of a CycloNumber polynomial over the tower of its coefficients. */
TPoly to_tower(const CPoly& p);

}  // namespace anyon

template <class K>
struct std::hash<anyon::Poly<K>> {
  std::size_t operator()(const anyon::Poly<K>& p) const { return p.hash(); }
};
