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

#include "anyon/fsolve.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "anyon/errors.hpp"
#include "anyon/parallel.hpp"
#include "anyon/tmatrix.hpp"

namespace anyon {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void log_line(const SolverOptions& opt, const std::string& s) {
  if (opt.log) *opt.log << s << '\n' << std::flush;
}

std::uint64_t fnv1a(std::uint64_t h, const std::string& s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

// Total order on polynomials: term-wise degrevlex, then length, then coefficient text.
template <class K>
int poly_cmp(const Poly<K>& a, const Poly<K>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = degrevlex_cmp(a.terms()[i].first, b.terms()[i].first);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.terms()[i].second == b.terms()[i].second) continue;
    return a.terms()[i].second.str() < b.terms()[i].second.str() ? -1 : 1;
  }
  return 0;
}

// Drops zeros and duplicates, sorts, and rejects nonzero constants.
void normalize_basis(std::vector<CPoly>& basis, std::vector<std::vector<int>>& prov) {
  std::vector<std::size_t> order;
  std::unordered_map<std::size_t, std::vector<std::size_t>> by_hash;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero()) continue;
    if (basis[i].is_unit_constant()) {
      throw UnsolvableError("inconsistent system: equation from " + tuple_str(prov[i]) + " reduces to " +
                            basis[i].str());
    }
    auto& bucket = by_hash[basis[i].hash()];
    bool dup = false;
    for (std::size_t j : bucket) {
      if (basis[j] == basis[i]) {
        dup = true;
        break;
      }
    }
    if (dup) continue;
    bucket.push_back(i);
    order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return poly_cmp(basis[x], basis[y]) > 0; });
  std::vector<CPoly> nb;
  std::vector<std::vector<int>> np;
  nb.reserve(order.size());
  np.reserve(order.size());
  for (std::size_t i : order) {
    nb.push_back(std::move(basis[i]));
    np.push_back(std::move(prov[i]));
  }
  basis = std::move(nb);
  prov = std::move(np);
}

std::vector<int> var_degrees(const std::vector<CPoly>& basis, int nvars) {
  std::vector<int> d(nvars, 0);
  for (const auto& p : basis)
    for (const auto& t : p.terms())
      for (const auto& vp : t.first.pairs()) d[vp.var] = std::max(d[vp.var], vp.pow);
  return d;
}

// Applies extracted assignments and known squares; returns how many are new.
int apply_easy(SolverState& st, const EasyResult<CycloNumber>& easy) {
  int added = 0;
  const int n = st.idx.size();
  for (const auto& [v, raw] : easy.assignments) {
    if (st.tables.is_assigned(v)) continue;
    CPoly value = reduce_squares(substitute(raw, st.tables), st.tables);
    if (value.is_constant() && !value.is_zero()) st.tables.set_nonzero(v, true);
    st.tables.assign(v, value);
    ++added;
    if (const auto& alpha = st.tables.known_square(v)) {
      st.basis.push_back(reduce_squares(value * value, st.tables) - CPoly(n, *alpha));
      st.provenance.push_back({v});
    }
  }
  for (const auto& [v, alpha] : easy.known_squares) {
    if (st.tables.is_assigned(v)) {
      const CPoly& value = *st.tables.assignment(v);
      st.basis.push_back(reduce_squares(value * value, st.tables) - CPoly(n, alpha));
      st.provenance.push_back({v});
      continue;
    }
    if (!st.tables.known_square(v)) {
      st.tables.set_known_square(v, alpha);
      st.tables.set_nonzero(v, true);
      ++added;
    }
  }
  // Back-substitution in increasing variable order keeps every value over free variables.
  for (int v = 0; v < n; ++v) {
    if (!st.tables.is_assigned(v)) continue;
    CPoly value = reduce_squares(substitute(*st.tables.assignment(v), st.tables), st.tables);
    if (value.is_constant() && !value.is_zero()) st.tables.set_nonzero(v, true);
    if (value != *st.tables.assignment(v)) st.tables.assign(v, std::move(value));
  }
  return added;
}

void refresh_basis(SolverState& st, int workers) {
  st.tables.precompute_powers(var_degrees(st.basis, st.idx.size()));
  st.basis = parallel_update(st.basis, st.tables, workers);
  normalize_basis(st.basis, st.provenance);
}

// Replaces each small co-occurrence component of the basis, together with the known
// squares of its variables, by its reduced Groebner basis. True when the basis changed.
bool graph_groebner(SolverState& st, const SolverOptions& opt) {
  const int n = st.idx.size();
  auto comps = cooccurrence_components(st.basis);
  std::vector<int> comp_of(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<std::vector<std::size_t>> members(comps.size());
  for (std::size_t i = 0; i < st.basis.size(); ++i) members[comp_of[st.basis[i].max_var()]].push_back(i);
  std::vector<std::optional<std::vector<CPoly>>> gbs(comps.size());
  parallel_for(comps.size(), opt.workers, [&](std::size_t c) {
    if (static_cast<int>(comps[c].size()) > opt.max_component_size) return;
    std::vector<CPoly> in;
    for (std::size_t i : members[c]) in.push_back(st.basis[i]);
    for (int v : comps[c]) {
      if (const auto& alpha = st.tables.known_square(v)) in.push_back(CPoly::variable(n, v).pow(2) - CPoly(n, *alpha));
    }
    gbs[c] = buchberger(in, opt.max_component_size);
  });
  std::vector<CPoly> nb;
  std::vector<std::vector<int>> np;
  bool changed = false;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::vector<int>& first = st.provenance[members[c].front()];
    if (!gbs[c]) {
      for (std::size_t i : members[c]) {
        nb.push_back(st.basis[i]);
        np.push_back(st.provenance[i]);
      }
      continue;
    }
    if (gbs[c]->size() == 1 && (*gbs[c])[0].is_unit_constant()) {
      throw UnsolvableError("pentagon component " + std::to_string(c) + " (first equation from " + tuple_str(first) +
                            ") has Groebner basis {1}");
    }
    changed = true;
    ++st.stats.step2_groebner_components;
    for (auto& g : *gbs[c]) {
      nb.push_back(std::move(g));
      np.push_back(first);
    }
  }
  if (!changed) return false;
  st.basis = std::move(nb);
  st.provenance = std::move(np);
  refresh_basis(st, opt.workers);
  log_line(opt, "step2: groebner pass over " + std::to_string(comps.size()) + " components, basis " +
                    std::to_string(st.basis.size()));
  return true;
}

// Rewrites c x_v u + d w, with x_v the largest variable, linear and absent from w, and
// every variable of u carrying a known square, as c alpha_u x_v + d w u. Multiplying by
// the unit u keeps the ideal. Returns the number of rewritten binomials.
int invert_known_squares(SolverState& st) {
  int rewritten = 0;
  const int n = st.idx.size();
  for (auto& p : st.basis) {
    if (p.size() != 2) continue;
    const int v = p.max_var();
    int hit = -1;
    for (int i = 0; i < 2; ++i) {
      const Monomial& m = p.terms()[i].first;
      if (m.degree_in(v) == 1 && p.terms()[1 - i].first.degree_in(v) == 0) hit = i;
    }
    if (hit < 0) continue;
    const Monomial& m = p.terms()[hit].first;
    if (m == Monomial::var(v)) continue;
    std::vector<VarPow> rest;
    CycloNumber alpha(1);
    bool ok = true;
    for (const auto& vp : m.pairs()) {
      if (vp.var == v) continue;
      const auto& ks = st.tables.known_square(vp.var);
      if (!ks || st.tables.is_assigned(vp.var)) {
        ok = false;
        break;
      }
      rest.push_back(vp);
      alpha *= ks->pow(vp.pow);
    }
    if (!ok) continue;
    CPoly u = CPoly::term(n, Monomial::from_pairs(rest), CycloNumber(1));
    p = reduce_squares(p * u, st.tables).monic();
    ++rewritten;
  }
  return rewritten;
}

// ---- Step 3 helpers -------------------------------------------------------

using UPoly = std::vector<TowerNumber>;  // coefficients, low degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly to_upoly(const TPoly& p, int v) {
  UPoly u;
  for (const auto& [m, c] : p.terms()) {
    int k = m.degree_in(v);
    if (static_cast<int>(u.size()) <= k) u.resize(k + 1);
    u[k] += c;
  }
  trim(u);
  return u;
}

UPoly upoly_mod(UPoly a, const UPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  TowerNumber lead_inv = b.back().inv();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    TowerNumber q = a.back() * lead_inv;
    for (int i = 0; i <= db; ++i) {
      if (!b[i].is_zero()) a[da - db + i] -= q * b[i];
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly upoly_monic(UPoly a) {
  if (a.empty()) return a;
  TowerNumber inv = a.back().inv();
  for (auto& c : a) c *= inv;
  return a;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = upoly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return upoly_monic(std::move(a));
}

struct Root {
  TowerPtr tower;
  TowerNumber value;
};

// Roots of a monic univariate polynomial of degree <= 2, or of h(x^2) with deg h <= 2,
// principal branch first. Adjoins radicals as needed. nullopt when unsupported.
std::optional<std::vector<Root>> upoly_roots(const UPoly& g, const TowerPtr& tower, int m, int depth = 0) {
  const int deg = static_cast<int>(g.size()) - 1;
  std::vector<Root> out;
  auto sqrt_in = [&](const TowerNumber& a, const TowerPtr& t) -> Root {
    if (a.is_zero()) return {t, a};
    if (auto s = tower_sqrt(a, m)) return {t, *s};
    TowerPtr ext = Tower::extend(t, a, m);
    return {ext, principal_sign(TowerNumber::radical(ext, ext->depth() - 1))};
  };
  if (deg == 1) {
    out.push_back({tower, -g[0]});
    return out;
  }
  if (deg == 2) {
    TowerNumber b = g[1], c = g[0];
    TowerNumber disc = b * b - TowerNumber(4) * c;
    if (disc.is_zero()) {
      out.push_back({tower, -b / TowerNumber(2)});
      return out;
    }
    Root s = sqrt_in(disc, tower);
    out.push_back({s.tower, (-b + s.value) / TowerNumber(2)});
    out.push_back({s.tower, (-b - s.value) / TowerNumber(2)});
    return out;
  }
  if (deg == 4 && depth == 0 && g[1].is_zero() && g[3].is_zero()) {
    UPoly h{g[0], g[2], g[4]};
    auto inner = upoly_roots(h, tower, m, depth + 1);
    if (!inner) return std::nullopt;
    for (const auto& r : *inner) {
      if (r.value.is_zero()) {
        out.push_back(r);
        continue;
      }
      Root s = sqrt_in(r.value, r.tower);
      out.push_back({s.tower, s.value});
      out.push_back({s.tower, -s.value});
    }
    return out;
  }
  return std::nullopt;
}

struct Branch {
  TowerPtr tower;
  ReductionTables<TowerNumber> T;
  std::vector<TPoly> rels;
  bool gb_done = false;
};

struct Step3Context {
  int nvars = 0;
  int m = 1;
  SolveStats* stats = nullptr;
  std::function<bool(const Branch&)> accept;
};

void dedup_tpolys(std::vector<TPoly>& ps) {
  std::vector<TPoly> out;
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;
  for (auto& p : ps) {
    auto& bucket = seen[p.hash()];
    bool dup = false;
    for (std::size_t j : bucket) dup = dup || out[j] == p;
    if (dup) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(p));
  }
  ps = std::move(out);
}

bool dfs(Branch b, Step3Context& ctx) {
  for (;;) {
    std::vector<TPoly> next;
    for (const auto& r : b.rels) {
      TPoly u = update_reduce(r, b.T);
      if (u.is_zero()) continue;
      if (u.is_unit_constant()) return false;
      next.push_back(std::move(u));
    }
    dedup_tpolys(next);
    b.rels = std::move(next);
    if (b.rels.empty()) {
      ++ctx.stats->step3_branches;
      return ctx.accept(b);
    }
    EasyResult<TowerNumber> easy;
    try {
      easy = solve_easy(b.rels);
    } catch (const UnsolvableError&) {
      return false;
    }
    bool progressed = false;
    for (const auto& [v, raw] : easy.assignments) {
      if (b.T.is_assigned(v)) continue;
      TPoly value = substitute(raw, b.T);
      if (value.is_constant() && !value.is_zero()) b.T.set_nonzero(v, true);
      b.T.assign(v, std::move(value));
      progressed = true;
    }
    if (progressed) continue;

    int best = INT_MAX;
    for (const auto& r : b.rels) {
      auto vs = r.variables();
      if (vs.size() == 1) best = std::min(best, vs[0]);
    }
    if (best != INT_MAX) {
      UPoly g;
      for (const auto& r : b.rels) {
        auto vs = r.variables();
        if (vs.size() == 1 && vs[0] == best) g = g.empty() ? upoly_monic(to_upoly(r, best)) : upoly_gcd(g, to_upoly(r, best));
      }
      if (g.size() <= 1) return false;
      auto roots = upoly_roots(g, b.tower, ctx.m);
      if (!roots) {
        if (b.gb_done) {
          throw UnsolvableError("residual relation of degree " + std::to_string(g.size() - 1) +
                                " in x" + std::to_string(best) + " has no supported root closure");
        }
      } else {
        for (const auto& r : *roots) {
          Branch c = b;
          c.tower = common_tower(b.tower, r.tower);
          c.T.set_nonzero(best, !r.value.is_zero());
          c.T.assign(best, TPoly(ctx.nvars, r.value));
          if (dfs(std::move(c), ctx)) return true;
        }
        return false;
      }
    }
    if (!b.gb_done) {
      auto gb = buchberger(b.rels, INT_MAX);
      b.rels = std::move(*gb);
      b.gb_done = true;
      continue;
    }
    // Positive-dimensional remainder: fix the smallest free variable to 1.
    int v = INT_MAX;
    for (const auto& r : b.rels) {
      auto vs = r.variables();
      if (!vs.empty()) v = std::min(v, vs[0]);
    }
    ++ctx.stats->unconstrained;
    b.T.assign(v, TPoly(ctx.nvars, TowerNumber(1)));
    b.gb_done = false;
  }
}

bool residual_small(const TowerNumber& r, const VerifyOptions& opt) {
  if (!opt.numeric) return r.is_zero();
  BigComplex z = r.embed_big();
  BigReal eps = boost::multiprecision::ldexp(BigReal(1), -opt.precision_bits);
  return z.abs() <= eps;
}

}  // namespace

// ---- FSymbolTable ---------------------------------------------------------

FSymbolTable::FSymbolTable(FusionRing ring, TowerPtr tower, std::vector<TowerNumber> values)
    : ring_(std::move(ring)), idx_(ring_), tower_(std::move(tower)), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != idx_.size()) {
    throw DataError("F-symbol table has " + std::to_string(values_.size()) + " values for " +
                    std::to_string(idx_.size()) + " variables");
  }
}

TowerNumber FSymbolTable::F(int a, int b, int c, int d, int e, int f) const {
  FEntry fe = f_entry(ring_, idx_, a, b, c, d, e, f);
  if (fe.var < 0) return TowerNumber(static_cast<long>(fe.constant));
  return values_[fe.var];
}

std::vector<std::vector<TowerNumber>> FSymbolTable::block(int a, int b, int c, int d) const {
  auto [rows, cols] = f_block_labels(ring_, a, b, c, d);
  std::vector<std::vector<TowerNumber>> m(rows.size(), std::vector<TowerNumber>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m[i][j] = F(a, b, c, d, rows[i], cols[j]);
  return m;
}

bool FSymbolTable::is_real() const {
  BigReal eps = boost::multiprecision::ldexp(BigReal(1), -200);
  for (const auto& v : values_) {
    if (boost::multiprecision::abs(v.embed_big().im) > eps) return false;
  }
  return true;
}

// ---- Stats ----------------------------------------------------------------

nlohmann::json SolveStats::to_json() const {
  nlohmann::json rj = nlohmann::json::array();
  for (const auto& r : rounds) rj.push_back({{"solved", r.solved}, {"basis", r.basis}});
  return {
      {"nvars", nvars},
      {"hexagon_equations", hexagon_equations},
      {"orthogonality_equations", orthogonality_equations},
      {"components", components},
      {"component_sizes", component_sizes},
      {"deferred_components", deferred_components},
      {"step1_solved", step1_solved},
      {"step1_fraction", nvars ? static_cast<double>(step1_solved) / nvars : 0.0},
      {"step1_basis", step1_basis},
      {"step1_digest", step1_digest},
      {"pentagons_raw", pentagons_raw},
      {"pentagons_materialized", pentagons_materialized},
      {"rounds", rj},
      {"step2_solved", step2_solved},
      {"step2_groebner_components", step2_groebner_components},
      {"known_squares", known_squares},
      {"residual", residual},
      {"residual_fraction", residual_fraction()},
      {"residual_fraction_with_squares", residual_fraction_with_squares()},
      {"step3_input", step3_input},
      {"step3_univariate_quadratic", step3_univariate_quadratic},
      {"step3_branches", step3_branches},
      {"unconstrained", unconstrained},
      {"radicals", radicals},
      {"seconds", {{"step1", seconds_step1}, {"step2", seconds_step2}, {"step3", seconds_step3}}},
  };
}

SolverState::SolverState(const FusionRing& r) : ring(r), idx(ring), tables(idx.size()) {
  stats.nvars = idx.size();
  // Admissible entries may vanish; only variables proven nonzero take part in gcd division.
  for (int v = 0; v < idx.size(); ++v) tables.set_nonzero(v, false);
}

int SolverState::solved_count() const {
  int n = 0;
  for (int v = 0; v < idx.size(); ++v) n += tables.is_assigned(v) ? 1 : 0;
  return n;
}

std::vector<CPoly> parallel_update(const std::vector<CPoly>& basis, const ReductionTables<CycloNumber>& tables,
                                   int workers) {
  const std::size_t n = basis.size();
  const int w = std::max(1, workers);
  const std::size_t chunk = n / static_cast<std::size_t>(w * w) + 1;
  const std::size_t chunks = (n + chunk - 1) / chunk;
  std::vector<CPoly> out(n);
  parallel_for(chunks, w, [&](std::size_t k) {
    std::size_t hi = std::min(n, (k + 1) * chunk);
    for (std::size_t i = k * chunk; i < hi; ++i) out[i] = update_reduce(basis[i], tables);
  });
  return out;
}

// ---- Step 1 ---------------------------------------------------------------

SolverState solve_step1(const FusionRing& ring, const SolverOptions& opt) {
  auto t0 = Clock::now();
  SolverState st(ring);
  const int n = st.idx.size();
  GenOptions gopt{opt.workers, nullptr};
  EquationSystem sys;
  sys.ring = ring.name();
  sys.nvars = n;
  std::size_t hex_count = 0;
  for (int sign : {+1, -1}) {
    if (opt.hexagon_sign != 0 && opt.hexagon_sign != sign) continue;
    EquationSystem h = gen_hexagon(ring, st.idx, sign, gopt);
    hex_count += h.size();
    sys.merge(h);
  }
  EquationSystem orth = gen_orthogonality(ring, st.idx);
  st.stats.hexagon_equations = hex_count;
  st.stats.orthogonality_equations = orth.size();
  sys.merge(orth);
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    if (sys.polys[i].is_unit_constant()) {
      throw UnsolvableError("hexagon/orthogonality equation from " + tuple_str(sys.provenance[i]) +
                            " is a nonzero constant");
    }
  }

  auto comps = cooccurrence_components(sys.polys);
  std::vector<int> comp_of(n, -1);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
  std::vector<std::vector<std::size_t>> members(comps.size());
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    int v = sys.polys[i].max_var();
    if (v >= 0) members[comp_of[v]].push_back(i);
  }
  st.stats.components = static_cast<int>(comps.size());
  for (const auto& c : comps) st.stats.component_sizes.push_back(static_cast<int>(c.size()));
  log_line(opt, "step1: " + std::to_string(sys.size()) + " equations in " + std::to_string(comps.size()) +
                    " components over " + std::to_string(n) + " variables");

  std::vector<std::optional<std::vector<CPoly>>> gbs(comps.size());
  parallel_for(comps.size(), opt.workers, [&](std::size_t c) {
    if (static_cast<int>(comps[c].size()) > opt.max_component_size) return;
    std::vector<CPoly> in;
    for (std::size_t i : members[c]) in.push_back(sys.polys[i]);
    gbs[c] = buchberger(in, opt.max_component_size);
  });

  std::uint64_t digest = kFnvOffset;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const std::vector<int>& first = sys.provenance[members[c].front()];
    if (!gbs[c]) {
      ++st.stats.deferred_components;
      for (std::size_t i : members[c]) {
        st.basis.push_back(sys.polys[i]);
        st.provenance.push_back(sys.provenance[i]);
      }
      st.step1_bases.emplace_back();
      continue;
    }
    const auto& gb = *gbs[c];
    if (gb.size() == 1 && gb[0].is_unit_constant()) {
      throw UnsolvableError("component " + std::to_string(c) + " (first equation from " + tuple_str(first) +
                            ") has Groebner basis {1}");
    }
    for (const auto& g : gb) {
      digest = fnv1a(digest, g.str());
      digest = fnv1a(digest, ";");
      st.basis.push_back(g);
      st.provenance.push_back(first);
    }
    st.step1_bases.push_back(gb);
  }
  st.stats.step1_digest = digest;
  normalize_basis(st.basis, st.provenance);

  apply_easy(st, solve_easy(st.basis));
  refresh_basis(st, opt.workers);
  st.stats.step1_solved = st.solved_count();
  st.stats.step1_basis = st.basis.size();
  st.stats.seconds_step1 = seconds_since(t0);
  log_line(opt, "step1: solved " + std::to_string(st.stats.step1_solved) + "/" + std::to_string(n));
  return st;
}

// ---- Step 2 ---------------------------------------------------------------

void solve_step2(SolverState& st, const SolverOptions& opt) {
  auto t0 = Clock::now();
  const int n = st.idx.size();
  std::vector<int> degs(n, 3);
  st.tables.precompute_powers(degs);
  EquationSystem pent = gen_pentagon(st.ring, st.idx, GenOptions{opt.workers, &st.tables});
  st.stats.pentagons_raw = pent.raw_nonzero;
  st.stats.pentagons_materialized = pent.size();
  log_line(opt, "step2: " + std::to_string(pent.raw_nonzero) + " pentagon equations, " +
                    std::to_string(pent.size()) + " after substitution");
  for (std::size_t i = 0; i < pent.polys.size(); ++i) {
    st.basis.push_back(std::move(pent.polys[i]));
    st.provenance.push_back(std::move(pent.provenance[i]));
  }
  refresh_basis(st, opt.workers);
  const int before = st.solved_count();
  auto eliminate = [&]() {
    int total = 0;
    for (;;) {
      int added = apply_easy(st, solve_easy(st.basis));
      refresh_basis(st, opt.workers);
      st.stats.rounds.push_back({st.solved_count(), st.basis.size()});
      log_line(opt, "step2: round " + std::to_string(st.stats.rounds.size()) + " solved " +
                        std::to_string(st.solved_count()) + ", basis " + std::to_string(st.basis.size()));
      if (added == 0 && invert_known_squares(st) == 0) return total;
      total += added;
    }
  };
  eliminate();
  while (!st.basis.empty() && graph_groebner(st, opt)) {
    if (eliminate() == 0) break;
  }
  st.stats.step2_solved = st.solved_count() - before;
  std::size_t ks = 0;
  for (int v = 0; v < n; ++v) ks += (!st.tables.is_assigned(v) && st.tables.known_square(v)) ? 1 : 0;
  st.stats.known_squares = ks;
  st.stats.residual = st.basis.size();
  st.stats.seconds_step2 = seconds_since(t0);
}

// ---- Step 3 ---------------------------------------------------------------

FSymbolTable solve_step3(SolverState& st, const SolverOptions& opt) {
  auto t0 = Clock::now();
  const int n = st.idx.size();
  const int m = st.ring.cyclo_order();
  std::vector<CPoly> rels = st.basis;
  for (int v = 0; v < n; ++v) {
    if (st.tables.is_assigned(v) || !st.tables.known_square(v)) continue;
    rels.push_back(CPoly::variable(n, v).pow(2) - CPoly(n, *st.tables.known_square(v)));
  }
  auto namer = fsymbol_namer(st.ring, st.idx);
  st.stats.step3_input.clear();
  st.stats.step3_univariate_quadratic = true;
  for (const auto& r : rels) {
    st.stats.step3_input.push_back(r.str(namer));
    if (r.variables().size() > 1 || r.total_degree() > 2) st.stats.step3_univariate_quadratic = false;
  }
  log_line(opt, "step3: " + std::to_string(rels.size()) + " residual relations");

  Branch root;
  root.T = ReductionTables<TowerNumber>(n);
  for (int v = 0; v < n; ++v) root.T.set_nonzero(v, st.tables.is_nonzero(v));
  for (const auto& r : rels) root.rels.push_back(to_tower(r));

  std::optional<FSymbolTable> result;
  Step3Context ctx;
  ctx.nvars = n;
  ctx.m = m;
  ctx.stats = &st.stats;
  const int unconstrained_before = st.stats.unconstrained;
  ctx.accept = [&](const Branch& b) -> bool {
    ReductionTables<TowerNumber> T = b.T;
    int extra = 0;
    for (int v = 0; v < n; ++v) {
      if (st.tables.is_assigned(v) || T.is_assigned(v)) continue;
      T.assign(v, TPoly(n, TowerNumber(1)));
      ++extra;
    }
    std::vector<TowerNumber> values(n);
    for (int v = 0; v < n; ++v) {
      TPoly p = st.tables.is_assigned(v) ? to_tower(*st.tables.assignment(v)) : TPoly::variable(n, v);
      TPoly s = substitute(p, T);
      if (!s.is_constant()) return false;
      values[v] = s.constant_value();
    }
    FSymbolTable table(st.ring, b.tower, std::move(values));
    if (opt.sign_enumeration) {
      VerifyOptions vo;
      vo.max_issues = 1;
      if (!verify(table, vo).ok()) return false;
    }
    st.stats.unconstrained += extra;
    result = std::move(table);
    return true;
  };
  if (!dfs(std::move(root), ctx) || !result) {
    st.stats.unconstrained = unconstrained_before;
    throw UnsolvableError("no branch of the residual system has a solution");
  }
  st.stats.radicals = result->tower() ? result->tower()->depth() : 0;
  st.stats.seconds_step3 = seconds_since(t0);
  log_line(opt, "step3: done with " + std::to_string(st.stats.radicals) + " radicals after " +
                    std::to_string(st.stats.step3_branches) + " branch(es)");
  return *result;
}

FSymbolTable solve(const FusionRing& ring, const SolverOptions& opt, SolveStats* stats) {
  SolverState st = solve_step1(ring, opt);
  solve_step2(st, opt);
  FSymbolTable t = solve_step3(st, opt);
  if (stats) *stats = st.stats;
  return t;
}

// ---- Verification ---------------------------------------------------------

std::size_t VerifyReport::count(const std::string& check) const {
  std::size_t n = 0;
  for (const auto& i : issues) n += i.check == check ? 1 : 0;
  return n;
}

nlohmann::json VerifyReport::to_json() const {
  nlohmann::json is = nlohmann::json::array();
  for (const auto& i : issues) is.push_back({{"check", i.check}, {"tuple", i.tuple}, {"residual", i.residual}});
  return {{"ok", ok()}, {"checked", checked}, {"issues", is}};
}

VerifyReport verify(const FSymbolTable& table, const VerifyOptions& opt) {
  VerifyReport rep;
  const FusionRing& ring = table.ring();
  const int N = ring.rank();
  const int one = ring.vacuum();
  auto note = [&](const std::string& check, std::vector<int> tuple, const TowerNumber& r) {
    ++rep.checked[check];
    if (residual_small(r, opt)) return;
    if (rep.issues.size() < opt.max_issues) {
      std::string s = r.str();
      if (s.size() > 200) s = s.substr(0, 200) + "...";
      rep.issues.push_back({check, std::move(tuple), std::move(s)});
    } else if (rep.issues.size() == opt.max_issues) {
      rep.issues.push_back({check, std::move(tuple), "(further issues suppressed)"});
    }
  };
  auto& F = table;

  // Pentagon: [F^{fcd}_e]_{gl} [F^{abl}_e]_{fk} = sum_h [F^{abc}_g]_{fh} [F^{ahd}_e]_{gk} [F^{bcd}_k]_{hl}.
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int f : ring.fuse(a, b))
        for (int c = 0; c < N; ++c)
          for (int g : ring.fuse(f, c))
            for (int d = 0; d < N; ++d)
              for (int e : ring.fuse(g, d))
                for (int l : ring.fuse(c, d))
                  for (int k = 0; k < N; ++k) {
                    if (!ring.N(b, l, k) || !ring.N(a, k, e)) continue;
                    TowerNumber r = F.F(f, c, d, e, g, l) * F.F(a, b, l, e, f, k);
                    for (int h = 0; h < N; ++h) {
                      TowerNumber x = F.F(a, b, c, g, f, h);
                      if (x.is_zero()) continue;
                      r -= x * F.F(a, h, d, e, g, k) * F.F(b, c, d, k, h, l);
                    }
                    note("pentagon", {a, b, c, d, e, f, g, k, l}, r);
                  }

  // Hexagons: R^{ac}_e F^{acb}_{d;eg} R^{bc}_g = sum_f F^{cab}_{d;ef} R^{fc}_d F^{abc}_{d;fg}, R^{+-1}.
  for (int sign : {+1, -1}) {
    auto R = [&](int x, int y, int z) {
      CycloNumber v = ring.R(x, y, z);
      return TowerNumber(sign > 0 ? v : v.inv());
    };
    const std::string name = sign > 0 ? "hexagon+" : "hexagon-";
    for (int a = 0; a < N; ++a)
      for (int c = 0; c < N; ++c)
        for (int e : ring.fuse(a, c))
          for (int b = 0; b < N; ++b)
            for (int d : ring.fuse(e, b))
              for (int g : ring.fuse(c, b)) {
                if (!ring.N(a, g, d)) continue;
                TowerNumber r = R(a, c, e) * F.F(a, c, b, d, e, g) * R(b, c, g);
                for (int f : ring.fuse(a, b)) {
                  if (!ring.N(f, c, d)) continue;
                  r -= F.F(c, a, b, d, e, f) * R(f, c, d) * F.F(a, b, c, d, f, g);
                }
                note(name, {a, b, c, d, e, g}, r);
              }
  }

  // Orthogonality: every block is real orthogonal.
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b)
      for (int c = 0; c < N; ++c)
        for (int d = 0; d < N; ++d) {
          auto [rows, cols] = f_block_labels(ring, a, b, c, d);
          if (rows.empty()) continue;
          for (std::size_t i = 0; i < cols.size(); ++i)
            for (std::size_t j = i; j < cols.size(); ++j) {
              TowerNumber s(i == j ? -1L : 0L);
              for (int e : rows) s += F.F(a, b, c, d, e, cols[i]) * F.F(a, b, c, d, e, cols[j]);
              note("orthogonality", {a, b, c, d, cols[i], cols[j]}, s);
            }
        }

  // Rigidity: [F^{a a* a}_a]_{11} = [(F^{a* a a*}_{a*})^{-1}]_{11}.
  for (int a = 0; a < N; ++a) {
    const int ad = ring.dual(a);
    auto [r2, c2] = f_block_labels(ring, ad, a, ad, ad);
    TowerMatrix M(static_cast<int>(r2.size()), static_cast<int>(c2.size()));
    int ri = -1, ci = -1;
    for (std::size_t i = 0; i < r2.size(); ++i) {
      if (r2[i] == one) ri = static_cast<int>(i);
      for (std::size_t j = 0; j < c2.size(); ++j) M(i, j) = F.F(ad, a, ad, ad, r2[i], c2[j]);
    }
    for (std::size_t j = 0; j < c2.size(); ++j)
      if (c2[j] == one) ci = static_cast<int>(j);
    TowerNumber rhs;
    try {
      // The (1,1) entry of the inverse sits at (column 1, row 1) of M's index sets.
      rhs = M.inverse()(ci, ri);
    } catch (const ArithmeticError&) {
      note("rigidity", {a}, TowerNumber(1));
      continue;
    }
    note("rigidity", {a}, F.F(a, ad, a, a, one, one) - rhs);
  }

  // Pivotal: t_a t_b t_c = F^{a b c*}_{1;c a*} F^{b c* a}_{1;a* b*} F^{c* a b}_{1;b* c} on N^{ab}_c = 1.
  if (opt.pivotal) {
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b)
        for (int c : ring.fuse(a, b)) {
          const int cd = ring.dual(c), ad = ring.dual(a), bd = ring.dual(b);
          TowerNumber prod = F.F(a, b, cd, one, c, ad) * F.F(b, cd, a, one, ad, bd) * F.F(cd, a, b, one, bd, c);
          long t = static_cast<long>(ring.pivotal(a) * ring.pivotal(b) * ring.pivotal(c));
          note("pivotal", {a, b, c}, prod - TowerNumber(t));
        }
  }
  return rep;
}

// ---- Gauge and pivotal ----------------------------------------------------

FSymbolTable apply_gauge(const FSymbolTable& table, const Gauge& f) {
  const FusionRing& ring = table.ring();
  const int one = ring.vacuum();
  TowerPtr tower = table.tower();
  for (const auto& [key, val] : f) {
    auto [a, b, c] = key;
    if (a < 0 || b < 0 || c < 0 || a >= ring.rank() || b >= ring.rank() || c >= ring.rank() || !ring.N(a, b, c)) {
      throw DomainError("gauge entry on an inadmissible triple");
    }
    if (val.is_zero()) throw DomainError("gauge entry must be nonzero");
    if ((a == one || b == one) && !val.is_one()) throw DomainError("gauge must be 1 on vacuum triples");
    tower = common_tower(tower, val.tower());
  }
  auto g = [&](int a, int b, int c) -> TowerNumber {
    auto it = f.find({a, b, c});
    return it == f.end() ? TowerNumber(1) : it->second;
  };
  std::vector<TowerNumber> values(table.size());
  const auto& idx = table.index();
  for (int i = 0; i < idx.size(); ++i) {
    const auto& s = idx.sextuple(i);
    int a = s[0], b = s[1], c = s[2], d = s[3], x = s[4], y = s[5];
    values[i] = g(b, c, y) * g(a, y, d) * table.values()[i] / (g(a, b, x) * g(x, c, d));
  }
  return FSymbolTable(ring, tower, std::move(values));
}

std::optional<std::vector<int>> derive_pivotal(const FSymbolTable& table) {
  const FusionRing& ring = table.ring();
  const int N = ring.rank();
  const int one = ring.vacuum();
  std::vector<int> others;
  for (int a = 0; a < N; ++a)
    if (a != one) others.push_back(a);
  if (others.size() > 20) throw DomainError("too many labels to enumerate pivotal signs");
  for (std::uint32_t mask = 0; mask < (1u << others.size()); ++mask) {
    std::vector<int> t(N, 1);
    for (std::size_t i = 0; i < others.size(); ++i)
      if (mask & (1u << i)) t[others[i]] = -1;
    bool ok = true;
    for (int a = 0; a < N && ok; ++a)
      for (int b = 0; b < N && ok; ++b)
        for (int c : ring.fuse(a, b)) {
          const int cd = ring.dual(c), ad = ring.dual(a), bd = ring.dual(b);
          TowerNumber prod =
              table.F(a, b, cd, one, c, ad) * table.F(b, cd, a, one, ad, bd) * table.F(cd, a, b, one, bd, c);
          if (prod != TowerNumber(static_cast<long>(t[a] * t[b] * t[c]))) {
            ok = false;
            break;
          }
        }
    if (ok) return t;
  }
  return std::nullopt;
}

// ---- Serialization --------------------------------------------------------

namespace {

nlohmann::json big_int_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class big_int_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw DataError("malformed integer: " + j.get<std::string>());
    return z;
  }
  throw DataError("expected an integer");
}

int value_order(const TowerNumber& x) {
  int m = 1;
  for (const auto& [mask, c] : x.terms()) m = std::lcm(m, c.order());
  return m;
}

nlohmann::json cyclo_terms_json(const CycloNumber& c, int m) {
  CycloNumber l = c.lift(m);
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : l.terms()) {
    out.push_back({t.exp, big_int_json(t.coeff.get_num()), big_int_json(t.coeff.get_den())});
  }
  return out;
}

nlohmann::json value_json(const TowerNumber& x, int m) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mask, c] : x.terms()) terms.push_back({mask, cyclo_terms_json(c, m)});
  return terms;
}

TowerNumber value_from_json(const nlohmann::json& terms, int m, const TowerPtr& tower) {
  if (!terms.is_array()) throw DataError("tower value terms must be an array");
  TowerNumber::Terms ts;
  for (const auto& t : terms) {
    if (!t.is_array() || t.size() != 2) throw DataError("tower term must be [mask, cyclo terms]");
    std::uint32_t mask = t[0].get<std::uint32_t>();
    std::vector<std::pair<long, Rational>> cs;
    for (const auto& e : t[1]) {
      if (!e.is_array() || e.size() != 3) throw DataError("cyclotomic term must be [exp, num, den]");
      mpz_class den = big_int_from_json(e[2]);
      if (den == 0) throw DataError("zero denominator");
      Rational q(big_int_from_json(e[1]), den);
      q.canonicalize();
      cs.push_back({e[0].get<long>(), q});
    }
    CycloNumber c = CycloNumber::from_terms(m, cs);
    if (!c.is_zero()) ts.push_back({mask, c});
  }
  std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  int depth = 0;
  for (const auto& [mask, c] : ts) {
    for (int i = 0; i < 32; ++i)
      if (mask & (1u << i)) depth = std::max(depth, i + 1);
  }
  if (depth > 0 && (!tower || tower->depth() < depth)) throw DataError("tower value uses an unknown radical");
  return TowerNumber(depth ? tower->prefix(depth) : nullptr, std::move(ts));
}

}  // namespace

nlohmann::json tower_value_to_json(const TowerNumber& x) {
  int m = value_order(x);
  return {{"cyclo_order", m}, {"terms", value_json(x, m)}};
}

TowerNumber tower_value_from_json(const nlohmann::json& j, const TowerPtr& tower) {
  try {
    return value_from_json(j.at("terms"), j.at("cyclo_order").get<int>(), tower);
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed tower value: ") + e.what());
  }
}

nlohmann::json tower_to_json(const TowerPtr& tower) {
  nlohmann::json out = nlohmann::json::array();
  if (!tower) return out;
  for (int i = 0; i < tower->depth(); ++i) out.push_back(tower_value_to_json(tower->alpha(i)));
  return out;
}

TowerPtr tower_from_json(const nlohmann::json& radicals, int cyclo_order) {
  if (!radicals.is_array()) throw DataError("radicals must be an array");
  TowerPtr t;
  for (const auto& r : radicals) t = Tower::extend(t, tower_value_from_json(r, t), cyclo_order);
  return t;
}

nlohmann::json table_to_json(const FSymbolTable& table) {
  int m = table.ring().cyclo_order();
  for (const auto& v : table.values()) m = std::lcm(m, value_order(v));
  nlohmann::json fs = nlohmann::json::array();
  const auto& idx = table.index();
  for (int i = 0; i < idx.size(); ++i) {
    const auto& s = idx.sextuple(i);
    fs.push_back({{"sextuple", std::vector<int>(s.begin(), s.end())}, {"value", value_json(table.values()[i], m)}});
  }
  return {
      {"ring", table.ring().name()},
      {"ring_data", ring_to_json(table.ring())},
      {"cyclo_order", m},
      {"radicals", tower_to_json(table.tower())},
      {"fsymbols", fs},
  };
}

FSymbolTable table_from_json(const nlohmann::json& j) {
  try {
    FusionRing ring = j.contains("ring_data") ? ring_from_json(j.at("ring_data")) : builtin(j.at("ring").get<std::string>());
    int m = j.at("cyclo_order").get<int>();
    if (m < 1) throw DataError("cyclo_order must be positive");
    int base = ring.cyclo_order();
    TowerPtr tower = tower_from_json(j.at("radicals"), base);
    SextupleIndex idx(ring);
    std::vector<std::optional<TowerNumber>> vals(idx.size());
    for (const auto& e : j.at("fsymbols")) {
      auto s = e.at("sextuple").get<std::vector<int>>();
      if (s.size() != 6) throw DataError("sextuple must have six labels");
      for (int x : s)
        if (x < 0 || x >= ring.rank()) throw DataError("sextuple label out of range");
      int i = idx.index(Sextuple{s[0], s[1], s[2], s[3], s[4], s[5]});
      if (i < 0) throw DataError("sextuple " + tuple_str(s) + " is not an F-symbol variable");
      vals[i] = value_from_json(e.at("value"), m, tower);
    }
    std::vector<TowerNumber> values;
    values.reserve(vals.size());
    for (int i = 0; i < idx.size(); ++i) {
      if (!vals[i]) {
        const auto& s = idx.sextuple(i);
        throw DataError("missing F-symbol " + tuple_str(std::vector<int>(s.begin(), s.end())));
      }
      values.push_back(*vals[i]);
    }
    return FSymbolTable(ring, tower, std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed F-symbol file: ") + e.what());
  }
}

}  // namespace anyon
