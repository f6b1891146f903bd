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

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "anyon/catalog.hpp"
#include "anyon/eqgen.hpp"
#include "anyon/groebner.hpp"
#include "anyon/sparsepoly.hpp"
#include "anyon/tower.hpp"
#include "json.hpp"

namespace anyon {

struct SolverOptions {
  int max_component_size = 45;
  int workers = 1;
  /** 0 uses both hexagon signs; +1 or -1 restricts to one. */
  int hexagon_sign = 0;
  /** Keep enumerating Step-3 branches until verify passes. */
  bool sign_enumeration = false;
  /** Progress lines go here when set. */
  std::ostream* log = nullptr;
};

/** Assignments and known squares extracted from easy polynomials. */
template <class K>
struct EasyResult {
  std::vector<std::pair<int, Poly<K>>> assignments;
  std::vector<std::pair<int, K>> known_squares;
};

/**
 * Extracts x_v := -(d/c) m from every p = c x_v + d m with x_v the largest
 * variable of p and m free of x_v, and x_v^2 = alpha from c x_v^2 - d with d
 * constant. The first assignment per variable wins; two distinct constants
 * for one variable raise UnsolvableError. x_v := 0 comes from p = c x_v.
 */
template <class K>
EasyResult<K> solve_easy(const std::vector<Poly<K>>& basis) {
  EasyResult<K> out;
  std::map<int, std::size_t> seen;
  std::map<int, std::size_t> seen_sq;
  for (const auto& p : basis) {
    if (p.is_unit_constant()) throw UnsolvableError("inconsistent system: nonzero constant in the basis");
    if (p.is_zero() || p.size() > 2) continue;
    const int v = p.max_var();
    const Monomial xv = Monomial::var(v);
    std::size_t lin = p.size();
    for (std::size_t i = 0; i < p.size(); ++i)
      if (p.terms()[i].first == xv) lin = i;
    if (lin < p.size()) {
      const K& c0 = p.terms()[lin].second;
      Poly<K> value(p.nvars());
      if (p.size() == 2) {
        const auto& [m1, c1] = p.terms()[1 - lin];
        if (m1.degree_in(v) != 0) continue;
        value = Poly<K>::term(p.nvars(), m1, -(c1 / c0));
      }
      auto it = seen.find(v);
      if (it != seen.end()) {
        const Poly<K>& prev = out.assignments[it->second].second;
        if (prev.is_constant() && value.is_constant() && prev != value) {
          throw UnsolvableError("conflicting values for x" + std::to_string(v));
        }
        continue;
      }
      seen[v] = out.assignments.size();
      out.assignments.push_back({v, std::move(value)});
      continue;
    }
    if (p.size() == 2 && p.terms()[0].first == Monomial::var(v, 2) && p.terms()[1].first.is_one()) {
      K alpha = -(p.terms()[1].second / p.terms()[0].second);
      auto it = seen_sq.find(v);
      if (it != seen_sq.end()) {
        if (out.known_squares[it->second].second != alpha) {
          throw UnsolvableError("conflicting squares for x" + std::to_string(v));
        }
        continue;
      }
      seen_sq[v] = out.known_squares.size();
      out.known_squares.push_back({v, std::move(alpha)});
    }
  }
  return out;
}

/** Complete F-symbol table: a tower value for every variable of the ring. */
class FSymbolTable {
 public:
  FSymbolTable() = default;
  FSymbolTable(FusionRing ring, TowerPtr tower, std::vector<TowerNumber> values);

  const FusionRing& ring() const { return ring_; }
  const SextupleIndex& index() const { return idx_; }
  const TowerPtr& tower() const { return tower_; }
  const std::vector<TowerNumber>& values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }

  /** F^{abc}_{d;ef}: 1 on vacuum blocks at admissible entries, 0 when inadmissible. */
  TowerNumber F(int a, int b, int c, int d, int e, int f) const;
  TowerNumber F(const Sextuple& s) const { return F(s[0], s[1], s[2], s[3], s[4], s[5]); }
  /** Block F^{abc}_d over f_block_labels order. */
  std::vector<std::vector<TowerNumber>> block(int a, int b, int c, int d) const;
  /** Every value embeds to a real number within 2^-200. */
  bool is_real() const;

 private:
  FusionRing ring_;
  SextupleIndex idx_{FusionRing("empty", {"one"}, 1)};
  TowerPtr tower_;
  std::vector<TowerNumber> values_;
};

struct RoundStats {
  int solved = 0;
  std::size_t basis = 0;
};

struct SolveStats {
  int nvars = 0;
  std::size_t hexagon_equations = 0;
  std::size_t orthogonality_equations = 0;
  int components = 0;
  std::vector<int> component_sizes;
  int deferred_components = 0;
  int step1_solved = 0;
  std::size_t step1_basis = 0;
  /** FNV-1a digest of every Step-1 Groebner basis in component order. */
  std::uint64_t step1_digest = 0;
  /** Nonzero pentagon equations before substitution and deduplication. */
  std::size_t pentagons_raw = 0;
  /** Pentagon equations left after substituting Step-1 values, deduplicated. */
  std::size_t pentagons_materialized = 0;
  std::vector<RoundStats> rounds;
  int step2_solved = 0;
  /** Residual components replaced by their Groebner basis during Step 2. */
  int step2_groebner_components = 0;
  std::size_t known_squares = 0;
  /** Ideal basis after Step 2; known squares live in their own table. */
  std::size_t residual = 0;
  std::vector<std::string> step3_input;
  bool step3_univariate_quadratic = true;
  int step3_branches = 0;
  int unconstrained = 0;
  int radicals = 0;
  double seconds_step1 = 0, seconds_step2 = 0, seconds_step3 = 0;

  double residual_fraction() const {
    return pentagons_raw ? static_cast<double>(residual) / static_cast<double>(pentagons_raw) : 0.0;
  }
  /** Residual fraction counting the known squares as remaining relations. */
  double residual_fraction_with_squares() const {
    return pentagons_raw ? static_cast<double>(residual + known_squares) / static_cast<double>(pentagons_raw) : 0.0;
  }
  nlohmann::json to_json() const;
};

/** Mutable solver state between the three steps. */
struct SolverState {
  FusionRing ring;
  SextupleIndex idx;
  ReductionTables<CycloNumber> tables;
  std::vector<CPoly> basis;
  std::vector<std::vector<int>> provenance;
  std::vector<std::vector<CPoly>> step1_bases;
  SolveStats stats;

  explicit SolverState(const FusionRing& r);
  int solved_count() const;
};

/** Step 1: hexagon and orthogonality, solved per co-occurrence component. */
SolverState solve_step1(const FusionRing& ring, const SolverOptions& opt);
/**
 * Step 2: pentagons with Step-1 values substituted, eliminated to a fixpoint;
 * small residual components then pass through Groebner bases and elimination resumes.
 */
void solve_step2(SolverState& st, const SolverOptions& opt);
/** Step 3: root closure of the residual relations in a square-root tower. */
FSymbolTable solve_step3(SolverState& st, const SolverOptions& opt);
/** All three steps. Throws UnsolvableError on inconsistency. */
FSymbolTable solve(const FusionRing& ring, const SolverOptions& opt = {}, SolveStats* stats = nullptr);

/** One pass of update_reduce over the basis in chunks of floor(n / W^2) + 1. */
std::vector<CPoly> parallel_update(const std::vector<CPoly>& basis, const ReductionTables<CycloNumber>& tables,
                                   int workers);

struct VerifyIssue {
  std::string check;
  std::vector<int> tuple;
  std::string residual;
};

struct VerifyReport {
  std::map<std::string, std::size_t> checked;
  std::vector<VerifyIssue> issues;
  bool ok() const { return issues.empty(); }
  std::size_t count(const std::string& check) const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /** Compare embeddings against 2^-precision_bits instead of exact zero tests. */
  bool numeric = false;
  int precision_bits = 128;
  bool pivotal = true;
  /** Stop recording issues past this many. */
  std::size_t max_issues = 50;
};

/** Pentagon, hexagon (both signs), orthogonality, rigidity and pivotal checks. */
VerifyReport verify(const FSymbolTable& table, const VerifyOptions& opt = {});

using Gauge = std::map<std::tuple<int, int, int>, TowerNumber>;

/**
 * F~^{abc}_{d;xy} = f^{bc}_y f^{ay}_d F^{abc}_{d;xy} / (f^{ab}_x f^{xc}_d).
 * Missing admissible triples default to 1.
 */
FSymbolTable apply_gauge(const FSymbolTable& table, const Gauge& f);

/** Pivotal signs that make the pivotal identity hold, if any exist. */
std::optional<std::vector<int>> derive_pivotal(const FSymbolTable& table);

nlohmann::json tower_to_json(const TowerPtr& tower);
TowerPtr tower_from_json(const nlohmann::json& radicals, int cyclo_order);
nlohmann::json tower_value_to_json(const TowerNumber& x);
TowerNumber tower_value_from_json(const nlohmann::json& j, const TowerPtr& tower);

nlohmann::json table_to_json(const FSymbolTable& table);
/** Throws DataError on malformed input. */
FSymbolTable table_from_json(const nlohmann::json& j);

}  // namespace anyon
