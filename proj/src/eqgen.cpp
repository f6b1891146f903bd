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

#include "anyon/eqgen.hpp"

#include <ostream>
#include <thread>
#include <unordered_map>

namespace anyon {

std::string kind_name(SystemKind k) {
  switch (k) {
    case SystemKind::kHexagon:
      return "hexagon";
    case SystemKind::kPentagon:
      return "pentagon";
    case SystemKind::kOrthogonality:
      return "orthogonality";
    case SystemKind::kMixed:
      return "mixed";
  }
  return "mixed";
}

namespace {

struct Item {
  CPoly poly;
  std::vector<int> tuple;
};

struct Bucket {
  std::vector<Item> items;
  std::size_t raw = 0;
  std::size_t generated = 0;
  std::uint64_t covered = 0;
};

// Worker w handles outer indices congruent to w mod W; buckets are merged in
// outer-index order, so the result does not depend on W.
void run_striped(int outer, int workers, std::vector<Bucket>& buckets,
                 const std::function<void(int, Bucket&)>& body) {
  buckets.assign(outer, Bucket());
  workers = std::max(1, std::min(workers, outer));
  if (workers == 1) {
    for (int i = 0; i < outer; ++i) body(i, buckets[i]);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w]() {
      for (int i = w; i < outer; i += workers) body(i, buckets[i]);
    });
  }
  for (auto& t : pool) t.join();
}

struct Deduper {
  std::unordered_map<std::size_t, std::vector<std::size_t>> seen;

  bool insert(EquationSystem& sys, CPoly p, std::vector<int> tuple) {
    std::size_t h = p.hash();
    auto& slot = seen[h];
    for (std::size_t i : slot)
      if (sys.polys[i] == p) return false;
    slot.push_back(sys.polys.size());
    sys.polys.push_back(std::move(p));
    sys.provenance.push_back(std::move(tuple));
    return true;
  }
};

void collect(EquationSystem& sys, std::vector<Bucket>& buckets) {
  Deduper d;
  for (auto& b : buckets) {
    sys.raw_nonzero += b.raw;
    sys.generated += b.generated;
    sys.tuples_covered += b.covered;
    for (auto& it : b.items) d.insert(sys, std::move(it.poly), std::move(it.tuple));
  }
}

// Accumulates c * prod(entries) into terms; zero entries drop the product.
void add_product(std::vector<CPoly::Term>& terms, const CycloNumber& c, std::initializer_list<FEntry> entries) {
  std::vector<VarPow> vars;
  for (const FEntry& e : entries) {
    if (e.var < 0) {
      if (e.constant == 0) return;
    } else {
      vars.push_back({e.var, 1});
    }
  }
  terms.push_back({Monomial::from_pairs(std::move(vars)), c});
}

CPoly finish(int nvars, std::vector<CPoly::Term> terms, const GenOptions& opt, Bucket& out) {
  CPoly p = CPoly::from_terms(nvars, std::move(terms));
  if (!p.is_zero()) ++out.raw;
  if (opt.tables) return update_reduce(p, *opt.tables);
  return p.monic();
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

void EquationSystem::merge(const EquationSystem& other) {
  Deduper d;
  EquationSystem tmp = *this;
  tmp.polys.clear();
  tmp.provenance.clear();
  for (std::size_t i = 0; i < polys.size(); ++i) d.insert(tmp, polys[i], provenance[i]);
  for (std::size_t i = 0; i < other.polys.size(); ++i) d.insert(tmp, other.polys[i], other.provenance[i]);
  polys = std::move(tmp.polys);
  provenance = std::move(tmp.provenance);
  raw_nonzero += other.raw_nonzero;
  generated += other.generated;
  tuples_covered += other.tuples_covered;
  if (kind != other.kind) kind = SystemKind::kMixed;
  nvars = std::max(nvars, other.nvars);
}

void EquationSystem::dump(std::ostream& os, const std::function<std::string(int)>& namer) const {
  for (const auto& p : polys) os << p.str(namer) << "\n";
}

FEntry f_entry(const FusionRing& ring, const SextupleIndex& idx, int a, int b, int c, int d, int e, int f) {
  if (!ring.N(a, b, e) || !ring.N(e, c, d) || !ring.N(b, c, f) || !ring.N(a, f, d)) return {-1, 0};
  int v = ring.vacuum();
  if (a == v || b == v || c == v) return {-1, 1};
  return {idx.index(a, b, c, d, e, f), 0};
}

std::function<std::string(int)> fsymbol_namer(const FusionRing& ring, const SextupleIndex& idx) {
  return [&ring, &idx](int var) {
    const Sextuple& s = idx.sextuple(var);
    std::string out = "F[";
    for (int i = 0; i < 6; ++i) {
      if (i) out += ",";
      out += ring.label_names()[s[i]];
    }
    return out + "]";
  };
}

EquationSystem gen_pentagon(const FusionRing& ring, const SextupleIndex& idx, const GenOptions& opt) {
  const int n = ring.rank();
  EquationSystem sys;
  sys.ring = ring.name();
  sys.nvars = idx.size();
  sys.kind = SystemKind::kPentagon;
  std::vector<Bucket> buckets;
  const CycloNumber one(1);
  run_striped(n * n * n * n, opt.workers, buckets, [&](int outer, Bucket& out) {
    const int a = outer / (n * n * n), b = outer / (n * n) % n, c = outer / n % n, d = outer % n;
    // [F^{fcd}_e]_{gl}[F^{abl}_e]_{fk} - sum_h [F^{abc}_g]_{fh}[F^{ahd}_e]_{gk}[F^{bcd}_k]_{hl}
    for (int f = 0; f < n; ++f) {
      if (!ring.N(a, b, f)) {
        out.covered += ipow(n, 4);
        continue;
      }
      for (int g = 0; g < n; ++g) {
        if (!ring.N(f, c, g)) {
          out.covered += ipow(n, 3);
          continue;
        }
        for (int e = 0; e < n; ++e) {
          if (!ring.N(g, d, e)) {
            out.covered += ipow(n, 2);
            continue;
          }
          for (int l = 0; l < n; ++l) {
            if (!ring.N(c, d, l)) {
              out.covered += n;
              continue;
            }
            for (int k = 0; k < n; ++k) {
              ++out.covered;
              if (!ring.N(b, l, k) || !ring.N(a, k, e)) continue;
              std::vector<CPoly::Term> terms;
              add_product(terms, one, {f_entry(ring, idx, f, c, d, e, g, l), f_entry(ring, idx, a, b, l, e, f, k)});
              for (int h = 0; h < n; ++h) {
                if (!ring.N(b, c, h)) continue;
                add_product(terms, -one,
                            {f_entry(ring, idx, a, b, c, g, f, h), f_entry(ring, idx, a, h, d, e, g, k),
                             f_entry(ring, idx, b, c, d, k, h, l)});
              }
              CPoly p = finish(sys.nvars, std::move(terms), opt, out);
              if (p.is_zero()) continue;
              ++out.generated;
              out.items.push_back({std::move(p), {a, b, c, d, e, f, g, k, l}});
            }
          }
        }
      }
    }
  });
  collect(sys, buckets);
  return sys;
}

EquationSystem gen_hexagon(const FusionRing& ring, const SextupleIndex& idx, int sign, const GenOptions& opt) {
  if (sign != 1 && sign != -1) throw DomainError("hexagon sign must be +1 or -1");
  const int n = ring.rank();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c : ring.fuse(a, b)) ring.R(a, b, c);
  auto rs = [&](int a, int b, int c) {
    CycloNumber r = ring.R(a, b, c);
    return sign > 0 ? r : r.inv();
  };
  EquationSystem sys;
  sys.ring = ring.name();
  sys.nvars = idx.size();
  sys.kind = SystemKind::kHexagon;
  std::vector<Bucket> buckets;
  run_striped(n * n * n, opt.workers, buckets, [&](int outer, Bucket& out) {
    const int a = outer / (n * n), b = outer / n % n, c = outer % n;
    // R^{ac}_e [F^{acb}_d]_{eg} R^{bc}_g - sum_f [F^{cab}_d]_{ef} R^{fc}_d [F^{abc}_d]_{fg}
    for (int d = 0; d < n; ++d) {
      for (int e = 0; e < n; ++e) {
        for (int g = 0; g < n; ++g) {
          ++out.covered;
          if (!ring.N(a, c, e) || !ring.N(e, b, d) || !ring.N(c, b, g) || !ring.N(a, g, d)) continue;
          std::vector<CPoly::Term> terms;
          add_product(terms, rs(a, c, e) * rs(b, c, g), {f_entry(ring, idx, a, c, b, d, e, g)});
          for (int f = 0; f < n; ++f) {
            if (!ring.N(a, b, f) || !ring.N(f, c, d)) continue;
            add_product(terms, -rs(f, c, d), {f_entry(ring, idx, c, a, b, d, e, f), f_entry(ring, idx, a, b, c, d, f, g)});
          }
          CPoly p = finish(sys.nvars, std::move(terms), opt, out);
          if (p.is_zero()) continue;
          ++out.generated;
          out.items.push_back({std::move(p), {a, b, c, d, e, g}});
        }
      }
    }
  });
  collect(sys, buckets);
  return sys;
}

std::pair<std::vector<int>, std::vector<int>> f_block_labels(const FusionRing& ring, int a, int b, int c, int d) {
  std::vector<int> rows, cols;
  for (int e = 0; e < ring.rank(); ++e)
    if (ring.N(a, b, e) && ring.N(e, c, d)) rows.push_back(e);
  for (int f = 0; f < ring.rank(); ++f)
    if (ring.N(b, c, f) && ring.N(a, f, d)) cols.push_back(f);
  return {rows, cols};
}

EquationSystem gen_orthogonality(const FusionRing& ring, const SextupleIndex& idx) {
  const int n = ring.rank();
  const int v = ring.vacuum();
  EquationSystem sys;
  sys.ring = ring.name();
  sys.nvars = idx.size();
  sys.kind = SystemKind::kOrthogonality;
  Deduper dd;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          ++sys.tuples_covered;
          if (a == v || b == v || c == v) continue;
          auto [rows, cols] = f_block_labels(ring, a, b, c, d);
          for (std::size_t i = 0; i < cols.size(); ++i) {
            for (std::size_t j = i; j < cols.size(); ++j) {
              std::vector<CPoly::Term> terms;
              for (int e : rows) {
                add_product(terms, CycloNumber(1),
                            {f_entry(ring, idx, a, b, c, d, e, cols[i]), f_entry(ring, idx, a, b, c, d, e, cols[j])});
              }
              if (i == j) terms.push_back({Monomial(), CycloNumber(-1)});
              CPoly p = CPoly::from_terms(sys.nvars, std::move(terms)).monic();
              if (p.is_zero()) continue;
              ++sys.raw_nonzero;
              ++sys.generated;
              dd.insert(sys, std::move(p), {a, b, c, d, cols[i], cols[j]});
            }
          }
        }
  return sys;
}

std::vector<std::pair<Sextuple, CycloNumber>> fixed_assignments(const FusionRing& ring) {
  const int n = ring.rank();
  const int v = ring.vacuum();
  std::vector<std::pair<Sextuple, CycloNumber>> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a != v && b != v && c != v) continue;
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (ring.is_admissible_sextuple({a, b, c, d, e, f})) out.push_back({{a, b, c, d, e, f}, CycloNumber(1)});
      }
  return out;
}

}  // namespace anyon
