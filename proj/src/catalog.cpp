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

#include "anyon/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "anyon/errors.hpp"

namespace anyon {

namespace {

// Braiding data of the two non-SU(2) builtins. Exponents q mean e^{2 pi i q}.
const char* kFibonacciJson = R"({
  "name": "fibonacci",
  "labels": ["one", "tau"],
  "N": [[0,0,0], [0,1,1], [1,0,1], [1,1,0], [1,1,1]],
  "dual": [0, 1],
  "cyclo_order": 10,
  "r_symbols": [[0,0,0,0,1], [0,1,1,0,1], [1,0,1,0,1], [1,1,0,-2,5], [1,1,1,3,10]],
  "twists": [[0,0,1], [1,2,5]],
  "pivotal": [1, 1]
})";

const char* kIsingJson = R"({
  "name": "ising",
  "labels": ["one", "sigma", "psi"],
  "N": [[0,0,0], [0,1,1], [0,2,2], [1,0,1], [2,0,2],
        [1,1,0], [1,1,2], [1,2,1], [2,1,1], [2,2,0]],
  "dual": [0, 1, 2],
  "cyclo_order": 16,
  "r_symbols": [[0,0,0,0,1], [0,1,1,0,1], [1,0,1,0,1], [0,2,2,0,1], [2,0,2,0,1],
                [1,1,0,-1,16], [1,1,2,3,16], [1,2,1,-1,4], [2,1,1,-1,4], [2,2,0,1,2]],
  "twists": [[0,0,1], [1,1,16], [2,1,2]],
  "pivotal": [1, 1, 1]
})";

std::string tuple_str(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    first = false;
    os << x;
  }
  os << ")";
  return os.str();
}

Rational json_rational(const nlohmann::json& num, const nlohmann::json& den) {
  auto part = [](const nlohmann::json& v) -> std::string {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw DataError("rational parts must be integers or strings");
  };
  return parse_rational(part(num) + "/" + part(den));
}

nlohmann::json json_integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

FusionRing::FusionRing(std::string name, std::vector<std::string> labels, int cyclo_order)
    : name_(std::move(name)), labels_(std::move(labels)), cyclo_order_(cyclo_order) {
  int n = rank();
  if (n == 0) throw DomainError("a fusion ring needs at least one label");
  if (cyclo_order <= 0) throw DomainError("cyclotomic order must be positive");
  n_.assign(static_cast<std::size_t>(n) * n * n, 0);
  dual_.resize(n);
  for (int a = 0; a < n; ++a) dual_[a] = a;
  twists_.assign(n, Rational(0));
  pivotal_.assign(n, 1);
}

void FusionRing::check_label(int a) const {
  if (a < 0 || a >= rank()) {
    throw DomainError("label index " + std::to_string(a) + " outside ring " + name_);
  }
}

Label FusionRing::label(int index) const {
  check_label(index);
  return {index, labels_[index]};
}

int FusionRing::label_index(const std::string& name_or_index) const {
  for (int a = 0; a < rank(); ++a) {
    if (labels_[a] == name_or_index) return a;
  }
  if (!name_or_index.empty() && std::all_of(name_or_index.begin(), name_or_index.end(), ::isdigit)) {
    int a = std::stoi(name_or_index);
    if (a < rank()) return a;
  }
  throw NotFoundError("unknown label '" + name_or_index + "' in ring " + name_);
}

std::vector<int> FusionRing::fuse(int a, int b) const {
  check_label(a);
  check_label(b);
  std::vector<int> out;
  for (int c = 0; c < rank(); ++c) {
    if (N(a, b, c)) out.push_back(c);
  }
  return out;
}

std::vector<int> FusionRing::fuse(const Label& a, const Label& b) const {
  for (const Label* l : {&a, &b}) {
    if (l->index < 0 || l->index >= rank() || labels_[l->index] != l->name) {
      throw DomainError("label " + l->name + " does not belong to ring " + name_);
    }
  }
  return fuse(a.index, b.index);
}

bool FusionRing::is_admissible_sextuple(const Sextuple& s) const {
  for (int x : s) check_label(x);
  const auto& [a, b, c, d, e, f] = s;
  return N(a, b, e) && N(e, c, d) && N(b, c, f) && N(a, f, d);
}

bool FusionRing::has_R(int a, int b, int c) const { return r_.count({a, b, c}) > 0; }

CycloNumber FusionRing::R(int a, int b, int c) const {
  auto it = r_.find({a, b, c});
  if (it == r_.end()) {
    throw DataError("missing R-symbol " + tuple_str({a, b, c}) + " in ring " + name_);
  }
  return CycloNumber::root_of_unity(cyclo_order_, it->second);
}

CycloNumber FusionRing::twist(int a) const {
  check_label(a);
  return CycloNumber::root_of_unity(cyclo_order_, twists_[a]);
}

void FusionRing::set_N(int a, int b, int c, bool value) {
  check_label(a);
  check_label(b);
  check_label(c);
  n_[(a * rank() + b) * rank() + c] = value ? 1 : 0;
}

void FusionRing::set_R(int a, int b, int c, const Rational& exponent) {
  check_label(a);
  check_label(b);
  check_label(c);
  Rational q = exponent - Rational(mpz_class(exponent.get_num() / exponent.get_den()));
  if (sgn(q) < 0) q += 1;
  r_[{a, b, c}] = q;
}

void FusionRing::set_twist(int a, const Rational& exponent) {
  check_label(a);
  twists_[a] = exponent;
}

void FusionRing::set_pivotal(int a, int sign) {
  check_label(a);
  pivotal_[a] = sign;
}

void FusionRing::derive_dual() {
  for (int a = 0; a < rank(); ++a) {
    for (int b = 0; b < rank(); ++b) {
      if (N(a, b, vacuum_)) dual_[a] = b;
    }
  }
}

// ---------------------------------------------------------------------------

SextupleIndex::SextupleIndex(const FusionRing& ring) : n_(ring.rank()) {
  int n = n_;
  lookup_.assign(static_cast<std::size_t>(n) * n * n * n * n * n, -1);
  int v = ring.vacuum();
  for (int a = 0; a < n; ++a) {
    if (a == v) continue;
    for (int b = 0; b < n; ++b) {
      if (b == v) continue;
      for (int c = 0; c < n; ++c) {
        if (c == v) continue;
        for (int d = 0; d < n; ++d) {
          for (int e = 0; e < n; ++e) {
            if (!ring.N(a, b, e) || !ring.N(e, c, d)) continue;
            for (int f = 0; f < n; ++f) {
              if (!ring.N(b, c, f) || !ring.N(a, f, d)) continue;
              lookup_[((((a * n + b) * n + c) * n + d) * n + e) * n + f] =
                  static_cast<int>(list_.size());
              list_.push_back({a, b, c, d, e, f});
            }
          }
        }
      }
    }
  }
}

int SextupleIndex::index(const Sextuple& s) const {
  for (int x : s) {
    if (x < 0 || x >= n_) throw DomainError("sextuple label out of range");
  }
  return index(s[0], s[1], s[2], s[3], s[4], s[5]);
}

// ---------------------------------------------------------------------------

bool AxiomReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed(); });
}

std::vector<std::string> AxiomReport::failures() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    for (const auto& w : c.witnesses) out.push_back(c.name + ": " + w);
  }
  return out;
}

AxiomReport verify_ring_axioms(const FusionRing& ring) {
  AxiomReport rep;
  int n = ring.rank();
  int v = ring.vacuum();

  AxiomCheck names{"label names unique", {}};
  std::set<std::string> seen;
  for (const auto& l : ring.label_names()) {
    if (l.empty() || !seen.insert(l).second) names.witnesses.push_back("'" + l + "'");
  }
  rep.checks.push_back(names);

  AxiomCheck comm{"commutativity", {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (ring.N(a, b, c) != ring.N(b, a, c)) comm.witnesses.push_back(tuple_str({a, b, c}));
  rep.checks.push_back(comm);

  AxiomCheck assoc{"associativity", {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int e = 0; e < n; ++e) {
          int lhs = 0, rhs = 0;
          for (int d = 0; d < n; ++d) {
            lhs += ring.N(a, b, d) * ring.N(d, c, e);
            rhs += ring.N(b, c, d) * ring.N(a, d, e);
          }
          if (lhs != rhs) assoc.witnesses.push_back(tuple_str({a, b, c, e}));
        }
  rep.checks.push_back(assoc);

  AxiomCheck unit{"vacuum is a unit", {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (ring.N(a, v, b) != (a == b) || ring.N(v, a, b) != (a == b))
        unit.witnesses.push_back(tuple_str({a, b}));
  rep.checks.push_back(unit);

  AxiomCheck dual{"duality", {}};
  for (int a = 0; a < n; ++a) {
    if (ring.dual(a) < 0 || ring.dual(a) >= n || ring.dual(ring.dual(a)) != a) {
      dual.witnesses.push_back("dual not an involution at " + std::to_string(a));
      continue;
    }
    for (int b = 0; b < n; ++b)
      if (ring.N(a, b, v) != (b == ring.dual(a))) dual.witnesses.push_back(tuple_str({a, b}));
  }
  if (ring.dual(v) != v) dual.witnesses.push_back("dual does not fix the vacuum");
  rep.checks.push_back(dual);

  AxiomCheck rsym{"R-symbols on admissible triples", {}};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        bool adm = ring.N(a, b, c);
        if (adm != ring.has_R(a, b, c)) {
          rsym.witnesses.push_back(tuple_str({a, b, c}) + (adm ? " missing" : " not admissible"));
          continue;
        }
        if (!adm) continue;
        try {
          if (ring.R(a, b, c).is_zero()) rsym.witnesses.push_back(tuple_str({a, b, c}) + " zero");
        } catch (const DomainError& e) {
          rsym.witnesses.push_back(tuple_str({a, b, c}) + " " + e.what());
        }
      }
  rep.checks.push_back(rsym);

  AxiomCheck tw{"twists representable", {}};
  for (int a = 0; a < n; ++a) {
    try {
      ring.twist(a);
    } catch (const DomainError& e) {
      tw.witnesses.push_back(std::to_string(a) + " " + e.what());
    }
  }
  rep.checks.push_back(tw);

  AxiomCheck piv{"pivotal signs", {}};
  if (ring.pivotal(v) != 1) piv.witnesses.push_back("pivotal(vacuum) != +1");
  for (int a = 0; a < n; ++a)
    if (ring.pivotal(a) != 1 && ring.pivotal(a) != -1)
      piv.witnesses.push_back("pivotal(" + std::to_string(a) + ") not a sign");
  rep.checks.push_back(piv);
  return rep;
}

// ---------------------------------------------------------------------------

FusionRing su2_ring(int k) {
  if (k < 1) throw NotFoundError("su2-k requires k >= 1");
  std::vector<std::string> names;
  if (k == 4) {
    names = {"one", "X_e", "Y", "X_ep", "Z"};
  } else {
    for (int a = 0; a <= k; ++a) names.push_back(std::to_string(a));
  }
  const int m = 8 * (k + 2);
  FusionRing ring("su2-" + std::to_string(k), names, m);
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      for (int c = std::abs(a - b); c <= std::min(a + b, 2 * k - a - b); c += 2) {
        ring.set_N(a, b, c, true);
        // (-1)^{(c-a-b)/2} q^{(C_c - C_a - C_b)/2} with C_x = x(x+2)/4, q = e^{2 pi i/(k+2)}.
        Rational q(c * (c + 2) - a * (a + 2) - b * (b + 2), 8 * (k + 2));
        q += Rational(c - a - b, 4);
        q.canonicalize();
        ring.set_R(a, b, c, q);
      }
    }
    Rational tw(a * (a + 2), 4 * (k + 2));
    tw.canonicalize();
    ring.set_twist(a, tw);
  }
  ring.derive_dual();
  return ring;
}

std::vector<std::string> builtin_names() {
  return {"fibonacci", "ising", "su2-1", "su2-2", "su2-3", "su2-4"};
}

FusionRing builtin(const std::string& name) {
  if (name == "fibonacci") return ring_from_json(nlohmann::json::parse(kFibonacciJson));
  if (name == "ising") return ring_from_json(nlohmann::json::parse(kIsingJson));
  if (name.rfind("su2-", 0) == 0) {
    std::string k = name.substr(4);
    if (!k.empty() && k.size() < 4 && std::all_of(k.begin(), k.end(), ::isdigit)) {
      return su2_ring(std::stoi(k));
    }
  }
  throw NotFoundError("unknown builtin ring '" + name + "'");
}

nlohmann::json ring_to_json(const FusionRing& ring) {
  nlohmann::json j;
  j["name"] = ring.name();
  j["labels"] = ring.label_names();
  j["vacuum"] = ring.vacuum();
  nlohmann::json triples = nlohmann::json::array();
  for (int a = 0; a < ring.rank(); ++a)
    for (int b = 0; b < ring.rank(); ++b)
      for (int c = 0; c < ring.rank(); ++c)
        if (ring.N(a, b, c)) triples.push_back({a, b, c});
  j["N"] = triples;
  std::vector<int> dual;
  for (int a = 0; a < ring.rank(); ++a) dual.push_back(ring.dual(a));
  j["dual"] = dual;
  j["cyclo_order"] = ring.cyclo_order();
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& [key, q] : ring.r_exponents()) {
    const auto& [a, b, c] = key;
    rs.push_back({a, b, c, json_integer(q.get_num()), json_integer(q.get_den())});
  }
  j["r_symbols"] = rs;
  nlohmann::json tw = nlohmann::json::array();
  for (int a = 0; a < ring.rank(); ++a) {
    const Rational& q = ring.twist_exponents()[a];
    tw.push_back({a, json_integer(q.get_num()), json_integer(q.get_den())});
  }
  j["twists"] = tw;
  std::vector<int> piv;
  for (int a = 0; a < ring.rank(); ++a) piv.push_back(ring.pivotal(a));
  j["pivotal"] = piv;
  return j;
}

FusionRing ring_from_json(const nlohmann::json& j) {
  try {
    FusionRing ring(j.at("name").get<std::string>(), j.at("labels").get<std::vector<std::string>>(),
                    j.at("cyclo_order").get<int>());
    if (j.contains("vacuum")) ring.set_vacuum(j["vacuum"].get<int>());
    for (const auto& t : j.at("N")) ring.set_N(t.at(0), t.at(1), t.at(2), true);
    if (j.contains("dual")) ring.set_dual(j["dual"].get<std::vector<int>>());
    else ring.derive_dual();
    for (const auto& r : j.at("r_symbols")) {
      ring.set_R(r.at(0), r.at(1), r.at(2), json_rational(r.at(3), r.at(4)));
    }
    // Vacuum braidings are trivial; files may omit them.
    int v = ring.vacuum();
    for (int a = 0; a < ring.rank(); ++a) {
      if (!ring.has_R(v, a, a)) ring.set_R(v, a, a, Rational(0));
      if (!ring.has_R(a, v, a)) ring.set_R(a, v, a, Rational(0));
    }
    if (j.contains("twists")) {
      for (const auto& t : j["twists"]) ring.set_twist(t.at(0), json_rational(t.at(1), t.at(2)));
    }
    if (j.contains("pivotal")) {
      auto piv = j["pivotal"].get<std::vector<int>>();
      if (static_cast<int>(piv.size()) != ring.rank()) throw DataError("pivotal size mismatch");
      for (int a = 0; a < ring.rank(); ++a) ring.set_pivotal(a, piv[a]);
    }
    return ring;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed ring definition: ") + e.what());
  }
}

}  // namespace anyon
