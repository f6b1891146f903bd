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

#include <array>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "anyon/cyclo.hpp"
#include "json.hpp"

namespace anyon {

struct Label {
  int index;
  std::string name;
};

using Sextuple = std::array<int, 6>;

/**
 * Multiplicity-free fusion ring with braiding data. R-symbols and twists are
 * stored as rational exponents q meaning e^{2 pi i q}.
 */
class FusionRing {
 public:
  FusionRing() = default;
  FusionRing(std::string name, std::vector<std::string> labels, int cyclo_order);

  const std::string& name() const { return name_; }
  int rank() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& label_names() const { return labels_; }
  Label label(int index) const;
  /** Accepts a label name or a decimal index. Throws NotFoundError. */
  int label_index(const std::string& name_or_index) const;
  int vacuum() const { return vacuum_; }
  int dual(int a) const { return dual_[a]; }
  int cyclo_order() const { return cyclo_order_; }

  bool N(int a, int b, int c) const { return n_[(a * rank() + b) * rank() + c] != 0; }
  /** All c with N^{ab}_c = 1 in label-index order. */
  std::vector<int> fuse(int a, int b) const;
  std::vector<int> fuse(const Label& a, const Label& b) const;
  bool is_admissible_sextuple(const Sextuple& s) const;

  /** R^{ab}_c; throws DataError when the triple has no R-symbol. */
  CycloNumber R(int a, int b, int c) const;
  bool has_R(int a, int b, int c) const;
  const std::map<std::tuple<int, int, int>, Rational>& r_exponents() const { return r_; }
  CycloNumber twist(int a) const;
  const std::vector<Rational>& twist_exponents() const { return twists_; }
  int pivotal(int a) const { return pivotal_[a]; }

  // Builders; the result should be checked with verify_ring_axioms.
  void set_N(int a, int b, int c, bool value);
  void set_vacuum(int v) { vacuum_ = v; }
  void set_dual(std::vector<int> dual) { dual_ = std::move(dual); }
  void set_R(int a, int b, int c, const Rational& exponent);
  void set_twist(int a, const Rational& exponent);
  void set_pivotal(int a, int sign);
  /** Fills the dual map from N^{ab}_vacuum. */
  void derive_dual();

 private:
  void check_label(int a) const;

  std::string name_;
  std::vector<std::string> labels_;
  int cyclo_order_ = 1;
  int vacuum_ = 0;
  std::vector<unsigned char> n_;
  std::vector<int> dual_;
  std::map<std::tuple<int, int, int>, Rational> r_;
  std::vector<Rational> twists_;
  std::vector<int> pivotal_;
};

/**
 * Admissible sextuples with a, b, c all non-vacuum, in lexicographic order,
 * with the inverse map. These are the unknowns of the F-symbol systems.
 */
class SextupleIndex {
 public:
  explicit SextupleIndex(const FusionRing& ring);

  int size() const { return static_cast<int>(list_.size()); }
  const Sextuple& sextuple(int i) const { return list_.at(i); }
  const std::vector<Sextuple>& all() const { return list_; }
  /** Variable index or -1 when the sextuple is not an unknown. */
  int index(const Sextuple& s) const;
  int index(int a, int b, int c, int d, int e, int f) const {
    return lookup_[((((a * n_ + b) * n_ + c) * n_ + d) * n_ + e) * n_ + f];
  }

 private:
  int n_;
  std::vector<Sextuple> list_;
  std::vector<int> lookup_;
};

struct AxiomCheck {
  std::string name;
  std::vector<std::string> witnesses;  // empty when passed
  bool passed() const { return witnesses.empty(); }
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;
  bool ok() const;
  std::vector<std::string> failures() const;
};

AxiomReport verify_ring_axioms(const FusionRing& ring);

/** Names accepted by builtin(); su2-k is accepted for every k >= 1. */
std::vector<std::string> builtin_names();
FusionRing builtin(const std::string& name);
FusionRing su2_ring(int k);

nlohmann::json ring_to_json(const FusionRing& ring);
FusionRing ring_from_json(const nlohmann::json& j);

}  // namespace anyon
