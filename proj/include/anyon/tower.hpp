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

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anyon/cyclo.hpp"

namespace anyon {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/**
 * Element of Q(zeta_m)(y_0, ..., y_{k-1}) with y_i^2 = alpha_i, stored as a
 * multilinear sum of c_S * prod_{i in S} y_i keyed by the bitmask S.
 * A null tower means k = 0.
 */
class TowerNumber {
 public:
  using Terms = std::vector<std::pair<std::uint32_t, CycloNumber>>;

  TowerNumber() = default;
  TowerNumber(long value);  // NOLINT(runtime/explicit)
  TowerNumber(const Rational& value);  // NOLINT(runtime/explicit)
  TowerNumber(const CycloNumber& value);  // NOLINT(runtime/explicit)
  /** Terms must be sorted by mask, nonzero, and use only radicals of the tower. */
  TowerNumber(TowerPtr tower, Terms terms);

  /** The generator y_i of the given tower. */
  static TowerNumber radical(const TowerPtr& tower, int i);

  const TowerPtr& tower() const { return tower_; }
  int depth() const;
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /** True when no radical occurs. */
  bool is_cyclo() const;
  /** Requires is_cyclo(). */
  CycloNumber cyclo_value() const;

  TowerNumber operator-() const;
  TowerNumber& operator+=(const TowerNumber& o);
  TowerNumber& operator-=(const TowerNumber& o);
  TowerNumber& operator*=(const TowerNumber& o);
  TowerNumber& operator/=(const TowerNumber& o);
  friend TowerNumber operator+(TowerNumber a, const TowerNumber& b) { return a += b; }
  friend TowerNumber operator-(TowerNumber a, const TowerNumber& b) { return a -= b; }
  friend TowerNumber operator*(const TowerNumber& a, const TowerNumber& b);
  friend TowerNumber operator/(const TowerNumber& a, const TowerNumber& b);
  bool operator==(const TowerNumber& o) const;
  bool operator!=(const TowerNumber& o) const { return !(*this == o); }

  /** Throws ArithmeticError on zero. */
  TowerNumber inv() const;
  TowerNumber pow(long n) const;

  std::complex<double> embed() const;
  BigComplex embed_big() const;

  std::size_t hash() const;
  std::string str() const;

 private:
  TowerPtr tower_;
  Terms terms_;
};

/**
 * Immutable chain of quadratic extensions. Extending never mutates a tower;
 * it creates a child whose parent pointer keeps the prefix alive, so values
 * built over a prefix remain valid in every extension.
 */
class Tower : public std::enable_shared_from_this<Tower> {
 public:
  /** Adjoins y with y^2 = alpha; alpha must lie in parent (or a prefix of it). */
  static TowerPtr extend(const TowerPtr& parent, const TowerNumber& alpha, int base_order);

  int depth() const { return static_cast<int>(levels_.size()); }
  int base_order() const { return base_order_; }
  const TowerPtr& parent() const { return parent_; }
  /** Defining constant of y_i. */
  const TowerNumber& alpha(int i) const { return levels_[i]->alpha_; }
  /** Ancestor of depth d, 1 <= d <= depth(). */
  const Tower* level(int d) const { return levels_[d - 1]; }
  /** Shared pointer to the prefix of depth d (null for d = 0). */
  TowerPtr prefix(int d) const;
  std::complex<double> radical_embed(int i) const { return levels_[i]->embed_; }
  const BigComplex& radical_embed_big(int i) const { return levels_[i]->embed_big_; }

 private:
  Tower() = default;

  TowerPtr parent_;
  TowerNumber alpha_;
  int base_order_ = 1;
  std::vector<const Tower*> levels_;
  std::complex<double> embed_;
  BigComplex embed_big_;
};

/** The tower of larger depth if one is a prefix of the other; throws otherwise. */
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

/**
 * Square root of a inside its tower over Q(zeta_m), normalized to the
 * principal branch of the embedding. nullopt when a is not a square there.
 */
std::optional<TowerNumber> tower_sqrt(const TowerNumber& a, int m);

/** Chooses the sign of x whose embedding lies in the principal half plane. */
TowerNumber principal_sign(const TowerNumber& x);

}  // namespace anyon

template <>
struct std::hash<anyon::TowerNumber> {
  std::size_t operator()(const anyon::TowerNumber& x) const { return x.hash(); }
};
