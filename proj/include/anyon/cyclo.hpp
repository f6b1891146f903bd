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

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anyon/bigcomplex.hpp"

namespace anyon {

using Rational = mpq_class;

/** Parses "p", "-p" or "p/q". */
Rational parse_rational(const std::string& text);
std::string rational_str(const Rational& q);
std::size_t rational_hash(const Rational& q);

/**
 * Static data of Q(zeta_m): the cyclotomic polynomial, the power basis
 * reduction table and embedding tables. Instances are created once per order
 * and never destroyed, so raw pointers to them stay valid.
 */
class CycloField {
 public:
  static const CycloField& get(int m);

  int order() const { return m_; }
  /** Euler phi(m); the power basis is zeta^0 .. zeta^{phi-1}. */
  int degree() const { return phi_; }
  /** Integer coefficients of Phi_m, lowest degree first. */
  const std::vector<long>& cyclotomic_polynomial() const { return phi_poly_; }
  /** zeta^e for 0 <= e < m in the power basis, as (exponent, coefficient). */
  const std::vector<std::pair<int, long>>& power(int e) const { return powers_[e]; }
  /** Units k of Z/m in increasing order. */
  const std::vector<int>& units() const { return units_; }
  std::complex<double> unit_root(int e) const { return roots_[e]; }
  /** e^{2 pi i e / m} at working precision, 0 <= e < m. */
  const BigComplex& big_unit_root(int e) const;

 private:
  explicit CycloField(int m);

  int m_;
  int phi_;
  std::vector<long> phi_poly_;
  std::vector<std::vector<std::pair<int, long>>> powers_;
  std::vector<int> units_;
  std::vector<std::complex<double>> roots_;
  mutable std::once_flag big_once_;
  mutable std::vector<BigComplex> big_roots_;
};

/**
 * Exact element of Q(zeta_m), stored as sum of q_e zeta^e with e in [0, phi(m)).
 * Elements whose only term is zeta^0 are normalized to order 1, so rationals
 * compare and hash identically whatever field they came from.
 */
class CycloNumber {
 public:
  struct Term {
    int exp;
    Rational coeff;
    bool operator==(const Term& o) const { return exp == o.exp && coeff == o.coeff; }
  };

  CycloNumber();
  CycloNumber(long value);  // NOLINT(runtime/explicit)
  CycloNumber(const Rational& value);  // NOLINT(runtime/explicit)

  /** zeta_m^e for any integer e. */
  static CycloNumber zeta(int m, long e);
  /** e^{2 pi i q} as an element of Q(zeta_m); q*m must be integral. */
  static CycloNumber root_of_unity(int m, const Rational& q);
  /** Builds a value from arbitrary (exponent, coefficient) pairs, reducing them. */
  static CycloNumber from_terms(int m, const std::vector<std::pair<long, Rational>>& terms);

  int order() const { return field_->order(); }
  const CycloField& field() const { return *field_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_rational() const { return field_->order() == 1; }
  /** Requires is_rational(). */
  Rational rational_value() const;

  /** The same value as an element of Q(zeta_m); m must be a multiple of order(). */
  CycloNumber lift(int m) const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  /** Throws ArithmeticError on zero. */
  CycloNumber inv() const;
  /** Complex conjugate (the automorphism zeta -> zeta^{-1}). */
  CycloNumber conj() const;
  /** The automorphism zeta -> zeta^k, gcd(k, m) = 1. */
  CycloNumber galois(int k) const;
  CycloNumber pow(long n) const;

  std::complex<double> embed() const;
  BigComplex embed_big() const;
  /** Image under zeta -> e^{2 pi i k / m}, k a unit. */
  BigComplex embed_big(int k) const;

  std::size_t hash() const;
  std::string str() const;

 private:
  CycloNumber(const CycloField* f, std::vector<Term> terms);
  void normalize_order();
  friend class CycloAccess;

  const CycloField* field_;
  std::vector<Term> terms_;
};

/** Square root inside Q(zeta_m) if one exists, of either sign. */
std::optional<CycloNumber> cyclo_sqrt(const CycloNumber& a, int m);

/** sqrt(s) for a squarefree integer s, if it lies in Q(zeta_m). */
std::optional<CycloNumber> sqrt_squarefree_integer(long s, int m);

}  // namespace anyon

template <>
struct std::hash<anyon::CycloNumber> {
  std::size_t operator()(const anyon::CycloNumber& x) const { return x.hash(); }
};
