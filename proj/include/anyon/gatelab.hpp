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
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "anyon/bigcomplex.hpp"
#include "anyon/braidrep.hpp"
#include "anyon/tmatrix.hpp"
#include "json.hpp"

namespace anyon {

using CMatrix = Eigen::MatrixXcd;

/** Row-major square matrix of high-precision complex entries. */
struct BigMatrix {
  int n = 0;
  std::vector<BigComplex> a;

  static BigMatrix identity(int n);
  BigComplex& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const BigComplex& operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }
  friend BigMatrix operator*(const BigMatrix& x, const BigMatrix& y);
  BigMatrix adjoint() const;
};

CMatrix to_complex(const TowerMatrix& m);
BigMatrix to_big(const TowerMatrix& m);
/** Max row sum of |entries| of m - I. */
BigReal distance_from_identity_inf(const BigMatrix& m);

struct ClosureResult {
  /** Group order; meaningful when !exceeded. */
  std::size_t order = 0;
  bool exceeded = false;
};

/** Exact closure of the group generated by invertible square matrices; stops past cap elements. */
ClosureResult group_closure(const std::vector<TowerMatrix>& generators, std::size_t cap = 100000);
/** Closure of {g / phase}. */
ClosureResult group_closure(const std::vector<TowerMatrix>& generators, const TowerNumber& phase,
                            std::size_t cap = 100000);
/**
 * Closure over embedded entries: rounded keys bucket candidates and equality
 * inside a bucket is re-checked to 2^-100.
 */
ClosureResult group_closure_numeric(const std::vector<BigMatrix>& generators, std::size_t cap = 100000);

/** || A - lambda B ||_2 with lambda = tr(B^H A) / |tr(B^H A)|, or 1 when that trace vanishes. */
double phase_distance(const CMatrix& a, const CMatrix& b);

struct GateTarget {
  CMatrix matrix;
  /** Compare up to a global phase; otherwise ||A - B||_2. */
  bool up_to_phase = true;
  /** Unitarity tolerance of matrix. */
  double tolerance = 1e-8;

  int dim() const { return static_cast<int>(matrix.rows()); }
  double distance(const CMatrix& m) const;
  /** {"matrix": [[[re, im], ...], ...], "mode": "phase" | "exact", "unitarity_tol": x}; non-unitary input raises DomainError. */
  static GateTarget from_json(const nlohmann::json& j);
};

/**
 * Product of generators left to right; index i > 0 is sigma_i, i < 0 its
 * inverse. The empty word is the identity.
 */
TowerMatrix word_matrix(const BraidRep& rep, const std::vector<int>& word);
/** Same product with every sigma_i replaced by sigma_i / phase. */
TowerMatrix word_matrix(const BraidRep& rep, const std::vector<int>& word, const TowerNumber& phase);

struct WeaveOptions {
  int max_len = 11;
  double tol = 1e-2;
  /** Exponent alphabet in search order. */
  std::vector<int> exponents{1, -1, 2, -2, 3, -3, 4, -4};
  /** The two alternating generators; the first acts first. */
  int first_generator = 1;
  int second_generator = 2;
  int workers = 1;
};

struct WeaveResult {
  /** Exponent of factor k, applied to the first generator for even k. */
  std::vector<int> pattern;
  /** The weave as a word for word_matrix. */
  std::vector<int> word;
  double distance = 0;
  CMatrix matrix;
  nlohmann::json to_json(int digits = 17) const;
};

/**
 * Brute force over weaves W = g_{L-1}^{p_{L-1}} ... g_0^{p_0}, where g_k
 * alternates starting with the first generator. Patterns are visited by
 * length, then lexicographically in alphabet order. Returns the first W
 * with distance below tol, independently of the worker count.
 */
std::optional<WeaveResult> weave_search(const BraidRep& rep, const GateTarget& target, const WeaveOptions& opt = {});

}  // namespace anyon
