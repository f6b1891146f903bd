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

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "anyon/catalog.hpp"
#include "anyon/fsolve.hpp"
#include "anyon/tmatrix.hpp"
#include "json.hpp"

namespace anyon {

/**
 * Fusion-tree state of Hom(a^m, b): pair labels t_1..t_r and chain labels.
 * Chain labels hold l_1..l_{r-2} for even m and l_1..l_{r-1} for odd m.
 */
struct BasisState {
  std::vector<int> t;
  std::vector<int> l;

  bool operator==(const BasisState& o) const { return t == o.t && l == o.l; }
  bool operator!=(const BasisState& o) const { return !(*this == o); }
  /** Lexicographic on (t, l) by label index. */
  bool operator<(const BasisState& o) const { return std::tie(t, l) < std::tie(o.t, o.l); }
};

/** Labels of the state joined as "(t_1,...,l_1,...)". */
std::string state_str(const FusionRing& ring, const BasisState& s);

/**
 * The computational basis of Hom(a^m, b), in descending lexicographic order
 * of (t, l). Empty when no admissible tree exists; m < 3 raises DomainError.
 */
std::vector<BasisState> comp_basis(const FusionRing& ring, int a, int b, int m);

/**
 * Builds generator matrices against one solved table, which must outlive it. Entry (i, k) is the
 * coefficient of basis state i in the image of basis state k.
 */
class BraidContext {
 public:
  BraidContext(const FSymbolTable& table, int a, int b, int m);

  const FusionRing& ring() const { return table_.ring(); }
  const std::vector<BasisState>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int strands() const { return m_; }

  /** sigma_{2j-1}: diag(R^{aa}_{t_j}). */
  TowerMatrix sigma_odd(int j) const;
  /** sigma_{2j}, through the local B_4 block or, for odd m and j = r, the B_3 block. */
  TowerMatrix sigma_even(int j) const;
  /** sigma_i for 1 <= i <= m-1. */
  TowerMatrix sigma(int i) const;

  /** sigma_2 on Hom(a^3, c) over comp_basis(a, c, 3). */
  const TowerMatrix& local_b3(int c) const;
  /** sigma_2 on Hom(a^4, c) over comp_basis(a, c, 4). */
  const TowerMatrix& local_b4(int c) const;

 private:
  struct Block {
    std::vector<int> rows, cols;
    TowerMatrix f, inv;
    int row(int e) const;
    int col(int g) const;
  };
  const Block& block(int x, int y, int z, int w) const;
  /** [(F^{xyz}_w)^{-1}]_{g e}, g a column label and e a row label of the block. */
  TowerNumber finv(int x, int y, int z, int w, int g, int e) const;
  TowerNumber r_aa(int c) const;
  /** Chain l_0..l_{r-1} with l_0 = t_1, closing on b for even m. */
  std::vector<int> chain(const BasisState& s) const;
  BasisState from_chain(std::vector<int> t, const std::vector<int>& chain) const;
  int state_index(const BasisState& s) const;

  const FSymbolTable& table_;
  int a_, b_, m_, r_;
  std::vector<BasisState> basis_;
  std::map<BasisState, int> index_;
  mutable std::map<std::tuple<int, int, int, int>, Block> blocks_;
  mutable std::map<int, TowerMatrix> b3_, b4_;
  mutable std::map<int, std::vector<BasisState>> b3_basis_, b4_basis_;
};

struct BraidRep {
  FusionRing ring;
  int a = 0, b = 0, m = 0;
  std::vector<BasisState> basis;
  /** sigma_1 .. sigma_{m-1}. */
  std::vector<TowerMatrix> generators;
  std::vector<TowerMatrix> inverses;

  int dim() const { return static_cast<int>(basis.size()); }
  /** sigma_i for i > 0 and its inverse for i < 0; DomainError when out of range. */
  const TowerMatrix& generator(int i) const;
};

/** sigma_2 on Hom(a^3, b) over comp_basis(a, b, 3). */
TowerMatrix sigma2_b3(const FSymbolTable& table, int a, int b);
/** sigma_2 on Hom(a^4, b) over comp_basis(a, b, 4). */
TowerMatrix sigma2_b4(const FSymbolTable& table, int a, int b);

/** All generators and inverses; an empty basis raises DomainError. */
BraidRep build_rep(const FSymbolTable& table, int a, int b, int m);

/** {ring, anyon, root, strands, basis, generators: [[[re, im], ...], ...]} with decimal strings. */
nlohmann::json rep_to_json(const BraidRep& rep, int digits = 17);
/** Basis line followed by each generator as rows of embedded complex values. */
std::string rep_to_text(const BraidRep& rep, int digits = 6);
/** Decimal rendering of an embedded entry with the given significant digits. */
nlohmann::json complex_to_json(const BigComplex& z, int digits);

}  // namespace anyon
