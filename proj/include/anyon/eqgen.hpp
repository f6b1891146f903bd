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
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "anyon/catalog.hpp"
#include "anyon/sparsepoly.hpp"

namespace anyon {

enum class SystemKind { kHexagon, kPentagon, kOrthogonality, kMixed };

std::string kind_name(SystemKind k);

/**
 * Deduplicated polynomial system over the F-symbol variables of a ring.
 * provenance[i] is the label tuple that produced polys[i] (its first
 * occurrence in enumeration order).
 */
struct EquationSystem {
  std::string ring;
  int nvars = 0;
  SystemKind kind = SystemKind::kMixed;
  std::vector<CPoly> polys;
  std::vector<std::vector<int>> provenance;
  /** Nonzero equations before reduction against GenOptions::tables. */
  std::size_t raw_nonzero = 0;
  /** Nonzero equations before deduplication. */
  std::size_t generated = 0;
  /** Label tuples accounted for by the enumeration, pruned ones included. */
  std::uint64_t tuples_covered = 0;

  std::size_t size() const { return polys.size(); }
  /** Appends other, dropping polynomials already present (by monic form). */
  void merge(const EquationSystem& other);
  /** One polynomial per line in debug form. */
  void dump(std::ostream& os, const std::function<std::string(int)>& namer) const;
};

/** Value of an F-entry while generating equations: a variable or a constant. */
struct FEntry {
  int var = -1;  // -1 when constant
  int constant = 0;
};

/** Maps F^{abc}_{d;ef} to its variable, to 1 (Triangle Axiom) or to 0 (inadmissible). */
FEntry f_entry(const FusionRing& ring, const SextupleIndex& idx, int a, int b, int c, int d, int e, int f);

/** Printer for variables as F[a,b,c,d,e,f] with label names. */
std::function<std::string(int)> fsymbol_namer(const FusionRing& ring, const SextupleIndex& idx);

struct GenOptions {
  int workers = 1;
  /** When set, every generated polynomial is update_reduced against it. */
  const ReductionTables<CycloNumber>* tables = nullptr;
};

EquationSystem gen_pentagon(const FusionRing& ring, const SextupleIndex& idx, const GenOptions& opt = {});
/** sign is +1 or -1; R-symbols enter with that exponent. */
EquationSystem gen_hexagon(const FusionRing& ring, const SextupleIndex& idx, int sign, const GenOptions& opt = {});
EquationSystem gen_orthogonality(const FusionRing& ring, const SextupleIndex& idx);

/** Identity entries of all vacuum-containing F-blocks. */
std::vector<std::pair<Sextuple, CycloNumber>> fixed_assignments(const FusionRing& ring);

/** Rows (e) and columns (f) of the block F^{abc}_d in label order. */
std::pair<std::vector<int>, std::vector<int>> f_block_labels(const FusionRing& ring, int a, int b, int c, int d);

}  // namespace anyon
