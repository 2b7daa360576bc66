// Copyright 2026 The Crooked Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// CCZ-invariants of functions F_{2^n} -> F_{2^n} and comparison reports.
//
// Equal invariants say nothing; a single differing invariant proves the two
// functions are CCZ-inequivalent, hence EA-inequivalent.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crooked/gf2_matrix.h"
#include "crooked/vbf.h"

namespace crooked {

// Gamma/Delta matrices are 2^(2n) x 2^(2n) bits.
inline constexpr int kMaxRankDegree = 7;

// Rows (u, v), columns (x, y), both indexed as (first << n) | second. Entry
// is 1 iff (x + u, y + v) lies in the graph {(x, f(x))}.
Gf2Matrix GammaMatrix(const TruthTable& f, int threads = 1);
// Same, for the set {(a, f(x) + f(x + a)) : a != 0}.
Gf2Matrix DeltaMatrix(const TruthTable& f, int threads = 1);

// Throw Error(kInfeasibleSize) for n > kMaxRankDegree.
std::uint64_t GammaRank(const TruthTable& f, int threads = 1);
std::uint64_t DeltaRank(const TruthTable& f, int threads = 1);

enum class Depth { kSpectra, kRanks };
enum class Verdict { kDistinguished, kIndistinguishable };

const char* VerdictName(Verdict verdict);
const char* DepthName(Depth depth);
// Throws Error(kInvalidInput) for unknown names.
Depth ParseDepth(const std::string& name);

struct InvariantSet {
  Multiset diff_spectrum;
  Multiset extended_walsh;
  std::optional<std::uint64_t> gamma_rank;
  std::optional<std::uint64_t> delta_rank;
  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

InvariantSet ComputeInvariants(const TruthTable& f, Depth depth, int threads = 1);

struct InvariantReport {
  Depth depth = Depth::kSpectra;
  InvariantSet lhs;
  InvariantSet rhs;
  // Names of the invariants that differ, in a fixed order.
  std::vector<std::string> differing;
  Verdict verdict = Verdict::kIndistinguishable;
};

InvariantReport CompareInvariants(const InvariantSet& lhs, const InvariantSet& rhs, Depth depth);

// Throws Error(kDegreeMismatch) when the fields differ.
InvariantReport Compare(const TruthTable& fa, const TruthTable& fb, Depth depth, int threads = 1);

}  // namespace crooked
