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

// Walsh spectra of vectorial functions, by fast Walsh-Hadamard transform of
// each component x -> Tr(a f(x)).

#pragma once

#include <cstdint>
#include <vector>

#include "crooked/vbf.h"

namespace crooked {

struct WalshComponent {
  FieldElem a;
  // W(omega, a) indexed by omega.bits.
  std::vector<std::int64_t> values;
};

// In-place unnormalized Walsh-Hadamard butterfly; size must be a power of 2.
void FastWalshHadamard(std::vector<std::int64_t>& data);

// Throws Error(kInvalidDirection) for a = 0.
WalshComponent ComputeWalshComponent(const TruthTable& f, FieldElem a);

struct SpectrumSummary {
  // W(omega, a) over all omega and a != 0.
  Multiset gamma;
  // |W(omega, a)| over the same range.
  Multiset extended;
  std::int64_t nl = 0;
  // Every component satisfied sum W^2 = 2^(2n).
  bool parseval_ok = true;
  friend bool operator==(const SpectrumSummary&, const SpectrumSummary&) = default;
};

SpectrumSummary ComputeWalshSpectrum(const TruthTable& f, int threads = 1);

// Almost bent: n odd and the distinct Walsh values are exactly
// {0, +-2^((n+1)/2)}.
bool IsAlmostBent(const TruthTable& f, int threads = 1);
bool IsAlmostBent(const SpectrumSummary& summary, int n);

struct ComponentClasses {
  std::uint64_t bent = 0;
  std::uint64_t semibent = 0;
  std::uint64_t other = 0;
  friend bool operator==(const ComponentClasses&, const ComponentClasses&) = default;
};

// bent: every |W| = 2^(n/2) (n even only). semibent: W in {0, +-2^((n+2)/2)}
// for n even, {0, +-2^((n+1)/2)} for n odd.
ComponentClasses ClassifyComponents(const TruthTable& f, int threads = 1);

}  // namespace crooked
