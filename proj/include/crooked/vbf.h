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

// Vectorial Boolean functions F_{2^n} -> F_{2^n}: symbolic multinomials,
// exhaustive truth tables, differential analysis and the crooked property.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "crooked/field.h"

namespace crooked {

// Sorted (value, multiplicity) pairs.
using Multiset = std::map<std::int64_t, std::uint64_t>;

// Exhaustive scans are limited to n <= 16.
inline constexpr int kMaxExhaustiveDegree = 16;

void RequireExhaustive(const FieldCtx& ctx, const char* what);

struct Term {
  FieldElem coeff;
  std::uint64_t exp = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

// Reduces a positive exponent into [1, 2^n - 1]; x^(2^n - 1 + k) = x^k on
// nonzero x and both sides vanish at zero.
std::uint64_t ReduceExponent(const FieldCtx& ctx, std::uint64_t e);

// sum_i 2^(k_i) reduced into [1, 2^n - 1], without forming 2^(k_i).
std::uint64_t ExponentFromPowersOfTwo(const FieldCtx& ctx, std::span<const int> powers);

class Multinomial {
 public:
  // Reduces exponents, XOR-merges coefficients of equal exponents and drops
  // zero terms. Terms come out sorted by exponent.
  static Multinomial FromTerms(const FieldCtx& ctx, std::vector<Term> terms);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::vector<std::uint64_t> Exponents() const;
  // Every exponent has binary weight 2.
  bool IsQuadratic() const;

  FieldElem Evaluate(FieldElem x) const;

  friend bool operator==(const Multinomial& a, const Multinomial& b) {
    return a.ctx_.SameField(b.ctx_) && a.terms_ == b.terms_;
  }

 private:
  Multinomial(FieldCtx ctx, std::vector<Term> terms)
      : ctx_(std::move(ctx)), terms_(std::move(terms)) {}

  FieldCtx ctx_;
  std::vector<Term> terms_;
};

class TruthTable {
 public:
  static TruthTable FromMultinomial(const Multinomial& m);
  // Throws Error(kInvalidInput) on wrong length or out-of-field entries.
  static TruthTable FromValues(const FieldCtx& ctx, std::vector<FieldElem> values);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<FieldElem>& values() const { return values_; }
  FieldElem operator[](FieldElem x) const { return values_[x.bits]; }
  FieldElem at(std::uint32_t x) const { return values_[x]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(values_.size()); }

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.ctx_.SameField(b.ctx_) && a.values_ == b.values_;
  }

 private:
  TruthTable(FieldCtx ctx, std::vector<FieldElem> values)
      : ctx_(std::move(ctx)), values_(std::move(values)) {}

  FieldCtx ctx_;
  std::vector<FieldElem> values_;
};

// Sorted, deduplicated image of x -> f(x) + f(x + a). Throws
// Error(kInvalidDirection) for a = 0.
std::vector<FieldElem> DerivativeSet(const TruthTable& f, FieldElem a);

struct DifferentialSpectrum {
  std::uint64_t delta = 0;
  // Solution count -> number of (a, b) pairs, a != 0, with that count.
  Multiset spectrum;
  friend bool operator==(const DifferentialSpectrum&, const DifferentialSpectrum&) = default;
};

DifferentialSpectrum ComputeDifferentialSpectrum(const TruthTable& f, int threads = 1);

bool IsApn(const TruthTable& f, int threads = 1);

// APN test for quadratic f: every derivative x -> f(x)+f(x+a)+f(a)+f(0) is
// linear, so f is APN iff each of them has a kernel of size exactly 2.
// Meaningless for non-quadratic input.
bool IsApnByDerivativeKernel(const TruthTable& f);

// {y : Tr(b y) = eps}.
struct HyperplaneWitness {
  FieldElem b;
  int eps = 0;
  friend bool operator==(const HyperplaneWitness&, const HyperplaneWitness&) = default;
};

// Witness for `s` being an affine hyperplane of F_{2^n}, or nullopt.
// Duplicates in `s` are ignored.
std::optional<HyperplaneWitness> HyperplaneOf(const FieldCtx& ctx, std::span<const FieldElem> s);

struct CrookedResult {
  bool crooked = false;
  // One witness per direction a, in increasing a, when crooked.
  std::vector<std::pair<FieldElem, HyperplaneWitness>> witnesses;
  // First direction whose derivative image is not an affine hyperplane.
  std::optional<FieldElem> first_failure;
};

CrookedResult CheckCrooked(const TruthTable& f, int threads = 1);

}  // namespace crooked
