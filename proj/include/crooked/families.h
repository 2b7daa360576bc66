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

// The two crooked multinomial families over GF(2^(2m)), the earlier k-odd
// family they generalize, and Gold power functions.
//
// Family parameters follow the construction's notation with the fixed
// exponents renamed: s > t >= 0 play the role of the exponent pair, and
// r[k-1] is the coefficient of x^(2^k (q+1)) for k = 1..m-1.
//
//   thm1: c x^(q+1) + sum_k r_k x^(2^k (q+1))
//         + sum_{k in K} (d^(2^k) x^(2^(s+k) + 2^(t+k)) + d^(q 2^k) x^(q (2^(s+k) + 2^(t+k))))
//   thm2: c x^(q+1) + sum_k r_k x^(2^k (q+1))
//         + sum_{k in K} (x^(2^(s+k) + 2^(t+k)) + d x^(q (2^(s+k) + 2^(t+k))))

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crooked/polyops.h"
#include "crooked/vbf.h"

namespace crooked {

enum class Family { kThm1, kThm2 };

const char* FamilyName(Family family);
// Throws Error(kInvalidInput) for unknown names.
Family ParseFamily(const std::string& name);

struct FamilyParams {
  Family family = Family::kThm1;
  int m = 0;
  int s = 0;
  int t = 0;
  std::vector<int> k_set;
  FieldElem c;
  FieldElem d;
  std::vector<FieldElem> r;  // m - 1 entries

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

enum class ViolationCode {
  kSNotAboveT,
  kNegativeT,
  kGcd,
  kExponentSet,
  kExponentSetZeroOne,
  kKernelNontrivial,
  kNotIrreducible,
  kElementOutsideField,
  kCInSubfield,
  kDPowerImage,
  kRLength,
  kRNotInSubfield,
  kRZero,
  kDNorm,
  kCDegenerate,
  kRdCoupling,
  kKernelCoefficient,
};

struct Violation {
  ViolationCode code;
  std::string message;
  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationOptions {
  // Require sum_{k in K} x^(2^k - 1) to be irreducible over GF(2^n), as the
  // hypothesis is literally stated. K = {0} fails this.
  bool require_irreducible = false;
  // Require every r_k to be nonzero (thm2 only constrains nonzero r_k).
  bool require_nonzero_r = false;
  // Require the derivative kernel to be {0, a} for every a != 0 after the
  // reduction x = a t, t in GF(q). The stated hypotheses imply this only for
  // odd m and, in thm2, a single shift in K.
  bool require_kernel_coefficient = false;

  static ValidationOptions Strict() { return {true, true, false}; }
};

// Reports every violated hypothesis in a stable order. Throws
// Error(kDegreeMismatch) when ctx.degree() != 2 p.m.
std::vector<Violation> Validate(const FieldCtx& ctx, const FamilyParams& p,
                                const ValidationOptions& options = {});

// The multinomial, without validating the hypotheses. r entries beyond m-1
// are ignored.
Multinomial Assemble(const FieldCtx& ctx, const FamilyParams& p);

class InvalidParameters : public Error {
 public:
  explicit InvalidParameters(std::vector<Violation> violations);
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Validate + Assemble; throws InvalidParameters.
Multinomial Build(const FieldCtx& ctx, const FamilyParams& p, const ValidationOptions& options = {});

// The earlier APN family on GF(2^(2m)), m odd:
//   alpha x^(2^s+1) + alpha^q x^(q (2^s+1)) + beta x^(q+1) + sum_i gamma_i x^(2^i (q+1))
// with alpha primitive, beta outside GF(2^m), gamma_i in GF(2^m), s odd and
// gcd(s, m) = 1.
struct Ref7Params {
  int m = 0;
  int s = 0;
  FieldElem alpha;
  FieldElem beta;
  std::vector<FieldElem> gamma;  // m - 1 entries
};

std::vector<std::string> ValidateRef7(const FieldCtx& ctx, const Ref7Params& p);
// Evaluates the formula pointwise with Frobenius maps; shares no code with
// Multinomial evaluation.
TruthTable Ref7Table(const FieldCtx& ctx, const Ref7Params& p);

// x^(2^s + 1). Throws Error(kInvalidInput) unless 1 <= s < n and
// Error(kNotGold) when gcd(s, n) != 1.
Multinomial BuildGold(const FieldCtx& ctx, int s);

// One s per cyclotomic class of the exponents 2^s + 1, gcd(s, n) = 1,
// ascending. s and n - s always fall in the same class.
std::vector<int> DistinctGoldShifts(int n);

struct SearchOptions {
  ValidationOptions validation;
  // Try primitive elements before the others when picking c and d.
  bool prefer_primitive = true;
};

// Deterministic parameter search. Structural choices (t, s, K) are visited
// in canonical order for seed 0 and in a seeded shuffle otherwise; each
// yields at most one record whose c and d are the first admissible elements.
// For seed != 0, r entries are seeded random admissible values; seed 0 uses
// r = 0. Throws Error(kInvalidInput) for odd n.
std::vector<FamilyParams> SearchParams(const FieldCtx& ctx, Family family, std::size_t budget,
                                       std::uint64_t seed, const SearchOptions& options = {});

struct IdentityOptions {
  // Number of random (x, a) pairs; nullopt or >= 2^n (2^n - 1) means every
  // pair.
  std::optional<std::uint64_t> trials;
  std::uint64_t seed = 0;
};

struct IdentityCheckResult {
  bool holds = false;
  bool global_form_holds = false;
  bool pair_form_holds = false;
  std::uint64_t pairs_checked = 0;
  // First (x, a) where the pair identity fails.
  std::optional<std::pair<FieldElem, FieldElem>> counterexample;
};

// With F(x) = f(x) + f(x+a) + f(a), checks
//   thm1: F + F^q = (c + c^q)(x^q a + x a^q),   f + f^q = (c + c^q) x^(q+1)
//   thm2: F + d F^q = (c + d c^q)(x^q a + x a^q), f + d f^q = (c + d c^q) x^(q+1)
// on the assembled (not validated) function.
IdentityCheckResult ProofIdentityCheck(const FieldCtx& ctx, const FamilyParams& p,
                                       const IdentityOptions& options = {});

}  // namespace crooked
