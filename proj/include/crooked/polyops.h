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

// Polynomials over GF(2^n) and the two predicates the family hypotheses
// need: irreducibility of sum_{k in K} x^(2^k - 1) over GF(2^n), and
// triviality of the kernel of the linearized map y -> sum_{k in K} y^(2^k).

#pragma once

#include <cstdint>
#include <vector>

#include "crooked/field.h"

namespace crooked {

// Unsigned integer of arbitrary width, used only as an exponent.
class BigUint {
 public:
  BigUint() = default;
  explicit BigUint(std::uint64_t v) : limbs_{v} { Trim(); }
  static BigUint PowerOfTwo(std::size_t k);

  bool Bit(std::size_t i) const {
    return i / 64 < limbs_.size() && ((limbs_[i / 64] >> (i % 64)) & 1u);
  }
  std::size_t BitLength() const;
  bool IsZero() const { return limbs_.empty(); }

 private:
  void Trim();
  std::vector<std::uint64_t> limbs_;
};

class Poly {
 public:
  explicit Poly(FieldCtx ctx) : ctx_(std::move(ctx)) {}
  Poly(FieldCtx ctx, std::vector<FieldElem> coeffs);

  static Poly Monomial(const FieldCtx& ctx, FieldElem coeff, std::size_t degree);
  static Poly X(const FieldCtx& ctx) { return Monomial(ctx, kOne, 1); }
  static Poly Constant(const FieldCtx& ctx, FieldElem c) { return Monomial(ctx, c, 0); }
  // Coefficients given as bit values, lowest degree first.
  static Poly FromBits(const FieldCtx& ctx, const std::vector<std::uint32_t>& coeffs);

  const FieldCtx& ctx() const { return ctx_; }
  const std::vector<FieldElem>& coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool IsZero() const { return coeffs_.empty(); }
  FieldElem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : kZero; }
  FieldElem Lead() const { return IsZero() ? kZero : coeffs_.back(); }

  FieldElem Evaluate(FieldElem x) const;
  Poly Monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly Scale(FieldElem s) const;
  // Throws Error(kInvalidInput) when the divisor is zero.
  std::pair<Poly, Poly> DivMod(const Poly& divisor) const;
  Poly Mod(const Poly& divisor) const { return DivMod(divisor).second; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.ctx_.SameField(b.ctx_) && a.coeffs_ == b.coeffs_;
  }

 private:
  void Trim();

  FieldCtx ctx_;
  std::vector<FieldElem> coeffs_;
};

// Monic gcd. Throws Error(kUndefinedGcd) when both inputs are zero.
Poly PolyGcd(const Poly& a, const Poly& b);

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& mod);
// Throws Error(kInvalidModulus) when mod has degree < 1.
Poly PolyPowMod(const Poly& base, const BigUint& e, const Poly& mod);
Poly PolyPowMod(const Poly& base, std::uint64_t e, const Poly& mod);
// base^(Q^k) mod `mod`, Q = 2^n, by k rounds of n squarings.
Poly FrobeniusPowMod(const Poly& base, std::size_t k, const Poly& mod);

struct IrreducibilityResult {
  bool irreducible = false;
  // Set for degree-0 input: a unit, neither irreducible nor reducible.
  bool nonzero_constant = false;
};

// Rabin's test over GF(2^n). Throws Error(kInvalidInput) on the zero
// polynomial.
IrreducibilityResult IsIrreducibleOver(const FieldCtx& ctx, const Poly& p);

// Strictly increasing indices in [0, n-1].
class ExponentSet {
 public:
  // Throws Error(kInvalidInput) on empty, unsorted, duplicate or out-of-range
  // input. {0,1} is representable; the families reject it.
  static ExponentSet Create(int n, std::vector<int> values);

  const std::vector<int>& values() const { return values_; }
  bool IsZeroOne() const { return values_ == std::vector<int>{0, 1}; }

  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;

 private:
  explicit ExponentSet(std::vector<int> v) : values_(std::move(v)) {}
  std::vector<int> values_;
};

// sum_{k in K} x^(2^k - 1).
Poly KernelPolynomial(const FieldCtx& ctx, const ExponentSet& k_set);

// L_K(y) = sum_{k in K} y^(2^k).
FieldElem ApplyLinearized(const FieldCtx& ctx, const ExponentSet& k_set, FieldElem y);

// True iff L_K has trivial kernel on GF(2^n), by rank of its n x n matrix.
bool LinearizedIsBijective(const FieldCtx& ctx, const ExponentSet& k_set);

}  // namespace crooked
