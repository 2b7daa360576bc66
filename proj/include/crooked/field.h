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

// Arithmetic in GF(2^n), 1 <= n <= 24, in a polynomial basis.
//
// An element is an n-bit word; bit i is the coefficient of x^i in the basis
// polynomial. Addition is XOR. Contexts are immutable after creation and
// cheap to copy (the tables are shared).

#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "crooked/error.h"

namespace crooked {

struct FieldElem {
  std::uint32_t bits = 0;

  constexpr FieldElem() = default;
  constexpr explicit FieldElem(std::uint32_t b) : bits(b) {}

  constexpr bool IsZero() const { return bits == 0; }
  constexpr bool IsOne() const { return bits == 1; }

  friend constexpr FieldElem operator+(FieldElem a, FieldElem b) {
    return FieldElem(a.bits ^ b.bits);
  }
  constexpr FieldElem& operator+=(FieldElem o) {
    bits ^= o.bits;
    return *this;
  }
  friend constexpr auto operator<=>(FieldElem, FieldElem) = default;
};

inline constexpr FieldElem kZero{0};
inline constexpr FieldElem kOne{1};

struct PrimePower {
  std::uint64_t prime = 0;
  int multiplicity = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Irreducibility of a binary polynomial given as a bitmask (bit i = x^i).
bool IsIrreducibleGf2(std::uint64_t poly);

// Numerically smallest irreducible binary polynomial of the given degree.
std::uint64_t SmallestIrreducibleGf2(int degree);

// Carry-less product of two binary polynomials of degree < 32.
std::uint64_t ClMul(std::uint32_t a, std::uint32_t b);

// Prime factorization by trial division.
std::vector<PrimePower> Factorize(std::uint64_t value);

class FieldCtx {
 public:
  static constexpr int kMaxDegree = 24;
  static constexpr int kMaxTableDegree = 16;

  // Throws Error(kUnsupportedDegree) or Error(kInvalidModulus).
  static FieldCtx Create(int n, std::optional<std::uint32_t> modulus = {});

  int degree() const { return data_->n; }
  std::uint32_t modulus() const { return data_->modulus; }
  // Number of elements, 2^n.
  std::uint32_t size() const { return std::uint32_t{1} << data_->n; }
  // Order of the multiplicative group, 2^n - 1.
  std::uint32_t group_order() const { return size() - 1; }
  const std::vector<PrimePower>& order_facts() const {
    return data_->order_facts;
  }

  bool Contains(FieldElem a) const { return a.bits < size(); }

  FieldElem Mul(FieldElem a, FieldElem b) const;
  // Reference multiplication that never touches the log tables.
  FieldElem MulSlow(FieldElem a, FieldElem b) const;
  FieldElem Square(FieldElem a) const { return Mul(a, a); }
  // Throws Error(kUndefinedPower) for 0^0.
  FieldElem Pow(FieldElem a, std::uint64_t e) const;
  // a^(2^k).
  FieldElem Frobenius(FieldElem a, int k) const;
  // Throws Error(kNotAUnit) for zero.
  FieldElem Inverse(FieldElem a) const;

  // Absolute trace to F_2.
  int Trace(FieldElem a) const {
    return __builtin_parity(a.bits & data_->trace_mask);
  }
  // Bit i is Tr(x^i); Tr(a) = parity(a & mask).
  std::uint32_t trace_mask() const { return data_->trace_mask; }
  // Mask w such that Tr(b*y) = parity(y & w) for all y.
  std::uint32_t TraceFormMask(FieldElem b) const;

  // True iff a lies in the subfield GF(2^m). Throws Error(kInvalidSubfield)
  // when m does not divide n.
  bool InSubfield(FieldElem a, int m) const;
  // True iff d = u^e for some u in GF(2^n). d = 0 is always an e-th power.
  bool IsEthPower(FieldElem d, std::uint64_t e) const;
  // Throws Error(kNotAUnit) for zero.
  bool IsPrimitive(FieldElem a) const;
  // Multiplicative order of a nonzero element.
  std::uint64_t Order(FieldElem a) const;

  // Primitive elements in increasing bit order; index 0 is the least.
  FieldElem NthPrimitive(std::uint64_t index) const;
  FieldElem LeastPrimitive() const { return NthPrimitive(0); }

  bool SameField(const FieldCtx& other) const {
    return degree() == other.degree() && modulus() == other.modulus();
  }

 private:
  struct Data {
    int n = 0;
    std::uint32_t modulus = 0;
    std::vector<PrimePower> order_facts;
    std::uint32_t trace_mask = 0;
    // log/antilog tables for n <= kMaxTableDegree, empty otherwise.
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
  };

  explicit FieldCtx(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace crooked
