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

#include "crooked/field.h"

#include <bit>
#include <numeric>
#include <string>

namespace crooked {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kUndefinedPower: return "UndefinedPower";
    case ErrorCode::kInvalidSubfield: return "InvalidSubfield";
    case ErrorCode::kNotAUnit: return "NotAUnit";
    case ErrorCode::kUndefinedGcd: return "UndefinedGcd";
    case ErrorCode::kInvalidInput: return "InvalidInput";
    case ErrorCode::kInvalidDirection: return "InvalidDirection";
    case ErrorCode::kInfeasibleSize: return "InfeasibleSize";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kNotGold: return "NotGold";
    case ErrorCode::kMalformedFile: return "MalformedFile";
  }
  return "Unknown";
}

namespace {

int Degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t ModGf2(std::uint64_t a, std::uint64_t m) {
  const int dm = Degree(m);
  for (int da = Degree(a); da >= dm; da = Degree(a)) a ^= m << (da - dm);
  return a;
}

std::uint64_t GcdGf2(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a = ModGf2(a, b);
    std::swap(a, b);
  }
  return a;
}

// Operands have degree < deg(m) <= 31, so the product fits in 64 bits.
std::uint64_t MulModGf2(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return ModGf2(ClMul(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)), m);
}

}  // namespace

std::uint64_t ClMul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  std::uint64_t wide = a;
  while (b != 0) {
    if (b & 1u) r ^= wide;
    wide <<= 1;
    b >>= 1;
  }
  return r;
}

bool IsIrreducibleGf2(std::uint64_t poly) {
  const int d = Degree(poly);
  if (d < 1) return false;
  if (d == 1) return true;
  if (d > 31) throw Error(ErrorCode::kUnsupportedDegree, "binary polynomial degree above 31");
  // Rabin: x^(2^d) = x mod p and gcd(x^(2^(d/r)) - x, p) = 1 for primes r | d.
  std::vector<std::uint64_t> frob(d + 1);
  frob[0] = 0b10;
  for (int k = 1; k <= d; ++k) frob[k] = MulModGf2(frob[k - 1], frob[k - 1], poly);
  if (frob[d] != 0b10) return false;
  for (const auto& pp : Factorize(static_cast<std::uint64_t>(d))) {
    const std::uint64_t h = frob[d / pp.prime] ^ 0b10;
    if (Degree(GcdGf2(poly, h)) > 0) return false;
  }
  return true;
}

std::uint64_t SmallestIrreducibleGf2(int degree) {
  for (std::uint64_t p = std::uint64_t{1} << degree; p < (std::uint64_t{2} << degree); ++p) {
    if (IsIrreducibleGf2(p)) return p;
  }
  throw Error(ErrorCode::kUnsupportedDegree, "no irreducible polynomial found");
}

std::vector<PrimePower> Factorize(std::uint64_t value) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= value; ++p) {
    if (value % p != 0) continue;
    PrimePower pp{p, 0};
    while (value % p == 0) {
      value /= p;
      ++pp.multiplicity;
    }
    out.push_back(pp);
  }
  if (value > 1) out.push_back({value, 1});
  return out;
}

FieldCtx FieldCtx::Create(int n, std::optional<std::uint32_t> modulus) {
  if (n < 1 || n > kMaxDegree) {
    throw Error(ErrorCode::kUnsupportedDegree,
                "field degree " + std::to_string(n) + " outside [1, 24]");
  }
  auto data = std::make_shared<Data>();
  data->n = n;
  if (modulus.has_value()) {
    if (Degree(*modulus) != n) {
      throw Error(ErrorCode::kInvalidModulus, "modulus degree differs from n");
    }
    if (!IsIrreducibleGf2(*modulus)) {
      throw Error(ErrorCode::kInvalidModulus, "modulus is reducible over F_2");
    }
    data->modulus = *modulus;
  } else {
    data->modulus = static_cast<std::uint32_t>(SmallestIrreducibleGf2(n));
  }
  const std::uint32_t order = (std::uint32_t{1} << n) - 1;
  data->order_facts = Factorize(order);

  FieldCtx partial(data);
  std::uint32_t mask = 0;
  for (int i = 0; i < n; ++i) {
    FieldElem basis(std::uint32_t{1} << i);
    FieldElem acc = kZero;
    FieldElem frob = basis;
    for (int k = 0; k < n; ++k) {
      acc += frob;
      frob = partial.MulSlow(frob, frob);
    }
    if (acc.bits > 1) throw Error(ErrorCode::kInvalidModulus, "trace outside F_2");
    mask |= acc.bits << i;
  }
  data->trace_mask = mask;

  if (n <= kMaxTableDegree) {
    // The generator of the tables is the least primitive element.
    FieldElem gen = kOne;
    for (std::uint32_t v = (n == 1 ? 1 : 2); v <= order; ++v) {
      if (partial.IsPrimitive(FieldElem(v))) {
        gen = FieldElem(v);
        break;
      }
    }
    data->exp.resize(2 * static_cast<std::size_t>(order));
    data->log.assign(std::size_t{1} << n, 0);
    FieldElem cur = kOne;
    for (std::uint32_t k = 0; k < order; ++k) {
      data->exp[k] = cur.bits;
      data->exp[k + order] = cur.bits;
      data->log[cur.bits] = k;
      cur = partial.MulSlow(cur, gen);
    }
  }
  return FieldCtx(std::move(data));
}

FieldElem FieldCtx::MulSlow(FieldElem a, FieldElem b) const {
  return FieldElem(static_cast<std::uint32_t>(ModGf2(ClMul(a.bits, b.bits), data_->modulus)));
}

FieldElem FieldCtx::Mul(FieldElem a, FieldElem b) const {
  if (data_->exp.empty()) return MulSlow(a, b);
  if (a.IsZero() || b.IsZero()) return kZero;
  return FieldElem(data_->exp[data_->log[a.bits] + data_->log[b.bits]]);
}

FieldElem FieldCtx::Pow(FieldElem a, std::uint64_t e) const {
  if (a.IsZero()) {
    if (e == 0) throw Error(ErrorCode::kUndefinedPower, "0^0 is undefined");
    return kZero;
  }
  const std::uint64_t order = group_order();
  e %= order;
  if (!data_->exp.empty()) {
    return FieldElem(data_->exp[(data_->log[a.bits] * e) % order]);
  }
  FieldElem result = kOne;
  FieldElem base = a;
  while (e != 0) {
    if (e & 1u) result = MulSlow(result, base);
    base = MulSlow(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem FieldCtx::Frobenius(FieldElem a, int k) const {
  const int n = degree();
  k = ((k % n) + n) % n;
  for (int i = 0; i < k; ++i) a = Mul(a, a);
  return a;
}

FieldElem FieldCtx::Inverse(FieldElem a) const {
  if (a.IsZero()) throw Error(ErrorCode::kNotAUnit, "zero has no inverse");
  return Pow(a, group_order() - 1);
}

std::uint32_t FieldCtx::TraceFormMask(FieldElem b) const {
  std::uint32_t w = 0;
  for (int i = 0; i < degree(); ++i) {
    w |= static_cast<std::uint32_t>(Trace(Mul(b, FieldElem(std::uint32_t{1} << i)))) << i;
  }
  return w;
}

bool FieldCtx::InSubfield(FieldElem a, int m) const {
  if (m < 1 || degree() % m != 0) {
    throw Error(ErrorCode::kInvalidSubfield,
                std::to_string(m) + " does not divide " + std::to_string(degree()));
  }
  return Frobenius(a, m) == a;
}

bool FieldCtx::IsEthPower(FieldElem d, std::uint64_t e) const {
  if (d.IsZero()) return true;
  const std::uint64_t order = group_order();
  const std::uint64_t g = std::gcd(e, order);
  return Pow(d, order / g).IsOne();
}

bool FieldCtx::IsPrimitive(FieldElem a) const {
  if (a.IsZero()) throw Error(ErrorCode::kNotAUnit, "zero is not a unit");
  for (const auto& pp : order_facts()) {
    if (Pow(a, group_order() / pp.prime).IsOne()) return false;
  }
  return true;
}

std::uint64_t FieldCtx::Order(FieldElem a) const {
  if (a.IsZero()) throw Error(ErrorCode::kNotAUnit, "zero is not a unit");
  std::uint64_t ord = group_order();
  for (const auto& pp : order_facts()) {
    while (ord % pp.prime == 0 && Pow(a, ord / pp.prime).IsOne()) ord /= pp.prime;
  }
  return ord;
}

FieldElem FieldCtx::NthPrimitive(std::uint64_t index) const {
  for (std::uint32_t v = 1; v < size(); ++v) {
    if (IsPrimitive(FieldElem(v))) {
      if (index == 0) return FieldElem(v);
      --index;
    }
  }
  throw Error(ErrorCode::kInvalidInput, "primitive element index out of range");
}

}  // namespace crooked
