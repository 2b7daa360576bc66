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

#include "crooked/polyops.h"

#include <algorithm>
#include <bit>
#include <string>

#include "crooked/gf2_matrix.h"

namespace crooked {

BigUint BigUint::PowerOfTwo(std::size_t k) {
  BigUint out;
  out.limbs_.assign(k / 64 + 1, 0);
  out.limbs_.back() = std::uint64_t{1} << (k % 64);
  return out;
}

std::size_t BigUint::BitLength() const {
  if (limbs_.empty()) return 0;
  return 64 * limbs_.size() - static_cast<std::size_t>(std::countl_zero(limbs_.back()));
}

void BigUint::Trim() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

Poly::Poly(FieldCtx ctx, std::vector<FieldElem> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
  Trim();
}

void Poly::Trim() {
  while (!coeffs_.empty() && coeffs_.back().IsZero()) coeffs_.pop_back();
}

Poly Poly::Monomial(const FieldCtx& ctx, FieldElem coeff, std::size_t degree) {
  std::vector<FieldElem> c(degree + 1, kZero);
  c[degree] = coeff;
  return Poly(ctx, std::move(c));
}

Poly Poly::FromBits(const FieldCtx& ctx, const std::vector<std::uint32_t>& coeffs) {
  std::vector<FieldElem> c;
  c.reserve(coeffs.size());
  for (std::uint32_t b : coeffs) {
    if (b >= ctx.size()) throw Error(ErrorCode::kInvalidInput, "coefficient outside field");
    c.emplace_back(b);
  }
  return Poly(ctx, std::move(c));
}

FieldElem Poly::Evaluate(FieldElem x) const {
  FieldElem acc = kZero;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = ctx_.Mul(acc, x) + *it;
  return acc;
}

Poly Poly::Scale(FieldElem s) const {
  std::vector<FieldElem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = ctx_.Mul(coeffs_[i], s);
  return Poly(ctx_, std::move(c));
}

Poly Poly::Monic() const {
  if (IsZero()) return *this;
  return Scale(ctx_.Inverse(Lead()));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<FieldElem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return Poly(a.ctx_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.IsZero() || b.IsZero()) return Poly(a.ctx_);
  std::vector<FieldElem> c(a.coeffs_.size() + b.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].IsZero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.ctx_.Mul(a.coeffs_[i], b.coeffs_[j]);
    }
  }
  return Poly(a.ctx_, std::move(c));
}

std::pair<Poly, Poly> Poly::DivMod(const Poly& divisor) const {
  if (divisor.IsZero()) throw Error(ErrorCode::kInvalidInput, "division by zero polynomial");
  if (degree() < divisor.degree()) return {Poly(ctx_), *this};
  std::vector<FieldElem> rem = coeffs_;
  std::vector<FieldElem> quot(coeffs_.size() - divisor.coeffs_.size() + 1, kZero);
  const FieldElem inv_lead = ctx_.Inverse(divisor.Lead());
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t top = rem.size(); top-- > dd;) {
    if (rem[top].IsZero()) continue;
    const FieldElem factor = ctx_.Mul(rem[top], inv_lead);
    quot[top - dd] = factor;
    for (std::size_t j = 0; j <= dd; ++j) {
      rem[top - dd + j] += ctx_.Mul(factor, divisor.coeffs_[j]);
    }
  }
  return {Poly(ctx_, std::move(quot)), Poly(ctx_, std::move(rem))};
}

Poly PolyGcd(const Poly& a, const Poly& b) {
  if (a.IsZero() && b.IsZero()) throw Error(ErrorCode::kUndefinedGcd, "gcd(0, 0) is undefined");
  Poly x = a;
  Poly y = b;
  while (!y.IsZero()) {
    Poly r = x.Mod(y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.Monic();
}

namespace {

void CheckModulus(const Poly& mod) {
  if (mod.degree() < 1) throw Error(ErrorCode::kInvalidModulus, "polynomial modulus must have degree >= 1");
}

// Squaring in characteristic 2 only squares coefficients and doubles degrees.
Poly SquareMod(const Poly& a, const Poly& mod) {
  const FieldCtx& ctx = a.ctx();
  if (a.IsZero()) return a;
  std::vector<FieldElem> c(2 * a.coeffs().size() - 1, kZero);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[2 * i] = ctx.Square(a.coeffs()[i]);
  return Poly(ctx, std::move(c)).Mod(mod);
}

}  // namespace

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& mod) {
  CheckModulus(mod);
  return (a * b).Mod(mod);
}

Poly PolyPowMod(const Poly& base, const BigUint& e, const Poly& mod) {
  CheckModulus(mod);
  Poly result = Poly::Constant(base.ctx(), kOne).Mod(mod);
  const Poly b = base.Mod(mod);
  for (std::size_t i = e.BitLength(); i-- > 0;) {
    result = SquareMod(result, mod);
    if (e.Bit(i)) result = PolyMulMod(result, b, mod);
  }
  return result;
}

Poly PolyPowMod(const Poly& base, std::uint64_t e, const Poly& mod) {
  return PolyPowMod(base, BigUint(e), mod);
}

Poly FrobeniusPowMod(const Poly& base, std::size_t k, const Poly& mod) {
  CheckModulus(mod);
  Poly r = base.Mod(mod);
  const std::size_t squarings = k * static_cast<std::size_t>(base.ctx().degree());
  for (std::size_t i = 0; i < squarings; ++i) r = SquareMod(r, mod);
  return r;
}

IrreducibilityResult IsIrreducibleOver(const FieldCtx& ctx, const Poly& p) {
  if (p.IsZero()) throw Error(ErrorCode::kInvalidInput, "zero polynomial");
  if (p.degree() == 0) return {false, true};
  if (p.degree() == 1) return {true, false};
  if (p.coeff(0).IsZero()) return {false, false};  // x divides p
  const std::size_t d = static_cast<std::size_t>(p.degree());
  const Poly x = Poly::X(ctx);

  // frob[k] = x^(Q^k) mod p.
  std::vector<Poly> frob;
  frob.reserve(d + 1);
  frob.push_back(x.Mod(p));
  for (std::size_t k = 1; k <= d; ++k) frob.push_back(FrobeniusPowMod(frob.back(), 1, p));
  if (!(frob[d] == x.Mod(p))) return {false, false};
  for (const auto& pp : Factorize(d)) {
    const Poly h = frob[d / pp.prime] + x;
    if (h.IsZero() || PolyGcd(h, p).degree() > 0) return {false, false};
  }
  return {true, false};
}

ExponentSet ExponentSet::Create(int n, std::vector<int> values) {
  if (values.empty()) throw Error(ErrorCode::kInvalidInput, "exponent set K is empty");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0 || values[i] >= n) {
      throw Error(ErrorCode::kInvalidInput,
                  "exponent " + std::to_string(values[i]) + " outside [0, n-1]");
    }
    if (i > 0 && values[i] <= values[i - 1]) {
      throw Error(ErrorCode::kInvalidInput, "exponent set K must be strictly increasing");
    }
  }
  return ExponentSet(std::move(values));
}

Poly KernelPolynomial(const FieldCtx& ctx, const ExponentSet& k_set) {
  Poly p(ctx);
  for (int k : k_set.values()) p = p + Poly::Monomial(ctx, kOne, (std::size_t{1} << k) - 1);
  return p;
}

FieldElem ApplyLinearized(const FieldCtx& ctx, const ExponentSet& k_set, FieldElem y) {
  FieldElem acc = kZero;
  for (int k : k_set.values()) acc += ctx.Frobenius(y, k);
  return acc;
}

bool LinearizedIsBijective(const FieldCtx& ctx, const ExponentSet& k_set) {
  const int n = ctx.degree();
  std::vector<std::uint64_t> columns;
  columns.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    columns.push_back(ApplyLinearized(ctx, k_set, FieldElem(std::uint32_t{1} << i)).bits);
  }
  return SpanRank(columns) == n;
}

}  // namespace crooked
