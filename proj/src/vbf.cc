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

#include "crooked/vbf.h"

#include <algorithm>
#include <bit>
#include <string>

#include "crooked/gf2_matrix.h"
#include "crooked/parallel.h"

namespace crooked {

void RequireExhaustive(const FieldCtx& ctx, const char* what) {
  if (ctx.degree() > kMaxExhaustiveDegree) {
    throw Error(ErrorCode::kInfeasibleSize,
                std::string(what) + " requires n <= " + std::to_string(kMaxExhaustiveDegree));
  }
}

std::uint64_t ReduceExponent(const FieldCtx& ctx, std::uint64_t e) {
  if (e == 0) throw Error(ErrorCode::kInvalidInput, "exponent must be positive");
  const std::uint64_t order = ctx.group_order();
  const std::uint64_t r = e % order;
  return r == 0 ? order : r;
}

std::uint64_t ExponentFromPowersOfTwo(const FieldCtx& ctx, std::span<const int> powers) {
  const int n = ctx.degree();
  const std::uint64_t order = ctx.group_order();
  std::uint64_t sum = 0;
  for (int k : powers) {
    const int reduced = ((k % n) + n) % n;
    sum = (sum + (std::uint64_t{1} << reduced)) % order;
  }
  return sum == 0 ? order : sum;
}

Multinomial Multinomial::FromTerms(const FieldCtx& ctx, std::vector<Term> terms) {
  std::map<std::uint64_t, FieldElem> merged;
  for (const Term& t : terms) {
    if (!ctx.Contains(t.coeff)) throw Error(ErrorCode::kInvalidInput, "coefficient outside field");
    merged[ReduceExponent(ctx, t.exp)] += t.coeff;
  }
  std::vector<Term> out;
  for (const auto& [exp, coeff] : merged) {
    if (!coeff.IsZero()) out.push_back({coeff, exp});
  }
  return Multinomial(ctx, std::move(out));
}

std::vector<std::uint64_t> Multinomial::Exponents() const {
  std::vector<std::uint64_t> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(t.exp);
  return out;
}

bool Multinomial::IsQuadratic() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return std::popcount(t.exp) == 2; });
}

FieldElem Multinomial::Evaluate(FieldElem x) const {
  if (x.IsZero()) return kZero;
  FieldElem acc = kZero;
  for (const Term& t : terms_) acc += ctx_.Mul(t.coeff, ctx_.Pow(x, t.exp));
  return acc;
}

TruthTable TruthTable::FromMultinomial(const Multinomial& m) {
  const FieldCtx& ctx = m.ctx();
  std::vector<FieldElem> values(ctx.size(), kZero);
  for (std::uint32_t x = 1; x < ctx.size(); ++x) values[x] = m.Evaluate(FieldElem(x));
  return TruthTable(ctx, std::move(values));
}

TruthTable TruthTable::FromValues(const FieldCtx& ctx, std::vector<FieldElem> values) {
  if (values.size() != ctx.size()) {
    throw Error(ErrorCode::kInvalidInput, "truth table length must be 2^n");
  }
  for (FieldElem v : values) {
    if (!ctx.Contains(v)) throw Error(ErrorCode::kInvalidInput, "truth table entry outside field");
  }
  return TruthTable(ctx, std::move(values));
}

std::vector<FieldElem> DerivativeSet(const TruthTable& f, FieldElem a) {
  if (a.IsZero()) throw Error(ErrorCode::kInvalidDirection, "derivative direction must be nonzero");
  const std::uint32_t size = f.size();
  std::vector<bool> seen(size, false);
  for (std::uint32_t x = 0; x < size; ++x) seen[(f.at(x) + f.at(x ^ a.bits)).bits] = true;
  std::vector<FieldElem> out;
  for (std::uint32_t y = 0; y < size; ++y) {
    if (seen[y]) out.emplace_back(y);
  }
  return out;
}

DifferentialSpectrum ComputeDifferentialSpectrum(const TruthTable& f, int threads) {
  const FieldCtx& ctx = f.ctx();
  RequireExhaustive(ctx, "differential spectrum");
  const std::uint32_t size = f.size();
  const std::size_t chunks = ChunkCount(size - 1, threads);
  std::vector<DifferentialSpectrum> partial(chunks);

  ParallelFor(size - 1, threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    std::vector<std::uint32_t> counts(size);
    DifferentialSpectrum& out = partial[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const std::uint32_t a = static_cast<std::uint32_t>(i + 1);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::uint32_t x = 0; x < size; ++x) ++counts[(f.at(x) + f.at(x ^ a)).bits];
      for (std::uint32_t c : counts) {
        ++out.spectrum[c];
        out.delta = std::max<std::uint64_t>(out.delta, c);
      }
    }
  });

  DifferentialSpectrum total;
  for (const auto& p : partial) {
    total.delta = std::max(total.delta, p.delta);
    for (const auto& [count, mult] : p.spectrum) total.spectrum[count] += mult;
  }
  return total;
}

bool IsApn(const TruthTable& f, int threads) {
  return ComputeDifferentialSpectrum(f, threads).delta == 2;
}

bool IsApnByDerivativeKernel(const TruthTable& f) {
  RequireExhaustive(f.ctx(), "APN kernel test");
  const std::uint32_t size = f.size();
  const FieldElem f0 = f.at(0);
  for (std::uint32_t a = 1; a < size; ++a) {
    const FieldElem shift = f.at(a) + f0;
    std::uint32_t kernel = 0;
    for (std::uint32_t x = 0; x < size && kernel <= 2; ++x) {
      if ((f.at(x) + f.at(x ^ a) + shift).IsZero()) ++kernel;
    }
    if (kernel != 2) return false;
  }
  return true;
}

namespace {

// `s` must be sorted and duplicate-free.
std::optional<HyperplaneWitness> HyperplaneOfDistinct(const FieldCtx& ctx,
                                                      std::span<const FieldElem> s) {
  const int n = ctx.degree();
  if (s.size() != (std::size_t{1} << (n - 1))) return std::nullopt;
  const FieldElem origin = s.front();
  std::vector<std::uint64_t> shifted;
  shifted.reserve(s.size());
  for (FieldElem y : s) shifted.push_back((y + origin).bits);
  // A set of 2^(n-1) distinct vectors inside a span of dimension n-1 is that
  // span.
  const std::vector<std::uint64_t> basis = SpanBasis(shifted);
  if (static_cast<int>(basis.size()) != n - 1) return std::nullopt;

  // Tr(b v) = parity(b & TraceFormMask(v)); solve for the annihilator b.
  Gf2Matrix system(basis.size(), static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const std::uint32_t w = ctx.TraceFormMask(FieldElem(static_cast<std::uint32_t>(basis[r])));
    for (int c = 0; c < n; ++c) {
      if ((w >> c) & 1u) system.Set(r, static_cast<std::size_t>(c));
    }
  }
  const auto kernel = system.NullSpace();
  if (kernel.size() != 1) return std::nullopt;
  const FieldElem b(static_cast<std::uint32_t>(kernel[0][0]));
  return HyperplaneWitness{b, ctx.Trace(ctx.Mul(b, origin))};
}

}  // namespace

std::optional<HyperplaneWitness> HyperplaneOf(const FieldCtx& ctx, std::span<const FieldElem> s) {
  std::vector<FieldElem> distinct(s.begin(), s.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.empty()) return std::nullopt;
  for (FieldElem y : distinct) {
    if (!ctx.Contains(y)) return std::nullopt;
  }
  return HyperplaneOfDistinct(ctx, distinct);
}

CrookedResult CheckCrooked(const TruthTable& f, int threads) {
  const FieldCtx& ctx = f.ctx();
  RequireExhaustive(ctx, "crooked check");
  const std::uint32_t size = f.size();
  const std::size_t chunks = ChunkCount(size - 1, threads);
  std::vector<CrookedResult> partial(chunks);

  ParallelFor(size - 1, threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    CrookedResult& out = partial[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const FieldElem a(static_cast<std::uint32_t>(i + 1));
      const std::vector<FieldElem> image = DerivativeSet(f, a);
      // For the image to have 2^(n-1) points every fibre has size 2, so this
      // also enforces APN.
      auto witness = HyperplaneOfDistinct(ctx, image);
      if (!witness) {
        out.first_failure = a;
        return;
      }
      out.witnesses.emplace_back(a, *witness);
    }
  });

  CrookedResult total;
  for (auto& p : partial) {
    if (p.first_failure) {
      total.first_failure = p.first_failure;
      total.witnesses.clear();
      return total;
    }
    total.witnesses.insert(total.witnesses.end(), p.witnesses.begin(), p.witnesses.end());
  }
  total.crooked = true;
  return total;
}

}  // namespace crooked
