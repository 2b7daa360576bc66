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

#include "crooked/spectral.h"

#include <bit>
#include <cstdlib>

#include "crooked/parallel.h"

namespace crooked {

void FastWalshHadamard(std::vector<std::int64_t>& data) {
  const std::size_t size = data.size();
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t u = data[i];
        const std::int64_t v = data[i + half];
        data[i] = u + v;
        data[i + half] = u - v;
      }
    }
  }
}

namespace {

// W(omega, a) = sum_x (-1)^(Tr(a f(x)) + Tr(omega x)). The butterfly works
// over index bits, i.e. with (-1)^popcount(omega & x); the trace form of the
// polynomial basis is not the dot product, so the result is re-indexed:
// Tr(omega x) = parity(x & TraceFormMask(omega)).
std::vector<std::int64_t> ComponentValues(const TruthTable& f, FieldElem a,
                                          const std::vector<std::uint32_t>& form_masks) {
  const FieldCtx& ctx = f.ctx();
  const std::uint32_t size = f.size();
  const std::uint32_t mask = ctx.TraceFormMask(a);
  std::vector<std::int64_t> buf(size);
  for (std::uint32_t x = 0; x < size; ++x) buf[x] = std::popcount(f.at(x).bits & mask) & 1 ? -1 : 1;
  FastWalshHadamard(buf);
  std::vector<std::int64_t> values(size);
  for (std::uint32_t omega = 0; omega < size; ++omega) values[omega] = buf[form_masks[omega]];
  return values;
}

std::vector<std::uint32_t> FormMasks(const FieldCtx& ctx) {
  // TraceFormMask is F_2-linear in its argument.
  std::vector<std::uint32_t> basis(static_cast<std::size_t>(ctx.degree()));
  for (int i = 0; i < ctx.degree(); ++i) basis[i] = ctx.TraceFormMask(FieldElem(std::uint32_t{1} << i));
  std::vector<std::uint32_t> masks(ctx.size(), 0);
  for (std::uint32_t v = 1; v < ctx.size(); ++v) {
    const int low = std::countr_zero(v);
    masks[v] = masks[v & (v - 1)] ^ basis[low];
  }
  return masks;
}

std::int64_t Power2(int k) { return std::int64_t{1} << k; }

}  // namespace

WalshComponent ComputeWalshComponent(const TruthTable& f, FieldElem a) {
  if (a.IsZero()) throw Error(ErrorCode::kInvalidDirection, "component index must be nonzero");
  RequireExhaustive(f.ctx(), "Walsh transform");
  return {a, ComponentValues(f, a, FormMasks(f.ctx()))};
}

SpectrumSummary ComputeWalshSpectrum(const TruthTable& f, int threads) {
  const FieldCtx& ctx = f.ctx();
  RequireExhaustive(ctx, "Walsh spectrum");
  const int n = ctx.degree();
  const std::uint32_t size = f.size();
  const std::vector<std::uint32_t> masks = FormMasks(ctx);
  const std::int64_t parseval = Power2(2 * n);

  std::vector<SpectrumSummary> partial(ChunkCount(size - 1, threads));
  ParallelFor(size - 1, threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    SpectrumSummary& out = partial[chunk];
    for (std::size_t i = begin; i < end; ++i) {
      const auto values = ComponentValues(f, FieldElem(static_cast<std::uint32_t>(i + 1)), masks);
      std::int64_t energy = 0;
      for (std::int64_t w : values) {
        ++out.gamma[w];
        energy += w * w;
      }
      if (energy != parseval) out.parseval_ok = false;
    }
  });

  SpectrumSummary total;
  for (const auto& p : partial) {
    for (const auto& [w, mult] : p.gamma) total.gamma[w] += mult;
    total.parseval_ok = total.parseval_ok && p.parseval_ok;
  }
  std::int64_t max_abs = 0;
  for (const auto& [w, mult] : total.gamma) {
    total.extended[std::llabs(w)] += mult;
    max_abs = std::max<std::int64_t>(max_abs, std::llabs(w));
  }
  total.nl = Power2(n - 1) - max_abs / 2;
  return total;
}

bool IsAlmostBent(const SpectrumSummary& summary, int n) {
  if (n % 2 == 0) return false;
  const std::int64_t peak = Power2((n + 1) / 2);
  if (summary.gamma.size() != 3) return false;
  return summary.gamma.contains(0) && summary.gamma.contains(peak) && summary.gamma.contains(-peak);
}

bool IsAlmostBent(const TruthTable& f, int threads) {
  if (f.ctx().degree() % 2 == 0) return false;
  return IsAlmostBent(ComputeWalshSpectrum(f, threads), f.ctx().degree());
}

ComponentClasses ClassifyComponents(const TruthTable& f, int threads) {
  const FieldCtx& ctx = f.ctx();
  RequireExhaustive(ctx, "component classification");
  const int n = ctx.degree();
  const std::uint32_t size = f.size();
  const std::vector<std::uint32_t> masks = FormMasks(ctx);
  const bool even = n % 2 == 0;
  const std::int64_t bent_level = even ? Power2(n / 2) : -1;
  const std::int64_t semibent_level = even ? Power2((n + 2) / 2) : Power2((n + 1) / 2);

  std::vector<ComponentClasses> partial(ChunkCount(size - 1, threads));
  ParallelFor(size - 1, threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
    for (std::size_t i = begin; i < end; ++i) {
      const auto values = ComponentValues(f, FieldElem(static_cast<std::uint32_t>(i + 1)), masks);
      bool bent = even;
      bool semibent = true;
      for (std::int64_t w : values) {
        const std::int64_t m = std::llabs(w);
        if (m != bent_level) bent = false;
        if (m != 0 && m != semibent_level) semibent = false;
      }
      if (bent) {
        ++partial[chunk].bent;
      } else if (semibent) {
        ++partial[chunk].semibent;
      } else {
        ++partial[chunk].other;
      }
    }
  });
  ComponentClasses total;
  for (const auto& p : partial) {
    total.bent += p.bent;
    total.semibent += p.semibent;
    total.other += p.other;
  }
  return total;
}

}  // namespace crooked
