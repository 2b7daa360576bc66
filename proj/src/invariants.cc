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

#include "crooked/invariants.h"

#include <string>

#include "crooked/parallel.h"
#include "crooked/spectral.h"

namespace crooked {

namespace {

void RequireRankFeasible(const FieldCtx& ctx) {
  if (ctx.degree() > kMaxRankDegree) {
    throw Error(ErrorCode::kInfeasibleSize,
                "Gamma/Delta ranks require n <= " + std::to_string(kMaxRankDegree));
  }
}

// Every row is the point set translated by the row's (u, v).
Gf2Matrix TranslateMatrix(const FieldCtx& ctx, const std::vector<std::uint32_t>& points, int threads) {
  const int n = ctx.degree();
  const std::size_t side = std::size_t{1} << (2 * n);
  const std::uint32_t shift_mask = (std::uint32_t{1} << (2 * n)) - 1;
  Gf2Matrix matrix(side, side);
  ParallelFor(side, threads, [&](std::size_t begin, std::size_t end, std::size_t) {
    for (std::size_t row = begin; row < end; ++row) {
      const std::uint32_t uv = static_cast<std::uint32_t>(row) & shift_mask;
      for (std::uint32_t point : points) matrix.Set(row, point ^ uv);
    }
  });
  return matrix;
}

}  // namespace

Gf2Matrix GammaMatrix(const TruthTable& f, int threads) {
  const FieldCtx& ctx = f.ctx();
  RequireRankFeasible(ctx);
  const int n = ctx.degree();
  std::vector<std::uint32_t> graph;
  graph.reserve(f.size());
  for (std::uint32_t x = 0; x < f.size(); ++x) graph.push_back((x << n) | f.at(x).bits);
  return TranslateMatrix(ctx, graph, threads);
}

Gf2Matrix DeltaMatrix(const TruthTable& f, int threads) {
  const FieldCtx& ctx = f.ctx();
  RequireRankFeasible(ctx);
  const int n = ctx.degree();
  std::vector<std::uint32_t> diffs;
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    for (FieldElem b : DerivativeSet(f, FieldElem(a))) diffs.push_back((a << n) | b.bits);
  }
  return TranslateMatrix(ctx, diffs, threads);
}

std::uint64_t GammaRank(const TruthTable& f, int threads) { return GammaMatrix(f, threads).Rank(); }

std::uint64_t DeltaRank(const TruthTable& f, int threads) { return DeltaMatrix(f, threads).Rank(); }

const char* VerdictName(Verdict verdict) {
  return verdict == Verdict::kDistinguished ? "distinguished"
                                            : "indistinguishable-by-computed-invariants";
}

const char* DepthName(Depth depth) { return depth == Depth::kSpectra ? "spectra" : "ranks"; }

Depth ParseDepth(const std::string& name) {
  if (name == "spectra") return Depth::kSpectra;
  if (name == "ranks") return Depth::kRanks;
  throw Error(ErrorCode::kInvalidInput, "unknown depth '" + name + "'");
}

InvariantSet ComputeInvariants(const TruthTable& f, Depth depth, int threads) {
  if (depth == Depth::kRanks) RequireRankFeasible(f.ctx());
  InvariantSet out;
  out.diff_spectrum = ComputeDifferentialSpectrum(f, threads).spectrum;
  out.extended_walsh = ComputeWalshSpectrum(f, threads).extended;
  if (depth == Depth::kRanks) {
    out.gamma_rank = GammaRank(f, threads);
    out.delta_rank = DeltaRank(f, threads);
  }
  return out;
}

InvariantReport CompareInvariants(const InvariantSet& lhs, const InvariantSet& rhs, Depth depth) {
  InvariantReport report;
  report.depth = depth;
  report.lhs = lhs;
  report.rhs = rhs;
  if (lhs.diff_spectrum != rhs.diff_spectrum) report.differing.push_back("diff_spectrum");
  if (lhs.extended_walsh != rhs.extended_walsh) report.differing.push_back("extended_walsh");
  if (lhs.gamma_rank && rhs.gamma_rank && *lhs.gamma_rank != *rhs.gamma_rank) {
    report.differing.push_back("gamma_rank");
  }
  if (lhs.delta_rank && rhs.delta_rank && *lhs.delta_rank != *rhs.delta_rank) {
    report.differing.push_back("delta_rank");
  }
  report.verdict = report.differing.empty() ? Verdict::kIndistinguishable : Verdict::kDistinguished;
  return report;
}

InvariantReport Compare(const TruthTable& fa, const TruthTable& fb, Depth depth, int threads) {
  if (!fa.ctx().SameField(fb.ctx())) {
    throw Error(ErrorCode::kDegreeMismatch, "functions live on different fields");
  }
  return CompareInvariants(ComputeInvariants(fa, depth, threads), ComputeInvariants(fb, depth, threads),
                           depth);
}

}  // namespace crooked
