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

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace crooked {
namespace {

using testing::DirectWalsh;
using testing::PowerTable;
using testing::RandomEa;
using testing::RandomTable;

TEST(SpectralTest, FastTransformOfDelta) {
  std::vector<std::int64_t> v = {1, 0, 0, 0};
  FastWalshHadamard(v);
  EXPECT_EQ(v, (std::vector<std::int64_t>{1, 1, 1, 1}));
  std::vector<std::int64_t> w = {1, -1, 1, -1};
  FastWalshHadamard(w);
  EXPECT_EQ(w, (std::vector<std::int64_t>{0, 4, 0, 0}));
}

TEST(SpectralTest, ZeroFunction) {
  const FieldCtx ctx = FieldCtx::Create(4);
  const TruthTable zero = TruthTable::FromValues(ctx, std::vector<FieldElem>(16, kZero));
  const WalshComponent c = ComputeWalshComponent(zero, kOne);
  EXPECT_EQ(c.values[0], 16);
  for (std::uint32_t w = 1; w < 16; ++w) EXPECT_EQ(c.values[w], 0);
  EXPECT_THROW(ComputeWalshComponent(zero, kZero), Error);
}

TEST(SpectralTest, ComponentAtZeroCountsWeight) {
  std::mt19937_64 rng(2);
  const FieldCtx ctx = FieldCtx::Create(6);
  const TruthTable f = RandomTable(ctx, rng);
  for (std::uint32_t a = 1; a < ctx.size(); ++a) {
    std::int64_t ones = 0;
    for (std::uint32_t x = 0; x < ctx.size(); ++x) ones += ctx.Trace(ctx.Mul(FieldElem(a), f.at(x)));
    EXPECT_EQ(ComputeWalshComponent(f, FieldElem(a)).values[0], 64 - 2 * ones);
  }
}

TEST(SpectralTest, FastTransformMatchesDefinition) {
  std::mt19937_64 rng(6);
  for (int n = 1; n <= 6; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (const TruthTable& f : {RandomTable(ctx, rng), RandomTable(ctx, rng), PowerTable(ctx, 3)}) {
      for (std::uint32_t a = 1; a < ctx.size(); ++a) {
        const WalshComponent c = ComputeWalshComponent(f, FieldElem(a));
        std::int64_t energy = 0;
        for (std::uint32_t w = 0; w < ctx.size(); ++w) {
          ASSERT_EQ(c.values[w], DirectWalsh(f, w, a)) << "n=" << n << " a=" << a << " w=" << w;
          energy += c.values[w] * c.values[w];
        }
        ASSERT_EQ(energy, std::int64_t{1} << (2 * n));
      }
    }
  }
}

TEST(SpectralTest, ParsevalHoldsForRandomFunctions) {
  std::mt19937_64 rng(10);
  for (int n = 1; n <= 10; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    EXPECT_TRUE(ComputeWalshSpectrum(RandomTable(ctx, rng)).parseval_ok);
  }
}

TEST(SpectralTest, AlmostBentCube) {
  const FieldCtx f8 = FieldCtx::Create(3);
  const SpectrumSummary s = ComputeWalshSpectrum(PowerTable(f8, 3));
  EXPECT_EQ(s.extended, (Multiset{{0, 28}, {4, 28}}));
  EXPECT_EQ(s.nl, 2);
  EXPECT_TRUE(IsAlmostBent(PowerTable(f8, 3)));
  EXPECT_FALSE(IsAlmostBent(PowerTable(FieldCtx::Create(4), 3)));
  EXPECT_FALSE(IsAlmostBent(PowerTable(f8, 1)));
}

TEST(SpectralTest, AffineHasZeroNonlinearity) {
  const FieldCtx ctx = FieldCtx::Create(5);
  const SpectrumSummary s = ComputeWalshSpectrum(PowerTable(ctx, 2));
  EXPECT_EQ(s.nl, 0);
  EXPECT_EQ(s.extended, (Multiset{{0, 31 * 31}, {32, 31}}));
}

TEST(SpectralTest, ComponentClasses) {
  EXPECT_EQ(ClassifyComponents(PowerTable(FieldCtx::Create(4), 1)), (ComponentClasses{0, 0, 15}));
  // Components of x^3 over GF(2^4): a a cube gives a semibent component,
  // the other ten are bent.
  EXPECT_EQ(ClassifyComponents(PowerTable(FieldCtx::Create(4), 3)), (ComponentClasses{10, 5, 0}));
  EXPECT_EQ(ClassifyComponents(PowerTable(FieldCtx::Create(6), 3)), (ComponentClasses{42, 21, 0}));
  EXPECT_EQ(ClassifyComponents(PowerTable(FieldCtx::Create(5), 3)), (ComponentClasses{0, 31, 0}));
}

TEST(SpectralTest, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(5);
  const TruthTable f = RandomTable(FieldCtx::Create(9), rng);
  EXPECT_EQ(ComputeWalshSpectrum(f, 1), ComputeWalshSpectrum(f, 4));
  EXPECT_EQ(ClassifyComponents(f, 1), ClassifyComponents(f, 3));
}

TEST(SpectralTest, ExtendedSpectrumIsEaInvariant) {
  std::mt19937_64 rng(44);
  for (int n = 3; n <= 8; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (const TruthTable& f : {PowerTable(ctx, 3), RandomTable(ctx, rng)}) {
      const SpectrumSummary base = ComputeWalshSpectrum(f);
      for (int i = 0; i < 3; ++i) {
        const SpectrumSummary moved = ComputeWalshSpectrum(RandomEa(f, rng));
        EXPECT_EQ(moved.extended, base.extended) << "n=" << n;
        EXPECT_EQ(moved.nl, base.nl);
      }
    }
  }
}

}  // namespace
}  // namespace crooked
