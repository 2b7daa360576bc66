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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "test_support.h"

namespace crooked {
namespace {

using testing::NaiveDifferentialSpectrum;
using testing::PowerTable;
using testing::RandomQuadratic;
using testing::RandomTable;

TEST(VbfTest, ExponentHelpers) {
  const FieldCtx ctx = FieldCtx::Create(12);
  EXPECT_EQ(ReduceExponent(ctx, 4095), 4095u);
  EXPECT_EQ(ReduceExponent(ctx, 4096), 1u);
  EXPECT_EQ(ReduceExponent(ctx, 8190), 4095u);
  const int p1[] = {8, 1};
  const int p2[] = {14, 7};
  const int p3[] = {20, 13};
  EXPECT_EQ(ExponentFromPowersOfTwo(ctx, p1), 258u);
  EXPECT_EQ(ExponentFromPowersOfTwo(ctx, p2), 132u);
  EXPECT_EQ(ExponentFromPowersOfTwo(ctx, p3), 258u);
}

TEST(VbfTest, MultinomialMergesAndSorts) {
  const FieldCtx ctx = FieldCtx::Create(4);
  const Multinomial m = Multinomial::FromTerms(ctx, {{FieldElem(3), 5}, {FieldElem(1), 3}, {FieldElem(3), 20}});
  ASSERT_EQ(m.terms().size(), 1u);
  EXPECT_EQ(m.terms()[0], (Term{FieldElem(1), 3}));
  EXPECT_TRUE(m.IsQuadratic());
  EXPECT_TRUE(Multinomial::FromTerms(ctx, {{FieldElem(2), 6}, {FieldElem(2), 6}}).terms().empty());
  EXPECT_FALSE(Multinomial::FromTerms(ctx, {{kOne, 7}}).IsQuadratic());
  EXPECT_THROW(Multinomial::FromTerms(ctx, {{kOne, 0}}), Error);
  EXPECT_THROW(Multinomial::FromTerms(ctx, {{FieldElem(16), 3}}), Error);
}

TEST(VbfTest, EvaluationMatchesPowers) {
  const FieldCtx ctx = FieldCtx::Create(6);
  const Multinomial m = Multinomial::FromTerms(ctx, {{FieldElem(5), 3}, {FieldElem(9), 10}});
  const TruthTable t = TruthTable::FromMultinomial(m);
  for (std::uint32_t x = 0; x < ctx.size(); ++x) {
    const FieldElem fx(x);
    const FieldElem want = ctx.Mul(FieldElem(5), ctx.Pow(fx, 3)) + ctx.Mul(FieldElem(9), ctx.Pow(fx, 10));
    ASSERT_EQ(t[fx], want);
    ASSERT_EQ(m.Evaluate(fx), want);
  }
}

TEST(VbfTest, TruthTableExamples) {
  const FieldCtx f4 = FieldCtx::Create(2);
  const TruthTable cube = PowerTable(f4, 3);
  EXPECT_EQ(cube.values(), (std::vector<FieldElem>{kZero, kOne, kOne, kOne}));
  EXPECT_THROW(TruthTable::FromValues(f4, {kZero, kOne}), Error);
  EXPECT_THROW(TruthTable::FromValues(f4, {kZero, kOne, kOne, FieldElem(4)}), Error);
}

TEST(VbfTest, DerivativeSets) {
  const FieldCtx ctx = FieldCtx::Create(3);
  const TruthTable id = PowerTable(ctx, 1);
  EXPECT_EQ(DerivativeSet(id, FieldElem(5)), std::vector<FieldElem>{FieldElem(5)});
  EXPECT_EQ(DerivativeSet(PowerTable(ctx, 3), kOne).size(), 4u);
  const TruthTable zero = TruthTable::FromValues(ctx, std::vector<FieldElem>(8, kZero));
  EXPECT_EQ(DerivativeSet(zero, kOne), std::vector<FieldElem>{kZero});
  EXPECT_THROW(DerivativeSet(id, kZero), Error);
}

TEST(VbfTest, DifferentialExamples) {
  const FieldCtx f16 = FieldCtx::Create(4);
  EXPECT_EQ(ComputeDifferentialSpectrum(PowerTable(f16, 1)).delta, 16u);
  EXPECT_EQ(ComputeDifferentialSpectrum(PowerTable(f16, 3)).delta, 2u);
  EXPECT_EQ(ComputeDifferentialSpectrum(PowerTable(f16, 5)).delta, 4u);
  EXPECT_TRUE(IsApn(PowerTable(f16, 3)));
  EXPECT_FALSE(IsApn(PowerTable(f16, 5)));
  EXPECT_FALSE(IsApn(PowerTable(f16, 1)));
  const DifferentialSpectrum s = ComputeDifferentialSpectrum(PowerTable(f16, 7));
  std::uint64_t total = 0;
  for (const auto& [count, mult] : s.spectrum) {
    EXPECT_EQ(count % 2, 0);
    total += mult;
  }
  EXPECT_EQ(total, 15u * 16u);
}

TEST(VbfTest, DifferentialSpectrumMatchesNaiveCounting) {
  std::mt19937_64 rng(99);
  for (int n = 1; n <= 8; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    std::vector<TruthTable> funcs = {RandomTable(ctx, rng), PowerTable(ctx, 3), PowerTable(ctx, std::max<std::uint64_t>(1, ctx.size() - 2))};
    if (n <= 6) funcs.push_back(RandomTable(ctx, rng));
    for (const auto& f : funcs) {
      std::uint64_t delta = 0;
      const Multiset want = NaiveDifferentialSpectrum(f, &delta);
      const DifferentialSpectrum got = ComputeDifferentialSpectrum(f);
      ASSERT_EQ(got.spectrum, want) << "n=" << n;
      ASSERT_EQ(got.delta, delta);
    }
  }
}

TEST(VbfTest, ThreadCountDoesNotChangeResults) {
  std::mt19937_64 rng(1);
  const FieldCtx ctx = FieldCtx::Create(8);
  const TruthTable f = RandomTable(ctx, rng);
  const TruthTable g = TruthTable::FromMultinomial(RandomQuadratic(ctx, rng, 3));
  for (int threads : {2, 3, 7}) {
    EXPECT_EQ(ComputeDifferentialSpectrum(f, 1), ComputeDifferentialSpectrum(f, threads));
    const CrookedResult a = CheckCrooked(g, 1);
    const CrookedResult b = CheckCrooked(g, threads);
    EXPECT_EQ(a.crooked, b.crooked);
    EXPECT_EQ(a.witnesses, b.witnesses);
    EXPECT_EQ(a.first_failure, b.first_failure);
  }
}

TEST(VbfTest, KernelShortcutAgreesWithCounting) {
  std::mt19937_64 rng(7);
  int apn = 0;
  for (int n = 2; n <= 8; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (int trial = 0; trial < 40; ++trial) {
      const TruthTable f = TruthTable::FromMultinomial(RandomQuadratic(ctx, rng, 1 + trial % 3));
      const bool want = IsApn(f);
      apn += want;
      ASSERT_EQ(IsApnByDerivativeKernel(f), want) << "n=" << n << " trial=" << trial;
    }
  }
  EXPECT_GT(apn, 0);
}

TEST(VbfTest, HyperplaneExamples) {
  const FieldCtx f4 = FieldCtx::Create(2);
  const FieldElem pair[] = {kZero, kOne};
  const auto w = HyperplaneOf(f4, pair);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->b, kOne);
  EXPECT_EQ(w->eps, 0);
  for (FieldElem x : pair) EXPECT_EQ(f4.Trace(f4.Mul(w->b, x)), w->eps);

  const FieldCtx f8 = FieldCtx::Create(3);
  const FieldElem single[] = {kZero};
  EXPECT_FALSE(HyperplaneOf(f8, single).has_value());
  const FieldElem not_flat[] = {kZero, FieldElem(1), FieldElem(2), FieldElem(4)};
  EXPECT_FALSE(HyperplaneOf(f8, not_flat).has_value());
}

// Hyperplane test by brute force: S equals {x : Tr(bx) = eps} for some b, eps.
bool NaiveIsHyperplane(const FieldCtx& ctx, const std::vector<FieldElem>& s) {
  const std::set<std::uint32_t> members = [&] {
    std::set<std::uint32_t> out;
    for (FieldElem x : s) out.insert(x.bits);
    return out;
  }();
  for (std::uint32_t b = 1; b < ctx.size(); ++b) {
    for (int eps = 0; eps < 2; ++eps) {
      bool same = true;
      for (std::uint32_t x = 0; x < ctx.size() && same; ++x) {
        same = (ctx.Trace(ctx.Mul(FieldElem(b), FieldElem(x))) == eps) == members.contains(x);
      }
      if (same) return true;
    }
  }
  return false;
}

TEST(VbfTest, HyperplaneMatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int n = 2; n <= 6; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<FieldElem> s;
      if (trial % 2 == 0) {
        // A genuine hyperplane or its complement.
        const FieldElem b(1 + rng() % (ctx.size() - 1));
        const int eps = static_cast<int>(rng() % 2);
        for (std::uint32_t x = 0; x < ctx.size(); ++x) {
          if (ctx.Trace(ctx.Mul(b, FieldElem(x))) == eps) s.emplace_back(x);
        }
      } else {
        std::set<std::uint32_t> pick;
        while (pick.size() < ctx.size() / 2) pick.insert(rng() % ctx.size());
        for (std::uint32_t x : pick) s.emplace_back(x);
      }
      const auto w = HyperplaneOf(ctx, s);
      ASSERT_EQ(w.has_value(), NaiveIsHyperplane(ctx, s)) << "n=" << n << " trial=" << trial;
      if (w) {
        for (FieldElem x : s) ASSERT_EQ(ctx.Trace(ctx.Mul(w->b, x)), w->eps);
      }
    }
  }
}

TEST(VbfTest, CrookedExamples) {
  const FieldCtx f8 = FieldCtx::Create(3);
  const CrookedResult cube = CheckCrooked(PowerTable(f8, 3));
  EXPECT_TRUE(cube.crooked);
  EXPECT_EQ(cube.witnesses.size(), 7u);
  EXPECT_FALSE(cube.first_failure.has_value());

  const FieldCtx f16 = FieldCtx::Create(4);
  const CrookedResult inv = CheckCrooked(PowerTable(f16, 14));
  EXPECT_FALSE(inv.crooked);
  ASSERT_TRUE(inv.first_failure.has_value());
  EXPECT_EQ(*inv.first_failure, kOne);
}

TEST(VbfTest, QuadraticCrookedIffApn) {
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 8; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (int trial = 0; trial < 25; ++trial) {
      const TruthTable f = TruthTable::FromMultinomial(RandomQuadratic(ctx, rng, 1 + trial % 3));
      ASSERT_EQ(CheckCrooked(f).crooked, IsApn(f)) << "n=" << n << " trial=" << trial;
    }
  }
}

TEST(VbfTest, CrookedWitnessesDescribeDerivativeSets) {
  const FieldCtx ctx = FieldCtx::Create(5);
  const TruthTable f = PowerTable(ctx, 5);
  const CrookedResult r = CheckCrooked(f);
  ASSERT_TRUE(r.crooked);
  for (const auto& [a, w] : r.witnesses) {
    const auto set = DerivativeSet(f, a);
    EXPECT_EQ(set.size(), ctx.size() / 2);
    for (FieldElem y : set) ASSERT_EQ(ctx.Trace(ctx.Mul(w.b, y)), w.eps);
  }
}

TEST(VbfTest, ExhaustiveCutoff) {
  const FieldCtx ctx = FieldCtx::Create(17);
  const TruthTable f = PowerTable(ctx, 3);
  try {
    ComputeDifferentialSpectrum(f);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleSize);
  }
}

}  // namespace
}  // namespace crooked
