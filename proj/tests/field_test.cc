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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "test_support.h"

namespace crooked {
namespace {

using testing::NaiveIrreducibleGf2;
using testing::NaiveMul;
using testing::NaivePow;
using testing::NaiveTrace;

TEST(FieldTest, CreateDefaultsToSmallestIrreducible) {
  for (int n = 1; n <= 16; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    std::uint64_t want = std::uint64_t{1} << n;
    while (!NaiveIrreducibleGf2(want)) ++want;
    EXPECT_EQ(ctx.modulus(), want) << "n=" << n;
  }
  EXPECT_EQ(FieldCtx::Create(2).modulus(), 0b111u);
  EXPECT_EQ(FieldCtx::Create(12).modulus(), 0x1009u);
}

TEST(FieldTest, CreateRejectsBadInput) {
  EXPECT_NO_THROW(FieldCtx::Create(3, 0b1011));
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidInput;
  };
  EXPECT_EQ(code_of([] { FieldCtx::Create(4, 0b10001); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { FieldCtx::Create(4, 0b1011); }), ErrorCode::kInvalidModulus);
  EXPECT_EQ(code_of([] { FieldCtx::Create(0); }), ErrorCode::kUnsupportedDegree);
  EXPECT_EQ(code_of([] { FieldCtx::Create(25); }), ErrorCode::kUnsupportedDegree);
}

TEST(FieldTest, IrreducibilityMatchesTrialDivision) {
  for (std::uint64_t p = 2; p < (1u << 13); ++p) {
    EXPECT_EQ(IsIrreducibleGf2(p), NaiveIrreducibleGf2(p)) << p;
  }
}

TEST(FieldTest, OrderFactorizationMultipliesBack) {
  for (int n = 1; n <= 24; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    std::uint64_t prod = 1;
    for (const auto& pp : ctx.order_facts()) {
      for (int i = 0; i < pp.multiplicity; ++i) prod *= pp.prime;
    }
    EXPECT_EQ(prod, (std::uint64_t{1} << n) - 1) << "n=" << n;
  }
}

TEST(FieldTest, SmallExamples) {
  const FieldCtx f4 = FieldCtx::Create(2);
  const FieldElem w(0b10);
  EXPECT_EQ(f4.Mul(w, w), FieldElem(0b11));
  EXPECT_EQ(f4.Pow(w, 3), kOne);
  EXPECT_EQ(f4.Trace(kOne), 0);
  EXPECT_EQ(f4.Trace(w), 1);
  EXPECT_FALSE(f4.InSubfield(w, 1));
  EXPECT_TRUE(f4.IsPrimitive(w));
  EXPECT_FALSE(f4.IsEthPower(w, 3));

  const FieldCtx f8 = FieldCtx::Create(3);
  EXPECT_EQ(f8.Pow(FieldElem(0b10), 3), FieldElem(0b11));
  EXPECT_THROW(f8.Pow(kZero, 0), Error);
  EXPECT_EQ(f8.Pow(kZero, 5), kZero);
  EXPECT_THROW(f8.Inverse(kZero), Error);
  EXPECT_THROW(f8.IsPrimitive(kZero), Error);
  EXPECT_FALSE(FieldCtx::Create(6).IsEthPower(FieldCtx::Create(6).LeastPrimitive(), 3));
}

TEST(FieldTest, MultiplicationMatchesSchoolbook) {
  for (int n = 1; n <= 8; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (std::uint32_t a = 0; a < ctx.size(); ++a) {
      for (std::uint32_t b = 0; b < ctx.size(); ++b) {
        const std::uint32_t want = NaiveMul(a, b, n, ctx.modulus());
        ASSERT_EQ(ctx.Mul(FieldElem(a), FieldElem(b)).bits, want);
        ASSERT_EQ(ctx.MulSlow(FieldElem(a), FieldElem(b)).bits, want);
      }
    }
  }
}

TEST(FieldTest, RingLawsOnLargeFields) {
  std::mt19937_64 rng(11);
  for (int n : {12, 16, 17, 20, 24}) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (int i = 0; i < 2000; ++i) {
      const FieldElem a(rng() % ctx.size()), b(rng() % ctx.size()), c(rng() % ctx.size());
      ASSERT_EQ(ctx.Mul(a, b).bits, NaiveMul(a.bits, b.bits, n, ctx.modulus()));
      ASSERT_EQ(ctx.Mul(a, b + c), ctx.Mul(a, b) + ctx.Mul(a, c));
      ASSERT_EQ(ctx.Mul(ctx.Mul(a, b), c), ctx.Mul(a, ctx.Mul(b, c)));
      if (!a.IsZero()) {
        ASSERT_EQ(ctx.Mul(a, ctx.Inverse(a)), kOne);
      }
      ASSERT_EQ(ctx.Frobenius(a, n), a);
    }
  }
}

TEST(FieldTest, InverseLawExhaustive) {
  for (int n = 1; n <= 12; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (std::uint32_t a = 1; a < ctx.size(); ++a) {
      ASSERT_EQ(ctx.Mul(FieldElem(a), ctx.Inverse(FieldElem(a))), kOne);
    }
  }
}

TEST(FieldTest, PowMatchesRepeatedMultiplication) {
  const FieldCtx ctx = FieldCtx::Create(6);
  for (std::uint32_t a = 0; a < ctx.size(); ++a) {
    for (std::uint64_t e = 1; e < 70; ++e) {
      ASSERT_EQ(ctx.Pow(FieldElem(a), e).bits, NaivePow(a, e, 6, ctx.modulus()));
    }
  }
}

TEST(FieldTest, FrobeniusIsAdditive) {
  for (int n = 1; n <= 8; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (int k = 0; k < n; ++k) {
      for (std::uint32_t a = 0; a < ctx.size(); ++a) {
        for (std::uint32_t b = 0; b < ctx.size(); b += 3) {
          ASSERT_EQ(ctx.Frobenius(FieldElem(a ^ b), k),
                    ctx.Frobenius(FieldElem(a), k) + ctx.Frobenius(FieldElem(b), k));
        }
      }
    }
  }
}

TEST(FieldTest, TraceMatchesFrobeniusSumAndIsBalanced) {
  for (int n = 1; n <= 12; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    std::uint64_t ones = 0;
    for (std::uint32_t a = 0; a < ctx.size(); ++a) {
      const int t = ctx.Trace(FieldElem(a));
      ASSERT_EQ(t, NaiveTrace(a, n, ctx.modulus()));
      ones += t;
    }
    EXPECT_EQ(ones, ctx.size() / 2);
    EXPECT_EQ(ctx.Trace(kZero), 0);
  }
}

TEST(FieldTest, TraceFormMaskRepresentsTraceOfProduct) {
  const FieldCtx ctx = FieldCtx::Create(7);
  for (std::uint32_t b = 0; b < ctx.size(); ++b) {
    const std::uint32_t mask = ctx.TraceFormMask(FieldElem(b));
    for (std::uint32_t y = 0; y < ctx.size(); ++y) {
      ASSERT_EQ(__builtin_parity(y & mask), ctx.Trace(ctx.Mul(FieldElem(b), FieldElem(y))));
    }
  }
}

TEST(FieldTest, SubfieldSizes) {
  for (int n = 1; n <= 12; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) {
        EXPECT_THROW(ctx.InSubfield(kOne, m), Error);
        continue;
      }
      std::uint64_t count = 0;
      for (std::uint32_t a = 0; a < ctx.size(); ++a) count += ctx.InSubfield(FieldElem(a), m);
      EXPECT_EQ(count, std::uint64_t{1} << m) << "n=" << n << " m=" << m;
    }
  }
  const FieldCtx f16 = FieldCtx::Create(4);
  EXPECT_TRUE(f16.InSubfield(f16.Pow(f16.LeastPrimitive(), 5), 2));
}

TEST(FieldTest, EthPowerMatchesImageEnumeration) {
  for (int n : {4, 6, 8, 10}) {
    const FieldCtx ctx = FieldCtx::Create(n);
    for (std::uint64_t e : {2u, 3u, 5u, 7u, 9u, 15u, 21u, 65u}) {
      std::set<std::uint32_t> image;
      for (std::uint32_t y = 1; y < ctx.size(); ++y) image.insert(ctx.Pow(FieldElem(y), e).bits);
      for (std::uint32_t d = 1; d < ctx.size(); ++d) {
        ASSERT_EQ(ctx.IsEthPower(FieldElem(d), e), image.contains(d)) << n << " " << e << " " << d;
      }
    }
  }
}

TEST(FieldTest, PrimitiveCountIsTotient) {
  for (int n = 2; n <= 12; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    const std::uint64_t order = ctx.size() - 1;
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= order; ++k) phi += std::gcd(k, order) == 1;
    std::uint64_t count = 0;
    for (std::uint32_t a = 1; a < ctx.size(); ++a) {
      // Primitive iff no smaller positive power hits 1.
      std::uint64_t ord = 1;
      std::uint32_t x = a;
      while (x != 1) {
        x = NaiveMul(x, a, n, ctx.modulus());
        ++ord;
      }
      const bool primitive = ord == order;
      ASSERT_EQ(ctx.IsPrimitive(FieldElem(a)), primitive);
      ASSERT_EQ(ctx.Order(FieldElem(a)), ord);
      count += primitive;
    }
    EXPECT_EQ(count, phi);
    EXPECT_FALSE(ctx.IsPrimitive(kOne));
  }
  EXPECT_EQ(FieldCtx::Create(12).LeastPrimitive(), FieldElem(3));
}

TEST(FieldTest, NthPrimitiveIsIncreasing) {
  const FieldCtx ctx = FieldCtx::Create(8);
  FieldElem prev = ctx.NthPrimitive(0);
  for (std::uint64_t i = 1; i < 20; ++i) {
    const FieldElem next = ctx.NthPrimitive(i);
    EXPECT_TRUE(ctx.IsPrimitive(next));
    EXPECT_GT(next.bits, prev.bits);
    prev = next;
  }
}

}  // namespace
}  // namespace crooked
