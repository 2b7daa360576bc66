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

#include "crooked/function_file.h"

#include <gtest/gtest.h>

#include <random>

#include "test_support.h"

namespace crooked {
namespace {

ErrorCode ParseCode(const std::string& text) {
  try {
    ToTruthTable(ParseFunctionFile(text));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidInput;
}

nlohmann::json ValidJson() {
  const FieldCtx ctx = FieldCtx::Create(4);
  return ToJson(MakeFunctionFile(Multinomial::FromTerms(ctx, {{kOne, 3}})));
}

TEST(FunctionFileTest, Hex) {
  EXPECT_EQ(ToHex(0), "0");
  EXPECT_EQ(ToHex(0x1009), "1009");
  EXPECT_EQ(ToHex(0xabc), "abc");
  EXPECT_EQ(ParseHex("1f"), 0x1fu);
  EXPECT_THROW(ParseHex(""), Error);
  EXPECT_THROW(ParseHex("0x1f"), Error);
  EXPECT_THROW(ParseHex("g"), Error);
  EXPECT_THROW(ParseHex("123456789"), Error);
}

TEST(FunctionFileTest, SerializedFormIsCanonical) {
  const FieldCtx ctx = FieldCtx::Create(4);
  const FunctionFile f = MakeFunctionFile(Multinomial::FromTerms(ctx, {{FieldElem(0xa), 3}}), {{"z", 1}, {"a", 2}});
  const std::string text = Serialize(f);
  EXPECT_EQ(text,
            "{\n"
            "  \"modulus\": \"13\",\n"
            "  \"n\": 4,\n"
            "  \"provenance\": {\n"
            "    \"a\": 2,\n"
            "    \"z\": 1\n"
            "  },\n"
            "  \"representation\": \"multinomial\",\n"
            "  \"schema_version\": 1,\n"
            "  \"terms\": [\n"
            "    {\n"
            "      \"coeff\": \"a\",\n"
            "      \"exp\": 3\n"
            "    }\n"
            "  ]\n"
            "}\n");
  EXPECT_EQ(Serialize(ParseFunctionFile(text)), text);
}

TEST(FunctionFileTest, RoundTripsRandomFunctions) {
  std::mt19937_64 rng(77);
  for (int n = 1; n <= 10; ++n) {
    const FieldCtx ctx = FieldCtx::Create(n);
    const Multinomial m = testing::RandomQuadratic(ctx, rng, 4);
    const FunctionFile mf = MakeFunctionFile(m, {{"seed", n}});
    const FunctionFile mf2 = ParseFunctionFile(Serialize(mf));
    EXPECT_EQ(mf2, mf);
    EXPECT_EQ(ToTruthTable(mf2), TruthTable::FromMultinomial(m));

    const TruthTable t = testing::RandomTable(ctx, rng);
    const FunctionFile tf = ParseFunctionFile(Serialize(MakeFunctionFile(t)));
    EXPECT_EQ(tf.representation, Representation::kTruthTable);
    EXPECT_EQ(ToTruthTable(tf), t);
  }
}

TEST(FunctionFileTest, ParamsRoundTrip) {
  const FieldCtx ctx = FieldCtx::Create(6);
  for (Family fam : {Family::kThm1, Family::kThm2}) {
    for (const FamilyParams& p : SearchParams(ctx, fam, 3, 4)) {
      EXPECT_EQ(ParamsFromJson(ParamsToJson(p), fam), p);
    }
  }
  EXPECT_EQ(MultisetToJson({{0, 3}, {2, 5}}).dump(), "[[0,3],[2,5]]");
}

TEST(FunctionFileTest, MalformedInputs) {
  EXPECT_EQ(ParseCode("not json"), ErrorCode::kMalformedFile);
  EXPECT_EQ(ParseCode("[]"), ErrorCode::kMalformedFile);
  EXPECT_EQ(ParseCode(ValidJson().dump()), ErrorCode::kInvalidInput);  // parses fine

  auto broken = [](auto mutate) {
    nlohmann::json j = ValidJson();
    mutate(j);
    return ParseCode(j.dump());
  };
  EXPECT_EQ(broken([](auto& j) { j.erase("n"); }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["n"] = 30; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["n"] = "4"; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["schema_version"] = 2; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["modulus"] = "11"; }), ErrorCode::kMalformedFile);  // reducible
  EXPECT_EQ(broken([](auto& j) { j["modulus"] = "zz"; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["representation"] = "anf"; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["terms"][0]["coeff"] = "ff"; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["terms"][0]["exp"] = 0; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) { j["provenance"] = 3; }), ErrorCode::kMalformedFile);
  EXPECT_EQ(broken([](auto& j) {
              j["representation"] = "truthtable";
              j["values"] = nlohmann::json::array({"0", "1"});
            }),
            ErrorCode::kMalformedFile);
}

}  // namespace
}  // namespace crooked
