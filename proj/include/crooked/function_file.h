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

// On-disk function format:
//
//   {
//     "schema_version": 1,
//     "n": 6,
//     "modulus": "43",
//     "representation": "multinomial" | "truthtable",
//     "terms": [{"coeff": "2", "exp": 9}, ...],      // multinomial only
//     "values": ["0", "1", ...],                     // truthtable only
//     "provenance": {...}
//   }
//
// Field elements are lowercase hex without prefix. Keys are emitted sorted.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "crooked/families.h"
#include "crooked/vbf.h"

namespace crooked {

inline constexpr int kSchemaVersion = 1;

enum class Representation { kMultinomial, kTruthTable };

struct FunctionFile {
  int schema_version = kSchemaVersion;
  int n = 0;
  std::uint32_t modulus = 0;
  Representation representation = Representation::kMultinomial;
  std::vector<Term> terms;
  std::vector<FieldElem> values;
  nlohmann::json provenance = nlohmann::json::object();

  friend bool operator==(const FunctionFile&, const FunctionFile&) = default;
};

std::string ToHex(std::uint32_t value);
// Throws Error(kMalformedFile) on anything but lowercase or uppercase hex
// digits.
std::uint32_t ParseHex(std::string_view text);

FunctionFile MakeFunctionFile(const Multinomial& m, nlohmann::json provenance = nlohmann::json::object());
FunctionFile MakeFunctionFile(const TruthTable& t, nlohmann::json provenance = nlohmann::json::object());

nlohmann::json ToJson(const FunctionFile& file);
// Throws Error(kMalformedFile).
FunctionFile FunctionFileFromJson(const nlohmann::json& j);

std::string Serialize(const FunctionFile& file);
// Throws Error(kMalformedFile).
FunctionFile ParseFunctionFile(std::string_view text);

// Throws Error(kMalformedFile) when the stored modulus is not usable.
FieldCtx ContextOf(const FunctionFile& file);
TruthTable ToTruthTable(const FunctionFile& file);

nlohmann::json ParamsToJson(const FamilyParams& p);
// Throws Error(kMalformedFile).
FamilyParams ParamsFromJson(const nlohmann::json& j, Family family);

// Sorted [value, multiplicity] pairs.
nlohmann::json MultisetToJson(const Multiset& m);

}  // namespace crooked
