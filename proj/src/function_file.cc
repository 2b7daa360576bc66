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

#include <charconv>

namespace crooked {

using nlohmann::json;

namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedFile, "malformed function file: " + what);
}

const json& Field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) Malformed(std::string("missing '") + key + "'");
  return j.at(key);
}

std::int64_t IntField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_number_integer()) Malformed(std::string("'") + key + "' must be an integer");
  return v.get<std::int64_t>();
}

std::uint32_t HexField(const json& j, const char* key) {
  const json& v = Field(j, key);
  if (!v.is_string()) Malformed(std::string("'") + key + "' must be a hex string");
  return ParseHex(v.get<std::string>());
}

std::vector<FieldElem> HexList(const json& v, const char* what) {
  if (!v.is_array()) Malformed(std::string("'") + what + "' must be an array");
  std::vector<FieldElem> out;
  out.reserve(v.size());
  for (const json& item : v) {
    if (!item.is_string()) Malformed(std::string("'") + what + "' entries must be hex strings");
    out.emplace_back(ParseHex(item.get<std::string>()));
  }
  return out;
}

json HexArray(const std::vector<FieldElem>& values) {
  json arr = json::array();
  for (FieldElem v : values) arr.push_back(ToHex(v.bits));
  return arr;
}

}  // namespace

std::string ToHex(std::uint32_t value) {
  char buf[16];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, 16);
  return std::string(buf, end);
}

std::uint32_t ParseHex(std::string_view text) {
  if (text.empty() || text.size() > 8) Malformed("bad hex '" + std::string(text) + "'");
  std::uint32_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    Malformed("bad hex '" + std::string(text) + "'");
  }
  return value;
}

FunctionFile MakeFunctionFile(const Multinomial& m, json provenance) {
  FunctionFile file;
  file.n = m.ctx().degree();
  file.modulus = m.ctx().modulus();
  file.representation = Representation::kMultinomial;
  file.terms = m.terms();
  file.provenance = std::move(provenance);
  return file;
}

FunctionFile MakeFunctionFile(const TruthTable& t, json provenance) {
  FunctionFile file;
  file.n = t.ctx().degree();
  file.modulus = t.ctx().modulus();
  file.representation = Representation::kTruthTable;
  file.values = t.values();
  file.provenance = std::move(provenance);
  return file;
}

json ToJson(const FunctionFile& file) {
  json j;
  j["schema_version"] = file.schema_version;
  j["n"] = file.n;
  j["modulus"] = ToHex(file.modulus);
  j["provenance"] = file.provenance;
  if (file.representation == Representation::kMultinomial) {
    j["representation"] = "multinomial";
    json terms = json::array();
    for (const Term& t : file.terms) terms.push_back({{"coeff", ToHex(t.coeff.bits)}, {"exp", t.exp}});
    j["terms"] = std::move(terms);
  } else {
    j["representation"] = "truthtable";
    j["values"] = HexArray(file.values);
  }
  return j;
}

FunctionFile FunctionFileFromJson(const json& j) {
  if (!j.is_object()) Malformed("top level must be an object");
  FunctionFile file;
  file.schema_version = static_cast<int>(IntField(j, "schema_version"));
  if (file.schema_version != kSchemaVersion) Malformed("unsupported schema_version");
  const std::int64_t n = IntField(j, "n");
  if (n < 1 || n > FieldCtx::kMaxDegree) Malformed("n outside [1, 24]");
  file.n = static_cast<int>(n);
  file.modulus = HexField(j, "modulus");
  const json& rep = Field(j, "representation");
  if (rep == "multinomial") {
    file.representation = Representation::kMultinomial;
    const json& terms = Field(j, "terms");
    if (!terms.is_array()) Malformed("'terms' must be an array");
    for (const json& t : terms) {
      const std::int64_t exp = IntField(t, "exp");
      if (exp < 1) Malformed("term exponent must be positive");
      file.terms.push_back({FieldElem(HexField(t, "coeff")), static_cast<std::uint64_t>(exp)});
    }
  } else if (rep == "truthtable") {
    file.representation = Representation::kTruthTable;
    file.values = HexList(Field(j, "values"), "values");
    if (file.values.size() != (std::size_t{1} << file.n)) Malformed("truth table must have 2^n values");
  } else {
    Malformed("unknown representation");
  }
  if (j.contains("provenance")) {
    if (!j.at("provenance").is_object()) Malformed("'provenance' must be an object");
    file.provenance = j.at("provenance");
  }
  return file;
}

std::string Serialize(const FunctionFile& file) { return ToJson(file).dump(2) + "\n"; }

FunctionFile ParseFunctionFile(std::string_view text) {
  json j = json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) Malformed("not valid JSON");
  return FunctionFileFromJson(j);
}

FieldCtx ContextOf(const FunctionFile& file) {
  try {
    return FieldCtx::Create(file.n, file.modulus);
  } catch (const Error& e) {
    Malformed(e.what());
  }
}

TruthTable ToTruthTable(const FunctionFile& file) {
  const FieldCtx ctx = ContextOf(file);
  try {
    if (file.representation == Representation::kMultinomial) {
      return TruthTable::FromMultinomial(Multinomial::FromTerms(ctx, file.terms));
    }
    return TruthTable::FromValues(ctx, file.values);
  } catch (const Error& e) {
    Malformed(e.what());
  }
}

json ParamsToJson(const FamilyParams& p) {
  return {
      {"m", p.m}, {"s", p.s}, {"t", p.t}, {"K", p.k_set},
      {"c", ToHex(p.c.bits)}, {"d", ToHex(p.d.bits)}, {"r", HexArray(p.r)},
  };
}

FamilyParams ParamsFromJson(const json& j, Family family) {
  FamilyParams p;
  p.family = family;
  p.m = static_cast<int>(IntField(j, "m"));
  p.s = static_cast<int>(IntField(j, "s"));
  p.t = static_cast<int>(IntField(j, "t"));
  const json& k = Field(j, "K");
  if (!k.is_array()) Malformed("'K' must be an array");
  for (const json& v : k) {
    if (!v.is_number_integer()) Malformed("'K' entries must be integers");
    p.k_set.push_back(v.get<int>());
  }
  p.c = FieldElem(HexField(j, "c"));
  p.d = FieldElem(HexField(j, "d"));
  p.r = HexList(Field(j, "r"), "r");
  return p;
}

json MultisetToJson(const Multiset& m) {
  json arr = json::array();
  for (const auto& [value, mult] : m) arr.push_back({value, mult});
  return arr;
}

}  // namespace crooked
