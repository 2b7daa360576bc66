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

#include "crooked/cli.h"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "crooked/families.h"
#include "crooked/function_file.h"
#include "crooked/invariants.h"
#include "crooked/spectral.h"

namespace crooked {

using nlohmann::json;

namespace {

int ExitFor(const Error& e) {
  switch (e.code()) {
    case ErrorCode::kMalformedFile: return kExitMalformedInput;
    case ErrorCode::kInfeasibleSize: return kExitInfeasible;
    case ErrorCode::kDegreeMismatch: return kExitMismatch;
    default: return kExitInvalidParams;
  }
}

[[noreturn]] void BadArgument(const std::string& what) { throw Error(ErrorCode::kInvalidInput, what); }

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::uint32_t UserHex(const std::string& text) {
  try {
    return ParseHex(text);
  } catch (const Error&) {
    BadArgument("not a hex field element: '" + text + "'");
  }
}

FieldElem ResolveElement(const FieldCtx& ctx, const std::string& text, std::uint64_t seed,
                         const char* name) {
  if (text == "primitive") return ctx.NthPrimitive(seed);
  const FieldElem v(UserHex(text));
  if (!ctx.Contains(v)) BadArgument(std::string(name) + " outside GF(2^n)");
  return v;
}

std::vector<FieldElem> ResolveList(const FieldCtx& ctx, const std::string& text, std::size_t length,
                                   const char* name) {
  std::vector<FieldElem> out;
  for (const auto& item : SplitCommas(text)) {
    const FieldElem v(UserHex(item));
    if (!ctx.Contains(v)) BadArgument(std::string(name) + " entry outside GF(2^n)");
    out.push_back(v);
  }
  if (out.empty()) out.assign(length, kZero);
  return out;
}

std::vector<int> ParseIntList(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : SplitCommas(text)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      BadArgument("not an integer list: '" + text + "'");
    }
  }
  return out;
}

FieldCtx MakeContext(int n, const std::string& modulus) {
  if (modulus.empty()) return FieldCtx::Create(n);
  return FieldCtx::Create(n, UserHex(modulus));
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kMalformedFile, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ValidationOptions MakeValidation(bool strict, bool exact_kernel) {
  ValidationOptions v = strict ? ValidationOptions::Strict() : ValidationOptions{};
  v.require_kernel_coefficient = exact_kernel;
  return v;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string family;
  int n = 0;
  std::string modulus;
  int s = -1;
  int t = 0;
  std::string k_set = "0";
  std::string c = "primitive";
  std::string d = "primitive";
  std::string r;
  std::uint64_t seed = 0;
  bool automatic = false;
  bool strict = false;
  bool exact_kernel = false;
  std::string out_path;
};

int Construct(const ConstructArgs& args, std::ostream& out, std::ostream& err) {
  const FieldCtx ctx = MakeContext(args.n, args.modulus);
  const int n = ctx.degree();
  json provenance{{"family", args.family}, {"seed", args.seed}};
  FunctionFile file;

  if (args.family == "gold") {
    if (args.s < 0) BadArgument("--s is required for gold");
    try {
      file = MakeFunctionFile(BuildGold(ctx, args.s), provenance);
    } catch (const Error& e) {
      err << e.what() << "\n";
      return kExitInvalidParams;
    }
    file.provenance["params"] = {{"s", args.s}};
  } else if (args.family == "ref7") {
    if (n % 2 != 0) BadArgument("n must be even");
    if (args.s < 0) BadArgument("--s is required for ref7");
    Ref7Params p;
    p.m = n / 2;
    p.s = args.s;
    p.alpha = ResolveElement(ctx, args.d, args.seed, "d");
    p.beta = ResolveElement(ctx, args.c, args.seed, "c");
    p.gamma = ResolveList(ctx, args.r, static_cast<std::size_t>(p.m - 1), "r");
    const auto violations = ValidateRef7(ctx, p);
    if (!violations.empty()) {
      for (const auto& v : violations) err << v << "\n";
      return kExitInvalidParams;
    }
    file = MakeFunctionFile(Ref7Table(ctx, p), provenance);
    json gamma = json::array();
    for (FieldElem g : p.gamma) gamma.push_back(ToHex(g.bits));
    file.provenance["params"] = {{"m", p.m}, {"s", p.s}, {"alpha", ToHex(p.alpha.bits)},
                                 {"beta", ToHex(p.beta.bits)}, {"gamma", gamma}};
  } else {
    const Family family = ParseFamily(args.family);
    if (n % 2 != 0) BadArgument("n must be even");
    const ValidationOptions validation = MakeValidation(args.strict, args.exact_kernel);
    FamilyParams p;
    if (args.automatic) {
      SearchOptions options;
      options.validation = validation;
      auto found = SearchParams(ctx, family, 1, args.seed, options);
      if (found.empty()) {
        err << "no valid parameters found\n";
        return kExitInvalidParams;
      }
      p = found.front();
    } else {
      if (args.s < 0) BadArgument("--s is required unless --auto is given");
      p.family = family;
      p.m = n / 2;
      p.s = args.s;
      p.t = args.t;
      p.k_set = ParseIntList(args.k_set);
      p.c = ResolveElement(ctx, args.c, args.seed, "c");
      p.d = ResolveElement(ctx, args.d, args.seed, "d");
      p.r = ResolveList(ctx, args.r, static_cast<std::size_t>(p.m - 1), "r");
    }
    const auto violations = Validate(ctx, p, validation);
    if (!violations.empty()) {
      for (const auto& v : violations) err << v.message << "\n";
      return kExitInvalidParams;
    }
    file = MakeFunctionFile(Assemble(ctx, p), provenance);
    file.provenance["params"] = ParamsToJson(p);
    file.provenance["validation"] = {{"strict", args.strict}, {"exact_kernel", args.exact_kernel}};
  }

  const std::string text = Serialize(file);
  if (args.out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(args.out_path, std::ios::binary);
    if (!f || !(f << text)) {
      err << "cannot write '" << args.out_path << "'\n";
      return kExitInvalidParams;
    }
  }
  return kExitOk;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
  std::string in;
  std::string checks = "apn,crooked";
  bool json_output = false;
  bool summary = false;
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  int threads = 1;
};

int Verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  const FunctionFile file = ParseFunctionFile(ReadFile(args.in));
  const std::vector<std::string> checks = SplitCommas(args.checks);
  for (const auto& c : checks) {
    if (c != "apn" && c != "crooked" && c != "walsh" && c != "identity") {
      BadArgument("unknown check '" + c + "'");
    }
    if (file.n > kMaxExhaustiveDegree) {
      err << "check '" << c << "' requires n <= " << kMaxExhaustiveDegree << "\n";
      return kExitInfeasible;
    }
  }
  const TruthTable f = ToTruthTable(file);
  const FieldCtx& ctx = f.ctx();
  auto wants = [&](const char* name) { return std::find(checks.begin(), checks.end(), name) != checks.end(); };

  json report{{"n", file.n}, {"modulus", ToHex(file.modulus)}, {"checks", json::object()}};
  std::ostringstream human;
  human << "n = " << file.n << ", modulus = " << ToHex(file.modulus) << "\n";
  bool all_pass = true;

  if (wants("apn")) {
    const auto ds = ComputeDifferentialSpectrum(f, args.threads);
    const bool pass = ds.delta == 2;
    report["checks"]["apn"] = {{"pass", pass}, {"delta", ds.delta}, {"spectrum", MultisetToJson(ds.spectrum)}};
    human << "apn: " << (pass ? "pass" : "FAIL") << " (delta = " << ds.delta << ")\n";
    all_pass = all_pass && pass;
  }
  if (wants("crooked")) {
    const auto cr = CheckCrooked(f, args.threads);
    json entry{{"pass", cr.crooked}, {"witness_count", cr.witnesses.size()}};
    entry["first_failure"] = cr.first_failure ? json(ToHex(cr.first_failure->bits)) : json(nullptr);
    if (!args.summary) {
      json witnesses = json::array();
      for (const auto& [a, w] : cr.witnesses) {
        witnesses.push_back({{"a", ToHex(a.bits)}, {"b", ToHex(w.b.bits)}, {"eps", w.eps}});
      }
      entry["witnesses"] = std::move(witnesses);
    }
    report["checks"]["crooked"] = std::move(entry);
    human << "crooked: " << (cr.crooked ? "pass" : "FAIL");
    if (cr.first_failure) human << " (first failing direction a = " << ToHex(cr.first_failure->bits) << ")";
    human << "\n";
    all_pass = all_pass && cr.crooked;
  }
  if (wants("walsh")) {
    const auto sp = ComputeWalshSpectrum(f, args.threads);
    const auto classes = ClassifyComponents(f, args.threads);
    report["checks"]["walsh"] = {
        {"pass", sp.parseval_ok},
        {"nl", sp.nl},
        {"gamma", MultisetToJson(sp.gamma)},
        {"extended", MultisetToJson(sp.extended)},
        {"almost_bent", IsAlmostBent(sp, ctx.degree())},
        {"components", {{"bent", classes.bent}, {"semibent", classes.semibent}, {"other", classes.other}}},
    };
    human << "walsh: " << (sp.parseval_ok ? "pass" : "FAIL") << " (nl = " << sp.nl
          << ", almost bent: " << (IsAlmostBent(sp, ctx.degree()) ? "yes" : "no") << ", bent/semibent/other = "
          << classes.bent << "/" << classes.semibent << "/" << classes.other << ")\n";
    all_pass = all_pass && sp.parseval_ok;
  }
  if (wants("identity")) {
    const json& prov = file.provenance;
    if (!prov.contains("family") || !prov.contains("params") || !prov["family"].is_string() ||
        (prov["family"] != "thm1" && prov["family"] != "thm2")) {
      err << "identity check needs thm1/thm2 parameters in the file provenance\n";
      return kExitMalformedInput;
    }
    const FamilyParams p = ParamsFromJson(prov["params"], ParseFamily(prov["family"].get<std::string>()));
    if (2 * p.m != ctx.degree()) throw Error(ErrorCode::kMalformedFile, "provenance m does not match n");
    const bool matches = TruthTable::FromMultinomial(Assemble(ctx, p)) == f;
    IdentityOptions options;
    options.trials = args.trials;
    options.seed = args.seed;
    const auto id = ProofIdentityCheck(ctx, p, options);
    const bool pass = matches && id.holds;
    json entry{{"pass", pass},
               {"matches_file", matches},
               {"global_form", id.global_form_holds},
               {"pair_form", id.pair_form_holds},
               {"pairs_checked", id.pairs_checked}};
    entry["counterexample"] = id.counterexample
                                  ? json{{"x", ToHex(id.counterexample->first.bits)},
                                         {"a", ToHex(id.counterexample->second.bits)}}
                                  : json(nullptr);
    report["checks"]["identity"] = std::move(entry);
    human << "identity: " << (pass ? "pass" : "FAIL") << " (pairs checked: " << id.pairs_checked << ")\n";
    all_pass = all_pass && pass;
  }
  report["pass"] = all_pass;
  if (args.json_output) {
    out << report.dump(2) << "\n";
  } else {
    out << human.str();
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

// --------------------------------------------------------------- invariants

struct InvariantsArgs {
  std::string in;
  std::string against;
  std::string depth = "spectra";
  int threads = 1;
};

json InvariantSetToJson(const InvariantSet& s) {
  json j{{"diff_spectrum", MultisetToJson(s.diff_spectrum)}, {"extended_walsh", MultisetToJson(s.extended_walsh)}};
  j["gamma_rank"] = s.gamma_rank ? json(*s.gamma_rank) : json(nullptr);
  j["delta_rank"] = s.delta_rank ? json(*s.delta_rank) : json(nullptr);
  return j;
}

json ReportToJson(const InvariantReport& r, const std::string& against) {
  return {
      {"against", against},
      {"depth", DepthName(r.depth)},
      {"lhs", InvariantSetToJson(r.lhs)},
      {"rhs", InvariantSetToJson(r.rhs)},
      {"differing", r.differing},
      {"verdict", VerdictName(r.verdict)},
      {"conclusive", r.verdict == Verdict::kDistinguished},
  };
}

int Invariants(const InvariantsArgs& args, std::ostream& out, std::ostream& err) {
  const Depth depth = ParseDepth(args.depth);
  const FunctionFile file = ParseFunctionFile(ReadFile(args.in));
  const int limit = depth == Depth::kRanks ? kMaxRankDegree : kMaxExhaustiveDegree;
  if (file.n > limit) {
    err << "depth '" << args.depth << "' requires n <= " << limit << "\n";
    return kExitInfeasible;
  }
  const TruthTable f = ToTruthTable(file);
  const InvariantSet lhs = ComputeInvariants(f, depth, args.threads);

  json reports = json::array();
  if (args.against == "gold-all") {
    for (int s : DistinctGoldShifts(file.n)) {
      const TruthTable gold = TruthTable::FromMultinomial(BuildGold(f.ctx(), s));
      const auto report = CompareInvariants(lhs, ComputeInvariants(gold, depth, args.threads), depth);
      json j = ReportToJson(report, "gold:s=" + std::to_string(s));
      j["against_exponent"] = (std::uint64_t{1} << s) + 1;
      reports.push_back(std::move(j));
    }
  } else {
    const FunctionFile other = ParseFunctionFile(ReadFile(args.against));
    if (other.n != file.n || other.modulus != file.modulus) {
      err << "functions live on different fields\n";
      return kExitMismatch;
    }
    const TruthTable g = ToTruthTable(other);
    const auto report = CompareInvariants(lhs, ComputeInvariants(g, depth, args.threads), depth);
    reports.push_back(ReportToJson(report, args.against));
  }
  const json result{{"in", args.in}, {"n", file.n}, {"modulus", ToHex(file.modulus)}, {"reports", reports}};
  out << result.dump(2) << "\n";
  return kExitOk;
}

// ------------------------------------------------------------------- search

struct SearchArgs {
  std::string family;
  int n = 0;
  std::string modulus;
  std::size_t budget = 5;
  std::uint64_t seed = 0;
  bool strict = false;
  bool exact_kernel = false;
};

int Search(const SearchArgs& args, std::ostream& out, std::ostream& err) {
  const Family family = ParseFamily(args.family);
  if (args.n % 2 != 0) {
    err << "n must be even\n";
    return kExitInvalidParams;
  }
  const FieldCtx ctx = MakeContext(args.n, args.modulus);
  SearchOptions options;
  options.validation = MakeValidation(args.strict, args.exact_kernel);
  const auto records = SearchParams(ctx, family, args.budget, args.seed, options);
  for (const auto& p : records) {
    const json line{{"family", FamilyName(family)}, {"n", ctx.degree()}, {"modulus", ToHex(ctx.modulus())},
                    {"seed", args.seed}, {"params", ParamsToJson(p)}};
    out << line.dump() << "\n";
  }
  err << "# records: " << records.size() << "\n";
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and analyse crooked multinomials over GF(2^n).", "crooked"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a function file");
  construct->add_option("--family", ca.family, "thm1 | thm2 | gold | ref7")
      ->required()
      ->check(CLI::IsMember({"thm1", "thm2", "gold", "ref7"}));
  construct->add_option("--n", ca.n, "Field degree")->required();
  construct->add_option("--modulus", ca.modulus, "Irreducible modulus as hex");
  construct->add_option("--s", ca.s, "Larger exponent index (Gold shift for gold)");
  construct->add_option("--t", ca.t, "Smaller exponent index");
  construct->add_option("--K", ca.k_set, "Comma-separated exponent set");
  construct->add_option("--c", ca.c, "Hex element or 'primitive'");
  construct->add_option("--d", ca.d, "Hex element or 'primitive'");
  construct->add_option("--r", ca.r, "Comma-separated hex r_1..r_{m-1}");
  construct->add_option("--seed", ca.seed, "Seed for --auto and 'primitive'");
  construct->add_flag("--auto", ca.automatic, "Take the first searched parameter tuple");
  construct->add_flag("--strict", ca.strict, "Require irreducibility and nonzero r");
  construct->add_flag("--exact-kernel", ca.exact_kernel, "Reject parameters whose reduced derivative kernel is nontrivial");
  construct->add_option("--out", ca.out_path, "Output path (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check APN, crooked, Walsh and proof identities");
  verify->add_option("--in", va.in, "Function file")->required();
  verify->add_option("--checks", va.checks, "Comma-separated: apn,crooked,walsh,identity");
  verify->add_flag("--json", va.json_output, "JSON report");
  verify->add_flag("--summary", va.summary, "Omit per-direction witnesses");
  verify->add_option("--trials", va.trials, "Random pairs for the identity check");
  verify->add_option("--seed", va.seed, "Seed for the identity check");
  verify->add_option("--threads", va.threads, "Worker threads")->check(CLI::Range(1, 256));

  InvariantsArgs ia;
  auto* invariants = app.add_subcommand("invariants", "Compare CCZ invariants");
  invariants->add_option("--in", ia.in, "Function file")->required();
  invariants->add_option("--against", ia.against, "Function file or gold-all")->required();
  invariants->add_option("--depth", ia.depth, "spectra | ranks")->check(CLI::IsMember({"spectra", "ranks"}));
  invariants->add_option("--threads", ia.threads, "Worker threads")->check(CLI::Range(1, 256));

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "List valid family parameters");
  search->add_option("--family", sa.family, "thm1 | thm2")->required()->check(CLI::IsMember({"thm1", "thm2"}));
  search->add_option("--n", sa.n, "Field degree")->required();
  search->add_option("--modulus", sa.modulus, "Irreducible modulus as hex");
  search->add_option("--budget", sa.budget, "Maximum number of records");
  search->add_option("--seed", sa.seed, "Enumeration seed");
  search->add_flag("--strict", sa.strict, "Require irreducibility and nonzero r");
  search->add_flag("--exact-kernel", sa.exact_kernel, "Reject parameters whose reduced derivative kernel is nontrivial");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInvalidParams;
  }

  try {
    if (construct->parsed()) return Construct(ca, out, err);
    if (verify->parsed()) return Verify(va, out, err);
    if (invariants->parsed()) return Invariants(ia, out, err);
    return Search(sa, out, err);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return ExitFor(e);
  }
}

}  // namespace crooked
