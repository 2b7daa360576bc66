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

#include "crooked/families.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <tuple>

#include "crooked/gf2_matrix.h"

namespace crooked {

const char* FamilyName(Family family) {
  return family == Family::kThm1 ? "thm1" : "thm2";
}

Family ParseFamily(const std::string& name) {
  if (name == "thm1") return Family::kThm1;
  if (name == "thm2") return Family::kThm2;
  throw Error(ErrorCode::kInvalidInput, "unknown family '" + name + "'");
}

namespace {

std::uint64_t Lcm(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

// x -> x^q on GF(q^2).
FieldElem Conj(const FieldCtx& ctx, FieldElem x, int m) { return ctx.Frobenius(x, m); }

std::uint64_t PairExponent(const FieldCtx& ctx, int s, int t) {
  const int powers[] = {s, t};
  return ExponentFromPowersOfTwo(ctx, powers);
}

void Add(std::vector<Violation>& out, ViolationCode code, std::string message) {
  out.push_back({code, std::move(message)});
}

void CheckExponentSet(const FieldCtx& ctx, const FamilyParams& p, const ValidationOptions& options,
                      std::vector<Violation>& out) {
  std::optional<ExponentSet> k_set;
  try {
    k_set = ExponentSet::Create(ctx.degree(), p.k_set);
  } catch (const Error& e) {
    Add(out, ViolationCode::kExponentSet, std::string("K: ") + e.what());
    return;
  }
  if (k_set->IsZeroOne()) {
    Add(out, ViolationCode::kExponentSetZeroOne, "K = {0,1} is excluded");
    return;
  }
  if (!LinearizedIsBijective(ctx, *k_set)) {
    Add(out, ViolationCode::kKernelNontrivial, "linearized map of K has nontrivial kernel");
  }
  if (options.require_irreducible &&
      !IsIrreducibleOver(ctx, KernelPolynomial(ctx, *k_set)).irreducible) {
    Add(out, ViolationCode::kNotIrreducible, "sum of x^(2^k-1) over K is not irreducible");
  }
}

// Thm2 with several shifts in K: after x = a t the kernel equation is
// sum_k C_k(a) T^(2^k) = 0 with C_k(a) = a^(e 2^k) + d a^(q e 2^k) and
// T = t^(2^s) + t^(2^t), t in GF(q). The C_k are not Frobenius images of a
// single scalar, so check that this map is injective on the space of T for
// every a.
bool ReducedKernelNontrivial(const FieldCtx& ctx, const FamilyParams& p, std::uint64_t e) {
  const int m = p.m;
  const std::uint64_t q = std::uint64_t{1} << m;
  // 1, w, ..., w^(m-1) is a basis of GF(q) for a generator w of GF(q)^*.
  const FieldElem w = ctx.Pow(ctx.LeastPrimitive(), q + 1);
  std::vector<FieldElem> t_space;
  FieldElem power = kOne;
  for (int i = 0; i < m; ++i, power = ctx.Mul(power, w)) {
    t_space.push_back(ctx.Frobenius(power, p.s) + ctx.Frobenius(power, p.t));
  }
  std::vector<std::uint64_t> span;
  for (FieldElem v : t_space) span.push_back(v.bits);
  const std::vector<std::uint64_t> basis = SpanBasis(span);
  const int dim = static_cast<int>(basis.size());

  std::vector<FieldElem> coeffs(p.k_set.size());
  std::vector<std::uint64_t> image(basis.size());
  for (std::uint32_t v = 1; v < ctx.size(); ++v) {
    const FieldElem ae = ctx.Pow(FieldElem(v), e);
    for (std::size_t j = 0; j < p.k_set.size(); ++j) {
      // a^(e 2^k) + d a^(q e 2^k) = (a^e + d^(2^-k) a^(q e))^(2^k).
      const FieldElem ak = ctx.Frobenius(ae, p.k_set[j]);
      coeffs[j] = ak + ctx.Mul(p.d, ctx.Frobenius(ak, m));
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      FieldElem acc = kZero;
      const FieldElem tb(static_cast<std::uint32_t>(basis[b]));
      for (std::size_t j = 0; j < p.k_set.size(); ++j) {
        acc += ctx.Mul(coeffs[j], ctx.Frobenius(tb, p.k_set[j]));
      }
      image[b] = acc.bits;
    }
    if (SpanRank(image) < dim) return true;
  }
  return false;
}

// True iff the derivative kernel can exceed {0, a} for some a != 0 once x is
// restricted to a GF(q)-multiple of a.
bool KernelCoefficientCanVanish(const FieldCtx& ctx, const FamilyParams& p) {
  const std::uint64_t order = ctx.group_order();
  const std::uint64_t q = std::uint64_t{1} << p.m;
  const std::uint64_t e = PairExponent(ctx, p.s, p.t);
  if (p.family == Family::kThm1) {
    // The K-sum is L_K applied to C(a) T with C(a) = d a^e + (d a^e)^q, and
    // C(a) = 0 iff d a^e lies in GF(q)^*, i.e. d lies in the product of
    // GF(q)^* and the e-th powers, a subgroup of order
    // lcm(q - 1, order / gcd(e, order)).
    if (p.d.IsZero()) return true;
    const std::uint64_t sub = Lcm(q - 1, order / std::gcd(e, order));
    return ctx.Pow(p.d, sub).IsOne();
  }
  if (p.k_set.size() > 1) return ReducedKernelNontrivial(ctx, p, e);
  // a^e + d a^(qe) = a^e (1 + d a^(e(q-1))) vanishes iff d is an
  // (e (q-1))-th power; the class is stable under Frobenius, so a single
  // shift k does not change the answer.
  if (p.d.IsZero()) return false;
  return ctx.IsEthPower(p.d, e * (q - 1));
}

}  // namespace

std::vector<Violation> Validate(const FieldCtx& ctx, const FamilyParams& p,
                                const ValidationOptions& options) {
  if (ctx.degree() != 2 * p.m) {
    throw Error(ErrorCode::kDegreeMismatch, "field degree " + std::to_string(ctx.degree()) +
                                                " differs from 2m = " + std::to_string(2 * p.m));
  }
  const int n = ctx.degree();
  const int m = p.m;
  std::vector<Violation> out;

  const bool exponents_ok = p.s > p.t && p.t >= 0;
  if (p.s <= p.t) Add(out, ViolationCode::kSNotAboveT, "s must exceed t");
  if (p.t < 0) Add(out, ViolationCode::kNegativeT, "t must be non-negative");
  if (exponents_ok && std::gcd(p.s - p.t, n) != 1) Add(out, ViolationCode::kGcd, "gcd(s-t,n) != 1");
  CheckExponentSet(ctx, p, options, out);

  bool elements_ok = true;
  auto check_in_field = [&](FieldElem v, const std::string& name) {
    if (!ctx.Contains(v)) {
      Add(out, ViolationCode::kElementOutsideField, name + " outside field");
      elements_ok = false;
    }
  };
  check_in_field(p.c, "c");
  check_in_field(p.d, "d");
  for (std::size_t k = 0; k < p.r.size(); ++k) check_in_field(p.r[k], "r_" + std::to_string(k + 1));
  if (!elements_ok) return out;

  const std::uint64_t q = std::uint64_t{1} << m;
  const std::uint64_t e = exponents_ok ? PairExponent(ctx, p.s, p.t) : 0;
  if (p.family == Family::kThm1) {
    if (ctx.InSubfield(p.c, m)) Add(out, ViolationCode::kCInSubfield, "c in subfield");
    if (exponents_ok && ctx.IsEthPower(p.d, e)) Add(out, ViolationCode::kDPowerImage, "d is a power-image");
  } else {
    if (!ctx.Pow(p.d, q + 1).IsOne()) Add(out, ViolationCode::kDNorm, "d^(q+1) != 1");
    if ((p.c + ctx.Mul(p.d, Conj(ctx, p.c, m))).IsZero()) {
      Add(out, ViolationCode::kCDegenerate, "c + d*c^q == 0");
    }
    if (exponents_ok && ctx.IsEthPower(p.d, e)) Add(out, ViolationCode::kDPowerImage, "d is a power-image");
  }

  if (p.r.size() != static_cast<std::size_t>(m - 1)) {
    Add(out, ViolationCode::kRLength, "r must have m-1 entries");
  }
  for (std::size_t k = 0; k < p.r.size(); ++k) {
    const std::string name = "r_" + std::to_string(k + 1);
    const FieldElem rk = p.r[k];
    if (rk.IsZero()) {
      if (options.require_nonzero_r) Add(out, ViolationCode::kRZero, name + " is zero");
      continue;
    }
    if (p.family == Family::kThm1) {
      if (!ctx.InSubfield(rk, m)) Add(out, ViolationCode::kRNotInSubfield, name + " not in subfield");
    } else if (!ctx.Mul(p.d, ctx.Pow(rk, q - 1)).IsOne()) {
      // d = r^(1-q)  <=>  d r^(q-1) = 1.
      Add(out, ViolationCode::kRdCoupling, "r/d coupling violated at " + name);
    }
  }

  if (options.require_kernel_coefficient && exponents_ok && KernelCoefficientCanVanish(ctx, p)) {
    Add(out, ViolationCode::kKernelCoefficient, "derivative kernel is nontrivial for some a");
  }
  return out;
}

Multinomial Assemble(const FieldCtx& ctx, const FamilyParams& p) {
  const int m = p.m;
  std::vector<Term> terms;
  const int q_plus_one[] = {m, 0};
  terms.push_back({p.c, ExponentFromPowersOfTwo(ctx, q_plus_one)});
  for (int k = 1; k <= m - 1 && static_cast<std::size_t>(k) <= p.r.size(); ++k) {
    const int powers[] = {k, m + k};
    terms.push_back({p.r[k - 1], ExponentFromPowersOfTwo(ctx, powers)});
  }
  for (int k : p.k_set) {
    const int low[] = {p.s + k, p.t + k};
    const int high[] = {m + p.s + k, m + p.t + k};
    if (p.family == Family::kThm1) {
      terms.push_back({ctx.Frobenius(p.d, k), ExponentFromPowersOfTwo(ctx, low)});
      terms.push_back({ctx.Frobenius(p.d, m + k), ExponentFromPowersOfTwo(ctx, high)});
    } else {
      terms.push_back({kOne, ExponentFromPowersOfTwo(ctx, low)});
      terms.push_back({p.d, ExponentFromPowersOfTwo(ctx, high)});
    }
  }
  // Zero coefficients (e.g. r_k = 0) are dropped by the merge.
  return Multinomial::FromTerms(ctx, std::move(terms));
}

InvalidParameters::InvalidParameters(std::vector<Violation> violations)
    : Error(ErrorCode::kInvalidParameters,
            violations.empty() ? std::string("invalid parameters")
                               : "invalid parameters: " + violations.front().message),
      violations_(std::move(violations)) {}

Multinomial Build(const FieldCtx& ctx, const FamilyParams& p, const ValidationOptions& options) {
  auto violations = Validate(ctx, p, options);
  if (!violations.empty()) throw InvalidParameters(std::move(violations));
  return Assemble(ctx, p);
}

std::vector<std::string> ValidateRef7(const FieldCtx& ctx, const Ref7Params& p) {
  if (ctx.degree() != 2 * p.m) {
    throw Error(ErrorCode::kDegreeMismatch, "field degree differs from 2m");
  }
  std::vector<std::string> out;
  if (p.m % 2 == 0) out.push_back("m must be odd");
  if (p.s < 1 || p.s >= 2 * p.m) out.push_back("s must lie in [1, n-1]");
  if (p.s % 2 == 0) out.push_back("s must be odd");
  if (std::gcd(p.s, p.m) != 1) out.push_back("gcd(s,m) != 1");
  if (!ctx.Contains(p.alpha) || p.alpha.IsZero() || !ctx.IsPrimitive(p.alpha)) {
    out.push_back("alpha not primitive");
  }
  if (!ctx.Contains(p.beta) || ctx.InSubfield(p.beta, p.m)) out.push_back("beta in subfield");
  if (p.gamma.size() != static_cast<std::size_t>(p.m - 1)) out.push_back("gamma must have m-1 entries");
  for (std::size_t i = 0; i < p.gamma.size(); ++i) {
    if (!ctx.Contains(p.gamma[i]) || !ctx.InSubfield(p.gamma[i], p.m)) {
      out.push_back("gamma_" + std::to_string(i + 1) + " not in subfield");
    }
  }
  return out;
}

TruthTable Ref7Table(const FieldCtx& ctx, const Ref7Params& p) {
  const int m = p.m;
  const FieldElem alpha_q = ctx.Frobenius(p.alpha, m);
  std::vector<FieldElem> values(ctx.size(), kZero);
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    const FieldElem x(v);
    const FieldElem gold = ctx.Mul(ctx.Frobenius(x, p.s), x);     // x^(2^s + 1)
    const FieldElem norm = ctx.Mul(ctx.Frobenius(x, m), x);       // x^(q + 1)
    FieldElem y = ctx.Mul(p.alpha, gold);
    y += ctx.Mul(alpha_q, ctx.Frobenius(gold, m));
    y += ctx.Mul(p.beta, norm);
    for (int i = 1; i <= m - 1 && static_cast<std::size_t>(i) <= p.gamma.size(); ++i) {
      y += ctx.Mul(p.gamma[i - 1], ctx.Frobenius(norm, i));
    }
    values[v] = y;
  }
  return TruthTable::FromValues(ctx, std::move(values));
}

Multinomial BuildGold(const FieldCtx& ctx, int s) {
  const int n = ctx.degree();
  if (s < 1 || s >= n) throw Error(ErrorCode::kInvalidInput, "Gold shift s must lie in [1, n-1]");
  if (std::gcd(s, n) != 1) throw Error(ErrorCode::kNotGold, "gcd(s,n) != 1");
  const int powers[] = {s, 0};
  return Multinomial::FromTerms(ctx, {{kOne, ExponentFromPowersOfTwo(ctx, powers)}});
}

std::vector<int> DistinctGoldShifts(int n) {
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  std::vector<int> out;
  std::vector<std::uint64_t> seen;
  for (int s = 1; s < n; ++s) {
    if (std::gcd(s, n) != 1) continue;
    std::uint64_t e = ((std::uint64_t{1} << s) + 1) % order;
    std::uint64_t leader = e;
    for (int j = 1; j < n; ++j) {
      e = (2 * e) % order;
      leader = std::min(leader, e);
    }
    if (std::find(seen.begin(), seen.end(), leader) != seen.end()) continue;
    seen.push_back(leader);
    out.push_back(s);
  }
  return out;
}

namespace {

std::vector<std::vector<int>> SubsetsBySizeThenLex(int n) {
  std::vector<std::vector<int>> out;
  for (int size = 1; size <= n; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      out.push_back(idx);
      int i = size - 1;
      while (i >= 0 && idx[i] == n - size + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

std::uint64_t Below(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

}  // namespace

std::vector<FamilyParams> SearchParams(const FieldCtx& ctx, Family family, std::size_t budget,
                                       std::uint64_t seed, const SearchOptions& options) {
  const int n = ctx.degree();
  if (n % 2 != 0) throw Error(ErrorCode::kInvalidInput, "n must be even");
  std::vector<FamilyParams> out;
  if (budget == 0) return out;
  const int m = n / 2;
  const std::uint64_t q = std::uint64_t{1} << m;

  std::vector<std::vector<int>> k_sets;
  for (auto& k : SubsetsBySizeThenLex(n)) {
    const ExponentSet set = ExponentSet::Create(n, k);
    if (set.IsZeroOne() || !LinearizedIsBijective(ctx, set)) continue;
    if (options.validation.require_irreducible &&
        !IsIrreducibleOver(ctx, KernelPolynomial(ctx, set)).irreducible) {
      continue;
    }
    k_sets.push_back(std::move(k));
  }
  std::vector<std::pair<int, int>> pairs;  // (t, s)
  for (int t = 0; t < n; ++t) {
    for (int s = t + 1; s < n; ++s) {
      if (std::gcd(s - t, n) == 1) pairs.emplace_back(t, s);
    }
  }
  std::vector<std::tuple<std::size_t, int, int>> combos;  // (K index, t, s)
  for (std::size_t k = 0; k < k_sets.size(); ++k) {
    for (auto [t, s] : pairs) combos.emplace_back(k, t, s);
  }
  std::mt19937_64 rng(seed);
  if (seed != 0) {
    for (std::size_t i = combos.size(); i > 1; --i) std::swap(combos[i - 1], combos[Below(rng, i)]);
  }

  std::vector<FieldElem> order;
  if (options.prefer_primitive) {
    for (std::uint32_t v = 1; v < ctx.size(); ++v) {
      if (ctx.IsPrimitive(FieldElem(v))) order.emplace_back(v);
    }
    for (std::uint32_t v = 1; v < ctx.size(); ++v) {
      if (!ctx.IsPrimitive(FieldElem(v))) order.emplace_back(v);
    }
  } else {
    for (std::uint32_t v = 1; v < ctx.size(); ++v) order.emplace_back(v);
  }
  std::vector<FieldElem> unit_circle;  // d^(q+1) = 1
  for (std::uint32_t v = 1; v < ctx.size(); ++v) {
    if (ctx.Pow(FieldElem(v), q + 1).IsOne()) unit_circle.emplace_back(v);
  }

  for (const auto& [k_index, t, s] : combos) {
    if (out.size() >= budget) break;
    FamilyParams p;
    p.family = family;
    p.m = m;
    p.s = s;
    p.t = t;
    p.k_set = k_sets[k_index];
    p.r.assign(static_cast<std::size_t>(m - 1), kZero);
    const std::uint64_t e = PairExponent(ctx, s, t);

    auto d_ok = [&](FieldElem d) {
      if (ctx.IsEthPower(d, e)) return false;
      FamilyParams probe = p;
      probe.d = d;
      return !(options.validation.require_kernel_coefficient && KernelCoefficientCanVanish(ctx, probe));
    };
    const std::vector<FieldElem>& d_pool = family == Family::kThm1 ? order : unit_circle;
    auto d_it = std::find_if(d_pool.begin(), d_pool.end(), d_ok);
    if (d_it == d_pool.end()) continue;
    p.d = *d_it;

    auto c_ok = [&](FieldElem c) {
      if (family == Family::kThm1) return !ctx.InSubfield(c, m);
      return !(c + ctx.Mul(p.d, ctx.Frobenius(c, m))).IsZero();
    };
    auto c_it = std::find_if(order.begin(), order.end(), c_ok);
    if (c_it == order.end()) continue;
    p.c = *c_it;

    if (seed != 0) {
      if (family == Family::kThm1) {
        for (auto& rk : p.r) {
          const FieldElem y(static_cast<std::uint32_t>(Below(rng, ctx.size())));
          rk = y + ctx.Frobenius(y, m);  // relative trace, uniform on GF(q)
        }
      } else {
        std::vector<FieldElem> coupled{kZero};
        for (std::uint32_t v = 1; v < ctx.size(); ++v) {
          if (ctx.Mul(p.d, ctx.Pow(FieldElem(v), q - 1)).IsOne()) coupled.emplace_back(v);
        }
        for (auto& rk : p.r) rk = coupled[Below(rng, coupled.size())];
      }
    }
    if (options.validation.require_nonzero_r && m > 1 &&
        std::any_of(p.r.begin(), p.r.end(), [](FieldElem v) { return v.IsZero(); })) {
      continue;
    }
    if (Validate(ctx, p, options.validation).empty()) out.push_back(std::move(p));
  }
  return out;
}

IdentityCheckResult ProofIdentityCheck(const FieldCtx& ctx, const FamilyParams& p,
                                       const IdentityOptions& options) {
  if (ctx.degree() != 2 * p.m) throw Error(ErrorCode::kDegreeMismatch, "field degree differs from 2m");
  RequireExhaustive(ctx, "proof identity check");
  const int m = p.m;
  const TruthTable f = TruthTable::FromMultinomial(Assemble(ctx, p));
  const bool thm1 = p.family == Family::kThm1;
  // F + w F^q with w = 1 (thm1) or d (thm2); the constant is c + w c^q.
  const FieldElem w = thm1 ? kOne : p.d;
  const FieldElem lead = p.c + ctx.Mul(w, ctx.Frobenius(p.c, m));
  auto twist = [&](FieldElem y) { return y + ctx.Mul(w, ctx.Frobenius(y, m)); };

  IdentityCheckResult result;
  result.global_form_holds = true;
  for (std::uint32_t v = 0; v < ctx.size(); ++v) {
    const FieldElem x(v);
    const FieldElem rhs = ctx.Mul(lead, ctx.Mul(ctx.Frobenius(x, m), x));
    if (twist(f[x]) != rhs) {
      result.global_form_holds = false;
      break;
    }
  }

  auto pair_holds = [&](FieldElem x, FieldElem a) {
    const FieldElem big_f = f[x] + f[x + a] + f[a];
    const FieldElem cross = ctx.Mul(ctx.Frobenius(x, m), a) + ctx.Mul(x, ctx.Frobenius(a, m));
    return twist(big_f) == ctx.Mul(lead, cross);
  };

  result.pair_form_holds = true;
  const std::uint64_t size = ctx.size();
  const std::uint64_t all_pairs = size * (size - 1);
  if (!options.trials || *options.trials >= all_pairs) {
    for (std::uint32_t a = 1; a < size && result.pair_form_holds; ++a) {
      for (std::uint32_t x = 0; x < size; ++x) {
        ++result.pairs_checked;
        if (!pair_holds(FieldElem(x), FieldElem(a))) {
          result.pair_form_holds = false;
          result.counterexample = {FieldElem(x), FieldElem(a)};
          break;
        }
      }
    }
  } else {
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t i = 0; i < *options.trials; ++i) {
      const FieldElem x(static_cast<std::uint32_t>(Below(rng, size)));
      const FieldElem a(static_cast<std::uint32_t>(1 + Below(rng, size - 1)));
      ++result.pairs_checked;
      if (!pair_holds(x, a)) {
        result.pair_form_holds = false;
        result.counterexample = {x, a};
        break;
      }
    }
  }
  result.holds = result.global_form_holds && result.pair_form_holds;
  return result;
}

}  // namespace crooked
