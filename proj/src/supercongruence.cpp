#include "supercong/supercongruence.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "supercong/errors.hpp"
#include "supercong/padic_gamma.hpp"

namespace supercong {

Rational sum_S_general(unsigned d, long m) {
  if (d < 2) throw InvalidParameters("sum_S_general: requires d >= 2");
  if (m < 0) throw InvalidParameters("sum_S_general: requires m >= 0");
  const Integer dz = d;
  const Integer d3 = dz * dz * dz;
  Rational term = 1;
  Rational acc = 1;
  for (long n = 1; n <= m; ++n) {
    Integer a = 2 * dz * n + 1;
    Integer b = 2 * dz * (n - 1) + 1;
    Integer c = 1 + dz * (n - 1);
    Rational ratio(a * c * c * c);
    ratio /= Rational(b * d3 * Integer(n) * n * n);
    term *= ratio;
    term = -term;
    acc += term;
  }
  return acc;
}

Rational sum_S(long m) { return sum_S_general(4, m); }

ValuedNumber sum_S_modular(unsigned d, long m, const Integer& p, unsigned M) {
  require_odd_prime(p);
  if (d < 2) throw InvalidParameters("sum_S_modular: requires d >= 2");
  if (m < 0) throw InvalidParameters("sum_S_modular: requires m >= 0");
  if (M == 0) throw InvalidParameters("sum_S_modular: requires M >= 1");
  const Integer dz = d;
  if (mpz_divisible_p(dz.get_mpz_t(), p.get_mpz_t()))
    throw NotPIntegral("sum_S_modular: 1/d is not p-integral");

  const unsigned W = 2 * M;
  const Integer pW = pow_int(p, W);
  const Integer d3 = dz * dz * dz;

  auto strip = [&](const Integer& x, long& v) {
    Integer unit;
    v += static_cast<long>(
        mpz_remove(unit.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
    return unit;
  };
  auto inv = [&](const Integer& u) {
    Integer out;
    if (!mpz_invert(out.get_mpz_t(), u.get_mpz_t(), pW.get_mpz_t()))
      throw NonInvertible("sum_S_modular: non-unit in term update");
    return out;
  };

  long tv = 0;     // valuation of the current term
  Integer tu = 1;  // its unit mod p^W
  long v0 = 0;     // window base: sum = p^{v0} * (acc + O(p^W))
  Integer acc = 1;

  for (long n = 1; n <= m; ++n) {
    Integer a = 2 * dz * n + 1;
    Integer b = 2 * dz * (n - 1) + 1;
    Integer c = 1 + dz * (n - 1);
    long num_v = 0, den_v = 0, cv = 0, nv = 0;
    Integer au = strip(a, num_v);
    Integer cu = strip(c, cv);
    Integer bu = strip(b, den_v);
    Integer nu = strip(n, nv);
    num_v += 3 * cv;
    den_v += 3 * nv;

    Integer num = au * cu % pW;
    num = num * cu % pW;
    num = num * cu % pW;
    Integer den = bu * d3 % pW;
    den = den * nu % pW;
    den = den * nu % pW;
    den = den * nu % pW;

    tu = tu * num % pW;
    tu = tu * inv(den) % pW;
    tu = pW - tu;  // the (-1)^n flip; tu is a unit, never 0
    tv += num_v - den_v;

    if (tv >= v0) {
      long shift = tv - v0;
      if (shift < static_cast<long>(W))
        acc = (acc + tu * pow_int(p, shift)) % pW;
    } else {
      long shift = v0 - tv;
      if (shift < static_cast<long>(W))
        acc = (acc * pow_int(p, shift) + tu) % pW;
      else
        acc = tu;
      v0 = tv;
    }
  }

  if (acc == 0)
    throw PrecisionLoss(
        "sum_S_modular: cancellation swallowed the whole 2M-digit window; "
        "raise M");
  long e = vp_int(acc, p);
  if (e > static_cast<long>(M))
    throw PrecisionLoss(
        "sum_S_modular: cancellation consumed more than M guard digits; "
        "raise M");
  Integer unit = acc / pow_int(p, e) % pow_int(p, M);
  return ValuedNumber(p, M, v0 + e, unit);
}

namespace {

// Exact-rational lift of the sum: the canonical representative when the
// modular window is used, the sum itself otherwise.
Rational sum_lift(unsigned d, const Integer& m, const Integer& p, unsigned M) {
  if (!m.fits_slong_p())
    throw OutOfRange("truncation index does not fit a machine word");
  long ml = m.get_si();
  if (ml <= kExactPathLimit) return sum_S_general(d, ml);
  return sum_S_modular(d, ml, p, M).reassemble();
}

std::string sum_desc(unsigned d, const Integer& m) {
  std::string s = d == 4 ? "S(" : "S_" + std::to_string(d) + "(";
  return s + m.get_str() + ")";
}

Rational gamma_pair_inverse_lift(const Integer& p, unsigned M) {
  GammaContext ctx(p, M);
  Residue g =
      ctx.gamma_rational(Rational(1, 4)) * ctx.gamma_rational(Rational(3, 4));
  return Rational(g.inverse().value());
}

Rational gamma_ratio_lift(const Integer& p, unsigned M) {
  GammaContext ctx(p, M);
  Residue g14 = ctx.gamma_rational(Rational(1, 4));
  Residue g34 = ctx.gamma_rational(Rational(3, 4));
  return Rational((g34 * (g14 * g14 * g14).inverse()).value());
}

using Params = ClaimParams;
using RhsBuilder =
    std::function<Rational(const Params&, unsigned M, std::string& desc)>;

struct ClaimDef {
  ClaimId id;
  const char* name;
  std::function<void(const Params&)> validate;
  std::function<Integer(const Params&)> truncation;
  std::function<unsigned(const Params&)> modulus;
  RhsBuilder rhs;
};

void req(bool cond, const char* msg) {
  if (!cond) throw InvalidParameters(msg);
}

void req_d4(const Params& q) {
  req(q.d == 4, "claim is about the d = 4 series; omit --d or pass 4");
}

std::vector<ClaimDef> build_registry() {
  std::vector<ClaimDef> defs;

  defs.push_back(
      {ClaimId::F1, "f1",
       [](const Params& q) {
         req(q.p % 4 == 1, "f1: requires p ≡ 1 mod 4");
         req(q.r == 1, "f1: r is implicitly 1");
         req_d4(q);
       },
       [](const Params& q) { return Integer((q.p - 1) / 4); },
       [](const Params&) { return 3u; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         desc = "-p/(Gamma_p(1/4) Gamma_p(3/4))";
         return Rational(-q.p) * gamma_pair_inverse_lift(q.p, M);
       }});

  defs.push_back(
      {ClaimId::F3, "f3",
       [](const Params& q) {
         req(q.p % 4 == 3, "f3: requires p ≡ 3 mod 4");
         req(q.r == 1, "f3: r is implicitly 1");
         req_d4(q);
       },
       [](const Params& q) { return Integer((3 * q.p - 1) / 4); },
       [](const Params&) { return 3u; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         desc = "-3p/(Gamma_p(1/4) Gamma_p(3/4))";
         return Rational(-3 * q.p) * gamma_pair_inverse_lift(q.p, M);
       }});

  defs.push_back(
      {ClaimId::GUO_F2, "guo-f2",
       [](const Params& q) {
         req(q.d >= 2, "guo-f2: requires d >= 2");
         req(q.r >= 1, "guo-f2: requires r >= 1");
         req(pow_int(q.p, q.r) % q.d == 1, "guo-f2: requires p^r ≡ 1 mod d");
       },
       [](const Params& q) {
         return Integer((pow_int(q.p, q.r) - 1) / q.d);
       },
       [](const Params& q) { return q.r + 2; },
       [](const Params& q, unsigned, std::string& desc) -> Rational {
         desc = "(-1)^m p^r";
         Integer m = (pow_int(q.p, q.r) - 1) / q.d;
         Rational rhs(pow_int(q.p, q.r));
         return mpz_odd_p(m.get_mpz_t()) ? Rational(-rhs) : rhs;
       }});

  defs.push_back(
      {ClaimId::GUO_F4, "guo-f4",
       [](const Params& q) {
         req(q.d >= 2, "guo-f4: requires d >= 2");
         req(q.r >= 1, "guo-f4: requires r >= 1");
         req(pow_int(q.p, q.r) % q.d == q.d - 1,
             "guo-f4: requires p^r ≡ -1 mod d");
       },
       [](const Params& q) {
         return Integer(((q.d - 1) * pow_int(q.p, q.r) - 1) / q.d);
       },
       [](const Params& q) { return q.r + 2; },
       [](const Params& q, unsigned, std::string& desc) -> Rational {
         desc = "(-1)^m (d-1) p^r";
         Integer m = ((q.d - 1) * pow_int(q.p, q.r) - 1) / q.d;
         Rational rhs((q.d - 1) * pow_int(q.p, q.r));
         return mpz_odd_p(m.get_mpz_t()) ? Rational(-rhs) : rhs;
       }});

  defs.push_back(
      {ClaimId::SWISHER_F3_CASE1, "swisher-f3-case1",
       [](const Params& q) {
         req(q.p % 4 == 1, "swisher-f3-case1: requires p ≡ 1 mod 4");
         req(q.r >= 1, "swisher-f3-case1: requires r >= 1");
         req_d4(q);
       },
       [](const Params& q) {
         return Integer((pow_int(q.p, q.r) - 1) / 4);
       },
       [](const Params& q) { return 3 * q.r; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         Integer m2 = (pow_int(q.p, q.r - 1) - 1) / 4;
         desc = "(-1)^((p^2-1)/8) p " + sum_desc(4, m2);
         Integer e = (q.p * q.p - 1) / 8;
         Rational rhs = Rational(q.p) * sum_lift(4, m2, q.p, M);
         return mpz_odd_p(e.get_mpz_t()) ? Rational(-rhs) : rhs;
       }});

  defs.push_back(
      {ClaimId::SWISHER_F3_CASE2, "swisher-f3-case2",
       [](const Params& q) {
         req(q.p % 4 == 3, "swisher-f3-case2: requires p ≡ 3 mod 4");
         req(q.r >= 2 && q.r % 2 == 0, "swisher-f3-case2: requires even r >= 2");
         req_d4(q);
       },
       [](const Params& q) {
         return Integer((pow_int(q.p, q.r) - 1) / 4);
       },
       [](const Params& q) { return 3 * q.r - 2; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         Integer m2 = (pow_int(q.p, q.r - 2) - 1) / 4;
         desc = "p^2 " + sum_desc(4, m2);
         return Rational(q.p * q.p) * sum_lift(4, m2, q.p, M);
       }});

  defs.push_back(
      {ClaimId::SWISHER_F3_CASE3, "swisher-f3-case3",
       [](const Params& q) {
         req(q.p % 4 == 3, "swisher-f3-case3: requires p ≡ 3 mod 4");
         req(q.r >= 3 && q.r % 2 == 1, "swisher-f3-case3: requires odd r >= 3");
         req_d4(q);
       },
       [](const Params& q) {
         return Integer((pow_int(q.p, q.r) - 3) / 4);
       },
       [](const Params& q) { return q.r; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         Integer m2 = (pow_int(q.p, q.r - 2) - 3) / 4;
         desc = "p^2 " + sum_desc(4, m2);
         return Rational(q.p * q.p) * sum_lift(4, m2, q.p, M);
       }});

  defs.push_back(
      {ClaimId::THM_1_1, "thm-1-1",
       [](const Params& q) {
         req(q.p % 4 == 3, "thm-1-1: requires p ≡ 3 mod 4");
         req(q.r > 1 && q.r % 2 == 1, "thm-1-1: requires odd r > 1");
         req_d4(q);
       },
       [](const Params& q) {
         return Integer((pow_int(q.p, q.r) - 3) / 4);
       },
       [](const Params& q) { return q.r; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         desc = "-16 Gamma_p(3/4)/Gamma_p(1/4)^3 p^(r-1)";
         return Rational(-16) * Rational(pow_int(q.p, q.r - 1)) *
                gamma_ratio_lift(q.p, M);
       }});

  defs.push_back(
      {ClaimId::THM_1_2, "thm-1-2",
       [](const Params& q) {
         req(q.p % 4 == 3, "thm-1-2: requires p ≡ 3 mod 4");
         req(q.r > 3 && q.r % 2 == 1, "thm-1-2: requires odd r > 3");
         req_d4(q);
       },
       [](const Params& q) {
         return Integer((pow_int(q.p, q.r) - 3) / 4);
       },
       [](const Params& q) { return q.r; },
       [](const Params& q, unsigned M, std::string& desc) -> Rational {
         Integer m2 = (pow_int(q.p, q.r - 2) - 3) / 4;
         desc = "p^2 " + sum_desc(4, m2);
         return Rational(q.p * q.p) * sum_lift(4, m2, q.p, M);
       }});

  return defs;
}

const std::vector<ClaimDef>& registry() {
  static const std::vector<ClaimDef> defs = build_registry();
  return defs;
}

const ClaimDef& def_for(ClaimId id) {
  for (const auto& def : registry())
    if (def.id == id) return def;
  throw Error("claim registry is missing an id");
}

}  // namespace

std::string claim_name(ClaimId id) { return def_for(id).name; }

ClaimId parse_claim(const std::string& s) {
  for (const auto& def : registry())
    if (s == def.name) return def.id;
  throw ParseError("unknown claim: " + s);
}

void validate_claim_params(ClaimId id, const ClaimParams& params) {
  require_odd_prime(params.p);
  def_for(id).validate(params);
}

bool claim_params_admissible(ClaimId id, const ClaimParams& params) {
  try {
    validate_claim_params(id, params);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ClaimReport verify_claim(ClaimId id, const ClaimParams& params,
                         std::optional<unsigned> precision) {
  const ClaimDef& def = def_for(id);
  validate_claim_params(id, params);

  ClaimReport rep;
  rep.claim = id;
  rep.p = params.p;
  rep.r = params.r;
  rep.d = params.d;
  rep.m = def.truncation(params);
  rep.modulus_exp = def.modulus(params);
  rep.precision = precision.value_or(rep.modulus_exp + 2);
  if (rep.precision < rep.modulus_exp + 2)
    throw InvalidParameters("precision must be at least modulus exponent + 2, got " +
                            std::to_string(rep.precision));
  rep.lhs = sum_desc(params.d, rep.m);

  auto t0 = std::chrono::steady_clock::now();
  try {
    Rational lhs = sum_lift(params.d, rep.m, params.p, rep.precision);
    Rational rhs = def.rhs(params, rep.precision, rep.rhs);
    rep.residual = vp(lhs - rhs, params.p);
    rep.pass = rep.residual >= static_cast<long>(rep.modulus_exp);
  } catch (const NegativeValuation& e) {
    rep.pass = false;
    rep.errored = true;
    rep.note = e.what();
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ArchimedeanReport archimedean_sanity(long m, double tolerance) {
  if (m < 1) throw InvalidParameters("archimedean_sanity: requires m >= 1");
  ArchimedeanReport rep;
  rep.m = m;
  rep.tolerance = tolerance;
  rep.target = 2.0 * std::numbers::sqrt2 / std::numbers::pi;
  double term = 1.0;
  double acc = 1.0;
  for (long n = 1; n <= m; ++n) {
    double nn = static_cast<double>(n);
    double c = 4.0 * nn - 3.0;
    term *= -(8.0 * nn + 1.0) * c * c * c /
            ((8.0 * nn - 7.0) * 64.0 * nn * nn * nn);
    acc += term;
  }
  rep.value = acc;
  rep.error = std::abs(acc - rep.target);
  rep.pass = rep.error < tolerance;
  return rep;
}

}  // namespace supercong
