#include "supercong/wz_certificate.hpp"

#include "supercong/errors.hpp"
#include "supercong/pochhammer.hpp"

namespace supercong {

namespace {

const Rational kQuarter(1, 4);

Rational sign_pm(long e, Rational v) { return (e % 2 != 0) ? Rational(-v) : v; }

}  // namespace

Rational eval_F(long n, long k) {
  if (n < 0 || k < 0) throw OutOfRange("eval_F: n, k must be non-negative");
  Rational gap = reciprocal_rising_one(n - k);
  if (gap == 0) return 0;
  Rational qn = rising(kQuarter, n);
  Rational val = Rational(8 * n + 1) * qn * qn * rising(kQuarter, n + k);
  val *= reciprocal_rising_one(n);
  val *= reciprocal_rising_one(n);
  val *= gap;
  Rational qk = rising(kQuarter, k);
  val /= qk * qk;
  return sign_pm(n + k, val);
}

Rational eval_G(long n, long k) {
  if (n < 0 || k < 0) throw OutOfRange("eval_G: n, k must be non-negative");
  if (n == 0 || k > n) return 0;
  Rational qn = rising(kQuarter, n);
  Rational val = 4 * qn * qn * rising(kQuarter, n + k - 1);
  val *= reciprocal_rising_one(n - 1);
  val *= reciprocal_rising_one(n - 1);
  val *= reciprocal_rising_one(n - k);
  Rational qk = rising(kQuarter, k);
  val /= qk * qk;
  return sign_pm(n + k, val);
}

TelescopingReport check_telescoping_grid(long n_max, long k_max) {
  if (n_max < 1 || k_max < 1)
    throw InvalidParameters("check_telescoping_grid: grid bounds must be >= 1");
  TelescopingReport rep;
  rep.n_max = n_max;
  rep.k_max = k_max;
  for (long n = 0; n <= n_max; ++n) {
    for (long k = 1; k <= k_max; ++k) {
      Rational lhs = eval_F(n, k - 1) - eval_F(n, k);
      Rational rhs = eval_G(n + 1, k) - eval_G(n, k);
      if (lhs != rhs) rep.violations.push_back({n, k});
    }
  }
  return rep;
}

namespace {

struct Ratio {
  BivarPoly num;
  BivarPoly den;
};

// R1 - 1 - R2 + R3 over the common denominator D = (n+k-3/4)(n-k+1)(8n+1).
void build_certificate(Ratio& r1, Ratio& r2, Ratio& r3, BivarPoly& cleared) {
  BivarPoly n = BivarPoly::var_n();
  BivarPoly k = BivarPoly::var_k();
  BivarPoly one = BivarPoly::constant(1);
  BivarPoly a = k - BivarPoly::constant(Rational(3, 4));      // k - 3/4
  BivarPoly b = n + k - BivarPoly::constant(Rational(3, 4));  // n + k - 3/4
  BivarPoly c = n - k + one;                                  // n - k + 1
  BivarPoly e = BivarPoly::constant(8) * n + one;             // 8n + 1
  BivarPoly q = n + BivarPoly::constant(Rational(1, 4));      // n + 1/4

  r1 = {-(a * a), b * c};
  r2 = {BivarPoly::constant(-4) * q * q, e * c};
  r3 = {BivarPoly::constant(4) * n * n, b * e};

  BivarPoly d = b * c * e;
  cleared = r1.num * e - d + BivarPoly::constant(4) * q * q * b +
            BivarPoly::constant(4) * n * n * c;
}

}  // namespace

RatioCertificateReport check_ratio_certificate() {
  Ratio r1, r2, r3;
  RatioCertificateReport rep;
  build_certificate(r1, r2, r3, rep.difference);
  rep.polynomial_zero = rep.difference.is_zero();

  auto eval_ratio = [](const Ratio& rat, const Rational& n, const Rational& k) {
    Rational den = rat.den.eval(n, k);
    if (den == 0) throw DegenerateDenominator("certificate ratio pole");
    return Rational(rat.num.eval(n, k) / den);
  };

  rep.numeric_ok = true;
  for (long n = 1; n <= 12 && rep.numeric_ok; ++n) {
    for (long k = 1; k <= n + 1; ++k) {
      Rational nn(n), kk(k);
      Rational f = eval_F(n, k);
      try {
        if (f == 0) throw DegenerateDenominator("F vanishes");
        bool ok1 = eval_F(n, k - 1) == eval_ratio(r1, nn, kk) * f;
        bool ok2 = eval_G(n + 1, k) == eval_ratio(r2, nn, kk) * f;
        bool ok3 = eval_G(n, k) == eval_ratio(r3, nn, kk) * f;
        if (ok1 && ok2 && ok3) {
          ++rep.points_checked;
        } else {
          rep.numeric_ok = false;
          break;
        }
      } catch (const DegenerateDenominator&) {
        ++rep.points_skipped;
      }
    }
  }
  if (rep.points_checked < 50) rep.numeric_ok = false;
  return rep;
}

Lemma32Report check_lemma32(const Integer& p, unsigned r) {
  require_odd_prime(p);
  if (p % 4 != 3) throw InvalidParameters("check_lemma32: requires p ≡ 3 mod 4");
  if (r < 3 || r % 2 == 0)
    throw InvalidParameters("check_lemma32: requires odd r >= 3");

  Lemma32Report rep;
  rep.p = p;
  rep.r = r;
  Integer pr = pow_int(p, r);
  Integer m_big = (pr - 3) / 4;
  if (!m_big.fits_slong_p())
    throw OutOfRange("check_lemma32: (p^r-3)/4 too large for exact scan");
  long m = m_big.get_si();
  rep.k_max = m;
  rep.bound = 3L * (r - 1) / 2;

  long n = m + 1;  // (p^r+1)/4
  Rational g = eval_G(n, 1);
  bool first = true;
  for (long k = 1; k <= m; ++k) {
    if (k > 1) {
      // G(n,k)/G(n,k-1) = -(n+k-1-3/4)(n-k+1)/(k-1+1/4)^2
      Rational num = Rational(4 * (n + k - 1) - 3, 4) * Rational(n - k + 1);
      Rational den = Rational(4 * (k - 1) + 1, 4);
      g *= -num / (den * den);
    }
    Valuation v = vp(g, p);
    long vk = v.value();  // g never vanishes here (k <= m < n)
    if (first || vk < rep.min_valuation) {
      rep.min_valuation = vk;
      rep.argmin_k = k;
      first = false;
    }
    if (vk < rep.bound) rep.violations.push_back({k, vk});
  }
  rep.ok = rep.min_valuation >= rep.bound;
  rep.tight = rep.min_valuation == rep.bound;
  return rep;
}

LeastIndexReport check_least_p_factor_indices(const Integer& p, unsigned r) {
  require_odd_prime(p);
  if (p % 4 != 3)
    throw InvalidParameters("check_least_p_factor_indices: requires p ≡ 3 mod 4");
  if (r < 1) throw InvalidParameters("check_least_p_factor_indices: r >= 1");

  LeastIndexReport rep;
  rep.p = p;
  rep.r = r;
  Integer pr = pow_int(p, r);
  auto least_j = [&](const Rational& base) -> long {
    Rational x = base;
    long limit = p.get_si() + 1;
    for (long i = 0; i <= limit; ++i) {
      if (vp(x, p) >= 1) return i + 1;
      x += 1;
    }
    throw Error("least_j: no p-divisible element within one period");
  };
  rep.j1 = least_j(Rational(pr - 2) / 4);
  rep.j2 = least_j(Rational(-1 - pr) / 4);
  rep.j3 = least_j(Rational(1, 4));
  long pl = p.get_si();
  rep.j1_formula = (pl + 3) / 2;
  rep.j2_formula = (pl + 5) / 4;
  rep.j3_formula = (3 * pl + 3) / 4;
  rep.formulas_match = rep.j1 == rep.j1_formula && rep.j2 == rep.j2_formula &&
                       rep.j3 == rep.j3_formula;
  rep.j1_lt_j3 = rep.j1 < rep.j3;
  rep.j2_lt_j3 = rep.j2 < rep.j3;
  return rep;
}

Lemma33Report check_lemma33(const Integer& p, unsigned r, unsigned M) {
  require_odd_prime(p);
  if (p % 4 != 3) throw InvalidParameters("check_lemma33: requires p ≡ 3 mod 4");
  if (r < 3 || r % 2 == 0)
    throw InvalidParameters("check_lemma33: requires odd r >= 3");
  if (M < r) throw InvalidParameters("check_lemma33: requires M >= r");

  Lemma33Report rep;
  rep.p = p;
  rep.r = r;
  rep.M = M;
  Integer pr = pow_int(p, r);
  Integer m_big = (pr - 3) / 4;
  if (!m_big.fits_slong_p())
    throw OutOfRange("check_lemma33: (p^r-3)/4 too large for exact evaluation");
  rep.m = m_big.get_si();

  rep.lhs = eval_F(rep.m, rep.m);
  if (!(vp(rep.lhs, p) >= 0))
    throw NegativeValuation("check_lemma33: F(m,m) is not p-integral");

  Rational fac = reciprocal_rising_one(rep.m);
  Rational step = Rational(2 * pr - 5) * rising(kQuarter, 2 * rep.m) * fac * fac;
  rep.proof_step_ok = rep.lhs == step;

  GammaContext ctx(p, M);
  Residue g34 = ctx.gamma_rational(Rational(3, 4));
  Residue g14 = ctx.gamma_rational(kQuarter);
  Residue unit = g34 * (g14 * g14 * g14).inverse();
  rep.rhs_lift = Rational(-16) * Rational(unit.value()) * Rational(pow_int(p, r - 1));
  rep.residual = vp(rep.lhs - rep.rhs_lift, p);
  rep.congruent = rep.residual >= static_cast<long>(r);
  return rep;
}

}  // namespace supercong
