#include "supercong/pochhammer.hpp"

namespace supercong {

Rational rising(const Rational& a, unsigned long n) {
  Rational out(1);
  Rational term(a);
  for (unsigned long i = 0; i < n; ++i) {
    out *= term;
    term += 1;
  }
  return out;
}

Rational reciprocal_rising_one(long m) {
  if (m < 0) return Rational(0);
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
  return Rational(1) / Rational(fact);
}

RisingSeries::RisingSeries(Rational a) : a_(std::move(a)) {
  prefix_.push_back(Rational(1));
}

const Rational& RisingSeries::at(unsigned long n) {
  while (prefix_.size() <= n) {
    unsigned long i = prefix_.size() - 1;
    prefix_.push_back(prefix_.back() * (a_ + Rational(static_cast<long>(i))));
  }
  return prefix_[n];
}

PFactorDecomposition p_factor_decompose(const Rational& a, unsigned long n,
                                        const GammaContext& ctx) {
  const Integer& p = ctx.p();
  Valuation va = vp(a, p);
  if (!va.is_infinite() && va.value() < 0)
    throw NotPIntegral("p_factor_decompose base " + a.get_str());

  PFactorDecomposition out{a, n, p, Rational(1), {}, false};
  Rational elem = a;
  Rational value(1);
  bool has_zero = false;
  for (unsigned long i = 0; i < n; ++i) {
    Valuation ve = vp(elem, p);
    if (ve.is_infinite() || ve.value() > 0) {
      out.A *= elem;
      out.indices.push_back(i);
      has_zero = has_zero || ve.is_infinite();
    }
    value *= elem;
    elem += 1;
  }
  if (has_zero) {
    // both sides vanish with the zero element
    out.cofactor_check = true;
    return out;
  }

  // unit cofactor of (a)_n / ((-1)^n A) against Gamma_p(a+n)/Gamma_p(a)
  Rational cof = value / out.A;
  if (n % 2 == 1) cof = -cof;
  Residue lhs = rational_to_residue(cof, p, ctx.M());
  Residue rhs = ctx.gamma_rational(a + Rational(static_cast<long>(n))) *
                ctx.gamma_rational(a).inverse();
  out.cofactor_check = lhs == rhs;
  return out;
}

std::pair<long, Rational> f_p_extract(const Rational& a, unsigned long n,
                                      const Integer& p) {
  Valuation va = vp(a, p);
  if (!va.is_infinite() && va.value() < 0)
    throw NotPIntegral("f_p_extract base " + a.get_str());
  long power = 0;
  Rational elem = a;
  Rational value(1);
  for (unsigned long i = 0; i < n; ++i) {
    Valuation ve = vp(elem, p);
    if (ve.is_infinite())
      throw InvalidParameters("rising factorial vanishes at index " +
                              std::to_string(i));
    if (ve.value() > 0) power += ve.value();
    value *= elem;
    elem += 1;
  }
  Rational deflated = value / Rational(pow_int(p, static_cast<unsigned long>(
                                                      power < 0 ? 0 : power)));
  return {power, deflated};
}

namespace {

unsigned long to_ul(const Integer& n) {
  if (!mpz_fits_ulong_p(n.get_mpz_t()))
    throw OutOfRange("index too large: " + n.get_str());
  return n.get_ui();
}

}  // namespace

Lemma23Report check_lemma23(const Integer& p, unsigned r, char which,
                            unsigned M) {
  require_odd_prime(p);
  if (p % 4 != 3) throw InvalidParameters("requires p = 3 (mod 4)");
  if (r < 3 || r % 2 == 0) throw InvalidParameters("requires odd r > 1");
  if (which != 'a' && which != 'b' && which != 'c')
    throw InvalidParameters("identity selector must be a, b, or c");

  Integer pr = pow_int(p, r);
  Integer pr1 = pow_int(p, r - 1);
  Integer pr2 = pow_int(p, r - 2);
  GammaContext ctx(p, M);

  Rational quarter(1, 4);
  Rational lhs;
  Integer exponent, sign_exp;
  Residue gam(p, M, 1);
  Rational cof(1);

  switch (which) {
    case 'a': {
      lhs = rising(quarter, to_ul((pr - 3) / 2)) /
            rising(quarter, to_ul((pr2 - 3) / 2));
      exponent = (pr1 + pr2) / 2;
      sign_exp = (pr + pr1 - 4) / 2;
      gam = ctx.gamma_rational(Rational(2 * pr - 5) / 4) *
            ctx.gamma_rational(quarter).inverse() *
            ctx.gamma_rational(Rational(2 * pr1 + 1) / 4) *
            ctx.gamma_rational(Rational(3, 4)).inverse();
      cof = (Rational(2 * pr2 - 5) / 4) * (Rational(2 * pr2 - 1) / 4);
      break;
    }
    case 'b': {
      lhs = rising(Rational(1), to_ul((pr - 3) / 4)) /
            rising(Rational(1), to_ul((pr2 - 3) / 4));
      exponent = (pr1 + pr2 - 4) / 4;
      sign_exp = (pr + pr1 - 4) / 4;
      gam = ctx.gamma_rational(Rational(pr + 1) / 4) *
            ctx.gamma_rational(Rational(pr1 + 3) / 4);
      break;
    }
    case 'c': {
      lhs = rising(quarter, to_ul((pr - 3) / 4)) /
            rising(quarter, to_ul((pr2 - 3) / 4));
      exponent = (pr1 + pr2) / 4;
      sign_exp = (pr + pr1 - 4) / 4;
      gam = ctx.gamma_rational(Rational(pr - 2) / 4) *
            ctx.gamma_rational(quarter).inverse() *
            ctx.gamma_rational(Rational(pr1 + 2) / 4) *
            ctx.gamma_rational(Rational(3, 4)).inverse();
      cof = Rational(pr2 - 2) / 4;
      break;
    }
  }

  Lemma23Report rep;
  rep.which = which;
  rep.p = p;
  rep.r = r;
  rep.M = M;
  rep.stated_exponent = static_cast<long>(to_ul(exponent));

  Valuation vl = vp(lhs, p);
  rep.lhs_valuation = vl.value();
  rep.valuation_ok = rep.lhs_valuation == rep.stated_exponent;

  Rational unit = lhs / Rational(pow_int(p, to_ul(exponent)));
  rep.lhs_unit = rational_to_residue(unit, p, M).value();

  Residue rhs = gam * rational_to_residue(cof, p, M);
  if (mpz_odd_p(sign_exp.get_mpz_t())) rhs = rhs.neg();
  rep.rhs_unit = rhs.value();
  rep.unit_ok = rep.lhs_unit == rep.rhs_unit;
  return rep;
}

}  // namespace supercong
