#include "supercong/padic_gamma.hpp"

#include <cstdint>

namespace supercong {

GammaContext::GammaContext(Integer p, unsigned M) : p_(std::move(p)), M_(M) {
  require_odd_prime(p_);
  if (M_ == 0) throw InvalidParameters("precision M must be positive");
  pM_ = pow_int(p_, M_);
  fits_u64_ = mpz_fits_ulong_p(pM_.get_mpz_t()) &&
              pM_ < Integer("4611686018427387904");  // 2^62
}

namespace {

// walk j in (from, to], multiplying in units, 64-bit modulus
std::uint64_t walk_u64(std::uint64_t acc, std::uint64_t from, std::uint64_t to,
                       std::uint64_t p, std::uint64_t mod) {
  for (std::uint64_t j = from + 1; j <= to; ++j) {
    if (j % p == 0) continue;
    acc = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(acc) * (j % mod)) % mod);
  }
  return acc;
}

Integer walk_mpz(Integer acc, const Integer& from, const Integer& to,
                 const Integer& p, const Integer& mod) {
  for (Integer j = from + 1; j <= to; ++j) {
    if (mpz_divisible_p(j.get_mpz_t(), p.get_mpz_t())) continue;
    acc = acc * j % mod;
  }
  return acc;
}

}  // namespace

Integer GammaContext::prefix_product(const Integer& n) const {
  // P(n) = prod_{0<j<n, p !| j} j mod p^M
  std::lock_guard<std::mutex> lock(mu_);
  Integer start(1), acc(1);
  auto it = memo_.upper_bound(n);
  if (it != memo_.begin()) {
    --it;
    start = it->first;
    acc = it->second;
  }
  if (start == n) return acc;
  if (fits_u64_) {
    acc = Integer(static_cast<unsigned long>(
        walk_u64(acc.get_ui(), start.get_ui() - 1, n.get_ui() - 1,
                 p_.get_ui(), pM_.get_ui())));
  } else {
    acc = walk_mpz(acc, start - 1, n - 1, p_, pM_);
  }
  memo_[n] = acc;
  return acc;
}

Residue GammaContext::gamma_int(const Integer& n) const {
  if (n < 1 || n > pM_)
    throw OutOfRange("gamma_int argument " + n.get_str() +
                     " outside [1, p^M = " + pM_.get_str() + "]");
  Integer prod = prefix_product(n);
  bool odd = mpz_odd_p(n.get_mpz_t());
  return Residue(p_, M_, odd ? Integer(-prod) : prod);
}

Residue GammaContext::gamma_rational(const Rational& x) const {
  Valuation v = vp(x, p_);
  if (!v.is_infinite() && v.value() < 0)
    throw NotPIntegral("gamma_rational at " + x.get_str() + " with vp = " +
                       v.str());
  Integer rep;
  if (x == 0) {
    rep = pM_;
  } else {
    Residue rx = rational_to_residue(x, p_, M_);
    rep = rx.value() == 0 ? pM_ : rx.value();
  }
  return gamma_int(rep);
}

A0Witness a0(const Rational& x, const Integer& p) {
  Valuation v = vp(x, p);
  if (!v.is_infinite() && v.value() < 0)
    throw NotPIntegral("a0 at " + x.get_str() + " with vp = " + v.str());
  Residue rx = rational_to_residue(x, p, 1);
  Integer a = rx.value() == 0 ? p : rx.value();
  return {x, a};
}

GammaIdentityReport check_gamma_identities(const GammaContext& ctx,
                                           const std::vector<Rational>& xs) {
  GammaIdentityReport report{{}, true};
  const Integer& p = ctx.p();
  for (const Rational& x : xs) {
    GammaIdentitySample s{x, false, false, false};

    Residue gx = ctx.gamma_rational(x);
    Residue gx1 = ctx.gamma_rational(x + 1);
    Residue ratio = gx1 * gx.inverse();
    Valuation vx = vp(x, p);
    if (!vx.is_infinite() && vx.value() == 0) {
      s.functional_ok = ratio == rational_to_residue(-x, p, ctx.M());
    } else {
      s.functional_ok = ratio == Residue(p, ctx.M(), -1);
    }

    Residue refl = gx * ctx.gamma_rational(1 - x);
    A0Witness w = a0(x, p);
    int sign = mpz_odd_p(w.a0.get_mpz_t()) ? -1 : 1;
    s.reflection_ok = refl == Residue(p, ctx.M(), sign);

    Residue gy = ctx.gamma_rational(x + p);
    s.mod_p_ok = gx.reduce(1) == gy.reduce(1);

    report.all_ok =
        report.all_ok && s.functional_ok && s.reflection_ok && s.mod_p_ok;
    report.samples.push_back(std::move(s));
  }
  return report;
}

}  // namespace supercong
