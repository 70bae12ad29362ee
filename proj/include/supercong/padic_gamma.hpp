#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "supercong/exact_arith.hpp"

namespace supercong {

/**
 * Morita's p-adic gamma mod p^M:
 *   Gamma_p(n) = (-1)^n * prod_{0<j<n, p !| j} j,      1 <= n <= p^M,
 * extended to p-integral rationals through the representative
 * n = x mod p^M in [1, p^M] (the class of 0 maps to p^M).  The product of
 * the units in any window of p^M consecutive integers is -1 mod p^M (odd p),
 * so the representative determines Gamma_p(x) to the full precision M.
 *
 * Evaluation memoizes prefix products P(n) = prod_{0<j<n, p !| j} j and
 * extends from the nearest cached prefix; the memo is mutex-guarded so one
 * context may be shared across threads.
 */
class GammaContext {
 public:
  GammaContext(Integer p, unsigned M);

  const Integer& p() const { return p_; }
  unsigned M() const { return M_; }
  const Integer& modulus() const { return pM_; }

  /** Gamma_p(n) for integer 1 <= n <= p^M. */
  Residue gamma_int(const Integer& n) const;

  /** Gamma_p(x) for p-integral rational x, via the mod-p^M representative. */
  Residue gamma_rational(const Rational& x) const;

 private:
  Integer prefix_product(const Integer& n) const;  // P(n), memoized

  Integer p_;
  unsigned M_;
  Integer pM_;
  bool fits_u64_;
  mutable std::mutex mu_;
  mutable std::map<Integer, Integer> memo_;  // n -> P(n)
};

struct A0Witness {
  Rational x;
  Integer a0;  // in [1, p], a0 = x (mod p)
};

A0Witness a0(const Rational& x, const Integer& p);

struct GammaIdentitySample {
  Rational x;
  bool functional_ok;  // Gamma(x+1)/Gamma(x) = -x (unit x) or -1 (p | x)
  bool reflection_ok;  // Gamma(x)Gamma(1-x) = (-1)^{a0(x)}
  bool mod_p_ok;       // x = y (mod p)  =>  Gamma(x) = Gamma(y) (mod p)
};

struct GammaIdentityReport {
  std::vector<GammaIdentitySample> samples;
  bool all_ok;
};

GammaIdentityReport check_gamma_identities(const GammaContext& ctx,
                                           const std::vector<Rational>& xs);

}  // namespace supercong
