#pragma once

#include <utility>
#include <vector>

#include "supercong/padic_gamma.hpp"

namespace supercong {

struct RisingFactorial {
  Rational base;
  unsigned long length;
  Rational value;  // prod_{i<length} (base + i)
};

/** (a)_n = a(a+1)...(a+n-1), (a)_0 = 1. */
Rational rising(const Rational& a, unsigned long n);

/** 1/(1)_m: 1/m! for m >= 0 and exactly 0 for negative m. */
Rational reciprocal_rising_one(long m);

/**
 * Incrementally extended prefixes of one rising factorial; (a)_n for many n
 * with shared work.  Not thread-safe; confine to one task.
 */
class RisingSeries {
 public:
  explicit RisingSeries(Rational a);
  const Rational& at(unsigned long n);
  const Rational& base() const { return a_; }

 private:
  Rational a_;
  std::vector<Rational> prefix_;  // prefix_[n] = (a)_n
};

struct PFactorDecomposition {
  Rational a;
  unsigned long n;
  Integer p;
  Rational A;  // product of the p-divisible elements a+i
  std::vector<unsigned long> indices;
  bool cofactor_check;  // (a)_n == (-1)^n A Gamma_p(a+n)/Gamma_p(a) mod p^M
};

/**
 * Splits (a)_n into its p-divisible elements A and certifies the p-unit
 * cofactor against the gamma quotient at the context's precision.
 */
PFactorDecomposition p_factor_decompose(const Rational& a, unsigned long n,
                                        const GammaContext& ctx);

/** (a)_n = p^{p_power} * deflated, vp(deflated) = 0. */
std::pair<long, Rational> f_p_extract(const Rational& a, unsigned long n,
                                      const Integer& p);

struct Lemma23Report {
  char which;  // 'a', 'b', or 'c'
  Integer p;
  unsigned r;
  unsigned M;
  long lhs_valuation;
  long stated_exponent;
  bool valuation_ok;
  Integer lhs_unit;  // (lhs / p^vp) mod p^M
  Integer rhs_unit;  // sign * gamma products * cofactors mod p^M
  bool unit_ok;
  bool ok() const { return valuation_ok && unit_ok; }
};

/**
 * Rising-factorial recurrence identities for p = 3 (mod 4) and odd r > 1.
 * Left sides are the exact ratios
 *   (a) (1/4)_{(p^r-3)/2}  / (1/4)_{(p^{r-2}-3)/2}
 *   (b) (1)_{(p^r-3)/4}    / (1)_{(p^{r-2}-3)/4}
 *   (c) (1/4)_{(p^r-3)/4}  / (1/4)_{(p^{r-2}-3)/4}
 * compared against sign * p-power * Gamma_p-product * rational cofactors.
 * Valuation equality is exact; unit parts are compared mod p^M.
 */
Lemma23Report check_lemma23(const Integer& p, unsigned r, char which,
                            unsigned M);

}  // namespace supercong
