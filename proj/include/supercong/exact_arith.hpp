#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "supercong/errors.hpp"

namespace supercong {

using Integer = mpz_class;
using Rational = mpq_class;

/** p-adic valuation value: a finite integer or +infinity (valuation of 0). */
class Valuation {
 public:
  Valuation() : inf_(true), v_(0) {}
  static Valuation infinity() { return Valuation(); }
  static Valuation finite(long v) {
    Valuation w;
    w.inf_ = false;
    w.v_ = v;
    return w;
  }

  bool is_infinite() const { return inf_; }
  long value() const {
    if (inf_) throw OutOfRange("valuation is infinite");
    return v_;
  }

  bool operator==(const Valuation& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }
  bool operator!=(const Valuation& o) const { return !(*this == o); }
  bool operator<(const Valuation& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return v_ < o.v_;
  }
  bool operator>=(const Valuation& o) const { return !(*this < o); }
  bool operator>=(long r) const { return inf_ || v_ >= r; }
  bool operator==(long r) const { return !inf_ && v_ == r; }

  std::string str() const { return inf_ ? "inf" : std::to_string(v_); }

 private:
  bool inf_;
  long v_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

void require_odd_prime(const Integer& p);

Integer pow_int(const Integer& base, unsigned long exp);

/** nu_p of a nonzero integer. */
long vp_int(const Integer& n, const Integer& p);

/** nu_p(q) = nu_p(num) - nu_p(den); infinity for q = 0. */
Valuation vp(const Rational& q, const Integer& p);

/** Integer class mod p^M.  Arithmetic requires matching (p, M). */
class Residue {
 public:
  Residue(Integer p, unsigned M, const Integer& value);

  const Integer& p() const { return p_; }
  unsigned M() const { return M_; }
  const Integer& modulus() const { return pM_; }
  const Integer& value() const { return value_; }

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue inverse() const;
  Residue pow(unsigned long e) const;
  Residue neg() const;

  bool operator==(const Residue& o) const;
  bool operator!=(const Residue& o) const { return !(*this == o); }

  /** Reduce to a smaller precision M' <= M. */
  Residue reduce(unsigned M_new) const;

 private:
  void check_compatible(const Residue& o) const;
  Integer p_;
  unsigned M_;
  Integer pM_;
  Integer value_;
};

enum class ResidueOp { Add, Sub, Mul, Inverse };

/** Dispatching entry point; Inverse ignores b. */
Residue residue_arith(const Residue& a, const Residue& b, ResidueOp op);

/** a/b -> a * b^{-1} mod p^M.  Requires vp(q) >= 0. */
Residue rational_to_residue(const Rational& q, const Integer& p, unsigned M);

struct CongruenceResult {
  bool congruent;
  Valuation residual;  // nu_p(a - b)
};

/** a = b (mod p^r) iff nu_p(a - b) >= r; total on all rationals. */
CongruenceResult congruent(const Rational& a, const Rational& b,
                           const Integer& p, long r);

/** p^v * unit with unit a p-adic unit mod p^M; exact zero carries a flag. */
class ValuedNumber {
 public:
  static ValuedNumber zero(const Integer& p, unsigned M);
  ValuedNumber(const Integer& p, unsigned M, long v, const Integer& unit);

  bool is_zero() const { return zero_; }
  long v() const {
    if (zero_) throw OutOfRange("exact zero has infinite valuation");
    return v_;
  }
  Valuation valuation() const {
    return zero_ ? Valuation::infinity() : Valuation::finite(v_);
  }
  const Residue& unit() const {
    if (zero_) throw OutOfRange("exact zero has no unit part");
    return unit_;
  }
  const Integer& p() const { return p_; }
  unsigned M() const { return M_; }

  /** p^v * unit as an exact rational (a representative of the class). */
  Rational reassemble() const;

 private:
  ValuedNumber(const Integer& p, unsigned M);
  Integer p_;
  unsigned M_;
  bool zero_;
  long v_;
  Residue unit_;
};

ValuedNumber valued_from_rational(const Rational& q, const Integer& p,
                                  unsigned M);

}  // namespace supercong
