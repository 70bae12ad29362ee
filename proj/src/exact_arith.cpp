#include "supercong/exact_arith.hpp"

#include <ostream>

namespace supercong {

std::ostream& operator<<(std::ostream& os, const Valuation& v) {
  return os << v.str();
}

void require_odd_prime(const Integer& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()))
    throw InvalidParameters("p must be an odd prime, got " + p.get_str());
  if (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0)
    throw InvalidParameters("p must be prime, got " + p.get_str());
}

Integer pow_int(const Integer& base, unsigned long exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

long vp_int(const Integer& n, const Integer& p) {
  if (n == 0) throw OutOfRange("vp_int of zero");
  Integer rem;
  return static_cast<long>(
      mpz_remove(rem.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

Valuation vp(const Rational& q, const Integer& p) {
  require_odd_prime(p);
  if (q == 0) return Valuation::infinity();
  return Valuation::finite(vp_int(q.get_num(), p) - vp_int(q.get_den(), p));
}

Residue::Residue(Integer p, unsigned M, const Integer& value)
    : p_(std::move(p)), M_(M) {
  require_odd_prime(p_);
  if (M_ == 0) throw InvalidParameters("precision M must be positive");
  pM_ = pow_int(p_, M_);
  mpz_mod(value_.get_mpz_t(), value.get_mpz_t(), pM_.get_mpz_t());
}

void Residue::check_compatible(const Residue& o) const {
  if (p_ != o.p_ || M_ != o.M_)
    throw MismatchedModulus("residue arithmetic requires equal (p, M): " +
                            p_.get_str() + "^" + std::to_string(M_) + " vs " +
                            o.p_.get_str() + "^" + std::to_string(o.M_));
}

Residue Residue::operator+(const Residue& o) const {
  check_compatible(o);
  return Residue(p_, M_, value_ + o.value_);
}

Residue Residue::operator-(const Residue& o) const {
  check_compatible(o);
  return Residue(p_, M_, value_ - o.value_);
}

Residue Residue::operator*(const Residue& o) const {
  check_compatible(o);
  return Residue(p_, M_, value_ * o.value_);
}

Residue Residue::inverse() const {
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), value_.get_mpz_t(), pM_.get_mpz_t()) == 0)
    throw NonInvertible(value_.get_str() + " is not invertible mod " +
                        p_.get_str() + "^" + std::to_string(M_));
  return Residue(p_, M_, inv);
}

Residue Residue::pow(unsigned long e) const {
  Integer out;
  Integer ee(static_cast<unsigned long>(e));
  mpz_powm(out.get_mpz_t(), value_.get_mpz_t(), ee.get_mpz_t(),
           pM_.get_mpz_t());
  return Residue(p_, M_, out);
}

Residue Residue::neg() const { return Residue(p_, M_, -value_); }

bool Residue::operator==(const Residue& o) const {
  return p_ == o.p_ && M_ == o.M_ && value_ == o.value_;
}

Residue Residue::reduce(unsigned M_new) const {
  if (M_new > M_) throw OutOfRange("cannot raise residue precision");
  return Residue(p_, M_new, value_);
}

Residue residue_arith(const Residue& a, const Residue& b, ResidueOp op) {
  switch (op) {
    case ResidueOp::Add:
      return a + b;
    case ResidueOp::Sub:
      return a - b;
    case ResidueOp::Mul:
      return a * b;
    case ResidueOp::Inverse:
      return a.inverse();
  }
  throw Error("unreachable residue op");
}

Residue rational_to_residue(const Rational& q, const Integer& p, unsigned M) {
  Valuation v = vp(q, p);
  if (!v.is_infinite() && v.value() < 0)
    throw NegativeValuation("vp(" + q.get_str() + ", " + p.get_str() +
                            ") = " + v.str() + " < 0");
  Residue num(p, M, q.get_num());
  Residue den(p, M, q.get_den());
  return num * den.inverse();
}

CongruenceResult congruent(const Rational& a, const Rational& b,
                           const Integer& p, long r) {
  Valuation v = vp(Rational(a - b), p);
  return {v >= r, v};
}

ValuedNumber::ValuedNumber(const Integer& p, unsigned M)
    : p_(p), M_(M), zero_(true), v_(0), unit_(p, M, 1) {}

ValuedNumber ValuedNumber::zero(const Integer& p, unsigned M) {
  return ValuedNumber(p, M);
}

ValuedNumber::ValuedNumber(const Integer& p, unsigned M, long v,
                           const Integer& unit)
    : p_(p), M_(M), zero_(false), v_(v), unit_(p, M, unit) {
  if (mpz_divisible_p(unit_.value().get_mpz_t(), p.get_mpz_t()))
    throw InvalidParameters("unit part divisible by p: " + unit.get_str());
}

Rational ValuedNumber::reassemble() const {
  if (zero_) return Rational(0);
  Rational pw(pow_int(p_, static_cast<unsigned long>(v_ < 0 ? -v_ : v_)));
  Rational scale = v_ < 0 ? Rational(1) / pw : pw;
  return scale * Rational(unit_.value());
}

ValuedNumber valued_from_rational(const Rational& q, const Integer& p,
                                  unsigned M) {
  if (q == 0) return ValuedNumber::zero(p, M);
  long v = vp_int(q.get_num(), p) - vp_int(q.get_den(), p);
  Integer num_u, den_u;
  mpz_remove(num_u.get_mpz_t(), q.get_num().get_mpz_t(), p.get_mpz_t());
  mpz_remove(den_u.get_mpz_t(), q.get_den().get_mpz_t(), p.get_mpz_t());
  Residue unit =
      Residue(p, M, num_u) * Residue(p, M, den_u).inverse();
  return ValuedNumber(p, M, v, unit.value());
}

}  // namespace supercong
