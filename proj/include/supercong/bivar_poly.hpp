#pragma once

#include <map>
#include <string>
#include <utility>

#include "supercong/exact_arith.hpp"

namespace supercong {

/**
 * Sparse polynomial in (n, k) with exact rational coefficients; zero
 * coefficients are never stored, so equality is map equality.
 */
class BivarPoly {
 public:
  using Key = std::pair<unsigned, unsigned>;  // (deg_n, deg_k)

  BivarPoly() = default;
  static BivarPoly constant(const Rational& c);
  static BivarPoly var_n();
  static BivarPoly var_k();

  BivarPoly operator+(const BivarPoly& o) const;
  BivarPoly operator-(const BivarPoly& o) const;
  BivarPoly operator*(const BivarPoly& o) const;
  BivarPoly operator-() const;

  bool is_zero() const { return coeffs_.empty(); }
  bool operator==(const BivarPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const BivarPoly& o) const { return !(*this == o); }

  Rational eval(const Rational& n, const Rational& k) const;
  const std::map<Key, Rational>& coefficients() const { return coeffs_; }
  std::string str() const;

 private:
  void set(const Key& key, const Rational& c);
  std::map<Key, Rational> coeffs_;
};

}  // namespace supercong
