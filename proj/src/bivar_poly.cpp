#include "supercong/bivar_poly.hpp"

#include <sstream>

namespace supercong {

void BivarPoly::set(const Key& key, const Rational& c) {
  if (c == 0) {
    coeffs_.erase(key);
  } else {
    coeffs_[key] = c;
  }
}

BivarPoly BivarPoly::constant(const Rational& c) {
  BivarPoly p;
  p.set({0, 0}, c);
  return p;
}

BivarPoly BivarPoly::var_n() {
  BivarPoly p;
  p.set({1, 0}, 1);
  return p;
}

BivarPoly BivarPoly::var_k() {
  BivarPoly p;
  p.set({0, 1}, 1);
  return p;
}

BivarPoly BivarPoly::operator+(const BivarPoly& o) const {
  BivarPoly r = *this;
  for (const auto& [key, c] : o.coeffs_) {
    auto it = r.coeffs_.find(key);
    Rational sum = (it == r.coeffs_.end()) ? c : Rational(it->second + c);
    r.set(key, sum);
  }
  return r;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [key, c] : coeffs_) r.coeffs_[key] = -c;
  return r;
}

BivarPoly BivarPoly::operator-(const BivarPoly& o) const { return *this + (-o); }

BivarPoly BivarPoly::operator*(const BivarPoly& o) const {
  BivarPoly r;
  for (const auto& [ka, ca] : coeffs_) {
    for (const auto& [kb, cb] : o.coeffs_) {
      Key key{ka.first + kb.first, ka.second + kb.second};
      auto it = r.coeffs_.find(key);
      Rational sum = ca * cb;
      if (it != r.coeffs_.end()) sum += it->second;
      r.set(key, sum);
    }
  }
  return r;
}

Rational BivarPoly::eval(const Rational& n, const Rational& k) const {
  Rational acc = 0;
  for (const auto& [key, c] : coeffs_) {
    Rational term = c;
    for (unsigned i = 0; i < key.first; ++i) term *= n;
    for (unsigned j = 0; j < key.second; ++j) term *= k;
    acc += term;
  }
  return acc;
}

std::string BivarPoly::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : coeffs_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.get_str() << ")";
    if (key.first) os << "*n^" << key.first;
    if (key.second) os << "*k^" << key.second;
  }
  return os.str();
}

}  // namespace supercong
