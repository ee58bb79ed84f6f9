#include "tango/ratpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace tango {

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rational& s) const {
  std::vector<Rational> r = c_;
  for (auto& x : r) x *= s;
  return RatPoly(std::move(r));
}

Rational RatPoly::eval(const Rational& t) const {
  Rational acc(0);
  for (size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

long long RatPoly::eval_int(long long t) const {
  Rational v = eval(Rational(long(t)));
  if (v.get_den() != 1) throw std::runtime_error("polynomial value is not an integer");
  if (!v.get_num().fits_slong_p()) throw std::runtime_error("value overflow");
  return v.get_num().get_si();
}

std::string RatPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rational a = coeff(i);
    if (a == 0) continue;
    bool neg = a < 0;
    Rational mag = neg ? Rational(-a) : a;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = (mag == 1) && i != 0;
    if (!unit) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

RatPoly binomial_poly(int n, int shift) {
  // binom(t + shift, n) = prod_{k=0..n-1} (t + shift - k) / n!
  RatPoly p(Rational(1));
  for (int k = 0; k < n; ++k)
    p = p * RatPoly(std::vector<Rational>{Rational(shift - k), Rational(1)});
  Rational fact(1);
  for (int k = 2; k <= n; ++k) fact *= k;
  return p * Rational(1 / fact);
}

}  // namespace tango
