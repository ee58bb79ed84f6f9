// Dense univariate polynomials with exact rational coefficients; used for
// Hilbert polynomials and Euler characteristics.
#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace tango {

using Rational = mpq_class;

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(Rational c) : c_{std::move(c)} { trim(); }
  static RatPoly variable() { return RatPoly(std::vector<Rational>{0, 1}); }
  explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return int(c_.size()) - 1; }
  const Rational& coeff(int i) const {
    static const Rational zero{0};
    return (i >= 0 && i < int(c_.size())) ? c_[size_t(i)] : zero;
  }

  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rational& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }

  Rational eval(const Rational& t) const;
  long long eval_int(long long t) const;  // must be an integer value

  // "1/60t^5+1/3t^4+25/12t^3+11/3t^2-51/10t-14" style, highest power first.
  std::string str(const std::string& var = "t") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

// binom(t + shift, n) as a polynomial in t.
RatPoly binomial_poly(int n, int shift);

}  // namespace tango
