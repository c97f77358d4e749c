#pragma once
#include <string>

#include "xrj/ratpoly.hpp"

namespace xrj {

// f(eta) = (eta+1)^p_minus (eta-1)^p_plus * num(eta)/den(eta), exact rational
// exponents. Canonical form: num/den coprime, den monic, and neither contains
// a factor of (eta+-1) (those are folded into the exponents).
class QuasiRationalFn {
 public:
  QuasiRationalFn() = default;
  QuasiRationalFn(Rat p_minus, Rat p_plus, RatPoly num, RatPoly den = RatPoly::constant(Rat(1)));
  static QuasiRationalFn from_poly(const RatPoly& p);
  static QuasiRationalFn constant(const Rat& c);

  const Rat& p_minus() const { return p_minus_; }
  const Rat& p_plus() const { return p_plus_; }
  const RatPoly& num() const { return num_; }
  const RatPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  // true when both exponents are zero after canonicalization
  bool is_rational() const;

  QuasiRationalFn derivative() const;
  QuasiRationalFn inverse() const;
  double evaluate_double(double eta) const;  // eta > 1

  friend QuasiRationalFn operator*(const QuasiRationalFn& f, const QuasiRationalFn& g);
  friend QuasiRationalFn operator*(const Rat& c, const QuasiRationalFn& f);
  // throws RangeViolation when exponent differences are not integers
  friend QuasiRationalFn operator+(const QuasiRationalFn& f, const QuasiRationalFn& g);
  friend QuasiRationalFn operator-(const QuasiRationalFn& f, const QuasiRationalFn& g);
  friend QuasiRationalFn operator/(const QuasiRationalFn& f, const QuasiRationalFn& g);
  bool operator==(const QuasiRationalFn& o) const;

  std::string to_string() const;

 private:
  void canonicalize();
  Rat p_minus_ = 0, p_plus_ = 0;
  RatPoly num_;  // zero function <=> num_ is zero
  RatPoly den_ = RatPoly::constant(Rat(1));
};

QuasiRationalFn qrf_wronskian(const QuasiRationalFn& f, const QuasiRationalFn& g);

}  // namespace xrj
