#pragma once
#include <string>
#include <vector>

#include "xrj/errors.hpp"
#include "xrj/rat.hpp"

namespace xrj {

// Dense univariate polynomial with exact rational coefficients, ascending
// order. The zero polynomial is the empty coefficient list and has degree -1.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static RatPoly constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }
  static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }
  // c0 + c1*x
  static RatPoly linear(const Rat& c0, const Rat& c1) { return RatPoly({c0, c1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  // coefficient of x^k (0 beyond the stored range)
  Rat coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rat(0);
    return c_[static_cast<size_t>(k)];
  }
  Rat leading() const {
    if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
  }

  Rat evaluate(const Rat& x) const;
  double evaluate_double(double x) const;  // compensated Horner

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& o) const;
  RatPoly operator-(const RatPoly& o) const;
  RatPoly operator*(const RatPoly& o) const;
  RatPoly operator*(const Rat& s) const;
  RatPoly operator/(const Rat& s) const;
  bool operator==(const RatPoly& o) const { return c_ == o.c_; }
  bool operator!=(const RatPoly& o) const { return !(*this == o); }

  RatPoly derivative() const;
  // p(c0 + c1*x), exact
  RatPoly compose_linear(const Rat& c0, const Rat& c1) const;
  // p(-x)
  RatPoly reflect() const { return compose_linear(Rat(0), Rat(-1)); }
  RatPoly monic() const;
  // divide by positive rational content (primitive part, sign preserved)
  RatPoly primitive() const;
  std::string to_string() const;  // e.g. "3/2 x^2 - x + 1"

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

inline RatPoly operator*(const Rat& s, const RatPoly& p) { return p * s; }

// quotient and remainder of exact polynomial division
struct DivMod {
  RatPoly quot;
  RatPoly rem;
};
DivMod divmod(const RatPoly& num, const RatPoly& den);
// exact division; throws if the remainder is nonzero
RatPoly divide_exact(const RatPoly& num, const RatPoly& den);
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);  // monic gcd
RatPoly squarefree_part(const RatPoly& p);

RatPoly differentiate(const RatPoly& p);
// p*q' - p'*q
RatPoly wronskian2(const RatPoly& p, const RatPoly& q);

// Interval with extended-rational endpoints. A non-finite endpoint means
// -infinity (lo) or +infinity (hi) and is necessarily open.
struct Interval {
  bool lo_finite = false;
  Rat lo;
  bool lo_closed = false;
  bool hi_finite = false;
  Rat hi;
  bool hi_closed = false;

  static Interval open(const Rat& a, const Rat& b);
  static Interval closed(const Rat& a, const Rat& b);
  // (a, +infinity)
  static Interval above(const Rat& a);
  // (-infinity, b)
  static Interval below(const Rat& b);
  static Interval whole_line();
};

// Number of distinct real roots of p in iv (Sturm chain with content-reduced
// remainders; open endpoints exclude roots lying exactly on them).
int sturm_count(const RatPoly& p, const Interval& iv);

}  // namespace xrj
