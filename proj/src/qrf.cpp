#include "xrj/qrf.hpp"

#include <cmath>
#include <sstream>

#include "xrj/errors.hpp"

namespace xrj {

namespace {

const RatPoly& lin_minus() {  // eta + 1
  static const RatPoly p = RatPoly::linear(Rat(1), Rat(1));
  return p;
}
const RatPoly& lin_plus() {  // eta - 1
  static const RatPoly p = RatPoly::linear(Rat(-1), Rat(1));
  return p;
}

// divide out the maximal power of `lin`, returning the multiplicity
int strip_factor(RatPoly& p, const RatPoly& lin) {
  int count = 0;
  while (!p.is_zero() && p.degree() >= 1) {
    DivMod dm = divmod(p, lin);
    if (!dm.rem.is_zero()) break;
    p = dm.quot;
    ++count;
  }
  return count;
}

RatPoly pow_int(const RatPoly& base, long e) {
  RatPoly out = RatPoly::constant(Rat(1));
  for (long i = 0; i < e; ++i) out = out * base;
  return out;
}

long integer_gap(const Rat& hi, const Rat& lo) {
  Rat d = hi - lo;
  if (!is_integer(d)) throw RangeViolation("quasi-rational sum needs integer exponent gaps");
  return mpz_get_si(d.get_num().get_mpz_t());
}

}  // namespace

QuasiRationalFn::QuasiRationalFn(Rat p_minus, Rat p_plus, RatPoly num, RatPoly den)
    : p_minus_(std::move(p_minus)), p_plus_(std::move(p_plus)),
      num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("quasi-rational denominator is zero");
  canonicalize();
}

QuasiRationalFn QuasiRationalFn::from_poly(const RatPoly& p) {
  return QuasiRationalFn(Rat(0), Rat(0), p);
}

QuasiRationalFn QuasiRationalFn::constant(const Rat& c) {
  return from_poly(RatPoly::constant(c));
}

void QuasiRationalFn::canonicalize() {
  if (num_.is_zero()) {
    p_minus_ = p_plus_ = 0;
    den_ = RatPoly::constant(Rat(1));
    return;
  }
  p_minus_ += strip_factor(num_, lin_minus());
  p_minus_ -= strip_factor(den_, lin_minus());
  p_plus_ += strip_factor(num_, lin_plus());
  p_plus_ -= strip_factor(den_, lin_plus());
  RatPoly g = poly_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = divide_exact(num_, g);
    den_ = divide_exact(den_, g);
  }
  Rat lead = den_.leading();
  if (lead != 1) {
    den_ = den_ / lead;
    num_ = num_ / lead;
  }
}

bool QuasiRationalFn::is_rational() const {
  return sign(p_minus_) == 0 && sign(p_plus_) == 0;
}

QuasiRationalFn QuasiRationalFn::derivative() const {
  if (is_zero()) return *this;
  // d/deta [u^p v^q N/D] = u^{p-1} v^{q-1} [p v N D + q u N D + u v (N'D - N D')] / D^2
  const RatPoly nd = num_ * den_;
  RatPoly bracket = (lin_plus() * nd) * p_minus_ + (lin_minus() * nd) * p_plus_ +
                    (lin_minus() * lin_plus()) *
                        (num_.derivative() * den_ - num_ * den_.derivative());
  return QuasiRationalFn(p_minus_ - 1, p_plus_ - 1, bracket, den_ * den_);
}

QuasiRationalFn QuasiRationalFn::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of the zero function");
  return QuasiRationalFn(-p_minus_, -p_plus_, den_, num_);
}

double QuasiRationalFn::evaluate_double(double eta) const {
  if (is_zero()) return 0.0;
  double val = num_.evaluate_double(eta) / den_.evaluate_double(eta);
  val *= std::pow(eta + 1.0, to_double(p_minus_));
  val *= std::pow(eta - 1.0, to_double(p_plus_));
  return val;
}

QuasiRationalFn operator*(const QuasiRationalFn& f, const QuasiRationalFn& g) {
  if (f.is_zero() || g.is_zero()) return QuasiRationalFn();
  return QuasiRationalFn(f.p_minus_ + g.p_minus_, f.p_plus_ + g.p_plus_,
                         f.num_ * g.num_, f.den_ * g.den_);
}

QuasiRationalFn operator*(const Rat& c, const QuasiRationalFn& f) {
  if (sign(c) == 0 || f.is_zero()) return QuasiRationalFn();
  return QuasiRationalFn(f.p_minus_, f.p_plus_, f.num_ * c, f.den_);
}

QuasiRationalFn operator+(const QuasiRationalFn& f, const QuasiRationalFn& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  Rat base_m = f.p_minus_ < g.p_minus_ ? f.p_minus_ : g.p_minus_;
  Rat base_p = f.p_plus_ < g.p_plus_ ? f.p_plus_ : g.p_plus_;
  auto lift = [&](const QuasiRationalFn& h) {
    return h.num_ * pow_int(lin_minus(), integer_gap(h.p_minus_, base_m)) *
           pow_int(lin_plus(), integer_gap(h.p_plus_, base_p));
  };
  return QuasiRationalFn(base_m, base_p, lift(f) * g.den_ + lift(g) * f.den_,
                         f.den_ * g.den_);
}

QuasiRationalFn operator-(const QuasiRationalFn& f, const QuasiRationalFn& g) {
  return f + (Rat(-1) * g);
}

QuasiRationalFn operator/(const QuasiRationalFn& f, const QuasiRationalFn& g) {
  return f * g.inverse();
}

bool QuasiRationalFn::operator==(const QuasiRationalFn& o) const {
  if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
  return p_minus_ == o.p_minus_ && p_plus_ == o.p_plus_ && num_ == o.num_ &&
         den_ == o.den_;
}

std::string QuasiRationalFn::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  os << "(eta+1)^(" << xrj::to_string(p_minus_) << ") (eta-1)^(" << xrj::to_string(p_plus_)
     << ") [" << num_.to_string() << "] / [" << den_.to_string() << "]";
  return os.str();
}

QuasiRationalFn qrf_wronskian(const QuasiRationalFn& f, const QuasiRationalFn& g) {
  return f * g.derivative() - f.derivative() * g;
}

}  // namespace xrj
