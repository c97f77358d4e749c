#include "xrj/ratpoly.hpp"

#include <cmath>
#include <sstream>

namespace xrj {

Rat RatPoly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {
// error-free product/sum transforms for compensated Horner
inline void two_prod(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  double z = s - a;
  e = (a - (s - z)) + (b - z);
}
}  // namespace

double RatPoly::evaluate_double(double x) const {
  if (c_.empty()) return 0.0;
  double s = c_.back().get_d();
  double comp = 0.0;
  for (auto it = c_.rbegin() + 1; it != c_.rend(); ++it) {
    double p, pe, t, te;
    two_prod(s, x, p, pe);
    two_sum(p, it->get_d(), t, te);
    comp = comp * x + (pe + te);
    s = t;
  }
  return s + comp;
}

RatPoly RatPoly::operator-() const {
  std::vector<Rat> r(c_);
  for (auto& v : r) v = -v;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator*(const RatPoly& o) const {
  if (is_zero() || o.is_zero()) return RatPoly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& s) const {
  if (s == 0) return RatPoly();
  std::vector<Rat> r(c_);
  for (auto& v : r) v *= s;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::operator/(const Rat& s) const {
  if (s == 0) throw DivisionByZero("polynomial divided by zero scalar");
  std::vector<Rat> r(c_);
  for (auto& v : r) v /= s;
  return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return RatPoly(std::move(r));
}

RatPoly RatPoly::compose_linear(const Rat& c0, const Rat& c1) const {
  RatPoly acc;
  RatPoly lin = RatPoly::linear(c0, c1);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + RatPoly::constant(*it);
  return acc;
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw ZeroPolynomial("monic of zero polynomial");
  return *this / leading();
}

RatPoly RatPoly::primitive() const {
  if (is_zero()) return RatPoly();
  // positive content: gcd of numerators over lcm of denominators
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& v : c_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (content == 0) return RatPoly();
  return *this / content;
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    Rat v = coeff(k);
    if (v == 0) continue;
    if (!first) os << (sign(v) > 0 ? " + " : " - ");
    else if (sign(v) < 0) os << "-";
    first = false;
    Rat a = abs(v);
    if (a != 1 || k == 0) os << xrj::to_string(a);
    if (k >= 1) {
      if (a != 1) os << " ";
      os << "x";
      if (k >= 2) os << "^" << k;
    }
  }
  return os.str();
}

DivMod divmod(const RatPoly& num, const RatPoly& den) {
  if (den.is_zero()) throw ZeroPolynomial("polynomial division by zero polynomial");
  RatPoly rem = num;
  std::vector<Rat> quot;
  int dq = num.degree() - den.degree();
  if (dq < 0) return {RatPoly(), rem};
  quot.assign(static_cast<size_t>(dq) + 1, Rat(0));
  Rat dl = den.leading();
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    int k = rem.degree() - den.degree();
    Rat f = rem.leading() / dl;
    quot[static_cast<size_t>(k)] = f;
    // rem -= f * x^k * den
    std::vector<Rat> sub(static_cast<size_t>(k), Rat(0));
    for (const auto& c : den.coeffs()) sub.push_back(c * f);
    rem = rem - RatPoly(std::move(sub));
  }
  return {RatPoly(std::move(quot)), rem};
}

RatPoly divide_exact(const RatPoly& num, const RatPoly& den) {
  DivMod dm = divmod(num, den);
  if (!dm.rem.is_zero()) throw Error("divide_exact: nonzero remainder");
  return dm.quot;
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).rem.primitive();
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
  if (p.degree() == 0) return RatPoly::constant(Rat(1));
  return divide_exact(p, poly_gcd(p, p.derivative()));
}

RatPoly differentiate(const RatPoly& p) { return p.derivative(); }

RatPoly wronskian2(const RatPoly& p, const RatPoly& q) {
  return p * q.derivative() - p.derivative() * q;
}

Interval Interval::open(const Rat& a, const Rat& b) {
  if (!(a < b)) throw RangeViolation("interval endpoints must satisfy lo < hi");
  Interval iv;
  iv.lo_finite = iv.hi_finite = true;
  iv.lo = a;
  iv.hi = b;
  iv.lo_closed = iv.hi_closed = false;
  return iv;
}

Interval Interval::closed(const Rat& a, const Rat& b) {
  Interval iv = open(a, b);
  iv.lo_closed = iv.hi_closed = true;
  return iv;
}

Interval Interval::above(const Rat& a) {
  Interval iv;
  iv.lo_finite = true;
  iv.lo = a;
  return iv;
}

Interval Interval::below(const Rat& b) {
  Interval iv;
  iv.hi_finite = true;
  iv.hi = b;
  return iv;
}

Interval Interval::whole_line() { return Interval{}; }

namespace {

// sign of q at a finite point, at +infinity, or at -infinity
int sign_at(const RatPoly& q, bool finite, const Rat& x, bool at_plus_inf) {
  if (q.is_zero()) return 0;
  if (finite) return sgn(q.evaluate(x));
  int s = sgn(q.leading());
  if (!at_plus_inf && q.degree() % 2 == 1) s = -s;
  return s;
}

int sign_variations(const std::vector<RatPoly>& chain, bool finite, const Rat& x,
                    bool at_plus_inf) {
  int var = 0, prev = 0;
  for (const auto& q : chain) {
    int s = sign_at(q, finite, x, at_plus_inf);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

}  // namespace

int sturm_count(const RatPoly& p, const Interval& iv) {
  if (p.is_zero()) throw ZeroPolynomial("sturm_count of zero polynomial");
  if (p.degree() == 0) return 0;

  // reduce to a squarefree polynomial with the same root set
  RatPoly f = divide_exact(p, poly_gcd(p, p.derivative())).primitive();

  // deflate roots sitting exactly on finite endpoints; count them only for
  // closed endpoints
  int boundary = 0;
  if (iv.lo_finite && f.evaluate(iv.lo) == 0) {
    f = divide_exact(f, RatPoly::linear(-iv.lo, Rat(1)));
    if (iv.lo_closed) ++boundary;
  }
  if (iv.hi_finite && f.evaluate(iv.hi) == 0) {
    f = divide_exact(f, RatPoly::linear(-iv.hi, Rat(1)));
    if (iv.hi_closed) ++boundary;
  }
  if (f.degree() <= 0) return boundary;

  // Sturm chain with content-normalized remainders
  std::vector<RatPoly> chain{f.primitive(), f.derivative().primitive()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    RatPoly r = divmod(chain[chain.size() - 2], chain.back()).rem;
    if (r.is_zero()) break;
    chain.push_back((-r).primitive());
  }

  int v_lo = sign_variations(chain, iv.lo_finite, iv.lo, /*at_plus_inf=*/false);
  int v_hi = sign_variations(chain, iv.hi_finite, iv.hi, /*at_plus_inf=*/true);
  return boundary + v_lo - v_hi;
}

}  // namespace xrj
