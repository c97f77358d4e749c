#pragma once
#include <gmpxx.h>

#include <string>

namespace xrj {

using Rat = mpq_class;

inline Rat rat(long num, long den = 1) { Rat r(num, den); r.canonicalize(); return r; }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline int sign(const Rat& r) { return sgn(r); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// floor as an exact integer-valued rational
inline Rat rat_floor(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return Rat(q);
}

inline long rat_floor_long(const Rat& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return mpz_get_si(q.get_mpz_t());
}

inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace xrj
