#pragma once
#include <random>
#include <vector>

#include "xrj/jacobi.hpp"
#include "xrj/ratpoly.hpp"

namespace xrj::testutil {

// ascending coefficients: rp({c0, c1, ...}) = c0 + c1 x + ...
inline RatPoly rp(std::initializer_list<Rat> asc) {
  return RatPoly(std::vector<Rat>(asc));
}

// deterministic random rationals p/q with p in [-20, 20], q in {1,2,3,4,6}
class RatGen {
 public:
  explicit RatGen(unsigned seed) : eng_(seed), num_(-20, 20), den_(0, 4) {}
  Rat operator()() {
    static const int dens[5] = {1, 2, 3, 4, 6};
    Rat r(num_(eng_), dens[den_(eng_)]);
    r.canonicalize();
    return r;
  }
  Rat nonzero() {
    Rat r = (*this)();
    while (r == 0) r = (*this)();
    return r;
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }

 private:
  std::mt19937 eng_;
  std::uniform_int_distribution<int> num_;
  std::uniform_int_distribution<int> den_;
};

}  // namespace xrj::testutil
