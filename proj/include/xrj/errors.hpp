#pragma once
#include <stdexcept>
#include <string>

namespace xrj {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const { return "Error"; }
};

#define XRJ_ERROR_TYPE(Name)                                   \
  struct Name : Error {                                        \
    using Error::Error;                                        \
    const char* kind() const override { return #Name; }        \
  }

// construction hits a vanishing leading coefficient (polynomial degree drops)
XRJ_ERROR_TYPE(DegreeCollapse);
// parameters outside the validity range of the requested construction
XRJ_ERROR_TYPE(RangeViolation);
// an operation that needs a nonzero polynomial received the zero polynomial
XRJ_ERROR_TYPE(ZeroPolynomial);
// an endpoint factor divides with multiplicity > 1 where a simple root is required
XRJ_ERROR_TYPE(SimpleRootViolation);
// a closed-form denominator vanished for these parameters
XRJ_ERROR_TYPE(DivisionByZero);
// the requested integral fails the symbolic convergence test
XRJ_ERROR_TYPE(DivergentIntegral);
// a weight denominator vanishes inside the integration interval
XRJ_ERROR_TYPE(WeightPoleInInterval);
// finite-difference grid refused (too coarse / refinement disagrees)
XRJ_ERROR_TYPE(GridTooCoarse);
// seed fails the admissibility gate required by the requested construction
XRJ_ERROR_TYPE(AdmissibilityError);
// sign triple does not match any classification row
XRJ_ERROR_TYPE(NoSuchType);
// potential (or deformation) has a pole inside the physical domain
XRJ_ERROR_TYPE(PoleInDomain);

#undef XRJ_ERROR_TYPE

}  // namespace xrj
