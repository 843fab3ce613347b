#pragma once

#include <stdexcept>
#include <string>

namespace fekete {

// Violated preconditions: bad arguments, wrong shape of input. The CLI maps
// these to exit code 1.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation produced something that the underlying mathematics forbids
// (inexact division where exactness is guaranteed, non-integral
// interpolation). The CLI maps these to exit code 2.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define FEKETE_DEFINE_ERROR(Name, Base)          \
  class Name : public Base {                     \
   public:                                       \
    explicit Name(const std::string& what_arg)   \
        : Base(#Name ": " + what_arg) {}         \
  }

FEKETE_DEFINE_ERROR(NonExactDivision, ConsistencyError);
FEKETE_DEFINE_ERROR(InterpolationNotIntegral, ConsistencyError);

FEKETE_DEFINE_ERROR(ZeroPolynomial, PreconditionError);
FEKETE_DEFINE_ERROR(ZeroValue, PreconditionError);
FEKETE_DEFINE_ERROR(NotReciprocal, PreconditionError);
FEKETE_DEFINE_ERROR(OddDegree, PreconditionError);
FEKETE_DEFINE_ERROR(EndpointRoot, PreconditionError);
FEKETE_DEFINE_ERROR(NotSquarefree, PreconditionError);
FEKETE_DEFINE_ERROR(NotSquarefreeTrace, PreconditionError);
FEKETE_DEFINE_ERROR(FieldMismatch, PreconditionError);
FEKETE_DEFINE_ERROR(InvalidModulus, PreconditionError);
FEKETE_DEFINE_ERROR(NotDivisor, PreconditionError);
FEKETE_DEFINE_ERROR(NotOddPrime, PreconditionError);
FEKETE_DEFINE_ERROR(NotOddPrimes, PreconditionError);
FEKETE_DEFINE_ERROR(DividesN, PreconditionError);
FEKETE_DEFINE_ERROR(InvalidPairing, PreconditionError);
FEKETE_DEFINE_ERROR(NotSemiprime, PreconditionError);
FEKETE_DEFINE_ERROR(PrerequisiteMissing, PreconditionError);
FEKETE_DEFINE_ERROR(CriterionInapplicable, PreconditionError);
FEKETE_DEFINE_ERROR(InvalidArgument, PreconditionError);

#undef FEKETE_DEFINE_ERROR

}  // namespace fekete
