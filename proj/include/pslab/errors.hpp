#pragma once

#include <stdexcept>
#include <string>

namespace pslab {

struct NonPrimeModulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

struct ZeroArgument : std::domain_error {
  using std::domain_error::domain_error;
};

struct SingularMatrix : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Induction from a quadratic or trivial character splits; the model refuses
// to build in that case.
struct ReducibleInduction : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The closed character-sum formula is only stated off the set W*T.
struct DomainWT : std::domain_error {
  using std::domain_error::domain_error;
};

struct SizeMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegenerateFactor : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct OutOfDomain : std::domain_error {
  using std::domain_error::domain_error;
};

struct InsufficientData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace pslab
