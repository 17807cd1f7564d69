#pragma once

#include <stdexcept>
#include <string>

namespace permkit {

/// Base class for all permkit errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad input data or a violated precondition. The CLI maps these to exit
/// code 1; everything else exits 2.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& msg) : Error(msg) {}
};

#define PERMKIT_DEFINE_ERROR(NAME)                                  \
  class NAME : public ValidationError {                             \
   public:                                                          \
    explicit NAME(const std::string& msg) : ValidationError(msg) {} \
  }

PERMKIT_DEFINE_ERROR(DimensionMismatch);
PERMKIT_DEFINE_ERROR(AllZeroMass);
PERMKIT_DEFINE_ERROR(TooManyOptions);
PERMKIT_DEFINE_ERROR(DuplicatePermutation);
PERMKIT_DEFINE_ERROR(InsufficientPermutations);
PERMKIT_DEFINE_ERROR(MissingGold);
PERMKIT_DEFINE_ERROR(PartialPermutationSet);
PERMKIT_DEFINE_ERROR(MissingRotation);
PERMKIT_DEFINE_ERROR(DegenerateLabels);
PERMKIT_DEFINE_ERROR(RejectionBudgetExceeded);
PERMKIT_DEFINE_ERROR(EmptySampleSet);
PERMKIT_DEFINE_ERROR(MissingPermutations);

#undef PERMKIT_DEFINE_ERROR

}  // namespace permkit
