#pragma once

#include <stdexcept>
#include <string>

namespace monobound {

/// Base class of every error thrown by this library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define MONOBOUND_DEFINE_ERROR(Name)                        \
  struct Name : Error {                                     \
    explicit Name(const std::string& msg) : Error(msg) {}   \
  }

// Linear algebra
MONOBOUND_DEFINE_ERROR(NotHermitian);
MONOBOUND_DEFINE_ERROR(NotPSD);

// States
MONOBOUND_DEFINE_ERROR(ZeroVector);
MONOBOUND_DEFINE_ERROR(LengthMismatch);
MONOBOUND_DEFINE_ERROR(BadSubset);
MONOBOUND_DEFINE_ERROR(NotNormalized);
MONOBOUND_DEFINE_ERROR(NegativeCoefficient);
MONOBOUND_DEFINE_ERROR(BadProbability);
MONOBOUND_DEFINE_ERROR(TooLarge);

// Concurrence
MONOBOUND_DEFINE_ERROR(WrongDimension);
MONOBOUND_DEFINE_ERROR(BadSplit);
MONOBOUND_DEFINE_ERROR(NotQubits);

// Bounds
MONOBOUND_DEFINE_ERROR(DomainError);
MONOBOUND_DEFINE_ERROR(ConditionViolated);
MONOBOUND_DEFINE_ERROR(NoValidPartition);
MONOBOUND_DEFINE_ERROR(TooShort);

// CLI / IO
MONOBOUND_DEFINE_ERROR(ParseError);
MONOBOUND_DEFINE_ERROR(UnknownSuite);
MONOBOUND_DEFINE_ERROR(IoError);

#undef MONOBOUND_DEFINE_ERROR

}  // namespace monobound
