#pragma once

#include <stdexcept>
#include <string>

namespace nsemi {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction errors.
struct EmptyGeneratorsError : Error {
  EmptyGeneratorsError() : Error("generator list is empty") {}
};
struct ZeroGeneratorError : Error {
  ZeroGeneratorError() : Error("generators must be positive") {}
};
struct NonCoprimeGeneratorsError : Error {
  explicit NonCoprimeGeneratorsError(long long gcd)
      : Error("gcd of generators is " + std::to_string(gcd) +
              "; a numerical semigroup needs gcd 1") {}
};

// Query errors.
struct NotAnElementError : Error {
  explicit NotAnElementError(long long n)
      : Error(std::to_string(n) + " is not an element of the semigroup") {}
};
struct ShiftNotInSemigroupError : Error {
  explicit ShiftNotInSemigroupError(long long n)
      : Error("shift " + std::to_string(n) +
              " must be a positive element of the semigroup") {}
};

// Resource guards.
struct MemoryGuardError : Error {
  MemoryGuardError(long long requested, long long budget)
      : Error("membership window needs " + std::to_string(requested) +
              " bits, budget is " + std::to_string(budget)) {}
};
struct GenusCapExceededError : Error {
  GenusCapExceededError(long long g, long long cap)
      : Error("genus " + std::to_string(g) + " exceeds enumeration cap " +
              std::to_string(cap)) {}
};
struct OracleCapExceededError : Error {
  explicit OracleCapExceededError(long long g)
      : Error("brute-force census capped at genus 12, got " +
              std::to_string(g)) {}
};
struct OverflowError : Error {
  OverflowError() : Error("integer overflow in bound computation") {}
};

// Telescopic / tower errors.
struct NotTelescopicError : Error {
  NotTelescopicError() : Error("generators are not telescopic in this order") {}
};
struct DegenerateLevelError : Error {
  DegenerateLevelError()
      : Error("level has genus 0; ratio diagnostics undefined") {}
};

}  // namespace nsemi
