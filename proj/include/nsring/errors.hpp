#ifndef NSRING_ERRORS_HPP_
#define NSRING_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace nsring {

// Base class for all recoverable errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptyInput : Error {
  EmptyInput() : Error("generator list is empty") {}
};

struct GcdNotOne : Error {
  explicit GcdNotOne(long long g)
      : Error("gcd of generators is " + std::to_string(g) + ", expected 1") {}
};

struct LimitExceeded : Error {
  using Error::Error;
};

struct NotAMember : Error {
  explicit NotAMember(long long z)
      : Error(std::to_string(z) + " is not a member of the semigroup") {}
};

struct EmptyGenerators : Error {
  EmptyGenerators() : Error("ideal generator set is empty") {}
};

struct AmbientMismatch : Error {
  AmbientMismatch() : Error("ideals live over different semigroups") {}
};

struct NotNested : Error {
  NotNested() : Error("length_between requires the second ideal inside the first") {}
};

struct GorensteinInput : Error {
  GorensteinInput()
      : Error("rootset is unbounded for Gorenstein rings (L = H works for every n)") {}
};

struct GenusGuardExceeded : Error {
  GenusGuardExceeded(long long genus, long long guard)
      : Error("genus " + std::to_string(genus) + " exceeds the rootset guard " +
              std::to_string(guard)) {}
};

struct NotThreeGenerated : Error {
  using Error::Error;
};

struct SymmetricInput : Error {
  SymmetricInput()
      : Error("semigroup is symmetric (complete intersection): Herzog matrix degenerates") {}
};

struct DvrInput : Error {
  DvrInput() : Error("operation is not defined for the discrete valuation ring") {}
};

struct GuardExceeded : Error {
  GuardExceeded(long long requested, long long cap)
      : Error("requested genus " + std::to_string(requested) +
              " exceeds the enumeration cap " + std::to_string(cap)) {}
};

struct IoError : Error {
  using Error::Error;
};

// Raised when two independent internal routes disagree; always a bug.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace nsring

#endif  // NSRING_ERRORS_HPP_
