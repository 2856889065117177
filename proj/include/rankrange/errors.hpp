#ifndef RANKRANGE_ERRORS_HPP_
#define RANKRANGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rankrange {

/// Precondition violated by the caller (bad arguments, undefined quantity).
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// A partition failed structural validation (coverage, disjointness, connectivity).
struct ValidityError : std::runtime_error {
  explicit ValidityError(const std::string& what) : std::runtime_error(what) {}
};

/// Instance does not have the shape a specialized solver requires.
struct CaseError : std::runtime_error {
  explicit CaseError(const std::string& what) : std::runtime_error(what) {}
};

/// Exhaustive enumeration would exceed the configured size cap.
struct SizeError : std::runtime_error {
  explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input file.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// No admissible solution exists (distinct from a zero-valued optimum).
struct InfeasibleError : std::runtime_error {
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rankrange

#endif  // RANKRANGE_ERRORS_HPP_
