#pragma once

#include <stdexcept>
#include <string>

namespace affschur {

// Input lies outside the mathematical domain of an operation
// (segment longer than n, non-dominant tuple, zero root, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation would exceed the documented enumeration bounds.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text or JSON input that does not follow the documented format.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace limits {
inline constexpr int kMaxHeckeRank = 6;
inline constexpr int kMaxSchurRank = 4;
inline constexpr int kMaxSchurWindow = 4;
}  // namespace limits

}  // namespace affschur
