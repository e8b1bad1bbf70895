#ifndef CCONES_ERRORS_HPP
#define CCONES_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccones {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shapes of vectors, matrices or objects do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// The operation is not available for this kind of object, e.g. a spectral
// object under a constructive connective, or vertex enumeration above the
// supported dimension.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// A precondition on values failed. `witness` carries the certificate when
// there is one (e.g. a separating functional), formatted as rational strings.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::vector<std::string> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::string>& witness() const { return witness_; }

 private:
  std::vector<std::string> witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace ccones

#endif  // CCONES_ERRORS_HPP
