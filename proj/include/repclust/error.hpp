#pragma once

#include <stdexcept>
#include <string>

namespace repclust {

/// Parameters outside the domain of a construction (user error).
class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A structural invariant failed: malformed quiver, unstable mesh, or a
/// model that does not match its cover. Always a defect, never user input.
class QuiverError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A desk-scale guard refused the request; `estimate` is the size that
/// would have been enumerated.
class BoundExceeded : public std::runtime_error {
 public:
  BoundExceeded(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

}  // namespace repclust
