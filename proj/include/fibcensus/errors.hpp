#pragma once

#include <stdexcept>
#include <string>

namespace fibcensus {

// Violated precondition or mathematically invalid input.
class domain_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by the manifold loader; the message carries a JSON-path style
// location ("faces[0].psi[1]: ...").
class validation_error : public domain_error {
 public:
  using domain_error::domain_error;
};

}  // namespace fibcensus
