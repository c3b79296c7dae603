#pragma once

#include <stdexcept>
#include <string>

namespace heckeho {

// Raised for invalid mathematical input: bad group data, characters that fail
// a precondition, caps exceeded, unsupported configurations.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heckeho
