#pragma once

#include <stdexcept>
#include <string>

namespace dcgx {

/// Base class for all errors reported by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dcgx
