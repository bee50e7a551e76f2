#pragma once

#include <stdexcept>
#include <string>

namespace pwsob {

/// Domain failure: invalid group data, malformed files, window mismatches.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid run configuration or command-line input.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace pwsob
