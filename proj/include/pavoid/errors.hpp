#pragma once

#include <stdexcept>
#include <string>

namespace pavoid {

// Input exceeds a documented hard size limit (maps to CLI exit code 3).
class SizeLimitError : public std::runtime_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// An exact value was requested but the search budget ran out first.
class UnavailableError : public std::runtime_error {
 public:
  explicit UnavailableError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pavoid
