#pragma once

#include <stdexcept>
#include <string>

namespace ggt {

struct GuardViolation : std::runtime_error {
  explicit GuardViolation(const std::string& msg) : std::runtime_error(msg) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct WorkCapExceeded : std::runtime_error {
  explicit WorkCapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct OracleUnknown : std::runtime_error {
  explicit OracleUnknown(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace ggt
