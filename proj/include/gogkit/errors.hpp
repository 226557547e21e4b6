#pragma once

#include <stdexcept>
#include <string>

namespace gogkit {

// Error taxonomy mirrored by the CLI exit codes: input errors exit 1,
// budget/overflow errors exit 2, verification failures exit 3.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& msg) : std::runtime_error(msg) {}
};

struct state_error : std::runtime_error {
  explicit state_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gogkit
