#pragma once

#include <stdexcept>
#include <string>

namespace zz {

// Violated mathematical precondition or invalid domain input.
// The CLI maps these to exit code 1 (usage problems are exit code 2).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace zz
