#pragma once

#include <stdexcept>
#include <string>

namespace lotus {

/// Thrown on precondition violations and unrecoverable input errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lotus
