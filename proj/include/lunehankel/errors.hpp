// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace lunehankel {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised for inputs that are well formed but have no canonical answer.
class UnsupportedConfiguration : public std::domain_error {
 public:
  explicit UnsupportedConfiguration(const std::string& what) : std::domain_error(what) {}
};

}  // namespace lunehankel
