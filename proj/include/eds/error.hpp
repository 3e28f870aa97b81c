// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eds {

enum class ErrorKind {
  InvalidArgument,
  SingularCurve,
  NotOnCurve,
  TorsionPoint,
  BadReductionPrime,
  IndexCapExceeded,
  ApparitionNotFound,
  ClassEmpty,
  AmbiguousOrder,
  Overflow,
  Integrity,
  Parse,
};

/// Stable kebab-case identifier, used verbatim in CLI messages.
std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace eds
