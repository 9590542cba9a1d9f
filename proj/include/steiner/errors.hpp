// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters that do not describe a poristic configuration.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed caller input (nonpositive radius, empty chain, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A radius or bend outside the poristic range of its gauge.
class RangeError : public Error {
 public:
  using Error::Error;
};

class NumericError : public Error {
 public:
  using Error::Error;
};

class PoleError : public Error {
 public:
  using Error::Error;
};

class NoSocle : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

enum class InfeasibleReason { no_real_roots, sign_pattern, pedoe_negative };

inline const char* to_string(InfeasibleReason reason) {
  switch (reason) {
    case InfeasibleReason::no_real_roots:
      return "NoRealRoots";
    case InfeasibleReason::sign_pattern:
      return "SignPattern";
    case InfeasibleReason::pedoe_negative:
      return "PedoeNegative";
  }
  return "Unknown";
}

/// Moments that cannot come from any Steiner 4-chain.
class Infeasible : public Error {
 public:
  explicit Infeasible(InfeasibleReason reason)
      : Error(std::string("infeasible: ") + to_string(reason)), reason_(reason) {}

  InfeasibleReason reason() const noexcept { return reason_; }

 private:
  InfeasibleReason reason_;
};

}  // namespace steiner
