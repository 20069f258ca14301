// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace polygap {

// Caller passed arguments outside an operation's contract.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Vertex data that does not describe a strictly convex, counterclockwise polygon.
class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A checked mathematical claim did not hold.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace polygap
