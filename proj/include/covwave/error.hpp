// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include <stdexcept>
#include <string>

namespace covwave {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad grid, non-finite sample, inverted interval, bad parameter.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates a numeric precondition of the requested
/// operation (zero norm, window that sees no data, k <= 0 under a photon map).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace covwave
