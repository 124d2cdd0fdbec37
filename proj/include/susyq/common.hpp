// Copyright 2026 The SusyQ Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace susyq {

using cplx = std::complex<double>;

/// Coordinate axis of the three-dimensional configuration space.
enum class Axis : int { X = 0, Y = 1, Z = 2 };

inline constexpr const char* axis_name(Axis a) {
    switch (a) {
        case Axis::X: return "x";
        case Axis::Y: return "y";
        case Axis::Z: return "z";
    }
    return "?";
}

inline constexpr Axis axis_from_index(int i) { return static_cast<Axis>(i); }

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text. Carries the byte offset of the offending token.
class ParseError : public Error {
  public:
    ParseError(std::size_t offset, const std::string& detail)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + detail),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_;
};

/// Evaluation left the mathematical domain (ln of a non-positive value,
/// division by zero, ...). The message names the offending subexpression.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Operands of an operator-algebra operation have incompatible dimensions.
class DimensionError : public Error {
  public:
    using Error::Error;
};

}  // namespace susyq
