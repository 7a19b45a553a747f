// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conelift {

// Base class for every error the library raises on bad input.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two values over different variable sets were combined.
struct VarSetMismatch : Error {
  using Error::Error;
};

// A tuple had the wrong length for the operation.
struct ArityError : Error {
  using Error::Error;
};

struct UnknownVariable : Error {
  using Error::Error;
};

// A denominator is identically zero.
struct InvalidFraction : Error {
  using Error::Error;
};

struct NotHomogeneous : Error {
  using Error::Error;
};

struct DuplicatePoints : Error {
  using Error::Error;
};

// The caller-imposed reduction-step budget ran out mid-computation.
struct BudgetExceeded : Error {
  BudgetExceeded(std::uint64_t steps_used, std::uint64_t limit)
      : Error("reduction step budget exceeded: " + std::to_string(steps_used) +
              " steps used, limit " + std::to_string(limit)),
        steps(steps_used),
        budget(limit) {}

  std::uint64_t steps;
  std::uint64_t budget;
};

struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_no, std::size_t column_no)
      : Error(what + " at " + std::to_string(line_no) + ":" + std::to_string(column_no)),
        line(line_no),
        column(column_no) {}

  std::size_t line;
  std::size_t column;
};

}  // namespace conelift
