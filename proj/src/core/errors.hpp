#pragma once

#include <stdexcept>

namespace tpn {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text.
struct ParseError : Error {
  using Error::Error;
};

// Well-formed input that violates a model rule (dangling reference,
// degenerate interval, post variable missing from pre, ...).
struct SemanticError : Error {
  using Error::Error;
};

// Operation applied to an expression of the wrong shape.
struct ShapeError : Error {
  using Error::Error;
};

// Rejected call arguments.
struct InvalidArgument : Error {
  using Error::Error;
};

// Streaming-mode refusal: the round cap exceeds the configured budget.
struct BudgetError : Error {
  using Error::Error;
};

// A bound that is supposed to hold by construction failed.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace tpn
