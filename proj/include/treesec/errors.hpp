#pragma once

#include <stdexcept>
#include <string>

namespace treesec {

// Base class for every error thrown by the library.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- input/document errors ---------------------------------------------

struct ParseError : Error {
  using Error::Error;
};
struct CycleDetected : Error {
  using Error::Error;
};
struct MultipleParents : Error {
  using Error::Error;
};
struct UnreachableVertex : Error {
  using Error::Error;
};
struct UnknownRoot : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct LengthMismatch : Error {
  using Error::Error;
};
struct NegativeValue : Error {
  using Error::Error;
};
struct NotARootedSubtree : Error {
  using Error::Error;
};
struct MultisetMismatch : Error {
  using Error::Error;
};

// --- size guards --------------------------------------------------------

struct TooLarge : Error {
  using Error::Error;
};
struct BudgetCeilingExceeded : Error {
  using Error::Error;
};

// --- class / mode preconditions ----------------------------------------

struct WrongTreeClass : Error {
  using Error::Error;
};
struct NotUnitCost : Error {
  using Error::Error;
};
struct NotUnitPrize : Error {
  using Error::Error;
};

// --- transform / duality preconditions ----------------------------------

struct NonIntegerCost : Error {
  using Error::Error;
};
struct NonIntegerPrize : Error {
  using Error::Error;
};
struct ZeroCost : Error {
  using Error::Error;
};
struct NotScaled : Error {
  using Error::Error;
};
struct NotARootedSubtreeOfSupertree : Error {
  using Error::Error;
};
struct Unreachable : Error {
  using Error::Error;
};

}  // namespace treesec
