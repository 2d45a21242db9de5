#pragma once

#include <stdexcept>
#include <string>

namespace pqa {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct BudgetExceeded : Error {
  explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct NotPointedError : Error {
  explicit NotPointedError(const std::string& what) : Error(what) {}
};

struct UnitIdealError : Error {
  explicit UnitIdealError(const std::string& what) : Error(what) {}
};

struct InvalidWitness : Error {
  explicit InvalidWitness(const std::string& what) : Error(what) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

}  // namespace pqa
