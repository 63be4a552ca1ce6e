#pragma once
#include <stdexcept>
#include <string>

namespace qdd {

// shape disagreement between operands (add, mul, block assembly, ...)
struct DimensionMismatchError : std::invalid_argument {
  explicit DimensionMismatchError(const std::string& what)
      : std::invalid_argument(what) {}
};

// inversion / solve on a matrix without the required rank
struct SingularMatrixError : std::domain_error {
  explicit SingularMatrixError(const std::string& what)
      : std::domain_error(what) {}
};

// generator images that do not satisfy the group's defining relations
struct RelationError : std::invalid_argument {
  explicit RelationError(const std::string& what)
      : std::invalid_argument(what) {}
};

}  // namespace qdd
