#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quatmat {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Operand shapes do not match the operation.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// LU elimination hit a pivot below the singularity threshold.
class SingularMatrixError : public Error {
 public:
  SingularMatrixError(const std::string& what, std::size_t pivot_index,
                      double pivot_magnitude)
      : Error(what), pivot_index(pivot_index), pivot_magnitude(pivot_magnitude) {}

  std::size_t pivot_index;
  double pivot_magnitude;
};

/// Inversion of a scalar with zero norm.
class SingularScalarError : public Error {
 public:
  explicit SingularScalarError(const std::string& what) : Error(what) {}
};

/// An intermediate matrix required by an inversion algorithm is singular.
/// `step` names the quantity whose inversion failed.
class NotGenericError : public Error {
 public:
  NotGenericError(const std::string& what, std::string step)
      : Error(what), step(std::move(step)) {}

  std::string step;
};

/// Input matrix is too far from the image of a structured embedding.
class NotInImageError : public Error {
 public:
  NotInImageError(const std::string& what, double deviation)
      : Error(what), deviation(deviation) {}

  double deviation;
};

/// File format or filesystem failure.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

/// Invalid configuration or command-line usage.
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

}  // namespace quatmat
