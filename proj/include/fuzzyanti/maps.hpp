// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "fuzzyanti/vector.hpp"

namespace fuzzyanti {

/// Dense row-major matrix acting on column vectors (rows = codomain dimension).
class LinearMap {
 public:
  LinearMap(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static LinearMap identity(std::size_t n);
  static LinearMap zero(std::size_t rows, std::size_t cols);
  static LinearMap scaling(double r, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  Vector apply(const Vector& x) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> entries_;
};

enum class ScalarKind {
  Quartic,   // x^4 / (1 + x^4)
  Scaling,   // r x
  Identity,  // x
  Jump,      // x + 1 for x > 0, x otherwise
};

/// Map applied coordinate by coordinate; dimension 1 in the scalar fixtures.
struct ScalarMap {
  ScalarKind kind = ScalarKind::Identity;
  double r = 1.0;  // Scaling factor

  double apply(double x) const noexcept;
  Vector apply(const Vector& x) const;
  bool linear() const noexcept { return kind == ScalarKind::Scaling || kind == ScalarKind::Identity; }
};

/// Either a matrix or a coordinate-wise scalar map.
class Mapping {
 public:
  Mapping(LinearMap m) : impl_(std::move(m)) {}  // NOLINT(google-explicit-constructor)
  Mapping(ScalarMap m) : impl_(m) {}             // NOLINT(google-explicit-constructor)

  Vector operator()(const Vector& x) const;
  bool is_linear() const;

  /// Throws DimensionMismatch unless the map sends R^domain into R^codomain.
  void check_dimensions(std::size_t domain, std::size_t codomain) const;

  std::string describe() const;

 private:
  std::variant<LinearMap, ScalarMap> impl_;
};

}  // namespace fuzzyanti
