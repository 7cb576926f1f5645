// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

namespace fuzzyanti {

/// Element of R^n. Arithmetic between vectors of different dimension throws
/// DimensionMismatch.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dimension) : coords_(dimension, 0.0) {}
  Vector(std::initializer_list<double> coords) : coords_(coords) {}
  explicit Vector(std::vector<double> coords) : coords_(std::move(coords)) {}

  static Vector zero(std::size_t dimension) { return Vector(dimension); }
  static Vector basis(std::size_t dimension, std::size_t index);

  std::size_t size() const { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  double& operator[](std::size_t i) { return coords_[i]; }
  std::span<const double> coords() const { return coords_; }
  const std::vector<double>& data() const { return coords_; }

  bool is_zero() const;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(double c);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Vector a, double c) { return a *= c; }
  friend Vector operator*(double c, Vector a) { return a *= c; }
  friend Vector operator-(Vector a) { return a *= -1.0; }
  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<double> coords_;
};

enum class CrispNorm { Euclidean, Sup, OneNorm };

double norm(CrispNorm kind, const Vector& x);

std::string_view to_string(CrispNorm kind);

/// Accepts "l2", "sup" and "l1".
CrispNorm parse_crisp_norm(std::string_view name);

}  // namespace fuzzyanti
