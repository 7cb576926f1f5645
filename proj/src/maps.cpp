// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#include "fuzzyanti/maps.hpp"

#include "fuzzyanti/error.hpp"
#include "fuzzyanti/format.hpp"

namespace fuzzyanti {

LinearMap::LinearMap(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows_ == 0 || cols_ == 0) throw ValidationError("matrix dimensions must be positive");
  if (entries_.size() != rows_ * cols_) throw ValidationError("matrix entry count does not match its shape");
}

LinearMap LinearMap::identity(std::size_t n) { return scaling(1.0, n); }

LinearMap LinearMap::zero(std::size_t rows, std::size_t cols) {
  return LinearMap(rows, cols, std::vector<double>(rows * cols, 0.0));
}

LinearMap LinearMap::scaling(double r, std::size_t n) {
  std::vector<double> e(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = r;
  return LinearMap(n, n, std::move(e));
}

Vector LinearMap::apply(const Vector& x) const {
  if (x.size() != cols_) throw DimensionMismatch("matrix and vector dimensions differ");
  Vector y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) acc += entries_[i * cols_ + j] * x[j];
    y[i] = acc;
  }
  return y;
}

double ScalarMap::apply(double x) const noexcept {
  switch (kind) {
    case ScalarKind::Quartic: {
      const double x2 = x * x;
      const double x4 = x2 * x2;
      return x4 / (1.0 + x4);
    }
    case ScalarKind::Scaling:
      return r * x;
    case ScalarKind::Identity:
      return x;
    case ScalarKind::Jump:
      return x > 0.0 ? x + 1.0 : x;
  }
  return x;
}

Vector ScalarMap::apply(const Vector& x) const {
  Vector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = apply(x[i]);
  return y;
}

Vector Mapping::operator()(const Vector& x) const {
  return std::visit([&](const auto& m) { return m.apply(x); }, impl_);
}

bool Mapping::is_linear() const {
  if (const auto* s = std::get_if<ScalarMap>(&impl_)) return s->linear();
  return true;
}

void Mapping::check_dimensions(std::size_t domain, std::size_t codomain) const {
  if (const auto* m = std::get_if<LinearMap>(&impl_)) {
    if (m->cols() != domain || m->rows() != codomain) {
      throw DimensionMismatch("matrix shape does not match the domain and codomain spaces");
    }
    return;
  }
  if (domain != codomain) throw DimensionMismatch("coordinate-wise maps need equal domain and codomain dimensions");
}

std::string Mapping::describe() const {
  if (const auto* s = std::get_if<ScalarMap>(&impl_)) {
    switch (s->kind) {
      case ScalarKind::Quartic:
        return "quartic";
      case ScalarKind::Scaling:
        return "scaling(" + format_double(s->r) + ")";
      case ScalarKind::Identity:
        return "identity";
      case ScalarKind::Jump:
        return "jump";
    }
  }
  const auto& m = std::get<LinearMap>(impl_);
  return "matrix(" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ")";
}

}  // namespace fuzzyanti
