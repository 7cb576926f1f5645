// Copyright 2026 The fuzzyanti Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyanti/vector.hpp"

namespace fuzzyanti::detail {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::vector<std::string_view> split_ws(std::string_view s);

// All of these throw ValidationError on malformed text.
double parse_number(std::string_view text);
std::uint64_t parse_unsigned(std::string_view text);
std::vector<double> parse_list(std::string_view text);
Vector parse_vector(std::string_view text);
std::vector<Vector> parse_points(std::string_view text);

}  // namespace fuzzyanti::detail
