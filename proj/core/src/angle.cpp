// Copyright 2026 The Tempus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempus/angle.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tempus {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::string_view whole) {
  s = trim(s);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

double parse_angle(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  auto pi_pos = text.find("pi");
  if (pi_pos == std::string_view::npos) return parse_number(text, whole);

  // <coefficient>[*]pi[/<divisor>]
  std::string_view head = trim(text.substr(0, pi_pos));
  std::string_view tail = trim(text.substr(pi_pos + 2));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  double coefficient = 1.0;
  if (head == "-") {
    coefficient = -1.0;
  } else if (head == "+") {
    coefficient = 1.0;
  } else if (!head.empty()) {
    coefficient = parse_number(head, whole);
  }
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw std::invalid_argument("cannot parse angle '" + std::string(whole) + "'");
    divisor = parse_number(tail.substr(1), whole);
    if (divisor == 0.0) throw std::invalid_argument("angle '" + std::string(whole) + "' divides by zero");
  }
  return coefficient * std::numbers::pi / divisor;
}

double wrap_angle(double angle) {
  double wrapped = std::remainder(angle, 2 * std::numbers::pi);  // [-pi, pi]
  if (wrapped <= -std::numbers::pi) wrapped += 2 * std::numbers::pi;
  return wrapped;
}

}  // namespace tempus
