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

#ifndef TEMPUS_ANGLE_HPP
#define TEMPUS_ANGLE_HPP

#include <string_view>

namespace tempus {

/// Parses an angle in radians. Accepts plain numbers and the forms
/// `pi`, `-pi`, `pi/6`, `2pi/3`, `2*pi/3`, `0.5*pi`.
double parse_angle(std::string_view text);

/// Wraps an angle into (-pi, pi].
double wrap_angle(double angle);

}  // namespace tempus

#endif  // TEMPUS_ANGLE_HPP
