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

#ifndef TEMPUS_QASM_HPP
#define TEMPUS_QASM_HPP

#include <string>

#include "tempus/circuit.hpp"

namespace tempus {

/// OpenQASM 2.0 text for `circuit` with one `q` and one `c` register and a
/// final measurement of every qubit.
///
/// Gate mapping (all exact, no dropped phases):
///   X          -> x
///   T(a)       -> u1(a)
///   R(t)       -> u3(t,0,0)
///   U3(t,a,b)  -> u3(t,a,b)        (our U3 equals qelib1 u3 with phi=a, lambda=b)
///   TXTX(p,pb) -> x; u1(pb); x; u1(p)
///   CNOT       -> cx,  Toffoli -> ccx,  SWAP -> swap
std::string to_qasm(const Circuit& circuit, bool measure = true);

}  // namespace tempus

#endif  // TEMPUS_QASM_HPP
