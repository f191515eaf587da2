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

#include "tempus/qasm.hpp"

#include <sstream>

namespace tempus {

namespace {

std::string q(int index) { return "q[" + std::to_string(index) + "]"; }

}  // namespace

std::string to_qasm(const Circuit& circuit, bool measure) {
  std::ostringstream out;
  out.precision(17);
  out << "OPENQASM 2.0;\n"
      << "include \"qelib1.inc\";\n"
      << "qreg q[" << circuit.num_qubits() << "];\n"
      << "creg c[" << circuit.num_qubits() << "];\n";
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::X:
        out << "x " << q(g.qubit(0)) << ";\n";
        break;
      case GateKind::T:
        out << "u1(" << g.param(0) << ") " << q(g.qubit(0)) << ";\n";
        break;
      case GateKind::R:
        out << "u3(" << g.param(0) << ",0,0) " << q(g.qubit(0)) << ";\n";
        break;
      case GateKind::U3:
        out << "u3(" << g.param(0) << ',' << g.param(1) << ',' << g.param(2) << ") " << q(g.qubit(0))
            << ";\n";
        break;
      case GateKind::TXTX:
        out << "x " << q(g.qubit(0)) << ";\n"
            << "u1(" << g.param(1) << ") " << q(g.qubit(0)) << ";\n"
            << "x " << q(g.qubit(0)) << ";\n"
            << "u1(" << g.param(0) << ") " << q(g.qubit(0)) << ";\n";
        break;
      case GateKind::CNOT:
        out << "cx " << q(g.qubit(0)) << ',' << q(g.qubit(1)) << ";\n";
        break;
      case GateKind::Toffoli:
        out << "ccx " << q(g.qubit(0)) << ',' << q(g.qubit(1)) << ',' << q(g.qubit(2)) << ";\n";
        break;
      case GateKind::SWAP:
        out << "swap " << q(g.qubit(0)) << ',' << q(g.qubit(1)) << ";\n";
        break;
    }
  }
  if (measure) out << "measure q -> c;\n";
  return out.str();
}

}  // namespace tempus
