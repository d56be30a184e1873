// Copyright 2026 The Quopath Authors
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

#ifndef QUOPATH_CIRCUIT_H
#define QUOPATH_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "quopath/fp.h"

namespace quopath {

enum class GateKind : uint8_t {
    Fourier,
    Phase,
    Sum,
};

/// One quopit Clifford gate. For Fourier and Phase only `target` is used.
struct Gate {
    GateKind kind;
    uint32_t target;
    uint32_t control;

    static Gate fourier(uint32_t reg) {
        return {GateKind::Fourier, reg, 0};
    }
    static Gate phase(uint32_t reg) {
        return {GateKind::Phase, reg, 0};
    }
    static Gate sum(uint32_t control, uint32_t target) {
        return {GateKind::Sum, target, control};
    }

    bool acts_on(uint32_t reg) const {
        return target == reg || (kind == GateKind::Sum && control == reg);
    }

    bool operator==(const Gate &other) const = default;
};

/// Raised by the text-format parser. `line()` is 1-based.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {
    }
    size_t line() const {
        return line_;
    }

   private:
    size_t line_;
};

/// Raised when a request would enumerate more states than allowed.
class CapExceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// The index-th tuple of F_p^n in lexicographic order (register 0 most significant).
std::vector<uint32_t> outcome_at(OddPrime modulus, size_t num_registers, uint64_t index);

/// An ordered gate list on `num_registers` registers. Gates are applied in
/// list order. Immutable once built; every constructor validates.
class Circuit {
   public:
    Circuit(OddPrime modulus, size_t num_registers, std::vector<Gate> gates);

    OddPrime modulus() const {
        return modulus_;
    }
    size_t num_registers() const {
        return num_registers_;
    }
    const std::vector<Gate> &gates() const {
        return gates_;
    }
    /// True when the last gate acting on every register is a Fourier gate.
    bool standard_form() const {
        return standard_form_;
    }

    std::string str() const;

    bool operator==(const Circuit &other) const {
        return modulus_ == other.modulus_ && num_registers_ == other.num_registers_ && gates_ == other.gates_;
    }

   private:
    OddPrime modulus_;
    size_t num_registers_;
    std::vector<Gate> gates_;
    bool standard_form_;
};

/// Parses the line-oriented circuit format:
///
///     p <odd prime>
///     n <registers>
///     F <r> | R <r> | SUM <control> <target>
///
/// `#` starts a comment and blank lines are skipped. Throws ParseError.
Circuit parse_circuit(std::string_view text);
Circuit read_circuit_file(const std::string &path);

/// Appends F F F F to every register whose last gate is not a Fourier gate.
Circuit normalize_to_standard_form(const Circuit &circuit);

enum class FourierRole : uint8_t {
    NotFourier,
    NonTerminal,
    Terminal,
};

struct FourierClassification {
    /// One entry per gate, aligned with circuit.gates().
    std::vector<FourierRole> roles;
    /// For non-terminal Fourier gates, the index of the path variable it
    /// introduces (in gate order); -1 elsewhere.
    std::vector<int64_t> path_variable;
    /// The terminal Fourier gate of each register, by gate index.
    std::vector<size_t> terminal_gate;
    size_t alpha = 0;
};

/// Requires a standard-form circuit; throws std::invalid_argument otherwise.
FourierClassification classify_fourier_gates(const Circuit &circuit);

std::ostream &operator<<(std::ostream &out, const Gate &gate);

}  // namespace quopath

#endif
