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

#include "quopath/circuit.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace quopath {

namespace {

std::vector<bool> registers_ending_in_fourier(size_t num_registers, const std::vector<Gate> &gates) {
    std::vector<bool> ends_in_fourier(num_registers, false);
    for (const auto &g : gates) {
        ends_in_fourier[g.target] = g.kind == GateKind::Fourier;
        if (g.kind == GateKind::Sum) {
            ends_in_fourier[g.control] = false;
        }
    }
    return ends_in_fourier;
}

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace((unsigned char)line[i])) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace((unsigned char)line[i])) {
            i++;
        }
        if (i > start) {
            words.push_back(line.substr(start, i - start));
        }
    }
    return words;
}

uint64_t parse_number(std::string_view word, size_t line) {
    uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line, "expected a non-negative decimal integer, got '" + std::string(word) + "'");
    }
    return value;
}

}  // namespace

std::vector<uint32_t> outcome_at(OddPrime modulus, size_t num_registers, uint64_t index) {
    std::vector<uint32_t> b(num_registers, 0);
    for (size_t r = num_registers; r-- > 0;) {
        b[r] = (uint32_t)(index % modulus.value());
        index /= modulus.value();
    }
    return b;
}

Circuit::Circuit(OddPrime modulus, size_t num_registers, std::vector<Gate> gates)
    : modulus_(modulus), num_registers_(num_registers), gates_(std::move(gates)) {
    if (num_registers_ < 1) {
        throw std::invalid_argument("circuit needs at least one register");
    }
    for (size_t k = 0; k < gates_.size(); k++) {
        const auto &g = gates_[k];
        if (g.target >= num_registers_ || (g.kind == GateKind::Sum && g.control >= num_registers_)) {
            throw std::invalid_argument("gate " + std::to_string(k) + " acts on a register out of range");
        }
        if (g.kind == GateKind::Sum && g.control == g.target) {
            throw std::invalid_argument("gate " + std::to_string(k) + ": SUM control equals target");
        }
    }
    auto ends_in_fourier = registers_ending_in_fourier(num_registers_, gates_);
    standard_form_ = std::find(ends_in_fourier.begin(), ends_in_fourier.end(), false) == ends_in_fourier.end();
}

std::string Circuit::str() const {
    std::stringstream out;
    out << "p " << modulus_.value() << "\n";
    out << "n " << num_registers_ << "\n";
    for (const auto &g : gates_) {
        out << g << "\n";
    }
    return out.str();
}

Circuit parse_circuit(std::string_view text) {
    std::optional<uint64_t> p;
    std::optional<uint64_t> n;
    std::vector<Gate> gates;

    size_t line_number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_number++;

        auto hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }

        auto expect_args = [&](size_t count) {
            if (words.size() != count + 1) {
                throw ParseError(
                    line_number,
                    "'" + std::string(words[0]) + "' expects " + std::to_string(count) + " argument(s)");
            }
        };

        if (!p.has_value()) {
            if (words[0] != "p") {
                throw ParseError(line_number, "expected 'p <odd prime>' header");
            }
            expect_args(1);
            uint64_t value = parse_number(words[1], line_number);
            if (!is_odd_prime(value) || value >= (uint64_t{1} << 31)) {
                throw ParseError(line_number, "modulus " + std::to_string(value) + " is not an odd prime");
            }
            p = value;
        } else if (!n.has_value()) {
            if (words[0] != "n") {
                throw ParseError(line_number, "expected 'n <registers>' header");
            }
            expect_args(1);
            n = parse_number(words[1], line_number);
            if (*n < 1) {
                throw ParseError(line_number, "register count must be at least 1");
            }
            if (*n > (uint64_t{1} << 24)) {
                throw ParseError(line_number, "register count " + std::to_string(*n) + " is too large");
            }
        } else {
            auto reg = [&](size_t k) {
                uint64_t r = parse_number(words[k], line_number);
                if (r >= *n) {
                    throw ParseError(
                        line_number, "register " + std::to_string(r) + " out of range [0, " + std::to_string(*n) + ")");
                }
                return (uint32_t)r;
            };
            if (words[0] == "F") {
                expect_args(1);
                gates.push_back(Gate::fourier(reg(1)));
            } else if (words[0] == "R") {
                expect_args(1);
                gates.push_back(Gate::phase(reg(1)));
            } else if (words[0] == "SUM") {
                expect_args(2);
                uint32_t c = reg(1);
                uint32_t t = reg(2);
                if (c == t) {
                    throw ParseError(line_number, "SUM control and target must differ");
                }
                gates.push_back(Gate::sum(c, t));
            } else {
                throw ParseError(line_number, "unknown gate '" + std::string(words[0]) + "'");
            }
        }
        if (end == text.size()) {
            break;
        }
    }
    if (!p.has_value()) {
        throw ParseError(line_number, "missing 'p' header");
    }
    if (!n.has_value()) {
        throw ParseError(line_number, "missing 'n' header");
    }
    return Circuit(OddPrime(*p), *n, std::move(gates));
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open circuit file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

Circuit normalize_to_standard_form(const Circuit &circuit) {
    size_t n = circuit.num_registers();
    auto ends_in_fourier = registers_ending_in_fourier(n, circuit.gates());
    std::vector<Gate> gates = circuit.gates();
    for (uint32_t r = 0; r < n; r++) {
        if (!ends_in_fourier[r]) {
            gates.insert(gates.end(), 4, Gate::fourier(r));
        }
    }
    return Circuit(circuit.modulus(), n, std::move(gates));
}

FourierClassification classify_fourier_gates(const Circuit &circuit) {
    if (!circuit.standard_form()) {
        throw std::invalid_argument("circuit is not in standard form");
    }
    const auto &gates = circuit.gates();
    FourierClassification result;
    result.roles.assign(gates.size(), FourierRole::NotFourier);
    result.path_variable.assign(gates.size(), -1);
    result.terminal_gate.assign(circuit.num_registers(), 0);

    std::vector<bool> seen(circuit.num_registers(), false);
    for (size_t k = gates.size(); k-- > 0;) {
        const auto &g = gates[k];
        if (g.kind == GateKind::Fourier) {
            if (!seen[g.target]) {
                result.roles[k] = FourierRole::Terminal;
                result.terminal_gate[g.target] = k;
            } else {
                result.roles[k] = FourierRole::NonTerminal;
            }
        }
        seen[g.target] = true;
        if (g.kind == GateKind::Sum) {
            seen[g.control] = true;
        }
    }
    for (size_t k = 0; k < gates.size(); k++) {
        if (result.roles[k] == FourierRole::NonTerminal) {
            result.path_variable[k] = (int64_t)result.alpha++;
        }
    }
    return result;
}

std::ostream &operator<<(std::ostream &out, const Gate &gate) {
    switch (gate.kind) {
        case GateKind::Fourier:
            return out << "F " << gate.target;
        case GateKind::Phase:
            return out << "R " << gate.target;
        case GateKind::Sum:
            return out << "SUM " << gate.control << " " << gate.target;
    }
    return out;
}

}  // namespace quopath
