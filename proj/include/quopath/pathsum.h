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

#ifndef QUOPATH_PATHSUM_H
#define QUOPATH_PATHSUM_H

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "quopath/circuit.h"
#include "quopath/fp.h"
#include "quopath/quadform.h"

namespace quopath {

/// c + sum_l coeff_l x_l over F_p. Coefficients are kept sorted by variable
/// index with zeros dropped, so equal forms compare equal.
class AffineForm {
   public:
    using Term = std::pair<uint32_t, uint32_t>;

    explicit AffineForm(OddPrime modulus) : modulus_(modulus) {
    }
    static AffineForm constant(OddPrime modulus, uint32_t value);
    static AffineForm variable(OddPrime modulus, uint32_t index);

    OddPrime modulus() const {
        return modulus_;
    }
    FieldElement constant_term() const {
        return FieldElement::from_residue(modulus_, constant_);
    }
    uint32_t constant_residue() const {
        return constant_;
    }
    FieldElement coefficient(uint32_t index) const;
    const std::vector<Term> &terms() const {
        return terms_;
    }

    AffineForm operator+(const AffineForm &other) const;
    AffineForm operator-(const AffineForm &other) const;
    AffineForm scaled(uint32_t factor) const;
    FieldElement evaluate(std::span<const uint32_t> x) const;

    /// e.g. "2 + x1 + 2*x3" (variables shown 1-based).
    std::string str() const;

    bool operator==(const AffineForm &other) const = default;

   private:
    OddPrime modulus_;
    uint32_t constant_ = 0;
    std::vector<Term> terms_;
};

/// Input and output labels of one gate: one entry for F and R, (control,
/// target) for SUM.
template <typename Form>
struct GateLabels {
    std::vector<Form> in;
    std::vector<Form> out;
};

/// Runs the wire-labeling procedure with caller-supplied label factories:
/// inputs start as input_label(r); R and bare wires copy; SUM maps (s, t) to
/// (s, s + t); the l-th non-terminal F outputs path_variable(l); the terminal
/// F on register r outputs output_label(r).
template <typename Form, typename InputLabel, typename PathVariable, typename OutputLabel>
std::vector<GateLabels<Form>> propagate_wire_labels(
    const Circuit &circuit,
    const FourierClassification &fourier,
    InputLabel input_label,
    PathVariable path_variable,
    OutputLabel output_label) {
    std::vector<Form> wires;
    wires.reserve(circuit.num_registers());
    for (uint32_t r = 0; r < circuit.num_registers(); r++) {
        wires.push_back(input_label(r));
    }
    std::vector<GateLabels<Form>> labels;
    labels.reserve(circuit.gates().size());
    const auto &gates = circuit.gates();
    for (size_t k = 0; k < gates.size(); k++) {
        const Gate &g = gates[k];
        GateLabels<Form> gl;
        switch (g.kind) {
            case GateKind::Phase:
                gl.in = {wires[g.target]};
                gl.out = {wires[g.target]};
                break;
            case GateKind::Sum: {
                Form s = wires[g.control];
                Form t = wires[g.target];
                Form sum = s + t;
                gl.in = {s, t};
                gl.out = {s, sum};
                wires[g.target] = std::move(sum);
                break;
            }
            case GateKind::Fourier: {
                gl.in = {wires[g.target]};
                Form out = fourier.roles[k] == FourierRole::Terminal ? output_label(g.target)
                                                                    : path_variable((uint32_t)fourier.path_variable[k]);
                gl.out = {out};
                wires[g.target] = std::move(out);
                break;
            }
        }
        labels.push_back(std::move(gl));
    }
    return labels;
}

/// A standard-form circuit with every wire labeled for fixed (a, b).
struct LabeledCircuit {
    Circuit circuit;
    FourierClassification fourier;
    std::vector<uint32_t> a;
    std::vector<uint32_t> b;
    std::vector<GateLabels<AffineForm>> gates;

    size_t alpha() const {
        return fourier.alpha;
    }
    /// Multi-line dump: one line per gate with its input and output labels.
    std::string str() const;
};

/// Throws std::invalid_argument if the circuit is not in standard form, or
/// if a or b has the wrong length or an entry >= p.
LabeledCircuit label_circuit(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b);

/// S(x) = x^T Theta x + eta^T x + zeta over F_p, Theta symmetric.
struct QuadraticForm {
    SymmetricMatrix theta;
    std::vector<uint32_t> eta;
    uint32_t zeta;

    OddPrime modulus() const {
        return theta.modulus();
    }
    size_t alpha() const {
        return theta.dim();
    }
    FieldElement evaluate(std::span<const uint32_t> x) const;
    /// Polynomial in x1..x_alpha with monomials in graded order.
    std::string str() const;
};

/// Expands S(x) = sum_F in(F) out(F) + sum_R 2^{-1} in(R) (in(R) - 1).
QuadraticForm extract_phase_polynomial(const LabeledCircuit &labeled);

/// Symbols a_r, b_r, x_l. Rendered 1-based: register 0 carries a1 and b1.
struct Symbol {
    char kind;
    uint32_t index;

    std::string str() const {
        return kind + std::to_string(index + 1);
    }
    auto operator<=>(const Symbol &other) const = default;
};

/// Integer linear combination of symbols plus a constant, used to label a
/// circuit without fixing (a, b) or p.
class SymbolicForm {
   public:
    SymbolicForm() = default;
    static SymbolicForm symbol(Symbol s);
    static SymbolicForm constant(int64_t value);

    SymbolicForm operator+(const SymbolicForm &other) const;
    SymbolicForm operator-(const SymbolicForm &other) const;
    const std::map<Symbol, int64_t> &terms() const {
        return terms_;
    }
    int64_t constant_term() const {
        return constant_;
    }

    /// e.g. "a1 + x1 + x2".
    std::string str() const;
    bool operator==(const SymbolicForm &other) const = default;

   private:
    std::map<Symbol, int64_t> terms_;
    int64_t constant_ = 0;
};

/// Polynomial of degree <= 2 in symbols with rational coefficients. The only
/// denominators that arise are powers of 2, reducing mod p through 2^{-1}.
class SymbolicPolynomial {
   public:
    using Monomial = std::vector<Symbol>;
    using Coefficient = boost::rational<int64_t>;

    void add_product(const SymbolicForm &u, const SymbolicForm &v, Coefficient scale);
    const std::map<Monomial, Coefficient> &terms() const {
        return terms_;
    }
    /// Canonical rendering: monomials sorted by symbol, zero terms dropped.
    std::string str() const;
    bool operator==(const SymbolicPolynomial &other) const = default;

   private:
    std::map<Monomial, Coefficient> terms_;
};

/// The labeled circuit with symbolic inputs a1..an and outputs b1..bn.
std::vector<GateLabels<SymbolicForm>> label_circuit_symbolic(const Circuit &circuit);

/// S(x) in symbolic form, as an unexpanded list of gate terms ("a2*x1",
/// "2^-1*a1*(a1 - 1)") and expanded into a polynomial.
std::vector<std::string> symbolic_phase_terms(const Circuit &circuit);
SymbolicPolynomial symbolic_phase_polynomial(const Circuit &circuit);

}  // namespace quopath

#endif
