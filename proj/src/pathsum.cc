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

#include "quopath/pathsum.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace quopath {

AffineForm AffineForm::constant(OddPrime modulus, uint32_t value) {
    AffineForm f(modulus);
    f.constant_ = value % modulus.value();
    return f;
}

AffineForm AffineForm::variable(OddPrime modulus, uint32_t index) {
    AffineForm f(modulus);
    f.terms_.emplace_back(index, 1);
    return f;
}

FieldElement AffineForm::coefficient(uint32_t index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{index, 0});
    uint32_t c = (it != terms_.end() && it->first == index) ? it->second : 0;
    return FieldElement::from_residue(modulus_, c);
}

AffineForm AffineForm::operator+(const AffineForm &other) const {
    if (modulus_ != other.modulus_) {
        throw std::invalid_argument("affine forms have different moduli");
    }
    const uint32_t p = modulus_.value();
    AffineForm out(modulus_);
    out.constant_ = zp::add(constant_, other.constant_, p);
    out.terms_.reserve(terms_.size() + other.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < other.terms_.size()) {
        if (j == other.terms_.size() || (i < terms_.size() && terms_[i].first < other.terms_[j].first)) {
            out.terms_.push_back(terms_[i++]);
        } else if (i == terms_.size() || other.terms_[j].first < terms_[i].first) {
            out.terms_.push_back(other.terms_[j++]);
        } else {
            uint32_t c = zp::add(terms_[i].second, other.terms_[j].second, p);
            if (c != 0) {
                out.terms_.emplace_back(terms_[i].first, c);
            }
            i++;
            j++;
        }
    }
    return out;
}

AffineForm AffineForm::operator-(const AffineForm &other) const {
    return *this + other.scaled(modulus_.value() - 1);
}

AffineForm AffineForm::scaled(uint32_t factor) const {
    const uint32_t p = modulus_.value();
    factor %= p;
    AffineForm out(modulus_);
    if (factor == 0) {
        return out;
    }
    out.constant_ = zp::mul(constant_, factor, p);
    out.terms_.reserve(terms_.size());
    for (const auto &[index, c] : terms_) {
        out.terms_.emplace_back(index, zp::mul(c, factor, p));
    }
    return out;
}

FieldElement AffineForm::evaluate(std::span<const uint32_t> x) const {
    const uint32_t p = modulus_.value();
    uint32_t total = constant_;
    for (const auto &[index, c] : terms_) {
        total = zp::add(total, zp::mul(c, x[index] % p, p), p);
    }
    return FieldElement::from_residue(modulus_, total);
}

std::string AffineForm::str() const {
    std::stringstream out;
    bool first = true;
    for (const auto &[index, c] : terms_) {
        if (!first) {
            out << " + ";
        }
        first = false;
        if (c != 1) {
            out << c << "*";
        }
        out << "x" << index + 1;
    }
    if (constant_ != 0 || first) {
        if (!first) {
            out << " + ";
        }
        out << constant_;
    }
    return out.str();
}

namespace {

void check_tuple(std::span<const uint32_t> values, const Circuit &circuit, const char *name) {
    if (values.size() != circuit.num_registers()) {
        throw std::invalid_argument(
            std::string(name) + " has " + std::to_string(values.size()) + " entries but the circuit has " +
            std::to_string(circuit.num_registers()) + " registers");
    }
    for (uint32_t v : values) {
        if (v >= circuit.modulus().value()) {
            throw std::invalid_argument(std::string(name) + " entry " + std::to_string(v) + " is not a residue mod p");
        }
    }
}

std::string join_labels(const std::vector<AffineForm> &forms) {
    std::string s;
    for (size_t i = 0; i < forms.size(); i++) {
        if (i) {
            s += ", ";
        }
        s += forms[i].str();
    }
    return forms.size() == 1 ? s : "(" + s + ")";
}

/// Accumulates scale * u * v into (Theta, eta, zeta).
void add_product(QuadraticForm &q, const AffineForm &u, const AffineForm &v, uint32_t scale) {
    const OddPrime modulus = q.modulus();
    const uint32_t p = modulus.value();
    const uint32_t half_scale = zp::mul(scale, modulus.half(), p);
    q.zeta = zp::add(q.zeta, zp::mul(scale, zp::mul(u.constant_residue(), v.constant_residue(), p), p), p);
    for (const auto &[i, ui] : u.terms()) {
        q.eta[i] = zp::add(q.eta[i], zp::mul(scale, zp::mul(ui, v.constant_residue(), p), p), p);
    }
    for (const auto &[j, vj] : v.terms()) {
        q.eta[j] = zp::add(q.eta[j], zp::mul(scale, zp::mul(vj, u.constant_residue(), p), p), p);
    }
    // u_i v_j x_i x_j contributes 2^{-1} u_i v_j to both Theta_ij and Theta_ji.
    for (const auto &[i, ui] : u.terms()) {
        for (const auto &[j, vj] : v.terms()) {
            uint32_t w = zp::mul(half_scale, zp::mul(ui, vj, p), p);
            if (i == j) {
                q.theta.add(i, i, zp::add(w, w, p));
            } else {
                q.theta.add(i, j, w);
            }
        }
    }
}

std::string parenthesize(const SymbolicForm &f) {
    size_t count = f.terms().size() + (f.constant_term() != 0 ? 1 : 0);
    return count > 1 ? "(" + f.str() + ")" : f.str();
}

}  // namespace

LabeledCircuit label_circuit(const Circuit &circuit, std::span<const uint32_t> a, std::span<const uint32_t> b) {
    check_tuple(a, circuit, "input a");
    check_tuple(b, circuit, "outcome b");
    FourierClassification fourier = classify_fourier_gates(circuit);
    const OddPrime modulus = circuit.modulus();
    auto gates = propagate_wire_labels<AffineForm>(
        circuit,
        fourier,
        [&](uint32_t r) { return AffineForm::constant(modulus, a[r]); },
        [&](uint32_t l) { return AffineForm::variable(modulus, l); },
        [&](uint32_t r) { return AffineForm::constant(modulus, b[r]); });
    return LabeledCircuit{
        circuit,
        std::move(fourier),
        std::vector<uint32_t>(a.begin(), a.end()),
        std::vector<uint32_t>(b.begin(), b.end()),
        std::move(gates)};
}

std::string LabeledCircuit::str() const {
    std::stringstream out;
    const auto &g = circuit.gates();
    for (size_t k = 0; k < g.size(); k++) {
        out << "  [" << k << "] " << g[k];
        if (fourier.roles[k] == FourierRole::Terminal) {
            out << " (terminal)";
        } else if (fourier.roles[k] == FourierRole::NonTerminal) {
            out << " (x" << fourier.path_variable[k] + 1 << ")";
        }
        out << ": " << join_labels(gates[k].in) << " -> " << join_labels(gates[k].out) << "\n";
    }
    return out.str();
}

QuadraticForm extract_phase_polynomial(const LabeledCircuit &labeled) {
    const OddPrime modulus = labeled.circuit.modulus();
    const size_t alpha = labeled.alpha();
    QuadraticForm q{SymmetricMatrix(modulus, alpha), std::vector<uint32_t>(alpha, 0), 0};
    const auto &gates = labeled.circuit.gates();
    for (size_t k = 0; k < gates.size(); k++) {
        const auto &gl = labeled.gates[k];
        if (gates[k].kind == GateKind::Fourier) {
            add_product(q, gl.in[0], gl.out[0], 1);
        } else if (gates[k].kind == GateKind::Phase) {
            const AffineForm &s = gl.in[0];
            add_product(q, s, s - AffineForm::constant(modulus, 1), modulus.half());
        }
    }
    return q;
}

FieldElement QuadraticForm::evaluate(std::span<const uint32_t> x) const {
    const uint32_t p = modulus().value();
    const size_t n = alpha();
    uint64_t total = zeta;
    for (size_t i = 0; i < n; i++) {
        if (x[i] == 0) {
            continue;
        }
        uint64_t row = eta[i];
        for (size_t j = 0; j < n; j++) {
            row += (uint64_t)theta(i, j) * x[j] % p;
        }
        total += row % p * x[i] % p;
    }
    return FieldElement(modulus(), (int64_t)(total % p));
}

std::string QuadraticForm::str() const {
    const uint32_t p = modulus().value();
    const size_t n = alpha();
    std::vector<std::string> parts;
    auto emit = [&](uint32_t c, const std::string &monomial) {
        if (c == 0) {
            return;
        }
        if (monomial.empty()) {
            parts.push_back(std::to_string(c));
        } else {
            parts.push_back((c == 1 ? "" : std::to_string(c) + "*") + monomial);
        }
    };
    for (size_t i = 0; i < n; i++) {
        emit(theta(i, i), "x" + std::to_string(i + 1) + "^2");
        for (size_t j = i + 1; j < n; j++) {
            emit(zp::add(theta(i, j), theta(i, j), p), "x" + std::to_string(i + 1) + "*x" + std::to_string(j + 1));
        }
    }
    for (size_t i = 0; i < n; i++) {
        emit(eta[i], "x" + std::to_string(i + 1));
    }
    emit(zeta, "");
    if (parts.empty()) {
        return "0";
    }
    std::string s = parts[0];
    for (size_t i = 1; i < parts.size(); i++) {
        s += " + " + parts[i];
    }
    return s;
}

SymbolicForm SymbolicForm::symbol(Symbol s) {
    SymbolicForm f;
    f.terms_[s] = 1;
    return f;
}

SymbolicForm SymbolicForm::constant(int64_t value) {
    SymbolicForm f;
    f.constant_ = value;
    return f;
}

SymbolicForm SymbolicForm::operator+(const SymbolicForm &other) const {
    SymbolicForm out = *this;
    out.constant_ += other.constant_;
    for (const auto &[s, c] : other.terms_) {
        int64_t &slot = out.terms_[s];
        slot += c;
        if (slot == 0) {
            out.terms_.erase(s);
        }
    }
    return out;
}

SymbolicForm SymbolicForm::operator-(const SymbolicForm &other) const {
    SymbolicForm negated;
    negated.constant_ = -other.constant_;
    for (const auto &[s, c] : other.terms_) {
        negated.terms_[s] = -c;
    }
    return *this + negated;
}

std::string SymbolicForm::str() const {
    std::string s;
    auto append = [&](int64_t c, const std::string &name) {
        int64_t magnitude = c < 0 ? -c : c;
        if (s.empty()) {
            s += c < 0 ? "-" : "";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (name.empty()) {
            s += std::to_string(magnitude);
        } else {
            s += (magnitude == 1 ? "" : std::to_string(magnitude) + "*") + name;
        }
    };
    for (const auto &[sym, c] : terms_) {
        append(c, sym.str());
    }
    if (constant_ != 0 || s.empty()) {
        append(constant_, "");
    }
    return s;
}

void SymbolicPolynomial::add_product(const SymbolicForm &u, const SymbolicForm &v, Coefficient scale) {
    auto add = [&](Monomial m, Coefficient c) {
        std::sort(m.begin(), m.end());
        Coefficient &slot = terms_[m];
        slot += c;
        if (slot.numerator() == 0) {
            terms_.erase(m);
        }
    };
    auto uc = u.constant_term();
    auto vc = v.constant_term();
    if (uc != 0 && vc != 0) {
        add({}, scale * uc * vc);
    }
    for (const auto &[s, c] : u.terms()) {
        if (vc != 0) {
            add({s}, scale * c * vc);
        }
    }
    for (const auto &[s, c] : v.terms()) {
        if (uc != 0) {
            add({s}, scale * c * uc);
        }
    }
    for (const auto &[s, c] : u.terms()) {
        for (const auto &[t, d] : v.terms()) {
            add({s, t}, scale * c * d);
        }
    }
}

std::string SymbolicPolynomial::str() const {
    std::string s;
    for (const auto &[monomial, c] : terms_) {
        std::string name;
        for (size_t i = 0; i < monomial.size(); i++) {
            if (i) {
                name += "*";
            }
            name += monomial[i].str();
        }
        const bool negative = c.numerator() < 0;
        Coefficient magnitude = negative ? -c : c;
        if (s.empty()) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        std::string coeff = std::to_string(magnitude.numerator());
        if (magnitude.denominator() != 1) {
            coeff += "/" + std::to_string(magnitude.denominator());
        }
        if (name.empty()) {
            s += coeff;
        } else {
            s += (magnitude == Coefficient(1) ? "" : coeff + "*") + name;
        }
    }
    return s.empty() ? "0" : s;
}

std::vector<GateLabels<SymbolicForm>> label_circuit_symbolic(const Circuit &circuit) {
    FourierClassification fourier = classify_fourier_gates(circuit);
    return propagate_wire_labels<SymbolicForm>(
        circuit,
        fourier,
        [](uint32_t r) { return SymbolicForm::symbol({'a', r}); },
        [](uint32_t l) { return SymbolicForm::symbol({'x', l}); },
        [](uint32_t r) { return SymbolicForm::symbol({'b', r}); });
}

std::vector<std::string> symbolic_phase_terms(const Circuit &circuit) {
    auto labels = label_circuit_symbolic(circuit);
    std::vector<std::string> terms;
    const auto &gates = circuit.gates();
    for (size_t k = 0; k < gates.size(); k++) {
        if (gates[k].kind == GateKind::Fourier) {
            std::string u = parenthesize(labels[k].in[0]);
            std::string v = parenthesize(labels[k].out[0]);
            if (v < u) {
                std::swap(u, v);
            }
            terms.push_back(u + "*" + v);
        } else if (gates[k].kind == GateKind::Phase) {
            const SymbolicForm &s = labels[k].in[0];
            terms.push_back("2^-1*" + parenthesize(s) + "*(" + (s - SymbolicForm::constant(1)).str() + ")");
        }
    }
    return terms;
}

SymbolicPolynomial symbolic_phase_polynomial(const Circuit &circuit) {
    auto labels = label_circuit_symbolic(circuit);
    SymbolicPolynomial poly;
    const auto &gates = circuit.gates();
    for (size_t k = 0; k < gates.size(); k++) {
        if (gates[k].kind == GateKind::Fourier) {
            poly.add_product(labels[k].in[0], labels[k].out[0], 1);
        } else if (gates[k].kind == GateKind::Phase) {
            const SymbolicForm &s = labels[k].in[0];
            poly.add_product(s, s - SymbolicForm::constant(1), SymbolicPolynomial::Coefficient(1, 2));
        }
    }
    return poly;
}

}  // namespace quopath
