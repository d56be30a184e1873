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

#include "quopath/cli.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "quopath/circuit.h"
#include "quopath/evaluator.h"
#include "quopath/oracle.h"
#include "quopath/pathsum.h"

namespace quopath {

namespace {

constexpr double kCheckTolerance = 1e-9;
constexpr size_t kExplainMatrixLimit = 64;

std::string rational_str(const Rational &r) {
    std::string num = boost::multiprecision::numerator(r).str();
    std::string den = boost::multiprecision::denominator(r).str();
    return den == "1" ? num : num + "/" + den;
}

nlohmann::json big_integer_json(const boost::multiprecision::cpp_int &value) {
    if (value >= 0 && value <= std::numeric_limits<uint64_t>::max()) {
        return value.convert_to<uint64_t>();
    }
    return value.str();
}

nlohmann::json scalar_json(const ExactScalar &s) {
    return {
        {"zero", s.is_zero()},
        {"k", s.sqrtp_exponent()},
        {"q", s.quarter_turns()},
        {"c", s.p_phase().residue()},
    };
}

nlohmann::json report_json(const AmplitudeReport &report) {
    return {
        {"amplitude", scalar_json(report.amplitude)},
        {"probability",
         {{"num", big_integer_json(boost::multiprecision::numerator(report.probability))},
          {"den", big_integer_json(boost::multiprecision::denominator(report.probability))}}},
        {"r", report.r},
        {"alpha", report.alpha},
        {"z_size", report.z_size},
    };
}

std::string tuple_str(std::span<const uint32_t> values) {
    std::string s;
    for (size_t i = 0; i < values.size(); i++) {
        if (i) {
            s += ",";
        }
        s += std::to_string(values[i]);
    }
    return s;
}

std::string weight_str(const ExactScalar &weight) {
    return std::to_string(weight.modulus().value()) + "^(" + std::to_string(weight.sqrtp_exponent()) + "/2)";
}

std::string one_based_indices(const std::vector<size_t> &indices) {
    std::string s = "{";
    for (size_t i = 0; i < indices.size(); i++) {
        if (i) {
            s += ", ";
        }
        s += std::to_string(indices[i] + 1);
    }
    return s + "}";
}

std::string symbolic_join(const std::vector<SymbolicForm> &forms) {
    std::string s;
    for (size_t i = 0; i < forms.size(); i++) {
        if (i) {
            s += ", ";
        }
        s += forms[i].str();
    }
    return forms.size() == 1 ? s : "(" + s + ")";
}

void print_explanation(const AmplitudeTrace &trace, std::ostream &out) {
    const Circuit &standard = trace.labeled.circuit;
    out << "standard form: " << standard.gates().size() << " gates, alpha = " << trace.labeled.alpha() << "\n";
    out << "symbolic labels:\n";
    auto symbolic = label_circuit_symbolic(standard);
    for (size_t k = 0; k < standard.gates().size(); k++) {
        out << "  [" << k << "] " << standard.gates()[k] << ": " << symbolic_join(symbolic[k].in) << " -> "
            << symbolic_join(symbolic[k].out) << "\n";
    }
    out << "S(x) symbolic = " << symbolic_phase_polynomial(standard).str() << "\n";
    out << "labels at a = (" << tuple_str(trace.labeled.a) << "), b = (" << tuple_str(trace.labeled.b) << "):\n";
    out << trace.labeled.str();
    out << "S(x) = " << trace.form.str() << "\n";
    const size_t alpha = trace.form.alpha();
    if (alpha <= kExplainMatrixLimit) {
        out << "Theta =\n" << trace.form.theta.to_matrix().str();
        out << "L =\n" << trace.diagonalization.L().str();
    } else {
        out << "Theta, L: omitted (alpha > " << kExplainMatrixLimit << ")\n";
    }
    out << "eta = (" << tuple_str(trace.form.eta) << ")\n";
    out << "zeta = " << trace.form.zeta << "\n";
    out << "diagonal = (" << tuple_str(trace.diagonalization.diagonal()) << ")\n";
    out << "mu = L^T eta = (" << tuple_str(trace.mu) << ")\n";
    out << "X = " << one_based_indices(trace.partition.X) << ", Y = " << one_based_indices(trace.partition.Y)
        << ", Z = " << one_based_indices(trace.partition.Z) << "\n";
    out << "r = " << trace.report.r << ", alpha = " << trace.report.alpha << ", |Z| = " << trace.report.z_size
        << "\n";
}

struct Options {
    std::string circuit_path;
    std::string input;
    std::string outcome;
    bool explain = false;
    bool json = false;
    uint64_t trials = 100;
    uint64_t seed = 0;
    uint64_t cap = kDefaultTableCap;
};

int run_amp_or_prob(const Options &opt, bool want_probability, std::ostream &out) {
    Circuit circuit = read_circuit_file(opt.circuit_path);
    auto a = parse_tuple(opt.input, circuit.modulus(), circuit.num_registers());
    auto b = parse_tuple(opt.outcome, circuit.modulus(), circuit.num_registers());
    AmplitudeTrace trace = explain_amplitude(circuit, a, b);
    if (opt.explain) {
        print_explanation(trace, out);
    }
    const AmplitudeReport &report = trace.report;
    if (opt.json) {
        out << report_json(report).dump() << "\n";
    } else if (want_probability) {
        out << rational_str(report.probability) << "\n";
        out << format_decimal(report.probability.convert_to<double>()) << "\n";
    } else {
        out << report.amplitude.str() << "\n";
        out << format_complex(report.amplitude.to_complex()) << "\n";
    }
    return kExitOk;
}

int run_table(const Options &opt, std::ostream &out) {
    Circuit circuit = read_circuit_file(opt.circuit_path);
    auto a = parse_tuple(opt.input, circuit.modulus(), circuit.num_registers());
    auto rows = amplitude_table(circuit, a, opt.cap);
    Rational total = 0;
    if (opt.json) {
        nlohmann::json array = nlohmann::json::array();
        for (size_t i = 0; i < rows.size(); i++) {
            auto entry = report_json(rows[i]);
            entry["b"] = outcome_at(circuit.modulus(), circuit.num_registers(), i);
            array.push_back(std::move(entry));
        }
        out << array.dump() << "\n";
        return kExitOk;
    }
    out << "# b  amplitude  decimal  probability\n";
    for (size_t i = 0; i < rows.size(); i++) {
        auto b = outcome_at(circuit.modulus(), circuit.num_registers(), i);
        out << tuple_str(b) << "  " << rows[i].amplitude.str() << "  " << format_complex(rows[i].amplitude.to_complex())
            << "  " << rational_str(rows[i].probability) << "\n";
        total += rows[i].probability;
    }
    out << "# total probability = " << rational_str(total) << "\n";
    return kExitOk;
}

int run_weight(const Options &opt, std::ostream &out) {
    Circuit circuit = read_circuit_file(opt.circuit_path);
    BalanceWeight w = balance_weight(circuit);
    if (opt.json) {
        out << nlohmann::json{{"weight", scalar_json(w.weight)}, {"r", w.r}, {"alpha", w.alpha}}.dump() << "\n";
        return kExitOk;
    }
    out << "weight = " << weight_str(w.weight) << " = " << format_decimal(w.weight.to_complex().real()) << "\n";
    out << "r = " << w.r << "\n";
    out << "alpha = " << w.alpha << "\n";
    return kExitOk;
}

int run_check(const Options &opt, std::ostream &out) {
    Circuit circuit = read_circuit_file(opt.circuit_path);
    const OddPrime modulus = circuit.modulus();
    const uint32_t p = modulus.value();
    const size_t n = circuit.num_registers();
    // Fails fast with CapExceeded when the dense oracle is out of reach.
    DenseState probe(modulus, n, std::vector<uint32_t>(n, 0));

    PathSumEvaluator evaluator(circuit);
    bool enumerate = true;
    {
        uint64_t count = 1;
        for (size_t i = 0; i < evaluator.alpha() && enumerate; i++) {
            count *= p;
            enumerate = count <= kPathSumCap;
        }
    }

    std::mt19937_64 rng(opt.seed);
    auto random_tuple = [&]() {
        std::vector<uint32_t> t(n);
        for (auto &v : t) {
            v = (uint32_t)(rng() % p);
        }
        return t;
    };
    double max_dense = 0;
    double max_path_sum = 0;
    for (uint64_t trial = 0; trial < opt.trials; trial++) {
        auto a = random_tuple();
        auto b = random_tuple();
        std::complex<double> closed = evaluator.evaluate(a, b).amplitude.to_complex();
        max_dense = std::max(max_dense, std::abs(closed - dense_amplitude(circuit, a, b)));
        if (enumerate) {
            QuadraticForm form = extract_phase_polynomial(label_circuit(evaluator.standard_circuit(), a, b));
            max_path_sum = std::max(max_path_sum, std::abs(closed - brute_force_path_sum(form, n)));
        }
    }

    auto verdict = [](double deviation) { return deviation < kCheckTolerance ? " < 1e-9" : " >= 1e-9 (MISMATCH)"; };
    char buffer[64];
    out << "trials = " << opt.trials << ", seed = " << opt.seed << ", alpha = " << evaluator.alpha() << "\n";
    std::snprintf(buffer, sizeof(buffer), "%.3e", max_dense);
    out << "max |closed_form - dense| = " << buffer << verdict(max_dense) << "\n";
    if (enumerate) {
        std::snprintf(buffer, sizeof(buffer), "%.3e", max_path_sum);
        out << "max |closed_form - path_sum| = " << buffer << verdict(max_path_sum) << "\n";
    } else {
        out << "max |closed_form - path_sum| = skipped (p^alpha > " << kPathSumCap << ")\n";
    }
    bool ok = max_dense < kCheckTolerance && max_path_sum < kCheckTolerance;
    return ok ? kExitOk : kExitCheckFailed;
}

int run_normalize(const Options &opt, std::ostream &out) {
    out << normalize_to_standard_form(read_circuit_file(opt.circuit_path)).str();
    return kExitOk;
}

}  // namespace

std::vector<uint32_t> parse_tuple(std::string_view text, OddPrime modulus, size_t num_registers) {
    std::vector<uint32_t> values;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && std::isspace((unsigned char)field.front())) {
            field.remove_prefix(1);
        }
        while (!field.empty() && std::isspace((unsigned char)field.back())) {
            field.remove_suffix(1);
        }
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
            throw std::invalid_argument("malformed tuple '" + std::string(text) + "'");
        }
        if (v >= modulus.value()) {
            throw std::invalid_argument(
                "tuple entry " + std::to_string(v) + " is not a residue mod " + std::to_string(modulus.value()));
        }
        values.push_back((uint32_t)v);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    if (values.size() != num_registers) {
        throw std::invalid_argument(
            "tuple '" + std::string(text) + "' has " + std::to_string(values.size()) + " entries, expected " +
            std::to_string(num_registers));
    }
    return values;
}

std::string format_decimal(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.6f", value);
    std::string s = buffer;
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

std::string format_complex(std::complex<double> value) {
    std::string re = format_decimal(value.real());
    std::string im = format_decimal(value.imag());
    if (im[0] == '-') {
        return re + im + "i";
    }
    return re + "+" + im + "i";
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact amplitudes and outcome probabilities of quopit Clifford circuits"};
    app.require_subcommand(1);
    Options opt;

    auto add_circuit = [&](CLI::App *sub) {
        sub->add_option("-c,--circuit", opt.circuit_path, "Circuit file")->required();
    };
    auto add_output_flags = [&](CLI::App *sub) {
        sub->add_flag("--json", opt.json, "Machine-readable output");
    };

    auto *amp = app.add_subcommand("amp", "Print <b|U|a> exactly and in decimal");
    auto *prob = app.add_subcommand("prob", "Print |<b|U|a>|^2 as an exact rational");
    for (auto *sub : {amp, prob}) {
        add_circuit(sub);
        sub->add_option("-a,--input", opt.input, "Input tuple, comma separated")->required();
        sub->add_option("-b,--outcome", opt.outcome, "Outcome tuple, comma separated")->required();
        sub->add_flag("--explain", opt.explain, "Dump labels, S(x), Theta/eta/zeta, L, diagonal and X/Y/Z");
        add_output_flags(sub);
    }
    auto *table = app.add_subcommand("table", "Print every outcome for a fixed input");
    add_circuit(table);
    table->add_option("-a,--input", opt.input, "Input tuple, comma separated")->required();
    table->add_option("--cap", opt.cap, "Maximum number of rows");
    add_output_flags(table);
    auto *weight = app.add_subcommand("weight", "Print the common magnitude of all nonzero amplitudes");
    add_circuit(weight);
    add_output_flags(weight);
    auto *check = app.add_subcommand("check", "Compare the closed form against brute-force oracles");
    add_circuit(check);
    check->add_option("--trials", opt.trials, "Number of random (a, b) pairs");
    check->add_option("--seed", opt.seed, "Random seed");
    auto *normalize = app.add_subcommand("normalize", "Print the standard-form circuit");
    add_circuit(normalize);

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (amp->parsed()) {
            return run_amp_or_prob(opt, false, out);
        }
        if (prob->parsed()) {
            return run_amp_or_prob(opt, true, out);
        }
        if (table->parsed()) {
            return run_table(opt, out);
        }
        if (weight->parsed()) {
            return run_weight(opt, out);
        }
        if (check->parsed()) {
            return run_check(opt, out);
        }
        if (normalize->parsed()) {
            return run_normalize(opt, out);
        }
    } catch (const CapExceeded &e) {
        err << "error: " << e.what() << "\n";
        return kExitCapExceeded;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
    return kExitInvalid;
}

}  // namespace quopath
