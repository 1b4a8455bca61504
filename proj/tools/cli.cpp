// Copyright 2026 The djpart Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "djpart/djbox.hpp"
#include "djpart/errors.hpp"
#include "djpart/machine.hpp"
#include "djpart/partition.hpp"
#include "djpart/quantum_core.hpp"

namespace djpart::cli {

namespace {

constexpr int kDefaultQr = 3;

std::vector<std::string> split_tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> tokens;
    for (std::string t; in >> t;) tokens.push_back(t);
    return tokens;
}

std::string join_numbers(const std::vector<Number>& values) {
    std::string s;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) s += ' ';
        s += values[i].to_string();
    }
    return s;
}

std::string bits_text(const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
}

InputFile read_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    return parse_input(in);
}

// Oracle selection for the dj command. A table that keeps neither promise
// runs anyway and is flagged.
struct OracleChoice {
    Oracle oracle;
    bool promise_violated = false;
};

OracleChoice parse_oracle(const std::string& spec, int n) {
    const std::size_t states = std::size_t{1} << n;
    if (spec == "constant0") return {constant_zero()};
    if (spec == "constant1") return {constant_one()};
    if (spec.rfind("mask:", 0) == 0) {
        const std::string digits = spec.substr(5);
        std::uint64_t mask = 0;
        try {
            std::size_t used = 0;
            mask = std::stoull(digits, &used);
            if (used != digits.size()) throw std::invalid_argument(digits);
        } catch (const std::exception&) {
            throw CLI::ValidationError("--oracle", "mask must be a decimal integer, got '" + digits + "'");
        }
        if (mask == 0 || mask >= states) {
            throw CLI::ValidationError("--oracle", "mask must be in [1, " + std::to_string(states - 1) + "]");
        }
        return {balanced_mask(mask)};
    }
    if (spec.rfind("table:", 0) == 0) {
        std::vector<int> bits;
        for (char c : spec.substr(6)) {
            if (c != '0' && c != '1') throw CLI::ValidationError("--oracle", "table entries must be 0 or 1");
            bits.push_back(c - '0');
        }
        if (bits.size() != states) {
            throw CLI::ValidationError("--oracle", "table needs " + std::to_string(states) + " entries for n=" +
                                                       std::to_string(n));
        }
        const auto ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
        if (ones == 0) return {constant_zero()};
        if (ones == states) return {constant_one()};
        if (2 * ones == states) return {balanced_table(std::move(bits))};
        return {table_oracle(std::move(bits)), true};
    }
    throw CLI::ValidationError("--oracle", "expected constant0, constant1, mask:M or table:BITS, got '" + spec + "'");
}

std::string outcome_line(const DjOutcome& outcome, int n) {
    if (outcome.is_constant()) return "constant";
    std::string s = "balanced, states:";
    for (auto z : outcome.detected()) s += ' ' + bits_text(to_bits(z, n));
    return s;
}

void append_dump(std::ostream& out, const Machine& m, bool ascii) { out << '\n' << m.render(ascii); }

// Expected post-state of the built-in demo.
struct DemoExpectation {
    std::vector<Number> results{620, 530, 300};
    std::vector<Number> control{10, 26, 76, 0, 86, 54};  // mm[2..7]
    std::vector<Number> partition{1, 0, 0, 0, 1, 0, 0, 1, 0, 0};
    std::vector<Number> v3{620, 530, 300, 0, 1, 0, 0, 1};
    std::vector<std::vector<Number>> dj{{4, 100, 100, 20, 400}, {3, 30, 200, 300}, {3, 100, 100, 100}};
};

BinnedData demo_data() {
    const char bins[] = "AAAABBBCCC";
    const std::int64_t values[] = {100, 100, 20, 400, 30, 200, 300, 100, 100, 100};
    std::vector<BinnedData::Row> rows;
    for (std::size_t i = 0; i < 10; ++i) rows.push_back({Cell::symbol(bins[i]), Number(values[i])});
    return BinnedData(std::move(rows));
}

std::vector<std::string> demo_mismatches(const Machine& m, const std::vector<Number>& results,
                                         const DemoExpectation& want) {
    std::vector<std::string> bad;
    auto check_block = [&](const std::string& what, auto&& get, const std::vector<Number>& expected) {
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const Cell& got = get(i);
            if (!(got == Cell(expected[i]))) {
                bad.push_back(what + "[" + std::to_string(i + 1) + "] = " + got.to_string() + ", expected " +
                              expected[i].to_string());
            }
        }
    };
    if (results != want.results) bad.push_back("results " + join_numbers(results));
    check_block("mm@51", [&](std::size_t i) -> const Cell& { return m.memory(51 + i); }, want.results);
    check_block("mm@2", [&](std::size_t i) -> const Cell& { return m.memory(2 + i); }, want.control);
    check_block("mm@76", [&](std::size_t i) -> const Cell& { return m.memory(76 + i); }, want.partition);
    check_block("V3", [&](std::size_t i) -> const Cell& { return m.vector_cell(3, i + 1); }, want.v3);
    for (std::size_t r = 0; r < want.dj.size(); ++r) {
        check_block("DJ V" + std::to_string(r + 1),
                    [&](std::size_t i) -> const Cell& { return m.dj_cell(r + 1, i + 1); }, want.dj[r]);
    }
    return bad;
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const ConfigError*>(&e)) return kUsageError;
    if (dynamic_cast<const CapacityError*>(&e)) return kCapacityError;
    if (dynamic_cast<const ContractError*>(&e)) return kOracleContractError;
    return kDataError;
}

}  // namespace

InputFile parse_input(std::istream& in) {
    InputFile file;
    std::size_t columns = 0;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto tokens = split_tokens(line);
        if (tokens.empty()) continue;
        const std::string where = "line " + std::to_string(line_no);
        if (tokens.size() > 2) throw TypeError(where + ": expected 'bin value' or 'value'");
        if (columns == 0) columns = tokens.size();
        if (tokens.size() != columns) throw TypeError(where + ": rows mix one- and two-column layouts");

        if (file.values.size() == kMaxDataLength) {
            throw CapacityError("input has more than " + std::to_string(kMaxDataLength) + " rows");
        }
        if (columns == 2) {
            auto bin = parse_cell(tokens[0]);
            if (!bin) throw TypeError(where + ": bin '" + tokens[0] + "' is neither a number nor one character");
            if (!file.bins.empty() && bin->is_symbol() != file.bins.front().is_symbol()) {
                throw TypeError(where + ": bins mix symbols and numbers");
            }
            file.bins.push_back(*bin);
        }
        auto value = Number::parse(tokens.back());
        if (!value) throw TypeError(where + ": value '" + tokens.back() + "' is not a number");
        file.values.push_back(*value);
    }
    if (file.values.empty()) throw DomainError("input has no data rows");
    return file;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Vector machine with a Deutsch-Jozsa coprocessor: partition vectors and per-part reductions",
                 "djpart"};
    app.require_subcommand(1);

    // machine show
    auto* machine_cmd = app.add_subcommand("machine", "Machine inspection");
    machine_cmd->require_subcommand(1);
    auto* show_cmd = machine_cmd->add_subcommand("show", "Print the dump of a freshly defined machine");
    int show_qr = kDefaultQr;
    bool show_ascii = false;
    show_cmd->add_option("--qr", show_qr, "Query register width")->required()->check(CLI::Range(1, 6));
    show_cmd->add_flag("--ascii", show_ascii, "Print the superposition marker as @");

    // dj
    auto* dj_cmd = app.add_subcommand("dj", "Run the Deutsch-Jozsa box with a built-in oracle");
    int dj_n = kDefaultQr;
    std::string dj_oracle;
    bool dj_matrix = false;
    dj_cmd->add_option("--n", dj_n, "Number of query qubits")->required()->check(CLI::Range(1, 6));
    dj_cmd->add_option("--oracle", dj_oracle, "constant0 | constant1 | mask:M | table:BITS")->required();
    dj_cmd->add_flag("--show-matrix", dj_matrix, "Print the label-weighted outcome matrix");

    // partition
    auto* part_cmd = app.add_subcommand("partition", "Compute the partition vector of a bins column");
    std::string part_input;
    int part_qr = kDefaultQr;
    bool part_show = false;
    bool part_ascii = false;
    part_cmd->add_option("--input", part_input, "Input file of 'bin value' rows")->required();
    part_cmd->add_option("--qr", part_qr, "Query register width")->check(CLI::Range(1, 6));
    part_cmd->add_flag("--show-machine", part_show, "Append the machine dump");
    part_cmd->add_flag("--ascii", part_ascii, "Print the superposition marker as @");

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "Apply a reducer to every part of the data column");
    std::string reduce_input;
    std::string reduce_op;
    std::string reduce_pv;
    int reduce_qr = kDefaultQr;
    bool reduce_show = false;
    bool reduce_ascii = false;
    reduce_cmd->add_option("--input", reduce_input, "Input file of 'bin value' (or 'value') rows")->required();
    reduce_cmd->add_option("--op", reduce_op, "Reducer")
        ->required()
        ->check(CLI::IsMember({"sum", "product", "min", "max", "count"}));
    reduce_cmd->add_option("--pv", reduce_pv, "Explicit partition vector, e.g. \"1 0 0 1\"");
    reduce_cmd->add_option("--qr", reduce_qr, "Query register width")->check(CLI::Range(1, 6));
    reduce_cmd->add_flag("--show-machine", reduce_show, "Append the machine dump");
    reduce_cmd->add_flag("--ascii", reduce_ascii, "Print the superposition marker as @");

    // demo
    auto* demo_cmd = app.add_subcommand("demo", "Run the built-in worked example and self-check the final state");
    bool demo_ascii = false;
    bool demo_corrupt = false;
    demo_cmd->add_flag("--ascii", demo_ascii, "Print the superposition marker as @");
    demo_cmd->add_flag("--corrupt-expectation", demo_corrupt, "Testing aid: expect a wrong result")->group("");

    std::vector<const char*> argv{"djpart"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, err, err);
        return kUsageError;
    }

    std::ostringstream buf;
    try {
        if (show_cmd->parsed()) {
            buf << define_machine(show_qr).render(show_ascii);
        } else if (dj_cmd->parsed()) {
            const OracleChoice choice = parse_oracle(dj_oracle, dj_n);
            Machine m = define_machine(dj_n);
            const DjRun r = run_djbox(m, choice.oracle, RegisterBinding{});
            if (dj_matrix) buf << r.matrix.to_string();
            buf << outcome_line(r.outcome, dj_n);
            if (choice.promise_violated) buf << " (promise violated)";
            buf << '\n';
        } else if (part_cmd->parsed()) {
            const InputFile in = read_input(part_input);
            if (!in.has_bins()) throw TypeError("partition needs 'bin value' rows");
            Machine m = define_machine(part_qr);
            const PartitionRun r = get_partition(m, in.bins);
            buf << r.vector.to_string() << '\n' << "parts: " << r.vector.part_count() << '\n';
            if (part_show) append_dump(buf, m, part_ascii);
        } else if (reduce_cmd->parsed()) {
            const InputFile in = read_input(reduce_input);
            const Reducer op = parse_reducer(reduce_op);
            Machine m = define_machine(reduce_qr);
            ReduceRun r = [&] {
                if (!reduce_pv.empty()) {
                    return calc_with_partition_vector(m, in.values, PartitionVector::parse(reduce_pv), op);
                }
                if (!in.has_bins()) throw TypeError("reduce without --pv needs 'bin value' rows");
                std::vector<BinnedData::Row> rows;
                for (std::size_t i = 0; i < in.values.size(); ++i) rows.push_back({in.bins[i], in.values[i]});
                return calc_with_partitions(m, BinnedData(std::move(rows)), op);
            }();
            buf << join_numbers(r.totals) << '\n';
            if (reduce_show) append_dump(buf, m, reduce_ascii);
        } else if (demo_cmd->parsed()) {
            Machine m = define_machine(kDefaultQr);
            const ReduceRun r = calc_with_partitions(m, demo_data(), Reducer::kSum);
            for (const auto& e : r.events) buf << e.text() << '\n';
            buf << join_numbers(r.totals) << '\n';
            append_dump(buf, m, demo_ascii);

            DemoExpectation want;
            if (demo_corrupt) want.results[0] = Number(621);
            const auto bad = demo_mismatches(m, r.totals, want);
            if (!bad.empty()) {
                err << "self-check failed:\n";
                for (const auto& b : bad) err << "  " << b << '\n';
                return kDataError;
            }
            buf << "\nself-check: pass\n";
        }
    } catch (const CLI::ValidationError& e) {
        err << "djpart: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "djpart: " << e.what() << '\n';
        return exit_code_for(e);
    }
    out << buf.str();
    return kSuccess;
}

}  // namespace djpart::cli
