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

#include "djpart/djbox.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "djpart/errors.hpp"
#include "djpart/quantum_core.hpp"

namespace djpart {

PConvMatrix::PConvMatrix(int n) : n_(n), size_(std::size_t{1} << n), entries_(size_ * size_, 0) {}

std::span<const std::int64_t> PConvMatrix::row(std::size_t x) const {
    if (x >= size_) throw DomainError("PConvMatrix row out of range");
    return std::span<const std::int64_t>(entries_).subspan(x * size_, size_);
}

void PConvMatrix::set_row(std::size_t x, std::span<const std::int64_t> values) {
    if (x >= size_ || values.size() != size_) throw DomainError("PConvMatrix row shape mismatch");
    std::copy(values.begin(), values.end(), entries_.begin() + static_cast<std::ptrdiff_t>(x * size_));
}

std::vector<std::int64_t> PConvMatrix::column_sums() const {
    std::vector<std::int64_t> t(size_, 0);
    for (std::size_t x = 0; x < size_; ++x) {
        for (std::size_t z = 0; z < size_; ++z) t[z] += entries_[x * size_ + z];
    }
    return t;
}

std::string PConvMatrix::to_string() const {
    std::ostringstream out;
    for (std::size_t x = 0; x < size_; ++x) {
        for (std::size_t z = 0; z < size_; ++z) {
            if (z != 0) out << ' ';
            out << entries_[x * size_ + z];
        }
        out << '\n';
    }
    return out.str();
}

DjOutcome DjOutcome::balanced(std::vector<std::uint64_t> detected) {
    if (detected.empty()) throw DomainError("a balanced outcome needs at least one detected state");
    if (std::find(detected.begin(), detected.end(), 0U) != detected.end()) {
        throw DomainError("state 0 cannot be detected under label weighting");
    }
    std::sort(detected.begin(), detected.end());
    return DjOutcome(std::move(detected));
}

std::string DjEvent::text() const {
    if (kind == Kind::kZeroState) return "QUERY REGISTER IN 0 STATE";
    std::string out = "QUERY REGISTER EVALUATED IN SUPERPOSITION OF THESE STATES";
    for (const auto& s : states) {
        out += ' ';
        for (int b : s) out += static_cast<char>('0' + b);
    }
    return out;
}

DjOutcome decide(std::span<const std::int64_t> column_sums) {
    std::vector<std::uint64_t> detected;
    for (std::size_t z = 0; z < column_sums.size(); ++z) {
        if (column_sums[z] != 0) detected.push_back(z);
    }
    if (detected.empty()) return DjOutcome::constant();
    return DjOutcome::balanced(std::move(detected));
}

DjRun run_djbox(Machine& machine, const Oracle& oracle, const RegisterBinding& binding) {
    const int n = machine.config().qr;
    const std::size_t states = machine.config().qrsize;
    PConvMatrix matrix(n);

    std::vector<QueryCell> query(static_cast<std::size_t>(n));
    std::vector<std::int64_t> row(states);
    for (std::size_t x = 0; x < states; ++x) {
        const std::vector<int> bits = to_bits(x, n);
        std::transform(bits.begin(), bits.end(), query.begin(),
                       [](int b) { return b == 0 ? QueryCell::kZero : QueryCell::kOne; });
        machine.load_query_register(query);

        const Superposition signs = hadamard_transform(bits);
        const int fval = oracle.evaluate(machine, bits, binding);
        if (fval != 0 && fval != 1) {
            throw ContractError("oracle '" + oracle.name + "' returned " + std::to_string(fval) + " for state " +
                                std::to_string(x));
        }
        const int phase = answer_phase(QubitBit(fval)).value();
        for (std::size_t z = 0; z < states; ++z) {
            row[z] = static_cast<std::int64_t>(phase * signs.sign(z)) * static_cast<std::int64_t>(z);
        }
        matrix.set_row(x, row);
    }

    DjOutcome outcome = decide(matrix.column_sums());
    DjEvent event;
    if (outcome.is_constant()) {
        std::fill(query.begin(), query.end(), QueryCell::kZero);
        event.kind = DjEvent::Kind::kZeroState;
    } else {
        std::fill(query.begin(), query.end(), QueryCell::kSuperposed);
        std::vector<std::int64_t> detected(outcome.detected().begin(), outcome.detected().end());
        event.kind = DjEvent::Kind::kSuperposition;
        event.states = convert_to_binary(detected);
    }
    machine.load_query_register(query);
    return DjRun{std::move(outcome), std::move(matrix), std::move(event)};
}

namespace {

std::size_t cell_for(std::span<const int> x) { return static_cast<std::size_t>(to_decimal(x)) + 1; }

}  // namespace

Oracle oracle_f3() {
    return Oracle{"F3", [](Machine& m, std::span<const int> x, const RegisterBinding& b) {
                      const std::size_t a = cell_for(x);
                      const Cell& lhs = m.vector_cell(b.r0 + 1, a);
                      if (lhs.is_empty()) return 1;
                      const Cell& rhs = m.vector_cell(b.r1 + 1, a);
                      m.set_vector_cell(3, a, Cell(cells_match(lhs, rhs) ? 0 : 1));
                      return 1;
                  }};
}

Oracle dj_register_fold_oracle(std::string name, PartFold fold) {
    return Oracle{std::move(name), [fold = std::move(fold)](Machine& m, std::span<const int> x,
                                                            const RegisterBinding& b) {
                      const std::size_t a = cell_for(x);
                      const Cell& len_cell = m.dj_cell(a, static_cast<std::size_t>(b.r0));
                      if (len_cell.is_empty()) return 1;
                      const Number& len = len_cell.number();
                      if (!len.is_integral() || len.to_integer() < 0) {
                          throw TypeError("DJ register length cell holds " + len.to_string());
                      }
                      const auto p = static_cast<std::size_t>(len.to_integer());
                      const auto reg = m.dj_register(a);
                      if (p + 1 > reg.size()) throw CapacityError("DJ register length cell exceeds register width");
                      std::vector<Number> elems;
                      elems.reserve(p);
                      for (std::size_t i = 1; i <= p; ++i) elems.push_back(reg[i].number());
                      m.set_vector_cell(b.r1, a, Cell(fold(elems)));
                      return 1;
                  }};
}

Oracle oracle_f2() {
    return dj_register_fold_oracle("F2", [](std::span<const Number> elems) {
        return std::accumulate(elems.begin(), elems.end(), Number(0));
    });
}

Oracle constant_zero() {
    return Oracle{"constant0", [](Machine&, std::span<const int>, const RegisterBinding&) { return 0; }};
}

Oracle constant_one() {
    return Oracle{"constant1", [](Machine&, std::span<const int>, const RegisterBinding&) { return 1; }};
}

Oracle balanced_mask(std::uint64_t mask) {
    if (mask == 0) throw DomainError("balanced_mask needs a nonzero mask");
    return Oracle{"mask:" + std::to_string(mask), [mask](Machine&, std::span<const int> x, const RegisterBinding&) {
                      if (x.size() < 64 && (mask >> x.size()) != 0) {
                          throw DomainError("mask " + std::to_string(mask) + " exceeds " +
                                            std::to_string(x.size()) + " qubits");
                      }
                      return std::popcount(to_decimal(x) & mask) % 2;
                  }};
}

namespace {

void check_table(const std::vector<int>& bits) {
    if (bits.size() < 2 || !std::has_single_bit(bits.size())) {
        throw DomainError("truth table length must be a power of two >= 2");
    }
    if (std::any_of(bits.begin(), bits.end(), [](int b) { return b != 0 && b != 1; })) {
        throw DomainError("truth table entries must be 0 or 1");
    }
}

Oracle make_table_oracle(std::string name, std::vector<int> bits) {
    return Oracle{std::move(name), [bits = std::move(bits)](Machine&, std::span<const int> x, const RegisterBinding&) {
                      if (x.size() >= 63 || bits.size() != (std::size_t{1} << x.size())) {
                          throw DomainError("truth table of " + std::to_string(bits.size()) +
                                            " entries does not match " + std::to_string(x.size()) + " qubits");
                      }
                      return bits[static_cast<std::size_t>(to_decimal(x))];
                  }};
}

std::string table_name(const std::vector<int>& bits) {
    std::string s = "table:";
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
}

}  // namespace

Oracle balanced_table(std::vector<int> bits) {
    check_table(bits);
    const auto ones = static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
    if (2 * ones != bits.size()) throw DomainError("truth table is not balanced");
    std::string name = table_name(bits);
    return make_table_oracle(std::move(name), std::move(bits));
}

Oracle table_oracle(std::vector<int> bits) {
    check_table(bits);
    std::string name = table_name(bits);
    return make_table_oracle(std::move(name), std::move(bits));
}

}  // namespace djpart
