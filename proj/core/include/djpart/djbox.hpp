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

#ifndef DJPART_DJBOX_HPP
#define DJPART_DJBOX_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "djpart/machine.hpp"

namespace djpart {

/// The two operands handed to an oracle by the DJ box. Their meaning is
/// oracle-specific (register numbers, a column position, ...).
struct RegisterBinding {
    int r1 = 0;
    int r0 = 0;
};

/// The black box U_f. `evaluate` receives the query state x as bits, most
/// significant first, and must return 0 or 1. It may write machine cells,
/// but only register cells with index decimal(x) + 1.
struct Oracle {
    using Fn = std::function<int(Machine&, std::span<const int> x, const RegisterBinding&)>;

    std::string name;
    Fn evaluate;
};

/// Label-weighted outcome matrix: row x, column z holds
/// (-1)^{f(x)} * (-1)^{x.z} * z. Column sums stand in for observation.
class PConvMatrix {
   public:
    explicit PConvMatrix(int n);

    [[nodiscard]] int width() const { return n_; }
    [[nodiscard]] std::size_t states() const { return size_; }
    [[nodiscard]] std::int64_t at(std::size_t x, std::size_t z) const { return entries_.at(x * size_ + z); }
    [[nodiscard]] std::span<const std::int64_t> row(std::size_t x) const;
    void set_row(std::size_t x, std::span<const std::int64_t> values);

    [[nodiscard]] std::vector<std::int64_t> column_sums() const;
    /// One line per row, entries separated by single spaces.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PConvMatrix&, const PConvMatrix&) = default;

   private:
    int n_;
    std::size_t size_;
    std::vector<std::int64_t> entries_;
};

class DjOutcome {
   public:
    static DjOutcome constant() { return DjOutcome({}); }
    /// Throws DomainError if `detected` is empty or contains 0.
    static DjOutcome balanced(std::vector<std::uint64_t> detected);

    [[nodiscard]] bool is_constant() const { return detected_.empty(); }
    [[nodiscard]] bool is_balanced() const { return !detected_.empty(); }
    /// Ascending basis states with a nonzero column sum (empty if constant).
    [[nodiscard]] const std::vector<std::uint64_t>& detected() const { return detected_; }

    friend bool operator==(const DjOutcome&, const DjOutcome&) = default;

   private:
    explicit DjOutcome(std::vector<std::uint64_t> d) : detected_(std::move(d)) {}
    std::vector<std::uint64_t> detected_;
};

/// Message emitted at the end of a DJ box run.
struct DjEvent {
    enum class Kind { kZeroState, kSuperposition };
    Kind kind = Kind::kZeroState;
    /// Binary renderings of the detected states (kSuperposition only).
    std::vector<std::vector<int>> states;

    /// "QUERY REGISTER IN 0 STATE" or
    /// "QUERY REGISTER EVALUATED IN SUPERPOSITION OF THESE STATES 001 100".
    [[nodiscard]] std::string text() const;
    friend bool operator==(const DjEvent&, const DjEvent&) = default;
};

struct DjRun {
    DjOutcome outcome;
    PConvMatrix matrix;
    DjEvent event;
};

/// Runs the Deutsch-Jozsa circuit for every query state x = 0..qrsize-1 in
/// ascending order, evaluating `oracle` once per state. Finishes by loading
/// the query register with zeros (constant) or superposition markers
/// (balanced). Main memory is never touched.
/// Throws ContractError if the oracle returns a non-bit.
DjRun run_djbox(Machine& machine, const Oracle& oracle, const RegisterBinding& binding);

/// Constant iff every column sum is 0.
[[nodiscard]] DjOutcome decide(std::span<const std::int64_t> column_sums);

// --- machine oracles --------------------------------------------------------

/// Compare oracle. Binding operands are origin-0 register numbers: cells
/// V(r0+1)[a] and V(r1+1)[a] are compared and V3[a] receives 0 when they
/// match, 1 otherwise, with a = decimal(x) + 1. Nothing is written when
/// V(r0+1)[a] is Empty. Always returns 1.
[[nodiscard]] Oracle oracle_f3();

/// Sum oracle. For a = decimal(x) + 1, reads the length p from DJ register
/// a at column r0 and writes the sum of its next p cells to V(r1)[a].
/// Nothing is written when the length cell is Empty. Always returns 1.
[[nodiscard]] Oracle oracle_f2();

/// Generalization of oracle_f2 with an arbitrary fold over the part's
/// elements in place of the sum. The fold receives at least one element.
using PartFold = std::function<Number(std::span<const Number>)>;
[[nodiscard]] Oracle dj_register_fold_oracle(std::string name, PartFold fold);

// --- pure oracles -----------------------------------------------------------

[[nodiscard]] Oracle constant_zero();
[[nodiscard]] Oracle constant_one();
/// f(x) = popcount(x & mask) mod 2. Throws DomainError for mask == 0.
/// The mask must also be below 2^n at run time.
[[nodiscard]] Oracle balanced_mask(std::uint64_t mask);
/// f(x) = bits[decimal(x)]. Throws DomainError unless exactly half the
/// entries are 1 and the length is a power of two >= 2.
[[nodiscard]] Oracle balanced_table(std::vector<int> bits);
/// Arbitrary truth table, no promise check. Used to demonstrate promise
/// violations. Throws DomainError for non-bits or a non-power-of-two length.
[[nodiscard]] Oracle table_oracle(std::vector<int> bits);

}  // namespace djpart

#endif  // DJPART_DJBOX_HPP
