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

#ifndef DJPART_QUANTUM_CORE_HPP
#define DJPART_QUANTUM_CORE_HPP

// Sign-tracking simulation of the Hadamard pieces of the Deutsch-Jozsa
// circuit. Normalization constants are dropped throughout: a state is the
// list of its basis labels with a +1/-1 sign each, which is all the
// constant/balanced decision needs. Everything here is pure.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace djpart {

/// Largest register width accepted by hadamard_transform (2^20 terms).
inline constexpr int kMaxTransformWidth = 20;

/// A computational basis value |0> or |1>.
class QubitBit {
   public:
    /// Throws DomainError unless v is 0 or 1.
    explicit QubitBit(int v);
    [[nodiscard]] constexpr int value() const { return value_; }
    friend bool operator==(QubitBit, QubitBit) = default;

   private:
    int value_;
};

/// The 2x2 Hadamard matrix with its 1/sqrt(2) factor. Only used for display
/// and verification; the computational path is integer-only.
struct HadamardMatrix {
    std::array<std::array<double, 2>, 2> entries;
};

[[nodiscard]] HadamardMatrix define_h_gate();

struct SignedBasisState {
    int sign;             // +1 or -1
    std::uint64_t index;  // basis label, 0 <= index < 2^width
    friend bool operator==(const SignedBasisState&, const SignedBasisState&) = default;
};

/// Unnormalized uniform-magnitude superposition over `width` qubits.
/// Dense: term k is basis state k, and term 0 always carries sign +1.
class Superposition {
   public:
    /// Builds from one sign per basis state. Throws DomainError if the count
    /// is not 2^width, a sign is not +-1, or the first sign is negative.
    Superposition(int width, std::vector<int> signs);

    [[nodiscard]] int width() const { return width_; }
    [[nodiscard]] std::size_t size() const { return signs_.size(); }
    [[nodiscard]] int sign(std::uint64_t index) const { return signs_.at(index); }
    [[nodiscard]] std::span<const int> signs() const { return signs_; }
    [[nodiscard]] std::vector<SignedBasisState> terms() const;

    /// Labels in binary, signed after the first: "000 +001 -010 ...".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Superposition&, const Superposition&) = default;

   private:
    int width_;
    std::vector<int> signs_;
};

/// H acting on a single basis qubit: |0> -> (+0, +1), |1> -> (+0, -1).
[[nodiscard]] Superposition apply_h_gate(QubitBit b);

/// Tensor product acc (x) H|b>. The new qubit becomes the least significant
/// one: index 2*z + j takes sign acc.sign(z) * sign_j(H|b>).
[[nodiscard]] Superposition tensor_extend(const Superposition& acc, QubitBit b);

/// H^{(x)n} on the basis state |x>, bits most-significant first. Built as a
/// left fold of tensor_extend, so sign(z) = (-1)^{popcount(x & z)}.
/// Throws DomainError for empty input, non-bits, or width > kMaxTransformWidth.
[[nodiscard]] Superposition hadamard_transform(std::span<const int> bits);

/// Phase (-1)^f kicked back from the |-> answer register.
class AnswerPhase {
   public:
    /// Throws DomainError unless v is +1 or -1.
    explicit AnswerPhase(int v);
    [[nodiscard]] constexpr int value() const { return value_; }
    friend bool operator==(AnswerPhase, AnswerPhase) = default;

   private:
    int value_;
};

/// Adds f(x) modulo 2 into the answer register H|1> and reads off the sign
/// of its |0> component: +1 for f = 0, -1 for f = 1.
[[nodiscard]] AnswerPhase answer_phase(QubitBit fval);

/// Decimal value of a most-significant-first bit sequence.
/// Throws DomainError for non-bits or more than 63 bits.
[[nodiscard]] std::uint64_t to_decimal(std::span<const int> bits);

/// `width` bits of `value`, most significant first.
[[nodiscard]] std::vector<int> to_bits(std::uint64_t value, int width);

/// Binary rendering of every value at a common width of
/// 1 + floor(log2(max)), or width 1 when all values are 0.
/// Throws DomainError on a negative value.
[[nodiscard]] std::vector<std::vector<int>> convert_to_binary(std::span<const std::int64_t> values);

}  // namespace djpart

#endif  // DJPART_QUANTUM_CORE_HPP
