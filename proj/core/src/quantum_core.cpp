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

#include "djpart/quantum_core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "djpart/errors.hpp"

namespace djpart {

QubitBit::QubitBit(int v) : value_(v) {
    if (v != 0 && v != 1) throw DomainError("qubit value must be 0 or 1, got " + std::to_string(v));
}

HadamardMatrix define_h_gate() {
    const double s = 1.0 / std::sqrt(2.0);
    return HadamardMatrix{{{{s, s}, {s, -s}}}};
}

Superposition::Superposition(int width, std::vector<int> signs) : width_(width), signs_(std::move(signs)) {
    if (width < 1 || width > kMaxTransformWidth) {
        throw DomainError("superposition width must be in [1, " + std::to_string(kMaxTransformWidth) + "]");
    }
    if (signs_.size() != (std::size_t{1} << width)) throw DomainError("superposition needs 2^width terms");
    if (std::any_of(signs_.begin(), signs_.end(), [](int s) { return s != 1 && s != -1; })) {
        throw DomainError("superposition signs must be +1 or -1");
    }
    if (signs_.front() != 1) throw DomainError("the |0...0> term must carry a + sign");
}

std::vector<SignedBasisState> Superposition::terms() const {
    std::vector<SignedBasisState> out;
    out.reserve(signs_.size());
    for (std::size_t k = 0; k < signs_.size(); ++k) out.push_back({signs_[k], k});
    return out;
}

std::string Superposition::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < signs_.size(); ++k) {
        if (k != 0) {
            out += ' ';
            out += signs_[k] > 0 ? '+' : '-';
        }
        for (int b : to_bits(k, width_)) out += static_cast<char>('0' + b);
    }
    return out;
}

Superposition apply_h_gate(QubitBit b) { return Superposition(1, {1, b.value() == 0 ? 1 : -1}); }

Superposition tensor_extend(const Superposition& acc, QubitBit b) {
    const Superposition h = apply_h_gate(b);
    std::vector<int> signs;
    signs.reserve(acc.size() * 2);
    for (int s : acc.signs()) {
        signs.push_back(s * h.sign(0));
        signs.push_back(s * h.sign(1));
    }
    return Superposition(acc.width() + 1, std::move(signs));
}

Superposition hadamard_transform(std::span<const int> bits) {
    if (bits.empty()) throw DomainError("hadamard_transform needs at least one qubit");
    if (bits.size() > static_cast<std::size_t>(kMaxTransformWidth)) {
        throw DomainError("hadamard_transform width exceeds " + std::to_string(kMaxTransformWidth));
    }
    Superposition acc = apply_h_gate(QubitBit(bits.front()));
    for (int b : bits.subspan(1)) acc = tensor_extend(acc, QubitBit(b));
    return acc;
}

AnswerPhase::AnswerPhase(int v) : value_(v) {
    if (v != 1 && v != -1) throw DomainError("answer phase must be +1 or -1");
}

AnswerPhase answer_phase(QubitBit fval) {
    // H|1> = |0> - |1>; adding f modulo 2 swaps the labels when f = 1, so
    // the |0> component's sign becomes the phase.
    const Superposition y = apply_h_gate(QubitBit(1));
    const int first_label = (0 + fval.value()) % 2;
    return AnswerPhase(first_label == 0 ? y.sign(0) : y.sign(1));
}

std::uint64_t to_decimal(std::span<const int> bits) {
    if (bits.size() > 63) throw DomainError("bit sequence longer than 63");
    std::uint64_t v = 0;
    for (int b : bits) {
        if (b != 0 && b != 1) throw DomainError("bit sequence contains " + std::to_string(b));
        v = (v << 1) | static_cast<std::uint64_t>(b);
    }
    return v;
}

std::vector<int> to_bits(std::uint64_t value, int width) {
    std::vector<int> out(static_cast<std::size_t>(width));
    for (int i = 0; i < width; ++i) out[static_cast<std::size_t>(width - 1 - i)] = static_cast<int>((value >> i) & 1U);
    return out;
}

std::vector<std::vector<int>> convert_to_binary(std::span<const std::int64_t> values) {
    std::int64_t max = 0;
    for (auto v : values) {
        if (v < 0) throw DomainError("convert_to_binary: negative value " + std::to_string(v));
        max = std::max(max, v);
    }
    const int width = max == 0 ? 1 : static_cast<int>(std::bit_width(static_cast<std::uint64_t>(max)));
    std::vector<std::vector<int>> out;
    out.reserve(values.size());
    for (auto v : values) out.push_back(to_bits(static_cast<std::uint64_t>(v), width));
    return out;
}

}  // namespace djpart
