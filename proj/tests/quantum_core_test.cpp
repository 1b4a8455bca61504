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

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "djpart/errors.hpp"
#include "support/oracles.hpp"

using namespace djpart;

namespace {

std::vector<int> signs_of(const Superposition& s) { return {s.signs().begin(), s.signs().end()}; }

}  // namespace

TEST(HadamardGate, EntriesMatchDisplayedValues) {
    const HadamardMatrix h = define_h_gate();
    EXPECT_NEAR(h.entries[0][0], 0.7071067812, 1e-9);
    EXPECT_NEAR(h.entries[0][1], 0.7071067812, 1e-9);
    EXPECT_NEAR(h.entries[1][0], 0.7071067812, 1e-9);
    EXPECT_NEAR(h.entries[1][1], -0.7071067812, 1e-9);
}

TEST(HadamardGate, IsInvolutionWithOrthogonalRows) {
    const auto& e = define_h_gate().entries;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double prod = e[i][0] * e[0][j] + e[i][1] * e[1][j];
            EXPECT_NEAR(prod, i == j ? 1.0 : 0.0, 1e-9) << i << "," << j;
        }
    }
    EXPECT_NEAR(e[0][0] * e[1][0] + e[0][1] * e[1][1], 0.0, 1e-9);
}

TEST(ApplyHGate, SingleQubitImages) {
    EXPECT_EQ(apply_h_gate(QubitBit(1)).terms(), (std::vector<SignedBasisState>{{1, 0}, {-1, 1}}));
    EXPECT_EQ(apply_h_gate(QubitBit(0)).terms(), (std::vector<SignedBasisState>{{1, 0}, {1, 1}}));
    EXPECT_EQ(apply_h_gate(QubitBit(1)).to_string(), "0 -1");
    EXPECT_EQ(apply_h_gate(QubitBit(0)).to_string(), "0 +1");
}

TEST(ApplyHGate, RejectsNonBits) {
    EXPECT_THROW(QubitBit(2), DomainError);
    EXPECT_THROW(QubitBit(-1), DomainError);
}

TEST(TensorExtend, AllPlusAndParitySigns) {
    EXPECT_EQ(signs_of(tensor_extend(apply_h_gate(QubitBit(0)), QubitBit(0))), (std::vector<int>{1, 1, 1, 1}));
    EXPECT_EQ(signs_of(tensor_extend(apply_h_gate(QubitBit(1)), QubitBit(1))), (std::vector<int>{1, -1, -1, 1}));
}

TEST(TensorExtend, FoldEqualsTransform) {
    Superposition acc = apply_h_gate(QubitBit(1));
    acc = tensor_extend(acc, QubitBit(0));
    acc = tensor_extend(acc, QubitBit(1));
    const std::vector<int> x{1, 0, 1};
    EXPECT_EQ(acc, hadamard_transform(x));
}

TEST(HadamardTransform, AllZerosRendersAllPlus) {
    const std::vector<int> x{0, 0, 0};
    const Superposition s = hadamard_transform(x);
    EXPECT_EQ(s.to_string(), "000 +001 +010 +011 +100 +101 +110 +111");
    EXPECT_EQ(signs_of(s), std::vector<int>(8, 1));
}

TEST(HadamardTransform, KnownSignPattern) {
    const std::vector<int> x{1, 0, 1};
    EXPECT_EQ(signs_of(hadamard_transform(x)), (std::vector<int>{1, -1, 1, -1, -1, 1, -1, 1}));
    const std::vector<int> one{0};
    EXPECT_EQ(hadamard_transform(one).terms(), (std::vector<SignedBasisState>{{1, 0}, {1, 1}}));
}

TEST(HadamardTransform, DomainErrors) {
    EXPECT_THROW(hadamard_transform(std::vector<int>{}), DomainError);
    EXPECT_THROW(hadamard_transform(std::vector<int>{0, 2}), DomainError);
    EXPECT_THROW(hadamard_transform(std::vector<int>(kMaxTransformWidth + 1, 0)), DomainError);
}

TEST(HadamardTransform, SignRuleAndOrthogonalityUpToFourQubits) {
    for (int n = 1; n <= 4; ++n) {
        const std::uint64_t size = std::uint64_t{1} << n;
        std::vector<std::vector<int>> rows;
        for (std::uint64_t x = 0; x < size; ++x) {
            const Superposition s = hadamard_transform(to_bits(x, n));
            ASSERT_EQ(s.width(), n);
            for (std::uint64_t z = 0; z < size; ++z) {
                ASSERT_EQ(s.sign(z), djpart::testing::hadamard_sign(x, z)) << "n=" << n << " x=" << x << " z=" << z;
            }
            rows.push_back(signs_of(s));
        }
        for (std::uint64_t x = 0; x < size; ++x) {
            for (std::uint64_t y = 0; y < size; ++y) {
                std::int64_t dot = 0;
                for (std::uint64_t z = 0; z < size; ++z) dot += rows[x][z] * rows[y][z];
                EXPECT_EQ(dot, x == y ? static_cast<std::int64_t>(size) : 0);
            }
        }
    }
}

TEST(Superposition, InvariantsEnforced) {
    EXPECT_THROW(Superposition(2, {1, 1, 1}), DomainError);
    EXPECT_THROW(Superposition(1, {-1, 1}), DomainError);
    EXPECT_THROW(Superposition(1, {1, 0}), DomainError);
    EXPECT_NO_THROW(Superposition(1, {1, -1}));
}

TEST(AnswerPhase, KickbackSign) {
    EXPECT_EQ(answer_phase(QubitBit(1)).value(), -1);
    EXPECT_EQ(answer_phase(QubitBit(0)).value(), 1);
    for (int f : {0, 1}) EXPECT_EQ(answer_phase(QubitBit(f)).value() * answer_phase(QubitBit(f)).value(), 1);
    EXPECT_THROW(AnswerPhase(0), DomainError);
}

TEST(ConvertToBinary, CommonWidthMostSignificantFirst) {
    EXPECT_EQ(convert_to_binary(std::vector<std::int64_t>{4}), (std::vector<std::vector<int>>{{1, 0, 0}}));
    EXPECT_EQ(convert_to_binary(std::vector<std::int64_t>{7}), (std::vector<std::vector<int>>{{1, 1, 1}}));
    EXPECT_EQ(convert_to_binary(std::vector<std::int64_t>{0}), (std::vector<std::vector<int>>{{0}}));
    EXPECT_EQ(convert_to_binary(std::vector<std::int64_t>{1, 4}),
              (std::vector<std::vector<int>>{{0, 0, 1}, {1, 0, 0}}));
    EXPECT_THROW((void)convert_to_binary(std::vector<std::int64_t>{3, -1}), DomainError);
}

TEST(Decimal, RoundTrip) {
    for (std::uint64_t v = 0; v < 64; ++v) EXPECT_EQ(to_decimal(to_bits(v, 6)), v);
    EXPECT_THROW((void)to_decimal(std::vector<int>{1, 3}), DomainError);
}
