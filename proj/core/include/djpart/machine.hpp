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

#ifndef DJPART_MACHINE_HPP
#define DJPART_MACHINE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "djpart/cell.hpp"

namespace djpart {

inline constexpr int kMinQueryWidth = 1;
inline constexpr int kMaxQueryWidth = 6;
inline constexpr std::size_t kDefaultMemorySize = 100;
inline constexpr int kVectorRegisterCount = 5;
/// Cells per rendered main-memory row.
inline constexpr std::size_t kMemoryRowWidth = 25;

/// Sizes derived from the query register width.
struct MachineConfig {
    int qr = 3;                   // query register width
    std::size_t qrsize = 8;       // 2^qr query states = DJ vector register count
    std::size_t ss = 8;           // section size = vector register length
    std::size_t pss = 3;          // partition section size (parts per DJ round)
    std::size_t mm_size = kDefaultMemorySize;

    /// Throws ConfigError unless 1 <= qr <= 6 and mm_size >= 100.
    static MachineConfig for_query_width(int qr, std::size_t mm_size = kDefaultMemorySize);

    /// Width of every DJ vector register (length cell plus elements).
    [[nodiscard]] std::size_t djvr_width() const { return 2 * qrsize; }

    friend bool operator==(const MachineConfig&, const MachineConfig&) = default;
};

/// The vector machine with its Deutsch-Jozsa coprocessor.
///
/// All addressing is 1-based: memory addresses 1..mm_size, vector registers
/// 1..5, DJ vector registers 1..qrsize, register cells 1..width. Every
/// sequence keeps its configured length for the machine's lifetime.
///
/// A Machine is not thread-safe; use one instance per thread.
class Machine {
   public:
    /// Fresh machine: every cell Empty, vct = pvct = 0.
    explicit Machine(MachineConfig config);

    [[nodiscard]] const MachineConfig& config() const { return config_; }

    // --- raw state access ---------------------------------------------------

    [[nodiscard]] const Cell& memory(std::size_t addr) const;
    [[nodiscard]] std::span<const Cell> memory() const { return mm_; }

    [[nodiscard]] std::span<const Cell> vector_register(int v) const;
    [[nodiscard]] const Cell& vector_cell(int v, std::size_t i) const;
    void set_vector_cell(int v, std::size_t i, Cell value);

    [[nodiscard]] std::span<const QueryCell> query_register() const { return djq_; }

    [[nodiscard]] std::span<const Cell> dj_register(std::size_t r) const;
    [[nodiscard]] const Cell& dj_cell(std::size_t r, std::size_t i) const;

    [[nodiscard]] std::size_t vct() const { return vct_; }
    [[nodiscard]] std::size_t pvct() const { return pvct_; }
    /// Direct control-register write, used by COUNT-style operations.
    void set_pvct(std::size_t value) { pvct_ = value; }

    // --- memory -------------------------------------------------------------

    /// mm[addr .. addr+n-1] <- values. Throws DomainError for addr < 1 and
    /// CapacityError when the block runs past mm_size.
    void set_memory(std::size_t addr, std::span<const Cell> values);
    void set_memory(std::size_t addr, Cell value) { set_memory(addr, std::span<const Cell>(&value, 1)); }

    /// mm[s..e] <- Empty, inclusive. Throws DomainError unless 1 <= s <= e <= mm_size.
    void clear_memory(std::size_t s, std::size_t e);

    /// Reads mm[addr] as a base address for a block of `count` cells spaced
    /// by `stride`, checking that the whole block lies in memory. Only the
    /// type of mm[addr] is checked when count is 0, and 0 is returned.
    [[nodiscard]] std::size_t pointer_at(std::size_t addr, std::size_t count, std::size_t stride) const;

    // --- control registers --------------------------------------------------

    /// vct <- min(ss, mm[a]); mm[a] -= vct.
    void load_vct(std::size_t a);
    /// pvct <- mm[a]; mm[a] <- 0.
    void load_pvct(std::size_t a);
    /// pvct <- min(pss, mm[a]); mm[a] -= pvct.
    void load_lpvct(std::size_t a);

    // --- strided vector transfers ------------------------------------------
    //
    // mm[a] holds the base address; after the transfer it has advanced by the
    // number of items moved. Register cells past the count keep their old
    // contents.

    void load_vector(int v, std::size_t a, std::size_t stride);
    void store_vector(int v, std::size_t a, std::size_t stride);
    /// As store_vector, moving pvct items instead of vct.
    void pstore_vector(int v, std::size_t a, std::size_t stride);

    // --- DJ registers -------------------------------------------------------

    /// djq[1..n] <- values; the rest unchanged. CapacityError if n > qr.
    void load_query_register(std::span<const QueryCell> values);

    /// For part i: djvr[i][1] <- length, djvr[i][2..] <- elements.
    /// CapacityError for more than qrsize parts or a part longer than
    /// 2*qrsize - 1; DomainError when lengths and parts disagree.
    void load_partitions_into_djvr(std::span<const std::vector<Number>> parts,
                                   std::span<const std::size_t> lengths);

    /// Canonical text dump: MAIN MEMORY, VECTOR REGISTERS, DJ QUERY REGISTER,
    /// DJ VECTOR REGISTERS. With `ascii`, the superposition marker prints "@".
    [[nodiscard]] std::string render(bool ascii = false) const;

    friend bool operator==(const Machine&, const Machine&) = default;

   private:
    [[nodiscard]] std::size_t count_at(std::size_t a) const;
    [[nodiscard]] std::size_t row_index(int v) const;
    [[nodiscard]] std::size_t dj_row_index(std::size_t r) const;
    void store_from(int v, std::size_t a, std::size_t stride, std::size_t count);

    MachineConfig config_;
    std::vector<Cell> mm_;
    std::vector<std::vector<Cell>> vr_;
    std::vector<QueryCell> djq_;
    std::vector<std::vector<Cell>> djvr_;
    std::size_t vct_ = 0;
    std::size_t pvct_ = 0;
};

/// Convenience: Machine(MachineConfig::for_query_width(qr)).
[[nodiscard]] Machine define_machine(int qr);

}  // namespace djpart

#endif  // DJPART_MACHINE_HPP
