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

#ifndef DJPART_PARTITION_HPP
#define DJPART_PARTITION_HPP

// Partition vectors and segmented reduction on the vector machine.
//
// Memory layout used by the pipelines (1-based):
//   2   data length L (drained by the strip loop)
//   3   pointer to the bins / data column
//   4   pointer to the rotated bins / partition vector
//   5   part count
//   6   pointer into the partition vector while it is written
//   7   pointer into the result block
//   26..50  bins, later the data column
//   51..75  bins rotated right by one, later the per-part results
//   76..100 partition vector

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "djpart/cell.hpp"
#include "djpart/djbox.hpp"
#include "djpart/machine.hpp"

namespace djpart {

inline constexpr std::size_t kMaxDataLength = 25;

inline constexpr std::size_t kLengthAddr = 2;
inline constexpr std::size_t kSourcePtrAddr = 3;
inline constexpr std::size_t kSecondPtrAddr = 4;
inline constexpr std::size_t kCountAddr = 5;
inline constexpr std::size_t kPartitionPtrAddr = 6;
inline constexpr std::size_t kResultPtrAddr = 7;
inline constexpr std::size_t kDataBase = 26;
inline constexpr std::size_t kRotatedBase = 51;
inline constexpr std::size_t kResultBase = 51;
inline constexpr std::size_t kPartitionBase = 76;

/// 0/1 sequence whose 1s mark the first element of each part.
class PartitionVector {
   public:
    /// Throws DomainError if empty, if an entry is not 0/1, or if the first
    /// entry is not 1.
    explicit PartitionVector(std::vector<int> bits);

    /// Accepts "1 0 0 1", "1,0,0,1" or "1001".
    static PartitionVector parse(std::string_view text);

    [[nodiscard]] std::span<const int> bits() const { return bits_; }
    [[nodiscard]] std::size_t size() const { return bits_.size(); }
    [[nodiscard]] std::size_t part_count() const;
    /// Length of each part, in order.
    [[nodiscard]] std::vector<std::size_t> part_lengths() const;
    /// Space-separated bits.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

   private:
    std::vector<int> bits_;
};

/// Two-column input: a bin label and a numeric value per row.
class BinnedData {
   public:
    struct Row {
        Cell bin;
        Number value;
    };

    /// Throws DomainError when empty, when a bin is Empty, or when equal bins
    /// are not adjacent; TypeError for mixed Symbol/Number bins;
    /// CapacityError for more than kMaxDataLength rows.
    explicit BinnedData(std::vector<Row> rows);

    [[nodiscard]] std::span<const Row> rows() const { return rows_; }
    [[nodiscard]] std::size_t size() const { return rows_.size(); }
    [[nodiscard]] std::vector<Cell> bins() const;
    [[nodiscard]] std::vector<Number> values() const;

   private:
    std::vector<Row> rows_;
};

struct PartitionedData {
    std::vector<std::vector<Number>> parts;
    std::vector<std::size_t> lengths;
    friend bool operator==(const PartitionedData&, const PartitionedData&) = default;
};

enum class Reducer { kSum, kProduct, kMin, kMax, kCount };

/// "sum", "product", "min", "max", "count". Throws DomainError otherwise.
[[nodiscard]] Reducer parse_reducer(std::string_view name);
[[nodiscard]] std::string_view to_string(Reducer r);

/// Folds a non-empty part. Throws DomainError for an empty part and
/// CapacityError when an integer result overflows.
[[nodiscard]] Number reduce(Reducer r, std::span<const Number> part);

/// The sum oracle with `r` in place of the sum; oracle_f2() for kSum.
[[nodiscard]] Oracle reducer_oracle(Reducer r);

struct PartitionRun {
    PartitionVector vector;
    std::vector<DjEvent> events;
};

struct ReduceRun {
    std::vector<Number> totals;
    PartitionVector vector;
    std::vector<DjEvent> events;
};

/// Computes the partition vector of `bins` on the machine: stores the bins
/// and their right rotation, strip-mines both through V1/V2, lets the
/// compare oracle write boundary bits to V3 inside the DJ box, and stores
/// them at 76. The first bit is then forced to 1 and the parts are counted
/// into pvct and mm[5].
/// Throws DomainError for no bins, CapacityError for more than 25.
PartitionRun get_partition(Machine& machine, std::span<const Cell> bins);

/// get_partition on the bins, followed by the reduction phase: the data
/// column replaces the bins at 26, parts are staged pss at a time into the
/// DJ vector registers and reduced by the reducer oracle, and results are
/// stored from 51 on.
ReduceRun calc_with_partitions(Machine& machine, const BinnedData& data, Reducer reducer);

/// The reduction phase alone, with the partition vector supplied instead of
/// derived from bins.
ReduceRun calc_with_partition_vector(Machine& machine, std::span<const Number> values,
                                     const PartitionVector& pv, Reducer reducer);

/// Splits the mm[len_addr] data cells at base mm[data_addr] into runs started
/// by the 1-bits of the vector at base mm[pv_addr]. Pointers are not advanced.
[[nodiscard]] PartitionedData calc_partitions(const Machine& machine, std::size_t len_addr,
                                              std::size_t data_addr, std::size_t pv_addr,
                                              std::size_t stride);

/// pvct <- number of 1s among the pvct cells ending just before mm[a_addr]
/// (the vector was stored and the pointer advanced past it).
void count_partitions(Machine& machine, std::size_t a_addr, std::size_t stride);

/// Parts lp*pss+1 .. lp*pss+pss (1-based), clipped to what exists.
[[nodiscard]] PartitionedData prepare_t_partitions(std::size_t lp, const PartitionedData& all,
                                                   std::size_t pss);

// --- classical references ---------------------------------------------------

/// bits[0] = 1; bits[i] = 1 iff bins[i] differs from bins[i-1].
/// Throws DomainError for no bins.
[[nodiscard]] PartitionVector classical_partition_oracle(std::span<const Cell> bins);

/// Applies `r` to each maximal run of `values` delimited by `pv`.
/// Throws DomainError on a length mismatch.
[[nodiscard]] std::vector<Number> classical_segmented_reduce(std::span<const Number> values,
                                                             const PartitionVector& pv, Reducer r);

}  // namespace djpart

#endif  // DJPART_PARTITION_HPP
