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

#include "djpart/partition.hpp"

#include <algorithm>
#include <numeric>

#include "djpart/errors.hpp"

namespace djpart {

PartitionVector::PartitionVector(std::vector<int> bits) : bits_(std::move(bits)) {
    if (bits_.empty()) throw DomainError("a partition vector cannot be empty");
    if (std::any_of(bits_.begin(), bits_.end(), [](int b) { return b != 0 && b != 1; })) {
        throw DomainError("partition vector entries must be 0 or 1");
    }
    if (bits_.front() != 1) throw DomainError("a partition vector must start with 1");
}

PartitionVector PartitionVector::parse(std::string_view text) {
    std::vector<int> bits;
    for (char c : text) {
        if (c == ' ' || c == ',' || c == '\t') continue;
        if (c != '0' && c != '1') throw DomainError(std::string("partition vector contains '") + c + "'");
        bits.push_back(c - '0');
    }
    return PartitionVector(std::move(bits));
}

std::size_t PartitionVector::part_count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::size_t> PartitionVector::part_lengths() const {
    std::vector<std::size_t> out;
    for (int b : bits_) {
        if (b == 1) out.push_back(0);
        ++out.back();
    }
    return out;
}

std::string PartitionVector::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (i != 0) s += ' ';
        s += static_cast<char>('0' + bits_[i]);
    }
    return s;
}

namespace {

void check_bins(std::span<const Cell> bins) {
    if (bins.empty()) throw DomainError("no bins given");
    if (bins.size() > kMaxDataLength) {
        throw CapacityError(std::to_string(bins.size()) + " rows exceed the " + std::to_string(kMaxDataLength) +
                            "-cell memory window");
    }
    for (const Cell& b : bins) {
        if (b.is_empty()) throw DomainError("bins cannot be empty cells");
        if (b.is_symbol() != bins.front().is_symbol()) throw TypeError("bins mix symbols and numbers");
    }
}

}  // namespace

BinnedData::BinnedData(std::vector<Row> rows) : rows_(std::move(rows)) {
    const std::vector<Cell> b = bins();
    check_bins(b);
    // Equal bins must form a single run.
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (b[i] == b[i - 1]) continue;
        for (std::size_t j = 0; j + 1 < i; ++j) {
            if (b[j] == b[i]) throw DomainError("bin '" + b[i].to_string() + "' is not contiguous; sort the input");
        }
    }
}

std::vector<Cell> BinnedData::bins() const {
    std::vector<Cell> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.bin);
    return out;
}

std::vector<Number> BinnedData::values() const {
    std::vector<Number> out;
    out.reserve(rows_.size());
    for (const auto& r : rows_) out.push_back(r.value);
    return out;
}

Reducer parse_reducer(std::string_view name) {
    if (name == "sum") return Reducer::kSum;
    if (name == "product") return Reducer::kProduct;
    if (name == "min") return Reducer::kMin;
    if (name == "max") return Reducer::kMax;
    if (name == "count") return Reducer::kCount;
    throw DomainError("unknown reducer '" + std::string(name) + "'");
}

std::string_view to_string(Reducer r) {
    switch (r) {
        case Reducer::kSum:
            return "sum";
        case Reducer::kProduct:
            return "product";
        case Reducer::kMin:
            return "min";
        case Reducer::kMax:
            return "max";
        case Reducer::kCount:
            return "count";
    }
    return "?";
}

Number reduce(Reducer r, std::span<const Number> part) {
    if (part.empty()) throw DomainError("cannot reduce an empty part");
    switch (r) {
        case Reducer::kSum:
            return std::accumulate(part.begin() + 1, part.end(), part.front());
        case Reducer::kProduct:
            return std::accumulate(part.begin() + 1, part.end(), part.front(),
                                   [](const Number& a, const Number& b) { return a * b; });
        case Reducer::kMin:
            return *std::min_element(part.begin(), part.end(), [](const Number& a, const Number& b) { return a < b; });
        case Reducer::kMax:
            return *std::max_element(part.begin(), part.end(), [](const Number& a, const Number& b) { return a < b; });
        case Reducer::kCount:
            return Number(static_cast<std::int64_t>(part.size()));
    }
    throw DomainError("unknown reducer");
}

Oracle reducer_oracle(Reducer r) {
    if (r == Reducer::kSum) return oracle_f2();
    return dj_register_fold_oracle(std::string(to_string(r)), [r](std::span<const Number> part) { return reduce(r, part); });
}

namespace {

constexpr RegisterBinding kCompareBinding{1, 0};  // compare V2 with V1, write V3
constexpr RegisterBinding kReduceBinding{3, 1};   // length in column 1, write V3

void set_number(Machine& m, std::size_t addr, std::size_t value) {
    m.set_memory(addr, Cell(static_cast<std::int64_t>(value)));
}

PartitionVector read_partition_vector(const Machine& m, std::size_t length) {
    std::vector<int> bits;
    bits.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        bits.push_back(static_cast<int>(m.memory(kPartitionBase + i).number().to_integer()));
    }
    return PartitionVector(std::move(bits));
}

/// Stores the count of 1s in the vector at 76 into pvct and mm[5]. Expects
/// pvct = L and mm[6] just past the vector.
void record_part_count(Machine& m) {
    count_partitions(m, kPartitionPtrAddr, 1);
    set_number(m, kCountAddr, m.pvct());
}

std::vector<Number> reduce_phase(Machine& m, std::span<const Number> values, Reducer reducer,
                                 std::vector<DjEvent>& events) {
    const std::size_t length = values.size();
    const std::vector<Cell> cells(values.begin(), values.end());
    m.set_memory(kDataBase, cells);
    set_number(m, kLengthAddr, length);
    set_number(m, kSourcePtrAddr, kDataBase);
    set_number(m, kSecondPtrAddr, kPartitionBase);
    set_number(m, kResultPtrAddr, kResultBase);

    const PartitionedData all = calc_partitions(m, kLengthAddr, kSourcePtrAddr, kSecondPtrAddr, 1);
    const std::size_t max_len = m.config().djvr_width() - 1;
    for (std::size_t len : all.lengths) {
        if (len > max_len) {
            throw CapacityError("part of length " + std::to_string(len) + " exceeds DJ register capacity " +
                                std::to_string(max_len) + " at qr=" + std::to_string(m.config().qr));
        }
    }

    const Oracle oracle = reducer_oracle(reducer);
    for (std::size_t lp = 0;; ++lp) {
        m.load_lpvct(kCountAddr);
        if (m.pvct() == 0) break;
        const PartitionedData round = prepare_t_partitions(lp, all, m.config().pss);
        m.load_partitions_into_djvr(round.parts, round.lengths);
        events.push_back(run_djbox(m, oracle, kReduceBinding).event);
        m.pstore_vector(3, kResultPtrAddr, 1);
    }

    std::vector<Number> totals;
    totals.reserve(all.parts.size());
    for (std::size_t i = 0; i < all.parts.size(); ++i) totals.push_back(m.memory(kResultBase + i).number());
    return totals;
}

}  // namespace

PartitionRun get_partition(Machine& m, std::span<const Cell> bins) {
    check_bins(bins);
    const std::size_t length = bins.size();

    std::vector<Cell> rotated(bins.begin(), bins.end());
    std::rotate(rotated.rbegin(), rotated.rbegin() + 1, rotated.rend());

    m.set_memory(kDataBase, bins);
    m.set_memory(kRotatedBase, rotated);
    set_number(m, kLengthAddr, length);
    set_number(m, kSourcePtrAddr, kDataBase);
    set_number(m, kSecondPtrAddr, kRotatedBase);
    set_number(m, kCountAddr, length);
    set_number(m, kPartitionPtrAddr, kPartitionBase);
    m.load_pvct(kCountAddr);

    std::vector<DjEvent> events;
    const Oracle f3 = oracle_f3();
    for (;;) {
        m.load_vct(kLengthAddr);
        if (m.vct() == 0) break;
        m.load_vector(1, kSourcePtrAddr, 1);
        m.load_vector(2, kSecondPtrAddr, 1);
        events.push_back(run_djbox(m, f3, kCompareBinding).event);
        m.store_vector(3, kPartitionPtrAddr, 1);
    }

    // The rotation compares the first bin with the last one; a part always
    // starts at the first element regardless.
    m.set_memory(kPartitionBase, Cell(1));
    record_part_count(m);

    return PartitionRun{read_partition_vector(m, length), std::move(events)};
}

ReduceRun calc_with_partitions(Machine& m, const BinnedData& data, Reducer reducer) {
    const std::vector<Cell> bins = data.bins();
    PartitionRun part = get_partition(m, bins);
    std::vector<DjEvent> events = std::move(part.events);
    std::vector<Number> totals = reduce_phase(m, data.values(), reducer, events);
    return ReduceRun{std::move(totals), std::move(part.vector), std::move(events)};
}

ReduceRun calc_with_partition_vector(Machine& m, std::span<const Number> values, const PartitionVector& pv,
                                     Reducer reducer) {
    if (values.empty()) throw DomainError("no values given");
    if (values.size() != pv.size()) {
        throw DomainError("partition vector has " + std::to_string(pv.size()) + " bits for " +
                          std::to_string(values.size()) + " values");
    }
    if (values.size() > kMaxDataLength) {
        throw CapacityError(std::to_string(values.size()) + " rows exceed the " + std::to_string(kMaxDataLength) +
                            "-cell memory window");
    }
    const std::vector<Cell> bits(pv.bits().begin(), pv.bits().end());
    m.set_memory(kPartitionBase, bits);
    set_number(m, kPartitionPtrAddr, kPartitionBase + pv.size());
    m.set_pvct(pv.size());
    record_part_count(m);

    std::vector<DjEvent> events;
    std::vector<Number> totals = reduce_phase(m, values, reducer, events);
    return ReduceRun{std::move(totals), pv, std::move(events)};
}

PartitionedData calc_partitions(const Machine& m, std::size_t len_addr, std::size_t data_addr, std::size_t pv_addr,
                                std::size_t stride) {
    const Number& len = m.memory(len_addr).number();
    if (!len.is_integral() || len.to_integer() < 0) throw DomainError("data length must be a non-negative integer");
    const auto length = static_cast<std::size_t>(len.to_integer());
    const std::size_t data = m.pointer_at(data_addr, length, stride);
    const std::size_t pv = m.pointer_at(pv_addr, length, stride);

    PartitionedData out;
    for (std::size_t i = 0; i < length; ++i) {
        const Cell& bit_cell = m.memory(pv + stride * i);
        if (!bit_cell.is_number() || (bit_cell.number() != Number(0) && bit_cell.number() != Number(1))) {
            throw TypeError("partition vector cell " + std::to_string(pv + stride * i) + " holds '" +
                            bit_cell.to_string() + "'");
        }
        const bool starts_part = bit_cell.number() == Number(1);
        if (i == 0 && !starts_part) throw DomainError("partition vector must start with 1");
        if (starts_part) {
            out.parts.emplace_back();
            out.lengths.push_back(0);
        }
        out.parts.back().push_back(m.memory(data + stride * i).number());
        ++out.lengths.back();
    }
    return out;
}

void count_partitions(Machine& m, std::size_t a_addr, std::size_t stride) {
    const std::size_t count = m.pvct();
    const Number& end = m.memory(a_addr).number();
    if (!end.is_integral()) throw TypeError("partition pointer holds " + end.to_string());
    const std::int64_t base = end.to_integer() - static_cast<std::int64_t>(count);
    if (count == 0) return;
    if (base < 1 || base + static_cast<std::int64_t>(stride * (count - 1)) > static_cast<std::int64_t>(m.config().mm_size)) {
        throw CapacityError("partition vector block leaves main memory");
    }
    std::size_t ones = 0;
    for (std::size_t i = 0; i < count; ++i) {
        const Cell& c = m.memory(static_cast<std::size_t>(base) + stride * i);
        if (!c.is_number() || (c.number() != Number(0) && c.number() != Number(1))) {
            throw TypeError("partition vector cell holds '" + c.to_string() + "'");
        }
        if (c.number() == Number(1)) ++ones;
    }
    m.set_pvct(ones);
}

PartitionedData prepare_t_partitions(std::size_t lp, const PartitionedData& all, std::size_t pss) {
    PartitionedData out;
    const std::size_t first = lp * pss;
    for (std::size_t i = first; i < first + pss && i < all.parts.size(); ++i) {
        out.parts.push_back(all.parts[i]);
        out.lengths.push_back(all.lengths[i]);
    }
    return out;
}

PartitionVector classical_partition_oracle(std::span<const Cell> bins) {
    if (bins.empty()) throw DomainError("no bins given");
    std::vector<int> bits(bins.size(), 0);
    bits[0] = 1;
    for (std::size_t i = 1; i < bins.size(); ++i) bits[i] = bins[i] == bins[i - 1] ? 0 : 1;
    return PartitionVector(std::move(bits));
}

std::vector<Number> classical_segmented_reduce(std::span<const Number> values, const PartitionVector& pv, Reducer r) {
    if (values.size() != pv.size()) throw DomainError("values and partition vector differ in length");
    std::vector<Number> out;
    std::size_t start = 0;
    for (std::size_t len : pv.part_lengths()) {
        out.push_back(reduce(r, values.subspan(start, len)));
        start += len;
    }
    return out;
}

}  // namespace djpart
