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

#include "djpart/machine.hpp"

#include <algorithm>
#include <sstream>

#include "djpart/errors.hpp"

namespace djpart {

MachineConfig MachineConfig::for_query_width(int qr, std::size_t mm_size) {
    if (qr < kMinQueryWidth || qr > kMaxQueryWidth) {
        throw ConfigError("query register width must be in [" + std::to_string(kMinQueryWidth) + ", " +
                          std::to_string(kMaxQueryWidth) + "], got " + std::to_string(qr));
    }
    if (mm_size < kDefaultMemorySize) {
        throw ConfigError("main memory must hold at least " + std::to_string(kDefaultMemorySize) + " cells");
    }
    MachineConfig c;
    c.qr = qr;
    c.qrsize = std::size_t{1} << qr;
    c.ss = c.qrsize;
    c.pss = static_cast<std::size_t>(qr);
    c.mm_size = mm_size;
    return c;
}

Machine::Machine(MachineConfig config)
    : config_(config),
      mm_(config.mm_size),
      vr_(kVectorRegisterCount, std::vector<Cell>(config.ss)),
      djq_(static_cast<std::size_t>(config.qr), QueryCell::kEmpty),
      djvr_(config.qrsize, std::vector<Cell>(config.djvr_width())) {}

Machine define_machine(int qr) { return Machine(MachineConfig::for_query_width(qr)); }

namespace {

void check_address(std::size_t addr, std::size_t mm_size) {
    if (addr < 1 || addr > mm_size) {
        throw DomainError("memory address " + std::to_string(addr) + " outside [1, " + std::to_string(mm_size) + "]");
    }
}

}  // namespace

const Cell& Machine::memory(std::size_t addr) const {
    check_address(addr, config_.mm_size);
    return mm_[addr - 1];
}

std::size_t Machine::row_index(int v) const {
    if (v < 1 || v > kVectorRegisterCount) {
        throw DomainError("vector register V" + std::to_string(v) + " does not exist");
    }
    return static_cast<std::size_t>(v - 1);
}

std::size_t Machine::dj_row_index(std::size_t r) const {
    if (r < 1 || r > config_.qrsize) {
        throw DomainError("DJ vector register V" + std::to_string(r) + " does not exist");
    }
    return r - 1;
}

std::span<const Cell> Machine::vector_register(int v) const { return vr_[row_index(v)]; }

const Cell& Machine::vector_cell(int v, std::size_t i) const {
    const auto& row = vr_[row_index(v)];
    if (i < 1 || i > row.size()) throw DomainError("register cell " + std::to_string(i) + " out of range");
    return row[i - 1];
}

void Machine::set_vector_cell(int v, std::size_t i, Cell value) {
    auto& row = vr_[row_index(v)];
    if (i < 1 || i > row.size()) throw DomainError("register cell " + std::to_string(i) + " out of range");
    row[i - 1] = std::move(value);
}

std::span<const Cell> Machine::dj_register(std::size_t r) const { return djvr_[dj_row_index(r)]; }

const Cell& Machine::dj_cell(std::size_t r, std::size_t i) const {
    const auto& row = djvr_[dj_row_index(r)];
    if (i < 1 || i > row.size()) throw DomainError("DJ register cell " + std::to_string(i) + " out of range");
    return row[i - 1];
}

void Machine::set_memory(std::size_t addr, std::span<const Cell> values) {
    if (addr < 1) throw DomainError("memory address must be >= 1");
    if (addr - 1 + values.size() > config_.mm_size) {
        throw CapacityError("writing " + std::to_string(values.size()) + " cells at " + std::to_string(addr) +
                            " overruns main memory of " + std::to_string(config_.mm_size));
    }
    std::copy(values.begin(), values.end(), mm_.begin() + static_cast<std::ptrdiff_t>(addr - 1));
}

void Machine::clear_memory(std::size_t s, std::size_t e) {
    if (s < 1 || s > e || e > config_.mm_size) {
        throw DomainError("cannot clear memory range [" + std::to_string(s) + ", " + std::to_string(e) + "]");
    }
    std::fill(mm_.begin() + static_cast<std::ptrdiff_t>(s - 1), mm_.begin() + static_cast<std::ptrdiff_t>(e), Cell{});
}

std::size_t Machine::count_at(std::size_t a) const {
    const Number& n = memory(a).number();
    if (!n.is_integral() || n.to_integer() < 0) {
        throw DomainError("count at address " + std::to_string(a) + " must be a non-negative integer, got " +
                          n.to_string());
    }
    return static_cast<std::size_t>(n.to_integer());
}

std::size_t Machine::pointer_at(std::size_t addr, std::size_t count, std::size_t stride) const {
    const Number& n = memory(addr).number();
    if (!n.is_integral()) throw TypeError("address cell " + std::to_string(addr) + " holds " + n.to_string());
    const std::int64_t base = n.to_integer();
    if (stride < 1) throw DomainError("stride must be positive");
    if (count == 0) return 0;
    const std::int64_t last = base + static_cast<std::int64_t>(stride * (count - 1));
    if (base < 1 || last > static_cast<std::int64_t>(config_.mm_size)) {
        throw CapacityError("block of " + std::to_string(count) + " cells at base " + std::to_string(base) +
                            " (stride " + std::to_string(stride) + ") leaves main memory");
    }
    return static_cast<std::size_t>(base);
}

void Machine::load_vct(std::size_t a) {
    const std::size_t avail = count_at(a);
    vct_ = std::min(config_.ss, avail);
    mm_[a - 1] = Cell(static_cast<std::int64_t>(avail - vct_));
}

void Machine::load_pvct(std::size_t a) {
    pvct_ = count_at(a);
    mm_[a - 1] = Cell(0);
}

void Machine::load_lpvct(std::size_t a) {
    const std::size_t avail = count_at(a);
    pvct_ = std::min(config_.pss, avail);
    mm_[a - 1] = Cell(static_cast<std::int64_t>(avail - pvct_));
}

void Machine::load_vector(int v, std::size_t a, std::size_t stride) {
    auto& row = vr_[row_index(v)];
    const std::size_t base = pointer_at(a, vct_, stride);
    if (vct_ == 0) return;
    for (std::size_t i = 0; i < vct_; ++i) row[i] = mm_[base - 1 + stride * i];
    mm_[a - 1] = Cell(static_cast<std::int64_t>(base + vct_));
}

void Machine::store_from(int v, std::size_t a, std::size_t stride, std::size_t count) {
    const auto& row = vr_[row_index(v)];
    if (count > row.size()) {
        throw CapacityError("cannot store " + std::to_string(count) + " cells from a register of " +
                            std::to_string(row.size()));
    }
    const std::size_t base = pointer_at(a, count, stride);
    if (count == 0) return;
    for (std::size_t i = 0; i < count; ++i) mm_[base - 1 + stride * i] = row[i];
    mm_[a - 1] = Cell(static_cast<std::int64_t>(base + count));
}

void Machine::store_vector(int v, std::size_t a, std::size_t stride) { store_from(v, a, stride, vct_); }

void Machine::pstore_vector(int v, std::size_t a, std::size_t stride) { store_from(v, a, stride, pvct_); }

void Machine::load_query_register(std::span<const QueryCell> values) {
    if (values.size() > djq_.size()) {
        throw CapacityError("query register holds " + std::to_string(djq_.size()) + " qubits, got " +
                            std::to_string(values.size()));
    }
    std::copy(values.begin(), values.end(), djq_.begin());
}

void Machine::load_partitions_into_djvr(std::span<const std::vector<Number>> parts,
                                        std::span<const std::size_t> lengths) {
    if (parts.size() != lengths.size()) throw DomainError("parts and lengths differ in count");
    if (parts.size() > config_.qrsize) {
        throw CapacityError(std::to_string(parts.size()) + " parts exceed the " + std::to_string(config_.qrsize) +
                            " DJ vector registers");
    }
    const std::size_t max_len = config_.djvr_width() - 1;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() != lengths[i]) throw DomainError("part " + std::to_string(i + 1) + " length mismatch");
        if (lengths[i] > max_len) {
            throw CapacityError("part of length " + std::to_string(lengths[i]) + " exceeds DJ register capacity " +
                                std::to_string(max_len));
        }
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto& row = djvr_[i];
        row[0] = Cell(static_cast<std::int64_t>(lengths[i]));
        std::copy(parts[i].begin(), parts[i].end(), row.begin() + 1);
    }
}

namespace {

std::string join_cells(std::span<const Cell> cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) out += ' ';
        out += cells[i].to_string();
    }
    return out;
}

std::string right_align(const std::string& s, std::size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string Machine::render(bool ascii) const {
    std::ostringstream out;

    out << "MAIN MEMORY\n";
    for (std::size_t start = 0; start < mm_.size(); start += kMemoryRowWidth) {
        const std::size_t n = std::min(kMemoryRowWidth, mm_.size() - start);
        out << right_align(std::to_string(start + 1), 3) << " : "
            << join_cells(std::span<const Cell>(mm_).subspan(start, n)) << '\n';
    }
    out << "VCT : " << vct_ << "  PVCT : " << pvct_ << '\n';

    out << "\nVECTOR REGISTERS\n";
    for (int v = 1; v <= kVectorRegisterCount; ++v) {
        out << 'V' << v << " : " << join_cells(vr_[static_cast<std::size_t>(v - 1)]) << '\n';
    }

    out << "\nDJ QUERY REGISTER\nQ1 : ";
    for (std::size_t i = 0; i < djq_.size(); ++i) {
        if (i != 0) out << ' ';
        out << to_string(djq_[i], ascii);
    }
    out << '\n';

    out << "\nDJ VECTOR REGISTERS\n";
    const std::size_t label_width = 1 + std::to_string(djvr_.size()).size();
    for (std::size_t r = 0; r < djvr_.size(); ++r) {
        out << right_align("V" + std::to_string(r + 1), label_width) << " : " << join_cells(djvr_[r]) << '\n';
    }
    return out.str();
}

}  // namespace djpart
