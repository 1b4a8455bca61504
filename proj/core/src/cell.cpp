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

#include "djpart/cell.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <system_error>

#include "djpart/errors.hpp"

namespace djpart {

bool Number::is_integral() const {
    if (is_integer()) return true;
    const double d = std::get<double>(rep_);
    return std::isfinite(d) && std::trunc(d) == d;
}

std::int64_t Number::to_integer() const {
    if (is_integer()) return std::get<std::int64_t>(rep_);
    const double d = std::get<double>(rep_);
    if (!is_integral() || std::fabs(d) > 9.0e15) {
        throw TypeError("number " + to_string() + " is not an integer");
    }
    return static_cast<std::int64_t>(d);
}

double Number::to_real() const {
    if (is_integer()) return static_cast<double>(std::get<std::int64_t>(rep_));
    return std::get<double>(rep_);
}

std::string Number::to_string() const {
    char buf[64];
    std::to_chars_result res{};
    if (is_integer()) {
        res = std::to_chars(buf, buf + sizeof buf, std::get<std::int64_t>(rep_));
    } else {
        res = std::to_chars(buf, buf + sizeof buf, std::get<double>(rep_));
    }
    return std::string(buf, res.ptr);
}

std::optional<Number> Number::parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string_view body = text;
    if (body.front() == '+') body.remove_prefix(1);
    if (body.empty()) return std::nullopt;
    const char* first = body.data();
    const char* last = body.data() + body.size();

    std::int64_t iv = 0;
    auto [ip, iec] = std::from_chars(first, last, iv);
    if (iec == std::errc{} && ip == last) return Number(iv);

    if (body.find_first_of("eEnN") != std::string_view::npos) return std::nullopt;  // no exponents, nan, inf
    double dv = 0;
    auto [dp, dec] = std::from_chars(first, last, dv);
    if (dec == std::errc{} && dp == last && std::isfinite(dv)) return Number(dv);
    return std::nullopt;
}

namespace {

Number checked(bool overflow, std::int64_t value, const char* op) {
    if (overflow) throw CapacityError(std::string("integer overflow in ") + op);
    return Number(value);
}

}  // namespace

Number operator+(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
        std::int64_t r = 0;
        const bool of = __builtin_add_overflow(std::get<std::int64_t>(a.rep_), std::get<std::int64_t>(b.rep_), &r);
        return checked(of, r, "addition");
    }
    return Number(a.to_real() + b.to_real());
}

Number operator-(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
        std::int64_t r = 0;
        const bool of = __builtin_sub_overflow(std::get<std::int64_t>(a.rep_), std::get<std::int64_t>(b.rep_), &r);
        return checked(of, r, "subtraction");
    }
    return Number(a.to_real() - b.to_real());
}

Number operator*(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
        std::int64_t r = 0;
        const bool of = __builtin_mul_overflow(std::get<std::int64_t>(a.rep_), std::get<std::int64_t>(b.rep_), &r);
        return checked(of, r, "multiplication");
    }
    return Number(a.to_real() * b.to_real());
}

bool operator==(const Number& a, const Number& b) { return (a <=> b) == std::partial_ordering::equivalent; }

std::partial_ordering operator<=>(const Number& a, const Number& b) {
    if (a.is_integer() && b.is_integer()) {
        return std::get<std::int64_t>(a.rep_) <=> std::get<std::int64_t>(b.rep_);
    }
    return a.to_real() <=> b.to_real();
}

const Number& Cell::number() const {
    if (const auto* n = std::get_if<Number>(&rep_)) return *n;
    throw TypeError(is_empty() ? "expected a number, found an empty cell"
                               : "expected a number, found symbol '" + to_string() + "'");
}

Symbol Cell::symbol() const {
    if (const auto* s = std::get_if<Symbol>(&rep_)) return *s;
    throw TypeError("expected a symbol, found '" + to_string() + "'");
}

std::string Cell::to_string() const {
    if (is_empty()) return ".";
    if (const auto* n = std::get_if<Number>(&rep_)) return n->to_string();
    return std::string(1, std::get<Symbol>(rep_).ch);
}

bool operator==(const Cell& a, const Cell& b) {
    if (a.rep_.index() != b.rep_.index()) return false;
    return a.is_empty() || cells_match(a, b);
}

bool cells_match(const Cell& a, const Cell& b) {
    if (a.is_number() && b.is_number()) return a.number() == b.number();
    if (a.is_symbol() && b.is_symbol()) return a.symbol() == b.symbol();
    return false;
}

std::optional<Cell> parse_cell(std::string_view token) {
    if (auto n = Number::parse(token)) return Cell(*n);
    if (token.size() == 1 && token[0] != '.') return Cell::symbol(token[0]);
    return std::nullopt;
}

std::string_view to_string(QueryCell c, bool ascii) {
    switch (c) {
        case QueryCell::kEmpty:
            return ".";
        case QueryCell::kZero:
            return "0";
        case QueryCell::kOne:
            return "1";
        case QueryCell::kSuperposed:
            return ascii ? "@" : "⊗";
    }
    return "?";
}

}  // namespace djpart
