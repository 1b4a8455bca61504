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

#ifndef DJPART_CELL_HPP
#define DJPART_CELL_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace djpart {

/// Numeric cell payload: an exact 64-bit integer, or a real when the input
/// itself was fractional. Integer arithmetic is overflow-checked and raises
/// CapacityError instead of wrapping; a real operand makes the result real.
class Number {
   public:
    constexpr Number() = default;
    constexpr Number(std::int64_t v) : rep_(v) {}  // NOLINT(google-explicit-constructor)
    constexpr Number(int v) : rep_(std::int64_t{v}) {}  // NOLINT(google-explicit-constructor)
    explicit constexpr Number(double v) : rep_(v) {}

    [[nodiscard]] constexpr bool is_integer() const { return std::holds_alternative<std::int64_t>(rep_); }
    /// True for integers and for reals with no fractional part.
    [[nodiscard]] bool is_integral() const;
    /// Integral value; throws TypeError for a fractional real.
    [[nodiscard]] std::int64_t to_integer() const;
    [[nodiscard]] double to_real() const;

    /// Shortest text that round-trips: "620", "-3", "2.5".
    [[nodiscard]] std::string to_string() const;

    /// Parses "42", "-7", "3.25". Returns nullopt on anything else.
    static std::optional<Number> parse(std::string_view text);

    friend Number operator+(const Number& a, const Number& b);
    friend Number operator*(const Number& a, const Number& b);
    friend Number operator-(const Number& a, const Number& b);
    friend bool operator==(const Number& a, const Number& b);
    friend std::partial_ordering operator<=>(const Number& a, const Number& b);

   private:
    std::variant<std::int64_t, double> rep_{std::int64_t{0}};
};

/// A single-character label, as used for bins.
struct Symbol {
    char ch = '?';
    friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// One storage location of the machine: Empty, a Number, or a Symbol.
class Cell {
   public:
    constexpr Cell() = default;
    Cell(Number n) : rep_(n) {}  // NOLINT(google-explicit-constructor)
    Cell(std::int64_t n) : rep_(Number(n)) {}  // NOLINT(google-explicit-constructor)
    Cell(int n) : rep_(Number(n)) {}  // NOLINT(google-explicit-constructor)
    Cell(Symbol s) : rep_(s) {}  // NOLINT(google-explicit-constructor)

    static Cell symbol(char c) { return Cell(Symbol{c}); }

    [[nodiscard]] bool is_empty() const { return std::holds_alternative<std::monostate>(rep_); }
    [[nodiscard]] bool is_number() const { return std::holds_alternative<Number>(rep_); }
    [[nodiscard]] bool is_symbol() const { return std::holds_alternative<Symbol>(rep_); }

    /// Throws TypeError when the cell is not a Number.
    [[nodiscard]] const Number& number() const;
    /// Throws TypeError when the cell is not a Symbol.
    [[nodiscard]] Symbol symbol() const;

    /// "." for Empty, the number's text, or the symbol character.
    [[nodiscard]] std::string to_string() const;

    /// Structural equality: same tag and same payload (numbers by value).
    friend bool operator==(const Cell& a, const Cell& b);

   private:
    std::variant<std::monostate, Number, Symbol> rep_;
};

/// Value comparison used by the machine's compare oracle: numbers by value,
/// symbols by character; mixed tags and any Empty operand compare unequal.
[[nodiscard]] bool cells_match(const Cell& a, const Cell& b);

/// Parses a single input token into a Cell: a number if it reads as one,
/// otherwise a one-character Symbol. Returns nullopt for longer words.
[[nodiscard]] std::optional<Cell> parse_cell(std::string_view token);

/// Content of one query-register cell.
enum class QueryCell : std::uint8_t { kEmpty, kZero, kOne, kSuperposed };

/// "." / "0" / "1" / "⊗" ("@" when ascii is set).
[[nodiscard]] std::string_view to_string(QueryCell c, bool ascii = false);

}  // namespace djpart

#endif  // DJPART_CELL_HPP
