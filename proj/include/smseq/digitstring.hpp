#pragma once

#include "smseq/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace smseq {

// Finite digit sequence in a base B, most significant digit first.
// Leading zeros are allowed and preserved; they matter for code-puzzle
// terms and for positional output formats.
struct DigitString {
    std::uint32_t base = 10;
    std::vector<std::uint32_t> digits; // each < base

    DigitString() = default;
    DigitString(std::uint32_t b, std::vector<std::uint32_t> d)
        : base(b), digits(std::move(d)) {}

    // Parse from "0123..." (base <= 36, alphanumeric digits).
    static DigitString parse(const std::string& text, std::uint32_t base = 10);

    bool empty() const { return digits.empty(); }
    std::size_t size() const { return digits.size(); }

    // Compact rendering: plain digit characters for base <= 36,
    // dot-separated decimal digit values otherwise.
    std::string str() const;

    // Numeric value; absorbs leading zeros.
    Natural value() const;

    bool operator==(const DigitString& o) const = default;
};

} // namespace smseq
