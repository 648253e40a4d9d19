#include "smseq/digitstring.hpp"

namespace smseq {

namespace {

char digit_char(std::uint32_t d) {
    return d < 10 ? static_cast<char>('0' + d)
                  : static_cast<char>('a' + (d - 10));
}

std::uint32_t char_digit(char c) {
    if (c >= '0' && c <= '9') return static_cast<std::uint32_t>(c - '0');
    if (c >= 'a' && c <= 'z') return static_cast<std::uint32_t>(c - 'a' + 10);
    if (c >= 'A' && c <= 'Z') return static_cast<std::uint32_t>(c - 'A' + 10);
    throw DomainError("invalid digit character");
}

} // namespace

DigitString DigitString::parse(const std::string& text, std::uint32_t base) {
    if (base < 2 || base > 36) throw DomainError("parse requires 2 <= base <= 36");
    DigitString out;
    out.base = base;
    out.digits.reserve(text.size());
    for (char c : text) {
        std::uint32_t d = char_digit(c);
        if (d >= base) throw DomainError("digit out of range for base");
        out.digits.push_back(d);
    }
    return out;
}

std::string DigitString::str() const {
    std::string s;
    if (base <= 36) {
        s.reserve(digits.size());
        for (auto d : digits) s += digit_char(d);
    } else {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i) s += '.';
            s += std::to_string(digits[i]);
        }
    }
    return s;
}

Natural DigitString::value() const {
    Natural v = 0;
    for (auto d : digits) {
        if (d >= base) throw DomainError("digit >= base");
        v *= base;
        v += d;
    }
    return v;
}

} // namespace smseq
