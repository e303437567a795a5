#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace binmat {

/// Exact rational on 64-bit words. Always normalized: den > 0, gcd(|num|, den) = 1.
/// All comparisons and arithmetic are exact; intermediate products run in 128 bits
/// and throw internal_error on (desk-scale-impossible) overflow of the result.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}  // NOLINT: implicit on purpose
    Rat(long long n, long long d);

    bool is_zero() const { return num == 0; }
    std::string str() const;

    friend bool operator==(const Rat& a, const Rat& b) = default;
    std::strong_ordering operator<=>(const Rat& other) const;

    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
};

/// Parses "P/Q" or a bare integer "P".
Rat parse_rat(const std::string& text);

}  // namespace binmat
