#include "binmat/rational.hpp"

#include <cstdlib>
#include <numeric>

#include "binmat/errors.hpp"

namespace binmat {

namespace {

using i128 = __int128;

long long checked_narrow(i128 v) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw internal_error("rational overflow");
    return static_cast<long long>(v);
}

Rat make(i128 num, i128 den) {
    if (den == 0) throw input_error("rational with zero denominator");
    if (den < 0) { num = -num; den = -den; }
    i128 a = num < 0 ? -num : num, b = den;
    while (b) { i128 t = a % b; a = b; b = t; }
    if (a == 0) a = 1;
    Rat r;
    r.num = checked_narrow(num / a);
    r.den = checked_narrow(den / a);
    return r;
}

}  // namespace

Rat::Rat(long long n, long long d) { *this = make(n, d); }

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

std::strong_ordering Rat::operator<=>(const Rat& o) const {
    i128 lhs = i128(num) * o.den;
    i128 rhs = i128(o.num) * den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rat Rat::operator+(const Rat& o) const {
    return make(i128(num) * o.den + i128(o.num) * den, i128(den) * o.den);
}

Rat Rat::operator-(const Rat& o) const {
    return make(i128(num) * o.den - i128(o.num) * den, i128(den) * o.den);
}

Rat Rat::operator*(const Rat& o) const {
    return make(i128(num) * o.num, i128(den) * o.den);
}

Rat Rat::operator/(const Rat& o) const {
    if (o.num == 0) throw input_error("rational division by zero");
    return make(i128(num) * o.den, i128(den) * o.num);
}

Rat parse_rat(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(text));
        long long p = std::stoll(text.substr(0, slash));
        long long q = std::stoll(text.substr(slash + 1));
        return Rat(p, q);
    } catch (const input_error&) {
        throw;
    } catch (const std::exception&) {
        throw input_error("cannot parse rational: " + text);
    }
}

}  // namespace binmat
