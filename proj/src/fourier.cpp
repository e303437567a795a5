#include "binmat/fourier.hpp"

#include <cstdlib>

#include "binmat/errors.hpp"

namespace binmat {

namespace {

constexpr int kWhtCap = 24;
constexpr int kTripleCap = 20;  // spectrum cubes need ~3n+2 bits of headroom

void butterfly(std::vector<long long>& f) {
    const std::size_t n = f.size();
    for (std::size_t h = 1; h < n; h <<= 1) {
        for (std::size_t i = 0; i < n; i += h << 1) {
            for (std::size_t j = i; j < i + h; ++j) {
                long long a = f[j], b = f[j + h];
                f[j] = a + b;
                f[j + h] = a - b;
            }
        }
    }
}

}  // namespace

SpectrumTable wht(const PointSet& x) {
    if (x.dim() > kWhtCap) throw input_error("wht: dimension above cap");
    std::vector<long long> f(x.universe(), 0);
    x.for_each([&](Vec v) { f[v] = 1; });
    butterfly(f);
    return {x.dim(), std::move(f)};
}

UniformityVerdict is_epsilon_uniform(const SpectrumTable& spectrum, const Rat& eps) {
    if (!(Rat(0) < eps && eps < Rat(1))) throw input_error("uniformity: eps must be in (0,1)");
    UniformityVerdict v;
    for (std::size_t a = 1; a < spectrum.coeffs.size(); ++a) {
        long long mag = std::llabs(spectrum.coeffs[a]);
        if (mag > v.worst_abs) {
            v.worst_abs = mag;
            v.worst_character = Vec(a);
        }
    }
    // |coeff| <= eps * 2^n  <=>  |coeff| * den <= num * 2^n
    __int128 lhs = __int128(v.worst_abs) * eps.den;
    __int128 rhs = __int128(eps.num) << spectrum.n;
    v.uniform = lhs <= rhs;
    return v;
}

UniformityVerdict is_epsilon_uniform(const PointSet& x, const Rat& eps) {
    return is_epsilon_uniform(wht(x), eps);
}

TripleCountTable triple_counts(const PointSet& x) {
    if (x.dim() > kTripleCap) throw input_error("triple_counts: dimension above cap");
    SpectrumTable s = wht(x);
    std::vector<long long> t(s.coeffs.size());
    for (std::size_t a = 0; a < t.size(); ++a) t[a] = s.coeffs[a] * s.coeffs[a] * s.coeffs[a];
    butterfly(t);
    const long long scale = 1ll << x.dim();
    for (auto& v : t) {
        if (v % scale != 0) throw internal_error("triple_counts: inexact division");
        v /= scale;
        if (v < 0) throw internal_error("triple_counts: negative count");
    }
    return {x.dim(), std::move(t)};
}

PointSet sumset3_support(const PointSet& x) {
    if (x.dim() <= kTripleCap) {
        TripleCountTable t = triple_counts(x);
        PointSet out(x.dim());
        for (std::size_t u = 0; u < t.counts.size(); ++u)
            if (t.counts[u] > 0) out.set(Vec(u));
        return out;
    }
    PointSet pairs(x.dim());
    x.for_each([&](Vec a) { pairs |= x.translated(a); });
    PointSet out(x.dim());
    pairs.for_each([&](Vec a) { out |= x.translated(a); });
    return out;
}

bool counting_bound_check(const TripleCountTable& counts, std::uint64_t x_size, const Rat& eps,
                          Vec u) {
    // counts[u] >= (alpha^3 - eps) 2^{2n} = |X|^3 / 2^n - eps 2^{2n}
    // <=>  counts[u] 2^n den >= |X|^3 den - eps.num 2^{3n}
    const int n = counts.n;
    __int128 lhs = (__int128(counts.counts[u]) << n) * eps.den;
    __int128 rhs = __int128(x_size) * x_size * x_size * eps.den - (__int128(eps.num) << (3 * n));
    return lhs >= rhs;
}

bool counting_bound_check(const PointSet& x, const Rat& eps, Vec u) {
    if (!(Rat(0) < eps && eps < Rat(1, 2)))
        throw input_error("counting bound: eps must be in (0,1/2)");
    if (!is_epsilon_uniform(x, eps).uniform)
        throw input_error("counting bound: set is not eps-uniform");
    return counting_bound_check(triple_counts(x), x.count(), eps, u);
}

}  // namespace binmat
