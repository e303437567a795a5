#pragma once

#include <cstdint>
#include <vector>

#include "binmat/gf2.hpp"
#include "binmat/rational.hpp"

namespace binmat {

/// Integer character sums of an indicator: coeffs[a] = sum_{x in X} (-1)^{a.x}.
/// coeffs[0] = |X|; for a != 0, coeffs[a] is the hyperplane balance
/// |{x in X : a.x = 0}| - |{x in X : a.x = 1}|.
struct SpectrumTable {
    int n = 0;
    std::vector<long long> coeffs;
};

/// counts[u] = #{(x1,x2,x3) in X^3 : x1+x2+x3 = u}.
struct TripleCountTable {
    int n = 0;
    std::vector<long long> counts;
};

/// Fast in-place transform, O(n 2^n) integer additions. Exact.
/// Allocates 8 * 2^n bytes; capped at n <= 24.
SpectrumTable wht(const PointSet& x);

struct UniformityVerdict {
    bool uniform = true;
    Vec worst_character = 0;   // argmax |coeffs[a]| over a != 0, least index on ties
    long long worst_abs = 0;
};

/// X is eps-uniform iff every nonzero coefficient has magnitude <= eps * 2^n.
/// eps must lie in (0, 1); comparisons are exact rational.
UniformityVerdict is_epsilon_uniform(const PointSet& x, const Rat& eps);
UniformityVerdict is_epsilon_uniform(const SpectrumTable& spectrum, const Rat& eps);

/// Exact counts via cubing the spectrum and inverting; the division by 2^n is
/// checked exact. Capped at n <= 20 so all intermediates fit 64 bits.
TripleCountTable triple_counts(const PointSet& x);

/// {u : counts[u] > 0}; equal to the set X+X+X. Works for any n (falls back to
/// set algebra above the triple_counts cap).
PointSet sumset3_support(const PointSet& x);

/// counts[u] >= (alpha^3 - eps) * 2^{2n} with alpha = |X| / 2^n, exactly.
/// Requires X eps-uniform (checked; input_error otherwise).
bool counting_bound_check(const PointSet& x, const Rat& eps, Vec u);
bool counting_bound_check(const TripleCountTable& counts, std::uint64_t x_size, const Rat& eps,
                          Vec u);

}  // namespace binmat
