#include "binmat/regularity.hpp"

#include <algorithm>
#include <map>

#include "binmat/errors.hpp"

namespace binmat {

namespace {

// Translated slice of x in the coset H + rep, written in H's basis coordinates.
PointSet coset_slice(const Subspace& h, const PointSet& x, Vec rep) {
    PointSet slice(h.dim());
    h.for_each_element([&](Vec el) {
        if (x.test(el ^ rep)) slice.set(h.coords(el));
    });
    return slice;
}

// Unique extension of an internal character that vanishes on the coordinate
// complement of H: supported on H's pivot positions only. Indexing matches
// Subspace::coords (bit i <-> i-th smallest pivot).
Vec lift_character(const Subspace& h, Vec internal) {
    Vec w = 0;
    const auto& basis = h.basis();
    std::size_t d = basis.size();
    for (std::size_t i = 0; i < d; ++i)
        if ((internal >> i) & 1) w |= Vec(1) << pivot_bit(basis[d - 1 - i]);
    return w;
}

}  // namespace

RegularityReport is_epsilon_regular(const Subspace& h, const PointSet& x, const Rat& eps) {
    if (!(Rat(0) < eps && eps < Rat(1, 2)))
        throw input_error("regularity: eps must be in (0,1/2)");
    RegularityReport rep;
    rep.subspace = h;
    rep.codim = h.codim();
    rep.epsilon = eps;
    rep.alpha = Rat(static_cast<long long>(x.count()), 1ll << x.dim());
    const long long coset_size = 1ll << h.dim();
    Rat half_alpha = rep.alpha / Rat(2);

    long long sq_sum_num = 0;  // sum of per-coset counts squared
    for (const AffineFlat& coset : cosets(h)) {
        PointSet slice = coset_slice(h, x, coset.shift);
        CosetVerdict v;
        v.rep = coset.shift;
        v.size = static_cast<long long>(slice.count());
        v.density = Rat(v.size, coset_size);
        if (h.dim() == 0) {
            v.uniform = true;  // no nonzero characters on a point
        } else {
            UniformityVerdict u = is_epsilon_uniform(wht(slice), eps);
            v.uniform = u.uniform;
            if (!u.uniform) v.witness_character = u.worst_character;
        }
        sq_sum_num += v.size * v.size;
        if (!v.uniform) rep.bad_set.push_back(rep.cosets.size());
        if (v.density < half_alpha) rep.sparse_set.push_back(rep.cosets.size());
        rep.cosets.push_back(std::move(v));
    }
    const long long num_cosets = 1ll << rep.codim;
    // energy = (1/2^k) sum (size/|H|)^2
    rep.energy = Rat(sq_sum_num) / Rat(coset_size * coset_size) / Rat(num_cosets);
    // |bad| <= eps * 2^k, cross-multiplied
    rep.regular = __int128(rep.bad_set.size()) * eps.den <= __int128(eps.num) * num_cosets;
    return rep;
}

RefineResult refine_to_regular(const PointSet& x, const Rat& eps, int max_codim) {
    if (max_codim < 0 || max_codim > x.dim()) throw input_error("refine: bad codim budget");
    RefineResult out;
    Subspace h = Subspace::full(x.dim());
    while (true) {
        out.report = is_epsilon_regular(h, x, eps);
        out.energy_trace.push_back(out.report.energy);
        ++out.iterations;
        if (out.report.regular) {
            out.success = true;
            return out;
        }
        if (out.report.codim >= max_codim) {
            out.success = false;  // codim budget exceeded; report the last state
            return out;
        }
        // Most frequent lifted witness; ties broken by least character value.
        std::map<Vec, int> freq;
        for (std::size_t idx : out.report.bad_set) {
            const CosetVerdict& cv = out.report.cosets[idx];
            freq[lift_character(h, *cv.witness_character)]++;
        }
        Vec pick = 0;
        int best = -1;
        for (auto [w, count] : freq) {
            if (count > best) {
                best = count;
                pick = w;
            }
        }
        Subspace refined = h.intersect_kernel(pick);
        if (refined.dim() != h.dim() - 1)
            throw internal_error("refine: witness character trivial on subspace");
        h = refined;
    }
}

KeyLemmaResult key_lemma_witness(const PointSet& x, const Rat& alpha, int max_codim) {
    if (!(Rat(0) < alpha && alpha <= Rat(1))) throw input_error("key lemma: alpha out of range");
    // |x| >= alpha * 2^n
    if (Rat(static_cast<long long>(x.count()), 1ll << x.dim()) < alpha)
        throw input_error("key lemma: set smaller than alpha * 2^n");
    Rat eps = alpha * alpha * alpha / Rat(9);

    KeyLemmaResult out;
    out.refine = refine_to_regular(x, eps, max_codim);
    if (!out.refine.success) throw budget_error("key lemma: codim budget exceeded");

    const RegularityReport& rep = out.refine.report;
    Rat half_alpha = alpha / Rat(2);
    std::optional<std::size_t> good;
    for (std::size_t i = 0; i < rep.cosets.size(); ++i) {
        const CosetVerdict& cv = rep.cosets[i];
        if (cv.uniform && !(cv.density < half_alpha)) {
            good = i;
            break;
        }
    }
    if (!good) throw internal_error("key lemma: no coset is both dense and uniform");

    Vec a0 = rep.cosets[*good].rep;
    out.witness.flat = AffineFlat(rep.subspace, a0);
    out.witness.good_coset = a0;
    out.witness.epsilon_used = eps;
    out.witness.linear = out.witness.flat.is_linear();

    TripleCountTable counts = triple_counts(x);
    bool all_in = true;
    rep.subspace.for_each_element([&](Vec el) {
        if (counts.counts[el ^ a0] <= 0) all_in = false;
    });
    out.witness.verified = all_in;
    return out;
}

}  // namespace binmat
