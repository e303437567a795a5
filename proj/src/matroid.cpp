#include "binmat/matroid.hpp"

#include <algorithm>

#include "binmat/errors.hpp"

namespace binmat {

Matroid::Matroid(int n, PointSet ground) : n_(n), ground_(std::move(ground)) {
    if (ground_.dim() != n) throw input_error("ground set dimension mismatch");
    if (ground_.test(0)) throw input_error("ground set contains the zero vector");
}

Matroid Matroid::complement() const {
    PointSet c = PointSet::all_points(n_);
    c -= ground_;
    return Matroid(n_, c);
}

bool is_triangle_free(const Matroid& m) {
    const PointSet& e = m.ground();
    bool triangle = false;
    e.for_each([&](Vec a) {
        if (triangle) return;
        if (e.intersects(e.translated(a))) triangle = true;
    });
    return !triangle;
}

I1tResult i1t_witness(const Matroid& m, int t) {
    if (t < 1 || t > m.dim()) throw input_error("i1t: t out of range");
    PointSet allowed = m.ground().complemented();
    allowed.reset(0);  // nonzero non-ground points
    std::optional<Subspace> witness;
    m.ground().for_each([&](Vec e) {
        if (witness) return;
        if (t == 1) {
            witness = Subspace::span_of(m.dim(), {e});
            return;
        }
        PointSet s = allowed;
        s.set(e);
        s.set(0);
        witness = find_anchored_subspace_in(s, e, t);
    });
    return {!witness.has_value(), witness};
}

bool is_i1t_free(const Matroid& m, int t) { return i1t_witness(m, t).free; }

int omega(const Matroid& m) {
    PointSet s = m.ground();
    s.set(0);
    auto w = largest_subspace_in(s);
    return w ? w->dim() : 0;
}

int critical_number(const Matroid& m) { return m.dim() - omega(m.complement()); }

Vec Embedding::map(Vec pattern_vec) const {
    Vec out = 0;
    for (std::size_t i = 0; i < basis_images.size(); ++i)
        if ((pattern_vec >> i) & 1) out ^= basis_images[i];
    return out;
}

namespace {

// Backtracking over images of the pattern's standard basis with forward
// checking: every pattern vector whose support is fully assigned must land in
// E (ground) or, in induced mode, outside E (non-ground).
struct EmbedSearch {
    const Matroid& host;
    const Matroid& pattern;
    bool induced;
    std::uint64_t budget;
    std::uint64_t nodes = 0;

    int p, n;
    std::vector<Vec> images;
    std::vector<Vec> image_of;          // image of every determined pattern vector
    std::vector<std::vector<Vec>> det;  // per level: pattern vectors newly determined
    PointSet host_nonground{0};
    Subspace span{0};

    EmbedSearch(const Matroid& h, const Matroid& pat, bool ind, std::uint64_t b)
        : host(h), pattern(pat), induced(ind), budget(b) {
        p = pattern.dim();
        n = host.dim();
        images.assign(p, 0);
        image_of.assign(std::size_t(1) << p, 0);
        det.resize(p);
        for (Vec w = 1; w < (Vec(1) << p); ++w) det[pivot_bit(w)].push_back(w);
        host_nonground = host.ground().complemented();
        host_nonground.reset(0);
        span = Subspace::zero(n);
    }

    bool ok(Vec pat_vec, Vec img) const {
        if (pattern.ground().test(pat_vec)) return host.ground().test(img);
        if (induced) return host_nonground.test(img);
        return true;
    }

    bool run(int level) {
        if (level == p) return true;
        // Candidate narrowing: each determined ground vector w at this level
        // forces the image into a translate of E (and, induced, of E^c).
        PointSet cand = PointSet::all_points(n);
        int narrowed = 0;
        for (Vec w : det[level]) {
            if (narrowed >= 3) break;
            Vec rest = image_of[w ^ (Vec(1) << level)];
            if (pattern.ground().test(w)) {
                cand &= host.ground().translated(rest);
                ++narrowed;
            } else if (induced) {
                cand &= host_nonground.translated(rest);
                ++narrowed;
            }
        }
        bool found = false;
        cand.for_each([&](Vec v) {
            if (found || nodes > budget) return;
            ++nodes;
            if (span.contains(v)) return;  // keep the map injective
            bool all_ok = true;
            for (Vec w : det[level]) {
                Vec img = image_of[w ^ (Vec(1) << level)] ^ v;
                if (!ok(w, img)) {
                    all_ok = false;
                    break;
                }
            }
            if (!all_ok) return;
            for (Vec w : det[level]) image_of[w] = image_of[w ^ (Vec(1) << level)] ^ v;
            images[level] = v;
            Subspace saved = span;
            span.insert(v);
            if (run(level + 1)) {
                found = true;
                return;
            }
            span = saved;
        });
        if (found) return true;
        if (nodes > budget) throw budget_error("embedding search: node budget exceeded");
        return false;
    }
};

}  // namespace

std::optional<Embedding> find_embedding(const Matroid& m, const Matroid& pattern, bool induced,
                                        const EmbedOptions& opt) {
    if (pattern.dim() > m.dim()) return std::nullopt;
    if (pattern.dim() == 0) return Embedding{};
    EmbedSearch search(m, pattern, induced, opt.node_budget);
    if (!search.run(0)) return std::nullopt;
    return Embedding{search.images};
}

bool induced_iso_exists(const Matroid& m, const Matroid& pattern, const EmbedOptions& opt) {
    return find_embedding(m, pattern, true, opt).has_value();
}

bool restriction_embedding_exists(const Matroid& m, const Matroid& pattern,
                                  const EmbedOptions& opt) {
    return find_embedding(m, pattern, false, opt).has_value();
}

Matroid restrict_to_flat(const Matroid& m, const Subspace& f) {
    PointSet sub(f.dim());
    m.ground().for_each([&](Vec v) {
        if (f.contains(v)) sub.set(f.coords(v));
    });
    return Matroid(f.dim(), sub);
}

}  // namespace binmat
