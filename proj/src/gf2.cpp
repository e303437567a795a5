#include "binmat/gf2.hpp"

#include <algorithm>
#include <bit>

#include "binmat/errors.hpp"

namespace binmat {

namespace {
constexpr int kMaxAmbient = 28;  // 2^28-bit sets (32 MiB) are the practical cap

// In-word bit-swap masks for XOR translation by bits 0..5.
constexpr std::uint64_t kSwapMask[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};
}  // namespace

int pivot_bit(Vec v) { return 31 - std::countl_zero(v); }

PointSet::PointSet(int n) : n_(n) {
    if (n < 0 || n > kMaxAmbient) throw input_error("ambient dimension out of range");
    words_.assign(std::size_t(1) << (n > 6 ? n - 6 : 0), 0);
}

PointSet PointSet::full(int n) {
    PointSet r(n);
    for (auto& w : r.words_) w = ~0ull;
    if (n < 6) r.words_[0] = (std::uint64_t(1) << (1 << n)) - 1;
    return r;
}

PointSet PointSet::all_points(int n) {
    PointSet r = full(n);
    r.reset(0);
    return r;
}

PointSet PointSet::singleton(int n, Vec v) {
    PointSet r(n);
    r.set(v);
    return r;
}

std::uint64_t PointSet::count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += std::uint64_t(std::popcount(w));
    return c;
}

bool PointSet::any() const {
    for (auto w : words_)
        if (w) return true;
    return false;
}

PointSet& PointSet::operator&=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

PointSet& PointSet::operator|=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

PointSet& PointSet::operator-=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

PointSet PointSet::translated(Vec a) const {
    PointSet r(*this);
    int low = std::min(n_, 6);
    for (int b = 0; b < low; ++b) {
        if (!((a >> b) & 1)) continue;
        int s = 1 << b;
        for (auto& w : r.words_) w = ((w & kSwapMask[b]) << s) | ((w >> s) & kSwapMask[b]);
    }
    for (int b = 6; b < n_; ++b) {
        if (!((a >> b) & 1)) continue;
        std::size_t stride = std::size_t(1) << (b - 6);
        for (std::size_t i = 0; i < r.words_.size(); i += stride << 1)
            for (std::size_t j = 0; j < stride; ++j) std::swap(r.words_[i + j], r.words_[i + j + stride]);
    }
    return r;
}

PointSet PointSet::complemented() const {
    PointSet r = full(n_);
    r -= *this;
    return r;
}

bool PointSet::is_subset_of(const PointSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool PointSet::intersects(const PointSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

std::optional<Vec> PointSet::min_element() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i]) return Vec(i * 64 + std::countr_zero(words_[i]));
    return std::nullopt;
}

void PointSet::for_each(const std::function<void(Vec)>& fn) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t w = words_[i];
        while (w) {
            fn(Vec(i * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
}

std::vector<Vec> PointSet::to_vector() const {
    std::vector<Vec> out;
    out.reserve(count());
    for_each([&](Vec v) { out.push_back(v); });
    return out;
}

// --- Subspace ---------------------------------------------------------------

Subspace Subspace::full(int n) {
    Subspace s(n);
    for (int i = n - 1; i >= 0; --i) s.basis_.push_back(Vec(1) << i);
    return s;
}

Subspace Subspace::span_of(int n, const std::vector<Vec>& gens) {
    Subspace s(n);
    for (Vec g : gens) s.insert(g);
    return s;
}

Vec Subspace::reduce(Vec v) const {
    for (Vec b : basis_)
        if ((v >> pivot_bit(b)) & 1) v ^= b;
    return v;
}

bool Subspace::insert(Vec v) {
    Vec r = reduce(v);
    if (r == 0) return false;
    int p = pivot_bit(r);
    for (Vec& b : basis_)
        if ((b >> p) & 1) b ^= r;
    auto pos = std::lower_bound(basis_.begin(), basis_.end(), r, std::greater<Vec>());
    basis_.insert(pos, r);
    return true;
}

Subspace Subspace::intersect_kernel(Vec w) const {
    Subspace out(n_);
    Vec hot = 0;  // basis vector not in the kernel, once found
    for (Vec b : basis_) {
        bool odd = std::popcount(b & w) & 1;
        if (!odd) {
            out.insert(b);
        } else if (hot == 0) {
            hot = b;
        } else {
            out.insert(b ^ hot);
        }
    }
    return out;
}

Vec Subspace::pivot_mask() const {
    Vec m = 0;
    for (Vec b : basis_) m |= Vec(1) << pivot_bit(b);
    return m;
}

std::vector<int> Subspace::free_positions() const {
    Vec pm = pivot_mask();
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
        if (!((pm >> i) & 1)) out.push_back(i);
    return out;
}

// Internal coordinates index basis vectors by ascending pivot (coordinate bit i
// corresponds to the basis vector with the i-th smallest pivot), so restricting
// to a coordinate-aligned flat keeps vector values unchanged.
Vec Subspace::coords(Vec member) const {
    Vec c = 0;
    std::size_t d = basis_.size();
    for (std::size_t i = 0; i < d; ++i)
        if ((member >> pivot_bit(basis_[d - 1 - i])) & 1) c |= Vec(1) << i;
    return c;
}

Vec Subspace::lift(Vec c) const {
    Vec v = 0;
    std::size_t d = basis_.size();
    for (std::size_t i = 0; i < d; ++i)
        if ((c >> i) & 1) v ^= basis_[d - 1 - i];
    return v;
}

void Subspace::for_each_element(const std::function<void(Vec)>& fn) const {
    Vec cur = 0;
    fn(cur);
    std::uint64_t total = std::uint64_t(1) << dim();
    for (std::uint64_t i = 1; i < total; ++i) {
        cur ^= basis_[std::countr_zero(i)];
        fn(cur);
    }
}

bool Subspace::basis_less(const Subspace& a, const Subspace& b) {
    return std::lexicographical_compare(a.basis_.begin(), a.basis_.end(), b.basis_.begin(),
                                        b.basis_.end());
}

// --- AffineFlat --------------------------------------------------------------

PointSet AffineFlat::points() const {
    PointSet ps(space.ambient());
    space.for_each_element([&](Vec v) { ps.set(v ^ shift); });
    return ps;
}

// --- free operations ---------------------------------------------------------

Subspace closure(const PointSet& points) {
    Subspace s(points.dim());
    points.for_each([&](Vec v) {
        if (s.dim() < s.ambient()) s.insert(v);
    });
    return s;
}

PointSet flat_points(const Subspace& space) {
    PointSet ps(space.ambient());
    space.for_each_element([&](Vec v) { ps.set(v); });
    ps.reset(0);
    return ps;
}

std::vector<AffineFlat> cosets(const Subspace& space) {
    auto free = space.free_positions();
    std::vector<AffineFlat> out;
    out.reserve(std::size_t(1) << free.size());
    for (std::uint64_t idx = 0; idx < (std::uint64_t(1) << free.size()); ++idx) {
        Vec rep = 0;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((idx >> i) & 1) rep |= Vec(1) << free[i];
        out.emplace_back(space, rep);
    }
    return out;
}

Subspace complement_flat(const Subspace& space) {
    Subspace out(space.ambient());
    for (int pos : space.free_positions()) out.insert(Vec(1) << pos);
    return out;
}

// --- subspace-in-set searches -------------------------------------------------
//
// Both searches walk reduced-echelon bases directly: chain vectors strictly
// decreasing in value, each new vector clear at all previous pivots and all
// previous vectors clear at the new pivot. Every subspace is visited through
// exactly one chain and depth-first order is lexicographic on the basis
// sequence, so the first hit at a target dimension is the canonical least.

namespace {

struct EchelonSearch {
    const PointSet& s;
    int n;
    std::vector<PointSet> valid;  // per depth: extension points keeping the span inside s
    std::vector<PointSet> span;   // per depth: current span (includes 0)
    std::vector<Vec> chain;
    Vec or_basis = 0;

    explicit EchelonSearch(const PointSet& set) : s(set), n(set.dim()) {}

    // Max dimension of a subspace inside s that strictly exceeds `floor`,
    // else `floor`. Root state must be prepared by caller.
    int max_dim(int depth, int floor) {
        int best = std::max(floor, depth);
        std::uint64_t reach = span[depth].count() + valid[depth].count();
        int cap = depth + (depth == 0 ? n : pivot_bit(chain.back()));
        if ((std::uint64_t(1) << (best + 1)) > reach || cap <= best) return best;
        Vec limit = depth == 0 ? Vec(1) << n : Vec(1) << pivot_bit(chain.back());
        std::vector<Vec> cands;
        valid[depth].for_each([&](Vec v) {
            if (v < limit && !((or_basis >> pivot_bit(v)) & 1)) cands.push_back(v);
        });
        for (Vec v : cands) {
            descend(depth, v);
            best = std::max(best, max_dim(depth + 1, best));
            ascend(v);
        }
        return best;
    }

    // First (lexicographically least) chain reaching dimension target; returns true on hit.
    bool find(int depth, int target) {
        if (depth == target) return true;
        std::uint64_t reach = span[depth].count() + valid[depth].count();
        if (reach < (std::uint64_t(1) << target)) return false;
        Vec limit = depth == 0 ? Vec(1) << n : Vec(1) << pivot_bit(chain.back());
        int cap = depth + (depth == 0 ? n : pivot_bit(chain.back()));
        if (cap < target) return false;
        std::vector<Vec> cands;
        valid[depth].for_each([&](Vec v) {
            if (v < limit && !((or_basis >> pivot_bit(v)) & 1)) cands.push_back(v);
        });
        for (Vec v : cands) {
            if (depth + 1 + pivot_bit(v) < target) continue;  // not enough pivots left below v
            descend(depth, v);
            if (find(depth + 1, target)) return true;
            ascend(v);
        }
        return false;
    }

    void prepare_root() {
        span.assign(std::size_t(n) + 1, PointSet(n));
        valid.assign(std::size_t(n) + 1, PointSet(n));
        span[0].set(0);
        valid[0] = s;
        valid[0].reset(0);
        chain.clear();
        or_basis = 0;
    }

    void descend(int depth, Vec v) {
        span[depth + 1] = span[depth] | span[depth].translated(v);
        valid[depth + 1] = valid[depth] & valid[depth].translated(v);
        valid[depth + 1] -= span[depth + 1];
        chain.push_back(v);
        or_basis |= v;
    }

    void ascend(Vec v) {
        chain.pop_back();
        or_basis = 0;
        for (Vec b : chain) or_basis |= b;
        (void)v;
    }

    Subspace chain_subspace() const {
        Subspace out(n);
        for (Vec b : chain) out.insert(b);
        return out;
    }
};

}  // namespace

std::optional<Subspace> largest_subspace_in(const PointSet& s) {
    if (!s.test(0)) return std::nullopt;
    EchelonSearch search(s);
    search.prepare_root();
    int d = search.max_dim(0, 0);
    if (d == 0) return Subspace::zero(s.dim());
    search.prepare_root();
    bool hit = search.find(0, d);
    if (!hit) throw internal_error("subspace search: max dim not reproducible");
    return search.chain_subspace();
}

std::optional<Subspace> find_subspace_in(const PointSet& s, int d) {
    if (d < 0 || d > s.dim()) return std::nullopt;
    if (!s.test(0)) return std::nullopt;
    if (d == 0) return Subspace::zero(s.dim());
    EchelonSearch search(s);
    search.prepare_root();
    if (!search.find(0, d)) return std::nullopt;
    return search.chain_subspace();
}

std::optional<AffineFlat> largest_affine_in(const PointSet& s) {
    if (s.none()) return std::nullopt;
    // Pass 1: best dimension, scanning each coset through its minimum element.
    int best = -1;
    std::vector<Vec> anchors = s.to_vector();
    for (Vec a : anchors) {
        PointSet t = s.translated(a);
        EchelonSearch search(t);
        search.prepare_root();
        best = std::max(best, search.max_dim(0, best));
    }
    // Pass 2: among flats of dimension best, least (canonical basis, shift).
    std::optional<AffineFlat> out;
    for (Vec a : anchors) {
        PointSet t = s.translated(a);
        auto w = find_subspace_in(t, best);
        if (!w) continue;
        AffineFlat cand(*w, a);
        if (cand.shift != a) continue;  // same flat already counted at its true minimum
        if (!out || Subspace::basis_less(cand.space, out->space) ||
            (cand.space == out->space && cand.shift < out->shift))
            out = cand;
    }
    if (!out) throw internal_error("affine search: best dim not reproducible");
    return out;
}

std::optional<Subspace> find_anchored_subspace_in(const PointSet& s, Vec anchor, int d) {
    if (!s.test(anchor) || !s.test(0)) return std::nullopt;
    if (d < 1 || anchor == 0) return std::nullopt;
    int n = s.dim();
    PointSet span(n);
    span.set(0);
    span.set(anchor);
    PointSet valid = s & s.translated(anchor);
    valid -= span;
    std::vector<Vec> chain;
    // Increasing-chain backtracking; extensions ordered among themselves so each
    // subspace is reached via its sequence of minimal new elements.
    std::function<bool(const PointSet&, const PointSet&, Vec, int)> go =
        [&](const PointSet& sp, const PointSet& va, Vec last, int dim) -> bool {
        if (dim == d) return true;
        if (sp.count() + va.count() < (std::uint64_t(1) << d)) return false;
        bool found = false;
        va.for_each([&](Vec v) {
            if (found || v <= last) return;
            PointSet sp2 = sp | sp.translated(v);
            PointSet va2 = va & va.translated(v);
            va2 -= sp2;
            chain.push_back(v);
            if (go(sp2, va2, v, dim + 1))
                found = true;
            else
                chain.pop_back();
        });
        return found;
    };
    if (!go(span, valid, 0, 1)) return std::nullopt;
    Subspace out(n);
    out.insert(anchor);
    for (Vec v : chain) out.insert(v);
    return out;
}

void for_each_subspace(int n, int d, const std::function<void(const Subspace&)>& fn) {
    if (d < 0 || d > n) return;
    if (d == 0) {
        fn(Subspace::zero(n));
        return;
    }
    // Enumerate echelon bases by pivot pattern: pivots p_1 > ... > p_d, row i free
    // at positions below p_i that are not pivots.
    std::vector<int> pivots(d);
    std::function<void(int, int)> choose = [&](int idx, int from) {
        if (idx == d) {
            std::vector<int> freebits[32];
            Vec pm = 0;
            for (int p : pivots) pm |= Vec(1) << p;
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < pivots[i]; ++j)
                    if (!((pm >> j) & 1)) freebits[i].push_back(j);
            std::vector<Vec> rows(d);
            std::function<void(int)> fill = [&](int row) {
                if (row == d) {
                    Subspace s(n);
                    for (Vec r : rows) s.insert(r);
                    fn(s);
                    return;
                }
                std::uint64_t combos = std::uint64_t(1) << freebits[row].size();
                for (std::uint64_t c = 0; c < combos; ++c) {
                    Vec r = Vec(1) << pivots[row];
                    for (std::size_t b = 0; b < freebits[row].size(); ++b)
                        if ((c >> b) & 1) r |= Vec(1) << freebits[row][b];
                    rows[row] = r;
                    fill(row + 1);
                }
            };
            fill(0);
            return;
        }
        for (int p = from; p >= d - 1 - idx; --p) {
            pivots[idx] = p;
            choose(idx + 1, p - 1);
        }
    };
    choose(0, n - 1);
}

}  // namespace binmat
