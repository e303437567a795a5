#include "binmat/constructions.hpp"

#include "binmat/errors.hpp"

namespace binmat {

namespace {

// Ground set of T_k as a set of vectors in dimension 3k+1, by the recursion.
PointSet tripod_ground(int k) {
    int n = 3 * k + 1;
    PointSet e(n);
    e.set(1);  // T_0
    for (int j = 1; j <= k; ++j) {
        Vec x = Vec(1) << (3 * j - 2);
        Vec y = Vec(1) << (3 * j - 1);
        Vec z = Vec(1) << (3 * j);
        PointSet next = e | e.translated(x) | e.translated(y) | e.translated(z);
        next.set(x ^ y ^ z);
        e = std::move(next);
    }
    return e;
}

// F_k by its recursion: F_1 is the full 4-dim space, F_k = cl(F_{k-1} ∪ {x+y, x+z}).
Subspace tripod_f_flat(int k) {
    Subspace f = Subspace::full(4);
    f = Subspace::span_of(3 * k + 1, f.basis());
    for (int j = 2; j <= k; ++j) {
        Vec x = Vec(1) << (3 * j - 2);
        Vec y = Vec(1) << (3 * j - 1);
        Vec z = Vec(1) << (3 * j);
        f.insert(x ^ y);
        f.insert(x ^ z);
    }
    return f;
}

}  // namespace

TripodWitness tripod(int k) {
    if (k < 0) throw input_error("tripod: order must be non-negative");
    if (3 * k + 1 > 28) throw input_error("tripod: ambient dimension above cap");
    TripodWitness w;
    w.order = k;
    w.matroid = Matroid(3 * k + 1, tripod_ground(k));
    if (k >= 1) {
        Subspace h(3 * k + 1);
        for (int i = 0; i < 3 * k - 2; ++i) h.insert(Vec(1) << i);
        w.h_flat = h;
        w.f_flat = tripod_f_flat(k);
        w.xyz = std::array<Vec, 3>{Vec(1) << (3 * k - 2), Vec(1) << (3 * k - 1), Vec(1) << (3 * k)};
    }
    return w;
}

Matroid c5t(int t) {
    if (t < 4) throw input_error("c5t: ambient dimension must be at least 4");
    PointSet e(t);
    e.set(1);
    e.set(2);
    e.set(4);
    e.set(8);
    e.set(1 ^ 2 ^ 4 ^ 8);
    return Matroid(t, e);
}

Matroid affine_geometry(int n) {
    if (n < 1) throw input_error("affine geometry: dimension must be positive");
    PointSet e(n);
    Vec top = Vec(1) << (n - 1);
    for (Vec v = top; v < (Vec(1) << n); ++v) e.set(v);
    return Matroid(n, e);
}

TripodLemmaRecord verify_tripod_lemma(int k) {
    if (k < 1) throw input_error("tripod lemma: order must be at least 1");
    TripodLemmaRecord rec;
    rec.k = k;
    const int n = 3 * k + 1;
    PointSet ground = tripod_ground(k);
    rec.ground_size = static_cast<long long>(ground.count());

    // Bullet 1: dimension. The ambient is 3k+1 by construction; confirm the
    // ground set actually spans it.
    rec.dim_ok = closure(ground).dim() == n;
    if (!rec.dim_ok) {
        rec.failed_bullet = "dimension";
        return rec;
    }

    Subspace f = tripod_f_flat(k);
    rec.f_dim = f.dim();
    PointSet fpts = flat_points(f);

    // Bullet 2: E ∩ F_k is a five-point set, summing to zero, spanning
    // dimension 4, and every other point of F_k avoids E.
    PointSet inter = fpts & ground;
    std::vector<Vec> five = inter.to_vector();
    Vec sum = 0;
    for (Vec v : five) sum ^= v;
    bool five_ok = five.size() == 5 && sum == 0 && rec.f_dim == 2 * k + 2;
    if (five_ok) {
        Subspace span(n);
        for (Vec v : five) span.insert(v);
        five_ok = span.dim() == 4;
    }
    rec.c5_ok = five_ok;
    if (!rec.c5_ok) {
        rec.failed_bullet = "c5-restriction";
        rec.counterexample = inter.min_element();
        return rec;
    }

    // Bullet 3: F_k ⊆ E_k ∪ (E_k + E_k), checked point by point against the
    // pairwise-XOR table of the ground set.
    PointSet pair_sums(n);
    ground.for_each([&](Vec a) { pair_sums |= ground.translated(a); });
    PointSet covered = ground | pair_sums;
    rec.cover_ok = true;
    fpts.for_each([&](Vec v) {
        if (rec.cover_ok && !covered.test(v)) {
            rec.cover_ok = false;
            rec.counterexample = v;
        }
    });
    if (!rec.cover_ok) rec.failed_bullet = "sumset-cover";
    return rec;
}

}  // namespace binmat
