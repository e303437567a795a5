#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "binmat/errors.hpp"
#include "binmat/gf2.hpp"
#include "support/testutil.hpp"

using namespace binmat;

TEST_CASE("pointset basics and translation") {
    PointSet s(4);
    s.set(3);
    s.set(9);
    CHECK(s.count() == 2);
    CHECK(s.test(3));
    PointSet t = s.translated(5);
    CHECK(t.test(3 ^ 5));
    CHECK(t.test(9 ^ 5));
    CHECK(t.count() == 2);
    // translation is an involution
    CHECK(t.translated(5) == s);

    std::mt19937_64 rng(7);
    for (int n : {1, 3, 6, 7, 9}) {
        PointSet x = testutil::random_pointset(n, rng, 0.37);
        Vec a = Vec(rng() & ((1u << n) - 1));
        PointSet y = x.translated(a);
        CHECK(y.count() == x.count());
        x.for_each([&](Vec v) { CHECK(y.test(v ^ a)); });
    }
}

TEST_CASE("closure examples") {
    PointSet s(3);
    s.set(0b001);
    s.set(0b010);
    Subspace c = closure(s);
    CHECK(c.dim() == 2);
    CHECK(c.contains(0b011));
    CHECK_FALSE(c.contains(0b100));

    CHECK(closure(PointSet(3)).dim() == 0);

    PointSet basis(3);
    basis.set(1);
    basis.set(2);
    basis.set(4);
    CHECK(closure(basis).dim() == 3);
}

TEST_CASE("closure is idempotent and monotone") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        PointSet s = testutil::random_pointset(6, rng, 0.2);
        Subspace c = closure(s);
        // contains everything it started with (minus nothing)
        s.for_each([&](Vec v) { CHECK(c.contains(v)); });
        CHECK(closure(flat_points(c)).basis() == c.basis());
        PointSet bigger = s | testutil::random_pointset(6, rng, 0.1);
        CHECK(closure(bigger).dim() >= c.dim());
    }
}

TEST_CASE("flat_points examples") {
    Subspace s = Subspace::span_of(3, {1, 2});
    PointSet p = flat_points(s);
    CHECK(p.count() == 3);
    CHECK(p.test(1));
    CHECK(p.test(2));
    CHECK(p.test(3));

    CHECK(flat_points(Subspace::zero(3)).none());

    PointSet full2 = flat_points(Subspace::full(2));
    CHECK(full2.count() == 3);
}

TEST_CASE("cosets partition the space, zero coset first") {
    Subspace h = Subspace::span_of(2, {1});
    auto cs = cosets(h);
    REQUIRE(cs.size() == 2);
    CHECK(cs[0].shift == 0);
    CHECK(cs[0].points().test(0));
    CHECK(cs[0].points().test(1));
    CHECK(cs[1].points().test(2));
    CHECK(cs[1].points().test(3));

    CHECK(cosets(Subspace::full(1)).size() == 1);
    CHECK(cosets(Subspace::zero(3)).size() == 8);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 6;
        Subspace s = testutil::random_subspace(n, int(rng() % (n + 1)), rng);
        auto all = cosets(s);
        CHECK(all.size() == (1u << s.codim()));
        PointSet seen(n);
        for (const auto& coset : all) {
            PointSet pts = coset.points();
            CHECK(pts.count() == (1u << s.dim()));
            CHECK_FALSE(pts.intersects(seen));
            seen |= pts;
        }
        CHECK(seen == PointSet::full(n));
    }
}

TEST_CASE("coset shift is the minimum element") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        Subspace s = testutil::random_subspace(7, 3, rng);
        Vec v = Vec(rng() & 127);
        AffineFlat flat(s, v);
        CHECK(flat.points().min_element() == flat.shift);
        CHECK(flat.contains(v));
    }
}

TEST_CASE("complement_flat examples and properties") {
    Subspace g1 = Subspace::span_of(7, {1, 2, 4, 8});
    Subspace w = complement_flat(g1);
    CHECK(w.dim() == 3);
    CHECK(w.contains(16));
    CHECK(w.contains(32));
    CHECK(w.contains(64));

    CHECK(complement_flat(Subspace::zero(3)).dim() == 3);
    CHECK(complement_flat(Subspace::full(3)).dim() == 0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 7;
        Subspace s = testutil::random_subspace(n, int(rng() % (n + 1)), rng);
        Subspace c = complement_flat(s);
        CHECK(s.dim() + c.dim() == n);
        CHECK_FALSE(flat_points(s).intersects(flat_points(c)));
        Subspace join = s;
        for (Vec b : c.basis()) join.insert(b);
        CHECK(join.dim() == n);
    }
}

namespace {

// Brute-force largest subspace: scan every subspace of every dimension.
int oracle_largest_dim(const PointSet& s) {
    if (!s.test(0)) return -1;
    int best = 0;
    for (int d = 1; d <= s.dim(); ++d) {
        bool found = false;
        for_each_subspace(s.dim(), d, [&](const Subspace& sub) {
            if (found) return;
            bool inside = true;
            sub.for_each_element([&](Vec v) {
                if (!s.test(v)) inside = false;
            });
            if (inside) found = true;
        });
        if (found)
            best = d;
        else
            break;
    }
    return best;
}

// Brute-force largest affine flat dimension over all (subspace, coset) pairs.
int oracle_largest_affine_dim(const PointSet& s) {
    if (s.none()) return -1;
    int best = -1;
    for (int d = s.dim(); d >= 0 && best < 0; --d) {
        for_each_subspace(s.dim(), d, [&](const Subspace& sub) {
            if (best >= 0) return;
            for (const AffineFlat& coset : cosets(sub)) {
                if (coset.points().is_subset_of(s)) {
                    best = d;
                    return;
                }
            }
        });
    }
    return best;
}

}  // namespace

TEST_CASE("subspace enumeration counts match gaussian binomials") {
    for (int n = 0; n <= 8; ++n) {
        long long total = 0;
        for (int d = 0; d <= n; ++d) {
            long long count = 0;
            for_each_subspace(n, d, [&](const Subspace& s) {
                CHECK(s.dim() == d);
                ++count;
            });
            CHECK(count == testutil::gaussian_binomial(n, d));
            total += count;
        }
        (void)total;
    }
    // cross-check the enumerator against closure-based enumeration at n <= 4
    for (int n = 1; n <= 4; ++n) {
        auto by_closure = testutil::all_subspaces_by_closure(n);
        long long enumerated = 0;
        for (int d = 0; d <= n; ++d)
            for_each_subspace(n, d, [&](const Subspace&) { ++enumerated; });
        CHECK(enumerated == (long long)by_closure.size());
    }
}

TEST_CASE("largest_subspace_in examples") {
    CHECK(largest_subspace_in(PointSet::full(4))->dim() == 4);
    CHECK(largest_subspace_in(PointSet::singleton(4, 0))->dim() == 0);
    // a strict coset misses 0
    Subspace h = Subspace::span_of(4, {1, 2});
    AffineFlat coset(h, 8);
    CHECK_FALSE(largest_subspace_in(coset.points()).has_value());
}

TEST_CASE("largest_subspace_in agrees with the exhaustive oracle") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 4 + int(rng() % 3);  // 4..6
        PointSet s = testutil::random_pointset(n, rng, 0.55);
        s.set(0);
        auto got = largest_subspace_in(s);
        REQUIRE(got.has_value());
        CHECK(got->dim() == oracle_largest_dim(s));
        // witness is genuinely inside s
        got->for_each_element([&](Vec v) { CHECK(s.test(v)); });
    }
    // a couple of denser draws at n = 8
    for (int trial = 0; trial < 3; ++trial) {
        PointSet s = testutil::random_pointset(8, rng, 0.8);
        s.set(0);
        auto got = largest_subspace_in(s);
        REQUIRE(got.has_value());
        CHECK(got->dim() == oracle_largest_dim(s));
    }
}

TEST_CASE("largest_affine_in examples") {
    PointSet single(4);
    single.set(9);
    auto flat = largest_affine_in(single);
    REQUIRE(flat.has_value());
    CHECK(flat->dim() == 0);
    CHECK(flat->shift == 9);

    Subspace h = Subspace::span_of(5, {1, 2, 4});
    AffineFlat coset(h, 16);
    auto whole = largest_affine_in(coset.points());
    REQUIRE(whole.has_value());
    CHECK(whole->dim() == 3);
    CHECK(*whole == coset);

    CHECK_FALSE(largest_affine_in(PointSet(4)).has_value());
}

TEST_CASE("largest_affine_in agrees with the exhaustive oracle") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 4 + int(rng() % 3);
        PointSet s = testutil::random_pointset(n, rng, 0.5);
        auto got = largest_affine_in(s);
        int want = oracle_largest_affine_dim(s);
        if (want < 0) {
            CHECK_FALSE(got.has_value());
        } else {
            REQUIRE(got.has_value());
            CHECK(got->dim() == want);
            CHECK(got->points().is_subset_of(s));
        }
    }
    // one pass at n = 8 against the full affine enumeration
    PointSet s = testutil::random_pointset(8, rng, 0.45);
    auto got = largest_affine_in(s);
    REQUIRE(got.has_value());
    CHECK(got->dim() == oracle_largest_affine_dim(s));
}

TEST_CASE("find_subspace_in returns the lexicographically least basis") {
    // inside the full space the least dim-d basis is the standard one, descending
    auto w = find_subspace_in(PointSet::full(5), 3);
    REQUIRE(w.has_value());
    CHECK(w->basis() == std::vector<Vec>{4, 2, 1});

    // no dim-2 subspace lives in a 3-point set missing closure
    PointSet s(3);
    s.set(0);
    s.set(1);
    s.set(2);
    CHECK_FALSE(find_subspace_in(s, 2).has_value());
    s.set(3);
    CHECK(find_subspace_in(s, 2).has_value());
}

TEST_CASE("anchored subspace search honors the anchor") {
    PointSet s = PointSet::full(4);
    auto w = find_anchored_subspace_in(s, 9, 2);
    REQUIRE(w.has_value());
    CHECK(w->contains(9));
    CHECK(w->dim() == 2);
    w->for_each_element([&](Vec v) { CHECK(s.test(v)); });

    PointSet tiny(3);
    tiny.set(0);
    tiny.set(5);
    CHECK_FALSE(find_anchored_subspace_in(tiny, 5, 2).has_value());
}

TEST_CASE("pointset dimension guard") {
    CHECK_THROWS_AS(PointSet(29), input_error);
}
