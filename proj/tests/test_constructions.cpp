#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "binmat/constructions.hpp"
#include "binmat/errors.hpp"
#include "binmat/matroid.hpp"

using namespace binmat;

TEST_CASE("tripod base and growth") {
    TripodWitness t0 = tripod(0);
    CHECK(t0.matroid.dim() == 1);
    CHECK(t0.matroid.ground_size() == 1);
    CHECK(t0.matroid.ground().test(1));
    CHECK_FALSE(t0.f_flat.has_value());

    long long expect = 1;
    for (int k = 1; k <= 5; ++k) {
        expect = 4 * expect + 1;
        TripodWitness t = tripod(k);
        CHECK(t.matroid.dim() == 3 * k + 1);
        CHECK((long long)t.matroid.ground_size() == expect);
        CHECK(expect == ((1ll << (2 * (k + 1))) - 1) / 3);
        REQUIRE(t.f_flat.has_value());
        CHECK(t.f_flat->dim() == 2 * k + 2);
        REQUIRE(t.h_flat.has_value());
        CHECK(t.h_flat->dim() == 3 * k - 2);
    }
}

TEST_CASE("tripod(1) ground set") {
    TripodWitness t1 = tripod(1);
    CHECK(t1.matroid.ground_size() == 5);
    // E_1 = {e1} ∪ (x+e1) ∪ (y+e1) ∪ (z+e1) ∪ {x+y+z} with x,y,z = e2,e3,e4
    for (Vec v : {1u, 3u, 5u, 9u, 14u}) CHECK(t1.matroid.ground().test(v));
}

TEST_CASE("tripods are triangle-free through order 5") {
    for (int k = 0; k <= 5; ++k) CHECK(is_triangle_free(tripod(k).matroid));
}

TEST_CASE("tripod(1) and c5t(4) are induced-isomorphic both ways") {
    Matroid t1 = tripod(1).matroid;
    Matroid c5 = c5t(4);
    CHECK(induced_iso_exists(t1, c5));
    CHECK(induced_iso_exists(c5, t1));
}

TEST_CASE("c5t examples") {
    Matroid c5 = c5t(4);
    CHECK(c5.dim() == 4);
    std::vector<Vec> pts = c5.ground().to_vector();
    CHECK(pts == std::vector<Vec>{1, 2, 4, 8, 15});
    Vec sum = 0;
    for (Vec v : pts) sum ^= v;
    CHECK(sum == 0);

    Matroid wide = c5t(6);
    CHECK(wide.dim() == 6);
    CHECK(wide.ground_size() == 5);
    CHECK(closure(wide.ground()).dim() == 4);

    CHECK_THROWS_AS(c5t(3), input_error);
}

TEST_CASE("affine geometry examples") {
    Matroid a1 = affine_geometry(1);
    CHECK(a1.ground_size() == 1);
    CHECK(a1.ground().test(1));

    Matroid a3 = affine_geometry(3);
    CHECK(a3.ground_size() == 4);
    CHECK(is_triangle_free(a3));

    for (int n = 2; n <= 7; ++n) CHECK(critical_number(affine_geometry(n)) == 1);
}

TEST_CASE("tripod lemma holds for orders 1 through 3") {
    for (int k = 1; k <= 3; ++k) {
        TripodLemmaRecord rec = verify_tripod_lemma(k);
        CHECK(rec.all_ok());
        CHECK(rec.failed_bullet.empty());
        CHECK(rec.f_dim == 2 * k + 2);
    }
    // for k = 1, F_1 is the whole geometry
    TripodLemmaRecord r1 = verify_tripod_lemma(1);
    CHECK(r1.f_dim == 4);
}

TEST_CASE("tripod restriction to F_k closure is a five-point circuit") {
    for (int k = 1; k <= 3; ++k) {
        TripodWitness t = tripod(k);
        PointSet inter = flat_points(*t.f_flat) & t.matroid.ground();
        Subspace span = closure(inter);
        CHECK(inter.count() == 5);
        CHECK(span.dim() == 4);
        // restriction to the closure is induced-isomorphic to C5
        Matroid restricted = restrict_to_flat(Matroid(t.matroid.dim(), inter), span);
        CHECK(induced_iso_exists(restricted, c5t(4)));
        CHECK(induced_iso_exists(c5t(4), restricted));
    }
}

TEST_CASE("tripod h-flat restriction is the previous tripod") {
    for (int k = 1; k <= 3; ++k) {
        TripodWitness t = tripod(k);
        Matroid inner = restrict_to_flat(t.matroid, *t.h_flat);
        Matroid prev = tripod(k - 1).matroid;
        CHECK(inner.dim() == prev.dim());
        CHECK(inner.ground() == prev.ground());
    }
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(tripod(-1), input_error);
    CHECK_THROWS_AS(affine_geometry(0), input_error);
    CHECK_THROWS_AS(verify_tripod_lemma(0), input_error);
}
