#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/groups.hpp"
#include "ringlab/predicates.hpp"

using namespace ringlab;

namespace {

bool tables_identical(const RingPtr& a, const RingPtr& b) {
    if (a->order() != b->order() || a->zero() != b->zero() || a->one() != b->one()) return false;
    for (std::size_t i = 0; i < a->order(); ++i) {
        if (a->neg(static_cast<Elem>(i)) != b->neg(static_cast<Elem>(i))) return false;
        for (std::size_t j = 0; j < a->order(); ++j) {
            if (a->add(static_cast<Elem>(i), static_cast<Elem>(j)) !=
                b->add(static_cast<Elem>(i), static_cast<Elem>(j)))
                return false;
            if (a->mul(static_cast<Elem>(i), static_cast<Elem>(j)) !=
                b->mul(static_cast<Elem>(i), static_cast<Elem>(j)))
                return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("ring_zn") {
    CHECK(ring_zn(2)->unit_elements() == std::vector<Elem>{1});
    CHECK(ring_zn(6)->idempotent_elements() == std::vector<Elem>{0, 1, 3, 4});
    CHECK_THROWS_AS(ring_zn(1), RinglabError);
}

TEST_CASE("ring_gf builds fields over the first irreducible modulus") {
    RingPtr f3 = ring_gf(3, 1);
    CHECK(tables_identical(f3, ring_zn(3)));

    RingPtr f4 = ring_gf(2, 2);
    CHECK(f4->order() == 4);
    CHECK(f4->unit_elements().size() == 3);
    CHECK(f4->mul(2, 2) == 3);  // x^2 = x + 1 for the modulus x^2 + x + 1

    RingPtr f8 = ring_gf(2, 3);
    CHECK(f8->unit_elements().size() == 7);
    CHECK(f8->mul(2, f8->mul(2, 2)) == 3);  // x^3 = x + 1 for x^3 + x + 1

    CHECK_THROWS_AS(ring_gf(6, 1), NotPrime);
    CHECK_THROWS_AS(ring_gf(4, 1), NotPrime);

    for (auto [p, k] : {std::pair<int, int>{2, 4}, {5, 2}, {3, 3}}) {
        RingPtr f = ring_gf(p, k);
        CHECK(f->unit_elements().size() == f->order() - 1);
    }
}

TEST_CASE("product") {
    RingPtr p = product({ring_zn(2), ring_zn(3)});
    CHECK(p->order() == 6);
    CHECK(p->unit_elements() == std::vector<Elem>{4, 5});  // (1,1) and (1,2)

    CHECK(tables_identical(product({ring_zn(2)}), ring_zn(2)));

    RingPtr p33 = product({ring_zn(3), ring_zn(3)});
    for (std::size_t a = 0; a < p33->order(); ++a)
        CHECK(p33->power(static_cast<Elem>(a), 3) == a);

    CHECK_THROWS_AS(product({ring_zn(64), ring_zn(65)}), BudgetExceeded);
}

TEST_CASE("matrix_ring") {
    RingPtr z6 = ring_zn(6);
    CHECK(matrix_ring(1, z6) == z6);  // n = 1 returns the base
    RingPtr m = matrix_ring(2, ring_zn(2));
    CHECK(m->order() == 16);
    CHECK(m->unit_elements().size() == 6);
    CHECK_THROWS_AS(matrix_ring(3, ring_zn(3)), BudgetExceeded);
}

TEST_CASE("upper_triangular") {
    RingPtr t = upper_triangular(2, ring_zn(2));
    CHECK(t->order() == 8);
    CHECK(t->jacobson_elements() == std::vector<Elem>{0, 2});
    RingPtr base = ring_zn(5);
    CHECK(upper_triangular(1, base) == base);
}

TEST_CASE("skew_triangular with the identity matches truncated polynomials") {
    std::vector<RingPtr> bases = {ring_zn(2), ring_zn(3),      ring_zn(4),
                                  ring_zn(6), ring_zn(9),      ring_gf(2, 2),
                                  ring_gf(2, 3), product({ring_zn(2), ring_zn(3)})};
    for (const RingPtr& base : bases) {
        for (std::size_t deg : {std::size_t{2}, std::size_t{3}}) {
            if (base->order() > 16 && deg == 3) continue;  // order budget
            RingPtr skew = skew_triangular(deg, base, identity_endo(base));
            RingPtr poly = poly_mod(base, deg);
            CHECK(tables_identical(skew, poly));
            CHECK(skew->unit_elements().size() == poly->unit_elements().size());
            CHECK(predicate_tables_equal(skew, poly));
        }
    }
}

TEST_CASE("skew_triangular twists coefficients through the endomorphism") {
    RingPtr f4 = ring_gf(2, 2);
    RingPtr t = skew_triangular(2, f4, frobenius_endo(f4));
    CHECK(t->order() == 16);
    // (x, 1) * (x, x): constant x*x = x+1, degree-1 entry x*x + 1*x^2 = 0.
    CHECK(t->mul(6, 10) == 3);

    std::vector<Elem> bogus(f4->order(), f4->one());
    CHECK_THROWS_AS(skew_triangular(2, f4, Endomorphism{f4, bogus}), NotAnEndomorphism);
}

TEST_CASE("poly_mod arithmetic") {
    RingPtr p = poly_mod(ring_zn(3), 2);
    CHECK(p->order() == 9);
    CHECK(p->mul(4, 4) == 7);  // (1+t)^2 = 1 + 2t
    CHECK(p->is_nilpotent(3));  // t
    CHECK(is_2uj(p).holds);
    CHECK(is_unj(poly_mod(ring_zn(2), 2)).holds);
}

TEST_CASE("trivial_extension") {
    RingPtr t22 = trivial_extension(ring_zn(2));
    CHECK(t22->order() == 4);
    CHECK(predicate_tables_equal(t22, poly_mod(ring_zn(2), 2)));

    RingPtr z6 = ring_zn(6);
    RingPtr t6 = trivial_extension(z6);
    std::vector<Elem> nil = t6->nilpotent_elements();
    CHECK(nil.size() == 6);
    for (Elem x : nil) CHECK(x / 6 == 0);  // exactly the pairs (0, m)

    // U(T(R, M)) = T(U(R), M)
    for (std::size_t x = 0; x < t6->order(); ++x) {
        const Elem r_part = static_cast<Elem>(x / 6);
        CHECK(t6->is_unit(static_cast<Elem>(x)) == z6->is_unit(r_part));
    }

    RingPtr tsum = trivial_extension(ring_zn(2), direct_sum_bimodule(ring_zn(2), 2));
    CHECK(tsum->order() == 8);
}

TEST_CASE("bimodule validation rejects corrupted tables") {
    RingPtr z4 = ring_zn(4);
    Bimodule m = regular_bimodule(z4);
    CHECK_NOTHROW(validate_bimodule(m));
    m.left_act[5] = static_cast<Elem>((m.left_act[5] + 1) % 4);
    m.structural = false;
    CHECK_THROWS_AS(validate_bimodule(m), InvalidBimodule);
    CHECK_THROWS_AS(trivial_extension(z4, m), InvalidBimodule);
}

TEST_CASE("dt_extension") {
    RingPtr dt2 = dt_extension(ring_zn(2));
    CHECK(dt2->order() == 16);
    RingPtr dt3 = dt_extension(ring_zn(3));
    CHECK(dt3->order() == 81);
    // DT(R, R) carries the same class profile as R[x,y]/(x^2, y^2).
    RingPtr xy = trivial_extension(poly_mod(ring_zn(3), 2));
    CHECK(predicate_tables_equal(dt3, xy));
}

TEST_CASE("ks_ring") {
    RingPtr k0 = ks_ring(ring_zn(2), 0);
    CHECK(k0->order() == 16);
    // s = 1 recovers the ordinary 2x2 matrix ring, entry for entry.
    CHECK(tables_identical(ks_ring(ring_zn(2), 1), matrix_ring(2, ring_zn(2))));

    RingPtr m = matrix_ring(2, ring_zn(2));
    CHECK_THROWS_AS(ks_ring(m, 4), NotCentral);  // e12 is not central
}

TEST_CASE("formal_matrix") {
    // s = 1 contributes plain products everywhere.
    CHECK(tables_identical(formal_matrix(2, ring_zn(3), 1), matrix_ring(2, ring_zn(3))));
    // s = 0 keeps only the exponent-zero terms, matching the 2x2 case of Ks.
    CHECK(tables_identical(formal_matrix(2, ring_zn(4), 0), ks_ring(ring_zn(4), 0)));
    CHECK(formal_matrix(2, ring_zn(4), 2)->order() == 256);
    CHECK_THROWS_AS(formal_matrix(1, ring_zn(2), 0), RinglabError);
}

TEST_CASE("trivial_morita") {
    // Shared-base context multiplies exactly like the zero-twist Ks ring.
    CHECK(tables_identical(trivial_morita(ring_zn(2)), ks_ring(ring_zn(2), 0)));

    RingPtr a = ring_zn(2);
    RingPtr b = ring_gf(2, 2);
    RingPtr t = trivial_morita(a, b, zero_bimodule(a, b), zero_bimodule(b, a));
    CHECK(t->order() == 8);
    CHECK(predicate_tables_equal(t, product({a, b})));
}

TEST_CASE("group_ring") {
    RingPtr z2c2 = group_ring(ring_zn(2), group_catalog("C2"));
    CHECK(z2c2->order() == 4);
    CHECK(z2c2->nilpotent_elements() == std::vector<Elem>{0, 3});
    CHECK(z2c2->jacobson_elements() == std::vector<Elem>{0, 3});

    CHECK_THROWS_AS(group_ring(ring_zn(2), group_catalog("C8"), 128), BudgetExceeded);

    // The trivial group leaves the base ring untouched.
    CHECK(tables_identical(group_ring(ring_zn(6), group_catalog("C1")), ring_zn(6)));
}

TEST_CASE("augmentation map and ideal") {
    RingPtr z2c2 = group_ring(ring_zn(2), group_catalog("C2"));
    RingHom eps = augmentation(z2c2);
    CHECK(eps.map[3] == 0);  // 1 + g
    CHECK(eps.map[2] == 1);  // g
    CHECK(is_ring_hom(eps));

    ElementSet delta = augmentation_ideal(z2c2);
    CHECK(delta.members == std::vector<Elem>{0, 3});
    CHECK(is_two_sided_ideal(z2c2, delta.members));
    for (Elem d : delta.members) CHECK(z2c2->in_jacobson(d));

    for (const char* name : {"C3", "C4", "C2xC2"}) {
        RingPtr rg = group_ring(ring_zn(2), group_catalog(name));
        RingHom e = augmentation(rg);
        CHECK(is_ring_hom(e));
        // Surjective: every base element is hit.
        std::set<Elem> image(e.map.begin(), e.map.end());
        CHECK(image.size() == 2);
        CHECK(augmentation_ideal(rg).size() == rg->order() / 2);
    }

    CHECK_THROWS_AS(augmentation(ring_zn(6)), NotAGroupRing);
}

TEST_CASE("endomorphism checks and alpha-compatibility") {
    RingPtr f4 = ring_gf(2, 2);
    Endomorphism frob = frobenius_endo(f4);
    CHECK(check_endomorphism(f4, frob.map).ok);
    CHECK(is_alpha_compatible(f4, frob).ok);
    CHECK(is_alpha_compatible(f4, identity_endo(f4)).ok);

    // x -> x^char is not additive over Z4.
    CHECK_THROWS_AS(frobenius_endo(ring_zn(4)), NotAnEndomorphism);

    // Swapping the factors of Z2 x Z2 is a ring map but not compatible.
    RingPtr p = product({ring_zn(2), ring_zn(2)});
    std::vector<Elem> swap = {0, 2, 1, 3};
    EndoVerdict v = check_endomorphism(p, swap);
    CHECK(v.ok);
    EndoVerdict compat = is_alpha_compatible(p, Endomorphism{p, swap});
    CHECK_FALSE(compat.ok);
    CHECK(compat.witness.has_value());
}

TEST_CASE("central_element") {
    CHECK(central_element(ring_zn(4), 2).value == 2);
    RingPtr m = matrix_ring(2, ring_zn(2));
    CHECK_THROWS_AS(central_element(m, 4), NotCentral);
}
