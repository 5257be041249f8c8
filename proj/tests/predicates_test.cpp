#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "ringlab/constructions.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/groups.hpp"
#include "ringlab/predicates.hpp"

using namespace ringlab;

namespace {

std::vector<RingPtr> mini_catalog() {
    return {ring_zn(2),
            ring_zn(3),
            ring_zn(4),
            ring_zn(6),
            ring_zn(7),
            ring_zn(9),
            ring_gf(2, 2),
            matrix_ring(2, ring_zn(2)),
            upper_triangular(2, ring_zn(2)),
            poly_mod(ring_zn(3), 2),
            group_ring(ring_zn(2), group_catalog("C2")),
            group_ring(ring_zn(2), group_catalog("C3")),
            group_ring(ring_zn(3), group_catalog("C2")),
            ks_ring(ring_zn(4), 2)};
}

}  // namespace

TEST_CASE("unit coset classes") {
    CHECK(is_uj(ring_zn(4)).holds);
    PredicateVerdict uj4 = is_uj(ring_zn(4));
    REQUIRE(uj4.witness.has_value());
    CHECK(*uj4.witness->part("u") == 3);
    CHECK(*uj4.witness->part("j") == 2);  // 3 = 1 + 2

    CHECK_FALSE(is_unj(ring_zn(3)).holds);
    CHECK(is_2unj(ring_zn(3)).holds);
    CHECK(is_unj(poly_mod(ring_zn(2), 2)).holds);
    CHECK(is_uu(ring_zn(8)).holds);
    CHECK_FALSE(is_uj(ring_zn(6)).holds);
    CHECK_FALSE(is_uu(ring_zn(6)).holds);
    CHECK_FALSE(is_unj(ring_zn(6)).holds);
    CHECK(is_2unj(ring_zn(6)).holds);
}

TEST_CASE("2-UNJ verdicts and witnesses") {
    CHECK_FALSE(is_2unj(ring_zn(7)).holds);

    RingPtr m = matrix_ring(2, ring_zn(2));
    PredicateVerdict v = is_2unj(m);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    const Elem u = *v.witness->part("u");
    CHECK(m->is_unit(u));
    // The failing unit has multiplicative order 3.
    CHECK(m->power(u, 3) == m->one());
    CHECK(m->power(u, 2) != m->one());
    CHECK(revalidate_witness(m, v));
}

TEST_CASE("boolean, tripotent, potent") {
    CHECK(is_boolean(ring_zn(2)).holds);
    CHECK_FALSE(is_boolean(ring_zn(3)).holds);
    CHECK(is_tripotent(ring_zn(6)).holds);
    PredicateVerdict t4 = is_tripotent(ring_zn(4));
    CHECK_FALSE(t4.holds);
    CHECK(*t4.witness->part("a") == 2);
    RingPtr f4 = ring_gf(2, 2);
    CHECK(is_potent(f4).holds);
    CHECK_FALSE(is_tripotent(f4).holds);
    CHECK_FALSE(is_potent(ring_zn(4)).holds);
}

TEST_CASE("reduced and abelian") {
    CHECK(is_reduced(ring_zn(6)).holds);
    CHECK_FALSE(is_reduced(upper_triangular(2, ring_zn(2))).holds);
    CHECK(is_abelian_ring(ring_zn(6)).holds);
    CHECK_FALSE(is_abelian_ring(matrix_ring(2, ring_zn(2))).holds);
}

TEST_CASE("regularity family") {
    CHECK(is_regular(ring_zn(6)).holds);
    PredicateVerdict r4 = is_regular(ring_zn(4));
    CHECK_FALSE(r4.holds);
    CHECK(*r4.witness->part("a") == 2);
    CHECK(is_strongly_pi_regular(ring_zn(4)).holds);
    CHECK(is_unit_regular(ring_zn(6)).holds);
    CHECK(is_strongly_regular(ring_zn(6)).holds);
    CHECK(is_regular(matrix_ring(2, ring_zn(2))).holds);
    CHECK_FALSE(is_strongly_regular(matrix_ring(2, ring_zn(2))).holds);
    // Finite rings are always pi-regular and strongly pi-regular; confirmed
    // by scan, not assumed.
    for (const RingPtr& r : mini_catalog()) {
        CHECK(is_pi_regular(r).holds);
        CHECK(is_strongly_pi_regular(r).holds);
    }
}

TEST_CASE("clean family") {
    CHECK(is_j_clean(ring_zn(4)).holds);
    CHECK(is_clean(ring_zn(6)).holds);
    CHECK(is_semi_tripotent(ring_zn(6)).holds);
    PredicateVerdict s = is_strongly_2_nil_clean(ring_zn(6));
    CHECK(s.holds);
    CHECK(revalidate_witness(ring_zn(6), s));
    CHECK_FALSE(is_j_clean(ring_zn(3)).holds);
    CHECK_FALSE(is_strongly_2_nil_clean(ring_gf(2, 2)).holds);
    CHECK_FALSE(is_semi_tripotent(ring_zn(7)).holds);
}

TEST_CASE("exchange, semiregular, semipotent hold on finite rings by scan") {
    for (const RingPtr& r : mini_catalog()) {
        CHECK(is_exchange(r).holds);
        CHECK(is_semiregular(r).holds);
        CHECK(is_semipotent(r).holds);
        CHECK(is_clean(r).holds);
    }
}

TEST_CASE("idempotent lifting") {
    RingPtr z4 = ring_zn(4);
    CHECK(idempotents_lift_mod(z4, jacobson(z4)).holds);
    RingPtr t = upper_triangular(2, ring_zn(2));
    CHECK(idempotents_lift_mod(t, jacobson(t)).holds);
    ElementSet bogus = make_element_set(z4, SetRole::Ideal, {0, 1});
    CHECK_THROWS_AS(idempotents_lift_mod(z4, bogus), NotAnIdeal);
}

TEST_CASE("dedekind-finite, local, semisimple, 2-primal") {
    for (const RingPtr& r : mini_catalog()) CHECK(is_dedekind_finite(r).holds);
    CHECK(is_local(ring_zn(4)).holds);
    CHECK_FALSE(is_local(ring_zn(6)).holds);
    CHECK(is_semisimple(ring_zn(6)).holds);
    CHECK_FALSE(is_semisimple(ring_zn(4)).holds);
    CHECK(is_2_primal(ring_zn(4)).holds);
    CHECK_FALSE(is_2_primal(matrix_ring(2, ring_zn(2))).holds);
}

TEST_CASE("unit_square_decompose returns the lex-least split") {
    auto d3 = unit_square_decompose(ring_zn(3), 2);
    REQUIRE(d3.has_value());
    CHECK(d3->first == 0);
    CHECK(d3->second == 0);

    auto d9 = unit_square_decompose(ring_zn(9), 2);
    REQUIRE(d9.has_value());
    CHECK(d9->first == 0);
    CHECK(d9->second == 3);

    CHECK_FALSE(unit_square_decompose(ring_zn(7), 3).has_value());
    CHECK_THROWS_AS(unit_square_decompose(ring_zn(6), 2), NotAUnit);
}

TEST_CASE("implication lattice edges hold on the mini catalog") {
    static const std::vector<std::pair<const char*, const char*>> edges = {
        {"UU", "UNJ"},  {"UJ", "UNJ"},  {"UNJ", "2UNJ"}, {"UU", "2UU"},
        {"UJ", "2UJ"},  {"2UU", "2UNJ"}, {"2UJ", "2UNJ"},
    };
    for (const RingPtr& r : mini_catalog()) {
        std::map<std::string, bool> v;
        for (const char* id : {"UU", "UJ", "UNJ", "2UU", "2UJ", "2UNJ"})
            v[id] = check_predicate(r, id).holds;
        for (const auto& [from, to] : edges) {
            if (v[from]) CHECK(v[to]);
        }
    }
}

TEST_CASE("sum of a unit square and a unit never hits 1 in 2-UNJ rings") {
    for (const RingPtr& r : mini_catalog()) {
        if (!is_2unj(r).holds) continue;
        for (Elem u : r->unit_elements()) {
            const Elem uu = r->mul(u, u);
            for (Elem v : r->unit_elements()) CHECK(r->add(uu, v) != r->one());
        }
    }
}

TEST_CASE("quotient transfer properties of 2-UNJ") {
    for (const RingPtr& r : mini_catalog()) {
        if (!is_2unj(r).holds) continue;
        RingPtr q = quotient(r, jacobson(r)).first;
        CHECK(is_2uu(q).holds);
        if (is_2_primal(r).holds) CHECK(is_2uj(r).holds);
    }
}

TEST_CASE("regularity equivalences with 2-UNJ") {
    for (const RingPtr& r : mini_catalog()) {
        const bool unj = is_2unj(r).holds;
        const bool trip = is_tripotent(r).holds;
        CHECK((is_regular(r).holds && unj) == trip);
        CHECK((is_strongly_regular(r).holds && unj) == trip);
        CHECK((is_unit_regular(r).holds && unj) == trip);
    }
}

TEST_CASE("every witness revalidates inside its ring") {
    for (const RingPtr& r : mini_catalog()) {
        for (const std::string& id : predicate_ids()) {
            PredicateVerdict v = check_predicate(r, id);
            CHECK(revalidate_witness(r, v));
        }
    }
}

TEST_CASE("predicate registry") {
    CHECK(predicate_ids().size() == 27);
    CHECK(is_predicate_id("2UNJ"));
    CHECK(is_predicate_id("strongly-2-nil-clean"));
    CHECK_FALSE(is_predicate_id("frobnitz"));
    CHECK_THROWS_AS(check_predicate(ring_zn(4), "frobnitz"), UnknownPredicate);
    CHECK(check_predicate(ring_zn(4), "2UNJ").holds);
    CHECK(predicate_table(ring_zn(4)).size() == 27);
    CHECK(predicate_tables_equal(ring_zn(4), ring_zn(4)));
    CHECK_FALSE(predicate_tables_equal(ring_zn(4), ring_zn(6)));
}
