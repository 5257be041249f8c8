#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>

#include "ringlab/dsl.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/verifier.hpp"
#include "support/fuzz.hpp"

using namespace ringlab;
using fuzz::random_expr;

TEST_CASE("parse builds the expected nodes") {
    RingExpr g = parse_ring_expr("GroupRing(Z2, C4)");
    CHECK(g.kind == ExprKind::GroupRing);
    CHECK(g.group_name == "C4");
    CHECK(g.children.at(0).kind == ExprKind::ZMod);
    CHECK(g.children.at(0).ints.at(0) == 2);

    RingExpr k = parse_ring_expr("Ks(Z4, s=2)");
    CHECK(k.kind == ExprKind::Ks);
    CHECK(k.scalar == 2);

    RingExpr t = parse_ring_expr("Tskew(2,GF(4),alpha=frobenius)");
    CHECK(t.kind == ExprKind::Tskew);
    CHECK(t.alpha == "frobenius");
    CHECK(t.children.at(0).ints == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ring_expr("T(2, GF(4)"), ParseError);
    try {
        parse_ring_expr("T(2, GF(4)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("expected") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_ring_expr(""), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Frob(Z2)"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Z2 Z3"), ParseError);
    CHECK_THROWS_AS(parse_ring_expr("Prod(Z2,)"), ParseError);
}

TEST_CASE("arity and range diagnostics") {
    CHECK_THROWS_AS(parse_ring_expr("M(Z2)"), ArityError);
    CHECK_THROWS_AS(parse_ring_expr("Ks(Z4)"), ArityError);
    CHECK_THROWS_AS(parse_ring_expr("GroupRing(Z2)"), ArityError);
    CHECK_THROWS_AS(parse_ring_expr("GF(2, 2, 2)"), ArityError);
    CHECK_THROWS_AS(parse_ring_expr("Z1"), RangeError);
    CHECK_THROWS_AS(parse_ring_expr("M(0, Z2)"), RangeError);
    CHECK_THROWS_AS(parse_ring_expr("PolyMod(Z2, 1)"), RangeError);
    CHECK_THROWS_AS(parse_ring_expr("FM(1, Z2, s=0)"), RangeError);
}

TEST_CASE("GF arities normalize to (p, k)") {
    CHECK(parse_ring_expr("GF(4)") == parse_ring_expr("GF(2, 2)"));
    CHECK(format_ring_expr(parse_ring_expr("GF(2, 2)")) == "GF(4)");
    CHECK(format_ring_expr(parse_ring_expr("GF(27)")) == "GF(27)");
    // Not a prime power: parse keeps it, evaluation rejects it.
    RingExpr bad = parse_ring_expr("GF(6)");
    CHECK_THROWS_AS(eval_ring_expr(bad), NotPrime);
}

TEST_CASE("format is canonical and idempotent") {
    CHECK(format_ring_expr(parse_ring_expr("  Prod( Z2 ,Z3 )")) == "Prod(Z2, Z3)");
    for (const std::string& line : parse_catalog_lines(default_catalog_text())) {
        const std::string once = format_ring_expr(parse_ring_expr(line));
        CHECK(format_ring_expr(parse_ring_expr(once)) == once);
    }
}

TEST_CASE("round trip: parse after format is the identity on 1000 fuzzed trees") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 1000; ++i) {
        RingExpr e = random_expr(rng, 3);
        const std::string text = format_ring_expr(e);
        CAPTURE(text);
        RingExpr back = parse_ring_expr(text);
        CHECK(back == e);
        CHECK(format_ring_expr(back) == text);
    }
}

TEST_CASE("evaluation follows the constructions") {
    CHECK(eval_ring_expr(parse_ring_expr("Prod(Z2, Z3)"))->order() == 6);
    CHECK(eval_ring_expr(parse_ring_expr("FM(2, Z4, s=2)"))->order() == 256);
    CHECK_THROWS_AS(eval_ring_expr(parse_ring_expr("M(3, Z3)")), BudgetExceeded);
    CHECK_THROWS_AS(eval_ring_expr(parse_ring_expr("Ks(Z4, s=7)")), RangeError);
    CHECK_THROWS_AS(eval_ring_expr(parse_ring_expr("GroupRing(Z2, C5)")), UnknownGroup);
    CHECK_THROWS_AS(eval_ring_expr(parse_ring_expr("Ks(M(2, Z2), s=4)")), NotCentral);

    EvalConfig tight;
    tight.max_order = 10;
    CHECK_THROWS_AS(eval_ring_expr(parse_ring_expr("Z16"), tight), BudgetExceeded);
    CHECK(eval_ring_expr(parse_ring_expr("Z8"), tight)->order() == 8);
}

TEST_CASE("evaluation is deterministic for equal trees") {
    RingExpr e = parse_ring_expr("GroupRing(Z3, C3)");
    RingPtr a = eval_ring_expr(e);
    RingPtr b = eval_ring_expr(parse_ring_expr(format_ring_expr(e)));
    REQUIRE(a->order() == b->order());
    for (std::size_t i = 0; i < a->order(); ++i)
        for (std::size_t j = 0; j < a->order(); ++j) {
            REQUIRE(a->add(static_cast<Elem>(i), static_cast<Elem>(j)) ==
                    b->add(static_cast<Elem>(i), static_cast<Elem>(j)));
            REQUIRE(a->mul(static_cast<Elem>(i), static_cast<Elem>(j)) ==
                    b->mul(static_cast<Elem>(i), static_cast<Elem>(j)));
        }
}

TEST_CASE("forced validation accepts the constructions") {
    EvalConfig cfg;
    cfg.force_validate = true;
    CHECK(eval_ring_expr(parse_ring_expr("Z6"), cfg)->order() == 6);
    CHECK(eval_ring_expr(parse_ring_expr("GroupRing(Z2, C2)"), cfg)->order() == 4);
    CHECK(eval_ring_expr(parse_ring_expr("Ks(Z4, s=2)"), cfg)->order() == 256);
}

TEST_CASE("catalog files strip comments and blanks") {
    const std::string text = "# header\nZ2\n\n  Z3  # trailing\n#only comment\nGF(4)\n";
    CHECK(parse_catalog_lines(text) ==
          std::vector<std::string>{"Z2", "Z3", "GF(4)"});
}

TEST_CASE("every grammar production is reachable from the default catalog") {
    std::set<ExprKind> kinds;
    bool saw_alpha_id = false, saw_alpha_frob = false, saw_scalar = false, saw_gf = false;
    std::function<void(const RingExpr&)> walk = [&](const RingExpr& e) {
        kinds.insert(e.kind);
        if (e.kind == ExprKind::GF) saw_gf = true;
        if (e.kind == ExprKind::Tskew || e.kind == ExprKind::SkewPolyMod) {
            saw_alpha_id |= e.alpha == "id";
            saw_alpha_frob |= e.alpha == "frobenius";
        }
        if (e.scalar) saw_scalar = true;
        for (const RingExpr& c : e.children) walk(c);
    };
    for (const std::string& line : parse_catalog_lines(default_catalog_text()))
        walk(parse_ring_expr(line));
    for (ExprKind k : {ExprKind::ZMod, ExprKind::GF, ExprKind::Prod, ExprKind::M, ExprKind::T,
                       ExprKind::Tskew, ExprKind::PolyMod, ExprKind::SkewPolyMod,
                       ExprKind::TrivExt, ExprKind::DT, ExprKind::Ks, ExprKind::FM,
                       ExprKind::MoritaTriv, ExprKind::GroupRing})
        CHECK(kinds.count(k) == 1);
    CHECK(saw_alpha_id);
    CHECK(saw_alpha_frob);
    CHECK(saw_scalar);
    CHECK(saw_gf);
}
