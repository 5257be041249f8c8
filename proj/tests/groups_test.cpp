#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/errors.hpp"
#include "ringlab/groups.hpp"

using namespace ringlab;

TEST_CASE("every catalog group passes exhaustive axiom validation") {
    for (const std::string& name : group_catalog_names()) {
        GroupPtr g = group_catalog(name);
        CHECK_NOTHROW(validate_group(*g));
    }
    CHECK_THROWS_AS(group_catalog("C5"), UnknownGroup);
}

TEST_CASE("orders and structure of the named groups") {
    CHECK(group_catalog("C2")->order() == 2);
    CHECK(group_catalog("C2xC2xC2")->order() == 8);

    GroupPtr q8 = group_catalog("Q8");
    CHECK(q8->order() == 8);
    CHECK(exponent(*q8) == 4);
    bool abelian = true;
    for (Elem a = 0; a < q8->order() && abelian; ++a)
        for (Elem b = 0; b < q8->order(); ++b)
            if (q8->op(a, b) != q8->op(b, a)) {
                abelian = false;
                break;
            }
    CHECK_FALSE(abelian);
    CHECK(element_order(*q8, 1) == 4);  // i

    GroupPtr s3 = group_catalog("S3");
    CHECK(s3->order() == 6);
    CHECK_FALSE(is_p_group(*s3, 2));
    CHECK_FALSE(is_p_group(*s3, 3));
    CHECK(s3->op(1, 3) != s3->op(3, 1));

    GroupPtr d4 = group_catalog("D4");
    CHECK(d4->order() == 8);
    CHECK(is_p_group(*d4, 2));
    CHECK(exponent(*d4) == 4);
}

TEST_CASE("p-group detection") {
    CHECK(is_p_group(*group_catalog("C4"), 2));
    CHECK(is_p_group(*group_catalog("C2xC2"), 2));
    CHECK(is_p_group(*group_catalog("C9"), 3));
    CHECK_FALSE(is_p_group(*group_catalog("C9"), 2));
    CHECK(is_p_group(*group_catalog("C1"), 2));
    CHECK(is_p_group(*group_catalog("C1"), 3));
}

TEST_CASE("exponent") {
    CHECK(exponent(*group_catalog("C2xC2")) == 2);
    CHECK(exponent(*group_catalog("C4")) == 4);
    CHECK(exponent(*group_catalog("S3")) == 6);
    CHECK(exponent(*group_catalog("C1")) == 1);
}

TEST_CASE("exponent divides the order; p-groups have p-power exponent") {
    for (const std::string& name : group_catalog_names()) {
        GroupPtr g = group_catalog(name);
        const std::uint64_t m = exponent(*g);
        CHECK(g->order() % m == 0);
        for (std::uint64_t p : {2, 3}) {
            if (!is_p_group(*g, p)) continue;
            std::uint64_t t = m;
            while (t % p == 0) t /= p;
            CHECK(t == 1);
        }
    }
}
