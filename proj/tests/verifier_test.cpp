#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ringlab/errors.hpp"
#include "ringlab/verifier.hpp"

using namespace ringlab;

namespace {

Catalog small_catalog() {
    static const std::vector<std::string> lines = {
        "Z2",           "Z3",
        "Z4",           "Z6",
        "Z9",           "GF(4)",
        "M(2, Z2)",     "T(2, Z2)",
        "PolyMod(Z2, 2)", "Ks(Z4, s=2)",
        "GroupRing(Z2, C2)", "GroupRing(Z2, C3)",
        "GroupRing(Z3, C2)"};
    return load_catalog(lines, EvalConfig{});
}

}  // namespace

TEST_CASE("default catalog evaluates fully under the default budget") {
    Catalog cat = default_catalog();
    for (const CatalogEntry& e : cat) {
        CAPTURE(e.text);
        CHECK(e.ring != nullptr);
        CHECK(e.error.empty());
    }
    CHECK(cat.size() >= 40);
}

TEST_CASE("run_theorem on named checks") {
    Catalog cat = small_catalog();

    TheoremReport fields = run_theorem("prop-3.3", cat);
    CHECK(fields.aggregate == "pass");
    CHECK(fields.results.size() >= 10);

    TheoremReport matrices = run_theorem("prop-3.8", cat);
    CHECK(matrices.aggregate == "pass");
    REQUIRE(matrices.results.size() == 2);
    CHECK_FALSE(matrices.results[0].witness.empty());

    TheoremReport example = run_theorem("example-2.3", cat);
    CHECK(example.aggregate == "pass");

    CHECK_THROWS_AS(run_theorem("no-such-id", cat), UnknownTheorem);
}

TEST_CASE("group ring theorems pass on their instances") {
    Catalog cat = small_catalog();
    for (const char* id : {"thm-T2", "thm-T2-3group", "thm-exp2", "thm-2-group-ring",
                           "thm-3-or-exp2", "lemma-ext-le", "lemma-RG-to-R", "lemma-torsion"}) {
        TheoremReport rep = run_theorem(id, cat);
        CAPTURE(id);
        CHECK(rep.aggregate == "pass");
    }
}

TEST_CASE("implication lattice over the small catalog") {
    TheoremReport rep = implication_lattice(small_catalog());
    CHECK(rep.aggregate == "pass");
    CHECK(rep.id == "implication-lattice");
}

TEST_CASE("skips carry reasons and over-budget instances degrade to skip") {
    Catalog cat = small_catalog();
    TheoremReport rep = run_theorem("cor-4.9", cat);
    CHECK(rep.aggregate == "pass");
    bool saw_skip = false;
    for (const InstanceResult& r : rep.results) {
        if (r.status == InstanceResult::Status::Skip) {
            saw_skip = true;
            CHECK_FALSE(r.note.empty());
        }
    }
    CHECK(saw_skip);  // Ks over Z9 is out of budget at 4096
}

TEST_CASE("constrained budgets turn whole entries into skips") {
    EvalConfig tight;
    tight.max_order = 10;
    Catalog cat = load_catalog({"Z2", "Z3", "M(2, Z2)"}, tight);
    CHECK(cat[2].ring == nullptr);
    CHECK_FALSE(cat[2].error.empty());
    TheoremReport rep = run_theorem("lemma-5.1", cat, tight);
    CHECK(rep.aggregate == "pass");
    bool skip_for_budget = false;
    for (const InstanceResult& r : rep.results)
        if (r.status == InstanceResult::Status::Skip && r.ring == "M(2, Z2)")
            skip_for_budget = !r.note.empty();
    CHECK(skip_for_budget);
}

TEST_CASE("run_all is deterministic and job-count independent") {
    Catalog cat = small_catalog();
    std::vector<TheoremReport> seq = run_all(cat, EvalConfig{}, 1);
    std::vector<TheoremReport> par = run_all(cat, EvalConfig{}, 4);
    REQUIRE(seq.size() == par.size());
    CHECK(seq.size() == theorem_registry().size());
    for (std::size_t i = 0; i < seq.size(); ++i) {
        CHECK(seq[i].id == par[i].id);
        CHECK(seq[i].aggregate == par[i].aggregate);
        REQUIRE(seq[i].results.size() == par[i].results.size());
        for (std::size_t j = 0; j < seq[i].results.size(); ++j) {
            CHECK(seq[i].results[j].ring == par[i].results[j].ring);
            CHECK(seq[i].results[j].status == par[i].results[j].status);
            CHECK(seq[i].results[j].witness == par[i].results[j].witness);
            CHECK(seq[i].results[j].note == par[i].results[j].note);
        }
    }
    for (const TheoremReport& rep : seq) {
        CAPTURE(rep.id);
        CHECK(rep.aggregate != "fail");
        CHECK_FALSE(rep.results.empty());
        for (const InstanceResult& r : rep.results)
            if (r.status == InstanceResult::Status::Skip) CHECK_FALSE(r.note.empty());
    }
}

TEST_CASE("report JSON matches the documented shape") {
    Catalog cat = small_catalog();
    TheoremReport rep = run_theorem("prop-3.3", cat);
    nlohmann::json j = nlohmann::json::parse(to_json_string(rep));
    CHECK(j["theorem"] == "prop-3.3");
    CHECK(j.contains("anchor"));
    CHECK(j["results"].is_array());
    CHECK(j["aggregate"] == "pass");
    CHECK(j.contains("ms"));
    for (const auto& row : j["results"]) {
        CHECK(row.contains("ring"));
        CHECK(row.contains("status"));
    }
}

TEST_CASE("registry ids are unique and stable") {
    std::set<std::string> ids(theorem_ids().begin(), theorem_ids().end());
    CHECK(ids.size() == theorem_ids().size());
    for (const char* required :
         {"prop-3.1", "prop-3.2", "prop-3.3", "prop-3.5-i", "prop-3.5-ii", "prop-3.5-iii",
          "prop-3.5-iv", "prop-3.8", "prop-3.28", "cor-3.26-ii", "lemma-3.12",
          "lemma-sum-two-unit", "thm-semipotent", "thm-3.13", "cor-3.14", "cor-3.16", "cor-3.17",
          "cor-3.18", "lemma-nil-trivext", "prop-corfive-i", "prop-corfive-ii",
          "prop-corfive-iii", "prop-corfive-iv", "prop-corfive-v", "cor-DT", "cor-Tskew",
          "cor-polyquot", "prop-4.7", "cor-4.9", "cor-4.10", "cor-4.11", "lemma-5.1",
          "lemma-ext-le", "lemma-RG-to-R", "thm-2-group-ring", "thm-3-or-exp2", "thm-T2",
          "thm-T2-3group", "thm-exp2", "implication-lattice"})
        CHECK(ids.count(required) == 1);
}
