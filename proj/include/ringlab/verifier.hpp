#ifndef RINGLAB_VERIFIER_HPP
#define RINGLAB_VERIFIER_HPP

#include <functional>
#include <string>
#include <vector>

#include "ringlab/dsl.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// One catalog line, parsed and (when the budget allows) evaluated. `ring`
/// is null when evaluation failed; `error` then carries the reason.
struct CatalogEntry {
    std::string text;
    RingExpr expr;
    RingPtr ring;
    std::string error;
};

using Catalog = std::vector<CatalogEntry>;

/// The shipped catalog source, one expression per line with comments.
std::string default_catalog_text();

/// Parses and evaluates catalog lines. Parse errors propagate; evaluation
/// errors (budget overruns) are recorded per entry.
Catalog load_catalog(const std::vector<std::string>& lines, const EvalConfig& config);
Catalog default_catalog(const EvalConfig& config = {});

struct InstanceResult {
    enum class Status { Pass, Fail, Skip };
    std::string ring;
    Status status = Status::Pass;
    std::vector<std::pair<std::string, std::string>> witness;  // name -> "index (label)"
    std::string note;
};

struct TheoremReport {
    std::string id;
    std::string anchor;
    std::vector<InstanceResult> results;
    std::string aggregate;  // "pass" | "fail" | "skip"
    double ms = 0.0;

    bool failed() const { return aggregate == "fail"; }
};

/// One replayable claim: a stable id, the quoted statement fragment it
/// anchors to, and a procedure producing per-instance outcomes.
struct TheoremCheck {
    std::string id;
    std::string anchor;
    std::function<std::vector<InstanceResult>(const Catalog&, const EvalConfig&)> run;
};

const std::vector<TheoremCheck>& theorem_registry();
const std::vector<std::string>& theorem_ids();

/// Throws UnknownTheorem for ids outside the registry.
TheoremReport run_theorem(const std::string& id, const Catalog& catalog,
                          const EvalConfig& config = {});

/// Runs every registered check. `jobs` > 1 distributes checks across threads;
/// the report order is the registry order regardless.
std::vector<TheoremReport> run_all(const Catalog& catalog, const EvalConfig& config = {},
                                   unsigned jobs = 1);

/// Every edge of the class-implication diagram, checked as a material
/// implication of predicate verdicts on each catalog entry.
TheoremReport implication_lattice(const Catalog& catalog, const EvalConfig& config = {});

std::string to_json_string(const TheoremReport& report, int indent = -1);

}  // namespace ringlab

#endif
