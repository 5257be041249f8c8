// ringlab: analyze finite rings, decide ring-class predicates, replay the
// theorem suite over catalogs, and search catalogs by predicate formulas.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ringlab/constructions.hpp"
#include "ringlab/dsl.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/predicates.hpp"
#include "ringlab/verifier.hpp"

using nlohmann::json;
using namespace ringlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPredicateFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitConstruction = 4;

constexpr std::size_t kDisplayMembers = 32;
constexpr std::size_t kElementsDisplayBudget = 64;

std::size_t resolve_max_order(std::size_t flag_value, bool flag_given) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("RINGLAB_MAX_ORDER")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        std::cerr << "warning: ignoring malformed RINGLAB_MAX_ORDER='" << env << "'\n";
    }
    return kDefaultMaxOrder;
}

json set_to_json(const ElementSet& s) {
    json j;
    j["size"] = s.size();
    json members = json::array();
    const std::size_t shown = std::min(s.size(), kDisplayMembers);
    for (std::size_t i = 0; i < shown; ++i) members.push_back(s.members[i]);
    j["members"] = std::move(members);
    if (s.size() > kDisplayMembers) j["truncated"] = true;
    return j;
}

std::string members_line(const RingPtr& r, const ElementSet& s) {
    std::ostringstream os;
    os << "[";
    const std::size_t shown = std::min(s.size(), kDisplayMembers);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) os << ", ";
        os << static_cast<int>(s.members[i]);
    }
    if (s.size() > kDisplayMembers) os << ", ...";
    os << "]";
    return os.str();
}

std::string witness_line(const RingPtr& r, const Witness& w) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [name, e] : w.parts) {
        if (!first) os << ", ";
        first = false;
        os << name << "=" << static_cast<int>(e) << " (" << r->element_label(e) << ")";
    }
    for (const auto& [name, v] : w.numbers) {
        if (!first) os << ", ";
        first = false;
        os << name << "=" << v;
    }
    if (!w.note.empty()) os << (first ? "" : "; ") << w.note;
    return os.str();
}

json witness_to_json(const RingPtr& r, const Witness& w) {
    json j = json::object();
    for (const auto& [name, e] : w.parts) {
        j[name] = {{"index", e}, {"label", r->element_label(e)}};
    }
    for (const auto& [name, v] : w.numbers) j[name] = v;
    if (!w.note.empty()) j["note"] = w.note;
    return j;
}

/// Maps thrown errors to the documented exit codes.
template <class Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const UnknownPredicate& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UnknownTheorem& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const RinglabError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
}

int cmd_analyze(const std::string& expr_text, bool as_json, bool with_witnesses,
                std::size_t max_order) {
    EvalConfig cfg;
    cfg.max_order = max_order;
    RingExpr expr = parse_ring_expr(expr_text);
    RingPtr r = eval_ring_expr(expr, cfg);

    struct NamedSet {
        const char* name;
        ElementSet set;
    };
    const std::vector<NamedSet> sets = {
        {"units", units(r)},           {"jacobson", jacobson(r)}, {"nilpotents", nilpotents(r)},
        {"idempotents", idempotents(r)}, {"center", center(r)},
    };

    std::vector<PredicateVerdict> verdicts;
    for (const std::string& id : predicate_ids()) verdicts.push_back(check_predicate(r, id));

    if (as_json) {
        json j;
        j["ring"] = format_ring_expr(expr);
        j["order"] = r->order();
        j["sets"] = json::object();
        for (const NamedSet& s : sets) j["sets"][s.name] = set_to_json(s.set);
        j["predicates"] = json::object();
        for (const PredicateVerdict& v : verdicts) j["predicates"][v.predicate] = v.holds;
        if (with_witnesses) {
            j["witnesses"] = json::object();
            for (const PredicateVerdict& v : verdicts)
                if (v.witness) j["witnesses"][v.predicate] = witness_to_json(r, *v.witness);
        }
        std::cout << j.dump(2) << "\n";
        return kExitOk;
    }

    std::cout << "ring:  " << format_ring_expr(expr) << "\n";
    std::cout << "order: " << r->order() << "\n";
    for (const NamedSet& s : sets)
        std::cout << s.name << " (" << s.set.size() << "): " << members_line(r, s.set) << "\n";
    std::cout << "predicates:\n";
    for (const PredicateVerdict& v : verdicts) {
        std::cout << "  " << v.predicate << ": " << (v.holds ? "true" : "false");
        if (with_witnesses && v.witness) std::cout << "  [" << witness_line(r, *v.witness) << "]";
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_check(const std::string& pred_id, const std::string& expr_text, std::size_t max_order) {
    if (!is_predicate_id(pred_id)) {
        std::cerr << "unknown predicate: " << pred_id << "\n";
        return kExitUsage;
    }
    EvalConfig cfg;
    cfg.max_order = max_order;
    RingPtr r = eval_ring_expr(parse_ring_expr(expr_text), cfg);
    PredicateVerdict v = check_predicate(r, pred_id);
    if (v.holds) {
        std::cout << pred_id << " holds on " << r->label() << "\n";
        return kExitOk;
    }
    std::cout << pred_id << " fails on " << r->label();
    if (v.witness) std::cout << ": " << witness_line(r, *v.witness);
    std::cout << "\n";
    return kExitPredicateFails;
}

Catalog catalog_from_path(const std::string& path, const EvalConfig& cfg) {
    if (path.empty()) return default_catalog(cfg);
    std::ifstream in(path);
    if (!in) throw RinglabError("cannot open catalog file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return load_catalog(parse_catalog_lines(buffer.str()), cfg);
}

int cmd_verify(bool all, const std::string& theorem, const std::string& catalog_path,
               bool as_json, unsigned jobs, std::size_t max_order) {
    EvalConfig cfg;
    cfg.max_order = max_order;
    Catalog catalog = catalog_from_path(catalog_path, cfg);
    std::vector<TheoremReport> reports;
    if (all || theorem.empty()) {
        reports = run_all(catalog, cfg, jobs);
    } else {
        reports.push_back(run_theorem(theorem, catalog, cfg));
    }

    bool any_fail = false;
    if (as_json) {
        std::cout << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i) {
            std::cout << to_json_string(reports[i], 2);
            if (i + 1 < reports.size()) std::cout << ",";
            std::cout << "\n";
            any_fail |= reports[i].failed();
        }
        std::cout << "]\n";
    } else {
        std::size_t passes = 0, fails = 0, skips = 0;
        for (const TheoremReport& rep : reports) {
            std::size_t p = 0, f = 0, s = 0;
            for (const InstanceResult& r : rep.results) {
                p += r.status == InstanceResult::Status::Pass;
                f += r.status == InstanceResult::Status::Fail;
                s += r.status == InstanceResult::Status::Skip;
            }
            std::cout << rep.aggregate << "  " << rep.id << "  (" << p << " pass, " << f
                      << " fail, " << s << " skip; " << rep.ms << " ms)\n";
            for (const InstanceResult& r : rep.results) {
                if (r.status == InstanceResult::Status::Fail) {
                    std::cout << "    FAIL " << r.ring;
                    if (!r.note.empty()) std::cout << ": " << r.note;
                    for (const auto& [k, v] : r.witness) std::cout << " " << k << "=" << v;
                    std::cout << "\n";
                }
            }
            passes += p;
            fails += f;
            skips += s;
            any_fail |= rep.failed();
        }
        std::cout << "total: " << reports.size() << " theorems, " << passes << " pass, " << fails
                  << " fail, " << skips << " skip\n";
    }
    for (const TheoremReport& rep : reports) any_fail |= rep.failed();
    return any_fail ? kExitPredicateFails : kExitOk;
}

// --- search formula parsing -------------------------------------------------

struct Formula {
    enum class Kind { Pred, Not, And, Or } kind;
    std::string pred;
    std::vector<Formula> children;
};

struct FormulaParser {
    std::vector<std::string> tokens;
    std::size_t pos = 0;

    explicit FormulaParser(const std::string& text) {
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
        };
        for (char c : text) {
            if (std::isspace(static_cast<unsigned char>(c))) {
                flush();
            } else if (c == '(' || c == ')') {
                flush();
                tokens.push_back(std::string(1, c));
            } else {
                cur += c;
            }
        }
        flush();
    }

    bool at(const char* t) const { return pos < tokens.size() && tokens[pos] == t; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("formula: " + msg, 1, pos + 1);
    }

    Formula parse() {
        Formula f = parse_or();
        if (pos != tokens.size()) fail("trailing tokens after formula");
        return f;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (at("or")) {
            ++pos;
            Formula rhs = parse_and();
            Formula node{Formula::Kind::Or, "", {std::move(f), std::move(rhs)}};
            f = std::move(node);
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_not();
        while (at("and")) {
            ++pos;
            Formula rhs = parse_not();
            Formula node{Formula::Kind::And, "", {std::move(f), std::move(rhs)}};
            f = std::move(node);
        }
        return f;
    }

    Formula parse_not() {
        if (at("not")) {
            ++pos;
            Formula inner = parse_not();
            return Formula{Formula::Kind::Not, "", {std::move(inner)}};
        }
        if (at("(")) {
            ++pos;
            Formula f = parse_or();
            if (!at(")")) fail("expected ')'");
            ++pos;
            return f;
        }
        if (pos >= tokens.size()) fail("expected a predicate");
        const std::string& t = tokens[pos];
        if (!is_predicate_id(t)) fail("unknown predicate '" + t + "'");
        ++pos;
        return Formula{Formula::Kind::Pred, t, {}};
    }
};

void collect_predicates(const Formula& f, std::vector<std::string>& out) {
    if (f.kind == Formula::Kind::Pred) {
        if (std::find(out.begin(), out.end(), f.pred) == out.end()) out.push_back(f.pred);
    }
    for (const Formula& c : f.children) collect_predicates(c, out);
}

bool eval_formula(const Formula& f, const std::map<std::string, bool>& env) {
    switch (f.kind) {
        case Formula::Kind::Pred: return env.at(f.pred);
        case Formula::Kind::Not: return !eval_formula(f.children[0], env);
        case Formula::Kind::And:
            return eval_formula(f.children[0], env) && eval_formula(f.children[1], env);
        case Formula::Kind::Or:
            return eval_formula(f.children[0], env) || eval_formula(f.children[1], env);
    }
    return false;
}

int cmd_search(const std::string& where, const std::string& catalog_path, bool as_json,
               std::size_t max_order) {
    Formula formula = FormulaParser(where).parse();
    std::vector<std::string> used;
    collect_predicates(formula, used);

    EvalConfig cfg;
    cfg.max_order = max_order;
    Catalog catalog = catalog_from_path(catalog_path, cfg);

    std::vector<std::string> matches;
    std::vector<std::string> skipped;
    for (const CatalogEntry& e : catalog) {
        if (!e.ring) {
            skipped.push_back(e.text);
            continue;
        }
        std::map<std::string, bool> env;
        for (const std::string& id : used) env[id] = check_predicate(e.ring, id).holds;
        if (eval_formula(formula, env)) matches.push_back(e.text);
    }
    if (as_json) {
        json j;
        j["formula"] = where;
        j["matches"] = matches;
        if (!skipped.empty()) j["skipped"] = skipped;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const std::string& m : matches) std::cout << m << "\n";
        if (!skipped.empty())
            std::cerr << "(" << skipped.size() << " entries skipped: over budget)\n";
    }
    return kExitOk;
}

int cmd_elements(const std::string& expr_text, const std::string& table, bool force,
                 std::size_t max_order) {
    EvalConfig cfg;
    cfg.max_order = max_order;
    RingPtr r = eval_ring_expr(parse_ring_expr(expr_text), cfg);
    if (r->order() > kElementsDisplayBudget && !force) {
        std::cerr << "order " << r->order() << " exceeds the display budget of "
                  << kElementsDisplayBudget << "; pass --force to print anyway\n";
        return kExitBudget;
    }
    std::cout << "ring: " << r->label() << " (order " << r->order() << ")\n";
    for (std::size_t i = 0; i < r->order(); ++i)
        std::cout << "  " << i << ": " << r->element_label(static_cast<Elem>(i)) << "\n";
    if (!table.empty()) {
        std::cout << table << " table:\n";
        for (std::size_t i = 0; i < r->order(); ++i) {
            std::cout << " ";
            for (std::size_t j = 0; j < r->order(); ++j) {
                const Elem v = table == "add" ? r->add(static_cast<Elem>(i), static_cast<Elem>(j))
                                              : r->mul(static_cast<Elem>(i), static_cast<Elem>(j));
                std::cout << " " << static_cast<int>(v);
            }
            std::cout << "\n";
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ringlab: finite-ring classes, constructions, and theorem replay"};
    app.require_subcommand(1);

    std::string expr_text, pred_id, theorem_id, catalog_path, where, table;
    bool as_json = false, with_witnesses = false, all = false, force = false;
    unsigned jobs = 1;
    std::size_t max_order = kDefaultMaxOrder;

    auto add_max_order = [&](CLI::App* cmd) {
        return cmd->add_option("--max-order", max_order,
                               "order budget (default: RINGLAB_MAX_ORDER or 4096)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "full report for one ring");
    analyze->add_option("expr", expr_text, "construction expression")->required();
    analyze->add_flag("--json", as_json, "emit JSON");
    analyze->add_flag("--witnesses", with_witnesses, "include predicate witnesses");
    CLI::Option* analyze_max = add_max_order(analyze);

    CLI::App* check = app.add_subcommand("check", "single predicate verdict");
    check->add_option("predicate", pred_id, "predicate identifier")->required();
    check->add_option("expr", expr_text, "construction expression")->required();
    CLI::Option* check_max = add_max_order(check);

    CLI::App* verify = app.add_subcommand("verify", "replay theorem checks over a catalog");
    verify->add_flag("--all", all, "run every registered theorem");
    verify->add_option("--theorem", theorem_id, "run one theorem by id");
    verify->add_option("--catalog", catalog_path, "catalog file (default: built-in)");
    verify->add_flag("--json", as_json, "emit JSON reports");
    verify->add_option("--jobs", jobs, "worker threads (output is order-stable)");
    CLI::Option* verify_max = add_max_order(verify);

    CLI::App* search = app.add_subcommand("search", "catalog entries matching a formula");
    search->add_option("--where", where, "boolean formula over predicate ids")->required();
    search->add_option("--catalog", catalog_path, "catalog file (default: built-in)");
    search->add_flag("--json", as_json, "emit JSON");
    CLI::Option* search_max = add_max_order(search);

    CLI::App* elements = app.add_subcommand("elements", "canonical enumeration and Cayley tables");
    elements->add_option("expr", expr_text, "construction expression")->required();
    elements->add_option("--table", table, "print a table: add or mul")
        ->check(CLI::IsMember({"add", "mul"}));
    elements->add_flag("--force", force, "print even above the display budget");
    CLI::Option* elements_max = add_max_order(elements);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    if (analyze->parsed())
        return guarded([&] {
            return cmd_analyze(expr_text, as_json, with_witnesses,
                               resolve_max_order(max_order, analyze_max->count() > 0));
        });
    if (check->parsed())
        return guarded([&] {
            return cmd_check(pred_id, expr_text,
                             resolve_max_order(max_order, check_max->count() > 0));
        });
    if (verify->parsed())
        return guarded([&] {
            return cmd_verify(all, theorem_id, catalog_path, as_json, jobs,
                              resolve_max_order(max_order, verify_max->count() > 0));
        });
    if (search->parsed())
        return guarded([&] {
            return cmd_search(where, catalog_path, as_json,
                              resolve_max_order(max_order, search_max->count() > 0));
        });
    if (elements->parsed())
        return guarded([&] {
            return cmd_elements(expr_text, table, force,
                                resolve_max_order(max_order, elements_max->count() > 0));
        });
    return kExitUsage;
}
