#ifndef RINGLAB_DSL_HPP
#define RINGLAB_DSL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Construction language:
///
///   expr := "Z" INT
///         | "GF" "(" INT ["," INT] ")"
///         | NAME "(" args ")"
///   NAME ∈ {Prod, M, T, Tskew, PolyMod, SkewPolyMod, TrivExt, DT, Ks, FM,
///           MoritaTriv, GroupRing}
///   args: comma-separated expr | INT | GROUPNAME | "alpha="("id"|"frobenius")
///         | "s=" INT
///
/// Whitespace insensitive. GF(q) with q a prime power is normalized to
/// GF(p, k). Element literals ("s=") are canonical indices of the child ring.
enum class ExprKind {
    ZMod,
    GF,
    Prod,
    M,
    T,
    Tskew,
    PolyMod,
    SkewPolyMod,
    TrivExt,
    DT,
    Ks,
    FM,
    MoritaTriv,
    GroupRing,
};

std::string to_string(ExprKind kind);

struct RingExpr {
    ExprKind kind = ExprKind::ZMod;
    std::vector<RingExpr> children;
    std::vector<std::int64_t> ints;  // kind-specific integer arguments
    std::string group_name;          // GroupRing only
    std::string alpha;               // Tskew/SkewPolyMod: "id" or "frobenius"
    std::optional<std::int64_t> scalar;  // Ks/FM: the "s=" element literal

    friend bool operator==(const RingExpr&, const RingExpr&) = default;
};

/// Recursive-descent parse. Throws ParseError (with 1-based line/column and
/// the expected-token set), ArityError, or RangeError.
RingExpr parse_ring_expr(std::string_view text);

/// Canonical text. parse(format(e)) == e structurally, and format(parse(s))
/// is idempotent on text.
std::string format_ring_expr(const RingExpr& expr);

struct EvalConfig {
    std::size_t max_order = kDefaultMaxOrder;
    bool force_validate = false;
    std::uint64_t validate_budget = std::uint64_t{1} << 24;
};

/// Bottom-up construction through the constructions module. Throws
/// BudgetExceeded, NotCentral, UnknownGroup, NotPrime, or RangeError for an
/// element literal outside the child ring.
RingPtr eval_ring_expr(const RingExpr& expr, const EvalConfig& config = {});

/// Catalog files: one expression per line, '#' starts a comment, blank lines
/// ignored. Returns the expression texts in file order.
std::vector<std::string> parse_catalog_lines(std::string_view text);

}  // namespace ringlab

#endif
