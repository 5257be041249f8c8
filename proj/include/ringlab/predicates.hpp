#ifndef RINGLAB_PREDICATES_HPP
#define RINGLAB_PREDICATES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// Structured evidence for a verdict: named ring elements (a decomposition on
/// success, a violating element on failure) plus optional named exponents.
struct Witness {
    std::vector<std::pair<std::string, Elem>> parts;
    std::vector<std::pair<std::string, std::uint64_t>> numbers;
    std::string note;

    std::optional<Elem> part(std::string_view name) const;
};

struct PredicateVerdict {
    std::string predicate;
    bool holds = false;
    std::optional<Witness> witness;
};

/// The stable predicate identifiers, in report order. Part of the CLI/JSON
/// contract.
const std::vector<std::string>& predicate_ids();

bool is_predicate_id(std::string_view id);

/// Dispatch by identifier. Throws UnknownPredicate.
PredicateVerdict check_predicate(const RingPtr& r, std::string_view id);

/// All predicates in registry order.
std::vector<std::pair<std::string, bool>> predicate_table(const RingPtr& r);

bool predicate_tables_equal(const RingPtr& a, const RingPtr& b);

/// Re-evaluates the defining identity (or violation) recorded in a verdict's
/// witness inside the ring. Verdicts without a witness revalidate trivially.
bool revalidate_witness(const RingPtr& r, const PredicateVerdict& v);

// Unit-coset classes: U(R) compared against 1+J, 1+Nil, 1+Nil+J, and the
// corresponding conditions on squares of units.
PredicateVerdict is_uj(const RingPtr& r);
PredicateVerdict is_uu(const RingPtr& r);
PredicateVerdict is_unj(const RingPtr& r);
PredicateVerdict is_2uj(const RingPtr& r);
PredicateVerdict is_2uu(const RingPtr& r);
PredicateVerdict is_2unj(const RingPtr& r);

PredicateVerdict is_boolean(const RingPtr& r);
PredicateVerdict is_tripotent(const RingPtr& r);
PredicateVerdict is_potent(const RingPtr& r);
PredicateVerdict is_reduced(const RingPtr& r);
PredicateVerdict is_abelian_ring(const RingPtr& r);

PredicateVerdict is_regular(const RingPtr& r);
PredicateVerdict is_strongly_regular(const RingPtr& r);
PredicateVerdict is_unit_regular(const RingPtr& r);
PredicateVerdict is_pi_regular(const RingPtr& r);
PredicateVerdict is_strongly_pi_regular(const RingPtr& r);

PredicateVerdict is_clean(const RingPtr& r);
PredicateVerdict is_j_clean(const RingPtr& r);
PredicateVerdict is_semi_tripotent(const RingPtr& r);
PredicateVerdict is_strongly_2_nil_clean(const RingPtr& r);

PredicateVerdict is_exchange(const RingPtr& r);
PredicateVerdict is_semiregular(const RingPtr& r);
PredicateVerdict is_semipotent(const RingPtr& r);

PredicateVerdict is_dedekind_finite(const RingPtr& r);
PredicateVerdict is_local(const RingPtr& r);
PredicateVerdict is_semisimple(const RingPtr& r);
PredicateVerdict is_2_primal(const RingPtr& r);

/// Lex-least decomposition u^2 = 1 + q + j with q nilpotent and j in J,
/// ordered by q then j. Returns nullopt when no decomposition exists.
/// Throws NotAUnit.
std::optional<std::pair<Elem, Elem>> unit_square_decompose(const RingPtr& r, Elem u);

/// Every idempotent coset of R/I has an idempotent representative in R.
PredicateVerdict idempotents_lift_mod(const RingPtr& r, const ElementSet& ideal);

}  // namespace ringlab

#endif
