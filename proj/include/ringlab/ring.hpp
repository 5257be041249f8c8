#ifndef RINGLAB_RING_HPP
#define RINGLAB_RING_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/errors.hpp"

namespace ringlab {

/// Canonical element index inside a finite ring. Every ring enumerates its
/// elements as 0..order-1; the enumeration is fixed per construction and
/// documented there.
using Elem = std::uint16_t;

/// Orders above this cannot be represented by Elem-indexed tables.
inline constexpr std::size_t kMaxRepresentableOrder = 65535;

/// Default cap on constructed ring orders. Overridable per call and via the
/// RINGLAB_MAX_ORDER environment variable in the CLI.
inline constexpr std::size_t kDefaultMaxOrder = 4096;

class FiniteRing;
class FiniteGroup;
using RingPtr = std::shared_ptr<const FiniteRing>;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Marks what a computed element subset is.
enum class SetRole {
    Units,
    Jacobson,
    Nil,
    Idempotents,
    Center,
    Ideal,
    RadicalOfIdeal,
    PrimeRadical,
    Generic,
};

std::string to_string(SetRole role);

/// A subset of a ring's elements. `members` is sorted and duplicate-free;
/// `mask` is a dense membership table of size ring->order().
struct ElementSet {
    RingPtr ring;
    SetRole role = SetRole::Generic;
    std::vector<Elem> members;
    std::vector<std::uint8_t> mask;

    bool contains(Elem a) const { return mask[a] != 0; }
    std::size_t size() const { return members.size(); }
};

ElementSet make_element_set(RingPtr ring, SetRole role, std::vector<Elem> members);

/// Total map between two rings. Use is_ring_hom to check the homomorphism
/// axioms exhaustively.
struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
};

bool is_ring_hom(const RingHom& f);

/// Same carrier and identical operation tables (not isomorphism).
bool identical_tables(const RingPtr& a, const RingPtr& b);

/// A ring homomorphism from a ring to itself.
struct Endomorphism {
    RingPtr ring;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
};

/// Attached to rings produced by group_ring so that the augmentation map can
/// recover the base ring and the group.
struct GroupRingMeta {
    RingPtr base;
    GroupPtr group;
};

/// A finite unital ring with element-indexed Cayley tables.
///
/// Immutable after construction. The structural subsets (units, Jacobson
/// radical, nilpotents, idempotents, center) are computed once on first use
/// and cached; the caches are thread-safe and observationally pure.
class FiniteRing {
  public:
    FiniteRing(std::size_t order, Elem zero, Elem one, std::vector<Elem> add,
               std::vector<Elem> neg, std::vector<Elem> mul, std::string label,
               bool structural, std::function<std::string(Elem)> element_label = {},
               std::shared_ptr<const GroupRingMeta> group_meta = {});

    FiniteRing(const FiniteRing&) = delete;
    FiniteRing& operator=(const FiniteRing&) = delete;

    std::size_t order() const { return order_; }
    Elem zero() const { return zero_; }
    Elem one() const { return one_; }
    const std::string& label() const { return label_; }

    /// True when the ring was produced by one of the library constructions
    /// (correct by construction, so exhaustive validation may be skipped).
    bool structural() const { return structural_; }

    Elem add(Elem a, Elem b) const { return add_[std::size_t{a} * order_ + b]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const { return mul_[std::size_t{a} * order_ + b]; }

    /// a^k with a^0 = 1, computed by repeated squaring.
    Elem power(Elem a, std::uint64_t k) const;

    /// Additive order of 1.
    std::uint64_t characteristic() const;

    /// Construction-aware rendering of an element (matrix layout, polynomial
    /// coefficients, group-ring coefficient map). Falls back to the index.
    std::string element_label(Elem a) const;

    bool is_unit(Elem a) const { return units().mask[a] != 0; }
    bool in_jacobson(Elem a) const { return jacobson_cache().mask[a] != 0; }
    bool is_nilpotent(Elem a) const { return nil_cache().mask[a] != 0; }
    bool is_idempotent(Elem a) const { return mul(a, a) == a; }
    bool is_central(Elem a) const { return center_cache().mask[a] != 0; }

    /// Two-sided inverse of a unit. Throws NotAUnit otherwise.
    Elem inverse(Elem u) const;

    const std::vector<Elem>& unit_elements() const { return units().members; }
    const std::vector<Elem>& jacobson_elements() const { return jacobson_cache().members; }
    const std::vector<Elem>& nilpotent_elements() const { return nil_cache().members; }
    const std::vector<Elem>& idempotent_elements() const { return idem_cache().members; }
    const std::vector<Elem>& center_elements() const { return center_cache().members; }

    const GroupRingMeta* group_ring_meta() const { return group_meta_.get(); }

  private:
    struct Subset {
        std::vector<Elem> members;
        std::vector<std::uint8_t> mask;
    };
    struct UnitData : Subset {
        std::vector<Elem> inv;  // valid at unit indices only
    };

    const UnitData& units() const;
    const Subset& jacobson_cache() const;
    const Subset& nil_cache() const;
    const Subset& idem_cache() const;
    const Subset& center_cache() const;

    std::size_t order_;
    Elem zero_;
    Elem one_;
    std::vector<Elem> add_;
    std::vector<Elem> neg_;
    std::vector<Elem> mul_;
    std::string label_;
    bool structural_;
    std::function<std::string(Elem)> element_label_;
    std::shared_ptr<const GroupRingMeta> group_meta_;

    mutable std::once_flag units_once_, jac_once_, nil_once_, idem_once_, center_once_;
    mutable UnitData units_data_;
    mutable Subset jac_data_, nil_data_, idem_data_, center_data_;
};

/// U(R): u is a unit iff left multiplication by u is injective, which in a
/// finite ring yields a two-sided inverse.
ElementSet units(const RingPtr& ring);

/// J(R) by quasi-regularity: a is in the radical iff 1 - ra is a unit for
/// every r.
ElementSet jacobson(const RingPtr& ring);

/// Nil(R): elements whose power sequence reaches 0 before it cycles.
ElementSet nilpotents(const RingPtr& ring);

/// Id(R): solutions of a^2 = a.
ElementSet idempotents(const RingPtr& ring);

/// C(R): elements commuting with everything.
ElementSet center(const RingPtr& ring);

/// Lower nilradical. Finite rings are artinian, so this equals J(R); the
/// role tag records the identification.
ElementSet prime_radical(const RingPtr& ring);

Elem inverse(const RingPtr& ring, Elem u);
Elem ring_power(const RingPtr& ring, Elem a, std::uint64_t k);

/// Smallest two-sided ideal containing gens, by worklist closure.
ElementSet ideal_generated(const RingPtr& ring, const std::vector<Elem>& gens);

/// Exhaustive closure check: additive subgroup absorbing multiplication on
/// both sides. `members` must be sorted.
bool is_two_sided_ideal(const RingPtr& ring, const std::vector<Elem>& members);

/// Coset ring with minimum-index canonical representatives, plus the
/// projection homomorphism. Throws NotAnIdeal.
std::pair<RingPtr, RingHom> quotient(const RingPtr& ring, const ElementSet& ideal);

/// sqrt(I) = elements with some power in I. Throws NotAnIdeal.
ElementSet radical_of_ideal(const RingPtr& ring, const ElementSet& ideal);

/// The ring eRe with identity e, for a nonzero idempotent e.
RingPtr corner_ring(const RingPtr& ring, Elem e);

struct ValidationReport {
    enum class Status { Ok, OkByConstruction, BudgetExceeded, Violation };
    Status status = Status::Ok;
    std::string detail;

    bool ok() const { return status == Status::Ok || status == Status::OkByConstruction; }
};

/// Exhaustively checks the ring axioms when order^3 <= budget. Above the
/// budget, structural rings report OkByConstruction and raw tables report
/// BudgetExceeded.
ValidationReport validate_ring(const RingPtr& ring, std::uint64_t budget);

}  // namespace ringlab

#endif
