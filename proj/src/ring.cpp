#include "ringlab/ring.hpp"

#include <algorithm>
#include <sstream>

namespace ringlab {

std::string to_string(SetRole role) {
    switch (role) {
        case SetRole::Units: return "UNITS";
        case SetRole::Jacobson: return "JACOBSON";
        case SetRole::Nil: return "NIL";
        case SetRole::Idempotents: return "IDEMPOTENTS";
        case SetRole::Center: return "CENTER";
        case SetRole::Ideal: return "IDEAL";
        case SetRole::RadicalOfIdeal: return "RADICAL_OF_IDEAL";
        case SetRole::PrimeRadical: return "PRIME_RADICAL";
        case SetRole::Generic: return "GENERIC";
    }
    return "GENERIC";
}

ElementSet make_element_set(RingPtr ring, SetRole role, std::vector<Elem> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::uint8_t> mask(ring->order(), 0);
    for (Elem m : members) mask[m] = 1;
    return ElementSet{std::move(ring), role, std::move(members), std::move(mask)};
}

bool is_ring_hom(const RingHom& f) {
    const FiniteRing& s = *f.source;
    const FiniteRing& t = *f.target;
    if (f.map.size() != s.order()) return false;
    for (Elem a : f.map)
        if (a >= t.order()) return false;
    if (f.map[s.zero()] != t.zero() || f.map[s.one()] != t.one()) return false;
    const std::size_t n = s.order();
    for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
            if (f.map[s.add(a, b)] != t.add(f.map[a], f.map[b])) return false;
            if (f.map[s.mul(a, b)] != t.mul(f.map[a], f.map[b])) return false;
        }
    }
    return true;
}

bool identical_tables(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (a->order() != b->order() || a->zero() != b->zero() || a->one() != b->one()) return false;
    const std::size_t n = a->order();
    for (Elem x = 0; x < n; ++x) {
        if (a->neg(x) != b->neg(x)) return false;
        for (Elem y = 0; y < n; ++y)
            if (a->add(x, y) != b->add(x, y) || a->mul(x, y) != b->mul(x, y)) return false;
    }
    return true;
}

FiniteRing::FiniteRing(std::size_t order, Elem zero, Elem one, std::vector<Elem> add,
                       std::vector<Elem> neg, std::vector<Elem> mul, std::string label,
                       bool structural, std::function<std::string(Elem)> element_label,
                       std::shared_ptr<const GroupRingMeta> group_meta)
    : order_(order),
      zero_(zero),
      one_(one),
      add_(std::move(add)),
      neg_(std::move(neg)),
      mul_(std::move(mul)),
      label_(std::move(label)),
      structural_(structural),
      element_label_(std::move(element_label)),
      group_meta_(std::move(group_meta)) {
    if (order_ == 0 || order_ > kMaxRepresentableOrder)
        throw RinglabError("ring order out of representable range: " + std::to_string(order_));
    if (zero_ >= order_ || one_ >= order_)
        throw RinglabError("zero/one index out of range in ring " + label_);
    if (order_ > 1 && zero_ == one_)
        throw RinglabError("identity equals zero in ring " + label_);
    if (add_.size() != order_ * order_ || mul_.size() != order_ * order_ || neg_.size() != order_)
        throw RinglabError("table size mismatch in ring " + label_);
    for (Elem v : add_)
        if (v >= order_) throw RinglabError("add table entry out of range in ring " + label_);
    for (Elem v : mul_)
        if (v >= order_) throw RinglabError("mul table entry out of range in ring " + label_);
    for (Elem v : neg_)
        if (v >= order_) throw RinglabError("neg table entry out of range in ring " + label_);
}

Elem FiniteRing::power(Elem a, std::uint64_t k) const {
    Elem result = one_;
    Elem base = a;
    while (k > 0) {
        if (k & 1) result = mul(result, base);
        base = mul(base, base);
        k >>= 1;
    }
    return result;
}

std::uint64_t FiniteRing::characteristic() const {
    std::uint64_t k = 1;
    Elem x = one_;
    while (x != zero_) {
        x = add(x, one_);
        ++k;
    }
    return k;
}

std::string FiniteRing::element_label(Elem a) const {
    if (element_label_) return element_label_(a);
    return std::to_string(a);
}

Elem FiniteRing::inverse(Elem u) const {
    const UnitData& data = units();
    if (data.mask[u] == 0)
        throw NotAUnit("element " + std::to_string(u) + " is not a unit of " + label_);
    return data.inv[u];
}

const FiniteRing::UnitData& FiniteRing::units() const {
    std::call_once(units_once_, [this] {
        const std::size_t n = order_;
        UnitData data;
        data.mask.assign(n, 0);
        data.inv.assign(n, 0);
        std::vector<std::uint8_t> seen(n);
        for (std::size_t u = 0; u < n; ++u) {
            std::fill(seen.begin(), seen.end(), 0);
            const Elem* row = mul_.data() + u * n;
            bool injective = true;
            Elem right_inv = 0;
            for (std::size_t x = 0; x < n; ++x) {
                Elem p = row[x];
                if (seen[p]) {
                    injective = false;
                    break;
                }
                seen[p] = 1;
                if (p == one_) right_inv = static_cast<Elem>(x);
            }
            // In a finite ring the right inverse found this way is two-sided.
            if (injective && mul(right_inv, static_cast<Elem>(u)) == one_) {
                data.mask[u] = 1;
                data.inv[u] = right_inv;
                data.members.push_back(static_cast<Elem>(u));
            }
        }
        units_data_ = std::move(data);
    });
    return units_data_;
}

const FiniteRing::Subset& FiniteRing::jacobson_cache() const {
    std::call_once(jac_once_, [this] {
        const std::size_t n = order_;
        const UnitData& u = units();
        Subset data;
        data.mask.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            bool quasi_regular = true;
            for (std::size_t r = 0; r < n; ++r) {
                Elem ra = mul(static_cast<Elem>(r), static_cast<Elem>(a));
                if (u.mask[sub(one_, ra)] == 0) {
                    quasi_regular = false;
                    break;
                }
            }
            if (quasi_regular) {
                data.mask[a] = 1;
                data.members.push_back(static_cast<Elem>(a));
            }
        }
        jac_data_ = std::move(data);
    });
    return jac_data_;
}

const FiniteRing::Subset& FiniteRing::nil_cache() const {
    std::call_once(nil_once_, [this] {
        const std::size_t n = order_;
        Subset data;
        data.mask.assign(n, 0);
        std::vector<std::uint32_t> visited(n, 0);
        std::uint32_t stamp = 0;
        for (std::size_t a = 0; a < n; ++a) {
            ++stamp;
            Elem x = static_cast<Elem>(a);
            bool nil = false;
            while (visited[x] != stamp) {
                visited[x] = stamp;
                if (x == zero_) {
                    nil = true;
                    break;
                }
                x = mul(x, static_cast<Elem>(a));
            }
            if (nil) {
                data.mask[a] = 1;
                data.members.push_back(static_cast<Elem>(a));
            }
        }
        nil_data_ = std::move(data);
    });
    return nil_data_;
}

const FiniteRing::Subset& FiniteRing::idem_cache() const {
    std::call_once(idem_once_, [this] {
        Subset data;
        data.mask.assign(order_, 0);
        for (std::size_t a = 0; a < order_; ++a) {
            if (mul(static_cast<Elem>(a), static_cast<Elem>(a)) == a) {
                data.mask[a] = 1;
                data.members.push_back(static_cast<Elem>(a));
            }
        }
        idem_data_ = std::move(data);
    });
    return idem_data_;
}

const FiniteRing::Subset& FiniteRing::center_cache() const {
    std::call_once(center_once_, [this] {
        const std::size_t n = order_;
        Subset data;
        data.mask.assign(n, 0);
        for (std::size_t a = 0; a < n; ++a) {
            bool central = true;
            for (std::size_t r = 0; r < n; ++r) {
                if (mul(static_cast<Elem>(a), static_cast<Elem>(r)) !=
                    mul(static_cast<Elem>(r), static_cast<Elem>(a))) {
                    central = false;
                    break;
                }
            }
            if (central) {
                data.mask[a] = 1;
                data.members.push_back(static_cast<Elem>(a));
            }
        }
        center_data_ = std::move(data);
    });
    return center_data_;
}

ElementSet units(const RingPtr& ring) {
    return make_element_set(ring, SetRole::Units, ring->unit_elements());
}

ElementSet jacobson(const RingPtr& ring) {
    return make_element_set(ring, SetRole::Jacobson, ring->jacobson_elements());
}

ElementSet nilpotents(const RingPtr& ring) {
    return make_element_set(ring, SetRole::Nil, ring->nilpotent_elements());
}

ElementSet idempotents(const RingPtr& ring) {
    return make_element_set(ring, SetRole::Idempotents, ring->idempotent_elements());
}

ElementSet center(const RingPtr& ring) {
    return make_element_set(ring, SetRole::Center, ring->center_elements());
}

ElementSet prime_radical(const RingPtr& ring) {
    return make_element_set(ring, SetRole::PrimeRadical, ring->jacobson_elements());
}

Elem inverse(const RingPtr& ring, Elem u) { return ring->inverse(u); }

Elem ring_power(const RingPtr& ring, Elem a, std::uint64_t k) { return ring->power(a, k); }

ElementSet ideal_generated(const RingPtr& ring, const std::vector<Elem>& gens) {
    const FiniteRing& r = *ring;
    const std::size_t n = r.order();
    std::vector<std::uint8_t> in(n, 0);
    std::vector<Elem> members;
    std::vector<Elem> queue;
    auto push = [&](Elem x) {
        if (!in[x]) {
            in[x] = 1;
            queue.push_back(x);
        }
    };
    push(r.zero());
    for (Elem g : gens) push(g);
    // Additive closure: each new element is combined with everything accepted
    // before it, which covers all pairs.
    while (!queue.empty()) {
        Elem x = queue.back();
        queue.pop_back();
        push(r.neg(x));
        for (Elem m : members) push(r.add(x, m));
        for (std::size_t s = 0; s < n; ++s) {
            push(r.mul(static_cast<Elem>(s), x));
            push(r.mul(x, static_cast<Elem>(s)));
        }
        members.push_back(x);
    }
    return make_element_set(ring, SetRole::Ideal, std::move(members));
}

bool is_two_sided_ideal(const RingPtr& ring, const std::vector<Elem>& members) {
    const FiniteRing& r = *ring;
    std::vector<std::uint8_t> in(r.order(), 0);
    for (Elem m : members) {
        if (m >= r.order()) return false;
        in[m] = 1;
    }
    if (!in[r.zero()]) return false;
    for (Elem a : members) {
        if (!in[r.neg(a)]) return false;
        for (Elem b : members)
            if (!in[r.add(a, b)]) return false;
        for (std::size_t s = 0; s < r.order(); ++s) {
            if (!in[r.mul(static_cast<Elem>(s), a)]) return false;
            if (!in[r.mul(a, static_cast<Elem>(s))]) return false;
        }
    }
    return true;
}

std::pair<RingPtr, RingHom> quotient(const RingPtr& ring, const ElementSet& ideal) {
    const FiniteRing& r = *ring;
    if (!is_two_sided_ideal(ring, ideal.members))
        throw NotAnIdeal("quotient: the given set is not a two-sided ideal of " + r.label());
    const std::size_t n = r.order();
    std::vector<Elem> rep(n);
    for (std::size_t x = 0; x < n; ++x) {
        Elem best = static_cast<Elem>(x);
        for (Elem i : ideal.members) best = std::min(best, r.add(static_cast<Elem>(x), i));
        rep[x] = best;
    }
    std::vector<Elem> reps;
    for (std::size_t x = 0; x < n; ++x)
        if (rep[x] == x) reps.push_back(static_cast<Elem>(x));
    std::vector<Elem> index_of(n, 0);
    for (std::size_t i = 0; i < reps.size(); ++i) index_of[reps[i]] = static_cast<Elem>(i);

    const std::size_t q = reps.size();
    std::vector<Elem> qadd(q * q), qneg(q), qmul(q * q);
    for (std::size_t i = 0; i < q; ++i) {
        qneg[i] = index_of[rep[r.neg(reps[i])]];
        for (std::size_t j = 0; j < q; ++j) {
            qadd[i * q + j] = index_of[rep[r.add(reps[i], reps[j])]];
            qmul[i * q + j] = index_of[rep[r.mul(reps[i], reps[j])]];
        }
    }
    RingPtr base = ring;
    auto label_fn = [base, reps](Elem a) {
        return base->element_label(reps[a]) + "+I";
    };
    auto qring = std::make_shared<const FiniteRing>(
        q, index_of[rep[r.zero()]], index_of[rep[r.one()]], std::move(qadd), std::move(qneg),
        std::move(qmul), r.label() + "/I(" + std::to_string(ideal.size()) + ")", true, label_fn);
    std::vector<Elem> proj(n);
    for (std::size_t x = 0; x < n; ++x) proj[x] = index_of[rep[x]];
    return {qring, RingHom{ring, qring, std::move(proj)}};
}

ElementSet radical_of_ideal(const RingPtr& ring, const ElementSet& ideal) {
    const FiniteRing& r = *ring;
    if (!is_two_sided_ideal(ring, ideal.members))
        throw NotAnIdeal("radical_of_ideal: the given set is not an ideal of " + r.label());
    const std::size_t n = r.order();
    std::vector<Elem> members;
    std::vector<std::uint32_t> visited(n, 0);
    std::uint32_t stamp = 0;
    for (std::size_t a = 0; a < n; ++a) {
        ++stamp;
        Elem x = static_cast<Elem>(a);
        bool hit = false;
        while (visited[x] != stamp) {
            visited[x] = stamp;
            if (ideal.mask[x]) {
                hit = true;
                break;
            }
            x = r.mul(x, static_cast<Elem>(a));
        }
        if (hit) members.push_back(static_cast<Elem>(a));
    }
    return make_element_set(ring, SetRole::RadicalOfIdeal, std::move(members));
}

RingPtr corner_ring(const RingPtr& ring, Elem e) {
    const FiniteRing& r = *ring;
    if (r.mul(e, e) != e || e == r.zero())
        throw NotIdempotent("corner_ring: element " + std::to_string(e) +
                            " is not a nonzero idempotent of " + r.label());
    std::vector<Elem> elems;
    std::vector<std::uint8_t> in(r.order(), 0);
    for (std::size_t x = 0; x < r.order(); ++x) {
        Elem exe = r.mul(r.mul(e, static_cast<Elem>(x)), e);
        if (!in[exe]) {
            in[exe] = 1;
            elems.push_back(exe);
        }
    }
    std::sort(elems.begin(), elems.end());
    std::vector<Elem> index_of(r.order(), 0);
    for (std::size_t i = 0; i < elems.size(); ++i) index_of[elems[i]] = static_cast<Elem>(i);
    const std::size_t m = elems.size();
    std::vector<Elem> cadd(m * m), cneg(m), cmul(m * m);
    for (std::size_t i = 0; i < m; ++i) {
        cneg[i] = index_of[r.neg(elems[i])];
        for (std::size_t j = 0; j < m; ++j) {
            cadd[i * m + j] = index_of[r.add(elems[i], elems[j])];
            cmul[i * m + j] = index_of[r.mul(elems[i], elems[j])];
        }
    }
    RingPtr base = ring;
    std::vector<Elem> elems_copy = elems;
    auto label_fn = [base, elems_copy](Elem a) { return base->element_label(elems_copy[a]); };
    return std::make_shared<const FiniteRing>(
        m, index_of[r.zero()], index_of[e], std::move(cadd), std::move(cneg), std::move(cmul),
        "corner(" + r.label() + ", e=" + std::to_string(e) + ")", true, label_fn);
}

namespace {

std::string triple(Elem a, Elem b, Elem c) {
    std::ostringstream os;
    os << "(" << a << ", " << b << ", " << c << ")";
    return os.str();
}

}  // namespace

ValidationReport validate_ring(const RingPtr& ring, std::uint64_t budget) {
    const FiniteRing& r = *ring;
    const std::size_t n = r.order();
    const std::uint64_t cost = std::uint64_t{n} * n * n;
    if (cost > budget) {
        if (r.structural())
            return {ValidationReport::Status::OkByConstruction,
                    "structural construction, axiom scan skipped (order^3 over budget)"};
        return {ValidationReport::Status::BudgetExceeded,
                "raw tables and order^3 = " + std::to_string(cost) + " exceeds budget " +
                    std::to_string(budget)};
    }
    if (n > 1 && r.zero() == r.one())
        return {ValidationReport::Status::Violation, "one equals zero"};
    for (Elem a = 0; a < n; ++a) {
        if (r.add(a, r.zero()) != a)
            return {ValidationReport::Status::Violation,
                    "additive identity fails at " + std::to_string(a)};
        if (r.add(a, r.neg(a)) != r.zero())
            return {ValidationReport::Status::Violation,
                    "additive inverse fails at " + std::to_string(a)};
        if (r.mul(a, r.one()) != a || r.mul(r.one(), a) != a)
            return {ValidationReport::Status::Violation,
                    "multiplicative identity fails at " + std::to_string(a)};
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            if (r.add(a, b) != r.add(b, a))
                return {ValidationReport::Status::Violation,
                        "addition not commutative at (" + std::to_string(a) + ", " +
                            std::to_string(b) + ")"};
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c) {
                if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
                    return {ValidationReport::Status::Violation,
                            "addition not associative at " + triple(a, b, c)};
                if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
                    return {ValidationReport::Status::Violation,
                            "multiplication not associative at " + triple(a, b, c)};
                if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
                    return {ValidationReport::Status::Violation,
                            "left distributivity fails at " + triple(a, b, c)};
                if (r.mul(r.add(a, b), c) != r.add(r.mul(a, c), r.mul(b, c)))
                    return {ValidationReport::Status::Violation,
                            "right distributivity fails at " + triple(a, b, c)};
            }
    return {ValidationReport::Status::Ok, ""};
}

}  // namespace ringlab
