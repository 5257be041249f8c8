#include "ringlab/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "ringlab/errors.hpp"

namespace ringlab {

FiniteGroup::FiniteGroup(std::size_t order, Elem identity, std::vector<Elem> op,
                         std::string label, std::vector<std::string> element_names)
    : order_(order),
      identity_(identity),
      op_(std::move(op)),
      label_(std::move(label)),
      names_(std::move(element_names)) {
    if (order_ == 0 || op_.size() != order_ * order_ || identity_ >= order_)
        throw RinglabError("malformed group table for " + label_);
    if (names_.empty()) {
        names_.reserve(order_);
        for (std::size_t i = 0; i < order_; ++i) names_.push_back("g" + std::to_string(i));
    }
    inv_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a) {
        bool found = false;
        for (std::size_t b = 0; b < order_; ++b) {
            if (this->op(static_cast<Elem>(a), static_cast<Elem>(b)) == identity_ &&
                this->op(static_cast<Elem>(b), static_cast<Elem>(a)) == identity_) {
                inv_[a] = static_cast<Elem>(b);
                found = true;
                break;
            }
        }
        if (!found) throw RinglabError("group " + label_ + " has no inverse for element " +
                                       std::to_string(a));
    }
}

void validate_group(const FiniteGroup& g) {
    const std::size_t n = g.order();
    for (Elem a = 0; a < n; ++a) {
        if (g.op(g.identity(), a) != a || g.op(a, g.identity()) != a)
            throw RinglabError("group identity fails at " + std::to_string(a));
        if (g.op(a, g.inv(a)) != g.identity() || g.op(g.inv(a), a) != g.identity())
            throw RinglabError("group inverse fails at " + std::to_string(a));
    }
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b)
            for (Elem c = 0; c < n; ++c)
                if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                    throw RinglabError("group associativity fails at (" + std::to_string(a) +
                                       ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
}

std::uint64_t element_order(const FiniteGroup& g, Elem a) {
    std::uint64_t k = 1;
    Elem x = a;
    while (x != g.identity()) {
        x = g.op(x, a);
        ++k;
    }
    return k;
}

std::uint64_t exponent(const FiniteGroup& g) {
    std::uint64_t m = 1;
    for (std::size_t a = 0; a < g.order(); ++a)
        m = std::lcm(m, element_order(g, static_cast<Elem>(a)));
    return m;
}

namespace {

bool is_power_of(std::uint64_t n, std::uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

}  // namespace

bool is_p_group(const FiniteGroup& g, std::uint64_t p) {
    bool by_orders = true;
    for (std::size_t a = 0; a < g.order(); ++a) {
        if (!is_power_of(element_order(g, static_cast<Elem>(a)), p)) {
            by_orders = false;
            break;
        }
    }
    const bool by_size = is_power_of(g.order(), p);
    if (by_orders != by_size)
        throw RinglabError("p-group criteria disagree on " + g.label());
    return by_orders;
}

namespace {

GroupPtr cyclic(std::size_t n, const std::string& label) {
    std::vector<Elem> op(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        names[a] = a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a));
        for (std::size_t b = 0; b < n; ++b) op[a * n + b] = static_cast<Elem>((a + b) % n);
    }
    return std::make_shared<const FiniteGroup>(n, 0, std::move(op), label, std::move(names));
}

GroupPtr direct_product(const GroupPtr& g1, const GroupPtr& g2, const std::string& label) {
    const std::size_t n1 = g1->order(), n2 = g2->order(), n = n1 * n2;
    std::vector<Elem> op(n * n);
    std::vector<std::string> names(n);
    for (std::size_t a = 0; a < n; ++a) {
        const Elem a1 = static_cast<Elem>(a / n2), a2 = static_cast<Elem>(a % n2);
        names[a] = "(" + g1->element_name(a1) + "," + g2->element_name(a2) + ")";
        for (std::size_t b = 0; b < n; ++b) {
            const Elem b1 = static_cast<Elem>(b / n2), b2 = static_cast<Elem>(b % n2);
            op[a * n + b] = static_cast<Elem>(g1->op(a1, b1) * n2 + g2->op(a2, b2));
        }
    }
    const Elem id = static_cast<Elem>(g1->identity() * n2 + g2->identity());
    return std::make_shared<const FiniteGroup>(n, id, std::move(op), label, std::move(names));
}

// r^i s^j encoded as i + n*j with relations r^n = e, s^2 = e, s r = r^-1 s.
GroupPtr dihedral(std::size_t n, const std::string& label) {
    const std::size_t order = 2 * n;
    std::vector<Elem> op(order * order);
    std::vector<std::string> names(order);
    for (std::size_t a = 0; a < order; ++a) {
        const std::size_t i1 = a % n, j1 = a / n;
        std::string base = i1 == 0 ? "" : (i1 == 1 ? "r" : "r^" + std::to_string(i1));
        names[a] = j1 ? (base.empty() ? "s" : base + "s") : (base.empty() ? "e" : base);
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t i2 = b % n, j2 = b / n;
            const std::size_t i = (i1 + (j1 == 0 ? i2 : n - i2)) % n;
            op[a * order + b] = static_cast<Elem>(i + n * ((j1 + j2) % 2));
        }
    }
    return std::make_shared<const FiniteGroup>(order, 0, std::move(op), label, std::move(names));
}

// Index s*4 + b with sign s and basis b in {1, i, j, k}.
GroupPtr quaternion8() {
    struct SB {
        int sign;
        int base;
    };
    // base[a][b] for a,b in {1,i,j,k}
    static const SB table[4][4] = {
        {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
        {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
        {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
        {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
    };
    const std::size_t n = 8;
    std::vector<Elem> op(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        const int sa = static_cast<int>(a / 4), ba = static_cast<int>(a % 4);
        for (std::size_t b = 0; b < n; ++b) {
            const int sb = static_cast<int>(b / 4), bb = static_cast<int>(b % 4);
            const SB r = table[ba][bb];
            op[a * n + b] = static_cast<Elem>(((sa + sb + r.sign) % 2) * 4 + r.base);
        }
    }
    std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return std::make_shared<const FiniteGroup>(n, 0, std::move(op), "Q8", std::move(names));
}

}  // namespace

GroupPtr group_catalog(const std::string& name) {
    static const std::map<std::string, GroupPtr> catalog = [] {
        std::map<std::string, GroupPtr> m;
        m["C1"] = cyclic(1, "C1");
        m["C2"] = cyclic(2, "C2");
        m["C3"] = cyclic(3, "C3");
        m["C4"] = cyclic(4, "C4");
        m["C8"] = cyclic(8, "C8");
        m["C9"] = cyclic(9, "C9");
        m["C2xC2"] = direct_product(m["C2"], m["C2"], "C2xC2");
        m["C2xC2xC2"] = direct_product(m["C2xC2"], m["C2"], "C2xC2xC2");
        m["C3xC3"] = direct_product(m["C3"], m["C3"], "C3xC3");
        m["S3"] = dihedral(3, "S3");
        m["D4"] = dihedral(4, "D4");
        m["Q8"] = quaternion8();
        return m;
    }();
    auto it = catalog.find(name);
    if (it == catalog.end()) throw UnknownGroup("unknown group name: " + name);
    return it->second;
}

const std::vector<std::string>& group_catalog_names() {
    static const std::vector<std::string> names = {"C1",    "C2",        "C3",    "C4",
                                                   "C8",    "C9",        "C2xC2", "C2xC2xC2",
                                                   "C3xC3", "S3",        "D4",    "Q8"};
    return names;
}

}  // namespace ringlab
