#include "ringlab/constructions.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "ringlab/errors.hpp"

namespace ringlab {

namespace {

std::size_t checked_order(std::uint64_t base, std::uint64_t exp_or_one, std::size_t max_order,
                          const std::string& what, bool is_pow) {
    const std::size_t cap = std::min<std::size_t>(max_order, kMaxRepresentableOrder);
    std::uint64_t acc = 1;
    if (is_pow) {
        for (std::uint64_t i = 0; i < exp_or_one; ++i) {
            acc *= base;
            if (acc > cap)
                throw BudgetExceeded(what + " would have order above the budget of " +
                                     std::to_string(cap));
        }
    } else {
        acc = base;
        if (acc > cap)
            throw BudgetExceeded(what + " would have order " + std::to_string(acc) +
                                 " above the budget of " + std::to_string(cap));
    }
    if (acc == 0) throw RinglabError(what + ": empty carrier");
    return static_cast<std::size_t>(acc);
}

std::size_t checked_pow(std::uint64_t base, std::uint64_t exp, std::size_t max_order,
                        const std::string& what) {
    return checked_order(base, exp, max_order, what, true);
}

struct MixedRadix {
    std::vector<std::size_t> radix;  // least significant digit first
    std::size_t total = 1;

    explicit MixedRadix(std::vector<std::size_t> r) : radix(std::move(r)) {
        for (std::size_t v : radix) total *= v;
    }
    std::size_t size() const { return radix.size(); }
    void decode(std::size_t idx, Elem* out) const {
        for (std::size_t k = 0; k < radix.size(); ++k) {
            out[k] = static_cast<Elem>(idx % radix[k]);
            idx /= radix[k];
        }
    }
    std::size_t encode(const Elem* d) const {
        std::size_t idx = 0;
        for (std::size_t k = radix.size(); k-- > 0;)
            idx = idx * radix[k] + d[k];
        return idx;
    }
};

/// Builds a ring whose elements are digit tuples with componentwise addition
/// and an arbitrary digit-level product.
template <class AddDigit, class NegDigit, class MulDigits>
RingPtr build_digit_ring(const MixedRadix& mr, std::size_t zero_idx, std::size_t one_idx,
                         AddDigit add_digit, NegDigit neg_digit, MulDigits mul_digits,
                         std::string label, std::function<std::string(Elem)> elem_label,
                         std::shared_ptr<const GroupRingMeta> meta = {}) {
    const std::size_t n = mr.total;
    const std::size_t m = mr.size();
    std::vector<Elem> dig(n * m);
    for (std::size_t i = 0; i < n; ++i) mr.decode(i, &dig[i * m]);

    std::vector<Elem> add(n * n), neg(n), mul(n * n);
    std::vector<Elem> out(m);
    for (std::size_t i = 0; i < n; ++i) {
        const Elem* a = &dig[i * m];
        for (std::size_t k = 0; k < m; ++k) out[k] = neg_digit(k, a[k]);
        neg[i] = static_cast<Elem>(mr.encode(out.data()));
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Elem* a = &dig[i * m];
        for (std::size_t j = 0; j < n; ++j) {
            const Elem* b = &dig[j * m];
            for (std::size_t k = 0; k < m; ++k) out[k] = add_digit(k, a[k], b[k]);
            add[i * n + j] = static_cast<Elem>(mr.encode(out.data()));
            mul_digits(a, b, out.data());
            mul[i * n + j] = static_cast<Elem>(mr.encode(out.data()));
        }
    }
    return std::make_shared<const FiniteRing>(n, static_cast<Elem>(zero_idx),
                                              static_cast<Elem>(one_idx), std::move(add),
                                              std::move(neg), std::move(mul), std::move(label),
                                              true, std::move(elem_label), std::move(meta));
}

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over Z_p, coefficients ascending, trailing zeros trimmed.
using PolyZ = std::vector<int>;

void poly_trim(PolyZ& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyZ poly_mul(const PolyZ& a, const PolyZ& b, int p) {
    if (a.empty() || b.empty()) return {};
    PolyZ c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c);
    return c;
}

// Remainder of a modulo the monic polynomial m.
PolyZ poly_rem(PolyZ a, const PolyZ& m, int p) {
    poly_trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const int lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            int& c = a[shift + i];
            c = ((c - lead * m[i]) % p + p) % p;
        }
        poly_trim(a);
    }
    return a;
}

bool poly_is_zero(const PolyZ& a) { return a.empty(); }

bool poly_irreducible(const PolyZ& f, int p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Trial division by every monic polynomial of degree 1..deg/2.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
        for (std::uint64_t v = 0; v < count; ++v) {
            PolyZ g(d + 1, 0);
            std::uint64_t t = v;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<int>(t % p);
                t /= p;
            }
            g[d] = 1;
            if (poly_is_zero(poly_rem(f, g, p))) return false;
        }
    }
    return true;
}

std::string coefficient_term(const std::string& coeff_label, const std::string& var,
                             std::size_t deg, bool coeff_is_one) {
    std::string var_part;
    if (deg == 1)
        var_part = var;
    else if (deg > 1)
        var_part = var + "^" + std::to_string(deg);
    if (deg == 0) return coeff_label;
    if (coeff_is_one) return var_part;
    const bool needs_parens = coeff_label.find_first_of("+*") != std::string::npos;
    return (needs_parens ? "(" + coeff_label + ")" : coeff_label) + "*" + var_part;
}

std::function<std::string(Elem)> coefficient_vector_label(const RingPtr& base, std::size_t count,
                                                          std::string var) {
    return [base, count, var](Elem idx) {
        const std::size_t q = base->order();
        std::string s;
        std::size_t v = idx;
        for (std::size_t k = 0; k < count; ++k) {
            const Elem c = static_cast<Elem>(v % q);
            v /= q;
            if (c == base->zero()) continue;
            if (!s.empty()) s += "+";
            s += coefficient_term(base->element_label(c), var, k, c == base->one());
        }
        return s.empty() ? base->element_label(base->zero()) : s;
    };
}

void require_left_right(const Bimodule& m, const RingPtr& a, const RingPtr& b,
                        const std::string& what) {
    if (!identical_tables(m.left_ring, a) || !identical_tables(m.right_ring, b))
        throw InvalidBimodule(what + ": bimodule is not over the expected rings");
    if (!m.structural) validate_bimodule(m);
}

}  // namespace

Bimodule regular_bimodule(const RingPtr& r) {
    Bimodule m;
    m.left_ring = r;
    m.right_ring = r;
    m.order = r->order();
    m.zero = r->zero();
    const std::size_t n = m.order;
    m.add.resize(n * n);
    m.neg.resize(n);
    m.left_act.resize(n * n);
    m.right_act.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        m.neg[a] = r->neg(static_cast<Elem>(a));
        for (std::size_t b = 0; b < n; ++b) {
            m.add[a * n + b] = r->add(static_cast<Elem>(a), static_cast<Elem>(b));
            m.left_act[a * n + b] = r->mul(static_cast<Elem>(a), static_cast<Elem>(b));
            m.right_act[a * n + b] = r->mul(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }
    m.structural = true;
    RingPtr base = r;
    m.element_label = [base](Elem x) { return base->element_label(x); };
    return m;
}

Bimodule direct_sum_bimodule(const RingPtr& r, std::size_t k) {
    if (k == 0) return zero_bimodule(r, r);
    const std::size_t q = r->order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        total *= q;
        if (total > kMaxRepresentableOrder)
            throw BudgetExceeded("direct sum module carrier too large");
    }
    Bimodule m;
    m.left_ring = r;
    m.right_ring = r;
    m.order = static_cast<std::size_t>(total);
    m.zero = 0;
    const std::size_t n = m.order;
    auto digits = [q, k](std::size_t idx, Elem* out) {
        for (std::size_t i = 0; i < k; ++i) {
            out[i] = static_cast<Elem>(idx % q);
            idx /= q;
        }
    };
    auto enc = [q, k](const Elem* d) {
        std::size_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * q + d[i];
        return idx;
    };
    m.add.resize(n * n);
    m.neg.resize(n);
    m.left_act.resize(q * n);
    m.right_act.resize(n * q);
    std::vector<Elem> da(k), db(k), dc(k);
    for (std::size_t a = 0; a < n; ++a) {
        digits(a, da.data());
        for (std::size_t i = 0; i < k; ++i) dc[i] = r->neg(da[i]);
        m.neg[a] = static_cast<Elem>(enc(dc.data()));
        for (std::size_t b = 0; b < n; ++b) {
            digits(b, db.data());
            for (std::size_t i = 0; i < k; ++i) dc[i] = r->add(da[i], db[i]);
            m.add[a * n + b] = static_cast<Elem>(enc(dc.data()));
        }
        for (std::size_t s = 0; s < q; ++s) {
            for (std::size_t i = 0; i < k; ++i) dc[i] = r->mul(static_cast<Elem>(s), da[i]);
            m.left_act[s * n + a] = static_cast<Elem>(enc(dc.data()));
            for (std::size_t i = 0; i < k; ++i) dc[i] = r->mul(da[i], static_cast<Elem>(s));
            m.right_act[a * q + s] = static_cast<Elem>(enc(dc.data()));
        }
    }
    m.structural = true;
    RingPtr base = r;
    m.element_label = [base, q, k](Elem x) {
        std::string s = "(";
        std::size_t v = x;
        for (std::size_t i = 0; i < k; ++i) {
            if (i) s += ",";
            s += base->element_label(static_cast<Elem>(v % q));
            v /= q;
        }
        return s + ")";
    };
    return m;
}

Bimodule zero_bimodule(const RingPtr& a, const RingPtr& b) {
    Bimodule m;
    m.left_ring = a;
    m.right_ring = b;
    m.order = 1;
    m.zero = 0;
    m.add = {0};
    m.neg = {0};
    m.left_act.assign(a->order(), 0);
    m.right_act.assign(b->order(), 0);
    m.structural = true;
    m.element_label = [](Elem) { return std::string("0"); };
    return m;
}

void validate_bimodule(const Bimodule& m) {
    const std::size_t n = m.order;
    const FiniteRing& a = *m.left_ring;
    const FiniteRing& b = *m.right_ring;
    auto fail = [](const std::string& what) { throw InvalidBimodule("bimodule: " + what); };
    if (m.add.size() != n * n || m.neg.size() != n || m.left_act.size() != a.order() * n ||
        m.right_act.size() != n * b.order())
        fail("table size mismatch");
    for (std::size_t x = 0; x < n; ++x) {
        if (m.madd(static_cast<Elem>(x), m.zero) != x) fail("additive identity fails");
        if (m.madd(static_cast<Elem>(x), m.mneg(static_cast<Elem>(x))) != m.zero)
            fail("additive inverse fails");
        if (m.act_left(a.one(), static_cast<Elem>(x)) != x) fail("left action not unital");
        if (m.act_right(static_cast<Elem>(x), b.one()) != x) fail("right action not unital");
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            if (m.madd(static_cast<Elem>(x), static_cast<Elem>(y)) !=
                m.madd(static_cast<Elem>(y), static_cast<Elem>(x)))
                fail("addition not commutative");
            for (std::size_t z = 0; z < n; ++z)
                if (m.madd(m.madd(static_cast<Elem>(x), static_cast<Elem>(y)),
                           static_cast<Elem>(z)) !=
                    m.madd(static_cast<Elem>(x),
                           m.madd(static_cast<Elem>(y), static_cast<Elem>(z))))
                    fail("addition not associative");
        }
    for (std::size_t r = 0; r < a.order(); ++r)
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y)
                if (m.act_left(static_cast<Elem>(r), m.madd(static_cast<Elem>(x),
                                                            static_cast<Elem>(y))) !=
                    m.madd(m.act_left(static_cast<Elem>(r), static_cast<Elem>(x)),
                           m.act_left(static_cast<Elem>(r), static_cast<Elem>(y))))
                    fail("left action not additive in the module argument");
            for (std::size_t s = 0; s < a.order(); ++s) {
                if (m.act_left(a.add(static_cast<Elem>(r), static_cast<Elem>(s)),
                               static_cast<Elem>(x)) !=
                    m.madd(m.act_left(static_cast<Elem>(r), static_cast<Elem>(x)),
                           m.act_left(static_cast<Elem>(s), static_cast<Elem>(x))))
                    fail("left action not additive in the ring argument");
                if (m.act_left(a.mul(static_cast<Elem>(r), static_cast<Elem>(s)),
                               static_cast<Elem>(x)) !=
                    m.act_left(static_cast<Elem>(r),
                               m.act_left(static_cast<Elem>(s), static_cast<Elem>(x))))
                    fail("left action not associative");
            }
        }
    for (std::size_t r = 0; r < b.order(); ++r)
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y)
                if (m.act_right(m.madd(static_cast<Elem>(x), static_cast<Elem>(y)),
                                static_cast<Elem>(r)) !=
                    m.madd(m.act_right(static_cast<Elem>(x), static_cast<Elem>(r)),
                           m.act_right(static_cast<Elem>(y), static_cast<Elem>(r))))
                    fail("right action not additive in the module argument");
            for (std::size_t s = 0; s < b.order(); ++s) {
                if (m.act_right(static_cast<Elem>(x),
                                b.add(static_cast<Elem>(r), static_cast<Elem>(s))) !=
                    m.madd(m.act_right(static_cast<Elem>(x), static_cast<Elem>(r)),
                           m.act_right(static_cast<Elem>(x), static_cast<Elem>(s))))
                    fail("right action not additive in the ring argument");
                if (m.act_right(static_cast<Elem>(x),
                                b.mul(static_cast<Elem>(r), static_cast<Elem>(s))) !=
                    m.act_right(m.act_right(static_cast<Elem>(x), static_cast<Elem>(r)),
                                static_cast<Elem>(s)))
                    fail("right action not associative");
            }
        }
    // Actions commute with each other.
    for (std::size_t r = 0; r < a.order(); ++r)
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t s = 0; s < b.order(); ++s)
                if (m.act_right(m.act_left(static_cast<Elem>(r), static_cast<Elem>(x)),
                                static_cast<Elem>(s)) !=
                    m.act_left(static_cast<Elem>(r),
                               m.act_right(static_cast<Elem>(x), static_cast<Elem>(s))))
                    fail("left and right actions do not commute");
}

CentralElement central_element(const RingPtr& r, Elem value) {
    if (value >= r->order() || !r->is_central(value))
        throw NotCentral("element " + std::to_string(value) + " is not central in " + r->label());
    return CentralElement{r, value};
}

RingPtr ring_zn(std::uint64_t n) {
    if (n < 2) throw RinglabError("ring_zn requires n >= 2");
    if (n > kMaxRepresentableOrder) throw BudgetExceeded("ring_zn: order not representable");
    const std::size_t m = static_cast<std::size_t>(n);
    std::vector<Elem> add(m * m), neg(m), mul(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        neg[a] = static_cast<Elem>((m - a) % m);
        for (std::size_t b = 0; b < m; ++b) {
            add[a * m + b] = static_cast<Elem>((a + b) % m);
            mul[a * m + b] = static_cast<Elem>((a * b) % m);
        }
    }
    return std::make_shared<const FiniteRing>(m, 0, 1, std::move(add), std::move(neg),
                                              std::move(mul), "Z" + std::to_string(n), true);
}

RingPtr ring_gf(std::uint64_t p, std::uint32_t k, std::size_t max_order) {
    if (!is_prime_u64(p)) throw NotPrime("ring_gf: " + std::to_string(p) + " is not prime");
    if (k == 0) throw RinglabError("ring_gf requires k >= 1");
    const std::size_t q = checked_pow(p, k, max_order, "GF(" + std::to_string(p) + "^" +
                                                           std::to_string(k) + ")");
    const int ip = static_cast<int>(p);

    // Modulus: first monic irreducible of degree k in coefficient-vector order.
    PolyZ modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < k; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            PolyZ f(k + 1, 0);
            std::uint64_t t = v;
            for (std::uint32_t i = 0; i < k; ++i) {
                f[i] = static_cast<int>(t % p);
                t /= p;
            }
            f[k] = 1;
            if (poly_irreducible(f, ip)) {
                modulus = f;
                break;
            }
        }
    }

    auto decode = [&](std::size_t idx) {
        PolyZ f;
        while (idx) {
            f.push_back(static_cast<int>(idx % p));
            idx /= p;
        }
        return f;
    };
    auto encode = [&](const PolyZ& f) {
        std::size_t idx = 0;
        for (std::size_t i = f.size(); i-- > 0;) idx = idx * p + static_cast<std::size_t>(f[i]);
        return idx;
    };

    std::vector<Elem> add(q * q), neg(q), mul(q * q);
    for (std::size_t a = 0; a < q; ++a) {
        PolyZ fa = decode(a);
        PolyZ fn = fa;
        for (int& c : fn) c = (ip - c) % ip;
        poly_trim(fn);
        neg[a] = static_cast<Elem>(encode(fn));
        for (std::size_t b = 0; b < q; ++b) {
            PolyZ fb = decode(b);
            PolyZ fs(std::max(fa.size(), fb.size()), 0);
            for (std::size_t i = 0; i < fs.size(); ++i) {
                int c = 0;
                if (i < fa.size()) c += fa[i];
                if (i < fb.size()) c += fb[i];
                fs[i] = c % ip;
            }
            poly_trim(fs);
            add[a * q + b] = static_cast<Elem>(encode(fs));
            mul[a * q + b] = static_cast<Elem>(encode(poly_rem(poly_mul(fa, fb, ip), modulus, ip)));
        }
    }
    const std::uint64_t qv = q;
    std::string label = "GF(" + std::to_string(qv) + ")";
    auto base_label = [p, k](Elem idx) {
        std::string s;
        std::size_t v = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::size_t c = v % p;
            v /= p;
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            s += coefficient_term(std::to_string(c), "x", i, c == 1);
        }
        return s.empty() ? std::string("0") : s;
    };
    return std::make_shared<const FiniteRing>(q, 0, 1, std::move(add), std::move(neg),
                                              std::move(mul), std::move(label), true, base_label);
}

RingPtr product(const std::vector<RingPtr>& factors, std::size_t max_order) {
    if (factors.empty()) throw RinglabError("product requires at least one factor");
    std::uint64_t total = 1;
    for (const RingPtr& f : factors) {
        total *= f->order();
        checked_order(total, 1, max_order, "product", false);
    }
    // Least significant digit is the last factor (first factor most significant).
    std::vector<std::size_t> radix;
    for (std::size_t i = factors.size(); i-- > 0;) radix.push_back(factors[i]->order());
    MixedRadix mr(std::move(radix));
    const std::size_t m = factors.size();
    std::vector<RingPtr> comp;  // component ring per digit position
    for (std::size_t i = factors.size(); i-- > 0;) comp.push_back(factors[i]);

    std::vector<Elem> one(m), zero(m);
    for (std::size_t k = 0; k < m; ++k) {
        one[k] = comp[k]->one();
        zero[k] = comp[k]->zero();
    }
    std::string label = "Prod(";
    for (std::size_t i = 0; i < factors.size(); ++i)
        label += (i ? ", " : "") + factors[i]->label();
    label += ")";
    std::vector<RingPtr> fac = factors;
    auto elem_label = [fac, mr](Elem idx) {
        std::vector<Elem> d(mr.size());
        mr.decode(idx, d.data());
        std::string s = "(";
        for (std::size_t i = 0; i < fac.size(); ++i) {
            if (i) s += ",";
            s += fac[i]->element_label(d[mr.size() - 1 - i]);
        }
        return s + ")";
    };
    return build_digit_ring(
        mr, mr.encode(zero.data()), mr.encode(one.data()),
        [&comp](std::size_t k, Elem a, Elem b) { return comp[k]->add(a, b); },
        [&comp](std::size_t k, Elem a) { return comp[k]->neg(a); },
        [&comp, m](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t k = 0; k < m; ++k) out[k] = comp[k]->mul(a[k], b[k]);
        },
        std::move(label), elem_label);
}

namespace {

std::function<std::string(Elem)> matrix_label(const RingPtr& base, std::size_t n) {
    return [base, n](Elem idx) {
        const std::size_t q = base->order();
        const std::size_t cells = n * n;
        std::vector<Elem> d(cells);
        std::size_t v = idx;
        for (std::size_t k = cells; k-- > 0;) {
            d[k] = static_cast<Elem>(v % q);
            v /= q;
        }
        std::string s = "[";
        for (std::size_t r = 0; r < n; ++r) {
            s += r ? ";[" : "[";
            for (std::size_t c = 0; c < n; ++c) s += (c ? "," : "") + base->element_label(d[r * n + c]);
            s += "]";
        }
        return s + "]";
    };
}

}  // namespace

RingPtr matrix_ring(std::size_t n, const RingPtr& r, std::size_t max_order) {
    if (n == 0) throw RinglabError("matrix_ring requires n >= 1");
    if (n == 1) return r;
    const std::size_t cells = n * n;
    const std::size_t total =
        checked_pow(r->order(), cells, max_order, "M(" + std::to_string(n) + ", " + r->label() + ")");
    (void)total;
    MixedRadix mr(std::vector<std::size_t>(cells, r->order()));
    // Digit k (least significant) is matrix cell (row-major position cells-1-k).
    auto at = [n, cells](const Elem* d, std::size_t row, std::size_t col) {
        return d[cells - 1 - (row * n + col)];
    };
    std::vector<Elem> one_digits(cells, r->zero());
    for (std::size_t i = 0; i < n; ++i) one_digits[cells - 1 - (i * n + i)] = r->one();
    RingPtr base = r;
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, n, cells, at](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Elem acc = base->zero();
                    for (std::size_t k = 0; k < n; ++k)
                        acc = base->add(acc, base->mul(at(a, i, k), at(b, k, j)));
                    out[cells - 1 - (i * n + j)] = acc;
                }
        },
        "M(" + std::to_string(n) + ", " + r->label() + ")", matrix_label(r, n));
}

RingPtr upper_triangular(std::size_t n, const RingPtr& r, std::size_t max_order) {
    if (n == 0) throw RinglabError("upper_triangular requires n >= 1");
    if (n == 1) return r;
    const std::size_t cells = n * (n + 1) / 2;
    checked_pow(r->order(), cells, max_order, "T(" + std::to_string(n) + ", " + r->label() + ")");
    // Stored entries (i, j) with i <= j in row-major order; first stored entry
    // is most significant.
    std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) pos[i][j] = static_cast<int>(idx++);
    MixedRadix mr(std::vector<std::size_t>(cells, r->order()));
    auto at = [&pos, cells](const Elem* d, std::size_t row, std::size_t col) {
        return d[cells - 1 - static_cast<std::size_t>(pos[row][col])];
    };
    std::vector<Elem> one_digits(cells, r->zero());
    for (std::size_t i = 0; i < n; ++i)
        one_digits[cells - 1 - static_cast<std::size_t>(pos[i][i])] = r->one();
    RingPtr base = r;
    auto elem_label = [base, n, pos, cells](Elem e) {
        const std::size_t q = base->order();
        std::vector<Elem> d(cells);
        std::size_t v = e;
        for (std::size_t k = cells; k-- > 0;) {
            d[k] = static_cast<Elem>(v % q);
            v /= q;
        }
        std::string s = "[";
        for (std::size_t row = 0; row < n; ++row) {
            s += row ? ";[" : "[";
            for (std::size_t col = 0; col < n; ++col) {
                s += col ? "," : "";
                if (pos[row][col] < 0)
                    s += base->element_label(base->zero());
                else
                    s += base->element_label(d[cells - 1 - static_cast<std::size_t>(pos[row][col])]);
            }
            s += "]";
        }
        return s + "]";
    };
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, n, cells, at, &pos](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) {
                    Elem acc = base->zero();
                    for (std::size_t k = i; k <= j; ++k)
                        acc = base->add(acc, base->mul(at(a, i, k), at(b, k, j)));
                    out[cells - 1 - static_cast<std::size_t>(pos[i][j])] = acc;
                }
        },
        "T(" + std::to_string(n) + ", " + r->label() + ")", elem_label);
}

namespace {

RingPtr skew_truncated(std::size_t n, const RingPtr& r, const Endomorphism& alpha,
                       std::size_t max_order, std::string label) {
    if (n == 0) throw RinglabError("skew triangular ring requires n >= 1");
    if (alpha.ring != r) throw NotAnEndomorphism("endomorphism is over a different ring");
    EndoVerdict v = check_endomorphism(r, alpha.map);
    if (!v.ok) throw NotAnEndomorphism("skew construction: " + v.detail);
    checked_pow(r->order(), n, max_order, label);
    const std::size_t q = r->order();
    // alpha_pow[k][x] = alpha^k(x)
    std::vector<std::vector<Elem>> alpha_pow(n, std::vector<Elem>(q));
    for (std::size_t x = 0; x < q; ++x) alpha_pow[0][x] = static_cast<Elem>(x);
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t x = 0; x < q; ++x) alpha_pow[k][x] = alpha.map[alpha_pow[k - 1][x]];

    MixedRadix mr(std::vector<std::size_t>(n, q));  // digit i = coefficient a_i
    std::vector<Elem> one_digits(n, r->zero());
    one_digits[0] = r->one();
    RingPtr base = r;
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, n, &alpha_pow](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t i = 0; i < n; ++i) {
                Elem acc = base->zero();
                for (std::size_t k = 0; k <= i; ++k)
                    acc = base->add(acc, base->mul(a[k], alpha_pow[k][b[i - k]]));
                out[i] = acc;
            }
        },
        std::move(label), coefficient_vector_label(r, n, "t"));
}

}  // namespace

RingPtr skew_triangular(std::size_t n, const RingPtr& r, const Endomorphism& alpha,
                        std::size_t max_order) {
    return skew_truncated(n, r, alpha, max_order,
                          "Tskew(" + std::to_string(n) + ", " + r->label() + ")");
}

RingPtr skew_poly_mod(const RingPtr& r, const Endomorphism& alpha, std::size_t n,
                      std::size_t max_order) {
    return skew_truncated(n, r, alpha, max_order,
                          "SkewPolyMod(" + r->label() + ", " + std::to_string(n) + ")");
}

RingPtr poly_mod(const RingPtr& r, std::size_t n, std::size_t max_order) {
    if (n == 0) throw RinglabError("poly_mod requires n >= 1");
    std::string label = "PolyMod(" + r->label() + ", " + std::to_string(n) + ")";
    checked_pow(r->order(), n, max_order, label);
    MixedRadix mr(std::vector<std::size_t>(n, r->order()));
    std::vector<Elem> one_digits(n, r->zero());
    one_digits[0] = r->one();
    RingPtr base = r;
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, n](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t i = 0; i < n; ++i) {
                Elem acc = base->zero();
                for (std::size_t k = 0; k <= i; ++k)
                    acc = base->add(acc, base->mul(a[k], b[i - k]));
                out[i] = acc;
            }
        },
        std::move(label), coefficient_vector_label(r, n, "t"));
}

RingPtr trivial_extension(const RingPtr& r, const Bimodule& m, std::size_t max_order) {
    require_left_right(m, r, r, "trivial_extension");
    const std::uint64_t total = static_cast<std::uint64_t>(r->order()) * m.order;
    checked_order(total, 1, max_order, "TrivExt(" + r->label() + ")", false);
    // Digit 0 = module part, digit 1 = ring part (pair (r, m), r most significant).
    MixedRadix mr({m.order, r->order()});
    std::vector<Elem> one_digits = {m.zero, r->one()};
    RingPtr base = r;
    const Bimodule mod = m;
    auto elem_label = [base, mod](Elem idx) {
        const Elem mm = static_cast<Elem>(idx % mod.order);
        const Elem rr = static_cast<Elem>(idx / mod.order);
        return "(" + base->element_label(rr) + ", " +
               (mod.element_label ? mod.element_label(mm) : std::to_string(mm)) + ")";
    };
    return build_digit_ring(
        mr, mr.encode(std::vector<Elem>{mod.zero, base->zero()}.data()),
        mr.encode(one_digits.data()),
        [base, &mod = mod](std::size_t k, Elem a, Elem b) {
            return k == 0 ? mod.madd(a, b) : base->add(a, b);
        },
        [base, &mod = mod](std::size_t k, Elem a) {
            return k == 0 ? mod.mneg(a) : base->neg(a);
        },
        [base, &mod = mod](const Elem* a, const Elem* b, Elem* out) {
            // (r, m)(s, n) = (rs, rn + ms)
            out[1] = base->mul(a[1], b[1]);
            out[0] = mod.madd(mod.act_left(a[1], b[0]), mod.act_right(a[0], b[1]));
        },
        "TrivExt(" + r->label() + (m.order == r->order() && m.structural ? "" : ", M") + ")",
        elem_label);
}

RingPtr trivial_extension(const RingPtr& r, std::size_t max_order) {
    return trivial_extension(r, regular_bimodule(r), max_order);
}

RingPtr dt_extension(const RingPtr& r, const Bimodule& m, std::size_t max_order) {
    require_left_right(m, r, r, "dt_extension");
    const std::uint64_t total = static_cast<std::uint64_t>(r->order()) * r->order() *
                                static_cast<std::uint64_t>(m.order) * m.order;
    checked_order(total, 1, max_order, "DT(" + r->label() + ")", false);
    // Tuple (a, m, b, n) with a most significant: digits lsf = (n, b, m, a).
    MixedRadix mr({m.order, r->order(), m.order, r->order()});
    RingPtr base = r;
    const Bimodule mod = m;
    std::vector<Elem> one_digits = {mod.zero, base->zero(), mod.zero, base->one()};
    std::vector<Elem> zero_digits = {mod.zero, base->zero(), mod.zero, base->zero()};
    auto elem_label = [base, mod, mr](Elem idx) {
        std::vector<Elem> d(4);
        mr.decode(idx, d.data());
        auto ml = [&](Elem x) {
            return mod.element_label ? mod.element_label(x) : std::to_string(x);
        };
        return "(" + base->element_label(d[3]) + ", " + ml(d[2]) + ", " +
               base->element_label(d[1]) + ", " + ml(d[0]) + ")";
    };
    return build_digit_ring(
        mr, mr.encode(zero_digits.data()), mr.encode(one_digits.data()),
        [base, &mod = mod](std::size_t k, Elem a, Elem b) {
            return (k % 2 == 0) ? mod.madd(a, b) : base->add(a, b);
        },
        [base, &mod = mod](std::size_t k, Elem a) {
            return (k % 2 == 0) ? mod.mneg(a) : base->neg(a);
        },
        [base, &mod = mod](const Elem* x, const Elem* y, Elem* out) {
            // digits: [0]=n, [1]=b, [2]=m, [3]=a
            const Elem a1 = x[3], m1 = x[2], b1 = x[1], n1 = x[0];
            const Elem a2 = y[3], m2 = y[2], b2 = y[1], n2 = y[0];
            out[3] = base->mul(a1, a2);
            out[2] = mod.madd(mod.act_left(a1, m2), mod.act_right(m1, a2));
            out[1] = base->add(base->mul(a1, b2), base->mul(b1, a2));
            out[0] = mod.madd(mod.madd(mod.act_left(a1, n2), mod.act_right(m1, b2)),
                              mod.madd(mod.act_left(b1, m2), mod.act_right(n1, a2)));
        },
        "DT(" + r->label() + ")", elem_label);
}

RingPtr dt_extension(const RingPtr& r, std::size_t max_order) {
    return dt_extension(r, regular_bimodule(r), max_order);
}

RingPtr ks_ring(const RingPtr& r, Elem s, std::size_t max_order) {
    central_element(r, s);
    const std::size_t q = r->order();
    checked_pow(q, 4, max_order, "Ks(" + r->label() + ")");
    // (a, x, y, b) with a most significant: digits lsf = (b, y, x, a).
    MixedRadix mr(std::vector<std::size_t>(4, q));
    RingPtr base = r;
    std::vector<Elem> one_digits = {base->one(), base->zero(), base->zero(), base->one()};
    auto elem_label = [base, mr](Elem idx) {
        std::vector<Elem> d(4);
        mr.decode(idx, d.data());
        return "[[" + base->element_label(d[3]) + "," + base->element_label(d[2]) + "];[" +
               base->element_label(d[1]) + "," + base->element_label(d[0]) + "]]";
    };
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, s](const Elem* u, const Elem* v, Elem* out) {
            const Elem a1 = u[3], x1 = u[2], y1 = u[1], b1 = u[0];
            const Elem a2 = v[3], x2 = v[2], y2 = v[1], b2 = v[0];
            out[3] = base->add(base->mul(a1, a2), base->mul(s, base->mul(x1, y2)));
            out[2] = base->add(base->mul(a1, x2), base->mul(x1, b2));
            out[1] = base->add(base->mul(y1, a2), base->mul(b1, y2));
            out[0] = base->add(base->mul(s, base->mul(y1, x2)), base->mul(b1, b2));
        },
        "Ks(" + r->label() + ", s=" + std::to_string(s) + ")", elem_label);
}

RingPtr formal_matrix(std::size_t n, const RingPtr& r, Elem s, std::size_t max_order) {
    if (n < 2) throw RinglabError("formal_matrix requires n >= 2");
    central_element(r, s);
    const std::size_t cells = n * n;
    checked_pow(r->order(), cells,
                max_order, "FM(" + std::to_string(n) + ", " + r->label() + ")");
    MixedRadix mr(std::vector<std::size_t>(cells, r->order()));
    auto at = [n, cells](const Elem* d, std::size_t row, std::size_t col) {
        return d[cells - 1 - (row * n + col)];
    };
    std::vector<Elem> one_digits(cells, r->zero());
    for (std::size_t i = 0; i < n; ++i) one_digits[cells - 1 - (i * n + i)] = r->one();
    RingPtr base = r;
    const std::array<Elem, 3> spow = {r->one(), s, r->mul(s, s)};
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, n, cells, at, spow](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    Elem acc = base->zero();
                    for (std::size_t k = 0; k < n; ++k) {
                        const int e = 1 + (i == j) - (i == k) - (k == j);
                        const Elem term = base->mul(spow[e], base->mul(at(a, i, k), at(b, k, j)));
                        acc = base->add(acc, term);
                    }
                    out[cells - 1 - (i * n + j)] = acc;
                }
        },
        "FM(" + std::to_string(n) + ", " + r->label() + ", s=" + std::to_string(s) + ")",
        matrix_label(r, n));
}

namespace {

RingPtr morita_impl(const RingPtr& a, const RingPtr& b, const Bimodule& m, const Bimodule& n,
                    std::size_t max_order, std::string label) {
    require_left_right(m, a, b, "trivial_morita (M)");
    require_left_right(n, b, a, "trivial_morita (N)");
    const std::uint64_t total = static_cast<std::uint64_t>(a->order()) * m.order * n.order *
                                static_cast<std::uint64_t>(b->order());
    checked_order(total, 1, max_order, label, false);
    // Block element (a, m; n, b), a most significant: digits lsf = (b, n, m, a).
    MixedRadix mr({b->order(), n.order, m.order, a->order()});
    RingPtr ra = a, rb = b;
    const Bimodule mm = m, nn = n;
    std::vector<Elem> one_digits = {rb->one(), nn.zero, mm.zero, ra->one()};
    std::vector<Elem> zero_digits = {rb->zero(), nn.zero, mm.zero, ra->zero()};
    auto elem_label = [ra, rb, mm, nn, mr](Elem idx) {
        std::vector<Elem> d(4);
        mr.decode(idx, d.data());
        auto lm = [&](const Bimodule& mod, Elem x) {
            return mod.element_label ? mod.element_label(x) : std::to_string(x);
        };
        return "[[" + ra->element_label(d[3]) + "," + lm(mm, d[2]) + "];[" + lm(nn, d[1]) + "," +
               rb->element_label(d[0]) + "]]";
    };
    return build_digit_ring(
        mr, mr.encode(zero_digits.data()), mr.encode(one_digits.data()),
        [ra, rb, &mm = mm, &nn = nn](std::size_t k, Elem x, Elem y) {
            switch (k) {
                case 0: return rb->add(x, y);
                case 1: return nn.madd(x, y);
                case 2: return mm.madd(x, y);
                default: return ra->add(x, y);
            }
        },
        [ra, rb, &mm = mm, &nn = nn](std::size_t k, Elem x) {
            switch (k) {
                case 0: return rb->neg(x);
                case 1: return nn.mneg(x);
                case 2: return mm.mneg(x);
                default: return ra->neg(x);
            }
        },
        [ra, rb, &mm = mm, &nn = nn](const Elem* u, const Elem* v, Elem* out) {
            const Elem a1 = u[3], m1 = u[2], n1 = u[1], b1 = u[0];
            const Elem a2 = v[3], m2 = v[2], n2 = v[1], b2 = v[0];
            out[3] = ra->mul(a1, a2);                                        // MN = 0
            out[2] = mm.madd(mm.act_left(a1, m2), mm.act_right(m1, b2));
            out[1] = nn.madd(nn.act_left(b1, n2), nn.act_right(n1, a2));
            out[0] = rb->mul(b1, b2);                                        // NM = 0
        },
        std::move(label), elem_label);
}

}  // namespace

RingPtr trivial_morita(const RingPtr& a, const RingPtr& b, const Bimodule& m, const Bimodule& n,
                       std::size_t max_order) {
    return morita_impl(a, b, m, n, max_order,
                       "MoritaTriv(" + a->label() + ", " + b->label() + ")");
}

RingPtr trivial_morita(const RingPtr& r, std::size_t max_order) {
    Bimodule m = regular_bimodule(r);
    return morita_impl(r, r, m, m, max_order, "MoritaTriv(" + r->label() + ")");
}

RingPtr group_ring(const RingPtr& r, const GroupPtr& g, std::size_t max_order) {
    const std::size_t gn = g->order();
    std::string label = "GroupRing(" + r->label() + ", " + g->label() + ")";
    checked_pow(r->order(), gn, max_order, label);
    MixedRadix mr(std::vector<std::size_t>(gn, r->order()));  // digit h = coefficient of h
    std::vector<Elem> one_digits(gn, r->zero());
    one_digits[g->identity()] = r->one();
    RingPtr base = r;
    GroupPtr grp = g;
    auto elem_label = [base, grp](Elem idx) {
        const std::size_t q = base->order();
        std::string s;
        std::size_t v = idx;
        for (std::size_t h = 0; h < grp->order(); ++h) {
            const Elem c = static_cast<Elem>(v % q);
            v /= q;
            if (c == base->zero()) continue;
            if (!s.empty()) s += "+";
            const std::string& name = grp->element_name(static_cast<Elem>(h));
            if (h == grp->identity())
                s += base->element_label(c);
            else if (c == base->one())
                s += name;
            else
                s += base->element_label(c) + "*" + name;
        }
        return s.empty() ? std::string("0") : s;
    };
    auto meta = std::make_shared<const GroupRingMeta>(GroupRingMeta{r, g});
    return build_digit_ring(
        mr, 0, mr.encode(one_digits.data()),
        [base](std::size_t, Elem a, Elem b) { return base->add(a, b); },
        [base](std::size_t, Elem a) { return base->neg(a); },
        [base, grp, gn](const Elem* a, const Elem* b, Elem* out) {
            for (std::size_t h = 0; h < gn; ++h) out[h] = base->zero();
            for (std::size_t x = 0; x < gn; ++x) {
                if (a[x] == base->zero()) continue;
                for (std::size_t y = 0; y < gn; ++y) {
                    if (b[y] == base->zero()) continue;
                    const Elem t = grp->op(static_cast<Elem>(x), static_cast<Elem>(y));
                    out[t] = base->add(out[t], base->mul(a[x], b[y]));
                }
            }
        },
        std::move(label), elem_label, meta);
}

RingHom augmentation(const RingPtr& rg) {
    const GroupRingMeta* meta = rg->group_ring_meta();
    if (!meta) throw NotAGroupRing("augmentation: " + rg->label() + " was not built by group_ring");
    const RingPtr& base = meta->base;
    const std::size_t q = base->order();
    const std::size_t gn = meta->group->order();
    std::vector<Elem> map(rg->order());
    for (std::size_t i = 0; i < rg->order(); ++i) {
        Elem acc = base->zero();
        std::size_t v = i;
        for (std::size_t h = 0; h < gn; ++h) {
            acc = base->add(acc, static_cast<Elem>(v % q));
            v /= q;
        }
        map[i] = acc;
    }
    return RingHom{rg, base, std::move(map)};
}

ElementSet augmentation_ideal(const RingPtr& rg) {
    RingHom eps = augmentation(rg);
    std::vector<Elem> members;
    for (std::size_t i = 0; i < rg->order(); ++i)
        if (eps.map[i] == eps.target->zero()) members.push_back(static_cast<Elem>(i));
    return make_element_set(rg, SetRole::Ideal, std::move(members));
}

Endomorphism identity_endo(const RingPtr& r) {
    std::vector<Elem> map(r->order());
    for (std::size_t i = 0; i < r->order(); ++i) map[i] = static_cast<Elem>(i);
    return Endomorphism{r, std::move(map)};
}

Endomorphism frobenius_endo(const RingPtr& r) {
    const std::uint64_t p = r->characteristic();
    std::vector<Elem> map(r->order());
    for (std::size_t i = 0; i < r->order(); ++i) map[i] = r->power(static_cast<Elem>(i), p);
    EndoVerdict v = check_endomorphism(r, map);
    if (!v.ok)
        throw NotAnEndomorphism("frobenius on " + r->label() + " is not an endomorphism: " +
                                v.detail);
    return Endomorphism{r, std::move(map)};
}

EndoVerdict check_endomorphism(const RingPtr& r, const std::vector<Elem>& map) {
    const FiniteRing& ring = *r;
    const std::size_t n = ring.order();
    if (map.size() != n) return {false, "map is not total", std::nullopt};
    for (Elem v : map)
        if (v >= n) return {false, "map image out of range", std::nullopt};
    if (map[ring.zero()] != ring.zero()) return {false, "does not fix zero", std::nullopt};
    if (map[ring.one()] != ring.one()) return {false, "does not fix one", std::nullopt};
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            if (map[ring.add(a, b)] != ring.add(map[a], map[b]))
                return {false, "not additive", std::make_pair(a, b)};
            if (map[ring.mul(a, b)] != ring.mul(map[a], map[b]))
                return {false, "not multiplicative", std::make_pair(a, b)};
        }
    return {true, "", std::nullopt};
}

EndoVerdict is_alpha_compatible(const RingPtr& r, const Endomorphism& alpha) {
    const FiniteRing& ring = *r;
    if (alpha.ring != r) return {false, "endomorphism is over a different ring", std::nullopt};
    const std::size_t n = ring.order();
    for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
            const bool ab_zero = ring.mul(a, b) == ring.zero();
            const bool aab_zero = ring.mul(a, alpha.map[b]) == ring.zero();
            if (ab_zero != aab_zero)
                return {false,
                        ab_zero ? "ab = 0 but a*alpha(b) != 0" : "a*alpha(b) = 0 but ab != 0",
                        std::make_pair(a, b)};
        }
    return {true, "", std::nullopt};
}

}  // namespace ringlab
