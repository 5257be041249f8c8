#ifndef RINGLAB_CONSTRUCTIONS_HPP
#define RINGLAB_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/groups.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

/// Canonical element enumerations, fixed so indices are reproducible:
///  - residues: index i is the residue i
///  - coefficient vectors (GF, PolyMod, Tskew, group rings): digit k of the
///    index in base |R| is the coefficient of x^k (resp. of group element k)
///  - component tuples (Prod, M, T, TrivExt, DT, Ks, FM, MoritaTriv):
///    mixed-radix with the first listed component most significant, matrices
///    row-major

/// Two-sided module over a pair of rings, given by explicit tables.
struct Bimodule {
    RingPtr left_ring;   // A acting on the left
    RingPtr right_ring;  // B acting on the right
    std::size_t order = 0;
    Elem zero = 0;
    std::vector<Elem> add;        // order x order
    std::vector<Elem> neg;        // order
    std::vector<Elem> left_act;   // |A| x order
    std::vector<Elem> right_act;  // order x |B|
    bool structural = false;
    std::function<std::string(Elem)> element_label;

    Elem madd(Elem m, Elem n) const { return add[std::size_t{m} * order + n]; }
    Elem mneg(Elem m) const { return neg[m]; }
    Elem act_left(Elem a, Elem m) const { return left_act[std::size_t{a} * order + m]; }
    Elem act_right(Elem m, Elem b) const { return right_act[std::size_t{m} * right_ring->order() + b]; }
};

/// M = R with ring multiplication as both actions.
Bimodule regular_bimodule(const RingPtr& r);

/// M = R^k componentwise.
Bimodule direct_sum_bimodule(const RingPtr& r, std::size_t k);

/// The one-element module over any pair of rings.
Bimodule zero_bimodule(const RingPtr& a, const RingPtr& b);

/// Exhaustive axiom check; throws InvalidBimodule with the failing axiom.
void validate_bimodule(const Bimodule& m);

/// A ring element known to be central. The factory checks centrality.
struct CentralElement {
    RingPtr ring;
    Elem value;
};
CentralElement central_element(const RingPtr& r, Elem value);

RingPtr ring_zn(std::uint64_t n);
RingPtr ring_gf(std::uint64_t p, std::uint32_t k, std::size_t max_order = kDefaultMaxOrder);
RingPtr product(const std::vector<RingPtr>& factors, std::size_t max_order = kDefaultMaxOrder);
RingPtr matrix_ring(std::size_t n, const RingPtr& r, std::size_t max_order = kDefaultMaxOrder);
RingPtr upper_triangular(std::size_t n, const RingPtr& r,
                         std::size_t max_order = kDefaultMaxOrder);

/// Constant-diagonal upper triangular matrices with entries twisted by an
/// endomorphism: the product of (a_0..a_{n-1}) and (b_0..b_{n-1}) has
/// c_i = a_0 b_i + a_1 alpha(b_{i-1}) + ... + a_i alpha^i(b_0).
RingPtr skew_triangular(std::size_t n, const RingPtr& r, const Endomorphism& alpha,
                        std::size_t max_order = kDefaultMaxOrder);

/// Truncated polynomial ring R[x]/(x^n), implemented directly as truncated
/// convolution. Coincides elementwise with skew_triangular(n, r, id).
RingPtr poly_mod(const RingPtr& r, std::size_t n, std::size_t max_order = kDefaultMaxOrder);

/// R[x; alpha]/(x^n); same ring as skew_triangular(n, r, alpha) with
/// polynomial labeling.
RingPtr skew_poly_mod(const RingPtr& r, const Endomorphism& alpha, std::size_t n,
                      std::size_t max_order = kDefaultMaxOrder);

/// Pairs (r, m) with (r, m)(s, n) = (rs, rn + ms).
RingPtr trivial_extension(const RingPtr& r, const Bimodule& m,
                          std::size_t max_order = kDefaultMaxOrder);
RingPtr trivial_extension(const RingPtr& r, std::size_t max_order = kDefaultMaxOrder);

/// 4-tuples (a, m, b, n) multiplying as
/// (a1a2, a1m2 + m1a2, a1b2 + b1a2, a1n2 + m1b2 + b1m2 + n1a2).
RingPtr dt_extension(const RingPtr& r, const Bimodule& m,
                     std::size_t max_order = kDefaultMaxOrder);
RingPtr dt_extension(const RingPtr& r, std::size_t max_order = kDefaultMaxOrder);

/// 2x2 generalized matrices over R with products twisted by a central s:
/// the diagonal entries of a product pick up s * (off-diagonal products).
RingPtr ks_ring(const RingPtr& r, Elem s, std::size_t max_order = kDefaultMaxOrder);

/// n x n formal matrix ring over R defined via s: the (i,j) entry of a
/// product is sum_k s^(1 + d(i,j) - d(i,k) - d(k,j)) a_ik b_kj with d the
/// Kronecker delta.
RingPtr formal_matrix(std::size_t n, const RingPtr& r, Elem s,
                      std::size_t max_order = kDefaultMaxOrder);

/// 2x2 block ring over (A, M; N, B) with both context products zero.
RingPtr trivial_morita(const RingPtr& a, const RingPtr& b, const Bimodule& m,
                       const Bimodule& n, std::size_t max_order = kDefaultMaxOrder);
RingPtr trivial_morita(const RingPtr& r, std::size_t max_order = kDefaultMaxOrder);

/// Group ring RG: functions G -> R with convolution product.
RingPtr group_ring(const RingPtr& r, const GroupPtr& g,
                   std::size_t max_order = kDefaultMaxOrder);

/// Coefficient-sum homomorphism RG -> R. Throws NotAGroupRing unless the
/// argument was built by group_ring.
RingHom augmentation(const RingPtr& rg);

/// Kernel of the augmentation map, as an ideal of RG.
ElementSet augmentation_ideal(const RingPtr& rg);

Endomorphism identity_endo(const RingPtr& r);

/// x -> x^p with p the characteristic. Throws NotAnEndomorphism when that map
/// fails the homomorphism axioms (for Galois fields it never does).
Endomorphism frobenius_endo(const RingPtr& r);

struct EndoVerdict {
    bool ok = false;
    std::string detail;
    std::optional<std::pair<Elem, Elem>> witness;
};

EndoVerdict check_endomorphism(const RingPtr& r, const std::vector<Elem>& map);

/// ab = 0 iff a * alpha(b) = 0, checked over all pairs.
EndoVerdict is_alpha_compatible(const RingPtr& r, const Endomorphism& alpha);

}  // namespace ringlab

#endif
