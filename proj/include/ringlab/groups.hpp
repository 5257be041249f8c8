#ifndef RINGLAB_GROUPS_HPP
#define RINGLAB_GROUPS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

/// A finite group given by its Cayley table. Inverses are derived from the
/// table at construction time; validate_group checks the axioms exhaustively.
class FiniteGroup {
  public:
    FiniteGroup(std::size_t order, Elem identity, std::vector<Elem> op, std::string label,
                std::vector<std::string> element_names);

    std::size_t order() const { return order_; }
    Elem identity() const { return identity_; }
    Elem op(Elem a, Elem b) const { return op_[std::size_t{a} * order_ + b]; }
    Elem inv(Elem a) const { return inv_[a]; }
    const std::string& label() const { return label_; }
    const std::string& element_name(Elem a) const { return names_[a]; }

  private:
    std::size_t order_;
    Elem identity_;
    std::vector<Elem> op_;
    std::vector<Elem> inv_;
    std::string label_;
    std::vector<std::string> names_;
};

/// Built-in groups: C1, C2, C3, C4, C8, C9, C2xC2, C2xC2xC2, C3xC3, S3, D4, Q8.
/// Throws UnknownGroup for anything else.
GroupPtr group_catalog(const std::string& name);

const std::vector<std::string>& group_catalog_names();

/// Exhaustive associativity, identity, and inverse check. Throws RinglabError
/// with the violating tuple.
void validate_group(const FiniteGroup& g);

std::uint64_t element_order(const FiniteGroup& g, Elem a);

/// Least m with g^m = identity for all g.
std::uint64_t exponent(const FiniteGroup& g);

/// True iff every element order is a power of p. Also computes whether |G| is
/// a power of p; the two criteria must agree and a mismatch is an error.
bool is_p_group(const FiniteGroup& g, std::uint64_t p);

}  // namespace ringlab

#endif
