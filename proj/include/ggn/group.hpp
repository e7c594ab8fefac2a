#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggn/bitset.hpp"
#include "ggn/permutation.hpp"

namespace ggn {

/// Index of an element in a group's enumeration. Index 0 is always the identity.
using Element = std::uint32_t;

/// Set of elements of one group, as a dense bit vector over 0..order-1.
using ElementSubset = Bitset;

inline constexpr std::size_t kDefaultOrderCap = 1000;

/// A finite group stored as an explicit multiplication table.
///
/// Values are immutable after construction and can be shared freely between
/// threads. Permutation groups additionally keep the permutation behind each
/// element, which is what the labels are rendered from.
class FiniteGroup {
public:
    /// Builds a group from a complete table. `table[a * order + b]` is a*b and
    /// element 0 must be the identity. The group axioms are not re-checked here;
    /// see `verify_axioms`.
    FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
                std::vector<std::string> labels);

    std::size_t order() const { return order_; }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    Element mul(Element a, Element b) const { return table_[static_cast<std::size_t>(a) * order_ + b]; }
    Element inv(Element a) const { return inverse_[a]; }
    static constexpr Element identity() { return 0; }

    const std::string& label(Element a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Looks up an element by its label; returns nullopt if no element has it.
    std::optional<Element> find_label(const std::string& label) const;

    std::size_t element_order(Element a) const;
    bool is_abelian() const;
    bool is_cyclic() const;
    std::size_t exponent() const;

    ElementSubset empty_subset() const { return ElementSubset(order_); }
    ElementSubset subset(const std::vector<Element>& elements) const;

    /// Smallest subgroup containing `s`; closure of the empty set is {e}.
    ElementSubset closure(const ElementSubset& s) const;
    /// Closure of a known subgroup together with one more element.
    ElementSubset join(const ElementSubset& subgroup, Element g) const;
    bool generates(const ElementSubset& s) const { return closure(s).count() == order_; }

    /// Exhaustive associativity, identity, inverse and Latin-square checks.
    bool verify_axioms() const;

    /// 64-bit fingerprint of the multiplication table, used as a cache key.
    std::uint64_t table_hash() const;

    bool is_permutation_group() const { return !perms_.empty(); }
    std::size_t degree() const { return degree_; }
    /// Only valid for permutation groups.
    const Permutation& permutation(Element a) const { return perms_[a]; }

private:
    friend FiniteGroup from_permutation_generators(std::size_t, const std::vector<Permutation>&,
                                                   std::string, std::size_t);
    std::string name_;
    std::size_t order_;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
    std::vector<std::string> labels_;
    std::size_t degree_ = 0;
    std::vector<Permutation> perms_;
};

/// Closure of the generators under composition, enumerated breadth first from
/// the identity. Labels are in disjoint-cycle notation.
FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                        std::string name = {}, std::size_t order_cap = kDefaultOrderCap);

FiniteGroup symmetric(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup alternating(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup cyclic(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
/// The dihedral group of order 2n.
FiniteGroup dihedral(std::size_t n, std::size_t order_cap = kDefaultOrderCap);
FiniteGroup quaternion8();
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           std::size_t order_cap = kDefaultOrderCap);
/// Z_p x| Z_q where the generator of Z_q acts on Z_p as multiplication by k.
FiniteGroup semidirect_cyclic(std::size_t p, std::size_t q, std::size_t k,
                              std::size_t order_cap = kDefaultOrderCap);
/// Affine maps x -> ax + b over Z_p acting on {1..p}.
FiniteGroup agl1(std::size_t p, std::size_t order_cap = kDefaultOrderCap);
/// The even affine maps of agl1(p).
FiniteGroup agl1_cap_alt(std::size_t p, std::size_t order_cap = kDefaultOrderCap);

/// Parity of a set: |S| mod 2.
inline int pty(const ElementSubset& s) { return static_cast<int>(s.count() % 2); }

}  // namespace ggn
