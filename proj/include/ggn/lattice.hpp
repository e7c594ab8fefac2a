#pragma once

#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ggn/group.hpp"

namespace ggn {

inline constexpr std::size_t kDefaultLatticeCap = 400;
inline constexpr std::size_t kStretchLatticeCap = 720;

struct LatticeOptions {
    /// Largest group order accepted for subgroup enumeration.
    std::size_t cap = kDefaultLatticeCap;
    /// Directory for cached subgroup lists; nullopt disables the cache.
    std::optional<std::filesystem::path> cache_dir;
    /// Worker threads for join enumeration; 0 picks the hardware concurrency.
    unsigned workers = 0;
};

struct Subgroup {
    ElementSubset members;
    std::size_t order() const { return members.count(); }
    friend bool operator==(const Subgroup&, const Subgroup&) = default;
};

/// Position of an intersection subgroup within `SubgroupLattice::intersections()`.
struct IntersectionId {
    std::size_t value;
    friend auto operator<=>(const IntersectionId&, const IntersectionId&) = default;
};

/// The whole group as a structure class: reached exactly by generating sets.
struct TopMarker {
    friend auto operator<=>(const TopMarker&, const TopMarker&) = default;
};

using Ceiling = std::variant<IntersectionId, TopMarker>;

/// Every subgroup of a finite group, with the maximal subgroups, the Frattini
/// subgroup and the intersection subgroups (all intersections of nonempty sets
/// of maximal subgroups).
///
/// Subgroups are sorted by order and then by member set, so id 0 is the trivial
/// subgroup and the last id is the whole group. The lattice refers to the group
/// it was computed from, which must outlive it.
class SubgroupLattice {
public:
    static SubgroupLattice compute(const FiniteGroup& group, const LatticeOptions& options = {});

    const FiniteGroup& group() const { return *group_; }
    const std::vector<Subgroup>& subgroups() const { return subgroups_; }
    std::optional<std::size_t> find(const ElementSubset& members) const;

    /// Ids of the maximal subgroups; empty for the trivial group.
    const std::vector<std::size_t>& maximal_ids() const { return maximal_ids_; }
    /// Throws InvalidParameter for the trivial group, which has no maximal subgroup.
    std::size_t frattini_id() const;
    const Subgroup& frattini() const { return subgroups_[frattini_id()]; }

    /// Subgroup ids of the intersection subgroups in ascending order; the
    /// Frattini subgroup comes first.
    const std::vector<std::size_t>& intersection_ids() const { return intersection_ids_; }
    std::size_t intersection_count() const { return intersection_ids_.size(); }
    const Subgroup& intersection(IntersectionId id) const { return subgroups_[intersection_ids_[id.value]]; }
    bool leq(IntersectionId a, IntersectionId b) const;

    /// Maximal subgroups containing g, as a bit set over positions in maximal_ids().
    const Bitset& maximals_containing(Element g) const { return element_masks_[g]; }
    /// Smallest intersection subgroup containing s, or TopMarker if s generates.
    Ceiling ceil(const ElementSubset& s) const;
    /// ceil(I ∪ {g}) for an intersection subgroup I.
    Ceiling ceil_extend(IntersectionId id, Element g) const;

    bool covered_by_even_maximals() const;

private:
    Ceiling ceil_from_mask(const Bitset& mask) const;
    void derive();

    const FiniteGroup* group_ = nullptr;
    std::vector<Subgroup> subgroups_;
    std::unordered_map<ElementSubset, std::size_t, BitsetHash> index_;
    std::vector<std::size_t> maximal_ids_;
    std::vector<std::size_t> intersection_ids_;
    std::vector<Bitset> element_masks_;
    std::vector<Bitset> intersection_masks_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> mask_to_intersection_;
};

/// Every subgroup of G, enumerated from the cyclic subgroups by repeated joins.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const LatticeOptions& options = {});
/// Throws InvalidParameter ("no proper subgroups") for the trivial group.
std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice);
Subgroup frattini(const SubgroupLattice& lattice);
std::vector<Subgroup> intersection_subgroups(const SubgroupLattice& lattice);

}  // namespace ggn
