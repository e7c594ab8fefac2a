#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ggn/lattice.hpp"

namespace ggn {

enum class GameKind { Dng, Gen };

/// "dng" / "gen".
std::string to_string(GameKind kind);

/// Minimum excludant: the least natural number not in `values`.
unsigned mex(std::span<const unsigned> values);
inline unsigned nim_sum(unsigned a, unsigned b) { return a ^ b; }

/// (parity of the class subgroup, nim of even positions, nim of odd positions).
struct TypeTriple {
    unsigned parity = 0;
    unsigned nim_even = 0;
    unsigned nim_odd = 0;

    /// Nim value of positions of the given parity.
    unsigned component(unsigned position_parity) const { return position_parity == 0 ? nim_even : nim_odd; }
    std::string to_string() const;
    friend auto operator<=>(const TypeTriple&, const TypeTriple&) = default;
};

inline constexpr unsigned kNimSanityBound = 16;

/// Type of a structure class of the given parity from the types of its option
/// classes.
///
/// The full representative I has only cross-class options, so its value is the
/// mex over the options' opposite-parity components. Every other position also
/// reaches the class's own opposite-parity positions, so that value is
/// mex of the options' same-parity components together with the first value.
TypeTriple compute_class_type(unsigned parity, std::span<const TypeTriple> option_types);

/// A class node: an intersection subgroup or the terminal class of GEN.
using ClassNode = Ceiling;

/// Option classes of X_I: { ceil(I ∪ {g}) : g ∉ I }. Generating extensions are
/// dropped for DNG and become TopMarker for GEN. Sorted, without duplicates.
std::vector<ClassNode> class_options(const SubgroupLattice& lattice, IntersectionId id, GameKind kind);

struct ClassInfo {
    IntersectionId id;
    std::size_t subgroup_order;
    TypeTriple type;
    std::vector<ClassNode> options;
};

/// The structure-class DAG of one game with every class's type.
struct StructureClassGraph {
    GameKind kind;
    /// Indexed by IntersectionId.
    std::vector<ClassInfo> classes;
    /// Only meaningful for GEN.
    TypeTriple top_type;
    std::size_t group_order;

    const TypeTriple& type_of(const ClassNode& node) const;
    const ClassInfo& root() const { return classes.front(); }
};

/// Evaluates the DAG from the largest classes down. The lattice must belong to
/// a nontrivial group.
StructureClassGraph build_class_graph(const SubgroupLattice& lattice, GameKind kind);

struct ClassRow {
    std::size_t subgroup_order;
    unsigned parity;
    TypeTriple type;
    /// Option classes by row index; `top` marks the GEN terminal class.
    std::vector<std::size_t> options;
    bool has_top_option = false;
};

struct GameReport {
    std::string group;
    GameKind kind;
    unsigned nim = 0;
    TypeTriple root_type;
    std::vector<ClassRow> class_table;
    std::chrono::milliseconds elapsed{0};
};

/// Solves DNG(G) or GEN(G) through the structure classes.
/// Throws NoSuchGame for DNG of the trivial group.
GameReport solve(const SubgroupLattice& lattice, GameKind kind);
GameReport solve(const FiniteGroup& group, GameKind kind, const LatticeOptions& options = {});

/// Types of the option classes of the Frattini class; empty for the trivial group.
std::set<TypeTriple> otype_of_root(const SubgroupLattice& lattice, GameKind kind);

}  // namespace ggn
