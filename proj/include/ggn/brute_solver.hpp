#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "ggn/lattice.hpp"
#include "ggn/structure_solver.hpp"

namespace ggn {

enum class MemoMode {
    /// Memo keyed by the exact chosen set; shares nothing with the class calculus.
    ExactSet,
    /// Memo keyed by (generated subgroup, parity of the chosen set).
    GeneratedSubgroupParity,
};

struct BruteOptions {
    MemoMode mode = MemoMode::ExactSet;
    /// ExactSet refuses groups with a maximal subgroup larger than this.
    std::size_t max_maximal_order = 16;
    /// Hard ceiling on memoized positions in either mode.
    std::size_t state_budget = std::size_t{1} << 22;
};

struct WinningMove {
    Element element;
    friend bool operator==(const WinningMove&, const WinningMove&) = default;
};
/// Every legal move loses against best play; carries the lowest legal one.
struct NoWinningMove {
    Element element;
    friend bool operator==(const NoWinningMove&, const NoWinningMove&) = default;
};
struct TerminalPosition {
    friend bool operator==(const TerminalPosition&, const TerminalPosition&) = default;
};
using MoveAdvice = std::variant<WinningMove, NoWinningMove, TerminalPosition>;

/// Direct mex recursion over the positions of DNG(G) or GEN(G).
///
/// The lattice is consulted only for the ExactSet size precheck and as the
/// subgroup universe of the parity mode; nim values in ExactSet mode come from
/// the game rules alone.
class BruteSolver {
public:
    /// Throws OracleScaleExceeded if ExactSet mode is out of bounds and
    /// NoSuchGame for DNG of the trivial group.
    BruteSolver(const SubgroupLattice& lattice, GameKind kind, BruteOptions options = {});

    /// Nim value of a legal position.
    unsigned nim(const ElementSubset& position);
    unsigned game_nim() { return nim(group_.empty_subset()); }

    /// Elements that may be added to `position` under the game rules, ascending.
    /// Empty for terminal positions.
    std::vector<Element> legal_moves(const ElementSubset& position) const;
    bool is_terminal(const ElementSubset& position) const;
    /// Nim value of position ∪ {g}; 0 when that set generates (GEN terminal).
    unsigned option_nim(const ElementSubset& position, Element g);

    /// First selections whose resulting position has nim 0.
    std::vector<Element> winning_first_moves();
    MoveAdvice optimal_move(const ElementSubset& position);

    /// Distinct positions memoized so far (ExactSet mode).
    std::size_t explored_positions() const { return exact_memo_.size(); }
    GameKind kind() const { return kind_; }
    MemoMode mode() const { return options_.mode; }

private:
    unsigned exact_nim(const ElementSubset& position);
    unsigned subgroup_nim(std::size_t subgroup, unsigned parity);
    std::size_t join_id(std::size_t subgroup, Element g);
    const std::vector<bool>& generating_extensions(const ElementSubset& closure);

    const SubgroupLattice& lattice_;
    const FiniteGroup& group_;
    GameKind kind_;
    BruteOptions options_;
    std::unordered_map<ElementSubset, unsigned, BitsetHash> exact_memo_;
    std::unordered_map<ElementSubset, std::vector<bool>, BitsetHash> generating_cache_;
    std::vector<std::vector<std::size_t>> join_cache_;
    std::vector<std::array<int, 2>> subgroup_memo_;
};

/// Nim value of the starting position.
unsigned brute_nim(const SubgroupLattice& lattice, GameKind kind, MemoMode mode = MemoMode::ExactSet);

std::vector<Element> winning_first_moves(const SubgroupLattice& lattice, GameKind kind);
MoveAdvice optimal_move(const SubgroupLattice& lattice, GameKind kind, const ElementSubset& position);

/// Elements lying in no even-order maximal subgroup.
std::vector<Element> dng_uncovered_elements(const SubgroupLattice& lattice);

/// ExactSet when every maximal subgroup is small enough, else the parity mode.
MemoMode preferred_mode(const SubgroupLattice& lattice, const BruteOptions& options = {});

}  // namespace ggn
