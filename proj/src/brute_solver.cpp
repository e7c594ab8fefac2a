#include "ggn/brute_solver.hpp"

#include "ggn/errors.hpp"

namespace ggn {

namespace {

constexpr const char* kScaleMessage = "oracle scale exceeded; use structure solver";

}  // namespace

BruteSolver::BruteSolver(const SubgroupLattice& lattice, GameKind kind, BruteOptions options)
    : lattice_(lattice), group_(lattice.group()), kind_(kind), options_(options) {
    if (kind == GameKind::Dng && group_.order() == 1)
        throw NoSuchGame("no avoidance game for the trivial group");
    if (options_.mode == MemoMode::ExactSet) {
        for (auto id : lattice.maximal_ids())
            if (lattice.subgroups()[id].order() > options_.max_maximal_order)
                throw OracleScaleExceeded(std::string(kScaleMessage) + " (maximal subgroup of order " +
                                          std::to_string(lattice.subgroups()[id].order()) + ")");
    } else {
        join_cache_.resize(lattice.subgroups().size());
        subgroup_memo_.assign(lattice.subgroups().size(), {-1, -1});
    }
}

const std::vector<bool>& BruteSolver::generating_extensions(const ElementSubset& closure) {
    auto it = generating_cache_.find(closure);
    if (it != generating_cache_.end())
        return it->second;
    std::vector<bool> gen(group_.order(), false);
    if (closure.count() == group_.order()) {
        gen.assign(group_.order(), true);
    } else {
        for (Element g = 0; g < group_.order(); ++g)
            if (!closure.test(g))
                gen[g] = group_.join(closure, g).count() == group_.order();
    }
    return generating_cache_.emplace(closure, std::move(gen)).first->second;
}

std::vector<Element> BruteSolver::legal_moves(const ElementSubset& position) const {
    std::vector<Element> moves;
    const auto closure = group_.closure(position);
    if (closure.count() == group_.order())
        return moves;
    for (Element g = 0; g < group_.order(); ++g) {
        if (position.test(g))
            continue;
        if (kind_ == GameKind::Dng && !closure.test(g) && group_.join(closure, g).count() == group_.order())
            continue;
        moves.push_back(g);
    }
    return moves;
}

bool BruteSolver::is_terminal(const ElementSubset& position) const { return legal_moves(position).empty(); }

unsigned BruteSolver::exact_nim(const ElementSubset& position) {
    if (auto it = exact_memo_.find(position); it != exact_memo_.end())
        return it->second;
    if (exact_memo_.size() >= options_.state_budget)
        throw OracleScaleExceeded(kScaleMessage);

    const auto closure = group_.closure(position);
    std::vector<unsigned> values;
    if (closure.count() != group_.order()) {
        const std::vector<bool>& generating = generating_extensions(closure);
        ElementSubset next = position;
        for (Element g = 0; g < group_.order(); ++g) {
            if (position.test(g))
                continue;
            if (generating[g]) {
                if (kind_ == GameKind::Gen)
                    values.push_back(0);
                continue;
            }
            next.set(g);
            values.push_back(exact_nim(next));
            next.reset(g);
        }
    }
    const unsigned value = mex(values);
    exact_memo_.emplace(position, value);
    return value;
}

std::size_t BruteSolver::join_id(std::size_t subgroup, Element g) {
    auto& row = join_cache_[subgroup];
    if (row.empty()) {
        const auto& members = lattice_.subgroups()[subgroup].members;
        row.assign(group_.order(), subgroup);
        for (Element x = 0; x < group_.order(); ++x)
            if (!members.test(x))
                row[x] = lattice_.find(group_.join(members, x)).value();
    }
    return row[g];
}

unsigned BruteSolver::subgroup_nim(std::size_t subgroup, unsigned parity) {
    auto& slot = subgroup_memo_[subgroup][parity];
    if (slot >= 0)
        return static_cast<unsigned>(slot);
    const std::size_t whole = lattice_.subgroups().size() - 1;
    if (subgroup == whole)
        return 0;

    const auto& members = lattice_.subgroups()[subgroup].members;
    const unsigned own_parity = static_cast<unsigned>(members.count() % 2);
    std::vector<unsigned> values;
    // a position of the subgroup's own parity is represented by the subgroup
    // itself; the opposite parity additionally reaches that representative
    const unsigned next_parity = parity == own_parity ? 1 - own_parity : own_parity;
    if (parity != own_parity)
        values.push_back(subgroup_nim(subgroup, own_parity));
    for (Element g = 0; g < group_.order(); ++g) {
        if (members.test(g))
            continue;
        const std::size_t k = join_id(subgroup, g);
        if (k == whole) {
            if (kind_ == GameKind::Gen)
                values.push_back(0);
            continue;
        }
        values.push_back(subgroup_nim(k, next_parity));
    }
    const unsigned value = mex(values);
    subgroup_memo_[subgroup][parity] = static_cast<int>(value);
    return value;
}

unsigned BruteSolver::nim(const ElementSubset& position) {
    const auto closure = group_.closure(position);
    if (closure.count() == group_.order()) {
        if (kind_ == GameKind::Dng)
            throw InvalidParameter("generating set is not a position of the avoidance game");
        return 0;
    }
    if (options_.mode == MemoMode::ExactSet)
        return exact_nim(position);
    return subgroup_nim(lattice_.find(closure).value(), static_cast<unsigned>(position.count() % 2));
}

unsigned BruteSolver::option_nim(const ElementSubset& position, Element g) {
    ElementSubset next = position;
    next.set(g);
    if (group_.generates(next))
        return 0;
    return nim(next);
}

std::vector<Element> BruteSolver::winning_first_moves() {
    const auto start = group_.empty_subset();
    std::vector<Element> out;
    for (Element g : legal_moves(start))
        if (option_nim(start, g) == 0)
            out.push_back(g);
    return out;
}

MoveAdvice BruteSolver::optimal_move(const ElementSubset& position) {
    const auto moves = legal_moves(position);
    if (moves.empty())
        return TerminalPosition{};
    for (Element g : moves)
        if (option_nim(position, g) == 0)
            return WinningMove{g};
    return NoWinningMove{moves.front()};
}

MemoMode preferred_mode(const SubgroupLattice& lattice, const BruteOptions& options) {
    for (auto id : lattice.maximal_ids())
        if (lattice.subgroups()[id].order() > options.max_maximal_order)
            return MemoMode::GeneratedSubgroupParity;
    return MemoMode::ExactSet;
}

unsigned brute_nim(const SubgroupLattice& lattice, GameKind kind, MemoMode mode) {
    BruteOptions options;
    options.mode = mode;
    return BruteSolver(lattice, kind, options).game_nim();
}

std::vector<Element> winning_first_moves(const SubgroupLattice& lattice, GameKind kind) {
    BruteOptions options;
    options.mode = preferred_mode(lattice);
    return BruteSolver(lattice, kind, options).winning_first_moves();
}

MoveAdvice optimal_move(const SubgroupLattice& lattice, GameKind kind, const ElementSubset& position) {
    BruteOptions options;
    options.mode = preferred_mode(lattice);
    return BruteSolver(lattice, kind, options).optimal_move(position);
}

std::vector<Element> dng_uncovered_elements(const SubgroupLattice& lattice) {
    const auto& group = lattice.group();
    ElementSubset covered(group.order());
    for (auto id : lattice.maximal_ids())
        if (lattice.subgroups()[id].order() % 2 == 0)
            covered |= lattice.subgroups()[id].members;
    std::vector<Element> out;
    for (Element g = 0; g < group.order(); ++g)
        if (!covered.test(g))
            out.push_back(g);
    return out;
}

}  // namespace ggn
