#include <algorithm>

#include "doctest.h"
#include "oracles.hpp"

#include "ggn/brute_solver.hpp"
#include "ggn/catalog.hpp"
#include "ggn/errors.hpp"

using namespace ggn;

namespace {

Element by_label(const FiniteGroup& g, const std::string& label) {
    auto e = g.find_label(label);
    REQUIRE_MESSAGE(e.has_value(), "missing label " << label);
    return *e;
}

/// Number of non-generating subsets: the union over maximal subgroups M of the
/// power sets of M, counted by inclusion-exclusion over families of maximals.
std::size_t nongenerating_subsets(const SubgroupLattice& lattice) {
    std::vector<oracle::Mask> maximals;
    for (auto id : lattice.maximal_ids())
        maximals.push_back(oracle::to_mask(lattice.subgroups()[id].members));
    REQUIRE(maximals.size() < 20);
    long long total = 0;
    for (std::uint32_t family = 1; family < (1u << maximals.size()); ++family) {
        oracle::Mask inter = ~oracle::Mask{0};
        for (std::size_t i = 0; i < maximals.size(); ++i)
            if (family >> i & 1)
                inter &= maximals[i];
        const long long term = 1LL << std::popcount(inter);
        total += std::popcount(family) % 2 ? term : -term;
    }
    return static_cast<std::size_t>(total);
}

const std::vector<CatalogEntry>& catalog() {
    static const auto c = default_catalog();
    return c;
}

}  // namespace

TEST_CASE("brute force values") {
    const auto s3 = symmetric(3);
    CHECK(brute_nim(SubgroupLattice::compute(s3), GameKind::Dng, MemoMode::ExactSet) == 3);
    const auto trivial = cyclic(1);
    CHECK(brute_nim(SubgroupLattice::compute(trivial), GameKind::Gen, MemoMode::ExactSet) == 0);
    const auto a4 = alternating(4);
    CHECK(brute_nim(SubgroupLattice::compute(a4), GameKind::Gen, MemoMode::ExactSet) == 3);
    CHECK_THROWS_AS(BruteSolver(SubgroupLattice::compute(trivial), GameKind::Dng), NoSuchGame);
}

TEST_CASE("winning first moves") {
    const auto s4 = symmetric(4);
    CHECK(winning_first_moves(SubgroupLattice::compute(s4), GameKind::Dng).empty());

    const auto s3 = symmetric(3);
    CHECK(winning_first_moves(SubgroupLattice::compute(s3), GameKind::Dng) ==
          std::vector<Element>{std::min(by_label(s3, "(1 2 3)"), by_label(s3, "(1 3 2)")),
                               std::max(by_label(s3, "(1 2 3)"), by_label(s3, "(1 3 2)"))});

    const auto s5 = symmetric(5);
    const auto w = winning_first_moves(SubgroupLattice::compute(s5), GameKind::Gen);
    CHECK(std::find(w.begin(), w.end(), Element{0}) != w.end());
}

TEST_CASE("winning first moves are empty exactly for second-player wins") {
    for (const auto& entry : catalog()) {
        const auto g = entry.build();
        CAPTURE(g.name());
        const auto lattice = SubgroupLattice::compute(g);
        for (auto kind : {GameKind::Dng, GameKind::Gen}) {
            if (kind == GameKind::Dng && g.order() == 1)
                continue;
            BruteOptions opts;
            opts.mode = preferred_mode(lattice);
            BruteSolver solver(lattice, kind, opts);
            const auto nim = solver.game_nim();
            const auto w = solver.winning_first_moves();
            CHECK(w.empty() == (nim == 0));
            for (auto x : w)
                CHECK(solver.option_nim(g.empty_subset(), x) == 0);
        }
    }
}

TEST_CASE("elements outside every even maximal subgroup") {
    const auto s3 = symmetric(3);
    CHECK(dng_uncovered_elements(SubgroupLattice::compute(s3)).size() == 2);
    const auto s4 = symmetric(4);
    CHECK(dng_uncovered_elements(SubgroupLattice::compute(s4)).empty());
    const auto z15 = cyclic(15);
    CHECK(dng_uncovered_elements(SubgroupLattice::compute(z15)).size() == 15);
}

TEST_CASE("optimal moves") {
    const auto s3 = symmetric(3);
    const auto l3 = SubgroupLattice::compute(s3);
    const auto first_three_cycle = std::min(by_label(s3, "(1 2 3)"), by_label(s3, "(1 3 2)"));
    CHECK(optimal_move(l3, GameKind::Dng, s3.empty_subset()) == MoveAdvice{WinningMove{first_three_cycle}});

    // GEN(Z_2): selecting the generator wins at once; selecting e hands the win over
    const auto z2 = cyclic(2);
    CHECK(optimal_move(SubgroupLattice::compute(z2), GameKind::Gen, z2.empty_subset()) ==
          MoveAdvice{WinningMove{1}});

    // DNG(Z_4) after {0}: adding 2 gives the terminal non-generating set <2>
    const auto z4 = cyclic(4);
    const auto l4 = SubgroupLattice::compute(z4);
    CHECK(optimal_move(l4, GameKind::Dng, z4.subset({0})) == MoveAdvice{WinningMove{2}});
    // from the start the mover loses; the lowest legal move is reported
    CHECK(optimal_move(l4, GameKind::Dng, z4.empty_subset()) == MoveAdvice{NoWinningMove{0}});
    CHECK(optimal_move(l4, GameKind::Dng, z4.subset({0, 2})) == MoveAdvice{TerminalPosition{}});
}

TEST_CASE("legal moves follow the game rules") {
    const auto z4 = cyclic(4);
    const auto l4 = SubgroupLattice::compute(z4);
    BruteSolver dng(l4, GameKind::Dng);
    CHECK(dng.legal_moves(z4.empty_subset()) == std::vector<Element>{0, 2});
    CHECK(dng.is_terminal(z4.subset({0, 2})));
    BruteSolver gen(l4, GameKind::Gen);
    CHECK(gen.legal_moves(z4.empty_subset()) == std::vector<Element>{0, 1, 2, 3});
    CHECK(gen.is_terminal(z4.subset({1})));
    CHECK(gen.legal_moves(z4.subset({1})).empty());
}

TEST_CASE("both memo modes and an independent recursion agree") {
    std::size_t pairs = 0;
    for (const auto& entry : catalog()) {
        const auto g = entry.build();
        CAPTURE(g.name());
        const auto lattice = SubgroupLattice::compute(g);
        for (auto kind : {GameKind::Dng, GameKind::Gen}) {
            if (kind == GameKind::Dng && g.order() == 1)
                continue;
            CAPTURE(to_string(kind));
            const auto parity = brute_nim(lattice, kind, MemoMode::GeneratedSubgroupParity);
            CHECK(parity == solve(lattice, kind).nim);
            if (preferred_mode(lattice) == MemoMode::ExactSet) {
                CHECK(brute_nim(lattice, kind, MemoMode::ExactSet) == parity);
                ++pairs;
            }
            if (g.order() <= 16) {
                oracle::NaiveGame naive(g, kind);
                CHECK(naive.nim(0) == parity);
            }
        }
    }
    CHECK(pairs >= 20);
}

TEST_CASE("exact-set search visits every non-generating subset in DNG") {
    for (const auto& g : {symmetric(3), cyclic(12), alternating(4), dihedral(4), quaternion8(), dihedral(6)}) {
        CAPTURE(g.name());
        const auto lattice = SubgroupLattice::compute(g);
        BruteSolver solver(lattice, GameKind::Dng);
        solver.game_nim();
        CHECK(solver.explored_positions() == nongenerating_subsets(lattice));
    }
}

TEST_CASE("exact-set mode refuses groups beyond its bounds") {
    const auto s5 = symmetric(5);
    const auto lattice = SubgroupLattice::compute(s5);
    CHECK_THROWS_AS(BruteSolver(lattice, GameKind::Gen), OracleScaleExceeded);
    CHECK(preferred_mode(lattice) == MemoMode::GeneratedSubgroupParity);
    CHECK(brute_nim(lattice, GameKind::Gen, MemoMode::GeneratedSubgroupParity) == 1);

    const auto a4 = alternating(4);
    const auto la4 = SubgroupLattice::compute(a4);
    BruteOptions tiny;
    tiny.state_budget = 10;
    CHECK_THROWS_AS(BruteSolver(la4, GameKind::Dng, tiny).game_nim(), OracleScaleExceeded);
}

TEST_CASE("nim of a position depends only on its generated subgroup and parity") {
    const auto g = dihedral(4);
    const auto lattice = SubgroupLattice::compute(g);
    BruteSolver exact(lattice, GameKind::Gen);
    BruteOptions p;
    p.mode = MemoMode::GeneratedSubgroupParity;
    BruteSolver coarse(lattice, GameKind::Gen, p);
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << g.order()); m += 7) {
        auto s = g.empty_subset();
        for (Element x = 0; x < g.order(); ++x)
            if (m >> x & 1)
                s.set(x);
        CHECK(exact.nim(s) == coarse.nim(s));
    }
}
