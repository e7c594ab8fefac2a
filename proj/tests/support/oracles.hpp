#pragma once

// Independent reference computations used only by the tests. They work on the
// raw multiplication table with 64-bit masks and share no code with the
// library's lattice or solvers, so they are limited to groups of order <= 24.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ggn/group.hpp"
#include "ggn/structure_solver.hpp"

namespace oracle {

using Mask = std::uint64_t;

inline Mask bit(ggn::Element e) { return Mask{1} << e; }

inline Mask to_mask(const ggn::ElementSubset& s) {
    Mask m = 0;
    s.for_each([&](std::size_t x) { m |= Mask{1} << x; });
    return m;
}

inline void require_small(const ggn::FiniteGroup& g) {
    if (g.order() > 24)
        throw std::invalid_argument("oracle limited to order <= 24");
}

/// Subgroup generated by a mask: saturate under products until stable.
inline Mask closure(const ggn::FiniteGroup& g, Mask m) {
    m |= 1;
    const auto n = static_cast<ggn::Element>(g.order());
    for (bool grew = true; grew;) {
        grew = false;
        for (ggn::Element a = 0; a < n; ++a) {
            if (!(m >> a & 1))
                continue;
            for (ggn::Element b = 0; b < n; ++b)
                if ((m >> b & 1) && !(m >> g.mul(a, b) & 1)) {
                    m |= bit(g.mul(a, b));
                    grew = true;
                }
        }
    }
    return m;
}

inline bool is_closed(const ggn::FiniteGroup& g, Mask m) {
    const auto n = static_cast<ggn::Element>(g.order());
    for (ggn::Element a = 0; a < n; ++a)
        for (ggn::Element b = 0; b < n && (m >> a & 1); ++b)
            if ((m >> b & 1) && !(m >> g.mul(a, b) & 1))
                return false;
    return true;
}

/// Every subgroup, found by testing each subset containing the identity for
/// closure under multiplication (finite nonempty closed subsets are subgroups).
inline std::vector<Mask> subgroups_by_subset_scan(const ggn::FiniteGroup& g) {
    if (g.order() > 16)
        throw std::invalid_argument("subset scan limited to order <= 16");
    std::vector<Mask> out;
    const Mask others = Mask{1} << (g.order() - 1);
    for (Mask rest = 0; rest < others; ++rest) {
        const Mask m = 1 | (rest << 1);
        if (is_closed(g, m))
            out.push_back(m);
    }
    return out;
}

/// Nim value of DNG/GEN by plain mex recursion over chosen-element masks.
class NaiveGame {
public:
    NaiveGame(const ggn::FiniteGroup& g, ggn::GameKind kind) : g_(g), kind_(kind) {
        require_small(g);
        full_ = g.order() == 64 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
    }

    bool generates(Mask m) { return closure_of(m) == full_; }

    unsigned nim(Mask position) {
        if (auto it = memo_.find(position); it != memo_.end())
            return it->second;
        if (kind_ == ggn::GameKind::Gen && generates(position))
            return memo_[position] = 0;
        std::vector<bool> seen(g_.order() + 2, false);
        for (ggn::Element x = 0; x < g_.order(); ++x) {
            if (position >> x & 1)
                continue;
            const Mask next = position | bit(x);
            if (kind_ == ggn::GameKind::Dng && generates(next))
                continue;
            const unsigned v = nim(next);
            if (v < seen.size())
                seen[v] = true;
        }
        unsigned m = 0;
        while (seen[m])
            ++m;
        return memo_[position] = m;
    }

    /// Number of positions visited from the empty set.
    std::size_t positions() const { return memo_.size(); }

private:
    Mask closure_of(Mask m) {
        if (auto it = closures_.find(m); it != closures_.end())
            return it->second;
        return closures_[m] = closure(g_, m);
    }

    const ggn::FiniteGroup& g_;
    ggn::GameKind kind_;
    Mask full_;
    std::unordered_map<Mask, unsigned> memo_;
    std::unordered_map<Mask, Mask> closures_;
};

inline std::vector<ggn::Element> random_elements(std::mt19937& rng, const ggn::FiniteGroup& g, std::size_t count) {
    std::uniform_int_distribution<ggn::Element> pick(0, static_cast<ggn::Element>(g.order() - 1));
    std::vector<ggn::Element> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(pick(rng));
    return out;
}

}  // namespace oracle
