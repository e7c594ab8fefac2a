#include "ggn/classify.hpp"

#include "ggn/errors.hpp"
#include "ggn/number_theory.hpp"

namespace ggn {

std::vector<Element> mates_of(const FiniteGroup& g, Element x) {
    std::vector<Element> out;
    ElementSubset pair(g.order());
    pair.set(x);
    for (Element y = 0; y < g.order(); ++y) {
        const bool had = pair.test(y);
        pair.set(y);
        if (g.generates(pair))
            out.push_back(y);
        if (!had)
            pair.reset(y);
    }
    return out;
}

bool is_gamma1(const FiniteGroup& g) {
    if (g.order() < 2 || g.is_abelian())
        return false;
    for (Element x = 1; x < g.order(); ++x) {
        bool has_mate = false;
        ElementSubset pair(g.order());
        pair.set(x);
        for (Element y = 1; y < g.order() && !has_mate; ++y) {
            if (y == x)
                continue;
            pair.set(y);
            has_mate = g.generates(pair);
            pair.reset(y);
        }
        if (!has_mate)
            return false;
    }
    return true;
}

NimFormulaResult dng_classify_general(const SubgroupLattice& lattice) {
    const auto& g = lattice.group();
    if (g.order() < 2)
        throw NoSuchGame("no avoidance game for the trivial group");
    if (g.order() == 2 || g.order() % 2 == 1)
        return {1, "|G|=2 or G odd"};
    if (g.order() % 4 == 0 && g.is_cyclic())
        return {0, "cyclic with |G|=0 mod 4"};
    if (lattice.covered_by_even_maximals())
        return {0, "even maximals cover G"};
    return {3, "otherwise"};
}

std::optional<RepunitWitness> generalized_repunit_witness(std::uint64_t p) {
    // three or more digits force 1 + q + q^2 <= p; two digits mean q = p - 1
    for (std::uint64_t q = 2; 1 + q + q * q <= p; ++q) {
        if (!prime_power(q))
            continue;
        unsigned __int128 sum = 1 + q + q * q, power = q * q;
        unsigned digits = 3;
        while (sum < p) {
            power *= q;
            sum += power;
            ++digits;
        }
        if (sum == p)
            return RepunitWitness{q, digits};
    }
    if (p >= 3 && prime_power(p - 1))
        return RepunitWitness{p - 1, 2};
    return std::nullopt;
}

ZetaVerdict is_zeta_prime(std::uint64_t p) {
    if (!is_prime(p))
        return {p, false, ZetaReason::NotPrime, std::nullopt};
    if (p % 4 != 3)
        return {p, false, ZetaReason::NotThreeMod4, std::nullopt};
    if (p == 11 || p == 23)
        return {p, false, ZetaReason::ExcludedEleven23, std::nullopt};
    if (auto w = generalized_repunit_witness(p))
        return {p, false, ZetaReason::RepunitWitness, w};
    return {p, true, ZetaReason::Zeta, std::nullopt};
}

std::vector<std::uint64_t> zeta_primes_up_to(std::uint64_t max) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= max; ++p)
        if (is_zeta_prime(p).is_zeta)
            out.push_back(p);
    return out;
}

std::string to_string(ZetaReason reason) {
    switch (reason) {
        case ZetaReason::NotPrime: return "not prime";
        case ZetaReason::NotThreeMod4: return "not 3 mod 4";
        case ZetaReason::ExcludedEleven23: return "excluded (11 or 23)";
        case ZetaReason::RepunitWitness: return "generalized repunit prime";
        case ZetaReason::Zeta: return "zeta-prime";
    }
    return "?";
}

NimFormulaResult dng_sym(std::uint64_t n) {
    if (n < 2)
        throw NoSuchGame("DNG(S" + std::to_string(n) + ") does not exist: no avoidance game for the trivial group");
    if (n == 2)
        return {1, "n=2"};
    if (n == 3)
        return {3, "n=3"};
    return {0, "n>=4"};
}

NimFormulaResult gen_sym(std::uint64_t n) {
    if (n < 1)
        throw NoSuchGame("GEN(S0) does not exist");
    if (n == 1 || n == 4)
        return {0, "n=1 or n=4"};
    if (n == 2)
        return {2, "n=2"};
    if (n == 3)
        return {3, "n=3"};
    return {1, "n>=5"};
}

NimFormulaResult dng_alt(std::uint64_t n) {
    if (n < 3)
        throw NoSuchGame("DNG(A" + std::to_string(n) + ") does not exist: no avoidance game for the trivial group");
    // A_3 is cyclic of odd order: its only maximal subgroup is trivial, so the
    // all-maximals-odd criterion gives *1.
    if (n == 3)
        return {1, "n=3"};
    if (n == 4)
        return {3, "n=4"};
    if (is_zeta_prime(n).is_zeta)
        return {3, "zeta-prime"};
    return {0, "otherwise"};
}

NimFormulaResult gen_alt(std::uint64_t n) {
    if (n < 1)
        throw NoSuchGame("GEN(A0) does not exist");
    if (n <= 2)
        return {0, "trivial group"};
    if (n == 3)
        return {2, "n=3"};
    if (n == 4)
        return {3, "n=4"};
    if (is_zeta_prime(n).is_zeta)
        return {4, "zeta-prime"};
    return {1, "otherwise"};
}

bool odd_maximal_predicate_alt(std::uint64_t n) {
    if (n < 5)
        throw InvalidParameter("odd maximal subgroup criterion is stated for n >= 5, got n=" + std::to_string(n));
    return is_prime(n) && n % 4 == 3 && n != 7 && n != 11 && n != 23;
}

std::string to_string(Outcome o) { return o == Outcome::FirstPlayerWins ? "first" : "second"; }

}  // namespace ggn
