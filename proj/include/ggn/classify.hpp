#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ggn/lattice.hpp"

namespace ggn {

/// x and y are mates when <x, y> = G.
std::vector<Element> mates_of(const FiniteGroup& g, Element x);
/// Nonabelian and every nontrivial element has a mate.
bool is_gamma1(const FiniteGroup& g);

struct NimFormulaResult {
    unsigned nim;
    std::string case_label;
    friend bool operator==(const NimFormulaResult&, const NimFormulaResult&) = default;
};

/// Closed-form DNG value for any nontrivial group: *1 if |G| = 2 or G is odd,
/// *0 if G is cyclic of order divisible by 4 or the even maximal subgroups
/// cover G, *3 otherwise.
NimFormulaResult dng_classify_general(const SubgroupLattice& lattice);

struct RepunitWitness {
    std::uint64_t base;
    unsigned digits;
    friend bool operator==(const RepunitWitness&, const RepunitWitness&) = default;
};

/// Least (q, n), ordered by q, with q a prime power, n >= 2 and
/// p = (q^n - 1)/(q - 1).
std::optional<RepunitWitness> generalized_repunit_witness(std::uint64_t p);

enum class ZetaReason { NotPrime, NotThreeMod4, ExcludedEleven23, RepunitWitness, Zeta };

struct ZetaVerdict {
    std::uint64_t p;
    bool is_zeta;
    ZetaReason reason;
    /// Set exactly when reason == RepunitWitness.
    std::optional<ggn::RepunitWitness> witness;
};

ZetaVerdict is_zeta_prime(std::uint64_t p);
std::vector<std::uint64_t> zeta_primes_up_to(std::uint64_t max);
std::string to_string(ZetaReason reason);

/// Closed-form values for the symmetric and alternating families. Out-of-domain n
/// (a trivial group for DNG, or n = 0) throws NoSuchGame.
NimFormulaResult dng_sym(std::uint64_t n);
NimFormulaResult gen_sym(std::uint64_t n);
NimFormulaResult dng_alt(std::uint64_t n);
NimFormulaResult gen_alt(std::uint64_t n);

/// Whether A_n (n >= 5) has an odd-order maximal subgroup: n prime,
/// n = 3 mod 4 and n not in {7, 11, 23}.
bool odd_maximal_predicate_alt(std::uint64_t n);

enum class Outcome { FirstPlayerWins, SecondPlayerWins };
inline Outcome outcome(unsigned nim) { return nim == 0 ? Outcome::SecondPlayerWins : Outcome::FirstPlayerWins; }
/// "first" / "second".
std::string to_string(Outcome o);

}  // namespace ggn
