#include "ggn/number_theory.hpp"

#include <array>
#include <vector>

#include "ggn/errors.hpp"

namespace ggn {

namespace {

constexpr std::size_t kSieveLimit = 1000;

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        std::array<bool, kSieveLimit + 1> composite{};
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i <= kSieveLimit; ++i) {
            if (composite[i])
                continue;
            out.push_back(i);
            for (std::uint32_t j = i * i; j <= kSieveLimit; j += i)
                composite[j] = true;
        }
        return out;
    }();
    return primes;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (auto p : small_primes()) {
        if (std::uint64_t{p} * p > n)
            return true;
        if (n % p == 0)
            return n == p;
    }
    for (std::uint64_t d = kSieveLimit + 1; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
    if (n < 2)
        return std::nullopt;
    std::uint64_t p = 0;
    for (auto sp : small_primes()) {
        if (n % sp == 0) {
            p = sp;
            break;
        }
        if (std::uint64_t{sp} * sp > n)
            break;
    }
    if (p == 0) {
        for (std::uint64_t d = kSieveLimit + 1; d * d <= n; d += 2)
            if (n % d == 0) {
                p = d;
                break;
            }
        if (p == 0)
            return std::make_pair(n, 1u);
    }
    unsigned k = 0;
    while (n % p == 0) {
        n /= p;
        ++k;
    }
    if (n != 1)
        return std::nullopt;
    return std::make_pair(p, k);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1)
        return 0;
    std::uint64_t result = 1;
    base %= mod;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, mod);
        base = mul_mod(base, base, mod);
        exp >>= 1;
    }
    return result;
}

std::uint64_t primitive_root(std::uint64_t p) {
    if (!is_prime(p))
        throw InvalidParameter("primitive root requested for non-prime " + std::to_string(p));
    if (p == 2)
        return 1;
    std::vector<std::uint64_t> factors;
    std::uint64_t m = p - 1;
    for (std::uint64_t d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            factors.push_back(d);
            while (m % d == 0)
                m /= d;
        }
    if (m > 1)
        factors.push_back(m);
    for (std::uint64_t g = 2;; ++g) {
        bool ok = true;
        for (auto f : factors)
            if (pow_mod(g, (p - 1) / f, p) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
}

}  // namespace ggn
