#include "ggn/group.hpp"

#include <numeric>
#include <unordered_map>

#include "ggn/errors.hpp"
#include "ggn/number_theory.hpp"

namespace ggn {

namespace {

/// Incrementally grows the subgroup generated by a list of elements.
class ClosureBuilder {
public:
    explicit ClosureBuilder(const FiniteGroup& g) : group_(g), members_(g.order()) {
        members_.set(0);
        list_.push_back(0);
    }

    bool contains(Element x) const { return members_.test(x); }

    void add_generator(Element s) {
        if (members_.test(s))
            return;
        const std::size_t old_size = list_.size();
        gens_.push_back(s);
        for (std::size_t i = 0; i < list_.size(); ++i) {
            const Element x = list_[i];
            // old elements are already closed under the old generators
            const std::size_t first_gen = i < old_size ? gens_.size() - 1 : 0;
            for (std::size_t j = first_gen; j < gens_.size(); ++j) {
                const Element y = group_.mul(x, gens_[j]);
                if (!members_.test(y)) {
                    members_.set(y);
                    list_.push_back(y);
                }
            }
        }
    }

    ElementSubset take() && { return std::move(members_); }

private:
    const FiniteGroup& group_;
    ElementSubset members_;
    std::vector<Element> list_;
    std::vector<Element> gens_;
};

std::string cyclic_label(std::size_t i) { return i == 0 ? "e" : std::to_string(i); }

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::size_t order, std::vector<Element> table,
                         std::vector<std::string> labels)
    : name_(std::move(name)), order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    if (order_ == 0 || table_.size() != order_ * order_ || labels_.size() != order_)
        throw InvalidParameter("inconsistent multiplication table dimensions");
    inverse_.assign(order_, 0);
    for (Element a = 0; a < order_; ++a) {
        bool found = false;
        for (Element b = 0; b < order_; ++b) {
            if (mul(a, b) == 0) {
                inverse_[a] = b;
                found = true;
                break;
            }
        }
        if (!found)
            throw InvalidParameter("element " + labels_[a] + " has no inverse");
    }
}

std::optional<Element> FiniteGroup::find_label(const std::string& label) const {
    for (Element a = 0; a < order_; ++a)
        if (labels_[a] == label)
            return a;
    return std::nullopt;
}

std::size_t FiniteGroup::element_order(Element a) const {
    std::size_t n = 1;
    for (Element x = a; x != 0; x = mul(x, a))
        ++n;
    return n;
}

bool FiniteGroup::is_abelian() const {
    for (Element a = 0; a < order_; ++a)
        for (Element b = a + 1; b < order_; ++b)
            if (mul(a, b) != mul(b, a))
                return false;
    return true;
}

bool FiniteGroup::is_cyclic() const {
    for (Element a = 0; a < order_; ++a)
        if (element_order(a) == order_)
            return true;
    return false;
}

std::size_t FiniteGroup::exponent() const {
    std::size_t e = 1;
    for (Element a = 0; a < order_; ++a)
        e = std::lcm(e, element_order(a));
    return e;
}

ElementSubset FiniteGroup::subset(const std::vector<Element>& elements) const {
    ElementSubset s(order_);
    for (auto x : elements) {
        if (x >= order_)
            throw InvalidParameter("element index " + std::to_string(x) + " out of range");
        s.set(x);
    }
    return s;
}

ElementSubset FiniteGroup::closure(const ElementSubset& s) const {
    ClosureBuilder builder(*this);
    s.for_each([&](std::size_t x) { builder.add_generator(static_cast<Element>(x)); });
    return std::move(builder).take();
}

ElementSubset FiniteGroup::join(const ElementSubset& subgroup, Element g) const {
    ClosureBuilder builder(*this);
    subgroup.for_each([&](std::size_t x) { builder.add_generator(static_cast<Element>(x)); });
    builder.add_generator(g);
    return std::move(builder).take();
}

bool FiniteGroup::verify_axioms() const {
    for (Element a = 0; a < order_; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a || mul(a, inv(a)) != 0)
            return false;
        std::vector<bool> row(order_, false), col(order_, false);
        for (Element b = 0; b < order_; ++b) {
            if (row[mul(a, b)] || col[mul(b, a)])
                return false;
            row[mul(a, b)] = true;
            col[mul(b, a)] = true;
        }
    }
    for (Element a = 0; a < order_; ++a)
        for (Element b = 0; b < order_; ++b) {
            const Element ab = mul(a, b);
            for (Element c = 0; c < order_; ++c)
                if (mul(ab, c) != mul(a, mul(b, c)))
                    return false;
        }
    return true;
}

std::uint64_t FiniteGroup::table_hash() const {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(order_);
    for (auto v : table_)
        mix(v);
    return h;
}

FiniteGroup from_permutation_generators(std::size_t degree, const std::vector<Permutation>& gens,
                                        std::string name, std::size_t order_cap) {
    for (const auto& g : gens)
        if (g.degree() != degree)
            throw InvalidParameter("generator degree " + std::to_string(g.degree()) +
                                   " does not match " + std::to_string(degree));

    std::vector<Permutation> elements{Permutation(degree)};
    std::unordered_map<Permutation, Element, PermutationHash> index{{elements[0], 0}};
    for (std::size_t i = 0; i < elements.size(); ++i) {
        for (const auto& g : gens) {
            Permutation p = elements[i] * g;
            if (index.contains(p))
                continue;
            if (elements.size() >= order_cap)
                throw CapExceeded("order cap exceeded: group closure exceeds cap " + std::to_string(order_cap));
            index.emplace(p, static_cast<Element>(elements.size()));
            elements.push_back(std::move(p));
        }
    }

    const std::size_t n = elements.size();
    std::vector<Element> table(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = index.at(elements[a] * elements[b]);

    std::vector<std::string> labels;
    labels.reserve(n);
    for (const auto& p : elements)
        labels.push_back(p.to_string());

    FiniteGroup group(std::move(name), n, std::move(table), std::move(labels));
    group.degree_ = degree;
    group.perms_ = std::move(elements);
    return group;
}

FiniteGroup symmetric(std::size_t n, std::size_t order_cap) {
    if (n < 1)
        throw InvalidParameter("symmetric group degree must be at least 1");
    std::vector<Permutation> gens;
    if (n >= 2)
        gens.push_back(Permutation::from_cycle_list(n, {{1, 2}}));
    if (n >= 3) {
        std::vector<std::size_t> cycle(n);
        std::iota(cycle.begin(), cycle.end(), std::size_t{1});
        gens.push_back(Permutation::from_cycle_list(n, {cycle}));
    }
    return from_permutation_generators(n, gens, "S" + std::to_string(n), order_cap);
}

FiniteGroup alternating(std::size_t n, std::size_t order_cap) {
    if (n < 1)
        throw InvalidParameter("alternating group degree must be at least 1");
    std::vector<Permutation> gens;
    for (std::size_t k = 3; k <= n; ++k)
        gens.push_back(Permutation::from_cycle_list(n, {{1, 2, k}}));
    return from_permutation_generators(n, gens, "A" + std::to_string(n), order_cap);
}

FiniteGroup cyclic(std::size_t n, std::size_t order_cap) {
    if (n < 1)
        throw InvalidParameter("cyclic group order must be at least 1");
    if (n > order_cap)
        throw CapExceeded("order cap exceeded: C" + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
    std::vector<Element> table(n * n);
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        labels.push_back(cyclic_label(a));
        for (std::size_t b = 0; b < n; ++b)
            table[a * n + b] = static_cast<Element>((a + b) % n);
    }
    return FiniteGroup("C" + std::to_string(n), n, std::move(table), std::move(labels));
}

FiniteGroup dihedral(std::size_t n, std::size_t order_cap) {
    if (n < 2)
        throw InvalidParameter("dihedral parameter n must be at least 2 (order 2n)");
    const std::size_t order = 2 * n;
    if (order > order_cap)
        throw CapExceeded("order cap exceeded: D" + std::to_string(n) + " exceeds cap " + std::to_string(order_cap));
    // element r^i s^j has index i + n*j
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            std::string r = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
            std::string lbl = j == 0 ? r : r + "s";
            labels[i + n * j] = lbl.empty() ? "e" : lbl;
        }
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b) {
            const std::size_t ia = a % n, ja = a / n, ib = b % n, jb = b / n;
            // r^ia s^ja r^ib s^jb = r^(ia +- ib) s^(ja+jb)
            const std::size_t i = ja == 0 ? (ia + ib) % n : (ia + n - ib) % n;
            const std::size_t j = (ja + jb) % 2;
            table[a * order + b] = static_cast<Element>(i + n * j);
        }
    return FiniteGroup("D" + std::to_string(n), order, std::move(table), std::move(labels));
}

FiniteGroup quaternion8() {
    // index = 2*u + s for unit u in {1,i,j,k} and sign s (0 plus, 1 minus)
    static constexpr int unit_mul[4][4][2] = {
        // {unit, sign} of u*v
        {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
        {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
        {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
        {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
    };
    const char* names[4] = {"1", "i", "j", "k"};
    std::vector<Element> table(64);
    std::vector<std::string> labels(8);
    for (int a = 0; a < 8; ++a) {
        labels[a] = a == 0 ? "e" : (a % 2 ? "-" : "") + std::string(names[a / 2]);
        for (int b = 0; b < 8; ++b) {
            const auto& r = unit_mul[a / 2][b / 2];
            const int sign = (a % 2) ^ (b % 2) ^ r[1];
            table[a * 8 + b] = static_cast<Element>(2 * r[0] + sign);
        }
    }
    return FiniteGroup("Q8", 8, std::move(table), std::move(labels));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::size_t order_cap) {
    const std::size_t m = g.order(), n = h.order(), order = m * n;
    if (order > order_cap)
        throw CapExceeded("order cap exceeded: product of order " + std::to_string(order) + " exceeds cap " +
                          std::to_string(order_cap));
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t a = 0; a < order; ++a) {
        labels[a] = a == 0 ? "e" : "(" + g.label(static_cast<Element>(a / n)) + "," +
                                       h.label(static_cast<Element>(a % n)) + ")";
        for (std::size_t b = 0; b < order; ++b) {
            const Element x = g.mul(static_cast<Element>(a / n), static_cast<Element>(b / n));
            const Element y = h.mul(static_cast<Element>(a % n), static_cast<Element>(b % n));
            table[a * order + b] = static_cast<Element>(x * n + y);
        }
    }
    return FiniteGroup(g.name() + " x " + h.name(), order, std::move(table), std::move(labels));
}

FiniteGroup semidirect_cyclic(std::size_t p, std::size_t q, std::size_t k, std::size_t order_cap) {
    if (p < 1 || q < 1)
        throw InvalidParameter("semidirect product factors must have order at least 1");
    if (p > 1 && k % p == 0)
        throw InvalidParameter("invalid action parameter k=" + std::to_string(k) + ": k must be a unit mod " +
                               std::to_string(p));
    if (pow_mod(k, q, p) != 1 % p)
        throw InvalidParameter("invalid action parameter k=" + std::to_string(k) + ": k^" + std::to_string(q) +
                               " is not 1 mod " + std::to_string(p));
    const std::size_t order = p * q;
    if (order > order_cap)
        throw CapExceeded("order cap exceeded: semidirect product of order " + std::to_string(order) +
                          " exceeds cap " + std::to_string(order_cap));
    std::vector<std::size_t> kpow(q);
    for (std::size_t b = 0; b < q; ++b)
        kpow[b] = pow_mod(k, b, p);
    // element x^a y^b has index a + p*b, with y x y^-1 = x^k
    std::vector<Element> table(order * order);
    std::vector<std::string> labels(order);
    for (std::size_t idx = 0; idx < order; ++idx) {
        const std::size_t a = idx % p, b = idx / p;
        std::string lbl;
        if (a)
            lbl += a == 1 ? "x" : "x^" + std::to_string(a);
        if (b)
            lbl += b == 1 ? "y" : "y^" + std::to_string(b);
        labels[idx] = lbl.empty() ? "e" : lbl;
    }
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = 0; j < order; ++j) {
            const std::size_t a1 = i % p, b1 = i / p, a2 = j % p, b2 = j / p;
            // (x^a1 y^b1)(x^a2 y^b2) = x^(a1 + k^b1 a2) y^(b1+b2)
            const std::size_t a = (a1 + kpow[b1] * a2) % p;
            const std::size_t b = (b1 + b2) % q;
            table[i * order + j] = static_cast<Element>(a + p * b);
        }
    return FiniteGroup("C" + std::to_string(p) + ":C" + std::to_string(q) + "@" + std::to_string(k), order,
                       std::move(table), std::move(labels));
}

namespace {

Permutation affine_map(std::size_t p, std::size_t a, std::size_t b) {
    std::vector<std::uint16_t> images(p);
    for (std::size_t x = 0; x < p; ++x)
        images[x] = static_cast<std::uint16_t>((a * x + b) % p);
    return Permutation(std::move(images));
}

void require_odd_prime(std::size_t p) {
    if (p < 3 || !is_prime(p))
        throw InvalidParameter("AGL(1,p) requires an odd prime p, got p=" + std::to_string(p));
}

}  // namespace

FiniteGroup agl1(std::size_t p, std::size_t order_cap) {
    require_odd_prime(p);
    const std::size_t g = primitive_root(p);
    return from_permutation_generators(p, {affine_map(p, 1, 1), affine_map(p, g, 0)},
                                       "AGL(1," + std::to_string(p) + ")", order_cap);
}

FiniteGroup agl1_cap_alt(std::size_t p, std::size_t order_cap) {
    require_odd_prime(p);
    // multiplication by a primitive root is a (p-1)-cycle, hence odd; the even
    // multipliers are exactly the squares
    const std::size_t g = primitive_root(p);
    return from_permutation_generators(p, {affine_map(p, 1, 1), affine_map(p, g * g % p, 0)},
                                       "AGL+(1," + std::to_string(p) + ")", order_cap);
}

}  // namespace ggn
