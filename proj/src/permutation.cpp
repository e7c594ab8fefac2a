#include "ggn/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "ggn/errors.hpp"

namespace ggn {

Permutation::Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Permutation::Permutation(std::vector<std::uint16_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (auto im : images_) {
        if (im >= images_.size() || seen[im])
            throw InvalidParameter("permutation images are not a bijection");
        seen[im] = true;
    }
}

Permutation Permutation::from_cycle_list(std::size_t degree,
                                         const std::vector<std::vector<std::size_t>>& cycles) {
    Permutation result(degree);
    for (const auto& cycle : cycles) {
        if (cycle.empty())
            continue;
        // apply cycles left to right, consistent with operator*
        Permutation c(degree);
        std::vector<bool> seen(degree, false);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            std::size_t from = cycle[i];
            std::size_t to = cycle[(i + 1) % cycle.size()];
            if (from < 1 || from > degree || to < 1 || to > degree)
                throw InvalidParameter("cycle point " + std::to_string(from < 1 || from > degree ? from : to) +
                                       " outside 1.." + std::to_string(degree));
            if (seen[from - 1])
                throw InvalidParameter("point " + std::to_string(from) + " repeated within a cycle");
            seen[from - 1] = true;
            c.images_[from - 1] = static_cast<std::uint16_t>(to - 1);
        }
        result = result * Permutation(c.images_);
    }
    return result;
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_ws();
    if (text.substr(i) == "e")
        return Permutation(degree);
    while (true) {
        skip_ws();
        if (i >= text.size())
            break;
        if (text[i] != '(')
            throw InvalidParameter("expected '(' in cycle notation \"" + std::string(text) + "\"");
        ++i;
        std::vector<std::size_t> cycle;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ')') {
                ++i;
                break;
            }
            if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw InvalidParameter("malformed cycle notation \"" + std::string(text) + "\"");
            std::size_t v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
            cycle.push_back(v);
        }
        cycles.push_back(std::move(cycle));
    }
    return from_cycle_list(degree, cycles);
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i)
            return false;
    return true;
}

Permutation Permutation::inverse() const {
    Permutation inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
        inv.images_[images_[i]] = static_cast<std::uint16_t>(i);
    return inv;
}

std::vector<std::size_t> Permutation::cycle_type() const {
    std::vector<std::size_t> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i])
            continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 1)
            lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

int Permutation::sign() const {
    std::size_t transpositions = 0;
    for (auto len : cycle_type())
        transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

std::size_t Permutation::order() const {
    std::size_t ord = 1;
    for (auto len : cycle_type())
        ord = std::lcm(ord, len);
    return ord;
}

std::string Permutation::to_string() const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i)
            continue;
        out += '(';
        for (std::size_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            if (j != i)
                out += ' ';
            out += std::to_string(j + 1);
        }
        out += ')';
    }
    return out.empty() ? "e" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    Permutation r(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i)
        r.images_[i] = b.images_[a.images_[i]];
    return r;
}

std::size_t PermutationHash::operator()(const Permutation& p) const {
    std::size_t h = 1469598103934665603ull;
    for (auto v : p.images()) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ggn
