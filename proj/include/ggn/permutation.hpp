#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ggn {

/// A bijection on {1..degree}, stored 0-based.
///
/// Products compose left to right: (a * b)(i) = b(a(i)), i.e. apply `a` first.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::size_t degree);
    /// Throws InvalidParameter unless `images` (0-based) is a bijection.
    explicit Permutation(std::vector<std::uint16_t> images);

    /// Parses disjoint-cycle notation on points 1..degree, e.g. "(1 2)(3 4 5)",
    /// "(1,2,3)" or "e"/"()" for the identity.
    static Permutation from_cycles(std::size_t degree, std::string_view text);
    static Permutation from_cycle_list(std::size_t degree,
                                       const std::vector<std::vector<std::size_t>>& cycles);

    std::size_t degree() const { return images_.size(); }
    std::size_t operator()(std::size_t point) const { return images_[point]; }
    const std::vector<std::uint16_t>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    /// +1 for even permutations, -1 for odd ones.
    int sign() const;
    /// Lengths of the nontrivial cycles, sorted descending.
    std::vector<std::size_t> cycle_type() const;
    std::size_t order() const;

    /// Disjoint-cycle notation over 1..degree, fixed points omitted, identity "e".
    std::string to_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint16_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const;
};

}  // namespace ggn
