#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include "ggn/group_spec.hpp"

namespace ggn {

/// A group given by permutation generators in cycle notation.
struct PermutationSource {
    std::size_t degree;
    std::vector<std::string> generators;
    friend bool operator==(const PermutationSource&, const PermutationSource&) = default;
};

struct CatalogEntry {
    std::string name;
    std::variant<GroupSpec, PermutationSource> source;
    friend bool operator==(const CatalogEntry&, const CatalogEntry&) = default;

    FiniteGroup build(std::size_t order_cap = kDefaultOrderCap) const;
    /// The S_n/A_n atom when the entry is one.
    const Atom* family() const;
};

/// Groups used for oracle cross-checks: every group of order at most 24 that
/// group specs can express, plus A5, (C3xC3):C3, C3xC3xC3, AGL(1,5) and AGL+(1,7).
std::vector<CatalogEntry> default_catalog();

/// JSON array of {"spec": "..."} or {"name": ..., "degree": n, "generators": [...]}.
std::vector<CatalogEntry> load_catalog(const std::filesystem::path& file);

/// The Heisenberg group mod 3, as affine maps of (Z_3)^2 on nine points.
PermutationSource heisenberg27_source();

}  // namespace ggn
