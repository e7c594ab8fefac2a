#include "ggn/catalog.hpp"

#include <fstream>

#include "json.hpp"

#include "ggn/errors.hpp"

namespace ggn {

namespace {

constexpr const char* kDefaultSpecs[] = {
    "C1",     "S1",      "A1",      "A2",       "C2",         "C3",        "C4",       "C2 x C2",
    "C5",     "C6",      "S3",      "A3",       "C7",         "C8",        "C2 x C4",  "C2 x C2 x C2",
    "D4",     "Q8",      "C9",      "C3 x C3",  "C10",        "D5",        "C11",      "C12",
    "C2 x C6", "D6",     "A4",      "C3:C4@2",  "C13",        "C14",       "D7",       "C15",
    "C16",    "C2 x C8", "C4 x C4", "C2 x C2 x C4", "C2 x C2 x C2 x C2", "D8", "C2 x D4", "C2 x Q8",
    "C17",    "C18",     "C3 x C6", "D9",       "C3 x S3",    "C19",       "C20",      "C2 x C10",
    "D10",    "C5:C4@2", "C5:C4@4", "C21",      "C7:C3@2",    "C22",       "D11",      "C23",
    "C24",    "C2 x C12", "C2 x C2 x C6", "S4", "D12",       "C2 x A4",   "C3 x D4",  "C3 x Q8",
    "C2 x D6", "C4 x S3", "C3:C8@2", "S5", "A5",      "C3 x C3 x C3", "AGL(1,5)", "AGL+(1,7)",
};

}  // namespace

FiniteGroup CatalogEntry::build(std::size_t order_cap) const {
    if (const auto* spec = std::get_if<GroupSpec>(&source)) {
        auto g = build_group(*spec, order_cap);
        g.set_name(name);
        return g;
    }
    const auto& perm = std::get<PermutationSource>(source);
    std::vector<Permutation> gens;
    for (const auto& text : perm.generators)
        gens.push_back(Permutation::from_cycles(perm.degree, text));
    return from_permutation_generators(perm.degree, gens, name, order_cap);
}

const Atom* CatalogEntry::family() const {
    const auto* spec = std::get_if<GroupSpec>(&source);
    return spec ? spec->as_family() : nullptr;
}

PermutationSource heisenberg27_source() {
    // point x + 3y + 1 for (x, y) in Z_3^2: two translations and the shear (x, y) -> (x + y, y)
    return {9, {"(1 2 3)(4 5 6)(7 8 9)", "(1 4 7)(2 5 8)(3 6 9)", "(4 5 6)(7 9 8)"}};
}

std::vector<CatalogEntry> default_catalog() {
    std::vector<CatalogEntry> out;
    for (const char* text : kDefaultSpecs) {
        auto spec = parse_group_spec(text);
        out.push_back({to_string(spec), spec});
    }
    out.push_back({"(C3 x C3):C3", heisenberg27_source()});
    return out;
}

std::vector<CatalogEntry> load_catalog(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in)
        throw InvalidParameter("cannot read catalog " + file.string());
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidParameter("malformed catalog " + file.string() + ": " + e.what());
    }
    if (!doc.is_array())
        throw InvalidParameter("catalog must be a JSON array");
    std::vector<CatalogEntry> out;
    for (const auto& item : doc) {
        if (item.contains("spec")) {
            auto spec = parse_group_spec(item.at("spec").get<std::string>());
            out.push_back({item.value("name", to_string(spec)), spec});
        } else if (item.contains("generators")) {
            PermutationSource src{item.at("degree").get<std::size_t>(),
                                  item.at("generators").get<std::vector<std::string>>()};
            out.push_back({item.at("name").get<std::string>(), src});
        } else {
            throw InvalidParameter("catalog entry needs \"spec\" or \"generators\"");
        }
    }
    return out;
}

}  // namespace ggn
