#include "ggn/structure_solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "ggn/errors.hpp"

namespace ggn {

std::string to_string(GameKind kind) { return kind == GameKind::Dng ? "dng" : "gen"; }

unsigned mex(std::span<const unsigned> values) {
    std::vector<bool> present(values.size() + 1, false);
    for (auto v : values)
        if (v < present.size())
            present[v] = true;
    unsigned m = 0;
    while (present[m])
        ++m;
    return m;
}

std::string TypeTriple::to_string() const {
    return "(" + std::to_string(parity) + "," + std::to_string(nim_even) + "," + std::to_string(nim_odd) + ")";
}

TypeTriple compute_class_type(unsigned parity, std::span<const TypeTriple> option_types) {
    std::vector<unsigned> cross;
    for (const auto& t : option_types)
        cross.push_back(t.component(1 - parity));
    const unsigned top = mex(cross);

    std::vector<unsigned> other{top};
    for (const auto& t : option_types)
        other.push_back(t.component(parity));
    const unsigned rest = mex(other);

    TypeTriple out{parity, 0, 0};
    (parity == 0 ? out.nim_even : out.nim_odd) = top;
    (parity == 0 ? out.nim_odd : out.nim_even) = rest;
    if (out.nim_even >= kNimSanityBound || out.nim_odd >= kNimSanityBound)
        throw std::logic_error("class type " + out.to_string() + " exceeds the nim sanity bound");
    return out;
}

std::vector<ClassNode> class_options(const SubgroupLattice& lattice, IntersectionId id, GameKind kind) {
    const auto& members = lattice.intersection(id).members;
    std::vector<ClassNode> out;
    for (Element g = 0; g < lattice.group().order(); ++g) {
        if (members.test(g))
            continue;
        Ceiling c = lattice.ceil_extend(id, g);
        if (kind == GameKind::Dng && std::holds_alternative<TopMarker>(c))
            continue;
        out.push_back(c);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

const TypeTriple& StructureClassGraph::type_of(const ClassNode& node) const {
    if (std::holds_alternative<TopMarker>(node))
        return top_type;
    return classes[std::get<IntersectionId>(node).value].type;
}

StructureClassGraph build_class_graph(const SubgroupLattice& lattice, GameKind kind) {
    const std::size_t order = lattice.group().order();
    if (order < 2)
        throw InvalidParameter("structure classes need a nontrivial group");
    StructureClassGraph graph;
    graph.kind = kind;
    graph.group_order = order;
    graph.top_type = TypeTriple{static_cast<unsigned>(order % 2), 0, 0};

    const std::size_t count = lattice.intersection_count();
    graph.classes.resize(count);
    // options strictly grow the class and intersections are sorted by order,
    // so a descending pass sees every option before its parent
    for (std::size_t i = count; i-- > 0;) {
        const IntersectionId id{i};
        auto& info = graph.classes[i];
        info.id = id;
        info.subgroup_order = lattice.intersection(id).order();
        info.options = class_options(lattice, id, kind);
        std::vector<TypeTriple> option_types;
        for (const auto& opt : info.options) {
            if (auto* j = std::get_if<IntersectionId>(&opt); j && j->value <= i)
                throw std::logic_error("structure class option does not strictly grow the class");
            option_types.push_back(graph.type_of(opt));
        }
        info.type = compute_class_type(static_cast<unsigned>(info.subgroup_order % 2), option_types);
    }
    return graph;
}

GameReport solve(const SubgroupLattice& lattice, GameKind kind) {
    const auto start = std::chrono::steady_clock::now();
    const auto& group = lattice.group();
    GameReport report;
    report.group = group.name();
    report.kind = kind;
    if (group.order() == 1) {
        if (kind == GameKind::Dng)
            throw NoSuchGame("no avoidance game for the trivial group");
        // first player has no opening move
        report.nim = 0;
        report.root_type = TypeTriple{1, 0, 0};
        return report;
    }
    const auto graph = build_class_graph(lattice, kind);
    for (const auto& info : graph.classes) {
        ClassRow row{info.subgroup_order, info.type.parity, info.type, {}, false};
        for (const auto& opt : info.options) {
            if (auto* j = std::get_if<IntersectionId>(&opt))
                row.options.push_back(j->value);
            else
                row.has_top_option = true;
        }
        report.class_table.push_back(std::move(row));
    }
    report.root_type = graph.root().type;
    report.nim = report.root_type.nim_even;
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

GameReport solve(const FiniteGroup& group, GameKind kind, const LatticeOptions& options) {
    if (group.order() == 1 && kind == GameKind::Dng)
        throw NoSuchGame("no avoidance game for the trivial group");
    const auto start = std::chrono::steady_clock::now();
    const auto lattice = SubgroupLattice::compute(group, options);
    auto report = solve(lattice, kind);
    report.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return report;
}

std::set<TypeTriple> otype_of_root(const SubgroupLattice& lattice, GameKind kind) {
    if (lattice.group().order() < 2)
        return {};
    const auto graph = build_class_graph(lattice, kind);
    std::set<TypeTriple> out;
    for (const auto& opt : graph.root().options)
        out.insert(graph.type_of(opt));
    return out;
}

}  // namespace ggn
