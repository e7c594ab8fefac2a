#include "ggn/lattice.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "ggn/errors.hpp"

namespace ggn {

namespace {

constexpr int kCacheVersion = 1;

struct Candidate {
    ElementSubset members;
    ElementSubset gens;
};

bool subgroup_less(const Subgroup& a, const Subgroup& b) {
    const auto oa = a.order(), ob = b.order();
    if (oa != ob)
        return oa < ob;
    return lex_less(a.members, b.members);
}

std::filesystem::path cache_file(const std::filesystem::path& dir, const FiniteGroup& g) {
    std::ostringstream name;
    name << "lattice-v" << kCacheVersion << "-" << std::hex << std::setw(16) << std::setfill('0')
         << g.table_hash() << ".json";
    return dir / name.str();
}

std::optional<std::vector<Subgroup>> load_cache(const std::filesystem::path& file, const FiniteGroup& g) {
    std::ifstream in(file);
    if (!in)
        return std::nullopt;
    try {
        auto doc = nlohmann::json::parse(in);
        if (doc.at("version").get<int>() != kCacheVersion || doc.at("order").get<std::size_t>() != g.order() ||
            doc.at("hash").get<std::uint64_t>() != g.table_hash())
            return std::nullopt;
        std::vector<Subgroup> out;
        for (const auto& entry : doc.at("subgroups")) {
            Subgroup s{ElementSubset(g.order())};
            for (auto x : entry) {
                auto v = x.get<std::size_t>();
                if (v >= g.order())
                    return std::nullopt;
                s.members.set(v);
            }
            if (g.order() % s.order() != 0)
                return std::nullopt;
            out.push_back(std::move(s));
        }
        return out;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void store_cache(const std::filesystem::path& file, const FiniteGroup& g, const std::vector<Subgroup>& subs) {
    std::error_code ec;
    std::filesystem::create_directories(file.parent_path(), ec);
    nlohmann::json doc;
    doc["version"] = kCacheVersion;
    doc["order"] = g.order();
    doc["hash"] = g.table_hash();
    doc["group"] = g.name();
    auto& list = doc["subgroups"] = nlohmann::json::array();
    for (const auto& s : subs)
        list.push_back(s.members.indices());
    const auto tmp = file.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out)
            return;
        out << doc.dump();
    }
    std::filesystem::rename(tmp, file, ec);
}

std::vector<Subgroup> enumerate(const FiniteGroup& g, unsigned workers) {
    const std::size_t n = g.order();
    std::vector<Candidate> known;
    std::unordered_map<ElementSubset, std::size_t, BitsetHash> index;

    auto add = [&](Candidate c) -> bool {
        if (index.contains(c.members))
            return false;
        index.emplace(c.members, known.size());
        known.push_back(std::move(c));
        return true;
    };

    // seed: the cyclic subgroups, each remembered with one generator
    std::vector<Element> cyclic_gens;
    for (Element x = 0; x < n; ++x) {
        ElementSubset gens(n);
        if (x != 0)
            gens.set(x);
        ElementSubset members = g.closure(gens);
        if (add({members, gens}) && x != 0)
            cyclic_gens.push_back(x);
    }

    // Every subgroup is a chain of joins with cyclic subgroups, so closing the
    // known set under "join with a cyclic subgroup" reaches all of them.
    std::vector<std::size_t> frontier(known.size());
    for (std::size_t i = 0; i < frontier.size(); ++i)
        frontier[i] = i;

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());

    while (!frontier.empty()) {
        std::vector<std::vector<Candidate>> found(frontier.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t f = begin; f < end; ++f) {
                const Candidate& h = known[frontier[f]];
                std::unordered_map<ElementSubset, bool, BitsetHash> local;
                for (Element c : cyclic_gens) {
                    if (h.members.test(c))
                        continue;
                    ElementSubset gens = h.gens;
                    gens.set(c);
                    ElementSubset members = g.closure(gens);
                    if (local.contains(members))
                        continue;
                    local.emplace(members, true);
                    found[f].push_back({std::move(members), std::move(gens)});
                }
            }
        };
        const std::size_t chunks = std::min<std::size_t>(workers, frontier.size());
        if (chunks <= 1) {
            work(0, frontier.size());
        } else {
            std::vector<std::thread> pool;
            const std::size_t step = (frontier.size() + chunks - 1) / chunks;
            for (std::size_t begin = 0; begin < frontier.size(); begin += step)
                pool.emplace_back(work, begin, std::min(frontier.size(), begin + step));
            for (auto& t : pool)
                t.join();
        }
        std::vector<std::size_t> next;
        for (auto& batch : found)
            for (auto& c : batch)
                if (add(std::move(c)))
                    next.push_back(known.size() - 1);
        frontier = std::move(next);
    }

    std::vector<Subgroup> out;
    out.reserve(known.size());
    for (auto& c : known)
        out.push_back({std::move(c.members)});
    std::sort(out.begin(), out.end(), subgroup_less);
    return out;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, const LatticeOptions& options) {
    if (g.order() > options.cap)
        throw CapExceeded("lattice cap exceeded: group order " + std::to_string(g.order()) + " exceeds cap " +
                          std::to_string(options.cap));
    std::optional<std::filesystem::path> file;
    if (options.cache_dir) {
        file = cache_file(*options.cache_dir, g);
        if (auto cached = load_cache(*file, g)) {
            std::sort(cached->begin(), cached->end(), subgroup_less);
            return std::move(*cached);
        }
    }
    auto subs = enumerate(g, options.workers);
    if (file)
        store_cache(*file, g, subs);
    return subs;
}

SubgroupLattice SubgroupLattice::compute(const FiniteGroup& group, const LatticeOptions& options) {
    SubgroupLattice lattice;
    lattice.group_ = &group;
    lattice.subgroups_ = all_subgroups(group, options);
    for (std::size_t i = 0; i < lattice.subgroups_.size(); ++i)
        lattice.index_.emplace(lattice.subgroups_[i].members, i);
    lattice.derive();
    return lattice;
}

void SubgroupLattice::derive() {
    const std::size_t total = subgroups_.size();
    const std::size_t n = group_->order();
    // subgroups_ is sorted by order, so the whole group is last
    for (std::size_t i = 0; i + 1 < total; ++i) {
        const auto& h = subgroups_[i];
        bool maximal = true;
        for (std::size_t j = i + 1; j + 1 < total && maximal; ++j) {
            const auto& k = subgroups_[j];
            if (k.order() > h.order() && k.order() % h.order() == 0 && h.members.is_subset_of(k.members))
                maximal = false;
        }
        if (maximal)
            maximal_ids_.push_back(i);
    }

    const std::size_t m = maximal_ids_.size();
    element_masks_.assign(n, Bitset(m));
    for (std::size_t k = 0; k < m; ++k)
        subgroups_[maximal_ids_[k]].members.for_each([&](std::size_t x) { element_masks_[x].set(k); });

    // close the maximal subgroups under intersection with a maximal subgroup
    std::vector<bool> in_set(total, false);
    std::vector<std::size_t> queue(maximal_ids_.begin(), maximal_ids_.end());
    for (auto id : queue)
        in_set[id] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
        for (auto mid : maximal_ids_) {
            auto meet = subgroups_[queue[q]].members & subgroups_[mid].members;
            const std::size_t id = index_.at(meet);
            if (!in_set[id]) {
                in_set[id] = true;
                queue.push_back(id);
            }
        }
    }
    for (std::size_t id = 0; id < total; ++id)
        if (in_set[id])
            intersection_ids_.push_back(id);

    for (std::size_t i = 0; i < intersection_ids_.size(); ++i) {
        Bitset mask(m);
        const auto& members = subgroups_[intersection_ids_[i]].members;
        for (std::size_t k = 0; k < m; ++k)
            if (members.is_subset_of(subgroups_[maximal_ids_[k]].members))
                mask.set(k);
        mask_to_intersection_.emplace(mask, i);
        intersection_masks_.push_back(std::move(mask));
    }
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSubset& members) const {
    auto it = index_.find(members);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

std::size_t SubgroupLattice::frattini_id() const {
    if (intersection_ids_.empty())
        throw InvalidParameter("no proper subgroups: " + group_->name() + " is trivial");
    return intersection_ids_.front();
}

bool SubgroupLattice::leq(IntersectionId a, IntersectionId b) const {
    return intersection(a).members.is_subset_of(intersection(b).members);
}

Ceiling SubgroupLattice::ceil_from_mask(const Bitset& mask) const {
    if (mask.none())
        return TopMarker{};
    return IntersectionId{mask_to_intersection_.at(mask)};
}

Ceiling SubgroupLattice::ceil(const ElementSubset& s) const {
    Bitset mask = Bitset::full(maximal_ids_.size());
    s.for_each([&](std::size_t x) { mask &= element_masks_[x]; });
    return ceil_from_mask(mask);
}

Ceiling SubgroupLattice::ceil_extend(IntersectionId id, Element g) const {
    return ceil_from_mask(intersection_masks_[id.value] & element_masks_[g]);
}

bool SubgroupLattice::covered_by_even_maximals() const {
    ElementSubset covered(group_->order());
    for (auto id : maximal_ids_)
        if (subgroups_[id].order() % 2 == 0)
            covered |= subgroups_[id].members;
    return covered.count() == group_->order();
}

std::vector<Subgroup> maximal_subgroups(const SubgroupLattice& lattice) {
    if (lattice.maximal_ids().empty())
        throw InvalidParameter("no proper subgroups: " + lattice.group().name() + " is trivial");
    std::vector<Subgroup> out;
    for (auto id : lattice.maximal_ids())
        out.push_back(lattice.subgroups()[id]);
    return out;
}

Subgroup frattini(const SubgroupLattice& lattice) { return lattice.frattini(); }

std::vector<Subgroup> intersection_subgroups(const SubgroupLattice& lattice) {
    std::vector<Subgroup> out;
    for (auto id : lattice.intersection_ids())
        out.push_back(lattice.subgroups()[id]);
    return out;
}

}  // namespace ggn
