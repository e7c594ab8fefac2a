#include "ggn/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

#include "CLI11.hpp"

#include "ggn/brute_solver.hpp"
#include "ggn/catalog.hpp"
#include "ggn/classify.hpp"
#include "ggn/errors.hpp"
#include "ggn/group_spec.hpp"
#include "ggn/records.hpp"
#include "ggn/structure_solver.hpp"

namespace ggn::cli {

namespace {

enum class MethodChoice { Auto, Solver, Brute, Formula };

struct Context {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
    LatticeOptions lattice;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::vector<GameKind> parse_games(const std::string& game) {
    if (game == "dng")
        return {GameKind::Dng};
    if (game == "gen")
        return {GameKind::Gen};
    return {GameKind::Dng, GameKind::Gen};
}

MethodChoice parse_method(const std::string& m) {
    if (m == "solver")
        return MethodChoice::Solver;
    if (m == "brute")
        return MethodChoice::Brute;
    if (m == "formula")
        return MethodChoice::Formula;
    return MethodChoice::Auto;
}

OutputFormat parse_format(const std::string& f) {
    if (f == "csv")
        return OutputFormat::Csv;
    if (f == "json")
        return OutputFormat::Json;
    return OutputFormat::Text;
}

std::string family_order(const Atom& a) {
    boost::multiprecision::cpp_int f = 1;
    for (std::size_t i = 2; i <= a.param; ++i)
        f *= i;
    if (a.kind == AtomKind::Alternating && a.param >= 2)
        f /= 2;
    return f.str();
}

NimFormulaResult family_formula(const Atom& a, GameKind kind) {
    if (a.kind == AtomKind::Symmetric)
        return kind == GameKind::Dng ? dng_sym(a.param) : gen_sym(a.param);
    return kind == GameKind::Dng ? dng_alt(a.param) : gen_alt(a.param);
}

std::string mode_name(MemoMode m) { return m == MemoMode::ExactSet ? "exact-set" : "subgroup-parity"; }

/// Computes records for one group, building the group and its lattice lazily.
class Evaluator {
public:
    Evaluator(GroupSpec spec, const LatticeOptions& options) : spec_(std::move(spec)), options_(options) {}

    OutputRecord record(GameKind kind, MethodChoice method) {
        const Atom* family = spec_.as_family();
        if (method == MethodChoice::Auto)
            method = family ? MethodChoice::Formula : MethodChoice::Solver;

        OutputRecord r{to_string(spec_), "", kind, 0, Method::Solver, std::nullopt};
        if (method == MethodChoice::Formula) {
            r.method = Method::Formula;
            if (family) {
                const auto f = family_formula(*family, kind);
                r.order = family_order(*family);
                r.nim = f.nim;
                r.case_label = f.case_label;
                return r;
            }
            if (kind == GameKind::Gen)
                throw UsageError("no closed form for GEN(" + r.group + "); use --method solver");
            const auto& l = lattice();
            const auto f = dng_classify_general(l);
            r.order = std::to_string(l.group().order());
            r.nim = f.nim;
            r.case_label = f.case_label;
            return r;
        }
        if (kind == GameKind::Dng && group().order() == 1)
            throw NoSuchGame("no avoidance game for the trivial group");
        const auto& l = lattice();
        r.order = std::to_string(l.group().order());
        if (method == MethodChoice::Solver) {
            r.nim = solve(l, kind).nim;
            return r;
        }
        BruteOptions bo;
        bo.mode = preferred_mode(l);
        r.method = Method::Oracle;
        r.nim = BruteSolver(l, kind, bo).game_nim();
        r.case_label = mode_name(bo.mode);
        return r;
    }

    const FiniteGroup& group() {
        if (!group_)
            group_ = build_group(spec_);
        return *group_;
    }

    const SubgroupLattice& lattice() {
        if (!lattice_)
            lattice_ = SubgroupLattice::compute(group(), options_);
        return *lattice_;
    }

private:
    GroupSpec spec_;
    LatticeOptions options_;
    std::optional<FiniteGroup> group_;
    std::optional<SubgroupLattice> lattice_;
};

/// Runs jobs on a bounded number of threads and returns results in input order.
template <class T>
std::vector<T> run_ordered(std::vector<std::function<T()>> jobs) {
    std::vector<T> results;
    results.reserve(jobs.size());
    const std::size_t batch = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < jobs.size(); begin += batch) {
        std::vector<std::future<T>> futures;
        for (std::size_t i = begin; i < std::min(jobs.size(), begin + batch); ++i)
            futures.push_back(std::async(std::launch::async, jobs[i]));
        for (auto& f : futures)
            results.push_back(f.get());
    }
    return results;
}

int cmd_nim(Context& ctx, const std::string& text, const std::string& game, const std::string& method,
            const std::string& format) {
    Evaluator ev(parse_group_spec(text), ctx.lattice);
    std::vector<OutputRecord> records;
    for (auto kind : parse_games(game))
        records.push_back(ev.record(kind, parse_method(method)));
    ctx.out << emit(records, parse_format(format));
    return kExitOk;
}

int cmd_table(Context& ctx, const std::string& family, std::size_t from, std::size_t to, const std::string& game,
              const std::string& method, const std::string& format) {
    if (from < 1 || to < from)
        throw UsageError("need 1 <= --from <= --to");
    const AtomKind kind = family == "S" ? AtomKind::Symmetric : AtomKind::Alternating;
    std::vector<std::function<std::optional<OutputRecord>()>> jobs;
    for (std::size_t n = from; n <= to; ++n)
        for (auto g : parse_games(game)) {
            const bool trivial = n == 1 || (kind == AtomKind::Alternating && n == 2);
            if (g == GameKind::Dng && trivial)
                continue;
            jobs.push_back([=, &ctx]() -> std::optional<OutputRecord> {
                Evaluator ev(GroupSpec{{Atom{kind, n}}}, ctx.lattice);
                return ev.record(g, parse_method(method));
            });
        }
    std::vector<OutputRecord> records;
    for (auto& r : run_ordered(std::move(jobs)))
        records.push_back(std::move(*r));
    ctx.out << emit(records, parse_format(format));
    return kExitOk;
}

int cmd_zeta(Context& ctx, std::uint64_t max, bool explain) {
    if (explain) {
        for (std::uint64_t p = 3; p <= max; p += 4) {
            const auto v = is_zeta_prime(p);
            if (v.reason == ZetaReason::NotPrime)
                continue;
            ctx.out << p << ": " << to_string(v.reason);
            if (v.witness)
                ctx.out << " (q=" << v.witness->base << ", n=" << v.witness->digits << ")";
            ctx.out << '\n';
        }
        return kExitOk;
    }
    const auto primes = zeta_primes_up_to(max);
    for (std::size_t i = 0; i < primes.size(); ++i)
        ctx.out << (i ? " " : "") << primes[i];
    ctx.out << '\n';
    return kExitOk;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string nim_line(const NimFormulaResult& r) { return "*" + std::to_string(r.nim) + " (" + r.case_label + ")"; }

int cmd_classify(Context& ctx, const std::string& text) {
    const auto spec = parse_group_spec(text);
    auto& out = ctx.out;
    out << "group: " << to_string(spec) << '\n';
    std::optional<FiniteGroup> group;
    try {
        group = build_group(spec);
    } catch (const CapExceeded&) {
    }
    if (group && group->order() <= ctx.lattice.cap) {
        const auto lattice = SubgroupLattice::compute(*group, ctx.lattice);
        std::size_t even = 0;
        for (auto id : lattice.maximal_ids())
            even += lattice.subgroups()[id].order() % 2 == 0;
        out << "order: " << group->order() << '\n'
            << "abelian: " << yes_no(group->is_abelian()) << '\n'
            << "cyclic: " << yes_no(group->is_cyclic()) << '\n'
            << "gamma1: " << yes_no(is_gamma1(*group)) << '\n'
            << "subgroups: " << lattice.subgroups().size() << '\n';
        if (group->order() > 1) {
            out << "maximal subgroups: " << lattice.maximal_ids().size() << " (even " << even << ", odd "
                << lattice.maximal_ids().size() - even << ")\n"
                << "frattini order: " << lattice.frattini().order() << '\n'
                << "intersection subgroups: " << lattice.intersection_count() << '\n'
                << "even maximals cover G: " << yes_no(lattice.covered_by_even_maximals()) << '\n'
                << "DNG general classifier: " << nim_line(dng_classify_general(lattice)) << '\n';
        }
    } else {
        out << "order: " << (spec.as_family() ? family_order(*spec.as_family()) : std::string("?"))
            << " (beyond the lattice cap; formulas only)\n";
    }
    if (const Atom* family = spec.as_family()) {
        const std::string sym = family->kind == AtomKind::Symmetric ? "S_n" : "A_n";
        const std::size_t dng_min = family->kind == AtomKind::Symmetric ? 2 : 3;
        if (family->param >= dng_min)
            out << "DNG formula (" << sym << "): " << nim_line(family_formula(*family, GameKind::Dng)) << '\n';
        out << "GEN formula (" << sym << "): " << nim_line(family_formula(*family, GameKind::Gen)) << '\n';
        if (family->kind == AtomKind::Alternating && family->param >= 5)
            out << "odd maximal subgroup: " << yes_no(odd_maximal_predicate_alt(family->param)) << '\n';
        const auto v = is_zeta_prime(family->param);
        out << "zeta verdict for n: " << to_string(v.reason);
        if (v.witness)
            out << " (q=" << v.witness->base << ", n=" << v.witness->digits << ")";
        out << '\n';
    }
    return kExitOk;
}

struct VerifyResult {
    std::vector<std::string> lines;
    std::size_t checks = 0;
    bool ok = true;
};

VerifyResult verify_entry(const CatalogEntry& entry, const LatticeOptions& options) {
    VerifyResult res;
    const auto group = entry.build();
    const auto lattice = SubgroupLattice::compute(group, options);
    for (auto kind : {GameKind::Dng, GameKind::Gen}) {
        if (kind == GameKind::Dng && group.order() == 1)
            continue;
        const unsigned solver = solve(lattice, kind).nim;
        BruteOptions bo;
        bo.mode = preferred_mode(lattice);
        const unsigned oracle = BruteSolver(lattice, kind, bo).game_nim();
        std::ostringstream detail;
        detail << "solver=" << solver << " oracle=" << oracle << " [" << mode_name(bo.mode) << "]";
        bool agree = solver == oracle;
        if (kind == GameKind::Dng) {
            const unsigned general = dng_classify_general(lattice).nim;
            detail << " general=" << general;
            agree = agree && general == solver;
        }
        if (const Atom* family = entry.family()) {
            const unsigned formula = family_formula(*family, kind).nim;
            detail << " formula=" << formula;
            agree = agree && formula == solver;
        }
        std::ostringstream line;
        line << (agree ? "ok    " : "FAIL  ") << entry.name << " " << to_string(kind) << "  " << detail.str();
        res.lines.push_back(line.str());
        res.ok = res.ok && agree;
        ++res.checks;
    }
    return res;
}

int cmd_verify(Context& ctx, const std::string& catalog_path) {
    const auto catalog = catalog_path.empty() ? default_catalog() : load_catalog(catalog_path);
    std::vector<std::function<VerifyResult()>> jobs;
    for (const auto& entry : catalog)
        jobs.push_back([&entry, &ctx] { return verify_entry(entry, ctx.lattice); });
    std::size_t checks = 0, failures = 0;
    for (const auto& r : run_ordered(std::move(jobs))) {
        for (const auto& line : r.lines) {
            ctx.out << line << '\n';
            failures += line.starts_with("FAIL");
        }
        checks += r.checks;
    }
    ctx.out << "verified " << checks << " (group, game) pairs: "
            << (failures ? std::to_string(failures) + " mismatches" : std::string("all agree")) << '\n';
    return failures ? kExitMismatch : kExitOk;
}

std::string describe_position(const FiniteGroup& g, const ElementSubset& position) {
    std::string s = "{";
    bool first = true;
    position.for_each([&](std::size_t x) {
        s += (first ? "" : ", ") + g.label(static_cast<Element>(x));
        first = false;
    });
    return s + "}";
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int cmd_play(Context& ctx, const std::string& text, const std::string& game, bool engine_first) {
    const auto kind = game == "dng" ? GameKind::Dng : GameKind::Gen;
    const auto group = build_group(parse_group_spec(text));
    if (kind == GameKind::Dng && group.order() == 1)
        throw NoSuchGame("no avoidance game for the trivial group");
    if (group.order() > ctx.lattice.cap)
        throw UsageError("group of order " + std::to_string(group.order()) + " is too large to play");
    const auto lattice = SubgroupLattice::compute(group, ctx.lattice);
    BruteOptions bo;
    bo.mode = preferred_mode(lattice);
    BruteSolver engine(lattice, kind, bo);

    auto& out = ctx.out;
    const std::string title = (kind == GameKind::Dng ? "DNG(" : "GEN(") + group.name() + ")";
    out << "Playing " << title << ". Enter an element label or index, 'moves' to list legal moves, "
        << "'quit' to stop.\n";
    ElementSubset position = group.empty_subset();
    bool human_turn = !engine_first;
    bool last_mover_human = engine_first;  // irrelevant until someone moves
    while (true) {
        const auto moves = engine.legal_moves(position);
        if (moves.empty()) {
            if (kind == GameKind::Gen && group.generates(position))
                out << "The selected elements generate " << group.name() << ". ";
            else
                out << "No legal move remains. ";
            out << (last_mover_human ? "You win.\n" : "Engine wins.\n");
            return kExitOk;
        }
        out << "position " << describe_position(group, position) << ", nim " << engine.nim(position) << '\n';
        Element choice = 0;
        if (human_turn) {
            out << "legal moves:";
            for (std::size_t i = 0; i < moves.size(); ++i)
                out << (i ? ", " : " ") << group.label(moves[i]);
            out << '\n';
            while (true) {
                out << "your move> " << std::flush;
                std::string line;
                if (!std::getline(ctx.in, line)) {
                    out << "\nGame abandoned.\n";
                    return kExitOk;
                }
                line = trim(line);
                if (line == "quit") {
                    out << "Game abandoned.\n";
                    return kExitOk;
                }
                if (line == "moves") {
                    for (auto m : moves)
                        out << "  " << m << ": " << group.label(m) << '\n';
                    continue;
                }
                std::optional<Element> picked = group.find_label(line);
                if (!picked && !line.empty() && std::all_of(line.begin(), line.end(), ::isdigit)) {
                    const auto v = std::stoul(line);
                    if (v < group.order())
                        picked = static_cast<Element>(v);
                }
                if (!picked || !std::binary_search(moves.begin(), moves.end(), *picked)) {
                    out << "illegal move '" << line << "'\n";
                    continue;
                }
                choice = *picked;
                break;
            }
        } else {
            const auto advice = engine.optimal_move(position);
            if (const auto* w = std::get_if<WinningMove>(&advice)) {
                choice = w->element;
                out << "engine selects " << group.label(choice) << " (winning)\n";
            } else {
                choice = std::get<NoWinningMove>(advice).element;
                out << "engine selects " << group.label(choice) << " (no winning move)\n";
            }
        }
        position.set(choice);
        last_mover_human = human_turn;
        human_turn = !human_turn;
    }
}

int cmd_export_dot(Context& ctx, const std::string& text, const std::string& game) {
    const auto kind = game == "dng" ? GameKind::Dng : GameKind::Gen;
    const auto group = build_group(parse_group_spec(text));
    const auto report = solve(group, kind, ctx.lattice);
    ctx.out << export_dot(report, group.order());
    return kExitOk;
}

std::optional<std::filesystem::path> default_cache_dir() {
    if (const char* dir = std::getenv("GGN_CACHE_DIR"); dir && *dir)
        return std::filesystem::path(dir);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "ggn";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "ggn";
    return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Nim-numbers of the generating games GEN(G) and DNG(G) on finite groups", "ggn"};
    app.require_subcommand(1);

    std::size_t lattice_cap = kDefaultLatticeCap;
    bool stretch = false, no_cache = false;
    unsigned workers = 0;
    app.add_option("--lattice-cap", lattice_cap, "largest group order for subgroup enumeration");
    app.add_flag("--stretch", stretch, "raise the lattice cap to " + std::to_string(kStretchLatticeCap));
    app.add_flag("--no-cache", no_cache, "do not read or write the lattice cache");
    app.add_option("--workers", workers, "worker threads (0 = all cores)");

    const auto games = CLI::IsMember({"dng", "gen"});
    const auto formats = CLI::IsMember({"text", "csv", "json"});

    std::string spec, game, method = "auto", format = "text", family, catalog;
    std::size_t from = 1, to = 1;
    std::uint64_t zeta_max = 100;
    bool explain = false, engine_first = false;

    auto* nim = app.add_subcommand("nim", "nim-number of one group");
    nim->add_option("spec", spec, "group, e.g. S4, C3 x C3, C7:C3@2, AGL+(1,7)")->required();
    nim->add_option("--game", game, "dng or gen (default: both)")->check(games);
    nim->add_option("--method", method, "auto, solver, brute or formula")
        ->check(CLI::IsMember({"auto", "solver", "brute", "formula"}));
    nim->add_option("--format", format, "text, csv or json")->check(formats);

    auto* table = app.add_subcommand("table", "values for a range of S_n or A_n");
    table->add_option("family", family, "S or A")->required()->check(CLI::IsMember({"S", "A"}));
    table->add_option("--from", from, "first n")->required();
    table->add_option("--to", to, "last n")->required();
    table->add_option("--game", game, "dng or gen (default: both)")->check(games);
    table->add_option("--method", method, "auto, solver, brute or formula")
        ->check(CLI::IsMember({"auto", "solver", "brute", "formula"}));
    table->add_option("--format", format, "text, csv or json")->check(formats);

    auto* zeta = app.add_subcommand("zeta", "list zeta-primes");
    zeta->add_option("--max", zeta_max, "largest candidate")->required();
    zeta->add_flag("--explain", explain, "show the verdict for every prime p = 3 mod 4");

    auto* classify = app.add_subcommand("classify", "structural facts and closed-form values");
    classify->add_option("spec", spec, "group")->required();

    auto* verify = app.add_subcommand("verify", "cross-check solver, oracle and formulas on a catalog");
    verify->add_option("--catalog", catalog, "JSON catalog (default: built-in)");

    auto* play = app.add_subcommand("play", "play against the engine");
    play->add_option("spec", spec, "group")->required();
    play->add_option("--game", game, "dng or gen")->required()->check(games);
    play->add_flag("--engine-first", engine_first, "let the engine open");

    auto* dot = app.add_subcommand("export-dot", "structure-class DAG in DOT format");
    dot->add_option("spec", spec, "group")->required();
    dot->add_option("--game", game, "dng or gen")->required()->check(games);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    Context ctx{in, out, err, {}};
    ctx.lattice.cap = stretch ? std::max(lattice_cap, kStretchLatticeCap) : lattice_cap;
    ctx.lattice.workers = workers;
    if (!no_cache)
        ctx.lattice.cache_dir = default_cache_dir();

    try {
        if (*nim)
            return cmd_nim(ctx, spec, game, method, format);
        if (*table)
            return cmd_table(ctx, family, from, to, game, method, format);
        if (*zeta)
            return cmd_zeta(ctx, zeta_max, explain);
        if (*classify)
            return cmd_classify(ctx, spec);
        if (*verify)
            return cmd_verify(ctx, catalog);
        if (*play)
            return cmd_play(ctx, spec, game, engine_first);
        if (*dot)
            return cmd_export_dot(ctx, spec, game);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace ggn::cli
