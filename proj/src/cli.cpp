#include "impbase/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "impbase/algorithms.hpp"
#include "impbase/bases.hpp"
#include "impbase/bench.hpp"
#include "impbase/horn.hpp"
#include "impbase/io.hpp"
#include "impbase/reduction.hpp"
#include "impbase/structure.hpp"

namespace impbase::cli {

namespace {

using nlohmann::json;

// Either a closed-set family or a basis, as named on the command line.
// A basis file is turned into its closure system by model enumeration.
struct LoadedSystem {
    ClosureSystem system;
    std::optional<Basis> basis; // present when the input was a .imp file
};

bool looks_like_imp(const std::string& path, const std::string& format) {
    if (format == "imp") return true;
    if (format == "fam") return false;
    return std::filesystem::path(path).extension() == ".imp";
}

LoadedSystem load_system(const std::string& path, const std::string& format) {
    if (looks_like_imp(path, format)) {
        Basis basis = read_imp_file(path);
        return {system_from_basis(basis), std::move(basis)};
    }
    return {read_fam_file(path), std::nullopt};
}

ElementSet parse_set_arg(const Universe& universe, const std::string& text) {
    std::istringstream iss(text);
    std::string tok;
    ElementSet out;
    while (iss >> tok) {
        if (tok == "{}") continue;
        auto idx = universe.index_of(tok);
        if (!idx) throw std::runtime_error("element '" + tok + "' is not in the universe");
        out.insert(*idx);
    }
    return out;
}

json set_to_json(const Universe& universe, ElementSet s) {
    json arr = json::array();
    for (int e : s) arr.push_back(universe.label(e));
    return arr;
}

json basis_to_json(const Basis& basis) {
    json arr = json::array();
    for (const Implication& imp : basis.implications) {
        arr.push_back({{"premise", set_to_json(basis.universe, imp.premise)},
                       {"conclusion", set_to_json(basis.universe, imp.conclusion)}});
    }
    return arr;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

struct Options {
    std::string input;
    std::string format = "auto";
    std::string out_path;
    bool as_json = false;
};

int cmd_closure(const Options& opt, const std::string& set_text, const std::string& algorithm,
                std::ostream& out) {
    LoadedSystem loaded = load_system(opt.input, opt.format);
    const Universe& universe = loaded.system.universe();
    ElementSet input = parse_set_arg(universe, set_text);

    std::string algo = algorithm;
    if (algo.empty()) algo = loaded.basis ? "folklore" : "phi";

    ElementSet closed;
    std::size_t checks = 0;
    std::optional<std::size_t> passes;
    if (algo == "phi") {
        closed = phi_closure(loaded.system, input);
    } else {
        if (!loaded.basis) throw std::runtime_error("algorithm '" + algo + "' needs a basis (.imp input)");
        const Basis& basis = *loaded.basis;
        if (algo == "folklore") {
            FolkloreResult r = folklore_closure(basis, input);
            closed = r.closure;
            checks = r.checks;
            passes = r.passes;
        } else if (algo == "ordered") {
            SweepResult r = ordered_iteration(basis, input);
            closed = r.closure;
            checks = r.checks;
        } else if (algo == "forward") {
            SweepResult r = forward_chaining_closure(basis, input);
            closed = r.closure;
            checks = r.checks;
        } else if (algo == "wild") {
            SweepResult r = wild_closure(basis, input);
            closed = r.closure;
            checks = r.checks;
        } else {
            throw CLI::ValidationError("--algorithm", "unknown algorithm '" + algo + "'");
        }
    }

    if (opt.as_json) {
        json doc = {{"algorithm", algo},
                    {"input", set_to_json(universe, input)},
                    {"closure", set_to_json(universe, closed)}};
        if (algo != "phi") doc["checks"] = checks;
        if (passes) doc["passes"] = *passes;
        out << doc.dump(2) << '\n';
    } else {
        out << set_to_string(universe, closed) << '\n';
    }
    return 0;
}

int cmd_basis(const Options& opt, const std::string& kind, const std::string& form,
              const std::string& order, bool sequence, bool report_redundant,
              std::ostream& out) {
    LoadedSystem loaded = load_system(opt.input, opt.format);
    const ClosureSystem& system = loaded.system;

    Basis basis;
    std::optional<OrderedSequence> run_list;
    if (kind == "delta") {
        basis = build_sigma_delta(system);
    } else if (kind == "d") {
        basis = build_d_basis(system);
    } else if (kind == "d-plus") {
        auto [plus, seq] = build_d_plus(build_d_basis(system), system);
        basis = std::move(plus);
        run_list = std::move(seq);
    } else if (kind == "e") {
        basis = build_e_basis(system);
    } else if (kind == "dg") {
        basis = build_dg_canonical(system);
    } else {
        throw CLI::ValidationError("--kind", "unknown basis kind '" + kind + "'");
    }

    if (form == "unit") basis = unit_expansion(basis);
    else if (form == "aggregated") basis = aggregate(basis);
    else if (!form.empty()) throw CLI::ValidationError("--form", "unknown form '" + form + "'");

    if (order == "binary-first") {
        std::stable_partition(basis.implications.begin(), basis.implications.end(),
                              [](const Implication& imp) { return imp.premise.count() <= 1; });
    } else if (order == "rank") {
        RankTable ranks = d_ranks(system, build_d_basis(system));
        auto max_rank = [&](ElementSet premise) {
            std::size_t r = 0;
            for (int e : premise) r = std::max(r, ranks.d_rank[static_cast<std::size_t>(e)]);
            return r;
        };
        std::stable_sort(basis.implications.begin(), basis.implications.end(),
                         [&](const Implication& a, const Implication& b) {
                             bool ba = a.premise.count() <= 1, bb = b.premise.count() <= 1;
                             if (ba != bb) return ba;
                             return max_rank(a.premise) < max_rank(b.premise);
                         });
    } else if (!order.empty() && order != "none") {
        throw CLI::ValidationError("--order", "unknown order '" + order + "'");
    }

    std::ostringstream rendered;
    if (opt.as_json) {
        json doc = {{"kind", kind},
                    {"form", basis.form == BasisForm::unit ? "unit" : "aggregated"},
                    {"universe", json(basis.universe.labels())},
                    {"implications", basis_to_json(basis)}};
        if (sequence && run_list) {
            Basis steps(basis.universe, run_list->steps, basis.form);
            doc["sequence"] = basis_to_json(steps);
        }
        rendered << doc.dump(2) << '\n';
    } else if (sequence && run_list) {
        Basis steps(basis.universe, run_list->steps, BasisForm::unit);
        write_imp(rendered, steps);
    } else {
        write_imp(rendered, basis);
    }

    if (report_redundant) {
        for (std::size_t i : redundant_implications(basis))
            rendered << "# redundant: "
                     << implication_to_string(basis.universe, basis.implications[i]) << '\n';
    }

    write_output(opt.out_path, rendered.str(), out);
    return 0;
}

int cmd_reduce(const Options& opt, bool standard, const std::string& map_path, std::ostream& out) {
    LoadedSystem loaded = load_system(opt.input, opt.format);

    auto [reduced, map] = reduce_system(loaded.system);
    ElementSet dropped_std;
    ClosureSystem result = reduced;
    if (standard) {
        auto [std_system, std_map] = standardize_system(reduced);
        result = std_system;
        dropped_std = std_map.dropped_nonstandard();
    }

    std::ostringstream rendered;
    write_fam(rendered, result);
    write_output(opt.out_path, rendered.str(), out);

    if (!map_path.empty()) {
        std::ofstream mf(map_path);
        if (!mf) throw std::runtime_error("cannot write '" + map_path + "'");
        const Universe& original = map.original();
        for (std::size_t i = 0; i < original.size(); ++i) {
            int rep = map.representative(static_cast<int>(i));
            bool gone = rep < 0 ||
                        (standard && dropped_std.contains(map.new_index(rep)));
            mf << original.label(static_cast<int>(i)) << " -> "
               << (gone ? "{}" : original.label(rep)) << '\n';
        }
    }
    return 0;
}

int cmd_analyze(const Options& opt, std::ostream& out) {
    LoadedSystem loaded = load_system(opt.input, opt.format);
    const ClosureSystem& system = loaded.system;
    const Universe& universe = system.universe();

    bool reduced = is_reduced(system) && system.empty_closure().empty();
    if (!reduced)
        throw NotReducedError("analyze requires a reduced system; run `reduce` first");

    CoverTable table = build_cover_table(system);
    ElementPoset poset = element_poset(system);

    auto family_to_json = [&](const std::vector<ElementSet>& sets) {
        json arr = json::array();
        for (ElementSet s : sets) arr.push_back(set_to_json(universe, s));
        return arr;
    };

    if (opt.as_json) {
        json covers = json::object();
        for (std::size_t x = 0; x < universe.size(); ++x) {
            covers[universe.label(static_cast<int>(x))] = {
                {"M", family_to_json(table.minimal[x])},
                {"M*", family_to_json(table.minimized[x])}};
        }
        json d_rel = json::array();
        for (auto [x, y] : table.d_pairs) d_rel.push_back({universe.label(x), universe.label(y)});
        json order = json::array();
        for (auto [g, l] : poset.order) order.push_back({universe.label(g), universe.label(l)});
        json cover_rel = json::array();
        for (auto [g, l] : poset.covers) cover_rel.push_back({universe.label(g), universe.label(l)});
        json ext = json::array();
        for (int e : poset.linear_extension) ext.push_back(universe.label(e));
        json doc = {{"universe", json(universe.labels())}, {"covers", covers},
                    {"d_relation", d_rel},            {"order", order},
                    {"cover_relation", cover_rel},    {"linear_extension", ext}};
        out << doc.dump(2) << '\n';
        return 0;
    }

    out << "universe: " << set_to_string(universe, universe.full_set()) << '\n';
    for (std::size_t x = 0; x < universe.size(); ++x) {
        out << "element " << universe.label(static_cast<int>(x)) << ":\n";
        out << "  M:";
        for (ElementSet s : table.minimal[x]) out << " {" << set_to_string(universe, s) << "}";
        out << "\n  M*:";
        for (ElementSet s : table.minimized[x]) out << " {" << set_to_string(universe, s) << "}";
        out << '\n';
    }
    out << "D-relation:";
    for (auto [x, y] : table.d_pairs) out << " (" << universe.label(x) << "," << universe.label(y) << ")";
    out << '\n';
    out << "poset covers:";
    for (auto [g, l] : poset.covers) out << " " << universe.label(g) << ">" << universe.label(l);
    out << '\n';
    out << "linear extension:";
    for (int e : poset.linear_extension) out << ' ' << universe.label(e);
    out << '\n';
    return 0;
}

int cmd_verify(const std::string& basis_path, const std::string& system_path, std::ostream& out) {
    Basis basis = read_imp_file(basis_path);
    ClosureSystem system = read_fam_file(system_path);
    basis = rebind(basis, system.universe());

    ElementSet witness;
    if (is_ordered_direct(basis, system, &witness)) {
        out << "ordered direct\n";
        return 0;
    }
    out << "not ordered direct; witness: " << set_to_string(system.universe(), witness) << '\n';
    return 1;
}

int cmd_order(const std::string& basis_path, const std::string& system_path,
              std::size_t search_cap, const std::string& out_path, std::ostream& out) {
    Basis basis = read_imp_file(basis_path);
    ClosureSystem system = read_fam_file(system_path);
    basis = rebind(basis, system.universe());

    auto perm = find_ordered_direct_ordering(basis, system, search_cap);
    if (!perm) {
        out << "no valid ordering\n";
        return 1;
    }
    Basis reordered = basis;
    reordered.implications.clear();
    for (std::size_t j : *perm) reordered.implications.push_back(basis.implications[j]);
    std::ostringstream rendered;
    write_imp(rendered, reordered);
    write_output(out_path, rendered.str(), out);
    return 0;
}

int cmd_generate(std::size_t domain, std::size_t count, std::uint64_t seed,
                 const std::string& out_dir, std::ostream& out) {
    std::filesystem::create_directories(out_dir);
    GeneratorConfig config;
    config.domain_size = domain;
    config.seed = seed;
    for (std::size_t i = 0; i < count; ++i) {
        std::mt19937_64 rng = trial_rng(seed, i);
        ClosureSystem system = generate_system(config, rng);
        std::ostringstream name;
        name << "system-" << std::setw(4) << std::setfill('0') << i << ".fam";
        std::filesystem::path path = std::filesystem::path(out_dir) / name.str();
        std::ofstream f(path);
        if (!f) throw std::runtime_error("cannot write '" + path.string() + "'");
        write_fam(f, system);
    }
    out << "wrote " << count << " systems to " << out_dir << '\n';
    return 0;
}

std::pair<std::size_t, std::size_t> parse_domains(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        std::size_t v = std::stoul(text);
        return {v, v};
    }
    return {std::stoul(text.substr(0, dots)), std::stoul(text.substr(dots + 2))};
}

int cmd_bench(const std::string& domains, std::size_t trials, std::uint64_t seed,
              const std::string& out_path, bool timing, std::size_t inputs, std::ostream& out) {
    auto [lo, hi] = parse_domains(domains);
    if (lo < 2 || hi < lo) throw CLI::ValidationError("--domains", "expected N or LO..HI with 2 <= LO <= HI");

    std::vector<BenchSummary> rows;
    for (std::size_t domain = lo; domain <= hi; ++domain) {
        GeneratorConfig config;
        config.domain_size = domain;
        config.seed = seed;
        config.trials = trials;
        config.timing = timing;
        config.inputs_per_trial = inputs;
        std::vector<BenchRecord> records = run_experiment(config);
        std::vector<BenchSummary> summary = summarize(records, seed);
        rows.insert(rows.end(), summary.begin(), summary.end());
    }

    std::ostringstream rendered;
    write_csv(rendered, rows);
    write_output(out_path, rendered.str(), out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"implicational bases and closure systems toolkit"};
    app.require_subcommand(1);

    Options opt;

    // closure
    std::string set_text, algorithm;
    CLI::App* closure = app.add_subcommand("closure", "close a set under a basis or a family");
    std::string basis_path, system_path;
    closure->add_option("--basis", basis_path, "basis file (.imp)");
    closure->add_option("--system", system_path, "closed-family file (.fam)");
    closure->add_option("--set", set_text, "input set, labels separated by spaces")->required();
    closure->add_option("--algorithm", algorithm, "phi|folklore|ordered|forward|wild");
    closure->add_flag("--json", opt.as_json, "machine-readable output");

    // basis
    std::string kind, form, order_mode;
    bool sequence = false, report_redundant = false;
    CLI::App* basis_cmd = app.add_subcommand("basis", "construct a basis from a system");
    basis_cmd->add_option("--kind", kind, "delta|d|d-plus|e|dg")->required();
    basis_cmd->add_option("--from", opt.input, "input file (.fam or .imp)")->required();
    basis_cmd->add_option("--form", form, "unit|aggregated");
    basis_cmd->add_option("--order", order_mode, "none|binary-first|rank");
    basis_cmd->add_option("--format", opt.format, "override input format: fam|imp");
    basis_cmd->add_option("--out", opt.out_path, "write to file instead of stdout");
    basis_cmd->add_flag("--sequence", sequence, "with --kind d-plus: print the run list");
    basis_cmd->add_flag("--report-redundant", report_redundant, "append redundancy diagnostics");
    basis_cmd->add_flag("--json", opt.as_json, "machine-readable output");

    // reduce
    bool standard = false;
    std::string map_path;
    CLI::App* reduce_cmd = app.add_subcommand("reduce", "reduce (optionally standardize) a system");
    reduce_cmd->add_option("--from", opt.input, "input file (.fam or .imp)")->required();
    reduce_cmd->add_flag("--standard", standard, "also standardize");
    reduce_cmd->add_option("--format", opt.format, "override input format: fam|imp");
    reduce_cmd->add_option("--out", opt.out_path, "write the family to a file");
    reduce_cmd->add_option("--map-out", map_path, "write the element map to a file");

    // analyze
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "print covers, the D-relation and the element order");
    analyze_cmd->add_option("--from", opt.input, "input file (.fam or .imp)")->required();
    analyze_cmd->add_option("--format", opt.format, "override input format: fam|imp");
    analyze_cmd->add_flag("--json", opt.as_json, "machine-readable output");

    // verify
    std::string od_basis, od_system;
    CLI::App* verify_cmd = app.add_subcommand("verify", "check ordered directness");
    verify_cmd->add_option("--ordered-direct", od_basis, "basis file (.imp)")->required();
    verify_cmd->add_option("--system", od_system, "closed-family file (.fam)")->required();

    // order
    std::string search_basis, search_system;
    std::size_t search_cap = kOrderingSearchCap;
    CLI::App* order_cmd = app.add_subcommand("order", "search for an ordered direct permutation");
    order_cmd->add_option("--search", search_basis, "basis file (.imp)")->required();
    order_cmd->add_option("--system", search_system, "closed-family file (.fam)")->required();
    order_cmd->add_option("--cap", search_cap, "implication count limit for the search");
    order_cmd->add_option("--out", opt.out_path, "write the reordered basis to a file");

    // generate
    std::size_t gen_domain = 6, gen_count = 1;
    std::uint64_t gen_seed = 0;
    std::string gen_dir;
    CLI::App* generate_cmd = app.add_subcommand("generate", "write random closed-set families");
    generate_cmd->add_option("--domain", gen_domain, "universe size")->required();
    generate_cmd->add_option("--count", gen_count, "number of systems");
    generate_cmd->add_option("--seed", gen_seed, "generator seed")->required();
    generate_cmd->add_option("--out-dir", gen_dir, "output directory")->required();

    // bench
    std::string bench_domains = "6..7";
    std::size_t bench_trials = 1000, bench_inputs = 1;
    std::uint64_t bench_seed = 0;
    bool bench_timing = false;
    CLI::App* bench_cmd = app.add_subcommand("bench", "run the measurement harness, CSV output");
    bench_cmd->add_option("--domains", bench_domains, "N or LO..HI");
    bench_cmd->add_option("--trials", bench_trials, "systems per domain size");
    bench_cmd->add_option("--seed", bench_seed, "generator seed")->required();
    bench_cmd->add_option("--out", opt.out_path, "write CSV to a file");
    bench_cmd->add_option("--inputs-per-trial", bench_inputs, "random inputs per system");
    bench_cmd->add_flag("--timing", bench_timing, "also record wall-time medians");

    std::vector<const char*> argv;
    argv.push_back("impbase");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        int code = app.exit(e, out, usage);
        if (!usage.str().empty()) err << usage.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (closure->parsed()) {
            if (basis_path.empty() == system_path.empty())
                throw CLI::ValidationError("closure", "give exactly one of --basis and --system");
            opt.input = basis_path.empty() ? system_path : basis_path;
            opt.format = basis_path.empty() ? "fam" : "imp";
            return cmd_closure(opt, set_text, algorithm, out);
        }
        if (basis_cmd->parsed())
            return cmd_basis(opt, kind, form, order_mode, sequence, report_redundant, out);
        if (reduce_cmd->parsed()) return cmd_reduce(opt, standard, map_path, out);
        if (analyze_cmd->parsed()) return cmd_analyze(opt, out);
        if (verify_cmd->parsed()) return cmd_verify(od_basis, od_system, out);
        if (order_cmd->parsed())
            return cmd_order(search_basis, search_system, search_cap, opt.out_path, out);
        if (generate_cmd->parsed())
            return cmd_generate(gen_domain, gen_count, gen_seed, gen_dir, out);
        if (bench_cmd->parsed())
            return cmd_bench(bench_domains, bench_trials, bench_seed, opt.out_path, bench_timing,
                             bench_inputs, out);
        err << "no subcommand\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace impbase::cli
