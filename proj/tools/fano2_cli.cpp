// Command-line front end: full classification runs, single-entry screens,
// calculator subcommands and construction verification, in plain text or
// JSON. Exit codes: 0 success, 1 certificate/identity failure, 2 input or
// parse failure.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fano2/defaults.hpp"
#include "fano2/goldens.hpp"
#include "fano2/screen.hpp"

namespace {

using namespace fano2;

struct CliConfig {
    std::optional<std::string> catalog_path;
    std::optional<std::string> facts_path;
    bool json = false;
    std::vector<int> entry_filter;
};

void print_step(const cert::CertStep& s) {
    std::cout << "    " << (s.hypothesis ? "[hyp] " : "") << s.desc << "  [" << rat_str(s.lhs) << " "
              << cert::rel_str(s.rel) << " " << rat_str(s.rhs) << "]\n";
}

void print_certificate(const cert::Certificate& c, bool full_steps) {
    std::cout << "entry " << c.entry << ": " << cert::verdict_str(c.verdict) << "\n";
    if (!c.constructions.empty()) {
        for (const auto& t : c.constructions) {
            std::cout << "  construction " << t.type;
            if (t.variant) std::cout << " (variant)";
            std::cout << " [";
            for (size_t i = 0; i < t.checklist.size(); ++i) std::cout << (i ? "," : "") << t.checklist[i];
            std::cout << "] " << t.source << "\n";
        }
    }
    if (full_steps)
        for (const auto& s : c.steps) print_step(s);
    else if (c.verdict == cert::Verdict::Excluded && c.contradiction) {
        print_step(c.steps[c.contradiction->first]);
        print_step(c.steps[c.contradiction->second]);
    }
}

int run_classify(const CliConfig& cfg, const catalog::Catalog& cat, const facts::FactTable& facts,
                 bool full_steps) {
    auto rep = screen::classify_all(cat, facts);
    if (!cfg.entry_filter.empty()) {
        std::vector<cert::Certificate> filtered;
        for (auto& c : rep.certificates)
            for (int n : cfg.entry_filter)
                if (c.entry == n) filtered.push_back(c);
        rep.certificates = std::move(filtered);
    }
    if (cfg.json) {
        std::cout << screen::report_json(rep).dump(2) << "\n";
        return 0;
    }
    if (cfg.entry_filter.empty()) {
        std::cout << "admissible classes (" << rep.admissible.size() << "):";
        for (int n : rep.admissible) std::cout << " " << n;
        std::cout << "\n";
        std::cout << "double constructions:";
        for (int n : rep.double_construction_entries) std::cout << " " << n;
        std::cout << "\n\n";
    }
    for (const auto& c : rep.certificates) print_certificate(c, full_steps);
    return 0;
}

int run_window(const CliConfig& cfg, const std::string& ambient, long pa, long degree, bool ci) {
    auto amb = lattice::ambient_from_str(ambient);
    if (!amb) throw InputError("unknown ambient '" + ambient + "'");
    const auto setup = screen::make_setup(*amb, {pa, degree}, ci);
    const auto w = screen::imprimitive_window(setup);
    if (cfg.json) {
        nlohmann::ordered_json j;
        j["ambient"] = ambient;
        j["pa"] = pa;
        j["degree"] = degree;
        j["lower"] = w.lower;
        j["upper"] = w.upper;
        j["feasible"] = w.feasible;
        j["genus_bound"] = screen::genus_bound(setup);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "window for " << ambient << " with (p_a, degree) = (" << pa << ", " << degree << "): eu(F) in ["
                  << w.lower << ", " << w.upper << "], " << (w.feasible ? "feasible" : "infeasible") << "\n";
        std::cout << "genus bound for this ambient: " << screen::genus_bound(setup) << "\n";
    }
    return 0;
}

std::pair<long, long> parse_pair(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos) throw InputError(std::string(what) + " must be given as a,b");
    try {
        return {std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw InputError(std::string(what) + " must be a pair of integers");
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic certificates for boundary pairs with trivial log canonical class on rank-2 Fano 3-folds"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_flag("--json", cfg.json, "machine-readable output");
    std::string catalog_path, facts_path;
    app.add_option("--catalog", catalog_path, "override the embedded catalog file");
    app.add_option("--facts", facts_path, "override the embedded fact table");

    auto* classify = app.add_subcommand("classify", "run the full screen and print the admissible table");
    classify->fallthrough();
    classify->add_option("--entry", cfg.entry_filter, "restrict output to these entries");

    auto* scr = app.add_subcommand("screen", "print the full certificate of one entry");
    scr->fallthrough();
    int screen_entry_no = 0;
    scr->add_option("--entry", screen_entry_no, "entry number (1..36)")->required();

    auto* window = app.add_subcommand("window", "Euler-window calculator for a blow-up realization");
    window->fallthrough();
    std::string window_ambient;
    long window_pa = 0, window_degree = 1;
    bool window_ci = false;
    window->add_option("--ambient", window_ambient, "P3, Q3 or V1..V5")->required();
    window->add_option("--genus", window_pa, "arithmetic genus of the center");
    window->add_option("--degree", window_degree, "degree of the center");
    window->add_flag("--ci", window_ci, "center is the hyperplane-pair curve on V5");

    auto* lat = app.add_subcommand("lattice", "rank-2 lattice calculators");
    lat->fallthrough();
    auto* solveb = lat->add_subcommand("solve-boundary", "enumerate boundary decompositions");
    solveb->fallthrough();
    std::vector<long> mu;
    solveb->add_option("--mu", mu, "the two -K coefficients")->expected(2)->required();
    auto* blowup = lat->add_subcommand("blowup", "blow-up lattice of an ambient and a curve");
    blowup->fallthrough();
    std::string blow_ambient;
    long blow_pa = 0, blow_degree = 1;
    blowup->add_option("--ambient", blow_ambient)->required();
    blowup->add_option("--genus", blow_pa);
    blowup->add_option("--degree", blow_degree);

    auto* surf = app.add_subcommand("surface", "ruled-surface calculators");
    surf->fallthrough();
    std::string surf_ruled, surf_class, surf_with;
    long surf_target = 0;
    std::string surf_box = "10,10";
    auto* s_int = surf->add_subcommand("intersect", "pair two classes");
    s_int->fallthrough();
    s_int->add_option("--ruled", surf_ruled, "g,e")->required();
    s_int->add_option("--class", surf_class, "a,b")->required();
    s_int->add_option("--with", surf_with, "a,b")->required();
    auto* s_gen = surf->add_subcommand("genus", "arithmetic genus of a class");
    s_gen->fallthrough();
    s_gen->add_option("--ruled", surf_ruled, "g,e")->required();
    s_gen->add_option("--class", surf_class, "a,b")->required();
    auto* s_solve = surf->add_subcommand("solve-genus", "enumerate classes of a given genus");
    s_solve->fallthrough();
    s_solve->add_option("--ruled", surf_ruled, "g,e")->required();
    s_solve->add_option("--target", surf_target, "target genus")->required();
    s_solve->add_option("--box", surf_box, "amax,bmax");

    auto* verify = app.add_subcommand("verify", "golden construction identities");
    verify->fallthrough();
    std::string verify_target;
    std::string chain_path;
    verify->add_option("target", verify_target, "beta | example-4-11")->required();
    verify->add_option("--chain", chain_path, "override the embedded chain file");

    auto* factscmd = app.add_subcommand("facts", "list the external fact table");
    factscmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    if (!catalog_path.empty()) cfg.catalog_path = catalog_path;
    if (!facts_path.empty()) cfg.facts_path = facts_path;

    // Data-file problems (parse failures, catalog invariant violations) are
    // input errors; failures found while running are certificate errors.
    catalog::Catalog cat;
    facts::FactTable facts;
    if (classify->parsed() || scr->parsed() || factscmd->parsed()) {
        try {
            if (classify->parsed() || scr->parsed()) cat = load_catalog(cfg.catalog_path);
            facts = load_facts(cfg.facts_path);
        } catch (const Error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    try {
        if (classify->parsed()) return run_classify(cfg, cat, facts, /*full_steps=*/!cfg.entry_filter.empty());
        if (scr->parsed()) {
            if (screen_entry_no < 1 || screen_entry_no > 36) throw InputError("entry must lie in 1..36");
            cfg.entry_filter = {screen_entry_no};
            return run_classify(cfg, cat, facts, /*full_steps=*/true);
        }
        if (window->parsed()) return run_window(cfg, window_ambient, window_pa, window_degree, window_ci);
        if (solveb->parsed()) {
            const auto ms = lattice::solve_boundary_decomposition(mu[0], mu[1]);
            if (cfg.json) {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& m : ms) j.push_back({{m.m[0][0], m.m[0][1]}, {m.m[1][0], m.m[1][1]}});
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << ms.size() << " decomposition(s)\n";
                for (const auto& m : ms)
                    std::cout << "  [" << m.m[0][0] << " " << m.m[0][1] << "; " << m.m[1][0] << " " << m.m[1][1]
                              << "]  det = " << m.det() << "\n";
            }
            return 0;
        }
        if (blowup->parsed()) {
            auto amb = lattice::ambient_from_str(blow_ambient);
            if (!amb) throw InputError("unknown ambient '" + blow_ambient + "'");
            const auto L = lattice::blowup_lattice(lattice::ambient(*amb), {blow_pa, blow_degree});
            std::cout << "H^3 = " << L.triple.t300 << ", H^2E = " << L.triple.t210 << ", HE^2 = " << L.triple.t120
                      << ", E^3 = " << L.triple.t030 << ", B3 = " << L.b3
                      << ", (-K)^3 = " << lattice::fano_degree(L) << "\n";
            return 0;
        }
        if (s_int->parsed() || s_gen->parsed() || s_solve->parsed()) {
            const auto [g, e] = parse_pair(surf_ruled, "--ruled");
            const surfaces::RuledSurface S(g, e);
            if (s_int->parsed()) {
                const auto [a, b] = parse_pair(surf_class, "--class");
                const auto [c, d] = parse_pair(surf_with, "--with");
                std::cout << surfaces::intersect(S, {a, b}, {c, d}) << "\n";
            } else if (s_gen->parsed()) {
                const auto [a, b] = parse_pair(surf_class, "--class");
                std::cout << rat_str(surfaces::arithmetic_genus(S, {a, b})) << "\n";
            } else {
                const auto [amax, bmax] = parse_pair(surf_box, "--box");
                const auto sols = surfaces::genus_equation_solutions(S, surf_target, amax, bmax);
                for (const auto& [a, b] : sols) std::cout << "(" << a << ", " << b << ")\n";
                std::cout << sols.size() << " solution(s)\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            if (verify_target == "beta") {
                const auto rep = goldens::verify_beta();
                std::cout << "shear straightens the boundary cubic: " << (rep.shear_straightens ? "pass" : "FAIL")
                          << "\n"
                          << "sign involution squares to the identity: " << (rep.involution_squares ? "pass" : "FAIL")
                          << "\n"
                          << "shear and involution commute: " << (rep.commutes ? "pass" : "FAIL") << "\n";
                return rep.passed ? 0 : 1;
            }
            if (verify_target == "example-4-11") {
                const auto chain =
                    chain_path.empty() ? goldens::default_chain() : goldens::load_chain_file(chain_path);
                const auto rep = goldens::verify_modification_chain(chain);
                for (const auto& l : rep.links) {
                    std::cout << "link '" << l.label << "': " << (l.passed ? "pass" : "FAIL") << "\n";
                    for (const auto& f : l.failures) std::cout << "    " << f << "\n";
                }
                std::cout << "final ring: " << rep.free_variables << " free variables\n";
                return goldens::chain_passes(rep) ? 0 : 1;
            }
            throw InputError("unknown verify target '" + verify_target + "' (use beta or example-4-11)");
        }
        if (factscmd->parsed()) {
            const auto& table = facts;
            if (cfg.json) {
                nlohmann::ordered_json j = nlohmann::ordered_json::array();
                for (const auto& id : table.ids()) {
                    const auto& f = table.get(id);
                    j.push_back({{"id", f.id}, {"statement", f.statement}, {"source", f.source}, {"note", f.note}});
                }
                std::cout << j.dump(2) << "\n";
            } else {
                for (const auto& id : table.ids()) {
                    const auto& f = table.get(id);
                    std::cout << f.id << "\n  " << f.statement << "\n  -- " << f.source << "\n";
                }
            }
            return 0;
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const KeyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
