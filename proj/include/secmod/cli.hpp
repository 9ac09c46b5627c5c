#pragma once

// Command-line surface. Batch-only: every command reads its arguments, runs,
// emits one JSON document on stdout (or DOT where requested), and exits.
//
// Exit codes: 0 success / no violations; 1 violations or witnesses found;
// 2 usage or parse error; 3 enumeration bound exceeded. Errors are also
// emitted as JSON on the error stream.
//
// SECMOD_MAX_LATTICE and SECMOD_MAX_ELEMENTS override the enumeration bounds.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "report_json.hpp"

namespace secmod::cli {

namespace detail {

inline std::size_t env_bound(const char* name, std::size_t fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    char* end = nullptr;
    unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0' || parsed == 0)
        throw std::invalid_argument(std::string(name) + ": expected a positive integer");
    return static_cast<std::size_t>(parsed);
}

/// Submodule generators: tuples separated by ';', coordinates by ',',
/// optional parentheses and whitespace, e.g. "(1,3);(0,6)" or "1,3;0,6".
inline std::vector<Element> parse_generators(const std::string& text, const FinModule& m) {
    std::vector<Element> gens;
    std::stringstream tuples(text);
    std::string tuple;
    while (std::getline(tuples, tuple, ';')) {
        std::string cleaned;
        for (char c : tuple)
            if (!std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') cleaned += c;
        if (cleaned.empty()) continue;
        Element e;
        std::stringstream coords(cleaned);
        std::string coord;
        while (std::getline(coords, coord, ',')) {
            try {
                e.push_back(std::stoll(coord));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad generator coordinate: '" + coord + "'");
            }
        }
        if (static_cast<int>(e.size()) != m.rank())
            throw std::invalid_argument("generator has " + std::to_string(e.size()) +
                                        " coordinates, module has rank " + std::to_string(m.rank()));
        gens.push_back(m.reduce(std::move(e)));
    }
    return gens;
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact classification toolkit for submodules of finite modules over Z/nZ"};
    app.require_subcommand(1);

    std::string expr, dot_path, submodule_gens, theorem_id, antecedent, consequent;
    i64 ring_override = 0;
    i64 corpus_bound = 0;
    unsigned workers = 1;
    int hom_samples = 100;
    bool cyclic_only = false, p_groups_only = false;

    auto* cmd_enumerate = app.add_subcommand("enumerate", "enumerate the submodule lattice");
    cmd_enumerate->add_option("expr", expr, "module expression, e.g. \"Z6 + Z10\"")->required();
    cmd_enumerate->add_option("--ring", ring_override, "acting ring modulus (default: exponent)");
    cmd_enumerate->add_option("--dot", dot_path, "write the Hasse diagram as DOT ('-' = stdout)");

    auto* cmd_classify = app.add_subcommand("classify", "classify every submodule");
    cmd_classify->add_option("expr", expr)->required();
    cmd_classify->add_option("--ring", ring_override);
    cmd_classify->add_option("--workers", workers, "worker threads for row evaluation");

    auto* cmd_sec = app.add_subcommand("sec", "second radical of a submodule");
    cmd_sec->add_option("expr", expr)->required();
    cmd_sec->add_option("--submodule", submodule_gens, "generators, e.g. \"(1,3);(0,6)\"")->required();
    cmd_sec->add_option("--ring", ring_override);

    auto* cmd_check = app.add_subcommand("check", "verify a theorem (or all) on a module or corpus");
    cmd_check->add_option("theorem", theorem_id, "theorem id or 'all'")->required();
    cmd_check->add_option("expr", expr, "module expression (omit when using --corpus)");
    cmd_check->add_option("--corpus", corpus_bound, "run over all abelian groups of order <= bound");
    cmd_check->add_option("--ring", ring_override);
    cmd_check->add_option("--workers", workers);
    cmd_check->add_option("--hom-samples", hom_samples, "injective homs sampled per type pair");

    auto* cmd_search = app.add_subcommand("search", "search for class-separation witnesses");
    cmd_search->add_option("antecedent", antecedent)->required();
    cmd_search->add_option("consequent", consequent)->required();
    cmd_search->add_option("--corpus", corpus_bound, "corpus bound")->required();
    cmd_search->add_option("--workers", workers);

    auto* cmd_corpus = app.add_subcommand("corpus", "list all abelian groups up to a bound");
    cmd_corpus->add_option("bound", corpus_bound)->required();
    cmd_corpus->add_flag("--cyclic-only", cyclic_only);
    cmd_corpus->add_flag("--p-groups-only", p_groups_only);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        detail::emit(err, error_json("usage", e.what()));
        return 2;
    }

    try {
        HarnessOptions opt;
        opt.lattice_bound = detail::env_bound("SECMOD_MAX_LATTICE", kDefaultLatticeBound);
        opt.element_bound = detail::env_bound("SECMOD_MAX_ELEMENTS", kDefaultElementBound);
        opt.hom_samples = hom_samples;
        opt.workers = workers;

        if (app.got_subcommand(cmd_enumerate)) {
            FinModule m = parse_module_expr(expr, ring_override);
            SubLattice l = enumerate_submodules(m, opt.lattice_bound, opt.element_bound);
            if (!dot_path.empty()) {
                if (dot_path == "-") {
                    write_dot(out, l);
                } else {
                    std::ofstream f(dot_path);
                    if (!f) throw std::invalid_argument("cannot open DOT output file: " + dot_path);
                    write_dot(f, l);
                    detail::emit(out, json{{"schema_version", "1"},
                                           {"module", module_json(m)},
                                           {"dot_file", dot_path},
                                           {"nodes", l.size()}});
                }
            } else {
                detail::emit(out, lattice_json(l));
            }
            return 0;
        }

        if (app.got_subcommand(cmd_classify)) {
            FinModule m = parse_module_expr(expr, ring_override);
            auto rep = classify_all(m, workers, opt.lattice_bound, opt.element_bound);
            detail::emit(out, classification_json(rep));
            return 0;
        }

        if (app.got_subcommand(cmd_sec)) {
            FinModule m = parse_module_expr(expr, ring_override);
            Submodule n = span(m, detail::parse_generators(submodule_gens, m));
            Submodule sec = second_radical(n);
            detail::emit(out, json{{"schema_version", "1"},
                                   {"module", module_json(m)},
                                   {"submodule", submodule_json(n)},
                                   {"second_radical", submodule_json(sec)}});
            return 0;
        }

        if (app.got_subcommand(cmd_check)) {
            if (theorem_id != "all") {
                const auto& ids = theorem_ids();
                if (std::find(ids.begin(), ids.end(), theorem_id) == ids.end())
                    throw std::invalid_argument("unknown theorem id: " + theorem_id);
            }
            std::vector<TheoremReport> reports;
            if (corpus_bound > 0) {
                CorpusSpec spec{corpus_bound, CorpusFilter::all, {}};
                reports = check_theorem_corpus(theorem_id, spec, opt);
            } else if (!expr.empty()) {
                FinModule m = parse_module_expr(expr, ring_override);
                if (theorem_id == "all") {
                    reports = check_all_theorems(m, opt);
                } else {
                    reports = {check_theorem(theorem_id, m, opt)};
                }
            } else {
                throw std::invalid_argument("check: give a module expression or --corpus <bound>");
            }
            json arr = json::array();
            bool violated = false;
            for (const auto& r : reports) {
                arr.push_back(theorem_report_json(r));
                violated |= !r.passed();
            }
            detail::emit(out, json{{"schema_version", "1"}, {"reports", arr}});
            return violated ? 1 : 0;
        }

        if (app.got_subcommand(cmd_search)) {
            CorpusSpec spec{corpus_bound, CorpusFilter::all, {}};
            auto witnesses = search_counterexample(antecedent, consequent, spec, opt);
            json arr = json::array();
            for (const auto& w : witnesses)
                arr.push_back(json{{"module", module_json(w.module)},
                                   {"gens", secmod::detail::gens_json(w.submodule)},
                                   {"order", w.submodule.order()}});
            detail::emit(out, json{{"schema_version", "1"},
                                   {"antecedent", antecedent},
                                   {"consequent", consequent},
                                   {"max_order", corpus_bound},
                                   {"witnesses", arr},
                                   {"note", "empty means none up to the bound, not non-existence"}});
            return witnesses.empty() ? 0 : 1;
        }

        if (app.got_subcommand(cmd_corpus)) {
            CorpusSpec spec{corpus_bound,
                            cyclic_only ? CorpusFilter::cyclic_only
                                        : p_groups_only ? CorpusFilter::p_groups_only
                                                        : CorpusFilter::all,
                            {}};
            json arr = json::array();
            for (const auto& m : corpus_generate(spec)) arr.push_back(module_json(m));
            detail::emit(out, json{{"schema_version", "1"},
                                   {"max_order", corpus_bound},
                                   {"modules", arr}});
            return 0;
        }
        return 2;
    } catch (const BoundExceeded& e) {
        detail::emit(err, error_json("bound", e.what()));
        return 3;
    } catch (const std::invalid_argument& e) {
        detail::emit(err, error_json("parse", e.what()));
        return 2;
    } catch (const std::exception& e) {
        detail::emit(err, error_json("internal", e.what()));
        return 2;
    }
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace secmod::cli
