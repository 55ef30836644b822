#include "cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "prefdom/abundance.hpp"
#include "prefdom/condorcet.hpp"
#include "prefdom/diversity.hpp"
#include "prefdom/domain_io.hpp"
#include "prefdom/errors.hpp"
#include "prefdom/generators.hpp"
#include "prefdom/maximality.hpp"
#include "prefdom/profile.hpp"
#include "prefdom/reports.hpp"
#include "prefdom/sampling.hpp"
#include "prefdom/search_min.hpp"
#include "prefdom/soc.hpp"
#include "prefdom/uniform_subset.hpp"

namespace prefdom::cli {

namespace {

std::string slurp(const std::string& path, std::istream* stdin_stream) {
    if (path == "-") {
        if (!stdin_stream) throw data_error("no stdin available for '-'");
        std::ostringstream os;
        os << stdin_stream->rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw data_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Domain load_domain(const std::string& path, std::istream* stdin_stream) {
    std::istringstream in(slurp(path, stdin_stream));
    return read_domain(in);
}

// Profiles arrive either as profile JSON or as a PrefLib SOC file.
Profile load_profile(const std::string& path, std::istream* stdin_stream) {
    const std::string text = slurp(path, stdin_stream);
    const auto first = text.find_first_not_of(" \t\r\n");
    std::istringstream in(text);
    if (first != std::string::npos && text[first] == '{') return profile_from_json(in);
    return parse_soc(in);
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        try {
            out.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw precondition_error(std::string("invalid ") + what + " entry '" + cur + "'");
        }
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else cur.push_back(c);
    }
    flush();
    if (out.empty()) throw precondition_error(std::string("empty ") + what + " list");
    return out;
}

Domain make_family(const std::string& family, int n, const std::string& set_list,
                   const std::string& law_path, const std::vector<std::string>& inputs,
                   bool allow_long, std::istream* stdin_stream) {
    if (family == "black-sp") return black_single_peaked(n);
    if (family == "fishburn") return fishburn_alternating(n, allow_long);
    if (family == "caterpillar-gs") return caterpillar_group_separable(n);
    if (family == "single-crossing") return single_crossing_path(n);
    if (family == "unrestricted") return unrestricted_domain(n, allow_long);
    if (family == "set-alternating") {
        if (set_list.empty()) throw precondition_error("set-alternating needs --set");
        return set_alternating(n, AlternativeSet(parse_int_list(set_list, "--set")));
    }
    if (family == "never-law" || family == "arrow-sp") {
        if (law_path.empty()) throw precondition_error(family + " needs --law");
        std::istringstream in(slurp(law_path, stdin_stream));
        NeverLaw law = parse_never_law(in, n);
        if (family == "arrow-sp") {
            // Arrow's single-peaked form: exactly one xN3 condition per triple.
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b)
                    for (int c = b + 1; c <= n; ++c) {
                        const auto conds = law.conditions({a, b, c});
                        if (conds.size() != 1 || conds.front().slot != 3)
                            throw precondition_error(
                                "arrow-sp laws need exactly one never-bottom (xN3) condition per "
                                "triple");
                    }
        }
        return generate_from_never_law(law, allow_long);
    }
    if (family == "s-construction") {
        if (inputs.size() != 2) throw precondition_error("s-construction takes two domain files");
        return s_construction(load_domain(inputs[0], stdin_stream),
                              load_domain(inputs[1], stdin_stream));
    }
    throw precondition_error(
        "unknown family '" + family +
        "' (families: black-sp, arrow-sp, fishburn, set-alternating, caterpillar-gs, "
        "single-crossing, s-construction, never-law, unrestricted)");
}

std::string condorcet_text(const CondorcetReport& report) {
    std::ostringstream os;
    os << "is_cd: " << (report.is_cd ? "true" : "false") << "\n";
    if (report.witness)
        os << "witness: (" << (*report.witness)[0] << "," << (*report.witness)[1] << ","
           << (*report.witness)[2] << ")\n";
    return os.str();
}

std::string vector_csv(const AbundanceVector& vec) {
    std::ostringstream os;
    os << "k,s\n";
    for (std::size_t i = 0; i < vec.entries.size(); ++i) os << i + 1 << "," << vec.entries[i] << "\n";
    return os.str();
}

std::string vector_text(const AbundanceVector& vec) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < vec.entries.size(); ++i) {
        if (i) os << ",";
        os << vec.entries[i];
    }
    os << ")\n";
    return os.str();
}

}  // namespace

CommandOutcome run_cli(const std::vector<std::string>& args, std::istream* stdin_stream) {
    CommandOutcome outcome;
    std::ostringstream out;
    std::ostringstream diag;

    CLI::App app{"restricted preference domains: Condorcet verification and diversity measures"};
    app.require_subcommand(1);
    std::function<int()> action;

    // option storage shared across subcommands; each invocation parses one
    std::string file, file2, family, set_list, law_path, kind_name, ks_list;
    std::string format = "json";
    std::vector<std::string> extra_inputs;
    int k = 0, n = 0, min_size = 3, max_size = 0, trials = 0, workers = 0;
    std::int64_t s_value = -1, agents = 0;
    std::uint64_t seed = 0;
    bool allow_long = false;

    {
        auto* cmd = app.add_subcommand("check", "test the Condorcet property of a domain");
        cmd->add_option("file", file, "domain file or -")->required();
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        cmd->callback([&] {
            action = [&]() {
                const auto report = is_condorcet(load_domain(file, stdin_stream));
                out << (format == "text" ? condorcet_text(report) : to_json(report));
                return report.is_cd ? 0 : 1;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("maximal", "test maximality of a Condorcet domain");
        cmd->add_option("file", file)->required();
        cmd->callback([&] {
            action = [&]() {
                const bool result = is_maximal(load_domain(file, stdin_stream));
                out << (result ? "maximal\n" : "not maximal\n");
                return result ? 0 : 1;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("close", "extend a Condorcet domain to a maximal one");
        cmd->add_option("file", file)->required();
        cmd->callback([&] {
            action = [&]() {
                write_domain(out, close_to_maximal(load_domain(file, stdin_stream)));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("discordant", "test discordance of a maximal Condorcet domain");
        cmd->add_option("file", file)->required();
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        cmd->callback([&] {
            action = [&]() {
                const auto report = is_discordant(load_domain(file, stdin_stream));
                if (format == "text") {
                    out << (report.discordant ? "discordant\n" : "not discordant\n");
                    for (const auto& row : report.subsets)
                        out << "{" << row.subset.to_string() << "}: size " << row.restriction_size
                            << (row.maximal ? ", maximal" : ", not maximal") << "\n";
                } else {
                    out << to_json(report);
                }
                return report.discordant ? 0 : 1;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("uniform-subset",
                                       "largest subset whose triples share one never condition");
        cmd->add_option("file", file)->required();
        cmd->add_option("--min-size", min_size)->check(CLI::PositiveNumber);
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        cmd->callback([&] {
            action = [&]() {
                const auto result =
                    find_uniform_never_subset(load_domain(file, stdin_stream), min_size);
                if (!result) {
                    diag << "no uniform subset of size >= " << min_size << "\n";
                    return 1;
                }
                if (format == "text")
                    out << "{" << result->subset.to_string() << "} " << result->condition.to_string()
                        << "\n";
                else
                    out << to_json(*result);
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("abundance", "exact abundance at k, or test (k,s)-abundance");
        cmd->add_option("file", file)->required();
        cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--s", s_value, "when given, test (k,s)-abundance");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
        cmd->callback([&] {
            action = [&]() {
                const Domain d = load_domain(file, stdin_stream);
                if (s_value >= 0) {
                    const bool ok = is_abundant(d, k, static_cast<std::size_t>(s_value));
                    out << (ok ? "abundant\n" : "not abundant\n");
                    return ok ? 0 : 1;
                }
                const auto result = exact_abundance(d, k);
                if (format == "text")
                    out << "s=" << result.s << " argmin={" << result.argmin.to_string() << "}\n";
                else
                    out << to_json(result, d.num_alternatives());
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("vector", "full abundance vector");
        cmd->add_option("file", file)->required();
        cmd->add_flag("--allow-long", allow_long, "lift the n <= 12 cap");
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
        cmd->callback([&] {
            action = [&]() {
                const Domain d = load_domain(file, stdin_stream);
                const auto vec = abundance_vector(d, allow_long);
                if (format == "csv") out << vector_csv(vec);
                else if (format == "text") out << vector_text(vec);
                else out << to_json(vec, d.num_alternatives());
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("compare",
                                       "order two domains by abundance vector, or two profiles by "
                                       "a diversity index (--kind)");
        cmd->add_option("file", file)->required();
        cmd->add_option("file2", file2)->required();
        cmd->add_option("--kind", kind_name, "diversity index for profile comparison");
        cmd->add_option("--k", k);
        cmd->add_flag("--allow-long", allow_long);
        cmd->callback([&] {
            action = [&]() {
                if (!kind_name.empty()) {
                    const auto kind = parse_index_kind(kind_name);
                    if (!kind) throw precondition_error("unknown index kind '" + kind_name + "'");
                    const auto verdict = compare_profiles(
                        load_profile(file, stdin_stream), load_profile(file2, stdin_stream), *kind,
                        k > 0 ? std::optional<int>(k) : std::nullopt);
                    out << to_string(verdict) << "\n";
                    return 0;
                }
                const Domain d1 = load_domain(file, stdin_stream);
                const Domain d2 = load_domain(file2, stdin_stream);
                out << comparison_json(compare_abundance(d1, d2, allow_long),
                                       abundance_vector(d1, allow_long),
                                       abundance_vector(d2, allow_long));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("restrict", "restrict a domain to a subset of alternatives");
        cmd->add_option("file", file)->required();
        cmd->add_option("--set", set_list, "labels, e.g. 1,3,5")->required();
        cmd->callback([&] {
            action = [&]() {
                const Domain d = load_domain(file, stdin_stream);
                write_domain(out,
                             restrict_domain(d, AlternativeSet(parse_int_list(set_list, "--set"))));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("generate", "emit a built-in domain family");
        cmd->add_option("family", family,
                        "black-sp | arrow-sp | fishburn | set-alternating | caterpillar-gs | "
                        "single-crossing | s-construction | never-law | unrestricted")
            ->required();
        cmd->add_option("inputs", extra_inputs, "domain files for s-construction");
        cmd->add_option("--n", n);
        cmd->add_option("--set", set_list);
        cmd->add_option("--law", law_path);
        cmd->add_flag("--allow-long", allow_long);
        cmd->callback([&] {
            action = [&]() {
                write_domain(out, make_family(family, n, set_list, law_path, extra_inputs,
                                              allow_long, stdin_stream));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("sample", "sample a uniform random profile from a domain");
        cmd->add_option("file", file)->required();
        cmd->add_option("--agents", agents)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed)->required();
        cmd->callback([&] {
            action = [&]() {
                out << to_json(sample_profile(load_domain(file, stdin_stream), agents, seed));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("experiment",
                                       "abundance frequencies of sampled profiles over a source");
        cmd->add_option("file", file, "source domain file (or use --family)");
        cmd->add_option("--family", family);
        cmd->add_option("--n", n);
        cmd->add_option("--set", set_list);
        cmd->add_option("--agents", agents)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--ks", ks_list, "subset sizes, e.g. 3,4")->required();
        cmd->add_option("--seed", seed)->required();
        cmd->add_option("--workers", workers, "0 = machine parallelism");
        cmd->add_flag("--allow-long", allow_long);
        cmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
        cmd->callback([&] {
            action = [&]() {
                if (file.empty() == family.empty())
                    throw precondition_error("experiment needs a source file or --family, not both");
                Domain source = family.empty() ? load_domain(file, stdin_stream)
                                               : make_family(family, n, set_list, law_path, {},
                                                             allow_long, stdin_stream);
                ExperimentConfig cfg{std::move(source), agents, trials,
                                     parse_int_list(ks_list, "--ks"), seed, workers};
                diag << "running " << trials << " trials over " << cfg.source.size() << " orders\n";
                const auto hs = run_experiment(cfg);
                out << (format == "csv" ? experiment_csv(hs) : experiment_json(cfg, hs));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("indices", "diversity index of a profile (JSON or SOC)");
        cmd->add_option("file", file)->required();
        cmd->add_option("--kind", kind_name)->required();
        cmd->add_option("--k", k);
        cmd->callback([&] {
            action = [&]() {
                const auto kind = parse_index_kind(kind_name);
                if (!kind) throw precondition_error("unknown index kind '" + kind_name + "'");
                out << to_json(compute_index(load_profile(file, stdin_stream), *kind,
                                             k > 0 ? std::optional<int>(k) : std::nullopt));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("ingest-soc", "convert a PrefLib SOC file to profile JSON");
        cmd->add_option("file", file)->required();
        cmd->callback([&] {
            action = [&]() {
                std::istringstream in(slurp(file, stdin_stream));
                out << to_json(parse_soc(in));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("canon", "canonical form under relabeling");
        cmd->add_option("file", file)->required();
        cmd->callback([&] {
            action = [&]() {
                write_domain(out, canonical_form(load_domain(file, stdin_stream)));
                return 0;
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("search-min",
                                       "smallest (k,s)-abundant Condorcet domain up to --max-size");
        cmd->add_option("--n", n)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--s", s_value)->required()->check(CLI::PositiveNumber);
        cmd->add_option("--max-size", max_size)->required()->check(CLI::PositiveNumber);
        cmd->add_flag("--allow-long", allow_long);
        cmd->callback([&] {
            action = [&]() {
                const auto d = search_min_abundant(n, k, static_cast<std::size_t>(s_value), max_size,
                                                   allow_long);
                if (!d) {
                    diag << "no (" << k << "," << s_value << ")-abundant Condorcet domain of size <= "
                         << max_size << " for n=" << n << "\n";
                    return 1;
                }
                write_domain(out, *d);
                return 0;
            };
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        outcome.payload = subs.empty() ? app.help() : subs.front()->help();
        return outcome;
    } catch (const CLI::ParseError& e) {
        diag << e.what() << "\n\n" << app.help();
        outcome.exit_code = 2;
        outcome.diagnostics = diag.str();
        return outcome;
    }

    try {
        outcome.exit_code = action ? action() : 2;
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        outcome.exit_code = 3;
    }
    outcome.payload = out.str();
    outcome.diagnostics = diag.str();
    return outcome;
}

}  // namespace prefdom::cli
