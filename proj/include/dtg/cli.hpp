#ifndef DTG_CLI_HPP
#define DTG_CLI_HPP

// Command-line front end. parse_args fills a RunConfig; run executes it and
// writes results to `out`, diagnostics to `err`.
//
// Exit status: 0 success, 1 parameter error, 2 budget refusal, 3 a finding
// that contradicts the odd-girth theorem (never expected).

#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dtg/coloring.hpp"
#include "dtg/error.hpp"
#include "dtg/report_json.hpp"
#include "dtg/oddcycle.hpp"
#include "dtg/typecore.hpp"
#include "dtg/typegraph.hpp"
#include "dtg/vertexspace.hpp"

namespace dtg::cli {

enum ExitCode : int { kOk = 0, kParameterError = 1, kBudgetRefused = 2, kFalsified = 3 };

struct RunConfig {
    std::string subcommand;
    std::optional<std::uint64_t> n, s, beta;
    std::optional<std::string> type_string;  // graph type given directly
    std::optional<std::string> parse_string; // `type --parse`
    std::optional<std::string> dual_string;  // `type --dual`
    std::optional<std::string> a, b;         // `tp` vertices
    std::uint64_t max_len = 0;               // 0: subcommand default
    std::uint64_t seed = 1;
    std::string format = "text";
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t n_min = 0, n_max = 0;
    std::uint64_t walks = 10000;
    std::string method = "greedy";
    std::uint32_t max_colors = 16;
    unsigned threads = 1;
    bool timing = false;
};

/// "0,1,3" -> {0,1,3}. Rejects empty items and unsorted input.
inline Vertex parse_vertex(const std::string& text) {
    std::vector<Ordinal> elems;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
            throw ParameterError("bad vertex element '" + item + "' in \"" + text + "\"");
        }
        const auto value = std::stoull(item);
        if (value > std::numeric_limits<Ordinal>::max()) throw ParameterError("vertex element too large: " + item);
        if (!elems.empty() && elems.back() >= value) {
            throw ParameterError("vertex \"" + text + "\" is not strictly increasing");
        }
        elems.push_back(static_cast<Ordinal>(value));
    }
    if (elems.empty()) throw ParameterError("empty vertex");
    return Vertex(std::move(elems));
}

namespace detail {

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw ParameterError(msg);
}

inline void require_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (c.format == f) return;
    std::string list;
    for (const char* f : allowed) list += std::string(list.empty() ? "" : "|") + f;
    throw ParameterError(c.subcommand + ": --format must be one of " + list);
}

inline TypePattern graph_type(const RunConfig& c) {
    if (c.type_string) {
        require(!c.s, "give either --type or --n/--s, not both");
        return parse_type(*c.type_string);
    }
    require(c.n && c.s, c.subcommand + ": needs --type or both --n and --s");
    return canonical_type(*c.n, *c.s);
}

inline GraphSpec graph(const RunConfig& c) {
    require(c.beta.has_value(), c.subcommand + ": --beta is required");
    return GraphSpec(*c.beta, graph_type(c));
}

inline std::string join(std::span<const Ordinal> v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

inline void print_cycle(std::ostream& out, const Cycle& c) {
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        out << "  a" << i << " = {" << join(c.vertices[i].elems()) << "}";
        if (i < c.steps.size()) out << "   " << to_string(c.steps[i]);
        out << '\n';
    }
}

inline int cmd_type(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const int modes = (c.parse_string ? 1 : 0) + (c.dual_string ? 1 : 0) + ((c.n || c.s) ? 1 : 0);
    require(modes == 1, "type: use exactly one of --n/--s, --parse, --dual");
    if (!c.parse_string && !c.dual_string) require(c.n && c.s, "type: --n and --s are both required");
    const TypePattern t = c.parse_string  ? parse_type(*c.parse_string)
                          : c.dual_string ? parse_type(*c.dual_string).dual()
                                          : canonical_type(*c.n, *c.s);
    if (c.format == "json") {
        json j = {{"type", t.str()}, {"width", t.width()}};
        if (c.n) {
            j["n"] = *c.n;
            j["s"] = *c.s;
        }
        if (c.dual_string) j["dual_of"] = *c.dual_string;
        out << j.dump() << '\n';
    } else {
        out << t.str() << '\n';
    }
    return kOk;
}

inline int cmd_tp(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    require(c.a && c.b, "tp: --a and --b are required");
    const Vertex a = parse_vertex(*c.a);
    const Vertex b = parse_vertex(*c.b);
    const auto t = type_of(a, b);
    if (c.format == "json") {
        json j = {{"a", to_json(a)}, {"b", to_json(b)}, {"disjoint", t.has_value()}};
        j["type"] = t ? json(t->str()) : json(nullptr);
        out << j.dump() << '\n';
    } else {
        out << (t ? t->str() : std::string("none (not disjoint)")) << '\n';
    }
    return kOk;
}

inline int cmd_export(const RunConfig& c, std::ostream& out) {
    const std::string fmt = c.format == "text" ? "dimacs" : c.format;
    require(fmt == "dimacs" || fmt == "jsonl", "export: --format must be dimacs or jsonl");
    export_graph(graph(c), fmt == "dimacs" ? ExportFormat::dimacs : ExportFormat::jsonl, out, c.budget);
    return kOk;
}

inline int cmd_girth(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    const GraphSpec g = graph(c);
    const std::uint64_t max_len = c.max_len ? c.max_len : (c.s && !c.type_string ? 2 * *c.s + 3 : 5);
    const auto res = find_shortest_odd_cycle(g, max_len, {c.budget, c.threads});
    if (c.format == "json") {
        json scans = json::array();
        for (const auto& s : res.scans) scans.push_back(to_json(s, c.timing));
        json j = {{"beta", g.beta()},  {"type", g.type().str()}, {"max_length", max_len},
                  {"found", res.cycle.has_value()}, {"scans", scans}};
        j["length"] = res.cycle ? json(res.cycle->length()) : json(nullptr);
        j["cycle"] = res.cycle ? to_json(*res.cycle) : json(nullptr);
        out << j.dump(2) << '\n';
    } else if (res.cycle) {
        out << "shortest odd cycle in G(" << g.beta() << ", " << g.type() << "): length " << res.cycle->length()
            << '\n';
        print_cycle(out, *res.cycle);
    } else {
        out << "no odd cycle of length <= " << max_len << " in G(" << g.beta() << ", " << g.type() << ")\n";
    }
    return kOk;
}

inline int cmd_witness(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_format(c, {"text", "json"});
    require(c.n && c.s, "witness: --n and --s are required");
    const auto w = construct_witness(*c.s, *c.n);
    const auto rep = validate_witness(w);
    if (c.format == "json") {
        out << to_json(w, rep).dump(2) << '\n';
    } else {
        out << "(2s+3)-cycle for s=" << w.s << ", n=" << w.n << " in G(beta, " << canonical_type(w.n, w.s)
            << "), beta >= " << rep.min_beta << '\n';
        print_cycle(out, w.cycle);
        for (const auto& ch : rep.checks) {
            out << "  [" << (ch.passed ? "ok" : "FAIL") << "] " << ch.name;
            if (!ch.detail.empty()) out << ": " << ch.detail;
            out << '\n';
        }
        out << "largest element " << rep.largest_element << '\n';
    }
    if (!rep.passed) {
        err << "FALSIFYING FINDING: witness for s=" << w.s << ", n=" << w.n << " failed validation\n";
        return kFalsified;
    }
    return kOk;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_format(c, {"text", "json"});
    require(c.n && c.s, "verify: --n and --s are required");
    const auto rep = verify_theorem(*c.s, *c.n, c.max_len, {c.budget, c.threads});
    if (c.format == "json") {
        out << to_json(rep, c.timing).dump(2) << '\n';
    } else {
        out << "G(beta, " << canonical_type(rep.n, rep.s) << "), s=" << rep.s << ", n=" << rep.n << " ["
            << (rep.in_theorem_range ? "theorem range" : "exploration: outside theorem range") << "]\n";
        for (const auto& scan : rep.scans) {
            out << "  length <= " << scan.max_length << ": "
                << (scan.found ? "odd cycle of length " + std::to_string(scan.found_length) + " found"
                               : "no odd cycle")
                << " (G(" << scan.beta << "), " << scan.search_size << " vertices)";
            if (c.timing) out << " " << std::fixed << std::setprecision(3) << scan.seconds << "s";
            out << '\n';
        }
        if (rep.cycle) print_cycle(out, *rep.cycle);
        if (!rep.cycle && rep.complete) out << "no odd cycle <= " << rep.max_length << '\n';
        if (!rep.complete) out << "incomplete: " << rep.truncated_reason << '\n';
    }
    if (rep.falsified) {
        err << "FALSIFYING FINDING: odd cycle of length " << rep.cycle->length() << " in G(beta, t^" << rep.n
            << "_" << rep.s << ") with n > 2s^2+3s+1\n";
        return kFalsified;
    }
    if (!rep.complete) {
        err << "budget refused: " << rep.truncated_reason << '\n';
        return kBudgetRefused;
    }
    return kOk;
}

inline int cmd_search(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_format(c, {"text", "json", "csv"});
    require(c.s.has_value(), "search: --s is required");
    require(c.n_min && c.n_max, "search: --n-min and --n-max are required");
    const auto table = search_min_n(*c.s, c.n_min, c.n_max, c.max_len, {c.budget, c.threads});
    if (c.format == "json") {
        out << to_json(table).dump(2) << '\n';
    } else if (c.format == "csv") {
        out << "n,in_theorem_range,complete,has_odd_cycle,cycle_length,search_size\n";
        for (const auto& r : table.rows) {
            out << r.n << ',' << r.in_theorem_range << ',' << r.complete << ',' << r.has_odd_cycle << ','
                << r.cycle_length << ',' << r.search_size << '\n';
        }
    } else {
        out << "s=" << table.s << ", odd cycles of length <= " << table.max_length << '\n';
        for (const auto& r : table.rows) {
            out << "  n=" << r.n << (r.in_theorem_range ? " (theorem range)" : "") << ": "
                << (!r.complete       ? "over budget"
                    : r.has_odd_cycle ? "odd cycle of length " + std::to_string(r.cycle_length)
                                      : "none")
                << '\n';
        }
        out << "least n without a short odd cycle: "
            << (table.least_n_without_cycle ? std::to_string(*table.least_n_without_cycle) : "not in range") << '\n';
    }
    if (table.falsified) {
        err << "FALSIFYING FINDING: short odd cycle inside the theorem range\n";
        return kFalsified;
    }
    if (table.truncated) {
        err << "budget refused for part of the range; table truncated\n";
        return kBudgetRefused;
    }
    return kOk;
}

inline int cmd_sandwich(const RunConfig& c, std::ostream& out, std::ostream& err) {
    require_format(c, {"text", "json"});
    require(c.s.has_value(), "sandwich: --s is required");
    const std::uint64_t s = *c.s;
    const std::uint64_t n = c.n ? *c.n : 2 * s * s + 3 * s + 2;
    const std::uint64_t beta = c.beta ? *c.beta : default_walk_beta(s, n);
    const auto sum = run_sandwich_trials(s, n, beta, c.walks, c.seed);
    if (c.format == "json") {
        out << to_json(sum).dump(2) << '\n';
    } else {
        out << "sandwich checks, s=" << s << ", n=" << n << ", beta=" << beta << ", seed=" << c.seed << '\n';
        for (std::size_t k = 0; k < sum.passed_by_length.size(); ++k) {
            out << "  k=" << k + 1 << ": " << sum.passed_by_length[k] << "/" << sum.walks_per_length << " passed\n";
        }
        out << "index bounds violated: " << sum.index_failures << "/" << sum.total << '\n';
        out << "corrected index passed: " << sum.corrected_passed << "/" << sum.total << '\n';
        out << "some index satisfies the bound: " << sum.some_index_passed << "/" << sum.total << '\n';
        out << "dead-end walks resampled: " << sum.resampled << '\n';
    }
    if (sum.first_failure) {
        err << "FALSIFYING FINDING: sandwich check failed at i = M(s+1): " << sum.first_failure->failure << '\n';
        return kFalsified;
    }
    return kOk;
}

inline int cmd_chromatic(const RunConfig& c, std::ostream& out) {
    require_format(c, {"text", "json"});
    require(c.method == "greedy" || c.method == "exact", "chromatic: --method must be greedy or exact");
    const GraphSpec g = graph(c);
    std::optional<ColoringResult> res;
    if (c.method == "greedy") {
        res = greedy_color(g, c.budget);
    } else {
        res = exact_chromatic(g, c.max_colors, std::min<std::uint64_t>(c.budget, kExactVertexCap));
    }
    if (c.format == "json") {
        json j = res ? to_json(*res) : json{{"method", "exact"}, {"num_colors", nullptr}, {"assignment", nullptr}};
        j["beta"] = g.beta();
        j["type"] = g.type().str();
        j["exceeds_max_colors"] = !res.has_value();
        out << j.dump() << '\n';
    } else if (res) {
        out << c.method << " colouring of G(" << g.beta() << ", " << g.type() << "): " << res->num_colors
            << " colours\n";
    } else {
        out << "G(" << g.beta() << ", " << g.type() << ") needs more than " << c.max_colors << " colours\n";
    }
    return kOk;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
    try {
        if (c.subcommand == "type") return detail::cmd_type(c, out);
        if (c.subcommand == "tp") return detail::cmd_tp(c, out);
        if (c.subcommand == "export") return detail::cmd_export(c, out);
        if (c.subcommand == "girth") return detail::cmd_girth(c, out);
        if (c.subcommand == "witness") return detail::cmd_witness(c, out, err);
        if (c.subcommand == "verify") return detail::cmd_verify(c, out, err);
        if (c.subcommand == "search") return detail::cmd_search(c, out, err);
        if (c.subcommand == "sandwich") return detail::cmd_sandwich(c, out, err);
        if (c.subcommand == "chromatic") return detail::cmd_chromatic(c, out);
        err << "unknown subcommand '" << c.subcommand << "'\n";
        return kParameterError;
    } catch (const BudgetError& e) {
        err << "budget refused: " << e.what() << '\n';
        return kBudgetRefused;
    } catch (const FalsificationError& e) {
        err << "FALSIFYING FINDING: " << e.what() << '\n';
        return kFalsified;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kParameterError;
    }
}

/// Wires every subcommand and flag into a CLI11 app writing into `cfg`.
inline void configure(CLI::App& app, RunConfig& cfg) {
    app.require_subcommand(1);
    auto graph_flags = [&](CLI::App* sub) {
        sub->add_option("--beta", cfg.beta, "vertex set is [beta]^n");
        sub->add_option("--n", cfg.n, "width of t^n_s");
        sub->add_option("--s", cfg.s, "parameter s of t^n_s");
        sub->add_option("--type", cfg.type_string, "explicit binary type string");
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format");
        sub->add_option("--budget", cfg.budget, "vertex-count cap")->capture_default_str();
        sub->add_option("--threads", cfg.threads, "worker threads for odd-cycle scans")->capture_default_str();
        sub->add_flag("--timing", cfg.timing, "include wall-clock timings (output is then not reproducible)");
    };

    auto* type = app.add_subcommand("type", "print t^n_s, or parse / dualize a type string");
    type->add_option("--n", cfg.n);
    type->add_option("--s", cfg.s);
    type->add_option("--parse", cfg.parse_string);
    type->add_option("--dual", cfg.dual_string);
    common(type);

    auto* tp = app.add_subcommand("tp", "type of two disjoint vertices");
    tp->add_option("--a", cfg.a, "comma-separated increasing integers")->required();
    tp->add_option("--b", cfg.b, "comma-separated increasing integers")->required();
    common(tp);

    auto* exp = app.add_subcommand("export", "dump G(beta, t) as DIMACS or JSON lines");
    graph_flags(exp);
    common(exp);

    auto* girth = app.add_subcommand("girth", "shortest odd cycle up to --max-len");
    graph_flags(girth);
    girth->add_option("--max-len", cfg.max_len);
    common(girth);

    auto* witness = app.add_subcommand("witness", "construct and validate the (2s+3)-cycle");
    witness->add_option("--n", cfg.n)->required();
    witness->add_option("--s", cfg.s)->required();
    common(witness);

    auto* verify = app.add_subcommand("verify", "exhaustively check for odd cycles of length <= 2s+1");
    verify->add_option("--n", cfg.n)->required();
    verify->add_option("--s", cfg.s)->required();
    verify->add_option("--max-len", cfg.max_len);
    common(verify);

    auto* search = app.add_subcommand("search", "verify over a range of n");
    search->add_option("--s", cfg.s)->required();
    search->add_option("--n-min", cfg.n_min)->required();
    search->add_option("--n-max", cfg.n_max)->required();
    search->add_option("--max-len", cfg.max_len);
    common(search);

    auto* sandwich = app.add_subcommand("sandwich", "random-walk checks of the bounding inequality");
    sandwich->add_option("--s", cfg.s)->required();
    sandwich->add_option("--n", cfg.n, "default 2s^2+3s+2");
    sandwich->add_option("--beta", cfg.beta, "default (2s+2)n(2s+3)");
    sandwich->add_option("--walks", cfg.walks, "walks per length")->capture_default_str();
    sandwich->add_option("--seed", cfg.seed)->capture_default_str();
    common(sandwich);

    auto* chrom = app.add_subcommand("chromatic", "greedy or exact colouring");
    graph_flags(chrom);
    chrom->add_option("--method", cfg.method)->capture_default_str();
    chrom->add_option("--max-colors", cfg.max_colors)->capture_default_str();
    common(chrom);

    for (auto* sub : app.get_subcommands({})) {
        sub->callback([&cfg, sub] { cfg.subcommand = sub->get_name(); });
    }
}

/// Parses argv and runs. CLI syntax errors map to exit status 1.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Disjoint-type graphs: construction, odd-cycle search, and chromatic proxies", "dtgraph"};
    RunConfig cfg;
    configure(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kParameterError;
    }
    return run(cfg, out, err);
}

}  // namespace dtg::cli

#endif  // DTG_CLI_HPP
