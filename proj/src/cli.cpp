#include "tough/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "tough/codec.hpp"
#include "tough/harness.hpp"
#include "tough/json_io.hpp"
#include "tough/recognizers.hpp"
#include "tough/reductions.hpp"
#include "tough/solver.hpp"

namespace tough {

namespace {

using nlohmann::json;

enum class Fmt { Auto, G6, EdgeList };

std::string slurp(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream ss;
    if (path == "-") {
        ss << stdin_stream.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw std::invalid_argument("cannot open " + path);
        ss << f.rdbuf();
    }
    return ss.str();
}

Graph load_graph(const std::string& path, Fmt fmt, std::istream& stdin_stream) {
    std::string text = slurp(path, stdin_stream);
    Fmt use = fmt;
    if (use == Fmt::Auto) {
        use = path.size() >= 3 && path.compare(path.size() - 3, 3, ".el") == 0 ? Fmt::EdgeList
                                                                              : Fmt::G6;
    }
    if (use == Fmt::EdgeList) return parse_edge_list(text);
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) return parse_graph6(line);
    }
    throw ParseError("no graph6 record in input", 0);
}

std::string indices_str(const VertexSet& s) {
    std::string out = "[";
    bool first = true;
    for (int v : s.to_indices()) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    }
    return out + "]";
}

std::string tau_line(const ToughnessValue& v) {
    switch (v.kind) {
        case ToughnessValue::Kind::Zero: return "zero";
        case ToughnessValue::Kind::Infinite: return "infinite";
        case ToughnessValue::Kind::Finite:
            return "finite " + v.value->str() + " tough_set=" + indices_str(*v.tough_set);
    }
    return "";
}

void emit_gadget(const GadgetResult& r, bool as_json, std::ostream& out) {
    if (as_json) {
        out << json{{"graph6", to_graph6(r.graph)}, {"labels", labels_to_json(r.labels)}}.dump()
            << "\n";
    } else {
        out << to_graph6(r.graph) << "\n" << labels_to_json(r.labels).dump() << "\n";
    }
}

const char* cubic_class_name(CubicClass::Kind k) {
    switch (k) {
        case CubicClass::CompleteK4: return "complete_k4";
        case CubicClass::TauOneThird: return "tau_one_third";
        case CubicClass::TauOneHalf: return "tau_one_half";
        case CubicClass::TauAtLeastTwoThirds: return "tau_at_least_two_thirds";
    }
    return "";
}

using CheckFn = CheckReport (*)(const HarnessConfig&);
const std::vector<std::pair<std::string, CheckFn>>& check_table() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"solver_oracle_agreement", check_solver_agreement},
        {"rational_bounds", check_rational_bounds},
        {"bg_identity", check_bg_identity},
        {"bg_connectivity", check_bg_connectivity},
        {"gk_trichotomy", check_gk_trichotomy},
        {"hr_blocks", check_hr},
        {"gadget_lemmas", check_gadget_lemmas},
        {"fourreg_recognizer", check_fourreg_recognizer},
        {"spanning_half_tough", check_spanning_half_tough},
        {"cubic_recognizer", check_cubic_recognizer},
    };
    return table;
}

void print_report_table(const std::vector<CheckReport>& reports, std::ostream& out) {
    out << std::left << std::setw(26) << "check" << std::setw(12) << "mode" << std::right
        << std::setw(10) << "items" << std::setw(10) << "failures" << std::setw(10) << "seconds"
        << "\n";
    for (const auto& r : reports) {
        const char* mode = r.mode == CheckReport::Mode::Exhaustive
                               ? "exhaustive"
                               : (r.mode == CheckReport::Mode::Sampled ? "sampled" : "heuristic");
        out << std::left << std::setw(26) << r.check_id << std::setw(12) << mode << std::right
            << std::setw(10) << r.corpus_size << std::setw(10) << r.failures.size() << std::setw(10)
            << std::fixed << std::setprecision(2) << r.elapsed_seconds << "\n";
        std::size_t show = std::min<std::size_t>(r.failures.size(), 5);
        for (std::size_t i = 0; i < show; ++i)
            out << "    FAIL " << r.failures[i].graph6 << "  " << r.failures[i].detail << "\n";
        if (r.failures.size() > show)
            out << "    ... " << (r.failures.size() - show) << " more\n";
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact graph toughness toolkit"};
    app.name("tough");
    app.require_subcommand(1);

    // shared flags, bound per subcommand below
    std::string in_path = "-";
    std::string format = "auto";
    bool as_json = false;
    std::string t_str = "1";
    int workers = 1;
    int max_n = 24;
    int budget = 20000;
    std::uint64_t seed = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--in", in_path, "input graph file, or - for stdin")->capture_default_str();
        cmd->add_option("--format", format, "g6 | el (default: sniff by extension, g6 for stdin)")
            ->check(CLI::IsMember({"auto", "g6", "el"}));
    };
    auto fmt_of = [&]() {
        return format == "g6" ? Fmt::G6 : (format == "el" ? Fmt::EdgeList : Fmt::Auto);
    };

    int code = 0;

    auto* tau_cmd = app.add_subcommand("tau", "exact toughness with a certifying tough set");
    add_input(tau_cmd);
    tau_cmd->add_flag("--json", as_json, "JSON output");
    tau_cmd->add_option("--workers", workers, "worker threads");
    tau_cmd->add_option("--max-n", max_n, "exhaustive size cap");
    tau_cmd->callback([&] {
        Graph g = load_graph(in_path, fmt_of(), in);
        ToughnessValue v = toughness(g, SolveOptions{max_n, workers});
        if (as_json)
            out << toughness_to_json(v).dump() << "\n";
        else
            out << tau_line(v) << "\n";
    });

    auto* decide_cmd = app.add_subcommand("decide", "is the graph t-tough?");
    add_input(decide_cmd);
    decide_cmd->add_option("--t", t_str, "threshold as a/b")->required();
    decide_cmd->add_flag("--json", as_json, "JSON output");
    decide_cmd->add_option("--workers", workers, "worker threads");
    decide_cmd->add_option("--max-n", max_n, "exhaustive size cap");
    decide_cmd->add_option("--budget", budget, "heuristic budget beyond the cap");
    decide_cmd->add_option("--seed", seed, "heuristic seed");
    decide_cmd->callback([&] {
        Graph g = load_graph(in_path, fmt_of(), in);
        Rational t = parse_rational(t_str);
        try {
            DecideResult d = decide_t_tough(g, t, SolveOptions{max_n, workers});
            if (d.tough) {
                out << (as_json ? json{{"answer", "yes"}}.dump() : "yes") << "\n";
            } else {
                if (as_json)
                    out << json{{"answer", "no"}, {"witness", witness_to_json(*d.witness)}}.dump()
                        << "\n";
                else
                    out << "no\n" << witness_to_json(*d.witness).dump() << "\n";
                code = 1;
            }
        } catch (const SizeCapError&) {
            // beyond the exhaustive cap a found witness still settles "no"
            auto w = refute_heuristic(g, t, budget, seed);
            if (w) {
                if (as_json)
                    out << json{{"answer", "no"}, {"witness", witness_to_json(*w)}}.dump() << "\n";
                else
                    out << "no\n" << witness_to_json(*w).dump() << "\n";
                code = 1;
            } else {
                out << (as_json ? json{{"answer", "undecided"}}.dump() : "undecided") << "\n";
                err << "graph exceeds the exhaustive cap and the heuristic found no witness\n";
                code = 3;
            }
        }
    });

    auto* wv_cmd = app.add_subcommand("witness-verify", "re-check a witness against a graph");
    add_input(wv_cmd);
    std::string witness_str;
    wv_cmd->add_option("--t", t_str, "threshold as a/b")->required();
    wv_cmd->add_option("--witness", witness_str, "witness JSON (default: read from stdin)");
    wv_cmd->callback([&] {
        Graph g = load_graph(in_path, fmt_of(), in);
        std::string src = witness_str;
        if (src.empty()) {
            std::ostringstream ss;
            ss << in.rdbuf();
            src = ss.str();
        }
        Witness w = witness_from_json(json::parse(src), g.vertex_count());
        bool ok = verify_witness(g, parse_rational(t_str), w);
        out << (ok ? "valid" : "invalid") << "\n";
        code = ok ? 0 : 1;
    });

    auto* span_cmd = app.add_subcommand("spanning-half", "spanning subgraph with toughness 1/2");
    add_input(span_cmd);
    span_cmd->add_flag("--json", as_json, "JSON output");
    span_cmd->add_option("--max-n", max_n, "exhaustive size cap");
    span_cmd->callback([&] {
        Graph g = load_graph(in_path, fmt_of(), in);
        Graph h = half_tough_spanning_subgraph(g, SolveOptions{max_n, workers});
        if (as_json)
            out << json{{"graph6", to_graph6(h)}, {"edges", h.edge_count()}}.dump() << "\n";
        else
            out << to_graph6(h) << "\n";
    });

    auto* gad = app.add_subcommand("gadget", "reduction gadget builders");
    gad->require_subcommand(1);
    int gk_k = 1, hr_r = 5;
    auto* gk_cmd = gad->add_subcommand("gk", "clique-expansion gadget for a target ratio");
    add_input(gk_cmd);
    gk_cmd->add_option("--t", t_str, "target ratio a/b")->capture_default_str();
    gk_cmd->add_option("--k", gk_k, "slack parameter")->capture_default_str();
    gk_cmd->add_flag("--json", as_json, "single JSON object output");
    gk_cmd->callback([&] {
        Graph g = load_graph(in_path, fmt_of(), in);
        Rational t = parse_rational(t_str);
        if (t.num < 1) throw std::invalid_argument("gk needs a positive target ratio");
        GkParams p{static_cast<int>(t.num), static_cast<int>(t.den), gk_k};
        emit_gadget(build_gk(g, p), as_json, out);
    });
    auto* bg_cmd = gad->add_subcommand("bg", "bipartite double");
    add_input(bg_cmd);
    bg_cmd->add_flag("--json", as_json, "single JSON object output");
    bg_cmd->callback([&] {
        emit_gadget(build_bipartite_double(load_graph(in_path, fmt_of(), in)), as_json, out);
    });
    auto* hr_cmd = gad->add_subcommand("hr", "near-regular Hamiltonian block");
    hr_cmd->add_option("--r", hr_r, "degree parameter, r >= 5")->required();
    hr_cmd->add_flag("--json", as_json, "single JSON object output");
    hr_cmd->callback([&] { emit_gadget(build_hr(hr_r), as_json, out); });
    auto* ao_cmd = gad->add_subcommand("attach-odd", "attach one block per vertex (odd r)");
    add_input(ao_cmd);
    ao_cmd->add_option("--r", hr_r, "odd degree target, r >= 5")->required();
    ao_cmd->add_flag("--json", as_json, "single JSON object output");
    ao_cmd->callback([&] {
        emit_gadget(attach_gadgets_odd(load_graph(in_path, fmt_of(), in), hr_r), as_json, out);
    });
    auto* ae_cmd = gad->add_subcommand("attach-even", "attach one block per vertex (even r)");
    add_input(ae_cmd);
    ae_cmd->add_option("--r", hr_r, "even degree target, r >= 6")->required();
    ae_cmd->add_flag("--json", as_json, "single JSON object output");
    ae_cmd->callback([&] {
        emit_gadget(attach_gadgets_even(load_graph(in_path, fmt_of(), in), hr_r), as_json, out);
    });

    auto* rec = app.add_subcommand("recognize", "polynomial recognizers");
    rec->require_subcommand(1);
    auto* cub_cmd = rec->add_subcommand("cubic", "toughness class of a connected cubic graph");
    add_input(cub_cmd);
    cub_cmd->add_flag("--json", as_json, "JSON output");
    cub_cmd->callback([&] {
        CubicClass c = classify_cubic(load_graph(in_path, fmt_of(), in));
        if (as_json) {
            json j{{"class", cubic_class_name(c.kind)}};
            if (c.cut_vertex) j["cut_vertex"] = *c.cut_vertex;
            out << j.dump() << "\n";
        } else {
            out << cubic_class_name(c.kind);
            if (c.cut_vertex) out << " cut_vertex=" << *c.cut_vertex;
            out << "\n";
        }
    });
    auto* fr_cmd = rec->add_subcommand("4reg", "1/2-toughness of a 4-regular graph");
    add_input(fr_cmd);
    fr_cmd->add_flag("--json", as_json, "JSON output");
    fr_cmd->callback([&] {
        bool half = recognize_half_tough_4regular(load_graph(in_path, fmt_of(), in));
        if (as_json)
            out << json{{"half_tough", half}}.dump() << "\n";
        else
            out << (half ? "half-tough: yes" : "half-tough: no") << "\n";
    });

    auto* ver_cmd = app.add_subcommand("verify", "run the claim-verification harness");
    std::vector<std::string> check_ids;
    std::vector<std::string> cubic_paths, fourreg_paths;
    int verify_max_n = 0;
    ver_cmd->add_option("checks", check_ids, "check ids to run (default: all)")
        ->check(CLI::IsMember([] {
            std::vector<std::string> ids;
            for (const auto& [id, fn] : check_table()) ids.push_back(id);
            return ids;
        }()));
    ver_cmd->add_flag("--json", as_json, "JSON lines, one report per check");
    ver_cmd->add_option("--workers", workers, "worker threads (0 = hardware)");
    ver_cmd->add_option("--seed", seed, "sampling seed");
    ver_cmd->add_option("--budget", budget, "heuristic budget");
    ver_cmd->add_option("--max-n", verify_max_n, "clamp every corpus bound to this");
    ver_cmd->add_option("--cubic-corpus", cubic_paths, "graph6 files of cubic graphs (n <= 14)");
    ver_cmd->add_option("--fourreg-corpus", fourreg_paths,
                        "graph6 files of 4-regular graphs (n <= 10)");
    ver_cmd->callback([&] {
        HarnessConfig cfg;
        cfg.workers = workers;
        cfg.seed = seed;
        cfg.heuristic_budget = budget;
        cfg.cubic_corpus_paths = cubic_paths;
        cfg.fourreg_corpus_paths = fourreg_paths;
        if (verify_max_n > 0) cfg.clamp_to(verify_max_n);
        std::vector<CheckReport> reports;
        if (check_ids.empty()) {
            RunAllResult all = run_all(cfg, &err);
            reports = std::move(all.reports);
        } else {
            for (const auto& [id, fn] : check_table()) {
                if (std::find(check_ids.begin(), check_ids.end(), id) == check_ids.end()) continue;
                err << "[harness] " << id << "...\n";
                reports.push_back(fn(cfg));
            }
        }
        bool ok = true;
        for (const auto& r : reports) ok = ok && r.passed();
        if (as_json) {
            for (const auto& r : reports) out << report_to_json(r).dump() << "\n";
        } else {
            print_report_table(reports, out);
            out << (ok ? "all checks passed" : "CHECKS FAILED") << "\n";
        }
        code = ok ? 0 : 1;
    });

    auto* conv_cmd = app.add_subcommand("convert", "translate between graph formats");
    add_input(conv_cmd);
    std::string to_fmt;
    conv_cmd->add_option("--to", to_fmt, "target format: g6 | el")
        ->required()
        ->check(CLI::IsMember({"g6", "el"}));
    conv_cmd->callback([&] {
        Graph g = load_graph(in_path, fmt_of(), in);
        if (to_fmt == "g6")
            out << to_graph6(g) << "\n";
        else
            out << to_edge_list(g);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const SizeCapError& e) {
        err << "refused: " << e.what() << "\n";
        return 3;
    } catch (const tough::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "json error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return code;
}

}  // namespace tough
