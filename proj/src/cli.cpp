#include "metra/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>

#include "metra/bounds.hpp"
#include "metra/convexity.hpp"
#include "metra/distortion.hpp"
#include "metra/embeddings.hpp"
#include "metra/hardness.hpp"
#include "metra/json_io.hpp"
#include "metra/ramsey.hpp"

namespace metra {

namespace {

constexpr int kOk = 0;
constexpr int kCounterexample = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

ConvexityModulus parse_modulus(const std::string& spec) {
    if (spec == "l2") return ConvexityModulus::l2();
    if (spec.rfind("lp:", 0) == 0) return ConvexityModulus::lp(std::stod(spec.substr(3)));
    fail("UsageError", "modulus must be 'l2' or 'lp:<p>'");
}

std::vector<int> parse_index_list(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stod(tok));
    return out;
}

/// Collects output files of one run and drops a replayable manifest next to
/// the first of them. Empty flag values (unused optional outputs) are
/// dropped from the recorded command.
class RunOutputs {
public:
    RunOutputs(std::vector<std::string> argv, json params, std::optional<uint64_t> seed)
        : params_(std::move(params)), seed_(seed) {
        for (size_t i = 0; i < argv.size(); ++i) {
            if (i + 1 < argv.size() && argv[i].rfind("--", 0) == 0 && argv[i + 1].empty()) {
                ++i;
                continue;
            }
            argv_.push_back(argv[i]);
        }
    }

    void write(const std::string& path, const json& payload) {
        write_json_atomic(path, payload);
        outputs_.push_back(path);
    }

    ~RunOutputs() {
        if (outputs_.empty()) return;
        json manifest{{"command", argv_},
                      {"parameters", params_},
                      {"tool_version", kToolVersion},
                      {"outputs", outputs_}};
        if (seed_)
            manifest["seed"] = *seed_;
        else
            manifest["seed"] = nullptr;
        write_json_atomic(outputs_.front() + ".manifest.json", manifest);
    }

private:
    std::vector<std::string> argv_;
    json params_;
    std::optional<uint64_t> seed_;
    std::vector<std::string> outputs_;
};

void emit(const json& j) { std::cout << dump_json(j); }

MetricSpace load_real_metric(const std::string& path) {
    const AnyMetric m = metric_from_json(read_json_file(path));
    if (std::holds_alternative<MetricSpace>(m)) return std::get<MetricSpace>(m);
    return to_real(std::get<RationalMetricSpace>(m));
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"finite metric spaces: embeddings, distortion bounds, hardness certificates"};
    app.require_subcommand(1);

    // ---- gen ----------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate metrics");
    gen->require_subcommand(1);

    int gen_n = 0;
    std::string gen_out, gen_graph_out, gen_modulus = "l2";
    uint64_t gen_seed = 0;

    auto* gen_knn = gen->add_subcommand("knn", "K_{n,n} shortest-path metric");
    gen_knn->add_option("--n", gen_n, "side size")->required();
    gen_knn->add_option("--out", gen_out, "metric JSON file");

    auto* gen_graph = gen->add_subcommand("graph012", "{0,1,2} metric of a G(n,1/2) sample");
    gen_graph->add_option("--n", gen_n, "vertex count")->required();
    gen_graph->add_option("--seed", gen_seed, "generator seed")->required();
    gen_graph->add_option("--out", gen_out, "metric JSON file");
    gen_graph->add_option("--graph-out", gen_graph_out, "graph JSON file");

    auto* gen_l2hard = gen->add_subcommand("l2hard", "exact metric with no l_2-isometric quadruple");
    gen_l2hard->add_option("--n", gen_n, "point count")->required();
    gen_l2hard->add_option("--out", gen_out, "metric JSON file");

    auto* gen_uchard =
        gen->add_subcommand("uchard", "metric defeating every uniformly convex quadruple");
    gen_uchard->add_option("--n", gen_n, "point count")->required();
    gen_uchard->add_option("--modulus", gen_modulus, "l2 or lp:<p>");
    gen_uchard->add_option("--out", gen_out, "metric JSON file");

    // ---- embed --------------------------------------------------------
    auto* embed = app.add_subcommand("embed", "explicit embeddings");
    embed->require_subcommand(1);

    int embed_n = 0;
    double embed_p = 4.0;
    bool embed_basic = false;
    std::string embed_out, embed_input;

    auto* embed_l2 = embed->add_subcommand("knn-l2", "K_{n,n} into l_2^{2n}");
    embed_l2->add_option("--n", embed_n, "side size")->required();
    embed_l2->add_option("--out", embed_out, "point-set JSON file");

    auto* embed_lp = embed->add_subcommand("knn-lp", "K_{n,n} into l_p, p > 2");
    embed_lp->add_option("--n", embed_n, "side size")->required();
    embed_lp->add_option("--p", embed_p, "exponent > 2")->required();
    embed_lp->add_flag("--basic", embed_basic, "2m-dimensional sign-vector variant");
    embed_lp->add_option("--out", embed_out, "point-set JSON file");

    auto* embed_psd = embed->add_subcommand("psd012", "{0,1,2} metric into l_2 via its PSD root");
    embed_psd->add_option("--input", embed_input, "metric JSON file")->required();
    embed_psd->add_option("--out", embed_out, "point-set JSON file");

    // ---- bound --------------------------------------------------------
    auto* bound = app.add_subcommand("bound", "roundness reports and c_p bounds");
    bound->require_subcommand(1);

    int bound_n = 0;
    double bound_p = 2.0;
    std::string bound_xs, bound_ys, bound_input, bound_side_a, bound_side_b;

    auto* bound_round = bound->add_subcommand("roundness", "roundness inequality report");
    bound_round->add_option("--xs", bound_xs, "point-set JSON (x side)")->required();
    bound_round->add_option("--ys", bound_ys, "point-set JSON (y side)")->required();

    auto* bound_knn = bound->add_subcommand("knn", "closed-form c_p(K_{n,n}) bounds");
    bound_knn->add_option("--n", bound_n, "side size")->required();
    bound_knn->add_option("--p", bound_p, "exponent")->required();

    auto* bound_bip = bound->add_subcommand("bipartite", "roundness lower bound on a bipartition");
    bound_bip->add_option("--input", bound_input, "metric JSON file")->required();
    bound_bip->add_option("--side-a", bound_side_a, "comma-separated indices")->required();
    bound_bip->add_option("--side-b", bound_side_b, "comma-separated indices")->required();
    bound_bip->add_option("--p", bound_p, "exponent")->required();

    // ---- check --------------------------------------------------------
    auto* check = app.add_subcommand("check", "validation and certificates");
    check->require_subcommand(1);

    int check_base = 0;
    std::string check_input, check_d, check_modulus = "l2";

    auto* check_metric = check->add_subcommand("metric", "validate the metric axioms");
    check_metric->add_option("--input", check_input, "metric JSON file")->required();

    auto* check_sch = check->add_subcommand("schoenberg", "l_2 embeddability certificate");
    check_sch->add_option("--input", check_input, "metric JSON file")->required();
    check_sch->add_option("--base", check_base, "base index (default 0)");

    auto* check_conv = check->add_subcommand("convexity", "four-point convexity gap");
    check_conv->add_option("--d", check_d, "d12,d13,d14,d23,d24,d34")->required();
    check_conv->add_option("--modulus", check_modulus, "l2 or lp:<p>");

    // ---- hard ---------------------------------------------------------
    auto* hard = app.add_subcommand("hard", "hardness verification");
    hard->require_subcommand(1);
    std::string hard_input;
    auto* hard_verify = hard->add_subcommand("verify", "certify that no quadruple embeds in l_2");
    hard_verify->add_option("--input", hard_input, "metric JSON file")->required();

    // ---- ramsey -------------------------------------------------------
    auto* ramsey = app.add_subcommand("ramsey", "combinatorial pipeline");
    ramsey->require_subcommand(1);

    int r_s = 0, r_k = 0, r_n = 0, r_trials = 0, r_attempts = 0;
    uint64_t r_seed = 0;
    double r_p = 2.0, r_alpha = 1.0;
    std::string r_input, r_out, r_graph_out;

    auto* r_family = ramsey->add_subcommand("family", "almost disjoint k-set family");
    r_family->add_option("--s", r_s, "ground size")->required();
    r_family->add_option("--k", r_k, "set size")->required();

    auto* r_universal = ramsey->add_subcommand("universal", "search G(n,1/2) for universality");
    r_universal->add_option("--n", r_n, "graph size")->required();
    r_universal->add_option("--k", r_k, "K_{k,k} side")->required();
    r_universal->add_option("--s", r_s, "subset size")->required();
    r_universal->add_option("--attempts", r_attempts, "max samples")->required();
    r_universal->add_option("--seed", r_seed, "generator seed")->required();
    r_universal->add_option("--out", r_out, "metric JSON file");
    r_universal->add_option("--graph-out", r_graph_out, "graph JSON file");

    auto* r_mc = ramsey->add_subcommand("mc", "Monte Carlo miss fraction for H = P_k");
    r_mc->add_option("--k", r_k, "path length (vertices)")->required();
    r_mc->add_option("--s", r_s, "graph size")->required();
    r_mc->add_option("--trials", r_trials, "trial count")->required();
    r_mc->add_option("--seed", r_seed, "generator seed")->required();

    auto* r_iso = ramsey->add_subcommand("iso", "largest l_2-isometric subset");
    r_iso->add_option("--input", r_input, "metric JSON file")->required();

    auto* r_screen = ramsey->add_subcommand("screen", "largest subset passing the c_p screen");
    r_screen->add_option("--input", r_input, "metric JSON file")->required();
    r_screen->add_option("--p", r_p, "exponent")->required();
    r_screen->add_option("--alpha", r_alpha, "distortion threshold")->required();

    try {
        std::vector<const char*> argv{"metra"};
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return kUsage;
    }

    try {
        // ---- gen ----
        if (gen_knn->parsed()) {
            RunOutputs out(
                {"gen", "knn", "--n", std::to_string(gen_n), "--out", gen_out},
                json{{"n", gen_n}}, std::nullopt);
            const json j = to_json(knn_metric(gen_n));
            emit(j);
            if (!gen_out.empty()) out.write(gen_out, j);
            return kOk;
        }
        if (gen_graph->parsed()) {
            RunOutputs out({"gen", "graph012", "--n", std::to_string(gen_n), "--seed",
                            std::to_string(gen_seed), "--out", gen_out, "--graph-out",
                            gen_graph_out},
                           json{{"n", gen_n}, {"seed", gen_seed}}, gen_seed);
            const Graph g = sample_gn_half(gen_n, gen_seed);
            const json j = to_json(metric_from_graph_012(g));
            emit(j);
            if (!gen_out.empty()) out.write(gen_out, j);
            if (!gen_graph_out.empty()) out.write(gen_graph_out, to_json(g));
            return kOk;
        }
        if (gen_l2hard->parsed()) {
            RunOutputs out({"gen", "l2hard", "--n", std::to_string(gen_n), "--out", gen_out},
                           json{{"n", gen_n}}, std::nullopt);
            const auto c = build_l2_hard_metric(gen_n);
            json j = to_json(c.metric);
            json a = json::array();
            for (const auto& v : c.a) a.push_back(rational_to_string(v));
            j["a"] = std::move(a);
            j["eps"] = rational_to_string(c.eps);
            j["shrink_rounds"] = c.shrink_rounds;
            emit(j);
            if (!gen_out.empty()) out.write(gen_out, j);
            return kOk;
        }
        if (gen_uchard->parsed()) {
            RunOutputs out({"gen", "uchard", "--n", std::to_string(gen_n), "--modulus",
                            gen_modulus, "--out", gen_out},
                           json{{"n", gen_n}, {"modulus", gen_modulus}}, std::nullopt);
            const auto c = build_uc_hard_metric(gen_n, parse_modulus(gen_modulus));
            json j = to_json(c.metric);
            j["etas"] = c.etas;
            j["esses"] = c.esses;
            j["modulus"] = gen_modulus;
            emit(j);
            if (!gen_out.empty()) out.write(gen_out, j);
            return kOk;
        }

        // ---- embed ----
        if (embed_l2->parsed()) {
            RunOutputs out({"embed", "knn-l2", "--n", std::to_string(embed_n), "--out", embed_out},
                           json{{"n", embed_n}}, std::nullopt);
            const PointSet ps = embed_knn_l2(embed_n);
            json j = to_json(ps);
            j["report"] = to_json(distortion(knn_metric(embed_n), ps));
            emit(j);
            if (!embed_out.empty()) out.write(embed_out, to_json(ps));
            return kOk;
        }
        if (embed_lp->parsed()) {
            std::vector<std::string> argv{"embed", "knn-lp", "--n", std::to_string(embed_n),
                                          "--p", std::to_string(embed_p)};
            if (embed_basic) argv.push_back("--basic");
            argv.insert(argv.end(), {"--out", embed_out});
            RunOutputs out(std::move(argv),
                           json{{"n", embed_n}, {"p", embed_p}, {"basic", embed_basic}},
                           std::nullopt);
            const PointSet ps =
                embed_basic ? embed_knn_lp_basic(embed_n, embed_p) : embed_knn_lp(embed_n, embed_p);
            json j = to_json(ps);
            j["report"] = to_json(distortion(knn_metric(embed_n), ps));
            emit(j);
            if (!embed_out.empty()) out.write(embed_out, to_json(ps));
            return kOk;
        }
        if (embed_psd->parsed()) {
            RunOutputs out({"embed", "psd012", "--input", embed_input, "--out", embed_out},
                           json{{"input", embed_input}}, std::nullopt);
            const MetricSpace m = load_real_metric(embed_input);
            const PointSet ps = embed_012_l2(m);
            json j = to_json(ps);
            j["report"] = to_json(distortion(m, ps));
            emit(j);
            if (!embed_out.empty()) out.write(embed_out, to_json(ps));
            return kOk;
        }

        // ---- bound ----
        if (bound_round->parsed()) {
            const PointSet xs = point_set_from_json(read_json_file(bound_xs));
            const PointSet ys = point_set_from_json(read_json_file(bound_ys));
            if (xs.p != ys.p) fail("InvalidExponent", "xs and ys disagree on p");
            emit(to_json(roundness_slack(xs.points, ys.points, xs.p)));
            return kOk;
        }
        if (bound_knn->parsed()) {
            const auto [lo, hi] = knn_cp_bounds(bound_n, bound_p);
            emit(json{{"n", bound_n}, {"p", bound_p}, {"lower", lo}, {"upper", hi}});
            return kOk;
        }
        if (bound_bip->parsed()) {
            const MetricSpace m = load_real_metric(bound_input);
            const double v = bipartite_lower_bound(m, parse_index_list(bound_side_a),
                                                   parse_index_list(bound_side_b), bound_p);
            emit(json{{"p", bound_p}, {"lower_bound", v}});
            return kOk;
        }

        // ---- check ----
        if (check_metric->parsed()) {
            const json j = read_json_file(check_input);
            const std::string kind = j.value("kind", "real");
            std::optional<MetricViolation> violation;
            if (kind == "rational") {
                auto v = validate_metric(rational_matrix_from_json(j.at("d")));
                violation = v.violation;
            } else {
                auto v = validate_metric(real_matrix_from_json(j.at("d")));
                violation = v.violation;
            }
            if (violation) {
                emit(json{{"valid", false}, {"violation", to_json(*violation)}});
                return kCounterexample;
            }
            emit(json{{"valid", true}});
            return kOk;
        }
        if (check_sch->parsed()) {
            const AnyMetric m = metric_from_json(read_json_file(check_input));
            const SchoenbergCertificate cert = std::visit(
                [&](const auto& space) { return schoenberg_test(space, check_base); }, m);
            emit(to_json(cert));
            return cert.psd ? kOk : kCounterexample;
        }
        if (check_conv->parsed()) {
            const auto d = parse_double_list(check_d);
            if (d.size() != 6) fail("UsageError", "--d needs six values d12,d13,d14,d23,d24,d34");
            const double gap =
                convexity_lemma_gap(d[0], d[1], d[2], d[3], d[4], d[5], parse_modulus(check_modulus));
            emit(json{{"gap", gap}, {"modulus", check_modulus}});
            return gap < 0 ? kCounterexample : kOk;
        }

        // ---- hard ----
        if (hard_verify->parsed()) {
            const AnyMetric m = metric_from_json(read_json_file(hard_input));
            const QuadrupleScan scan =
                std::visit([](const auto& space) { return verify_no_isometric_quadruple(space); }, m);
            emit(to_json(scan));
            return scan.all_clear ? kOk : kCounterexample;
        }

        // ---- ramsey ----
        if (r_family->parsed()) {
            emit(to_json(almost_disjoint_family(r_s, r_k)));
            return kOk;
        }
        if (r_universal->parsed()) {
            RunOutputs out({"ramsey", "universal", "--n", std::to_string(r_n), "--k",
                            std::to_string(r_k), "--s", std::to_string(r_s), "--attempts",
                            std::to_string(r_attempts), "--seed", std::to_string(r_seed), "--out",
                            r_out, "--graph-out", r_graph_out},
                           json{{"n", r_n}, {"k", r_k}, {"s", r_s}, {"attempts", r_attempts},
                                {"seed", r_seed}},
                           r_seed);
            const auto outcome = build_universal_metric(r_n, r_k, r_s, r_attempts, r_seed);
            json j = to_json(outcome.report);
            j["success"] = outcome.success;
            j["graph"] = to_json(outcome.graph);
            emit(j);
            if (!r_out.empty()) out.write(r_out, to_json(outcome.metric));
            if (!r_graph_out.empty()) out.write(r_graph_out, to_json(outcome.graph));
            return outcome.success ? kOk : kCounterexample;
        }
        if (r_mc->parsed()) {
            const double frac = monte_carlo_universality(Graph::path(r_k), r_s, r_trials, r_seed);
            json j{{"k", r_k}, {"s", r_s}, {"trials", r_trials}, {"seed", r_seed},
                   {"fraction", frac}};
            if (r_s > 2 * r_k * r_k) j["bound"] = miss_probability_bound(r_k, r_s);
            emit(j);
            return kOk;
        }
        if (r_iso->parsed()) {
            const AnyMetric m = metric_from_json(read_json_file(r_input));
            const SubsetWitness w =
                std::visit([](const auto& space) { return iso_ramsey_l2(space); }, m);
            emit(to_json(w));
            return kOk;
        }
        if (r_screen->parsed()) {
            const MetricSpace m = load_real_metric(r_input);
            emit(to_json(distortion_certificate_bound(m, r_p, r_alpha)));
            return kOk;
        }

        std::cerr << app.help();
        return kUsage;
    } catch (const Error& e) {
        std::cerr << dump_json(json{{"error", e.code()}, {"message", e.what()}});
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << dump_json(json{{"error", "Internal"}, {"message", e.what()}});
        return kInternal;
    }
}

}  // namespace metra
