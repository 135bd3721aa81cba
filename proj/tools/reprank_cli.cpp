// Command-line harness: rank users, inject spammers, evaluate rankings,
// run seeded sweeps and correlation analyses on rating datasets.

#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "reprank/io.hpp"
#include "reprank/metrics.hpp"
#include "reprank/methods.hpp"
#include "reprank/spam.hpp"
#include "reprank/sweep.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNonConvergence = 3;

struct CommonOpts {
    std::string dataset_path;
    std::string out_path;  // empty -> stdout
    reprank::MethodConfig config;
    bool strict = false;
};

std::ostream& open_out(const std::string& path, std::ofstream& file) {
    if (path.empty())
        return std::cout;
    file.open(path);
    if (!file)
        throw reprank::Error("cannot write " + path);
    return file;
}

std::string fmt(double v) {
    std::ostringstream ss;
    ss.precision(17);
    ss << v;
    return ss.str();
}

void add_config_flags(CLI::App* cmd, reprank::MethodConfig& cfg) {
    cmd->add_option("--delta", cfg.delta_threshold, "Convergence threshold");
    cmd->add_option("--max-iterations", cfg.max_iterations, "Iteration cap");
    cmd->add_option("--beta", cfg.ir_beta, "IR exponent beta");
    cmd->add_option("--epsilon", cfg.ir_epsilon, "IR regularizer epsilon");
    cmd->add_option("--theta", cfg.rr_theta, "RR redistribution exponent theta");
    cmd->add_option("--sigma-floor", cfg.sigma_floor, "Std-deviation floor for GR/IGR");
}

reprank::RatingDataset load(const std::string& path) {
    return reprank::load_triples(path, {}, reprank::RatingScale::five_star());
}

int cmd_rank(const CommonOpts& opts, const std::string& method) {
    const auto ds = load(opts.dataset_path);
    const auto rep = reprank::rank_by_name(method, ds, opts.config);
    std::ofstream file;
    auto& out = open_out(opts.out_path, file);
    out << "# method=" << method << " iterations=" << rep.iterations
        << " converged=" << (rep.converged ? "true" : "false")
        << " final_change=" << fmt(rep.final_change) << '\n';
    out << "user,reputation\n";
    for (std::size_t u = 0; u < ds.num_users(); ++u)
        out << ds.user_ids()[u] << ',' << fmt(rep.values[u]) << '\n';
    if (opts.strict && !rep.converged) {
        std::cerr << "method did not converge within " << opts.config.max_iterations
                  << " iterations\n";
        return kExitNonConvergence;
    }
    return 0;
}

int cmd_inject(const CommonOpts& opts, const std::string& attack, double p, std::uint64_t seed,
               const std::string& labels_path, const std::string& meta_path) {
    const auto ds = load(opts.dataset_path);
    reprank::SpamSpec spec{reprank::spam_kind_from_name(attack), p, seed};
    const auto exp = reprank::inject(ds, spec);
    if (opts.out_path.empty())
        throw reprank::Error("inject requires --out");
    reprank::write_dataset(opts.out_path, exp.attacked);
    reprank::write_labels(labels_path.empty() ? opts.out_path + ".labels" : labels_path,
                          exp.spammers);
    std::ofstream meta(meta_path.empty() ? opts.out_path + ".meta" : meta_path);
    meta << "kind=" << reprank::to_string(spec.kind) << "\np=" << fmt(p) << "\nd=" << exp.d
         << "\nseed=" << seed << '\n';
    return 0;
}

int cmd_eval(const CommonOpts& opts, const std::string& labels_path, const std::string& method) {
    const auto ds = load(opts.dataset_path);
    const auto spammers = reprank::load_labels(labels_path);
    for (const auto& id : spammers)
        if (!ds.has_user(id))
            throw reprank::Error("labels file references unknown user: " + id);
    const auto rep = reprank::rank_by_name(method, ds, opts.config);
    const auto ev = reprank::evaluate_ranking(ds, rep, spammers);
    std::ofstream file;
    auto& out = open_out(opts.out_path, file);
    out << "method,metric,value\n";
    out << method << ",recall," << fmt(ev.recall) << '\n';
    out << method << ",auc," << fmt(ev.auc) << '\n';
    if (opts.strict && !rep.converged)
        return kExitNonConvergence;
    return 0;
}

int cmd_sweep(const CommonOpts& opts, reprank::ExperimentPlan plan, const std::string& attack) {
    plan.attack = reprank::spam_kind_from_name(attack);
    plan.config = opts.config;
    const auto ds = load(opts.dataset_path);
    const auto result = reprank::run_sweep(ds, plan);
    std::ofstream file;
    auto& out = open_out(opts.out_path, file);
    const auto header = reprank::sweep_table_header();
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : reprank::sweep_table_rows(result)) {
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << row[i];
        out << '\n';
    }
    if (result.partial_failure) {
        std::cerr << "some realizations failed; see error rows\n";
        return kExitData;
    }
    return 0;
}

int cmd_correlate(const CommonOpts& opts, const std::vector<std::string>& methods,
                  std::size_t bins, const std::string& binned_out) {
    const auto ds = load(opts.dataset_path);
    const auto delta = reprank::rating_error(ds);
    const auto phi = reprank::trend_following(ds);
    std::vector<double> degree(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u)
        degree[u] = static_cast<double>(ds.user_degree(u));

    std::ofstream file;
    auto& out = open_out(opts.out_path, file);
    out << "method,metric,value\n";
    auto cell = [&](const std::string& method, const std::string& metric, auto compute) {
        try {
            out << method << ',' << metric << ',' << fmt(compute()) << '\n';
        } catch (const std::exception& e) {
            out << method << ',' << metric << ",nan\n";
            std::cerr << method << "/" << metric << ": " << e.what() << '\n';
        }
    };
    for (const auto& method : methods) {
        const auto rep = reprank::rank_by_name(method, ds, opts.config);
        cell(method, "rho_delta_R", [&] { return reprank::pearson(delta, rep.values); });
        cell(method, "rho_degree_R", [&] { return reprank::pearson(degree, rep.values); });
        cell(method, "rho_phi_R", [&] { return reprank::pearson(phi, rep.values); });
        cell(method, "simpson_1_minus_D",
             [&] { return reprank::simpson_diversity(rep.values, bins); });
        if (!binned_out.empty()) {
            std::vector<std::vector<std::string>> rows;
            auto add_bins = [&](const std::string& name, const std::vector<double>& ind) {
                try {
                    for (const auto& [center, mean] :
                         reprank::binned_means(ind, rep.values, 0.05))
                        rows.push_back({method, name, fmt(center), fmt(mean)});
                } catch (const std::exception& e) {
                    std::cerr << method << "/" << name << " bins: " << e.what() << '\n';
                }
            };
            add_bins("delta", delta);
            add_bins("degree", degree);
            add_bins("phi", phi);
            reprank::write_table(binned_out + "." + method + ".csv",
                                 {"method", "indicator", "bin_center", "mean_reputation"}, rows);
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"User reputation ranking and spam-resistance experiments on rating data"};
    app.require_subcommand(1);
    app.set_config("--plan", "", "Plan file mirroring the command-line flags");

    CommonOpts opts;
    std::string method = "igr";
    std::vector<std::string> methods;
    std::string attack = "random";
    double p = 0.1;
    std::uint64_t seed = 0;
    std::string labels_path, meta_path, binned_out;
    std::size_t bins = 100;
    reprank::ExperimentPlan plan;
    plan.realizations = 100;

    auto add_common = [&](CLI::App* cmd, bool needs_dataset = true) {
        auto* o = cmd->add_option("--dataset", opts.dataset_path, "Triple file to load");
        if (needs_dataset)
            o->required();
        cmd->add_option("--out", opts.out_path, "Output file (default stdout)");
        cmd->add_flag("--strict", opts.strict, "Exit 3 when a method fails to converge");
        add_config_flags(cmd, opts.config);
    };

    auto* rank = app.add_subcommand("rank", "Compute user reputations");
    add_common(rank);
    rank->add_option("--method", method, "One of gr, igr, ir, cr, rr")->required();

    auto* inject = app.add_subcommand("inject", "Write an attacked dataset with labels");
    add_common(inject);
    inject->add_option("--attack", attack, "malicious or random")->required();
    inject->add_option("--p", p, "Spammer ratio in (0, 1)")->required();
    inject->add_option("--seed", seed, "Injection seed");
    inject->add_option("--labels", labels_path, "Labels output (default <out>.labels)");
    inject->add_option("--meta", meta_path, "Metadata output (default <out>.meta)");

    auto* eval = app.add_subcommand("eval", "Evaluate a method against known spammer labels");
    add_common(eval);
    eval->add_option("--method", method, "One of gr, igr, ir, cr, rr")->required();
    eval->add_option("--labels", labels_path, "Spammer labels file")->required();

    auto* sweep = app.add_subcommand("sweep", "Repeated inject/rank/eval over p values");
    add_common(sweep);
    sweep->add_option("--method", plan.methods, "Methods to evaluate")->required();
    sweep->add_option("--attack", attack, "malicious or random")->required();
    sweep->add_option("--p", plan.p_values, "Spammer ratios")->required();
    sweep->add_option("--realizations", plan.realizations, "Realizations per (method, p)");
    sweep->add_option("--seed", plan.base_seed, "Base seed for stream derivation");
    sweep->add_flag("--subgroups", plan.subgroups, "Also report per-degree-subgroup AUC");
    sweep->add_option("--threads", plan.threads, "Worker threads");

    auto* correlate = app.add_subcommand("correlate", "Reputation vs. indicator correlations");
    add_common(correlate);
    correlate->add_option("--method", methods, "Methods to analyze")->required();
    correlate->add_option("--bins", bins, "Histogram bins for the diversity index");
    correlate->add_option("--binned-means", binned_out,
                          "Also write binned-mean tables with this path prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if ((rank->parsed() || eval->parsed()) && !reprank::is_known_method(method)) {
        std::cerr << "unknown method: " << method << " (expected gr, igr, ir, cr or rr)\n";
        return kExitUsage;
    }

    try {
        if (rank->parsed())
            return cmd_rank(opts, method);
        if (inject->parsed())
            return cmd_inject(opts, attack, p, seed, labels_path, meta_path);
        if (eval->parsed())
            return cmd_eval(opts, labels_path, method);
        if (sweep->parsed())
            return cmd_sweep(opts, plan, attack);
        if (correlate->parsed())
            return cmd_correlate(opts, methods, bins, binned_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
