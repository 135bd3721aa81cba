#include "reprank/sweep.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "reprank/metrics.hpp"
#include "reprank/rng.hpp"

namespace reprank {

void ExperimentPlan::validate() const {
    if (methods.empty())
        throw Error("no methods selected");
    for (const auto& m : methods)
        if (!is_known_method(m))
            throw Error("unknown method: " + m);
    if (p_values.empty())
        throw Error("no p values given");
    for (double p : p_values)
        if (!(p > 0 && p < 1))
            throw Error("p values must be in (0, 1)");
    if (realizations < 1)
        throw Error("realizations must be at least 1");
    if (threads < 1)
        throw Error("threads must be at least 1");
    config.validate();
}

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct CellResult {
    // metric -> value per method, in plan method order.
    std::vector<std::vector<std::pair<std::string, double>>> per_method;
    std::vector<std::string> errors;  // one slot per method, "" when ok
};

CellResult run_cell(const RatingDataset& ds, const ExperimentPlan& plan, std::size_t p_index,
                    int realization) {
    CellResult cell;
    cell.per_method.resize(plan.methods.size());
    cell.errors.assign(plan.methods.size(), "");

    SpamSpec spec{plan.attack, plan.p_values[p_index],
                  rng::derive_seed(plan.base_seed, p_index, static_cast<std::uint64_t>(realization))};
    std::optional<SpamExperiment> injected;
    try {
        injected = inject(ds, spec);
    } catch (const std::exception& e) {
        for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
            cell.errors[mi] = e.what();
            cell.per_method[mi].emplace_back("error", kNaN);
        }
        return cell;
    }
    const SpamExperiment& exp = *injected;

    for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
        auto& metrics_out = cell.per_method[mi];
        try {
            const ReputationVector rep = rank_by_name(plan.methods[mi], exp.attacked, plan.config);
            const RankingEvaluation ev = evaluate_ranking(exp.attacked, rep, exp.spammers);
            metrics_out.emplace_back("recall", ev.recall);
            metrics_out.emplace_back("auc", ev.auc);
            if (plan.subgroups) {
                const auto groups = degree_subgroups(exp.attacked);
                const auto by_group = subgroup_auc(exp.attacked, rep, exp.spammers, groups);
                metrics_out.emplace_back("auc_low", by_group.at("Low").value_or(kNaN));
                metrics_out.emplace_back("auc_mid", by_group.at("Mid").value_or(kNaN));
                metrics_out.emplace_back("auc_high", by_group.at("High").value_or(kNaN));
            }
        } catch (const std::exception& e) {
            cell.errors[mi] = e.what();
            metrics_out.clear();
            metrics_out.emplace_back("error", kNaN);
        }
    }
    return cell;
}

}  // namespace

SweepResult run_sweep(const RatingDataset& dataset, const ExperimentPlan& plan) {
    plan.validate();
    const std::size_t np = plan.p_values.size();
    const auto nr = static_cast<std::size_t>(plan.realizations);
    std::vector<CellResult> cells(np * nr);

    // Cells are independent; slot-indexed storage keeps output identical
    // for any schedule.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= cells.size())
                return;
            cells[idx] = run_cell(dataset, plan, idx / nr, static_cast<int>(idx % nr));
        }
    };
    if (plan.threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < plan.threads; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
    }

    SweepResult result;
    const std::string attack_name = to_string(plan.attack);
    for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
        for (std::size_t pi = 0; pi < np; ++pi) {
            // metric -> values across realizations, in first-seen order.
            std::vector<std::string> metric_order;
            std::map<std::string, std::vector<double>> samples;
            for (std::size_t r = 0; r < nr; ++r) {
                const CellResult& cell = cells[pi * nr + r];
                for (const auto& [metric, value] : cell.per_method[mi]) {
                    result.rows.push_back({plan.methods[mi], attack_name, plan.p_values[pi],
                                           std::to_string(r), metric, value,
                                           cell.errors[mi]});
                    if (samples.find(metric) == samples.end())
                        metric_order.push_back(metric);
                    samples[metric].push_back(value);
                    if (!cell.errors[mi].empty())
                        result.partial_failure = true;
                }
            }
            for (const auto& metric : metric_order) {
                if (metric == "error")
                    continue;
                const auto& vals = samples[metric];
                double mean = 0.0;
                std::size_t count = 0;
                for (double v : vals)
                    if (!std::isnan(v)) {
                        mean += v;
                        ++count;
                    }
                mean = count ? mean / static_cast<double>(count) : kNaN;
                double var = 0.0;
                for (double v : vals)
                    if (!std::isnan(v))
                        var += (v - mean) * (v - mean);
                const double sd = count ? std::sqrt(var / static_cast<double>(count)) : kNaN;
                result.rows.push_back({plan.methods[mi], attack_name, plan.p_values[pi], "mean",
                                       metric, mean, ""});
                result.rows.push_back({plan.methods[mi], attack_name, plan.p_values[pi], "std",
                                       metric, sd, ""});
            }
        }
    }
    return result;
}

std::vector<std::string> sweep_table_header() {
    return {"method", "attack", "p", "realization", "metric", "value"};
}

std::vector<std::vector<std::string>> sweep_table_rows(const SweepResult& result) {
    std::vector<std::vector<std::string>> rows;
    rows.reserve(result.rows.size());
    for (const auto& r : result.rows) {
        std::ostringstream p, v;
        p.precision(17);
        v.precision(17);
        p << r.p;
        v << r.value;
        rows.push_back({r.method, r.attack, p.str(), r.realization, r.metric, v.str()});
    }
    return rows;
}

}  // namespace reprank
