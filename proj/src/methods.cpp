#include "reprank/methods.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace reprank {

void MethodConfig::validate() const {
    if (!(delta_threshold > 0))
        throw Error("delta_threshold must be positive");
    if (max_iterations < 1)
        throw Error("max_iterations must be at least 1");
    if (!(sigma_floor > 0))
        throw Error("sigma_floor must be positive");
    if (!(ir_epsilon > 0))
        throw Error("ir_epsilon must be positive");
}

namespace {

// Accumulations over users are summed in sorted value order so that results do
// not depend on how user ids happen to order the dense indices; relabeling
// users then permutes every output exactly.
double sorted_sum(std::vector<double>& terms) {
    std::sort(terms.begin(), terms.end());
    double s = 0.0;
    for (double t : terms)
        s += t;
    return s;
}

double mean_squared_change(std::span<const double> a, std::span<const double> b) {
    std::vector<double> sq(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        sq[i] = d * d;
    }
    return sorted_sum(sq) / static_cast<double>(a.size());
}

}  // namespace

GroupSizeTable compute_group_sizes(const RatingDataset& ds, std::span<const double> reputations) {
    if (reputations.size() != ds.num_users())
        throw Error("reputation vector does not cover all users");

    GroupSizeTable t;
    t.scale_size = ds.scale().size();
    t.lambda.assign(ds.num_objects() * t.scale_size, 0.0);
    t.reward.assign(ds.num_objects() * t.scale_size, 0.0);

    std::vector<std::vector<double>> bucket(t.scale_size);
    for (std::size_t obj = 0; obj < ds.num_objects(); ++obj) {
        double* col = t.lambda.data() + obj * t.scale_size;
        for (auto& b : bucket)
            b.clear();
        for (const auto& e : ds.raters_of(obj))
            bucket[e.value_index].push_back(reputations[e.user]);
        for (std::size_t s = 0; s < t.scale_size; ++s)
            col[s] = sorted_sum(bucket[s]);
        double col_sum = 0.0;
        for (std::size_t s = 0; s < t.scale_size; ++s)
            col_sum += col[s];
        if (!(col_sum > 0))
            throw Error("group-size column sum is zero for object " + ds.object_ids()[obj]);
        double* rew = t.reward.data() + obj * t.scale_size;
        for (std::size_t s = 0; s < t.scale_size; ++s)
            rew[s] = col[s] / col_sum;
    }
    return t;
}

std::vector<std::vector<double>> compute_rewards(const RatingDataset& ds,
                                                 const GroupSizeTable& table) {
    std::vector<std::vector<double>> rewards(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u) {
        auto entries = ds.ratings_of(u);
        rewards[u].reserve(entries.size());
        for (const auto& e : entries)
            rewards[u].push_back(table.reward_of(e.value_index, e.object));
    }
    return rewards;
}

double reputation_from_rewards(std::span<const double> rewards, double sigma_floor) {
    if (rewards.empty())
        throw Error("cannot score a user with no rewards");
    const double k = static_cast<double>(rewards.size());
    double mean = 0.0;
    for (double r : rewards)
        mean += r;
    mean /= k;
    double var = 0.0;
    for (double r : rewards)
        var += (r - mean) * (r - mean);
    const double sigma = std::sqrt(var / k);
    return mean / std::max(sigma, sigma_floor);
}

QualityVector estimate_quality(const RatingDataset& ds, std::span<const double> reputations) {
    if (reputations.size() != ds.num_users())
        throw Error("reputation vector does not cover all users");
    QualityVector q;
    q.values.resize(ds.num_objects());
    std::vector<std::pair<double, double>> terms;
    for (std::size_t obj = 0; obj < ds.num_objects(); ++obj) {
        terms.clear();
        for (const auto& e : ds.raters_of(obj))
            terms.emplace_back(reputations[e.user],
                               reputations[e.user] * ds.value_of(e.value_index));
        std::sort(terms.begin(), terms.end());
        double num = 0.0, den = 0.0;
        for (const auto& [w, wv] : terms) {
            den += w;
            num += wv;
        }
        if (!(den > 0))
            throw Error("zero reputation sum for object " + ds.object_ids()[obj]);
        q.values[obj] = num / den;
    }
    return q;
}

namespace {

// One group-based update step: R -> reputation_from_rewards(rewards(R)).
std::vector<double> group_step(const RatingDataset& ds, std::span<const double> reputations,
                               double sigma_floor) {
    const auto table = compute_group_sizes(ds, reputations);
    const auto rewards = compute_rewards(ds, table);
    std::vector<double> next(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u)
        next[u] = reputation_from_rewards(rewards[u], sigma_floor);
    return next;
}

ReputationVector group_rank(const RatingDataset& ds, const MethodConfig& config,
                            int max_iterations) {
    config.validate();
    ReputationVector out;
    std::vector<double> rep(ds.num_users(), 1.0);
    for (int it = 1; it <= max_iterations; ++it) {
        std::vector<double> next = group_step(ds, rep, config.sigma_floor);
        out.final_change = mean_squared_change(rep, next);
        rep = std::move(next);
        out.iterations = it;
        if (out.final_change < config.delta_threshold) {
            out.converged = true;
            break;
        }
    }
    out.values = std::move(rep);
    return out;
}

}  // namespace

ReputationVector gr_rank(const RatingDataset& ds, const MethodConfig& config) {
    ReputationVector out = group_rank(ds, config, 1);
    out.iterations = 1;
    out.converged = true;  // single-pass method, converged by definition
    return out;
}

ReputationVector igr_rank(const RatingDataset& ds, const MethodConfig& config) {
    return group_rank(ds, config, config.max_iterations);
}

ReputationVector ir_rank(const RatingDataset& ds, const MethodConfig& config) {
    config.validate();
    ReputationVector out;
    std::vector<double> rep(ds.num_users(), 1.0);
    QualityVector quality = estimate_quality(ds, rep);
    for (int it = 1; it <= config.max_iterations; ++it) {
        std::vector<double> next(ds.num_users());
        for (std::size_t u = 0; u < ds.num_users(); ++u) {
            double f = 0.0;
            auto entries = ds.ratings_of(u);
            for (const auto& e : entries) {
                const double d = ds.value_of(e.value_index) - quality.values[e.object];
                f += d * d;
            }
            f /= static_cast<double>(entries.size());
            next[u] = std::pow(f + config.ir_epsilon, -config.ir_beta);
        }
        const double rep_change = mean_squared_change(rep, next);
        rep = std::move(next);
        QualityVector next_quality = estimate_quality(ds, rep);
        const double quality_change =
            mean_squared_change(quality.values, next_quality.values);
        quality = std::move(next_quality);
        out.iterations = it;
        out.final_change = std::max(rep_change, quality_change);
        if (rep_change < config.delta_threshold && quality_change < config.delta_threshold) {
            out.converged = true;
            break;
        }
    }
    out.values = std::move(rep);
    return out;
}

ReputationVector cr_rr_rank(const RatingDataset& ds, const MethodConfig& config) {
    config.validate();
    const double theta = config.rr_theta;
    ReputationVector out;
    const double n = static_cast<double>(ds.num_objects());
    std::vector<double> rep(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u)
        rep[u] = static_cast<double>(ds.user_degree(u)) / n;
    QualityVector quality = estimate_quality(ds, rep);

    std::vector<double> tr(ds.num_users());
    for (int it = 1; it <= config.max_iterations; ++it) {
        for (std::size_t u = 0; u < ds.num_users(); ++u) {
            auto entries = ds.ratings_of(u);
            const double k = static_cast<double>(entries.size());
            double value = 0.0;
            if (entries.size() >= 2) {
                double ma = 0.0, mq = 0.0;
                for (const auto& e : entries) {
                    ma += ds.value_of(e.value_index);
                    mq += quality.values[e.object];
                }
                ma /= k;
                mq /= k;
                double va = 0.0, vq = 0.0, cov = 0.0;
                for (const auto& e : entries) {
                    const double da = ds.value_of(e.value_index) - ma;
                    const double dq = quality.values[e.object] - mq;
                    va += da * da;
                    vq += dq * dq;
                    cov += da * dq;
                }
                if (va > 0 && vq > 0)
                    value = cov / std::sqrt(va * vq);
            }
            tr[u] = value > 0 ? value : 0.0;  // clamp; undefined correlation -> 0
        }
        std::vector<double> sorted_tr = tr;
        std::sort(sorted_tr.begin(), sorted_tr.end());
        double sum_tr = 0.0, sum_tr_theta = 0.0;
        for (double v : sorted_tr) {
            sum_tr += v;
            sum_tr_theta += std::pow(v, theta);
        }
        if (!(sum_tr_theta > 0))
            throw Error("total temporal reputation vanished");
        for (std::size_t u = 0; u < ds.num_users(); ++u)
            rep[u] = std::pow(tr[u], theta) * sum_tr / sum_tr_theta;

        QualityVector next_quality = estimate_quality(ds, rep);
        out.final_change = mean_squared_change(quality.values, next_quality.values);
        quality = std::move(next_quality);
        out.iterations = it;
        if (out.final_change < config.delta_threshold) {
            out.converged = true;
            break;
        }
    }
    out.values = std::move(rep);
    return out;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

}  // namespace

bool is_known_method(const std::string& method) {
    const std::string m = lower(method);
    return m == "gr" || m == "igr" || m == "ir" || m == "cr" || m == "rr";
}

ReputationVector rank_by_name(const std::string& method, const RatingDataset& ds,
                              const MethodConfig& config) {
    const std::string m = lower(method);
    if (m == "gr")
        return gr_rank(ds, config);
    if (m == "igr")
        return igr_rank(ds, config);
    if (m == "ir")
        return ir_rank(ds, config);
    if (m == "cr") {
        MethodConfig c = config;
        c.rr_theta = 1.0;
        return cr_rr_rank(ds, c);
    }
    if (m == "rr")
        return cr_rr_rank(ds, config);
    throw Error("unknown method: " + method);
}

}  // namespace reprank
