#include "reprank/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace reprank {

namespace {

std::vector<char> spam_mask(const RatingDataset& ds, const std::set<std::string>& spammers) {
    std::vector<char> mask(ds.num_users(), 0);
    for (const auto& id : spammers)
        mask[ds.user_index(id)] = 1;  // throws on unknown id
    return mask;
}

}  // namespace

double recall_at_L(const RatingDataset& ds, const ReputationVector& reputations,
                   const std::set<std::string>& spammers, std::size_t L) {
    if (L < 1)
        throw Error("L must be at least 1");
    if (L > ds.num_users())
        throw Error("L exceeds the number of users");
    if (spammers.empty())
        throw Error("spammer set is empty");
    if (reputations.values.size() != ds.num_users())
        throw Error("reputation vector does not cover all users");

    const auto mask = spam_mask(ds, spammers);
    std::vector<std::size_t> order(ds.num_users());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (reputations.values[a] != reputations.values[b])
            return reputations.values[a] < reputations.values[b];
        return ds.user_ids()[a] < ds.user_ids()[b];
    });
    std::size_t detected = 0;
    for (std::size_t i = 0; i < L; ++i)
        detected += mask[order[i]];
    return static_cast<double>(detected) / static_cast<double>(spammers.size());
}

double auc_from_scores(std::span<const double> spammer_scores,
                       std::span<const double> normal_scores) {
    if (spammer_scores.empty() || normal_scores.empty())
        throw Error("AUC needs both a spammer and a normal class");

    struct Item {
        double score;
        bool spam;
    };
    std::vector<Item> items;
    items.reserve(spammer_scores.size() + normal_scores.size());
    for (double s : spammer_scores)
        items.push_back({s, true});
    for (double s : normal_scores)
        items.push_back({s, false});
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.score < b.score; });

    // Sum of average ranks over the spammer class (Mann-Whitney).
    double spam_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < items.size()) {
        std::size_t j = i;
        std::size_t spam_in_tie = 0;
        while (j < items.size() && items[j].score == items[i].score) {
            spam_in_tie += items[j].spam;
            ++j;
        }
        const double avg_rank = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1..j
        spam_rank_sum += avg_rank * static_cast<double>(spam_in_tie);
        i = j;
    }
    const double d = static_cast<double>(spammer_scores.size());
    const double g = static_cast<double>(normal_scores.size());
    // U counts (spammer > normal) pairs with ties at half weight; the
    // complement counts spammer-lower pairs. Both sums are exact halves, so
    // this matches all-pairs enumeration bit for bit.
    const double u = spam_rank_sum - d * (d + 1) / 2.0;
    return (d * g - u) / (d * g);
}

double auc(const RatingDataset& ds, const ReputationVector& reputations,
           const std::set<std::string>& spammers) {
    if (reputations.values.size() != ds.num_users())
        throw Error("reputation vector does not cover all users");
    const auto mask = spam_mask(ds, spammers);
    std::vector<double> spam_scores, normal_scores;
    for (std::size_t u = 0; u < ds.num_users(); ++u)
        (mask[u] ? spam_scores : normal_scores).push_back(reputations.values[u]);
    return auc_from_scores(spam_scores, normal_scores);
}

RankingEvaluation evaluate_ranking(const RatingDataset& ds, const ReputationVector& reputations,
                                   const std::set<std::string>& spammers) {
    RankingEvaluation ev;
    ev.d = spammers.size();
    ev.L = ev.d;
    ev.recall = recall_at_L(ds, reputations, spammers, ev.L);
    ev.auc = auc(ds, reputations, spammers);
    return ev;
}

std::vector<double> rating_error(const RatingDataset& ds) {
    std::vector<double> object_mean(ds.num_objects());
    for (std::size_t obj = 0; obj < ds.num_objects(); ++obj) {
        double s = 0.0;
        auto raters = ds.raters_of(obj);
        for (const auto& e : raters)
            s += ds.value_of(e.value_index);
        object_mean[obj] = s / static_cast<double>(raters.size());
    }
    std::vector<double> delta(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u) {
        double s = 0.0;
        auto entries = ds.ratings_of(u);
        for (const auto& e : entries)
            s += std::abs(ds.value_of(e.value_index) - object_mean[e.object]);
        delta[u] = s / static_cast<double>(entries.size());
    }
    return delta;
}

std::vector<double> trend_following(const RatingDataset& ds) {
    std::vector<double> phi(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u) {
        double s = 0.0;
        auto entries = ds.ratings_of(u);
        for (const auto& e : entries)
            s += static_cast<double>(ds.object_degree(e.object));
        phi[u] = s / static_cast<double>(entries.size());
    }
    return phi;
}

double simpson_diversity(std::span<const double> reputations, std::size_t bins) {
    if (reputations.empty())
        throw Error("cannot compute diversity of an empty reputation vector");
    if (bins < 2)
        throw Error("need at least 2 bins");
    const auto [mn_it, mx_it] = std::minmax_element(reputations.begin(), reputations.end());
    const double mn = *mn_it, mx = *mx_it;
    if (mn == mx)
        return 0.0;  // single occupied bin
    std::vector<std::size_t> counts(bins, 0);
    const double width = (mx - mn) / static_cast<double>(bins);
    for (double r : reputations) {
        auto b = static_cast<std::size_t>((r - mn) / width);
        if (b >= bins)
            b = bins - 1;  // r == mx
        ++counts[b];
    }
    const double m = static_cast<double>(reputations.size());
    double d = 0.0;
    for (std::size_t c : counts) {
        const double p = static_cast<double>(c) / m;
        d += p * p;
    }
    return 1.0 - d;
}

double pearson(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size())
        throw Error("pearson: length mismatch");
    if (x.size() < 2)
        throw Error("pearson: need at least two points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double vx = 0.0, vy = 0.0, cov = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double dx = x[i] - mx, dy = y[i] - my;
        vx += dx * dx;
        vy += dy * dy;
        cov += dx * dy;
    }
    if (!(vx > 0) || !(vy > 0))
        throw Error("pearson: zero variance input");
    return cov / std::sqrt(vx * vy);
}

std::vector<std::pair<double, double>> binned_means(std::span<const double> indicator,
                                                    std::span<const double> reputations,
                                                    double bin_width) {
    if (indicator.size() != reputations.size())
        throw Error("binned_means: length mismatch");
    if (!(bin_width > 0) || bin_width > 1)
        throw Error("bin width must be in (0, 1]");
    const auto [mn_it, mx_it] = std::minmax_element(indicator.begin(), indicator.end());
    const double mn = *mn_it, mx = *mx_it;
    if (mn == mx)
        throw Error("normalization degenerate: constant indicator");
    const auto nbins = static_cast<std::size_t>(std::ceil(1.0 / bin_width));
    std::vector<double> sum(nbins, 0.0);
    std::vector<std::size_t> count(nbins, 0);
    for (std::size_t i = 0; i < indicator.size(); ++i) {
        const double v = (indicator[i] - mn) / (mx - mn);
        auto b = static_cast<std::size_t>(v / bin_width);
        if (b >= nbins)
            b = nbins - 1;  // v == 1
        sum[b] += reputations[i];
        ++count[b];
    }
    std::vector<std::pair<double, double>> out;
    for (std::size_t b = 0; b < nbins; ++b)
        if (count[b] > 0)
            out.emplace_back((static_cast<double>(b) + 0.5) * bin_width,
                             sum[b] / static_cast<double>(count[b]));
    return out;
}

DegreeSubgroups degree_subgroups(const RatingDataset& ds) {
    if (ds.num_users() < 2)
        throw Error("need at least two users to form subgroups");
    std::size_t kmin = SIZE_MAX, kmax = 0;
    for (std::size_t u = 0; u < ds.num_users(); ++u) {
        const std::size_t k = ds.user_degree(u);
        kmin = std::min(kmin, k);
        kmax = std::max(kmax, k);
    }
    if (kmin == kmax)
        throw Error("all user degrees equal: subgroups undefined");
    DegreeSubgroups g;
    const double span = static_cast<double>(kmax - kmin);
    g.low_cut = static_cast<double>(kmin) + 0.1 * span;
    g.high_cut = static_cast<double>(kmin) + 0.3 * span;
    g.group.resize(ds.num_users());
    for (std::size_t u = 0; u < ds.num_users(); ++u) {
        const auto k = static_cast<double>(ds.user_degree(u));
        g.group[u] = k < g.low_cut ? 0 : (k < g.high_cut ? 1 : 2);
    }
    return g;
}

std::map<std::string, std::optional<double>> subgroup_auc(const RatingDataset& ds,
                                                          const ReputationVector& reputations,
                                                          const std::set<std::string>& spammers,
                                                          const DegreeSubgroups& subgroups) {
    if (reputations.values.size() != ds.num_users())
        throw Error("reputation vector does not cover all users");
    const auto mask = spam_mask(ds, spammers);
    static const char* names[3] = {"Low", "Mid", "High"};
    std::map<std::string, std::optional<double>> out;
    for (int gi = 0; gi < 3; ++gi) {
        std::vector<double> spam_scores, normal_scores;
        for (std::size_t u = 0; u < ds.num_users(); ++u) {
            if (subgroups.group[u] != gi)
                continue;
            (mask[u] ? spam_scores : normal_scores).push_back(reputations.values[u]);
        }
        if (spam_scores.empty() || normal_scores.empty())
            out[names[gi]] = std::nullopt;
        else
            out[names[gi]] = auc_from_scores(spam_scores, normal_scores);
    }
    out["All"] = auc(ds, reputations, spammers);
    return out;
}

}  // namespace reprank
