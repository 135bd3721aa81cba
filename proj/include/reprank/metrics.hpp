#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "reprank/dataset.hpp"
#include "reprank/methods.hpp"

namespace reprank {

struct RankingEvaluation {
    double recall = 0.0;
    double auc = 0.0;
    std::size_t L = 0;
    std::size_t d = 0;
};

struct DegreeSubgroups {
    // Group index per user: 0 = Low, 1 = Mid, 2 = High.
    std::vector<int> group;
    double low_cut = 0.0;   // Low = [k_min, low_cut)
    double high_cut = 0.0;  // Mid = [low_cut, high_cut), High = [high_cut, k_max]
};

// Fraction of spammers among the L lowest-reputation users. Ties broken by
// ascending user id so results are deterministic.
double recall_at_L(const RatingDataset& ds, const ReputationVector& reputations,
                   const std::set<std::string>& spammers, std::size_t L);

// Exact AUC over all spammer/normal pairs (ties count half), computed from
// rank statistics.
double auc(const RatingDataset& ds, const ReputationVector& reputations,
           const std::set<std::string>& spammers);

// Same quantities starting from raw scores: spam_scores vs normal_scores.
double auc_from_scores(std::span<const double> spammer_scores,
                       std::span<const double> normal_scores);

RankingEvaluation evaluate_ranking(const RatingDataset& ds, const ReputationVector& reputations,
                                   const std::set<std::string>& spammers);

// Mean absolute deviation from the unweighted object mean rating, per user.
std::vector<double> rating_error(const RatingDataset& ds);

// Mean degree of the objects each user rated.
std::vector<double> trend_following(const RatingDataset& ds);

// 1 - sum of squared bin probabilities of the equal-width histogram.
double simpson_diversity(std::span<const double> reputations, std::size_t bins);

double pearson(std::span<const double> x, std::span<const double> y);

// Min-max normalizes the indicator, bins it with the given width, and
// reports (bin center, mean reputation) for nonempty bins.
std::vector<std::pair<double, double>> binned_means(std::span<const double> indicator,
                                                    std::span<const double> reputations,
                                                    double bin_width);

DegreeSubgroups degree_subgroups(const RatingDataset& ds);

// AUC restricted to each subgroup plus "All"; entries with an empty class
// are left unset.
std::map<std::string, std::optional<double>> subgroup_auc(const RatingDataset& ds,
                                                          const ReputationVector& reputations,
                                                          const std::set<std::string>& spammers,
                                                          const DegreeSubgroups& subgroups);

}  // namespace reprank
