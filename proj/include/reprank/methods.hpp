#pragma once

#include <span>
#include <string>
#include <vector>

#include "reprank/dataset.hpp"

namespace reprank {

struct MethodConfig {
    double delta_threshold = 1e-4;  // mean-squared-change stop threshold
    int max_iterations = 1000;
    double ir_beta = 1.0;
    double ir_epsilon = 1e-6;
    double rr_theta = 3.0;  // 1 gives CR
    double sigma_floor = 1e-6;

    void validate() const;
};

// Dense per-user reputation, aligned with RatingDataset user indices.
struct ReputationVector {
    std::vector<double> values;
    int iterations = 0;
    bool converged = false;
    double final_change = 0.0;
};

// Dense per-object quality, aligned with object indices.
struct QualityVector {
    std::vector<double> values;
};

// Per-object column of reputation-weighted group sizes, one slot per scale
// value. Slots for ratings nobody gave are exact zeros.
struct GroupSizeTable {
    std::size_t scale_size = 0;
    std::vector<double> lambda;  // [object * scale_size + value_index]
    std::vector<double> reward;  // column-normalized lambda

    double lambda_of(std::size_t value_index, std::size_t object) const {
        return lambda[object * scale_size + value_index];
    }
    double reward_of(std::size_t value_index, std::size_t object) const {
        return reward[object * scale_size + value_index];
    }
};

GroupSizeTable compute_group_sizes(const RatingDataset& ds, std::span<const double> reputations);

// Reward earned by each rating, aligned with ratings_of(user) order.
std::vector<std::vector<double>> compute_rewards(const RatingDataset& ds,
                                                 const GroupSizeTable& table);

// mean / population std of a user's rewards, std floored at sigma_floor.
double reputation_from_rewards(std::span<const double> rewards, double sigma_floor);

QualityVector estimate_quality(const RatingDataset& ds, std::span<const double> reputations);

ReputationVector gr_rank(const RatingDataset& ds, const MethodConfig& config = {});
ReputationVector igr_rank(const RatingDataset& ds, const MethodConfig& config = {});
ReputationVector ir_rank(const RatingDataset& ds, const MethodConfig& config = {});
ReputationVector cr_rr_rank(const RatingDataset& ds, const MethodConfig& config = {});

// Dispatch by name: one of "gr", "igr", "ir", "cr", "rr" (case-insensitive).
// "cr" forces theta = 1 regardless of config.rr_theta.
ReputationVector rank_by_name(const std::string& method, const RatingDataset& ds,
                              const MethodConfig& config = {});

bool is_known_method(const std::string& method);

}  // namespace reprank
