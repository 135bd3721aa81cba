#pragma once

#include <set>
#include <string>
#include <vector>

#include "reprank/dataset.hpp"
#include "reprank/rng.hpp"

namespace reprank::testing {

inline std::string uid(std::size_t i) { return "u" + std::to_string(1000 + i); }
inline std::string oid(std::size_t i) { return "o" + std::to_string(1000 + i); }

// Three users agreeing on every object, one contrarian always alone in the
// minority group.
inline RatingDataset contrarian_toy() {
    std::vector<Triple> triples;
    for (std::size_t u = 0; u < 3; ++u)
        for (std::size_t o = 0; o < 3; ++o)
            triples.push_back({uid(u), oid(o), 5});
    for (std::size_t o = 0; o < 3; ++o)
        triples.push_back({uid(3), oid(o), 1});
    return RatingDataset::build(triples, RatingScale::five_star());
}

inline RatingDataset consensus_toy(std::size_t users = 4, std::size_t objects = 3) {
    std::vector<Triple> triples;
    for (std::size_t u = 0; u < users; ++u)
        for (std::size_t o = 0; o < objects; ++o)
            triples.push_back({uid(u), oid(o), 4});
    return RatingDataset::build(triples, RatingScale::five_star());
}

// Random dataset: every user rates a random nonempty subset of objects with
// random scale values. Objects nobody rated simply never appear.
inline RatingDataset random_dataset(rng::SplitMix& gen, std::size_t max_users = 30,
                                    std::size_t max_objects = 15) {
    const std::size_t m = 2 + gen.below(max_users - 1);
    const std::size_t n = 2 + gen.below(max_objects - 1);
    const auto scale = RatingScale::five_star();
    std::vector<Triple> triples;
    for (std::size_t u = 0; u < m; ++u) {
        const std::size_t k = 1 + gen.below(n);
        std::vector<std::size_t> objs(n);
        for (std::size_t i = 0; i < n; ++i)
            objs[i] = i;
        for (std::size_t i = 0; i < k; ++i)
            std::swap(objs[i], objs[i + gen.below(n - i)]);
        for (std::size_t i = 0; i < k; ++i)
            triples.push_back(
                {uid(u), oid(objs[i]), scale.values()[gen.below(scale.size())]});
    }
    return RatingDataset::build(triples, scale);
}

// All-pairs AUC oracle, quadratic on purpose.
inline double brute_force_auc(const std::vector<double>& spam, const std::vector<double>& normal) {
    double score = 0.0;
    for (double s : spam)
        for (double g : normal)
            score += s < g ? 1.0 : (s == g ? 0.5 : 0.0);
    return score / (static_cast<double>(spam.size()) * static_cast<double>(normal.size()));
}

// Sampled comparison estimator of the same probability.
inline double monte_carlo_auc(const std::vector<double>& spam, const std::vector<double>& normal,
                              std::size_t samples, rng::SplitMix& gen) {
    double score = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double s = spam[gen.below(spam.size())];
        const double g = normal[gen.below(normal.size())];
        score += s < g ? 1.0 : (s == g ? 0.5 : 0.0);
    }
    return score / static_cast<double>(samples);
}

}  // namespace reprank::testing
