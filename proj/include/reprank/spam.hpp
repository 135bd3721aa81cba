#pragma once

#include <cstdint>
#include <set>
#include <string>

#include "reprank/dataset.hpp"

namespace reprank {

enum class SpamKind { malicious, random };

SpamKind spam_kind_from_name(const std::string& name);
std::string to_string(SpamKind kind);

struct SpamSpec {
    SpamKind kind = SpamKind::random;
    double ratio = 0.1;  // p in (0, 1)
    std::uint64_t seed = 0;
};

struct SpamExperiment {
    RatingDataset attacked;
    std::set<std::string> spammers;
    SpamSpec spec;
    std::size_t d = 0;  // floor(p * m)
};

// Turns floor(p*m) uniformly chosen users into spammers by redrawing their
// rating values: malicious draws the scale extremes with probability 1/2
// each, random draws uniformly over the whole scale. Topology is untouched.
// Same spec on the same dataset gives a bit-identical experiment.
SpamExperiment inject(const RatingDataset& dataset, const SpamSpec& spec);

}  // namespace reprank
