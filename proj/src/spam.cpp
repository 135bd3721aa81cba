#include "reprank/spam.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "reprank/rng.hpp"

namespace reprank {

SpamKind spam_kind_from_name(const std::string& name) {
    if (name == "malicious")
        return SpamKind::malicious;
    if (name == "random")
        return SpamKind::random;
    throw Error("unknown attack kind: " + name);
}

std::string to_string(SpamKind kind) {
    return kind == SpamKind::malicious ? "malicious" : "random";
}

SpamExperiment inject(const RatingDataset& dataset, const SpamSpec& spec) {
    if (!(spec.ratio > 0 && spec.ratio < 1))
        throw Error("spam ratio must be in (0, 1)");
    const std::size_t m = dataset.num_users();
    const auto d = static_cast<std::size_t>(std::floor(spec.ratio * static_cast<double>(m)));
    if (d == 0)
        throw Error("ratio too small for dataset: floor(p*m) = 0");

    rng::SplitMix gen(spec.seed);

    // Partial Fisher-Yates over user indices picks d spammers uniformly.
    std::vector<std::size_t> pool(m);
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = 0; i < d; ++i)
        std::swap(pool[i], pool[i + gen.below(m - i)]);
    std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(d));
    std::sort(chosen.begin(), chosen.end());

    const auto& scale = dataset.scale();
    const std::size_t z = scale.size();

    std::vector<Triple> triples = dataset.triples();

    // Triples are sorted by (user id, object id); dataset indices follow id
    // order too, so redrawing in triple order is deterministic.
    std::vector<char> is_spammer(m, 0);
    std::set<std::string> spammer_ids;
    for (std::size_t u : chosen) {
        is_spammer[u] = 1;
        spammer_ids.insert(dataset.user_ids()[u]);
    }
    for (auto& t : triples) {
        if (!is_spammer[dataset.user_index(t.user)])
            continue;
        if (spec.kind == SpamKind::malicious)
            t.rating = gen.below(2) == 0 ? scale.min_value() : scale.max_value();
        else
            t.rating = scale.values()[gen.below(z)];
    }
    return SpamExperiment{RatingDataset::build(triples, scale), std::move(spammer_ids), spec, d};
}

}  // namespace reprank
