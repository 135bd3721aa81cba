#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "reprank/dataset.hpp"

namespace reprank {

// Delimiter-separated triples, one per line: user, object, rating, then any
// number of trailing fields (ignored). Lines starting with the comment
// prefix are skipped. Delimiter 0 means "any run of whitespace", which also
// reads the tab-separated MovieLens u.data layout.
struct TripleFileFormat {
    char delimiter = 0;
    char comment_prefix = '#';
};

RatingDataset load_triples(const std::filesystem::path& path, const TripleFileFormat& format,
                           const RatingScale& scale);

void write_dataset(const std::filesystem::path& path, const RatingDataset& dataset,
                   const TripleFileFormat& format = {});

std::set<std::string> load_labels(const std::filesystem::path& path);
void write_labels(const std::filesystem::path& path, const std::set<std::string>& labels);

// CSV table with a header row.
void write_table(const std::filesystem::path& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows);

// Uniformly samples `user_count` users with degree >= min_user_degree and
// keeps exactly their ratings (objects left without raters are dropped).
RatingDataset sample_subset(const RatingDataset& dataset, std::size_t user_count,
                            std::size_t min_user_degree, std::uint64_t seed);

}  // namespace reprank
