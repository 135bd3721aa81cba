#include "reprank/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "reprank/rng.hpp"

namespace reprank {

namespace {

std::vector<std::string> split_fields(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    if (delimiter == 0) {
        std::istringstream ss(line);
        std::string tok;
        while (ss >> tok)
            fields.push_back(tok);
    } else {
        std::string tok;
        std::istringstream ss(line);
        while (std::getline(ss, tok, delimiter))
            fields.push_back(tok);
    }
    return fields;
}

std::string format_rating(double value) {
    if (value == std::floor(value) && std::abs(value) < 1e15) {
        return std::to_string(static_cast<long long>(value));
    }
    std::ostringstream ss;
    ss << value;
    return ss.str();
}

}  // namespace

RatingDataset load_triples(const std::filesystem::path& path, const TripleFileFormat& format,
                           const RatingScale& scale) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    std::vector<Triple> triples;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == format.comment_prefix)
            continue;
        auto fields = split_fields(line, format.delimiter);
        if (fields.size() < 3)
            throw Error(path.string() + ":" + std::to_string(lineno) +
                        ": expected at least 3 fields");
        char* end = nullptr;
        const double rating = std::strtod(fields[2].c_str(), &end);
        if (end == fields[2].c_str() || *end != '\0')
            throw Error(path.string() + ":" + std::to_string(lineno) + ": unparseable rating '" +
                        fields[2] + "'");
        triples.push_back({fields[0], fields[1], rating});
    }
    if (triples.empty())
        throw Error(path.string() + ": no rating triples found");
    try {
        return RatingDataset::build(triples, scale);
    } catch (const Error& e) {
        throw Error(path.string() + ": " + e.what());
    }
}

void write_dataset(const std::filesystem::path& path, const RatingDataset& dataset,
                   const TripleFileFormat& format) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    const char delim = format.delimiter == 0 ? '\t' : format.delimiter;
    for (const auto& t : dataset.triples())
        out << t.user << delim << t.object << delim << format_rating(t.rating) << '\n';
    if (!out)
        throw Error("write failed: " + path.string());
}

std::set<std::string> load_labels(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path.string());
    std::set<std::string> labels;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            labels.insert(line);
    }
    return labels;
}

void write_labels(const std::filesystem::path& path, const std::set<std::string>& labels) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    for (const auto& id : labels)  // std::set iterates sorted
        out << id << '\n';
    if (!out)
        throw Error("write failed: " + path.string());
}

void write_table(const std::filesystem::path& path, const std::vector<std::string>& header,
                 const std::vector<std::vector<std::string>>& rows) {
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            out << (i ? "," : "") << cells[i];
        out << '\n';
    };
    emit(header);
    for (const auto& row : rows)
        emit(row);
    if (!out)
        throw Error("write failed: " + path.string());
}

RatingDataset sample_subset(const RatingDataset& dataset, std::size_t user_count,
                            std::size_t min_user_degree, std::uint64_t seed) {
    std::vector<std::size_t> qualifying;
    for (std::size_t u = 0; u < dataset.num_users(); ++u)
        if (dataset.user_degree(u) >= min_user_degree)
            qualifying.push_back(u);
    if (qualifying.size() < user_count)
        throw Error("only " + std::to_string(qualifying.size()) +
                    " users qualify, requested " + std::to_string(user_count));

    rng::SplitMix gen(seed);
    for (std::size_t i = 0; i < user_count; ++i)
        std::swap(qualifying[i], qualifying[i + gen.below(qualifying.size() - i)]);
    std::vector<char> keep(dataset.num_users(), 0);
    for (std::size_t i = 0; i < user_count; ++i)
        keep[qualifying[i]] = 1;

    std::vector<Triple> triples;
    for (const auto& t : dataset.triples())
        if (keep[dataset.user_index(t.user)])
            triples.push_back(t);
    // Rebuilding keeps only objects rated by a retained user.
    return RatingDataset::build(triples, dataset.scale());
}

}  // namespace reprank
