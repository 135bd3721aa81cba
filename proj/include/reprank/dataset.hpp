#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace reprank {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Triple {
    std::string user;
    std::string object;
    double rating = 0.0;
};

// Ordered set of admissible discrete rating values.
class RatingScale {
public:
    explicit RatingScale(std::vector<double> values);

    static RatingScale five_star() { return RatingScale({1, 2, 3, 4, 5}); }

    const std::vector<double>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double min_value() const { return values_.front(); }
    double max_value() const { return values_.back(); }

    // Exact match; ratings are discrete so no tolerance is applied.
    std::optional<std::size_t> index_of(double value) const;

private:
    std::vector<double> values_;
};

// Immutable bipartite rating network. Users and objects are opaque string
// ids; dense indices are assigned in lexicographic id order and never leak
// into serialized output.
class RatingDataset {
public:
    struct UserEntry {
        std::size_t object;       // dense object index
        std::size_t value_index;  // index into scale values
    };
    struct ObjectEntry {
        std::size_t user;
        std::size_t value_index;
    };

    static RatingDataset build(const std::vector<Triple>& triples, RatingScale scale);

    std::size_t num_users() const { return user_ids_.size(); }
    std::size_t num_objects() const { return object_ids_.size(); }
    std::size_t num_ratings() const { return num_ratings_; }
    double sparsity() const {
        return static_cast<double>(num_ratings_) /
               (static_cast<double>(num_users()) * static_cast<double>(num_objects()));
    }

    const RatingScale& scale() const { return scale_; }
    const std::vector<std::string>& user_ids() const { return user_ids_; }
    const std::vector<std::string>& object_ids() const { return object_ids_; }

    std::size_t user_index(const std::string& id) const;
    std::size_t object_index(const std::string& id) const;
    bool has_user(const std::string& id) const { return user_lookup_.count(id) > 0; }

    std::size_t user_degree(std::size_t user) const { return ratings_of(user).size(); }
    std::size_t object_degree(std::size_t object) const { return raters_of(object).size(); }
    std::size_t user_degree(const std::string& id) const { return user_degree(user_index(id)); }
    std::size_t object_degree(const std::string& id) const { return object_degree(object_index(id)); }

    std::span<const UserEntry> ratings_of(std::size_t user) const;
    std::span<const ObjectEntry> raters_of(std::size_t object) const;

    double value_of(std::size_t value_index) const { return scale_.values()[value_index]; }

    double mean_user_degree() const {
        return static_cast<double>(num_ratings_) / static_cast<double>(num_users());
    }
    double mean_object_degree() const {
        return static_cast<double>(num_ratings_) / static_cast<double>(num_objects());
    }

    // Sorted by (user id, object id); rebuilding from this list round-trips.
    std::vector<Triple> triples() const;

private:
    RatingDataset(RatingScale scale) : scale_(std::move(scale)) {}

    RatingScale scale_;
    std::vector<std::string> user_ids_;
    std::vector<std::string> object_ids_;
    std::unordered_map<std::string, std::size_t> user_lookup_;
    std::unordered_map<std::string, std::size_t> object_lookup_;
    // CSR-style adjacency, both orientations.
    std::vector<std::size_t> user_offsets_;
    std::vector<UserEntry> user_entries_;
    std::vector<std::size_t> object_offsets_;
    std::vector<ObjectEntry> object_entries_;
    std::size_t num_ratings_ = 0;
};

}  // namespace reprank
