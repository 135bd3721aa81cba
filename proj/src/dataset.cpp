#include "reprank/dataset.hpp"

#include <algorithm>
#include <map>

namespace reprank {

RatingScale::RatingScale(std::vector<double> values) : values_(std::move(values)) {
    if (values_.size() < 2)
        throw Error("rating scale needs at least two values");
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (!(values_[i - 1] < values_[i]))
            throw Error("rating scale values must be strictly increasing");
}

std::optional<std::size_t> RatingScale::index_of(double value) const {
    auto it = std::lower_bound(values_.begin(), values_.end(), value);
    if (it != values_.end() && *it == value)
        return static_cast<std::size_t>(it - values_.begin());
    return std::nullopt;
}

RatingDataset RatingDataset::build(const std::vector<Triple>& triples, RatingScale scale) {
    if (triples.empty())
        throw Error("empty dataset: no rating triples given");

    RatingDataset ds(std::move(scale));

    // Sorted id -> index maps keep index assignment independent of input order.
    std::map<std::string, std::size_t> users, objects;
    for (const auto& t : triples) {
        users.emplace(t.user, 0);
        objects.emplace(t.object, 0);
    }
    ds.user_ids_.reserve(users.size());
    for (auto& [id, idx] : users) {
        idx = ds.user_ids_.size();
        ds.user_ids_.push_back(id);
    }
    ds.object_ids_.reserve(objects.size());
    for (auto& [id, idx] : objects) {
        idx = ds.object_ids_.size();
        ds.object_ids_.push_back(id);
    }
    ds.user_lookup_.insert(users.begin(), users.end());
    ds.object_lookup_.insert(objects.begin(), objects.end());

    struct Rec {
        std::size_t user, object, value_index;
    };
    std::vector<Rec> recs;
    recs.reserve(triples.size());
    for (const auto& t : triples) {
        auto vi = ds.scale_.index_of(t.rating);
        if (!vi)
            throw Error("rating value " + std::to_string(t.rating) + " for (" + t.user + ", " +
                        t.object + ") is not on the rating scale");
        recs.push_back({users.at(t.user), objects.at(t.object), *vi});
    }
    std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
        return std::tie(a.user, a.object) < std::tie(b.user, b.object);
    });
    for (std::size_t i = 1; i < recs.size(); ++i)
        if (recs[i].user == recs[i - 1].user && recs[i].object == recs[i - 1].object)
            throw Error("duplicate rating for pair (" + ds.user_ids_[recs[i].user] + ", " +
                        ds.object_ids_[recs[i].object] + ")");

    ds.num_ratings_ = recs.size();

    ds.user_offsets_.assign(ds.user_ids_.size() + 1, 0);
    for (const auto& r : recs)
        ++ds.user_offsets_[r.user + 1];
    for (std::size_t i = 1; i < ds.user_offsets_.size(); ++i)
        ds.user_offsets_[i] += ds.user_offsets_[i - 1];
    ds.user_entries_.resize(recs.size());
    {
        std::vector<std::size_t> cursor(ds.user_offsets_.begin(), ds.user_offsets_.end() - 1);
        for (const auto& r : recs)
            ds.user_entries_[cursor[r.user]++] = {r.object, r.value_index};
    }

    ds.object_offsets_.assign(ds.object_ids_.size() + 1, 0);
    for (const auto& r : recs)
        ++ds.object_offsets_[r.object + 1];
    for (std::size_t i = 1; i < ds.object_offsets_.size(); ++i)
        ds.object_offsets_[i] += ds.object_offsets_[i - 1];
    ds.object_entries_.resize(recs.size());
    {
        std::vector<std::size_t> cursor(ds.object_offsets_.begin(), ds.object_offsets_.end() - 1);
        for (const auto& r : recs)
            ds.object_entries_[cursor[r.object]++] = {r.user, r.value_index};
    }

    return ds;
}

std::size_t RatingDataset::user_index(const std::string& id) const {
    auto it = user_lookup_.find(id);
    if (it == user_lookup_.end())
        throw Error("unknown user id: " + id);
    return it->second;
}

std::size_t RatingDataset::object_index(const std::string& id) const {
    auto it = object_lookup_.find(id);
    if (it == object_lookup_.end())
        throw Error("unknown object id: " + id);
    return it->second;
}

std::span<const RatingDataset::UserEntry> RatingDataset::ratings_of(std::size_t user) const {
    if (user >= user_ids_.size())
        throw Error("user index out of range");
    return {user_entries_.data() + user_offsets_[user],
            user_offsets_[user + 1] - user_offsets_[user]};
}

std::span<const RatingDataset::ObjectEntry> RatingDataset::raters_of(std::size_t object) const {
    if (object >= object_ids_.size())
        throw Error("object index out of range");
    return {object_entries_.data() + object_offsets_[object],
            object_offsets_[object + 1] - object_offsets_[object]};
}

std::vector<Triple> RatingDataset::triples() const {
    std::vector<Triple> out;
    out.reserve(num_ratings_);
    for (std::size_t u = 0; u < num_users(); ++u)
        for (const auto& e : ratings_of(u))
            out.push_back({user_ids_[u], object_ids_[e.object], value_of(e.value_index)});
    std::sort(out.begin(), out.end(), [](const Triple& a, const Triple& b) {
        return std::tie(a.user, a.object) < std::tie(b.user, b.object);
    });
    return out;
}

}  // namespace reprank
