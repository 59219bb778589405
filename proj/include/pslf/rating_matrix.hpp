#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pslf/rating.hpp"

namespace pslf {

// Sparse user-item score matrix stored in CSR form from both sides, so that
// the entry list of a user and the entry list of an item are both O(1) to
// reach. Users and items without observed entries are allowed.
class RatingMatrix {
public:
    struct Entry {
        std::int32_t index = 0;  // item index in by_user(), user index in by_item()
        double score = 0.0;
    };

    RatingMatrix() = default;

    RatingMatrix(int num_users, int num_items, const Ratings& ratings)
        : num_users_(num_users), num_items_(num_items) {
        if (num_users < 0 || num_items < 0)
            throw std::invalid_argument("RatingMatrix: negative dimension");
        build(ratings);
    }

    int num_users() const { return num_users_; }
    int num_items() const { return num_items_; }
    std::size_t num_observed() const { return user_entries_.size(); }

    // Entries of user u, in the order they appeared in the input.
    std::span<const Entry> by_user(int u) const {
        return {user_entries_.data() + user_offsets_[u],
                user_offsets_[u + 1] - user_offsets_[u]};
    }

    // Entries of item i, in the order they appeared in the input.
    std::span<const Entry> by_item(int i) const {
        return {item_entries_.data() + item_offsets_[i],
                item_offsets_[i + 1] - item_offsets_[i]};
    }

    // Number of observed ratings the user/item participates in.
    int user_degree(int u) const { return static_cast<int>(by_user(u).size()); }
    int item_degree(int i) const { return static_cast<int>(by_item(i).size()); }

private:
    void build(const Ratings& ratings) {
        user_offsets_.assign(static_cast<std::size_t>(num_users_) + 1, 0);
        item_offsets_.assign(static_cast<std::size_t>(num_items_) + 1, 0);
        for (const Rating& r : ratings) {
            if (r.user < 0 || r.user >= num_users_)
                throw std::out_of_range("RatingMatrix: user index " + std::to_string(r.user) +
                                        " outside [0, " + std::to_string(num_users_) + ")");
            if (r.item < 0 || r.item >= num_items_)
                throw std::out_of_range("RatingMatrix: item index " + std::to_string(r.item) +
                                        " outside [0, " + std::to_string(num_items_) + ")");
            ++user_offsets_[static_cast<std::size_t>(r.user) + 1];
            ++item_offsets_[static_cast<std::size_t>(r.item) + 1];
        }
        for (std::size_t u = 0; u < user_offsets_.size() - 1; ++u)
            user_offsets_[u + 1] += user_offsets_[u];
        for (std::size_t i = 0; i < item_offsets_.size() - 1; ++i)
            item_offsets_[i + 1] += item_offsets_[i];

        user_entries_.resize(ratings.size());
        item_entries_.resize(ratings.size());
        std::vector<std::size_t> user_fill(user_offsets_.begin(), user_offsets_.end() - 1);
        std::vector<std::size_t> item_fill(item_offsets_.begin(), item_offsets_.end() - 1);
        for (const Rating& r : ratings) {
            user_entries_[user_fill[r.user]++] = {r.item, r.score};
            item_entries_[item_fill[r.item]++] = {r.user, r.score};
        }
    }

    int num_users_ = 0;
    int num_items_ = 0;
    std::vector<std::size_t> user_offsets_{0};
    std::vector<std::size_t> item_offsets_{0};
    std::vector<Entry> user_entries_;
    std::vector<Entry> item_entries_;
};

}  // namespace pslf
