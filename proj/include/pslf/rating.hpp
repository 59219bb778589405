#pragma once

#include <cstdint>
#include <vector>

namespace pslf {

// One observed rating, with user and item ids already remapped to dense
// zero-based indices.
struct Rating {
    std::int32_t user = 0;
    std::int32_t item = 0;
    double score = 0.0;

    friend bool operator==(const Rating&, const Rating&) = default;
};

using Ratings = std::vector<Rating>;

}  // namespace pslf
