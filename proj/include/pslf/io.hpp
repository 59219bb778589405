#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pslf/factor_matrix.hpp"
#include "pslf/rating.hpp"

namespace pslf {

// A parsed rating line, before id remapping.
struct RawRating {
    std::int64_t user = 0;
    std::int64_t item = 0;
    double score = 0.0;

    friend bool operator==(const RawRating&, const RawRating&) = default;
};

// Maps raw dataset ids to dense zero-based indices, in first-seen order.
class IdMap {
public:
    // Returns the index of `raw`, inserting it if unseen.
    int add(std::int64_t raw) {
        auto [it, inserted] = index_.try_emplace(raw, static_cast<int>(ids_.size()));
        if (inserted) ids_.push_back(raw);
        return it->second;
    }

    std::optional<int> find(std::int64_t raw) const {
        auto it = index_.find(raw);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::int64_t raw(int index) const { return ids_.at(index); }
    int size() const { return static_cast<int>(ids_.size()); }

private:
    std::vector<std::int64_t> ids_;
    std::unordered_map<std::int64_t, int> index_;
};

namespace detail {

inline bool is_separator(char c) {
    return c == ':' || c == ',' || c == ';' || c == '\t' || c == ' ' || c == '\r';
}

inline void split_fields(std::string_view line, std::vector<std::string_view>& fields) {
    fields.clear();
    std::size_t start = 0;
    while (start < line.size()) {
        while (start < line.size() && is_separator(line[start])) ++start;
        std::size_t end = start;
        while (end < line.size() && !is_separator(line[end])) ++end;
        if (end > start) fields.push_back(line.substr(start, end - start));
        start = end;
    }
}

template <typename T>
T parse_number(std::string_view token, std::string_view file, std::size_t line_number) {
    T value{};
    const char* first = token.data();
    const char* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::runtime_error(std::string(file) + ":" + std::to_string(line_number) +
                                 ": cannot parse '" + std::string(token) + "'");
    return value;
}

}  // namespace detail

// Reads "user item score" triples. Field separators are detected per line:
// "::" (MovieLens dumps), tab, comma, semicolon or spaces all work, and
// extra fields such as timestamps are ignored. Blank lines and lines
// starting with '#' are skipped. Throws std::runtime_error naming the line
// on malformed input.
inline std::vector<RawRating> read_ratings(std::istream& in,
                                           std::string_view name = "<stream>") {
    std::vector<RawRating> out;
    std::string line;
    std::vector<std::string_view> fields;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view(line);
        if (view.empty() || view[0] == '#') continue;
        detail::split_fields(view, fields);
        if (fields.empty()) continue;
        if (fields.size() < 3)
            throw std::runtime_error(std::string(name) + ":" + std::to_string(line_number) +
                                     ": expected 'user item score', got '" + line + "'");
        RawRating r;
        r.user = detail::parse_number<std::int64_t>(fields[0], name, line_number);
        r.item = detail::parse_number<std::int64_t>(fields[1], name, line_number);
        r.score = detail::parse_number<double>(fields[2], name, line_number);
        out.push_back(r);
    }
    return out;
}

inline std::vector<RawRating> read_ratings_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_ratings(in, path.string());
}

// Writes tab-separated triples; scores keep full double precision.
inline void write_ratings_file(const std::filesystem::path& path,
                               std::span<const RawRating> rows) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    char buf[64];
    for (const RawRating& r : rows) {
        std::snprintf(buf, sizeof(buf), "%.17g", r.score);
        out << r.user << '\t' << r.item << '\t' << buf << '\n';
    }
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

// Remaps raw ids to dense indices, extending the maps as new ids appear.
inline Ratings reindex(std::span<const RawRating> rows, IdMap& users, IdMap& items) {
    Ratings out;
    out.reserve(rows.size());
    for (const RawRating& r : rows)
        out.push_back({users.add(r.user), items.add(r.item), r.score});
    return out;
}

// A trained model together with the id maps needed to score raw ids.
struct SavedModel {
    FactorMatrix factors;
    IdMap users;
    IdMap items;

    // Ids never seen in training have no factor row; they predict 0.
    double predict(std::int64_t raw_user, std::int64_t raw_item) const {
        const std::optional<int> u = users.find(raw_user);
        const std::optional<int> i = items.find(raw_item);
        if (!u || !i) return 0.0;
        return factors.predict(*u, *i);
    }
};

inline double rmse(const SavedModel& model, std::span<const RawRating> rows) {
    if (rows.empty()) throw std::invalid_argument("rmse: empty rating set");
    double sum = 0.0;
    for (const RawRating& r : rows) {
        const double e = r.score - model.predict(r.user, r.item);
        sum += e * e;
    }
    return std::sqrt(sum / static_cast<double>(rows.size()));
}

// Plain-text model format: a header, then one "u <raw-id> <factors...>"
// line per user and one "i <raw-id> <factors...>" line per item, in index
// order. Values are written with enough digits to round-trip exactly.
inline void save_model(const std::filesystem::path& path, const FactorMatrix& x,
                       const IdMap& users, const IdMap& items) {
    if (users.size() != x.num_users() || items.size() != x.num_items())
        throw std::invalid_argument("save_model: id maps do not match the factor matrix");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << "pslf-model 1\n";
    out << "factors " << x.dims() << '\n';
    out << "users " << x.num_users() << '\n';
    out << "items " << x.num_items() << '\n';
    char buf[64];
    auto write_row = [&](char tag, std::int64_t raw, std::span<const double> row) {
        out << tag << ' ' << raw;
        for (double v : row) {
            std::snprintf(buf, sizeof(buf), "%.17g", v);
            out << ' ' << buf;
        }
        out << '\n';
    };
    for (int u = 0; u < x.num_users(); ++u) write_row('u', users.raw(u), x.user(u));
    for (int i = 0; i < x.num_items(); ++i) write_row('i', items.raw(i), x.item(i));
    if (!out) throw std::runtime_error("failed writing " + path.string());
}

inline SavedModel load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());

    auto fail = [&](const std::string& what) -> std::runtime_error {
        return std::runtime_error(path.string() + ": " + what);
    };

    std::string word;
    int version = 0;
    if (!(in >> word >> version) || word != "pslf-model" || version != 1)
        throw fail("not a pslf-model file");
    int dims = 0, num_users = 0, num_items = 0;
    if (!(in >> word >> dims) || word != "factors" || dims <= 0)
        throw fail("bad factors header");
    if (!(in >> word >> num_users) || word != "users" || num_users < 0)
        throw fail("bad users header");
    if (!(in >> word >> num_items) || word != "items" || num_items < 0)
        throw fail("bad items header");

    SavedModel model;
    model.factors = FactorMatrix(num_users, num_items, dims);
    for (int r = 0; r < num_users + num_items; ++r) {
        std::int64_t raw = 0;
        if (!(in >> word >> raw) || word.size() != 1)
            throw fail("truncated factor row " + std::to_string(r));
        const bool is_user = word[0] == 'u';
        if (!is_user && word[0] != 'i') throw fail("bad row tag '" + word + "'");
        if (is_user != (r < num_users)) throw fail("row tag out of order");
        std::span<double> row = model.factors.row(r);
        for (int d = 0; d < dims; ++d)
            if (!(in >> row[d])) throw fail("truncated factor row " + std::to_string(r));
        const int idx = is_user ? model.users.add(raw) : model.items.add(raw);
        if (idx != (is_user ? r : r - num_users)) throw fail("duplicate id in factor rows");
    }
    return model;
}

}  // namespace pslf
