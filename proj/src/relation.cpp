#include "depfca/relation.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace depfca {

AttrSet::AttrSet(std::initializer_list<std::size_t> idx)
    : AttrSet(std::vector<std::size_t>(idx)) {}

AttrSet::AttrSet(std::vector<std::size_t> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

bool AttrSet::contains(std::size_t a) const {
    return std::binary_search(idx_.begin(), idx_.end(), a);
}

bool AttrSet::is_subset_of(const AttrSet& other) const {
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
}

AttrSet AttrSet::with(std::size_t a) const {
    auto copy = idx_;
    copy.push_back(a);
    return AttrSet(std::move(copy));
}

AttrSet AttrSet::without(std::size_t a) const {
    std::vector<std::size_t> copy;
    copy.reserve(idx_.size());
    for (auto x : idx_)
        if (x != a) copy.push_back(x);
    return AttrSet(std::move(copy));
}

AttrSet AttrSet::united(const AttrSet& other) const {
    std::vector<std::size_t> merged;
    merged.reserve(idx_.size() + other.idx_.size());
    std::set_union(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end(),
                   std::back_inserter(merged));
    return AttrSet(std::move(merged));
}

Relation Relation::from_rows(std::vector<std::string> attributes,
                             std::vector<std::vector<std::string>> rows,
                             std::string provenance, bool null_distinct) {
    std::unordered_set<std::string> seen;
    for (const auto& name : attributes) {
        if (!seen.insert(name).second)
            throw IngestionError("duplicate attribute \"" + name + "\"");
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != attributes.size()) {
            throw IngestionError("row " + std::to_string(i + 1) + " has " +
                                 std::to_string(rows[i].size()) + " values, expected " +
                                 std::to_string(attributes.size()));
        }
    }
    Relation rel;
    rel.attributes_ = std::move(attributes);
    rel.rows_ = std::move(rows);
    rel.provenance_ = std::move(provenance);
    rel.null_distinct_ = null_distinct;
    return rel;
}

namespace {

// RFC 4180 field splitting: quoted fields, doubled quotes, configurable
// delimiter. Records are separated by LF; a trailing CR is stripped upstream.
std::vector<std::vector<std::string>> parse_csv_records(const std::string& text,
                                                        char delimiter) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool field_started = false;
    auto end_field = [&] {
        fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_record = [&] {
        end_field();
        records.push_back(std::move(fields));
        fields.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"' && !field_started) {
            in_quotes = true;
            field_started = true;
        } else if (c == delimiter) {
            end_field();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            end_record();
        } else {
            field += c;
            field_started = true;
        }
    }
    if (in_quotes) throw IngestionError("unterminated quoted field");
    if (field_started || !fields.empty() || !field.empty()) {
        if (!field.empty() && field.back() == '\r') field.pop_back();
        end_record();
    }
    return records;
}

}  // namespace

Relation Relation::from_csv_text(const std::string& text, const LoadOptions& opts,
                                 std::string provenance) {
    auto records = parse_csv_records(text, opts.delimiter);
    if (records.empty()) throw IngestionError("empty input: " + provenance);
    auto header = std::move(records.front());
    std::vector<std::vector<std::string>> rows(std::make_move_iterator(records.begin() + 1),
                                               std::make_move_iterator(records.end()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != header.size()) {
            throw IngestionError("row " + std::to_string(i + 2) + " has " +
                                 std::to_string(rows[i].size()) + " values, expected " +
                                 std::to_string(header.size()));
        }
    }
    if (opts.dedupe_rows) {
        std::set<std::vector<std::string>> seen;
        std::vector<std::vector<std::string>> unique_rows;
        for (auto& r : rows)
            if (seen.insert(r).second) unique_rows.push_back(std::move(r));
        rows = std::move(unique_rows);
    }
    return from_rows(std::move(header), std::move(rows), std::move(provenance),
                     opts.null_distinct);
}

Relation Relation::load_csv(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IngestionError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_csv_text(buf.str(), opts, path);
}

std::size_t Relation::attr_index(const std::string& name) const {
    for (std::size_t a = 0; a < attributes_.size(); ++a)
        if (attributes_[a] == name) return a;
    return npos;
}

bool Relation::agree(std::size_t i, std::size_t j, std::size_t a) const {
    const auto& vi = rows_.at(i).at(a);
    const auto& vj = rows_.at(j).at(a);
    if (null_distinct_ && (vi.empty() || vj.empty())) return false;
    return vi == vj;
}

void Relation::check_attrs(const AttrSet& xs) const {
    for (auto a : xs)
        if (a >= attributes_.size())
            throw ContractError("attribute index " + std::to_string(a) + " out of range");
}

std::set<std::vector<std::string>> Relation::project(const AttrSet& xs) const {
    check_attrs(xs);
    std::set<std::vector<std::string>> out;
    for (const auto& r : rows_) {
        std::vector<std::string> proj;
        proj.reserve(xs.size());
        for (auto a : xs) proj.push_back(r[a]);
        out.insert(std::move(proj));
    }
    return out;
}

const std::vector<std::vector<std::uint32_t>>& Relation::column_codes() const {
    if (codes_.empty() && !attributes_.empty()) {
        codes_.resize(attributes_.size());
        for (std::size_t a = 0; a < attributes_.size(); ++a) {
            std::unordered_map<std::string, std::uint32_t> dict;
            auto& col = codes_[a];
            col.reserve(rows_.size());
            for (const auto& r : rows_) {
                auto [it, _] = dict.emplace(r[a], static_cast<std::uint32_t>(dict.size()));
                col.push_back(it->second);
            }
        }
    }
    return codes_;
}

}  // namespace depfca
