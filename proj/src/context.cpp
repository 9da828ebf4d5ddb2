#include "depfca/context.hpp"

namespace depfca {

FormalContext::FormalContext(std::vector<std::pair<std::size_t, std::size_t>> objects,
                             std::vector<std::string> attributes,
                             std::vector<std::vector<std::uint64_t>> incidence_rows)
    : objects_(std::move(objects)),
      attributes_(std::move(attributes)),
      rows_(std::move(incidence_rows)),
      words_((attributes_.size() + 63) / 64) {
    if (rows_.size() != objects_.size())
        throw ContractError("incidence rows must match object count");
    for (const auto& r : rows_)
        if (r.size() != words_) throw ContractError("incidence row width mismatch");
}

bool FormalContext::incident(std::size_t obj, std::size_t attr) const {
    return (rows_.at(obj)[attr / 64] >> (attr % 64)) & 1u;
}

std::vector<std::uint64_t> FormalContext::attr_mask(const AttrSet& xs) const {
    std::vector<std::uint64_t> mask(words_, 0);
    for (auto a : xs) {
        if (a >= attributes_.size())
            throw ContractError("attribute index " + std::to_string(a) + " out of range");
        mask[a / 64] |= std::uint64_t{1} << (a % 64);
    }
    return mask;
}

bool FormalContext::has_all(std::size_t obj, const std::vector<std::uint64_t>& mask) const {
    const auto& row = rows_[obj];
    for (std::size_t w = 0; w < words_; ++w)
        if ((row[w] & mask[w]) != mask[w]) return false;
    return true;
}

std::vector<std::size_t> FormalContext::extent(const AttrSet& xs) const {
    auto mask = attr_mask(xs);
    std::vector<std::size_t> out;
    for (std::size_t o = 0; o < rows_.size(); ++o)
        if (has_all(o, mask)) out.push_back(o);
    return out;
}

AttrSet FormalContext::attr_closure(const AttrSet& xs) const {
    auto mask = attr_mask(xs);
    std::vector<std::uint64_t> shared(words_, ~std::uint64_t{0});
    for (std::size_t o = 0; o < rows_.size(); ++o) {
        if (!has_all(o, mask)) continue;
        for (std::size_t w = 0; w < words_; ++w) shared[w] &= rows_[o][w];
    }
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; a < attributes_.size(); ++a)
        if ((shared[a / 64] >> (a % 64)) & 1u) idx.push_back(a);
    return AttrSet(std::move(idx));
}

bool FormalContext::implication_holds(const AttrSet& xs, const AttrSet& ys) const {
    auto premise = attr_mask(xs);
    auto conclusion = attr_mask(ys);
    for (std::size_t o = 0; o < rows_.size(); ++o)
        if (has_all(o, premise) && !has_all(o, conclusion)) return false;
    return true;
}

FormalContext binarize(const Relation& rel) {
    std::size_t n = rel.tuple_count();
    std::size_t m = rel.attr_count();
    std::size_t words = (m + 63) / 64;
    std::vector<std::pair<std::size_t, std::size_t>> objects;
    std::vector<std::vector<std::uint64_t>> rows;
    objects.reserve(n * (n - (n > 0)) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<std::uint64_t> row(words, 0);
            for (std::size_t a = 0; a < m; ++a)
                if (rel.agree(i, j, a)) row[a / 64] |= std::uint64_t{1} << (a % 64);
            objects.emplace_back(i, j);
            rows.push_back(std::move(row));
        }
    }
    return FormalContext(std::move(objects), rel.attributes(), std::move(rows));
}

}  // namespace depfca
