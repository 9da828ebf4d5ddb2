#pragma once

// Seeded random-relation generators shared by the unit and acceptance tests.

#include <random>
#include <string>
#include <vector>

#include "depfca/relation.hpp"

namespace depfca::testsupport {

inline Relation random_relation(std::mt19937& rng, std::size_t max_attrs,
                                std::size_t max_tuples, std::size_t min_alphabet,
                                std::size_t max_alphabet) {
    std::uniform_int_distribution<std::size_t> attr_dist(1, max_attrs);
    std::uniform_int_distribution<std::size_t> tuple_dist(0, max_tuples);
    std::uniform_int_distribution<std::size_t> alpha_dist(min_alphabet, max_alphabet);
    std::size_t m = attr_dist(rng);
    std::size_t n = tuple_dist(rng);
    std::vector<std::size_t> alphabet(m);
    for (auto& a : alphabet) a = alpha_dist(rng);

    std::vector<std::string> attrs;
    for (std::size_t a = 0; a < m; ++a) attrs.push_back("c" + std::to_string(a));
    std::vector<std::vector<std::string>> rows(n, std::vector<std::string>(m));
    for (auto& row : rows)
        for (std::size_t a = 0; a < m; ++a) {
            std::uniform_int_distribution<std::size_t> v(0, alphabet[a] - 1);
            row[a] = std::to_string(v(rng));
        }
    return Relation::from_rows(std::move(attrs), std::move(rows));
}

/// All subsets of the attribute indices 0..m-1 as AttrSets.
inline std::vector<AttrSet> all_attr_subsets(std::size_t m) {
    std::vector<AttrSet> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<std::size_t> idx;
        for (std::size_t a = 0; a < m; ++a)
            if ((mask >> a) & 1u) idx.push_back(a);
        out.emplace_back(std::move(idx));
    }
    return out;
}

}  // namespace depfca::testsupport
