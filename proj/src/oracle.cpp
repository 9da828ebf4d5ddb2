#include "depfca/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace depfca::oracle {

namespace {

using Row = std::vector<std::string>;

Row restrict_row(const Relation& rel, std::size_t i, const std::vector<std::size_t>& attrs) {
    Row out;
    out.reserve(attrs.size());
    for (auto a : attrs) out.push_back(rel.value(i, a));
    return out;
}

// Materializes the cross product of the block projections of the given rows
// and compares it against the rows themselves, all over the listed
// attributes in ascending order. Skips materialization when the product
// cardinality already differs (the rows are always contained in the product).
bool product_equals(const Relation& rel, const std::vector<std::size_t>& tuple_idx,
                    const std::vector<std::vector<std::size_t>>& blocks) {
    std::vector<std::size_t> attrs;
    for (const auto& b : blocks) attrs.insert(attrs.end(), b.begin(), b.end());
    std::sort(attrs.begin(), attrs.end());

    std::set<Row> actual;
    for (auto i : tuple_idx) actual.insert(restrict_row(rel, i, attrs));

    std::vector<std::set<Row>> projections;
    std::size_t product_size = 1;
    for (const auto& b : blocks) {
        std::set<Row> proj;
        for (auto i : tuple_idx) proj.insert(restrict_row(rel, i, b));
        product_size *= proj.size();
        if (product_size > actual.size()) return false;
        projections.push_back(std::move(proj));
    }
    if (product_size != actual.size()) return false;

    // Cross product, one block at a time, as attr -> value assignments.
    std::vector<std::map<std::size_t, std::string>> combos{{}};
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
        const auto& b = blocks[bi];
        std::vector<std::map<std::size_t, std::string>> next;
        for (const auto& combo : combos) {
            for (const auto& values : projections[bi]) {
                auto extended = combo;
                for (std::size_t k = 0; k < b.size(); ++k) extended[b[k]] = values[k];
                next.push_back(std::move(extended));
            }
        }
        combos = std::move(next);
    }
    std::set<Row> product;
    for (const auto& combo : combos) {
        Row row;
        row.reserve(attrs.size());
        for (auto a : attrs) row.push_back(combo.at(a));
        product.insert(std::move(row));
    }
    return product == actual;
}

bool matches_by_product(const Relation& rel, const AttrPartition& p,
                        const std::vector<std::size_t>& c) {
    return product_equals(rel, c, p.blocks());
}

void enumerate_partitions(std::size_t m, std::vector<std::vector<std::vector<std::size_t>>>& out) {
    std::vector<std::vector<std::size_t>> blocks;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (next == m) {
            out.push_back(blocks);
            return;
        }
        // index-based: deeper calls push to `blocks`, so references would dangle
        for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
            blocks[bi].push_back(next);
            self(self, next + 1);
            blocks[bi].pop_back();
        }
        blocks.push_back({next});
        self(self, next + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

}  // namespace

bool oracle_fd(const Relation& rel, const AttrSet& xs, const AttrSet& ys) {
    rel.check_attrs(xs);
    rel.check_attrs(ys);
    std::size_t n = rel.tuple_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool agree_xs = true;
            for (auto a : xs)
                if (!rel.agree(i, j, a)) {
                    agree_xs = false;
                    break;
                }
            if (!agree_xs) continue;
            for (auto a : ys)
                if (!rel.agree(i, j, a)) return false;
        }
    }
    return true;
}

bool oracle_mvd(const Relation& rel, const GeneralizedMVD& d) {
    check_mvd_shape(rel, d);
    if (d.rhs_blocks.empty()) return true;
    std::vector<std::size_t> lhs(d.lhs.begin(), d.lhs.end());
    std::map<Row, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < rel.tuple_count(); ++i)
        groups[restrict_row(rel, i, lhs)].push_back(i);
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& y : d.rhs_blocks) blocks.emplace_back(y.begin(), y.end());
    for (const auto& [_, members] : groups)
        if (!product_equals(rel, members, blocks)) return false;
    return true;
}

ClassFamily oracle_maximal_classes(const Relation& rel, const AttrPartition& p) {
    std::size_t n = rel.tuple_count();
    if (n > 12) throw CapacityError("oracle class sweep capped at 12 tuples");
    std::vector<std::uint32_t> matched;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) c.push_back(i);
        if (matches_by_product(rel, p, c)) matched.push_back(mask);
    }
    ClassFamily fam;
    for (auto m : matched) {
        bool maximal = true;
        for (auto other : matched)
            if (other != m && (m & other) == m) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) c.push_back(i);
        fam.classes.push_back(std::move(c));
    }
    std::sort(fam.classes.begin(), fam.classes.end());
    return fam;
}

AttrPartition oracle_finest_matching(const Relation& rel, const ClassFamily& s) {
    std::size_t m = rel.attr_count();
    if (m > 6) throw CapacityError("oracle partition sweep capped at 6 attributes");
    std::vector<std::vector<std::vector<std::size_t>>> candidates;
    enumerate_partitions(m, candidates);

    std::vector<AttrPartition> matching;
    for (const auto& blocks : candidates) {
        AttrPartition p = AttrPartition::from_blocks(m, blocks);
        bool all = true;
        for (const auto& c : s.classes)
            if (!matches_by_product(rel, p, c)) {
                all = false;
                break;
            }
        if (all) matching.push_back(std::move(p));
    }
    // The single-block partition matches everything, so `matching` is never empty.
    std::vector<AttrPartition> minimal;
    for (const auto& p : matching) {
        bool is_min = true;
        for (const auto& q : matching)
            if (!(q == p) && q.refines(p)) {
                is_min = false;
                break;
            }
        if (is_min) minimal.push_back(p);
    }
    if (minimal.size() != 1)
        throw ContractError("no unique finest matching partition: found " +
                            std::to_string(minimal.size()) + " incomparable minima");
    return minimal.front();
}

}  // namespace depfca::oracle
