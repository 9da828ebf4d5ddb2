#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "depfca/partitions.hpp"
#include "support/random_relations.hpp"

using namespace depfca;

namespace {

Relation rel_from_columns(const std::vector<std::vector<std::string>>& cols) {
    std::vector<std::string> attrs;
    for (std::size_t a = 0; a < cols.size(); ++a) attrs.push_back("c" + std::to_string(a));
    std::vector<std::vector<std::string>> rows(cols[0].size(),
                                               std::vector<std::string>(cols.size()));
    for (std::size_t a = 0; a < cols.size(); ++a)
        for (std::size_t i = 0; i < cols[a].size(); ++i) rows[i][a] = cols[a][i];
    return Relation::from_rows(std::move(attrs), std::move(rows));
}

TuplePartition random_partition(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> label(0, n ? static_cast<std::uint32_t>(n) / 2 : 0);
    std::vector<std::uint32_t> labels(n);
    for (auto& l : labels) l = label(rng);
    return TuplePartition::from_labels(labels);
}

}  // namespace

TEST_CASE("delta groups by column value") {
    auto rel = rel_from_columns({{"1", "1", "2", "2", "1"}});
    CHECK(delta(rel, 0).blocks() ==
          std::vector<std::vector<std::size_t>>{{0, 1, 4}, {2, 3}});
}

TEST_CASE("delta on all-distinct and constant columns") {
    auto distinct = rel_from_columns({{"1", "2", "3"}});
    CHECK(delta(distinct, 0).block_count() == 3);
    auto constant = rel_from_columns({{"x", "x", "x"}});
    CHECK(delta(constant, 0).block_count() == 1);
}

TEST_CASE("meet is blockwise intersection") {
    auto p = TuplePartition::from_blocks(4, {{0, 1, 2}, {3}});
    auto q = TuplePartition::from_blocks(4, {{0, 1}, {2, 3}});
    CHECK(meet(p, q).blocks() == std::vector<std::vector<std::size_t>>{{0, 1}, {2}, {3}});
    CHECK(meet(p, p) == p);
    auto bottom = TuplePartition::singletons(4);
    CHECK(meet(p, bottom) == bottom);
}

TEST_CASE("meet over mismatched ranges is a contract error") {
    CHECK_THROWS_AS(meet(TuplePartition::singletons(3), TuplePartition::singletons(4)),
                    ContractError);
}

TEST_CASE("refines basics") {
    CHECK(refines(TuplePartition::singletons(3), TuplePartition::single_block(3)));
    auto p = TuplePartition::from_blocks(3, {{0, 1}, {2}});
    auto q = TuplePartition::from_blocks(3, {{0}, {1, 2}});
    CHECK_FALSE(refines(p, q));
    CHECK(refines(p, p));
}

TEST_CASE("partition_of_set folds meet over deltas") {
    auto rel = rel_from_columns({{"1", "1", "2"}, {"1", "2", "2"}});
    CHECK(partition_of_set(rel, AttrSet{0, 1}) == TuplePartition::singletons(3));
    CHECK(partition_of_set(rel, AttrSet{}) == TuplePartition::single_block(3));
    auto three = rel_from_columns({{"1", "1", "2"}, {"1", "1", "3"}, {"1", "2", "3"}});
    CHECK(partition_of_set(three, AttrSet{0}).blocks() ==
          std::vector<std::vector<std::size_t>>{{0, 1}, {2}});
}

TEST_CASE("fd_holds examples") {
    auto rel = rel_from_columns({{"1", "1", "2"}, {"1", "1", "3"}, {"1", "2", "3"}});
    CHECK(fd_holds(rel, AttrSet{0}, AttrSet{1}));
    CHECK(fd_holds(rel, AttrSet{0, 2}, AttrSet{0, 2}));  // X -> X
    auto bad = rel_from_columns({{"1", "1"}, {"2", "3"}});
    CHECK_FALSE(fd_holds(bad, AttrSet{0}, AttrSet{1}));
}

TEST_CASE("meet laws on random partitions") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + rng() % 12;
        auto p = random_partition(rng, n);
        auto q = random_partition(rng, n);
        auto r = random_partition(rng, n);
        CHECK(meet(p, q) == meet(q, p));
        CHECK(meet(p, p) == p);
        CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
        CHECK(refines(meet(p, q), p));
        CHECK(refines(meet(p, q), q));
        auto s = meet(meet(p, q), r);  // refines both p and q
        if (refines(s, p) && refines(s, q)) CHECK(refines(s, meet(p, q)));
    }
}

TEST_CASE("partition_of_set distributes over union") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        auto rel = testsupport::random_relation(rng, 5, 15, 2, 3);
        auto subsets = testsupport::all_attr_subsets(rel.attr_count());
        std::uniform_int_distribution<std::size_t> pick(0, subsets.size() - 1);
        auto xs = subsets[pick(rng)];
        auto ys = subsets[pick(rng)];
        CHECK(partition_of_set(rel, xs.united(ys)) ==
              meet(partition_of_set(rel, xs), partition_of_set(rel, ys)));
    }
}
