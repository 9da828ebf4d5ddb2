#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "depfca/relation.hpp"

using namespace depfca;

TEST_CASE("csv ingestion keeps header and rows") {
    auto rel = Relation::from_csv_text("a,b\n1,2\n1,3\n", {});
    CHECK(rel.attr_count() == 2);
    CHECK(rel.tuple_count() == 2);
    CHECK(rel.attribute_name(0) == "a");
    CHECK(rel.value(1, 1) == "3");
}

TEST_CASE("dedupe_rows keeps the first occurrence") {
    LoadOptions opts;
    opts.dedupe_rows = true;
    auto rel = Relation::from_csv_text("a,b\n1,2\n1,2\n", opts);
    CHECK(rel.tuple_count() == 1);
}

TEST_CASE("duplicate header is an ingestion error") {
    CHECK_THROWS_AS(Relation::from_csv_text("a,a\n1,2\n", {}), IngestionError);
}

TEST_CASE("ragged row names the offending row") {
    try {
        Relation::from_csv_text("a,b\n1,2\n1\n", {});
        FAIL("expected IngestionError");
    } catch (const IngestionError& e) {
        CHECK(std::string(e.what()).find("row 3") != std::string::npos);
    }
}

TEST_CASE("empty input is an ingestion error") {
    CHECK_THROWS_AS(Relation::from_csv_text("", {}), IngestionError);
}

TEST_CASE("rfc 4180 quoting") {
    auto rel = Relation::from_csv_text("a,b\r\n\"x,y\",\"he said \"\"hi\"\"\"\r\n", {});
    CHECK(rel.value(0, 0) == "x,y");
    CHECK(rel.value(0, 1) == "he said \"hi\"");
}

TEST_CASE("custom delimiter") {
    LoadOptions opts;
    opts.delimiter = ';';
    auto rel = Relation::from_csv_text("a;b\n1;2\n", opts);
    CHECK(rel.value(0, 1) == "2");
}

TEST_CASE("projection has set semantics") {
    auto rel = Relation::from_csv_text("a,b\n1,2\n1,3\n", {});
    CHECK(rel.project(AttrSet{0}) == std::set<std::vector<std::string>>{{"1"}});
    CHECK(rel.project(AttrSet{0, 1}).size() == 2);
}

TEST_CASE("projection onto the empty set is the empty row") {
    auto rel = Relation::from_csv_text("a,b\n1,2\n", {});
    CHECK(rel.project(AttrSet{}) == std::set<std::vector<std::string>>{{}});
}

TEST_CASE("projection index out of range is a contract error") {
    auto rel = Relation::from_csv_text("a,b\n1,2\n", {});
    CHECK_THROWS_AS(rel.project(AttrSet{2}), ContractError);
}

TEST_CASE("projection is monotone under restriction") {
    auto rel = Relation::from_csv_text("a,b,c\n1,2,3\n1,2,4\n2,2,3\n", {});
    // projecting onto {a} directly equals projecting the {a,b} projection onto a
    auto direct = rel.project(AttrSet{0});
    std::set<std::vector<std::string>> via;
    for (const auto& row : rel.project(AttrSet{0, 1})) via.insert({row[0]});
    CHECK(direct == via);
}

TEST_CASE("null_distinct changes agreement on empty cells only") {
    LoadOptions opts;
    opts.null_distinct = true;
    auto rel = Relation::from_csv_text("a,b\n,x\n,x\n", opts);
    CHECK_FALSE(rel.agree(0, 1, 0));  // two empty cells disagree
    CHECK(rel.agree(0, 1, 1));
    auto naive = Relation::from_csv_text("a,b\n,x\n,x\n", {});
    CHECK(naive.agree(0, 1, 0));
}
