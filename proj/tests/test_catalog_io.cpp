// Unit tests for the textual catalog format: emit/load round-trips the
// built-in catalog, the shipped catalog file loads and validates, and
// malformed or non-conforming inputs are rejected with useful errors.
#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "nilalg/catalog_io.hpp"

using namespace nilalg;

TEST_CASE("emit followed by parse reproduces the built-in catalog exactly") {
    std::vector<CatalogEntryData> data;
    for (const auto& e : catalog()) data.push_back(e.data);
    std::ostringstream os;
    emit_catalog(os, data);
    std::istringstream in(os.str());
    std::vector<CatalogEntryData> back = parse_catalog_data(in);
    REQUIRE(back.size() == data.size());
    for (size_t i = 0; i < data.size(); ++i) {
        INFO(data[i].name);
        CHECK(back[i] == data[i]);
    }
}

TEST_CASE("the shipped catalog file loads and validates all entries") {
    std::vector<CatalogEntry> loaded =
        load_catalog(std::string(NILALG_DATA_DIR) + "/catalog.txt");
    REQUIRE(loaded.size() == catalog().size());
    for (size_t i = 0; i < loaded.size(); ++i) {
        CHECK(loaded[i].data == catalog()[i].data);
        CHECK(loaded[i].alg == catalog()[i].alg);
    }
}

TEST_CASE("parse errors carry line numbers and a reason") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return parse_catalog_data(in);
    };
    CHECK_THROWS_AS(parse("entry A\nentry B\nend\n"), CatalogParseError);
    CHECK_THROWS_AS(parse("end\n"), CatalogParseError);
    CHECK_THROWS_AS(parse("entry A\n"), CatalogParseError);
    CHECK_THROWS_AS(parse("entry A\n  frobnicate x\nend\n"), CatalogParseError);
    CHECK_THROWS_AS(parse("entry\nend\n"), CatalogParseError);
    CHECK_THROWS_WITH(parse("entry A\n  frobnicate x\nend\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    // Comments and blank lines are ignored.
    auto ok = parse("# heading\n\nentry A\n  products e1 e1 = e2  # inline\nend\n");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].name == "A");
    CHECK(ok[0].products == "e1 e1 = e2");
}

TEST_CASE("validation rejects duplicates and non-conforming tables") {
    auto load = [](const std::string& text) {
        std::istringstream in(text);
        return validate_catalog(parse_catalog_data(in));
    };
    CHECK_THROWS_AS(load("entry A\n products e1 e1 = e2\nend\n"
                         "entry A\n products e1 e1 = e3\nend\n"),
                    CatalogValidationError);
    // e1 e1 = e1 is not nilpotent.
    CHECK_THROWS_AS(load("entry bad\n products e1 e1 = e1\nend\n"),
                    CatalogValidationError);
    // (e1 e2) e1 = e3 but (e1 e1) e2 + e1 (e2 e1) = 0: not right Leibniz.
    CHECK_THROWS_AS(
        load("entry bad\n products e1 e2 = e2; e2 e1 = e3\nend\n"),
        CatalogValidationError);
    // A correct table passes; explicit tables parse in the ambient dimension.
    auto ok = load("entry good\n products e1 e1 = e2\nend\n");
    REQUIRE(ok.size() == 1);
    CHECK(ok[0].alg.n == 5);
}
