#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "mzb/gf2_system.hpp"
#include "mzb/relations.hpp"

using namespace mzb;

TEST_CASE("combination algebra") {
    Gf2Combination a({3, 1, 2});
    CHECK(a.ids() == std::vector<uint32_t>{1, 2, 3});
    CHECK(a.leading() == 1);
    Gf2Combination b({2, 4});
    Gf2Combination c = a ^ b;
    CHECK(c.ids() == std::vector<uint32_t>{1, 3, 4});
    CHECK((c ^ c).empty());
    CHECK((c ^ Gf2Combination()) == c);
    // Duplicate inputs cancel in pairs.
    CHECK(Gf2Combination({5, 5}).empty());
    CHECK(Gf2Combination({5, 5, 5}).ids() == std::vector<uint32_t>{5});
    CHECK(c.contains(3));
    CHECK_FALSE(c.contains(2));
}

TEST_CASE("family names round-trip") {
    for (Family f : {Family::EDS, Family::FDS, Family::MJPO, Family::KNT}) {
        auto back = family_from_name(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK_FALSE(family_from_name("nope").has_value());
}

TEST_CASE("text round-trip preserves the system") {
    for (Family f : {Family::EDS, Family::KNT}) {
        LinearSystem sys = generate_system(7, f);
        std::ostringstream os;
        write_text(sys, os);
        std::istringstream is(os.str());
        LinearSystem back = parse_text(is, "mem");
        CHECK(back.weight == sys.weight);
        CHECK(back.family == sys.family);
        CHECK(back.rows == sys.rows);
        CHECK(back.provenance.empty());
    }
}

TEST_CASE("text writer is byte-deterministic") {
    LinearSystem sys = generate_system(6, Family::EDS);
    std::ostringstream a, b;
    write_text(sys, a);
    write_text(sys, b);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("weight=6") != std::string::npos);
    CHECK(a.str().find("family=eds") != std::string::npos);
}

TEST_CASE("parser tolerates comments and missing terminators") {
    std::string text =
        "# weight=4 family=eds columns=4 rows=2\n"
        "# a comment line\n"
        "1 3 0\n"
        "\n"
        "# another comment\n"
        "2 4\n";
    std::istringstream is(text);
    LinearSystem sys = parse_text(is, "inline");
    CHECK(sys.weight == 4);
    REQUIRE(sys.rows.size() == 2);
    CHECK(sys.rows[0].ids() == std::vector<uint32_t>{1, 3});
    CHECK(sys.rows[1].ids() == std::vector<uint32_t>{2, 4});
}

TEST_CASE("parser rejects malformed input with positions") {
    auto expect_throw = [](const std::string &text) {
        std::istringstream is(text);
        CHECK_THROWS_AS(parse_text(is, "bad"), ParseError);
    };
    expect_throw("");                                         // no header
    expect_throw("# weight=4 family=eds columns=4 rows=1\n"
                 "3 1 0\n");                                  // not ascending
    expect_throw("# weight=4 family=eds columns=4 rows=1\n"
                 "1 9 0\n");                                  // id out of range
    expect_throw("# weight=4 family=eds columns=4 rows=1\n"
                 "1 frog 0\n");                               // not a number
    expect_throw("# weight=4 family=frog columns=4 rows=1\n"
                 "1 0\n");                                    // unknown family
    try {
        std::istringstream is("# weight=4 family=eds columns=4 rows=1\n3 1 0\n");
        parse_text(is, "bad");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(std::string(e.what()).find("bad") != std::string::npos);
        CHECK(std::string(e.what()).find("2") != std::string::npos);  // line number
    }
}

TEST_CASE("compact round-trip matches text round-trip") {
    for (int k : {5, 8, 10}) {
        LinearSystem sys = generate_system(k, Family::EDS);
        std::string path = "compact_test.mzf2";
        compact_write(sys, path);
        LinearSystem back = compact_read(path);
        CHECK(back.weight == sys.weight);
        CHECK(back.rows == sys.rows);
        std::remove(path.c_str());
    }
}

TEST_CASE("compact format has the documented magic and version") {
    LinearSystem sys = generate_system(4, Family::EDS);
    std::string path = "compact_magic.mzf2";
    compact_write(sys, path);
    std::ifstream is(path, std::ios::binary);
    char head[5] = {};
    is.read(head, 5);
    CHECK(std::string(head, 4) == "MZF2");
    CHECK(head[4] == 1);
    std::remove(path.c_str());
}

TEST_CASE("file round-trip through disk") {
    LinearSystem sys = generate_system(6, Family::MJPO);
    std::string path = "system_roundtrip.txt";
    write_text(sys, path);
    LinearSystem back = parse_text(path);
    CHECK(back.rows == sys.rows);
    CHECK(back.family == Family::MJPO);
    std::remove(path.c_str());
}

TEST_CASE("column table dump lists every column") {
    ColumnTable t(5);
    std::string path = "cols_test.txt";
    write_column_table(t, path);
    std::ifstream is(path);
    std::string line;
    size_t rows = 0;
    while (std::getline(is, line))
        if (!line.empty() && line[0] != '#') ++rows;
    CHECK(rows == t.size());
    std::remove(path.c_str());
}
