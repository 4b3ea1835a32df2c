#include "iterlog/bfile.hpp"
#include "iterlog/errors.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace iterlog;

namespace {

BFile parse(const std::string& text)
{
    std::istringstream in(text);
    return parse_bfile(in, "inline");
}

std::vector<Integer> ints(std::initializer_list<long> v)
{
    std::vector<Integer> out;
    for (long x : v) {
        out.emplace_back(x);
    }
    return out;
}

}  // namespace

TEST_CASE("parsing")
{
    const BFile b = parse("# A134242\n\n1 0\n2 1\n   3 -1\n4 1 \n");
    REQUIRE(b.entries.size() == 4);
    CHECK(b.source == "inline");
    CHECK(b.entries[2].index == 3);
    CHECK(b.entries[2].value == -1);
    CHECK(parse("").entries.empty());

    try {
        parse("1 0\n2 x\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("inline:2:") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("1\n"), ParseError);
    CHECK_THROWS_AS(parse("1 2 3\n"), ParseError);
}

TEST_CASE("writing and reading back")
{
    const auto v = ints({0, 1, -1, 1, -2});
    CHECK(to_bfile(v) == "1 0\n2 1\n3 -1\n4 1\n5 -2\n");
    CHECK(to_bfile(ints({7}), 0) == "0 7\n");

    const auto path = std::filesystem::temp_directory_path() / "iterlog_bfile_roundtrip.txt";
    {
        std::ofstream f(path);
        f << to_bfile(v);
    }
    const BFile b = read_bfile(path.string());
    CHECK(b.entries.size() == 5);
    CHECK(b.entries[4].value == -2);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_bfile("/nonexistent/iterlog/b.txt"), IoError);
}

TEST_CASE("comparison")
{
    const auto computed = ints({0, 1, -1, 1, -2, 11, -3});
    const BFile same = parse(to_bfile(computed));
    const auto ok = compare_bfile(computed, same);
    CHECK(ok.ok());
    CHECK(ok.compared == 7);
    CHECK(ok.total == 7);
    CHECK(ok.agreeing_offsets == std::vector<int>{0});

    const BFile altered = parse("1 0\n2 1\n3 5\n4 1\n");
    const auto bad = compare_bfile(computed, altered);
    CHECK_FALSE(bad.ok());
    REQUIRE(bad.mismatches.size() == 1);
    CHECK(bad.mismatches[0].index == 3);
    CHECK(bad.mismatches[0].computed == -1);
    CHECK(bad.mismatches[0].file == 5);

    // a file indexed from 0 agrees at offset +1 and is reported, not applied
    const BFile shifted = parse(to_bfile(computed, 0));
    const auto s = compare_bfile(computed, shifted);
    CHECK_FALSE(s.ok());
    CHECK(s.agreeing_offsets == std::vector<int>{1});
    CHECK(compare_bfile(computed, shifted, 1).ok());

    // only the overlap is compared
    const BFile longer = parse(to_bfile(ints({0, 1, -1, 1, -2, 11, -3, 99, 98})));
    const auto l = compare_bfile(computed, longer);
    CHECK(l.ok());
    CHECK(l.compared == 7);
    CHECK(l.total == 9);

    CHECK_FALSE(compare_bfile(computed, parse("")).ok());
}
