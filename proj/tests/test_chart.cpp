#include "motivic/chart.h"
#include "motivic/errors.h"
#include "motivic/io.h"

#include <doctest.h>

#include <algorithm>

using namespace motivic;

namespace {

ClassicalChart sample()
{
    return parse_chart(read_file(sample_chart_path()));
}

bool has_violation(const std::string& text)
{
    return !validate_chart(parse_chart_unchecked(text)).empty();
}

}  // namespace

TEST_CASE("group descriptors")
{
    CHECK(GroupDescriptor().to_string() == "0");
    CHECK(GroupDescriptor::z2adic().to_string() == "Z2");
    CHECK(GroupDescriptor({2, 8}).to_string() == "Z/8+Z/2");
    CHECK(GroupDescriptor({8, 0}).to_string() == "Z2+Z/8");
    CHECK(GroupDescriptor({32, 2}).order() == 64);
    CHECK_FALSE(GroupDescriptor::z2adic().order().has_value());
    CHECK(GroupDescriptor().order() == 1);
    CHECK_THROWS_AS(GroupDescriptor({3}), std::invalid_argument);
    CHECK_THROWS_AS(GroupDescriptor({1}), std::invalid_argument);
    for (const char* tok : {"0", "Z", "2", "32,2", "2,2,2,2"})
        CHECK(GroupDescriptor::from_token(tok).to_token() == tok);
}

TEST_CASE("parsing chart lines")
{
    auto unit = parse_chart("0 0 1 Z\n");
    REQUIRE(unit.at(0, 0).size() == 1);
    CHECK(unit.at(0, 0)[0].order == 0);
    CHECK(unit.group_at(0, 0) == GroupDescriptor::z2adic());

    auto c = parse_chart("0 0 1 Z eta:alpha1\n1 1 alpha1 2\n");
    const auto* a1 = c.find("alpha1");
    REQUIRE(a1);
    CHECK(a1->s == 1);
    CHECK(a1->f == 1);
    CHECK(a1->order == 2);
    CHECK(c.s_max == 1);

    CHECK_THROWS_AS(parse_chart("0 0 1 Z\n3 0 bogus 2\n"), ValidationError);
    CHECK_THROWS_AS(parse_chart_unchecked("0 0 1\n"), ParseError);
    CHECK_THROWS_AS(parse_chart_unchecked("0 x 1 Z\n"), ParseError);
    CHECK_THROWS_AS(parse_chart_unchecked("0 0 1 Z oops\n"), ParseError);
}

TEST_CASE("chart validation")
{
    CHECK(validate_chart(sample()).empty());
    CHECK(validate_chart(parse_chart_unchecked("1 1 alpha1 2\n")).size() == 1);
    CHECK(validate_chart(parse_chart_unchecked("range 4\n0 0 1 Z eta:x\n2 1 x 2\n")).size() == 1);
    CHECK(has_violation("0 0 1 Z\n0 0 2 Z\n"));
    CHECK(has_violation("0 0 1 Z\n1 1 a 2\n2 1 a 2\n"));
    CHECK(has_violation("range 2\n0 0 1 Z\n3 1 a 2\n"));
    CHECK_THROWS_AS(parse_chart_unchecked("0 0 1 Z\n1 1 a 6\n"), ParseError);
    CHECK(has_violation("0 0 1 Z eta:missing\n1 1 a 2\n"));
    CHECK_FALSE(has_violation("range 1\n0 0 1 Z eta:a\n1 1 a 2 eta:a^2\n"));
}

TEST_CASE("serialization is canonical")
{
    auto c = sample();
    auto text = serialize_chart(c);
    CHECK(serialize_chart(parse_chart(text)) == text);
    CHECK(parse_chart(text).entries == c.entries);

    auto table = parse_stems(read_file(stems_path()));
    auto stext = serialize_stems(table);
    CHECK(serialize_stems(parse_stems(stext)) == stext);
    CHECK(validate_stems(table).empty());
    CHECK(table.lookup(0) == GroupDescriptor::z2adic());
    CHECK(table.lookup(15) == GroupDescriptor({32, 2}));
    CHECK_FALSE(table.lookup(500).has_value());
    CHECK_FALSE(validate_stems(parse_stems("0 2\n")).empty());
    CHECK_FALSE(validate_stems(parse_stems("0 Z\n3 Z\n")).empty());
}

TEST_CASE("motivic lift")
{
    auto c = parse_chart("0 0 1 Z eta:alpha1\n1 1 alpha1 2\n");
    auto lift = lift_to_motivic(c);
    CHECK(lift.classes.size() == 2);
    for (int w : {1, 0, -1, -5})
        CHECK(lift.at({1, 1, w}).size() == 1);
    CHECK(lift.at({1, 1, 2}).empty());
    for (int w : {0, -1, -10})
        CHECK(lift.at({0, 0, w}).size() == 1);
    CHECK(lift.at({0, 0, 1}).empty());
    CHECK(lift_to_motivic(ClassicalChart{}).classes.empty());

    auto odd = lift_to_motivic(parse_chart_unchecked("0 0 1 Z\n2 1 x 2\n"));
    CHECK(odd.rejected.size() == 1);
    CHECK(odd.classes.size() == 1);
}

TEST_CASE("tau acts injectively on the lift")
{
    auto lift = lift_to_motivic(sample());
    auto slots = lift.materialize(-6);
    for (const auto& [d, names] : slots) {
        if (d.w - 1 < -6)
            continue;
        auto below = slots.find({d.s, d.f, d.w - 1});
        REQUIRE(below != slots.end());
        CHECK(below->second == names);
    }
}

TEST_CASE("C tau homotopy")
{
    auto c = sample();
    CHECK(ctau_homotopy(c, 0, 0) == GroupDescriptor::z2adic());
    CHECK(ctau_homotopy(c, 5, 2).is_trivial());
    CHECK(ctau_homotopy(c, 1, 1) == GroupDescriptor::cyclic(2));
    CHECK(ctau_homotopy(c, 5, 3) == GroupDescriptor::cyclic(2));
    CHECK(ctau_homotopy(c, 7, 4) == GroupDescriptor::cyclic(16));
    CHECK(ctau_homotopy(c, 3, -2).is_trivial());
    CHECK_THROWS_AS(ctau_homotopy(c, 8, 4), RangeError);
    CHECK_THROWS_AS(ctau_homotopy(c, -1, 0), RangeError);
}

TEST_CASE("alpha1 localization")
{
    auto loc = eta_localize_chart(sample(), 64);
    CHECK(in_localization_range(7, 4));
    CHECK_FALSE(in_localization_range(10, 4));

    /* alpha2/2 has no alpha1 multiple inside the range */
    auto dead = loc.at({3, 1});
    CHECK(dead.stability == Stability::Stable);
    CHECK(dead.survivors.empty());

    for (const auto& [sf, e] : loc)
        if (in_localization_range(sf.first, sf.second)) {
            CHECK(e.stability == Stability::Stable);
            CHECK(e.survivors.size() == sample().at(sf.first, sf.second).size());
        }

    /* three edges into a tower that reaches the guaranteed range */
    auto chain = parse_chart("range 12\n0 0 1 Z\n"
                             "1 1 a 2 eta:b\n2 2 b 2 eta:c\n3 3 c 2 eta:d\n4 4 d 2 eta:e\n5 5 e 2\n");
    auto e = eta_localize_chart(chain, 64).at({1, 1});
    CHECK(e.stability == Stability::Stable);
    CHECK(e.survivors == std::vector<std::string>{"a"});

    auto shortcut = eta_localize_chart(chain, 1).at({1, 1});
    CHECK(shortcut.stability == Stability::Unresolved);
}
