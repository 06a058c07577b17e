#include "motivic/chart.h"
#include "motivic/io.h"
#include "motivic/families.h"
#include "motivic/render.h"

#include <fmt/format.h>

#include <doctest.h>

using namespace motivic;

namespace {

std::size_t count(const std::string& hay, const std::string& needle)
{
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1))
        ++n;
    return n;
}

}  // namespace

TEST_CASE("fixed-point formatting")
{
    CHECK(fixed3(Rational(25, 2)) == "12.500");
    CHECK(fixed3(Rational(1, 3)) == "0.333");
    CHECK(fixed3(Rational(2, 3)) == "0.667");
    CHECK(fixed3(Rational(-1, 2000)) == "-0.001");
    CHECK(fixed3(Rational(-1, 3000)) == "0.000");
    CHECK(fixed3(Rational(7)) == "7.000");
}

TEST_CASE("region chart")
{
    ChartStyle style;
    auto svg = region_chart_svg(style, make_resolver(nullptr));
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.size() > 6);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
    for (const char* label : {"zero", "τ-local", "η-local", "not understood"})
        CHECK(svg.find(std::string(">") + label + "<") != std::string::npos);
    CHECK(svg.find("w = s<") != std::string::npos);
    CHECK(svg.find("w = 3s/5 + 1<") != std::string::npos);
    CHECK(svg.find("w = s/2 + 1<") != std::string::npos);
    CHECK(count(svg, "<circle") == 0);
    CHECK(region_chart_svg(style, make_resolver(nullptr)) == svg);
}

TEST_CASE("family overlays and group dots")
{
    auto style = ChartStyle::for_stems(24);
    style.family_overlays = {"Pk_h1_4"};
    style.group_dots = true;
    auto svg = region_chart_svg(style, make_resolver(nullptr));
    CHECK(count(svg, "<title>Pk_h1_4 k=") == 3);
    for (std::int64_t k = 0; k < 3; ++k) {
        auto pt = family("Pk_h1_4").point(k);
        CHECK(boundary::tau_upper.at(pt.s) + 1 == Rational(pt.w));
        auto p = to_pixels(style, pt.s, pt.w);
        auto r = Rational(style.scale, 5);
        CHECK(svg.find(fmt::format("x=\"{}\" y=\"{}\"", fixed3(p.x - r), fixed3(p.y - r))) != std::string::npos);
    }
    CHECK(svg.find("<title>(8,8) Z/2</title>") != std::string::npos);
    CHECK(svg.find("<title>(9,8)") == std::string::npos);
}

TEST_CASE("chart style validation")
{
    ChartStyle bad;
    bad.s_max = bad.s_min - 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(region_chart_svg(bad, make_resolver(nullptr)), std::invalid_argument);
    ChartStyle zero_scale;
    zero_scale.scale = 0;
    CHECK_THROWS_AS(zero_scale.validate(), std::invalid_argument);
}

TEST_CASE("boundary clipping")
{
    ChartStyle style;
    auto seg = clip_line(style, boundary::tau_upper);
    REQUIRE(seg.has_value());
    CHECK(seg->s0 == Rational(0));
    CHECK(seg->w0 == Rational(1));
    CHECK(seg->s1 == Rational(24));
    CHECK(seg->w1 == Rational(13));
    CHECK_FALSE(clip_line(style, Line{Rational(1), Rational(100)}).has_value());
}

TEST_CASE("pixel mapping is exact")
{
    ChartStyle style;
    auto a = to_pixels(style, Rational(0), Rational(0));
    auto b = to_pixels(style, Rational(1, 2), Rational(1));
    CHECK(b.x - a.x == Rational(style.scale, 2));
    CHECK(a.y - b.y == Rational(style.scale));
}

TEST_CASE("groups table")
{
    auto stems = parse_stems(read_file(stems_path()));
    auto resolver = make_resolver(&stems);
    auto tsv = groups_tsv({{0, 0}}, resolver);
    CHECK(tsv == "s\tw\tregion\tgroup\tgenerator\n0\t0\tTauLocal\tZ2\t1\n");
    CHECK(groups_tsv({{8, 8}}, resolver).find("8\t8\tEtaLocal\tZ/2\teta^8\n") != std::string::npos);
    CHECK(groups_tsv({{3, 5}}, resolver).find("3\t5\tZero\t0\t-\n") != std::string::npos);
    CHECK(groups_tsv({{2, 1}, {1, 0}, {2, 1}}, resolver) == groups_tsv({{1, 0}, {2, 1}}, resolver));
    CHECK(box_points(0, 1, 0, 2).size() == 6);
}

TEST_CASE("motivic chart")
{
    auto lift = lift_to_motivic(parse_chart(read_file(sample_chart_path())));
    auto svg = motivic_chart_svg(lift);
    CHECK(svg.find("<title>1 (Z): w ≤ 0</title>") != std::string::npos);
    CHECK(svg.find("<title>alpha1 (Z/2): w ≤ 1</title>") != std::string::npos);
    CHECK(count(svg, "<circle") == lift.classes.size());

    auto empty = motivic_chart_svg(MotivicLift{});
    CHECK(count(empty, "<circle") == 0);
    CHECK(empty.find("id=\"axes\"") != std::string::npos);
}
