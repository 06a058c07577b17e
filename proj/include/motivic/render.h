#pragma once

#include "motivic/chart.h"
#include "motivic/degree.h"
#include "motivic/regions.h"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace motivic {

using GroupResolver = std::function<GroupValue(std::int64_t s, std::int64_t w)>;

/* Resolver backed by resolve_group; `stems` may be null. The table must outlive the resolver. */
GroupResolver make_resolver(const StemsTable* stems);

/* (s,w)-plane chart drawn to scale, one integer unit = `scale` pixels. */
struct ChartStyle
{
    std::int64_t s_min = -2;
    std::int64_t s_max = 24;
    std::int64_t w_min = -4;
    std::int64_t w_max = 26;
    std::int64_t scale = 20;
    bool region_shading = true;
    bool boundary_lines = true;
    bool group_dots = false;
    std::vector<std::string> family_overlays;

    /* Throws std::invalid_argument for empty ranges or a nonpositive scale. */
    void validate() const;
    /* Default ranges sized for stems up to s_max. */
    static ChartStyle for_stems(std::int64_t s_max);
};

/* Pixel position of a point of the (s,w)-plane, exact until formatted. */
struct PixelPoint
{
    Rational x;
    Rational y;
};
PixelPoint to_pixels(const ChartStyle& style, const Rational& s, const Rational& w);

/* Visible piece of a region boundary, clipped to the chart and to s >= 0. */
struct Segment
{
    Rational s0, w0, s1, w1;
};
std::optional<Segment> clip_line(const ChartStyle& style, const Line& line);

/* Rational rounded half away from zero to 3 decimals, e.g. "12.500". */
std::string fixed3(const Rational& q);

std::string region_chart_svg(const ChartStyle& style, const GroupResolver& resolver);

/* Header plus one tab-separated row per point: s, w, region, group, generator; sorted by (s,w). */
std::string groups_tsv(std::vector<Bidegree> points, const GroupResolver& resolver);
std::vector<Bidegree> box_points(std::int64_t s_lo, std::int64_t s_hi, std::int64_t w_lo, std::int64_t w_hi);

/* Adams-style (s,f) chart of a motivic lift; the weight is given in each dot's <title>. */
std::string motivic_chart_svg(const MotivicLift& lift, std::int64_t scale = 40);

}  // namespace motivic
