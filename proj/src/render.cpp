#include "motivic/render.h"
#include "motivic/families.h"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace motivic {

GroupResolver make_resolver(const StemsTable* stems)
{
    return [stems](std::int64_t s, std::int64_t w) { return resolve_group(s, w, stems); };
}

void ChartStyle::validate() const
{
    if (s_min > s_max)
        throw std::invalid_argument(fmt::format("empty s-range [{}, {}]", s_min, s_max));
    if (w_min > w_max)
        throw std::invalid_argument(fmt::format("empty w-range [{}, {}]", w_min, w_max));
    if (scale <= 0)
        throw std::invalid_argument("scale must be positive");
    for (const auto& name : family_overlays)
        (void)family(name);
}

ChartStyle ChartStyle::for_stems(std::int64_t s_max)
{
    ChartStyle st;
    st.s_max = s_max;
    st.w_max = s_max + 2;
    return st;
}

namespace {

constexpr std::int64_t kMargin = 40;
constexpr std::int64_t kLegendWidth = 180;

struct RegionColor
{
    RegionLabel label;
    const char* fill;
    const char* legend;
};

/* fixed palette keyed by region */
constexpr std::array<RegionColor, 4> kPalette = {{
    {RegionLabel::Zero, "#ececec", "zero"},
    {RegionLabel::TauLocal, "#cfe2f3", "τ-local"},
    {RegionLabel::EtaLocal, "#f8d7c4", "η-local"},
    {RegionLabel::NotUnderstood, "#dcefd0", "not understood"},
}};

const RegionColor& color_of(RegionLabel r)
{
    for (const auto& c : kPalette)
        if (c.label == r)
            return c;
    return kPalette[0];
}

struct Boundary
{
    Line line;
    const char* color;
    const char* label;
};

const std::array<Boundary, 3>& boundaries()
{
    static const std::array<Boundary, 3> b = {{
        {boundary::eta_upper, "#b03a2e", "w = s"},
        {boundary::eta_lower, "#1e8449", "w = 3s/5 + 1"},
        {boundary::tau_upper, "#2e5e9e", "w = s/2 + 1"},
    }};
    return b;
}

std::string escape(std::string_view text)
{
    std::string out;
    for (char c : text) {
        switch (c) {
        case '&':
            out += "&amp;";
            break;
        case '<':
            out += "&lt;";
            break;
        case '>':
            out += "&gt;";
            break;
        case '"':
            out += "&quot;";
            break;
        default:
            out += c;
        }
    }
    return out;
}

std::int64_t tick_step(std::int64_t span)
{
    if (span <= 30)
        return 2;
    if (span <= 80)
        return 5;
    if (span <= 200)
        return 10;
    return 50;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

}  // namespace

std::string fixed3(const Rational& q)
{
    const bool neg = q < 0;
    std::int64_t num = std::abs(q.numerator()) * 1000;
    const std::int64_t den = q.denominator();
    std::int64_t r = (num + den / 2) / den;
    if (r == 0)
        return "0.000";
    return fmt::format("{}{}.{:03d}", neg ? "-" : "", r / 1000, r % 1000);
}

PixelPoint to_pixels(const ChartStyle& style, const Rational& s, const Rational& w)
{
    return {Rational(kMargin) + (s - Rational(style.s_min)) * Rational(style.scale),
            Rational(kMargin) + (Rational(style.w_max) - w) * Rational(style.scale)};
}

std::optional<Segment> clip_line(const ChartStyle& style, const Line& line)
{
    Rational lo = std::max<std::int64_t>(style.s_min, 0), hi = style.s_max;
    if (lo > hi)
        return std::nullopt;
    const Rational wl = style.w_min, wh = style.w_max;
    if (line.slope == Rational(0)) {
        if (line.intercept < wl || line.intercept > wh)
            return std::nullopt;
    }
    else {
        /* s-interval on which the line stays inside [w_min, w_max] */
        Rational a = (wl - line.intercept) / line.slope;
        Rational b = (wh - line.intercept) / line.slope;
        if (a > b)
            std::swap(a, b);
        lo = std::max(lo, a);
        hi = std::min(hi, b);
        if (lo > hi)
            return std::nullopt;
    }
    return Segment{lo, line.at(lo), hi, line.at(hi)};
}

std::string region_chart_svg(const ChartStyle& style, const GroupResolver& resolver)
{
    style.validate();
    const std::int64_t plot_w = (style.s_max - style.s_min) * style.scale;
    const std::int64_t plot_h = (style.w_max - style.w_min) * style.scale;
    const std::int64_t width = plot_w + 2 * kMargin + kLegendWidth;
    const std::int64_t height = plot_h + 2 * kMargin;
    auto px = [&](const Rational& s, const Rational& w) { return to_pixels(style, s, w); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
                       "font-family=\"sans-serif\" font-size=\"12\">\n",
                       width, height);
    out += "<title>Homotopy groups pi_{s,w} of the 2-completed motivic sphere over C, drawn to scale</title>\n";
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", width, height);

    if (style.region_shading) {
        out += "<g id=\"regions\" stroke=\"none\">\n";
        const Rational half(1, 2);
        for (auto s = style.s_min; s <= style.s_max; ++s) {
            for (auto w = style.w_min; w <= style.w_max; ++w) {
                auto p = px(Rational(s) - half, Rational(w) + half);
                out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n", fixed3(p.x),
                                   fixed3(p.y), style.scale, style.scale, color_of(classify(s, w)).fill);
            }
        }
        out += "</g>\n";
    }

    /* axes */
    out += "<g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
    if (style.w_min <= 0 && 0 <= style.w_max) {
        auto a = px(style.s_min, 0), b = px(style.s_max, 0);
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", fixed3(a.x), fixed3(a.y), fixed3(b.x), fixed3(b.y));
    }
    if (style.s_min <= 0 && 0 <= style.s_max) {
        auto a = px(0, style.w_min), b = px(0, style.w_max);
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", fixed3(a.x), fixed3(a.y), fixed3(b.x), fixed3(b.y));
    }
    out += "</g>\n";
    out += "<g id=\"ticks\" fill=\"#444444\" text-anchor=\"middle\">\n";
    const auto sstep = tick_step(style.s_max - style.s_min);
    for (auto s = floor_div(style.s_min, sstep) * sstep; s <= style.s_max; s += sstep) {
        if (s < style.s_min)
            continue;
        auto p = px(s, style.w_min);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", fixed3(p.x), fixed3(p.y + Rational(16)), s);
    }
    const auto wstep = tick_step(style.w_max - style.w_min);
    for (auto w = floor_div(style.w_min, wstep) * wstep; w <= style.w_max; w += wstep) {
        if (w < style.w_min)
            continue;
        auto p = px(style.s_min, w);
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", fixed3(p.x - Rational(8)),
                           fixed3(p.y + Rational(4)), w);
    }
    {
        auto ps = px(style.s_max, style.w_min), pw = px(style.s_min, style.w_max);
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-style=\"italic\">s</text>\n", fixed3(ps.x + Rational(14)),
                           fixed3(ps.y + Rational(16)));
        out += fmt::format("<text x=\"{}\" y=\"{}\" font-style=\"italic\">w</text>\n", fixed3(pw.x - Rational(8)),
                           fixed3(pw.y - Rational(14)));
    }
    out += "</g>\n";

    if (style.boundary_lines) {
        out += "<g id=\"boundaries\" stroke-width=\"2\" fill=\"none\">\n";
        /* the s = 0 edge of the zero region, w <= 0 */
        if (style.s_min <= 0 && 0 <= style.s_max && style.w_min <= 0) {
            auto a = px(0, style.w_min), b = px(0, std::min<std::int64_t>(0, style.w_max));
            out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>\n", fixed3(a.x), fixed3(a.y),
                               fixed3(b.x), fixed3(b.y), boundaries()[0].color);
        }
        for (const auto& b : boundaries()) {
            auto seg = clip_line(style, b.line);
            if (!seg)
                continue;
            auto p0 = px(seg->s0, seg->w0), p1 = px(seg->s1, seg->w1);
            out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"><title>{}</title></line>\n",
                               fixed3(p0.x), fixed3(p0.y), fixed3(p1.x), fixed3(p1.y), b.color, b.label);
            out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\" stroke=\"none\">{}</text>\n", fixed3(p1.x + Rational(4)),
                               fixed3(p1.y), b.color, b.label);
        }
        out += "</g>\n";
    }

    if (style.group_dots) {
        out += "<g id=\"groups\">\n";
        for (auto s = style.s_min; s <= style.s_max; ++s) {
            for (auto w = style.w_min; w <= style.w_max; ++w) {
                auto v = resolver(s, w);
                auto p = px(s, w);
                if (std::holds_alternative<Unknown>(v)) {
                    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"#555555\">?</text>\n",
                                       fixed3(p.x), fixed3(p.y + Rational(4)));
                    continue;
                }
                if (const auto* k = std::get_if<Known>(&v); k && k->group.is_trivial())
                    continue;
                out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"#222222\"><title>({},{}) {}</title></circle>\n",
                                   fixed3(p.x), fixed3(p.y), fixed3(Rational(style.scale, 8)), s, w,
                                   escape(group_string(v)));
            }
        }
        out += "</g>\n";
    }

    if (!style.family_overlays.empty()) {
        out += "<g id=\"families\">\n";
        for (const auto& name : style.family_overlays) {
            const auto& fam = family(name);
            for (std::int64_t k = 0;; ++k) {
                auto pt = fam.point(k);
                bool inside = style.s_min <= pt.s && pt.s <= style.s_max && style.w_min <= pt.w && pt.w <= style.w_max;
                if (!inside)
                    break;
                auto p = px(pt.s, pt.w);
                const Rational r(style.scale, 5);
                out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#7d3c98\"><title>{} k={}</title></rect>\n",
                                   fixed3(p.x - r), fixed3(p.y - r), fixed3(2 * r), fixed3(2 * r), escape(name), k);
            }
        }
        out += "</g>\n";
    }

    /* legend */
    out += "<g id=\"legend\">\n";
    const std::int64_t lx = kMargin + plot_w + 60;
    std::int64_t ly = kMargin;
    for (const auto& c : kPalette) {
        out += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"14\" height=\"14\" fill=\"{}\" stroke=\"#888888\"/>\n", lx, ly, c.fill);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", lx + 20, ly + 12, c.legend);
        ly += 22;
    }
    out += "</g>\n";
    out += "</svg>\n";
    return out;
}

std::vector<Bidegree> box_points(std::int64_t s_lo, std::int64_t s_hi, std::int64_t w_lo, std::int64_t w_hi)
{
    std::vector<Bidegree> pts;
    for (auto s = s_lo; s <= s_hi; ++s)
        for (auto w = w_lo; w <= w_hi; ++w)
            pts.push_back({s, w});
    return pts;
}

std::string groups_tsv(std::vector<Bidegree> points, const GroupResolver& resolver)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::string out = "s\tw\tregion\tgroup\tgenerator\n";
    for (const auto& p : points) {
        auto v = resolver(p.s, p.w);
        out += fmt::format("{}\t{}\t{}\t{}\t{}\n", p.s, p.w, to_string(classify(p.s, p.w)), group_string(v), generator_string(v));
    }
    return out;
}

std::string motivic_chart_svg(const MotivicLift& lift, std::int64_t scale)
{
    if (scale <= 0)
        throw std::invalid_argument("scale must be positive");
    std::int64_t s_max = 1, f_max = 1;
    std::map<StemFiltration, std::vector<const MotivicChartClass*>> cells;
    for (const auto& c : lift.classes) {
        s_max = std::max(s_max, c.s);
        f_max = std::max(f_max, c.f);
        cells[{c.s, c.f}].push_back(&c);
    }
    const std::int64_t width = (s_max + 1) * scale + 2 * kMargin;
    const std::int64_t height = (f_max + 1) * scale + 2 * kMargin;
    auto px = [&](const Rational& s, const Rational& f) {
        return PixelPoint{Rational(kMargin) + (s + Rational(1, 2)) * Rational(scale),
                          Rational(height - kMargin) - (f + Rational(1, 2)) * Rational(scale)};
    };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += fmt::format("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
                       "font-family=\"sans-serif\" font-size=\"12\">\n",
                       width, height);
    out += "<title>Motivic Adams-Novikov E2 in (s,f) coordinates; weights in dot titles</title>\n";
    out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"#ffffff\"/>\n", width, height);
    out += "<g id=\"axes\" stroke=\"#888888\" stroke-width=\"1\">\n";
    {
        auto o = px(Rational(-1, 2), Rational(-1, 2));
        auto sx = px(Rational(s_max) + Rational(1, 2), Rational(-1, 2));
        auto fy = px(Rational(-1, 2), Rational(f_max) + Rational(1, 2));
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", fixed3(o.x), fixed3(o.y), fixed3(sx.x), fixed3(sx.y));
        out += fmt::format("<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n", fixed3(o.x), fixed3(o.y), fixed3(fy.x), fixed3(fy.y));
    }
    out += "</g>\n<g id=\"ticks\" fill=\"#444444\" text-anchor=\"middle\">\n";
    for (std::int64_t s = 0; s <= s_max; ++s) {
        auto p = px(s, Rational(-1, 2));
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", fixed3(p.x), fixed3(p.y + Rational(16)), s);
    }
    for (std::int64_t f = 0; f <= f_max; ++f) {
        auto p = px(Rational(-1, 2), f);
        out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", fixed3(p.x - Rational(6)),
                           fixed3(p.y + Rational(4)), f);
    }
    out += "</g>\n<g id=\"classes\">\n";
    for (const auto& [sf, cls] : cells) {
        const auto n = std::int64_t(cls.size());
        for (std::int64_t i = 0; i < n; ++i) {
            const auto* c = cls[std::size_t(i)];
            /* spread several classes in one cell horizontally */
            Rational offset = n == 1 ? Rational(0) : Rational(2 * i - (n - 1), 4 * n);
            auto p = px(Rational(c->s) + offset, c->f);
            const char* fill = c->order == 0 ? "#ffffff" : "#222222";
            out += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{}\" stroke=\"#222222\">"
                               "<title>{} ({}): w ≤ {}</title></circle>\n",
                               fixed3(p.x), fixed3(p.y), fixed3(Rational(scale, 10)), fill, escape(c->name),
                               c->order == 0 ? std::string("Z") : "Z/" + std::to_string(c->order), c->w_top);
        }
    }
    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace motivic
