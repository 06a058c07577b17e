#include "motivic/verify.h"
#include "motivic/chart.h"
#include "motivic/dga.h"
#include "motivic/errors.h"
#include "motivic/families.h"
#include "motivic/io.h"
#include "motivic/regions.h"

#include <fmt/format.h>

#include <chrono>
#include <random>
#include <set>
#include <stdexcept>

namespace motivic::verify {

namespace {

CheckResult make(std::string id, std::string description, bool passed, std::string detail)
{
    return {std::move(id), std::move(description), passed, std::move(detail)};
}

}  // namespace

Window acceptance_window()
{
    /* tau, alpha1, alpha3, alpha4 */
    return Window{{{0, 8}, {-12, 12}, {0, 6}, {0, 1}}, std::nullopt};
}

std::vector<CheckResult> einfty(const Window& win)
{
    const auto ss = localized_motivic_anss();
    const auto& p = ss.presentation;
    const auto t0 = std::chrono::steady_clock::now();
    const PageState e = run_to_einfty(p, ss.differentials, win);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    /* d_3 moves tau by +1, alpha1 by +4 and alpha3 by -1, so the certified box
     * loses one step at each artificial edge: tau's top, both alpha1 edges, alpha3's top. */
    const auto& b = win.bounds;
    const Window core{{{b[0].first, b[0].second - 1}, {b[1].first + 4, b[1].second - 4}, {b[2].first, b[2].second - 1}, b[3]},
                      std::nullopt};

    std::set<Monomial> expected;
    for (int t = core.bounds[0].first; t <= core.bounds[0].second; ++t)
        for (int a = core.bounds[1].first; a <= core.bounds[1].second; ++a)
            for (int c = core.bounds[2].first; c <= core.bounds[2].second; ++c)
                for (int x = core.bounds[3].first; x <= core.bounds[3].second; ++x)
                    if (t == 0 && c % 2 == 0)
                        expected.insert(Monomial{t, a, c, x});

    std::set<Monomial> computed;
    std::size_t certified = 0, non_monomial = 0;
    for (const auto& d : e.degrees()) {
        if (!e.valid(d))
            continue;
        ++certified;
        for (const auto& cls : e.classes(d)) {
            if (cls.size() != 1)
                ++non_monomial;
            for (const auto& m : cls.terms())
                computed.insert(m);
        }
    }
    std::size_t missing = 0, extra = 0;
    for (const auto& m : expected)
        missing += computed.count(m) == 0;
    for (const auto& m : computed)
        extra += expected.count(m) == 0;

    std::size_t euler_bad = 0;
    for (const auto& [d, st] : e.last_turn())
        if (e.valid(d) && st.new_dim + st.rank_in + st.rank_out != st.old_dim)
            ++euler_bad;

    std::vector<CheckResult> out;
    out.push_back(make("einfty.core", "certified core box matches the d3 reach", e.core().bounds == core.bounds,
                       fmt::format("core {}", e.core().format(p))));
    const bool ok = missing == 0 && extra == 0 && non_monomial == 0 && secs < 5.0;
    out.push_back(make("einfty.basis", "E-infinity core basis is exactly alpha1^a alpha3^(2c) alpha4^e", ok,
                       fmt::format("{} certified tridegrees, {} expected classes, {} missing, {} extra, {} non-monomial, {:.3f}s",
                                   certified, expected.size(), missing, extra, non_monomial, secs)));
    out.push_back(make("einfty.euler", "dim E4 = dim E3 - rank(in) - rank(out) on the core", euler_bad == 0,
                       fmt::format("{} violations", euler_bad)));
    return out;
}

std::vector<CheckResult> leibniz(const Window& win, std::size_t samples, std::uint64_t seed)
{
    const auto ss = localized_motivic_anss();
    const auto& p = ss.presentation;
    const auto& d = ss.differentials.front();
    std::vector<Monomial> mons;
    for (auto& [deg, ms] : enumerate_basis(p, win).by_degree)
        mons.insert(mons.end(), ms.begin(), ms.end());

    std::size_t dd_bad = 0;
    for (const auto& m : mons)
        if (!leibniz_extend(p, d, leibniz_extend(p, d, m)).empty())
            ++dd_bad;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    std::size_t checked = 0, bad = 0, draws = 0;
    while (checked < samples && draws < samples * 100) {
        ++draws;
        const auto& m1 = mons[pick(rng)];
        const auto& m2 = mons[pick(rng)];
        auto prod = multiply(p, m1, m2);
        if (!prod)
            continue;
        ++checked;
        F2Sum lhs = leibniz_extend(p, d, *prod);
        F2Sum rhs = multiply(p, leibniz_extend(p, d, m1), m2) + multiply(p, leibniz_extend(p, d, m2), m1);
        if (lhs != rhs)
            ++bad;
    }
    return {
        make("leibniz.dd", "d(d(m)) = 0 for every window monomial", dd_bad == 0,
             fmt::format("{} monomials, {} failures", mons.size(), dd_bad)),
        make("leibniz.product", "d(xy) = d(x)y + x d(y) on sampled pairs", bad == 0 && checked == samples,
             fmt::format("{} pairs with nonzero product, {} failures", checked, bad)),
    };
}

std::vector<CheckResult> partition(std::int64_t max_abs)
{
    /* the four regions written as integer inequalities, independent of the classifier */
    std::size_t bad = 0, points = 0;
    for (std::int64_t s = -max_abs; s <= max_abs; ++s) {
        for (std::int64_t w = -max_abs; w <= max_abs; ++w) {
            ++points;
            const bool zero = s < 0 || w > s;
            const bool tau = (s == 0 && w <= 0) || (s > 0 && w <= s && 2 * w <= s + 2);
            const bool eta = s > 0 && w <= s && 5 * w > 3 * s + 5;
            const bool unknown = s > 0 && w <= s && 2 * w > s + 2 && 5 * w <= 3 * s + 5;
            const int hits = zero + tau + eta + unknown;
            RegionLabel want = zero ? RegionLabel::Zero
                               : tau ? RegionLabel::TauLocal
                               : eta ? RegionLabel::EtaLocal
                                     : RegionLabel::NotUnderstood;
            if (hits != 1 || classify(s, w) != want)
                ++bad;
        }
    }
    const bool triple = classify(20, 13) == RegionLabel::NotUnderstood && classify(20, 14) == RegionLabel::EtaLocal &&
                        classify(10, 4) == RegionLabel::TauLocal;
    return {
        make("partition.exhaustive", fmt::format("exactly one region for |s|,|w| <= {}", max_abs), bad == 0,
             fmt::format("{} points, {} failures", points, bad)),
        make("partition.boundary", "(20,13) NotUnderstood, (20,14) EtaLocal, (10,4) TauLocal", triple,
             fmt::format("{} {} {}", to_string(classify(20, 13)), to_string(classify(20, 14)), to_string(classify(10, 4)))),
    };
}

std::vector<CheckResult> eta_local(std::int64_t s_max, const StemsTable* stems)
{
    /* Oracle: enumerate eta^a sigma^e mu9^b and tally bidegrees by (s, s - w).
     * In the eta-local region s - w < 2s/5, so b <= s_max / 10 covers it. */
    const std::int64_t dmax = 2 * s_max / 5 + 4;
    std::vector<std::uint8_t> count(std::size_t((s_max + 1) * (dmax + 1)), 0);
    for (std::int64_t b = 0; 4 * b <= dmax; ++b) {
        for (std::int64_t e = 0; e <= 1; ++e) {
            for (std::int64_t a = -7 * e - 9 * b; a + 7 * e + 9 * b <= s_max; ++a) {
                const std::int64_t s = a + 7 * e + 9 * b, w = a + 4 * e + 5 * b;
                const std::int64_t diff = s - w;
                if (diff >= 0 && diff <= dmax && count[std::size_t(s * (dmax + 1) + diff)] < 255)
                    ++count[std::size_t(s * (dmax + 1) + diff)];
            }
        }
    }

    std::size_t points = 0, bad_order = 0, bad_oracle = 0, bad_step = 0;
    for (std::int64_t s = 1; s <= s_max; ++s) {
        for (std::int64_t w = s; classify(s, w) == RegionLabel::EtaLocal; --w) {
            ++points;
            auto v = resolve_group(s, w, stems);
            auto order = finite_order(v);
            if (!order || *order > 2)
                ++bad_order;
            const int n = count[std::size_t(s * (dmax + 1) + (s - w))];
            if (n > 1 || !order || *order != (n == 1 ? 2 : 1))
                ++bad_oracle;
            if (s + 1 <= s_max && classify(s + 1, w + 1) == RegionLabel::EtaLocal &&
                finite_order(resolve_group(s + 1, w + 1, stems)) != order)
                ++bad_step;
        }
    }

    std::size_t tau_points = 0, tau_bad = 0;
    const std::int64_t box = std::min<std::int64_t>(s_max, 1000);
    for (std::int64_t s = 0; s <= box; ++s) {
        for (std::int64_t w = -box; w <= box; ++w) {
            if (classify(s, w) != RegionLabel::TauLocal || classify(s, w - 1) != RegionLabel::TauLocal)
                continue;
            ++tau_points;
            auto a = resolve_group(s, w, stems), b = resolve_group(s, w - 1, stems);
            /* in stem 0 the named generator moves from tau^k to tau^(k+1); compare groups */
            if (group_string(a) != group_string(b))
                ++tau_bad;
        }
    }

    return {
        make("etalocal.order", fmt::format("eta-local groups have order <= 2 for s <= {}", s_max), bad_order == 0,
             fmt::format("{} points, {} failures", points, bad_order)),
        make("etalocal.oracle", "eta-local groups match the monomial-count oracle", bad_oracle == 0,
             fmt::format("{} points, {} mismatches", points, bad_oracle)),
        make("etalocal.eta_step", "eta multiplication preserves group order inside the region", bad_step == 0,
             fmt::format("{} failures", bad_step)),
        make("etalocal.tau_step", fmt::format("tau multiplication preserves the group for s, |w| <= {}", box), tau_bad == 0,
             fmt::format("{} pairs, {} failures", tau_points, tau_bad)),
    };
}

std::vector<CheckResult> vanishing(std::int64_t max_stem, std::size_t samples, std::uint64_t seed)
{
    auto gens = may_e1_generators(max_stem);
    std::size_t bad_gen = 0;
    for (const auto& g : gens)
        if (g.weight > g.stem)
            ++bad_gen;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-1000000, 1000000);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < samples; ++i) {
        std::int64_t s = coord(rng), w = coord(rng);
        if (i % 2 == 0) {
            s = -1 - std::abs(s);  // left of the w-axis
        }
        else {
            s = std::abs(s);
            w = s + 1 + std::abs(w);  // above w = s
        }
        auto v = resolve_group(s, w, nullptr);
        const auto* k = std::get_if<Known>(&v);
        if (classify(s, w) != RegionLabel::Zero || !k || !k->group.is_trivial())
            ++bad;
    }
    return {
        make("vanishing.may", fmt::format("May E1 generators with stem <= {} have weight <= stem", max_stem),
             bad_gen == 0 && !gens.empty(), fmt::format("{} generators, {} failures", gens.size(), bad_gen)),
        make("vanishing.sampled", "zero region resolves to the trivial group", bad == 0,
             fmt::format("{} samples, {} failures", samples, bad)),
    };
}

std::vector<CheckResult> ctau(const std::filesystem::path& chart_file)
{
    const auto chart = parse_chart(read_file(chart_file));
    std::size_t points = 0, bad = 0;
    for (std::int64_t s = 1; s <= chart.s_max; ++s) {
        for (std::int64_t w = -1000; 2 * w <= s; ++w) {
            ++points;
            if (!ctau_homotopy(chart, s, w).is_trivial())
                ++bad;
        }
    }
    const bool unit = ctau_homotopy(chart, 0, 0) == GroupDescriptor::z2adic();
    return {
        make("ctau.vanishing", "pi_{s,w}(C tau) = 0 for 0 < s <= s_max, w <= s/2", bad == 0,
             fmt::format("{} points, {} failures", points, bad)),
        make("ctau.unit", "pi_{0,0}(C tau) = Z2", unit, ctau_homotopy(chart, 0, 0).to_string()),
    };
}

std::vector<CheckResult> localization(const std::filesystem::path& chart_file)
{
    const auto chart = parse_chart(read_file(chart_file));
    const auto loc = eta_localize_chart(chart, 64);
    std::size_t guaranteed = 0, bad = 0;
    for (const auto& [sf, cls] : chart.entries) {
        if (!in_localization_range(sf.first, sf.second))
            continue;
        guaranteed += cls.size();
        const auto& e = loc.at(sf);
        std::vector<std::string> names;
        for (const auto& c : cls)
            names.push_back(c.name);
        if (e.stability != Stability::Stable || e.survivors != names)
            ++bad;
    }
    return {make("localize.range", "classes with s < 5f - 10 are STABLE and equal to their entry",
                 bad == 0 && guaranteed > 0, fmt::format("{} classes in range, {} failures", guaranteed, bad))};
}

std::vector<CheckResult> families(std::int64_t kmax, int nmax)
{
    const Line tau_line{Rational(1, 2), 2}, w1_line{Rational(3, 5), Rational(3, 5)};
    const auto& pk = family("Pk_h1_4");
    const auto& w1 = family("w1_family");
    std::size_t bad_pk = 0, bad_w1 = 0;
    for (std::int64_t k = 0; k <= kmax; ++k) {
        auto p = pk.point(k), q = w1.point(k);
        /* 2w = s + 4 and 5w = 3s + 3, plus the region facts each family witnesses */
        if (2 * p.w != p.s + 4 || !tau_line.contains(p) || Rational(p.w) - boundary::tau_upper.at(p.s) != Rational(1))
            ++bad_pk;
        if (5 * q.w != 3 * q.s + 3 || !w1_line.contains(q) || classify(q.s, q.w) == RegionLabel::EtaLocal)
            ++bad_w1;
    }
    const bool lines = family_line(pk) == tau_line && family_line(w1) == w1_line;

    bool decreasing = true;
    for (int n = 0; n <= nmax; ++n) {
        if (wn_slope(n) <= Rational(1, 2))
            decreasing = false;
        if (n > 0 && wn_slope(n) >= wn_slope(n - 1))
            decreasing = false;
    }
    return {
        make("families.Pk_h1_4", fmt::format("Pk_h1_4 on w = s/2 + 2 for k <= {}", kmax), bad_pk == 0 && lines,
             fmt::format("{} failures", bad_pk)),
        make("families.w1", fmt::format("w1_family on w = 3s/5 + 3/5 for k <= {}", kmax), bad_w1 == 0 && lines,
             fmt::format("{} failures", bad_w1)),
        make("families.wn", fmt::format("w_n slopes strictly decrease and exceed 1/2 for n <= {}", nmax), decreasing,
             fmt::format("w_{} slope {}", nmax, to_string(wn_slope(nmax)))),
        make("families.w2", "w_2 slope is 7/13", wn_slope(2) == Rational(7, 13), to_string(wn_slope(2))),
    };
}

std::vector<CheckResult> roundtrip(const std::filesystem::path& data)
{
    std::vector<CheckResult> out;
    {
        const auto text = read_file(data / "sample_chart.txt");
        const auto chart = parse_chart(text);
        const auto canon = serialize_chart(chart);
        const auto again = parse_chart(canon);
        const bool ok = serialize_chart(again) == canon && again.entries == chart.entries && again.s_max == chart.s_max;
        out.push_back(make("roundtrip.chart", "chart parse/serialize is the identity on canonical text", ok,
                           fmt::format("{} classes", chart.class_count())));
    }
    {
        const auto text = read_file(data / "stems.txt");
        const auto table = parse_stems(text);
        const auto canon = serialize_stems(table);
        const auto again = parse_stems(canon);
        const bool ok = serialize_stems(again) == canon && again.stems == table.stems && again.provenance == table.provenance;
        out.push_back(make("roundtrip.stems", "stems parse/serialize is the identity on canonical text", ok,
                           fmt::format("{} stems", table.stems.size())));
    }
    {
        auto v = validate_chart(parse_chart_unchecked(read_file(data / "sample_chart.txt")));
        auto w = validate_stems(parse_stems(read_file(data / "stems.txt")));
        out.push_back(make("roundtrip.accept", "validator accepts the bundled chart and stems", v.empty() && w.empty(),
                           fmt::format("{} + {} violations", v.size(), w.size())));
    }
    for (const char* name : {"missing_unit", "bad_eta_edge", "f0_class"}) {
        auto path = data / "fixtures" / (std::string(name) + ".txt");
        auto v = validate_chart(parse_chart_unchecked(read_file(path)));
        out.push_back(make(std::string("roundtrip.reject.") + name, std::string("validator rejects fixture ") + name, !v.empty(),
                           v.empty() ? std::string("accepted") : v.front()));
    }
    return out;
}

std::string golden_regions_svg()
{
    auto style = ChartStyle::for_stems(24);
    style.group_dots = true;
    style.family_overlays = {"Pk_h1_4", "w1_family"};
    return region_chart_svg(style, make_resolver(nullptr));
}

std::string golden_groups_tsv(const StemsTable& stems)
{
    return groups_tsv(box_points(-1, 24, -4, 25), make_resolver(&stems));
}

std::vector<CheckResult> golden(const std::filesystem::path& data)
{
    const auto stems = parse_stems(read_file(data / "stems.txt"));
    const auto svg1 = golden_regions_svg(), svg2 = golden_regions_svg();
    const auto tsv1 = golden_groups_tsv(stems), tsv2 = golden_groups_tsv(stems);
    const auto svg_file = read_file(data / "golden" / "regions.svg");
    const auto tsv_file = read_file(data / "golden" / "groups.tsv");
    return {
        make("golden.regions", "region chart is byte-identical across runs and to the golden file",
             svg1 == svg2 && svg1 == svg_file, fmt::format("{} bytes", svg1.size())),
        make("golden.groups", "groups table is byte-identical across runs and to the golden file",
             tsv1 == tsv2 && tsv1 == tsv_file, fmt::format("{} bytes", tsv1.size())),
    };
}

const std::vector<std::string_view>& suite_names()
{
    static const std::vector<std::string_view> names = {"einfty",   "leibniz",  "partition", "etalocal", "vanishing",
                                                        "ctau",     "localize", "families",  "roundtrip", "golden"};
    return names;
}

std::vector<CheckResult> run_suite(std::string_view name, const std::filesystem::path& data)
{
    if (name == "einfty")
        return einfty(acceptance_window());
    if (name == "leibniz")
        return leibniz(acceptance_window());
    if (name == "partition")
        return partition();
    if (name == "etalocal") {
        const auto stems = parse_stems(read_file(data / "stems.txt"));
        return eta_local(10000, &stems);
    }
    if (name == "vanishing")
        return vanishing();
    if (name == "ctau")
        return ctau(data / "sample_chart.txt");
    if (name == "localize")
        return localization(data / "sample_chart.txt");
    if (name == "families")
        return families();
    if (name == "roundtrip")
        return roundtrip(data);
    if (name == "golden")
        return golden(data);
    throw std::invalid_argument("unknown verify suite '" + std::string(name) + "'");
}

std::string format(const CheckResult& r)
{
    return fmt::format("[{}] {} {}: {}", r.passed ? "PASS" : "FAIL", r.id, r.description, r.detail);
}

}  // namespace motivic::verify
