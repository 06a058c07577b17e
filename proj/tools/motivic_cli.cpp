#include "motivic/chart.h"
#include "motivic/dga.h"
#include "motivic/errors.h"
#include "motivic/families.h"
#include "motivic/io.h"
#include "motivic/regions.h"
#include "motivic/render.h"
#include "motivic/verify.h"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace motivic;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::filesystem::path chart_arg(const std::string& value)
{
    return value == "sample" ? sample_chart_path() : std::filesystem::path(value);
}

std::filesystem::path stems_arg(const std::string& value)
{
    return value.empty() ? stems_path() : std::filesystem::path(value);
}

void emit(const std::string& text, const std::string& out)
{
    if (out.empty() || out == "-")
        std::cout << text;
    else
        write_file(out, text);
}

std::int64_t to_int(const std::string& text, const char* what)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError(fmt::format("{} must be an integer, got '{}'", what, text));
    return v;
}

/* "s0:s1,w0:w1" */
std::vector<Bidegree> parse_group_window(const std::string& text)
{
    auto comma = text.find(',');
    auto range = [&](const std::string& part) {
        auto colon = part.find(':');
        if (colon == std::string::npos)
            throw UsageError("window range '" + part + "' is not lo:hi");
        return std::pair{to_int(part.substr(0, colon), "window bound"), to_int(part.substr(colon + 1), "window bound")};
    };
    if (comma == std::string::npos)
        throw UsageError("--window expects s0:s1,w0:w1");
    auto [s0, s1] = range(text.substr(0, comma));
    auto [w0, w1] = range(text.substr(comma + 1));
    return box_points(s0, s1, w0, w1);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Motivic stable homotopy groups over C: regions, localized spectral sequence, charts"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable prose instead of key=value lines");

    std::string s_arg, w_arg, stems_file, chart_file = "sample", out_file, window_text;

    auto* classify_cmd = app.add_subcommand("classify", "Region of (s,w)");
    classify_cmd->add_option("S", s_arg, "stem")->required();
    classify_cmd->add_option("W", w_arg, "weight")->required();

    auto* group_cmd = app.add_subcommand("group", "Resolved group pi_{s,w}");
    group_cmd->add_option("S", s_arg, "stem")->required();
    group_cmd->add_option("W", w_arg, "weight")->required();
    group_cmd->add_option("--stems", stems_file, "Classical stems table (default: bundled)");

    auto* ctau_cmd = app.add_subcommand("ctau", "pi_{s,w}(C tau) from a classical chart");
    ctau_cmd->add_option("S", s_arg, "stem")->required();
    ctau_cmd->add_option("W", w_arg, "weight")->required();
    ctau_cmd->add_option("--chart", chart_file, "Chart file or 'sample'");

    int max_steps = 64;
    auto* localize_cmd = app.add_subcommand("localize", "alpha1-localization of a classical chart");
    localize_cmd->add_option("--chart", chart_file, "Chart file or 'sample'");
    localize_cmd->add_option("--max-steps", max_steps, "Longest alpha1 chain to follow")->check(CLI::NonNegativeNumber);

    std::int64_t kmax = 100;
    auto* families_cmd = app.add_subcommand("families", "Named element families");
    families_cmd->require_subcommand(1);
    auto* families_list = families_cmd->add_subcommand("list", "List families");
    auto* families_check = families_cmd->add_subcommand("check", "Check family lines and slopes");
    families_check->add_option("--kmax", kmax, "Largest period multiple")->check(CLI::NonNegativeNumber);
    auto* families_report = families_cmd->add_subcommand("report", "Boundary sharpness report");
    families_report->add_option("--stems", stems_file, "Classical stems table (default: bundled)");

    std::int64_t max_stem = 0;
    auto* may_cmd = app.add_subcommand("may-census", "May E1 generators h_ij by stem");
    may_cmd->add_option("--max-stem", max_stem, "Largest stem")->required()->check(CLI::NonNegativeNumber);

    auto* chart_cmd = app.add_subcommand("chart", "Emit SVG/TSV charts");
    chart_cmd->require_subcommand(1);
    std::int64_t smax = 24;
    bool dots = false;
    std::vector<std::string> overlays;
    auto* chart_regions = chart_cmd->add_subcommand("regions", "Region chart of the (s,w)-plane");
    chart_regions->add_option("--smax", smax, "Largest stem shown")->check(CLI::NonNegativeNumber);
    chart_regions->add_option("--out", out_file, "Output file (default stdout)");
    chart_regions->add_flag("--dots", dots, "Mark each lattice point by its resolved group");
    chart_regions->add_option("--family", overlays, "Overlay a named family (repeatable)");
    chart_regions->add_option("--stems", stems_file, "Classical stems table for --dots");
    auto* chart_groups = chart_cmd->add_subcommand("groups", "TSV of resolved groups");
    chart_groups->add_option("--window", window_text, "s0:s1,w0:w1")->required();
    chart_groups->add_option("--out", out_file, "Output file (default stdout)");
    chart_groups->add_option("--stems", stems_file, "Classical stems table (default: bundled)");
    auto* chart_motivic = chart_cmd->add_subcommand("motivic", "Adams-style chart of the motivic lift");
    chart_motivic->add_option("--chart", chart_file, "Chart file or 'sample'");
    chart_motivic->add_option("--out", out_file, "Output file (default stdout)");

    bool validate = false;
    std::string ingest_chart;
    auto* ingest_cmd = app.add_subcommand("ingest", "Read and validate chart and stems files");
    ingest_cmd->add_option("--chart", ingest_chart, "Chart file or 'sample'");
    ingest_cmd->add_option("--stems", stems_file, "Stems file");
    ingest_cmd->add_flag("--validate", validate, "Report invariant violations");

    std::vector<std::string> suites;
    std::int64_t partition_max = 1000;
    auto* verify_cmd = app.add_subcommand("verify", "Run acceptance checks");
    verify_cmd->add_option("suites", suites, "Suites to run (default: all)");
    verify_cmd->add_option("--window", window_text, "Exponent window for einfty/leibniz, e.g. tau=0:8,alpha1=-12:12,alpha3=0:6,alpha4=0:1");
    verify_cmd->add_option("--max", partition_max, "Half-width of the partition scan")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify_cmd) {
            auto s = to_int(s_arg, "S"), w = to_int(w_arg, "W");
            auto r = classify(s, w);
            if (pretty)
                std::cout << fmt::format("pi_{{{},{}}} lies in the {} region\n", s, w, to_string(r));
            else
                std::cout << "region=" << to_string(r) << '\n';
            return kOk;
        }
        if (*group_cmd) {
            auto s = to_int(s_arg, "S"), w = to_int(w_arg, "W");
            const auto stems = parse_stems(read_file(stems_arg(stems_file)));
            auto v = resolve_group(s, w, &stems);
            if (pretty)
                std::cout << fmt::format("pi_{{{},{}}} = {} ({} region, generator {})\n", s, w, group_string(v),
                                         to_string(classify(s, w)), generator_string(v));
            else
                std::cout << "region=" << to_string(classify(s, w)) << '\n'
                          << "group=" << group_string(v) << " generator=" << generator_string(v) << '\n';
            return kOk;
        }
        if (*ctau_cmd) {
            auto s = to_int(s_arg, "S"), w = to_int(w_arg, "W");
            const auto chart = parse_chart(read_file(chart_arg(chart_file)));
            std::cout << "group=" << ctau_homotopy(chart, s, w).to_string() << '\n';
            return kOk;
        }
        if (*localize_cmd) {
            const auto chart = parse_chart(read_file(chart_arg(chart_file)));
            for (const auto& [sf, e] : eta_localize_chart(chart, max_steps)) {
                auto join = [](const std::vector<std::string>& v) {
                    std::string out;
                    for (const auto& x : v)
                        out += (out.empty() ? "" : ",") + x;
                    return out.empty() ? std::string("-") : out;
                };
                std::cout << fmt::format("s={} f={} status={} survivors={} unresolved={}\n", sf.first, sf.second,
                                         e.stability == Stability::Stable ? "STABLE" : "UNRESOLVED", join(e.survivors),
                                         join(e.unresolved));
            }
            return kOk;
        }
        if (*families_cmd) {
            if (*families_list) {
                for (const auto& f : builtin_families())
                    std::cout << fmt::format("name={} base={} period={} annihilated_by={} note={}\n", f.name, to_string(f.base),
                                             to_string(f.period), to_string(f.annihilated_by), f.note);
                for (const auto& a : builtin_annotations())
                    std::cout << fmt::format("annotation={} note={}\n", to_string(a.at), a.note);
                return kOk;
            }
            if (*families_check) {
                bool ok = true;
                for (const auto& r : verify::families(kmax))
                    ok &= r.passed, std::cout << verify::format(r) << '\n';
                return ok ? kOk : kFailed;
            }
            if (*families_report) {
                std::optional<StemsTable> stems;
                if (std::filesystem::exists(stems_arg(stems_file)))
                    stems = parse_stems(read_file(stems_arg(stems_file)));
                std::cout << sharpness_report(stems ? &*stems : nullptr);
                return kOk;
            }
        }
        if (*may_cmd) {
            for (const auto& g : may_e1_generators(max_stem))
                std::cout << fmt::format("h_{},{} stem={} weight={}\n", g.i, g.j, g.stem, g.weight);
            return kOk;
        }
        if (*chart_cmd) {
            if (*chart_regions) {
                auto style = ChartStyle::for_stems(smax);
                style.group_dots = dots;
                style.family_overlays = overlays;
                std::optional<StemsTable> stems;
                if (dots && !stems_file.empty())
                    stems = parse_stems(read_file(stems_file));
                emit(region_chart_svg(style, make_resolver(stems ? &*stems : nullptr)), out_file);
                return kOk;
            }
            if (*chart_groups) {
                const auto stems = parse_stems(read_file(stems_arg(stems_file)));
                emit(groups_tsv(parse_group_window(window_text), make_resolver(&stems)), out_file);
                return kOk;
            }
            if (*chart_motivic) {
                const auto chart = parse_chart(read_file(chart_arg(chart_file)));
                emit(motivic_chart_svg(lift_to_motivic(chart)), out_file);
                return kOk;
            }
        }
        if (*ingest_cmd) {
            if (ingest_chart.empty() && stems_file.empty())
                throw UsageError("ingest needs --chart and/or --stems");
            std::vector<std::string> violations;
            if (!ingest_chart.empty()) {
                auto chart = parse_chart_unchecked(read_file(chart_arg(ingest_chart)));
                auto lift = lift_to_motivic(chart);
                std::cout << fmt::format("chart classes={} s_max={} lifted={} rejected={}\n", chart.class_count(), chart.s_max,
                                         lift.classes.size(), lift.rejected.size());
                for (const auto& c : lift.rejected)
                    violations.push_back(fmt::format("class {} at ({},{}): s+f odd, no integral weight", c.name, c.s, c.f));
                if (validate)
                    for (auto& v : validate_chart(chart))
                        violations.push_back(std::move(v));
            }
            if (!stems_file.empty()) {
                auto table = parse_stems(read_file(stems_file));
                std::cout << fmt::format("stems entries={} s_max={}\n", table.stems.size(), table.s_max());
                if (validate)
                    for (auto& v : validate_stems(table))
                        violations.push_back(std::move(v));
            }
            for (const auto& v : violations)
                std::cout << "violation=" << v << '\n';
            std::cout << "valid=" << (violations.empty() ? "true" : "false") << '\n';
            return violations.empty() ? kOk : kFailed;
        }
        if (*verify_cmd) {
            if (suites.empty() || (suites.size() == 1 && suites[0] == "all"))
                suites.assign(verify::suite_names().begin(), verify::suite_names().end());
            const auto data = data_dir();
            bool ok = true;
            std::size_t checks = 0;
            for (const auto& name : suites) {
                std::vector<verify::CheckResult> results;
                if (!window_text.empty() && (name == "einfty" || name == "leibniz")) {
                    const auto ss = localized_motivic_anss();
                    auto win = Window::parse(ss.presentation, window_text);
                    results = name == "einfty" ? verify::einfty(win) : verify::leibniz(win);
                }
                else if (name == "partition") {
                    results = verify::partition(partition_max);
                }
                else {
                    try {
                        results = verify::run_suite(name, data);
                    }
                    catch (const std::invalid_argument& e) {
                        throw UsageError(e.what());
                    }
                }
                for (const auto& r : results) {
                    ++checks;
                    ok &= r.passed;
                    std::cout << verify::format(r) << '\n';
                }
            }
            std::cout << fmt::format("verify={} checks={}\n", ok ? "PASS" : "FAIL", checks);
            return ok ? kOk : kFailed;
        }
    }
    catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    catch (const ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kFailed;
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailed;
    }
    return kUsage;
}
