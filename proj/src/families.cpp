#include "motivic/families.h"
#include "motivic/errors.h"
#include "motivic/regions.h"

#include <fmt/format.h>

#include <stdexcept>

namespace motivic {

std::string_view to_string(Annihilator a)
{
    switch (a) {
    case Annihilator::Tau:
        return "tau";
    case Annihilator::Eta:
        return "eta";
    case Annihilator::None:
        return "none";
    }
    return "?";
}

const std::vector<FamilySpec>& builtin_families()
{
    static const std::vector<FamilySpec> fams = {
        {"Pk_h1_4", {4, 4, 4}, {8, 4, 4}, Annihilator::Tau,
         "P^k h1^4 in the motivic Adams spectral sequence; detects classes annihilated by tau"},
        {"w1_family", {9, 3, 6}, {20, 4, 12}, Annihilator::Eta,
         "h2^3 g^k; non-trivial permanent cycles by work of Andrews and others; w1-periodic, annihilated by eta"},
        {"Pk_h1", {1, 1, 1}, {8, 4, 4}, Annihilator::None,
         "P^k h1; eta-local classes below the eta-local boundary"},
        {"eta_powers", {1, 1, 1}, {1, 1, 1}, Annihilator::None, "eta^k, non-nilpotent"},
        {"tau_powers", {0, 0, -1}, {0, 0, -1}, Annihilator::None, "tau^k, the Z_2[tau] tower in stem 0"},
    };
    return fams;
}

const FamilySpec& family(std::string_view name)
{
    for (const auto& f : builtin_families())
        if (f.name == name)
            return f;
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

const std::vector<Annotation>& builtin_annotations()
{
    static const std::vector<Annotation> notes = {
        {{32, 18}, "exotic non-nilpotent element; it and all its powers lie in the not understood region"},
    };
    return notes;
}

Line family_line(const FamilySpec& fam)
{
    if (fam.period.s == 0)
        throw Error("vertical family '" + fam.name + "' has no line w = m s + c");
    Rational slope(fam.period.w, fam.period.s);
    return {slope, Rational(fam.base.w) - slope * Rational(fam.base.s)};
}

Line family_line(std::string_view name)
{
    return family_line(family(name));
}

namespace {

std::int64_t pow2(int e)
{
    if (e < 0 || e > 61)
        throw std::out_of_range(fmt::format("2^{} does not fit", e));
    return std::int64_t(1) << e;
}

}  // namespace

Bidegree vn_bidegree(int n, std::int64_t k)
{
    if (n < 1)
        throw std::invalid_argument("v_0 has the degenerate direction (0,0)");
    if (k < 0)
        throw std::invalid_argument("period must be nonnegative");
    return k * Bidegree{pow2(n + 1) - 2, pow2(n) - 1};
}

Bidegree wn_bidegree(int n, std::int64_t k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("n and k must be nonnegative");
    return k * Bidegree{pow2(n + 2) - 3, pow2(n + 1) - 1};
}

Rational wn_slope(int n)
{
    auto d = wn_bidegree(n, 1);
    return Rational(d.w, d.s);
}

SpeculativeSlope speculative_w2_slope()
{
    return {wn_slope(2), "SPECULATIVE: above such a line elements might all be w0- or w1-periodic"};
}

MayGenerator may_generator(int i, int j)
{
    if (i < 1 || j < 0)
        throw std::invalid_argument("h_ij needs i >= 1, j >= 0");
    if (j == 0)
        return {i, j, pow2(i) - 2, pow2(i - 1) - 1};
    return {i, j, pow2(j) * (pow2(i) - 1) - 1, pow2(j - 1) * (pow2(i) - 1)};
}

std::vector<MayGenerator> may_e1_generators(std::int64_t max_stem)
{
    std::vector<MayGenerator> out;
    /* stems grow with i (at fixed j) and with j (at fixed i), and h_{i0} is the smallest for each i */
    for (int i = 1; i <= 60 && pow2(i) - 2 <= max_stem; ++i) {
        for (int j = 0; i + j <= 61; ++j) {
            auto g = may_generator(i, j);
            if (g.stem > max_stem) {
                if (j > 0)
                    break;
                continue;
            }
            out.push_back(g);
        }
    }
    return out;
}

namespace {

std::string line_text(const Line& l)
{
    std::string out = "w = ";
    const auto num = l.slope.numerator(), den = l.slope.denominator();
    out += num == 1 ? "s" : std::to_string(num) + "s";
    if (den != 1)
        out += "/" + std::to_string(den);
    if (l.intercept > 0)
        out += " + " + to_string(l.intercept);
    else if (l.intercept < 0)
        out += " - " + to_string(-l.intercept);
    return out;
}

bool on_line_for_all(const FamilySpec& fam, const Line& l, std::int64_t kmax)
{
    for (std::int64_t k = 0; k <= kmax; ++k)
        if (!l.contains(fam.point(k)))
            return false;
    return true;
}

}  // namespace

std::string sharpness_report(const StemsTable* stems)
{
    std::string out;
    for (const auto& fam : builtin_families()) {
        if (fam.period.s == 0) {
            out += fmt::format("{}: vertical family on s = 0, witnesses the lower edge of the vanishing region\n", fam.name);
            continue;
        }
        const Line l = family_line(fam);
        std::string role;
        if (fam.name == "Pk_h1_4")
            role = "tau-torsion family on " + line_text(l) + ", witnesses sharpness of the tau-local boundary slope";
        else if (fam.name == "w1_family")
            role = "eta-torsion family on " + line_text(l) + ", witnesses sharpness of the lower eta-local boundary slope";
        else if (fam.name == "eta_powers")
            role = "eta-local family on " + line_text(l) + ", witnesses the upper eta-local boundary";
        else
            role = "eta-local family on " + line_text(l) + ", lies outside the eta-local region";
        out += fmt::format("{}: {} (line holds for k <= 100: {})\n", fam.name, role, on_line_for_all(fam, l, 100) ? "yes" : "NO");
        for (std::int64_t k = 0; k < 3; ++k) {
            auto p = fam.point(k);
            out += fmt::format("  k={} (s,w)={} region={}", k, to_string(p), to_string(classify(p.s, p.w)));
            if (stems && fam.annihilated_by == Annihilator::Tau) {
                if (auto g = stems->lookup(p.s))
                    out += " classical_pi_s=" + g->to_string();
            }
            out += '\n';
        }
    }
    for (const auto& a : builtin_annotations())
        out += fmt::format("annotation {} region={}: {}\n", to_string(a.at), to_string(classify(a.at.s, a.at.w)), a.note);
    auto spec = speculative_w2_slope();
    out += fmt::format("w2 slope {} ({})\n", to_string(spec.slope), spec.note);
    return out;
}

}  // namespace motivic
