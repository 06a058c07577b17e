#include "motivic/chart.h"
#include "motivic/errors.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

namespace motivic {

bool is_power_of_two(std::int64_t n)
{
    return n >= 2 && (n & (n - 1)) == 0;
}

GroupDescriptor::GroupDescriptor(std::vector<std::int64_t> summands) : summands_(std::move(summands))
{
    for (auto n : summands_)
        if (n != 0 && !is_power_of_two(n))
            throw std::invalid_argument(fmt::format("group summand {} is neither 0 (Z_2) nor a power of 2", n));
    std::sort(summands_.begin(), summands_.end(), [](std::int64_t a, std::int64_t b) {
        if ((a == 0) != (b == 0))
            return a == 0;
        return a > b;
    });
}

std::optional<std::int64_t> GroupDescriptor::order() const
{
    std::int64_t n = 1;
    for (auto k : summands_) {
        if (k == 0)
            return std::nullopt;
        n *= k;
    }
    return n;
}

GroupDescriptor GroupDescriptor::operator+(const GroupDescriptor& o) const
{
    auto all = summands_;
    all.insert(all.end(), o.summands_.begin(), o.summands_.end());
    return GroupDescriptor(std::move(all));
}

std::string GroupDescriptor::to_string() const
{
    if (summands_.empty())
        return "0";
    std::string out;
    for (auto k : summands_) {
        if (!out.empty())
            out += '+';
        out += k == 0 ? std::string("Z2") : "Z/" + std::to_string(k);
    }
    return out;
}

std::string GroupDescriptor::to_token() const
{
    if (summands_.empty())
        return "0";
    std::string out;
    for (auto k : summands_) {
        if (!out.empty())
            out += ',';
        out += k == 0 ? std::string("Z") : std::to_string(k);
    }
    return out;
}

namespace {

std::optional<std::int64_t> to_int(std::string_view tok)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        return std::nullopt;
    return v;
}

std::int64_t order_from_token(std::string_view tok)
{
    if (tok == "Z")
        return 0;
    auto v = to_int(tok);
    if (!v || !is_power_of_two(*v))
        throw std::invalid_argument("order '" + std::string(tok) + "' is not Z or a power of 2");
    return *v;
}

std::string order_token(std::int64_t order)
{
    return order == 0 ? std::string("Z") : std::to_string(order);
}

std::vector<std::string> tokenize(const std::string& line)
{
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;)
        toks.push_back(t);
    return toks;
}

std::string strip_comment(std::string line)
{
    if (auto hash = line.find('#'); hash != std::string::npos)
        line.resize(hash);
    return line;
}

}  // namespace

GroupDescriptor GroupDescriptor::from_token(std::string_view token)
{
    if (token == "0")
        return trivial();
    std::vector<std::int64_t> parts;
    std::size_t start = 0;
    while (start <= token.size()) {
        auto comma = token.find(',', start);
        auto piece = token.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        parts.push_back(order_from_token(piece));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return GroupDescriptor(std::move(parts));
}

void ClassicalChart::add(ClassicalChartClass c)
{
    entries[{c.s, c.f}].push_back(std::move(c));
}

const ClassicalChartClass* ClassicalChart::find(std::string_view name) const
{
    for (const auto& [sf, cls] : entries)
        for (const auto& c : cls)
            if (c.name == name)
                return &c;
    return nullptr;
}

const std::vector<ClassicalChartClass>& ClassicalChart::at(std::int64_t s, std::int64_t f) const
{
    static const std::vector<ClassicalChartClass> empty;
    auto it = entries.find({s, f});
    return it == entries.end() ? empty : it->second;
}

GroupDescriptor ClassicalChart::group_at(std::int64_t s, std::int64_t f) const
{
    std::vector<std::int64_t> orders;
    for (const auto& c : at(s, f))
        orders.push_back(c.order);
    return GroupDescriptor(std::move(orders));
}

std::size_t ClassicalChart::class_count() const
{
    std::size_t n = 0;
    for (const auto& [sf, cls] : entries)
        n += cls.size();
    return n;
}

ClassicalChart parse_chart_unchecked(std::string_view text)
{
    ClassicalChart chart;
    std::optional<std::int64_t> range;
    std::int64_t s_seen = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto toks = tokenize(strip_comment(raw));
        if (toks.empty())
            continue;
        if (toks[0] == "range") {
            if (toks.size() != 2 || !to_int(toks[1]))
                throw ParseError(lineno, "expected `range N`");
            range = *to_int(toks[1]);
            continue;
        }
        if (toks.size() < 4 || toks.size() > 5)
            throw ParseError(lineno, "expected `s f name order [eta:target]`");
        auto s = to_int(toks[0]), f = to_int(toks[1]);
        if (!s || !f)
            throw ParseError(lineno, "stem and filtration must be integers");
        ClassicalChartClass c;
        c.s = *s;
        c.f = *f;
        c.name = toks[2];
        try {
            c.order = order_from_token(toks[3]);
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
        if (toks.size() == 5) {
            if (toks[4].rfind("eta:", 0) != 0 || toks[4].size() == 4)
                throw ParseError(lineno, "fifth field must be eta:<target>");
            c.eta_edge = toks[4].substr(4);
        }
        s_seen = std::max(s_seen, c.s);
        chart.add(std::move(c));
    }
    chart.s_max = range.value_or(s_seen);
    return chart;
}

ClassicalChart parse_chart(std::string_view text)
{
    auto chart = parse_chart_unchecked(text);
    if (auto v = validate_chart(chart); !v.empty())
        throw ValidationError(std::move(v));
    return chart;
}

std::string serialize_chart(const ClassicalChart& chart)
{
    std::string out = fmt::format("range {}\n", chart.s_max);
    for (const auto& [sf, cls] : chart.entries) {
        for (const auto& c : cls) {
            out += fmt::format("{} {} {} {}", c.s, c.f, c.name, order_token(c.order));
            if (c.eta_edge)
                out += " eta:" + *c.eta_edge;
            out += '\n';
        }
    }
    return out;
}

std::vector<std::string> validate_chart(const ClassicalChart& chart)
{
    std::vector<std::string> v;
    std::set<std::string> names;
    for (const auto& [sf, cls] : chart.entries) {
        for (const auto& c : cls) {
            const auto where = fmt::format("class {} at ({},{})", c.name, c.s, c.f);
            if (!names.insert(c.name).second)
                v.push_back(where + ": duplicate name");
            if (c.s < 0 || c.f < 0)
                v.push_back(where + ": negative stem or filtration");
            if (c.f == 0 && c.s != 0)
                v.push_back(where + ": filtration 0 is only occupied at stem 0");
            if (c.s > chart.s_max)
                v.push_back(where + fmt::format(": beyond declared range {}", chart.s_max));
            if (c.order != 0 && !is_power_of_two(c.order))
                v.push_back(where + ": order must be Z or a power of 2");
        }
    }

    const auto& unit = chart.at(0, 0);
    const auto zcount = std::count_if(unit.begin(), unit.end(), [](const auto& c) { return c.order == 0; });
    if (unit.size() != 1 || zcount != 1)
        v.push_back("(0,0) must hold exactly one class of order Z");

    for (const auto& [sf, cls] : chart.entries) {
        for (const auto& c : cls) {
            if (!c.eta_edge)
                continue;
            const auto where = fmt::format("class {} at ({},{})", c.name, c.s, c.f);
            if (const auto* t = chart.find(*c.eta_edge)) {
                if (t->s != c.s + 1 || t->f != c.f + 1)
                    v.push_back(where + fmt::format(": eta edge to {} at ({},{}), expected ({},{})", t->name, t->s, t->f,
                                                    c.s + 1, c.f + 1));
            }
            else if (c.s + 1 <= chart.s_max) {
                v.push_back(where + ": eta edge to missing class " + *c.eta_edge);
            }
        }
    }
    return v;
}

std::optional<GroupDescriptor> StemsTable::lookup(std::int64_t s) const
{
    auto it = stems.find(s);
    if (it == stems.end())
        return std::nullopt;
    return it->second;
}

StemsTable parse_stems(std::string_view text)
{
    StemsTable table;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (raw.rfind("provenance", 0) == 0) {
            auto rest = raw.substr(std::string("provenance").size());
            rest.erase(0, rest.find_first_not_of(" \t"));
            table.provenance = rest;
            continue;
        }
        auto toks = tokenize(strip_comment(raw));
        if (toks.empty())
            continue;
        if (toks.size() != 2)
            throw ParseError(lineno, "expected `s order[,order...]`");
        auto s = to_int(toks[0]);
        if (!s)
            throw ParseError(lineno, "stem must be an integer");
        try {
            if (!table.stems.emplace(*s, GroupDescriptor::from_token(toks[1])).second)
                throw ParseError(lineno, fmt::format("stem {} listed twice", *s));
        }
        catch (const std::invalid_argument& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return table;
}

std::string serialize_stems(const StemsTable& table)
{
    std::string out;
    if (!table.provenance.empty())
        out += "provenance " + table.provenance + "\n";
    for (const auto& [s, g] : table.stems)
        out += fmt::format("{} {}\n", s, g.to_token());
    return out;
}

std::vector<std::string> validate_stems(const StemsTable& table)
{
    std::vector<std::string> v;
    auto zero = table.lookup(0);
    if (!zero || *zero != GroupDescriptor::z2adic())
        v.push_back("stem 0 must be exactly one Z summand");
    for (const auto& [s, g] : table.stems) {
        if (s < 0)
            v.push_back(fmt::format("negative stem {}", s));
        else if (s > 0 && !g.order())
            v.push_back(fmt::format("stem {} has a Z summand; positive stems are finite", s));
    }
    return v;
}

std::vector<const MotivicChartClass*> MotivicLift::at(const Tridegree& d) const
{
    std::vector<const MotivicChartClass*> out;
    for (const auto& c : classes)
        if (c.s == d.s && c.f == d.f && c.present_at(d.w))
            out.push_back(&c);
    return out;
}

std::map<Tridegree, std::vector<std::string>> MotivicLift::materialize(std::int64_t w_min) const
{
    std::map<Tridegree, std::vector<std::string>> out;
    for (const auto& c : classes)
        for (auto w = c.w_top; w >= w_min; --w)
            out[{c.s, c.f, w}].push_back(c.name);
    return out;
}

MotivicLift lift_to_motivic(const ClassicalChart& chart)
{
    MotivicLift lift;
    for (const auto& [sf, cls] : chart.entries) {
        for (const auto& c : cls) {
            if ((c.s + c.f) % 2 != 0) {
                lift.rejected.push_back(c);
                continue;
            }
            lift.classes.push_back({c.name, c.s, c.f, c.order, (c.s + c.f) / 2});
        }
    }
    return lift;
}

GroupDescriptor ctau_homotopy(const ClassicalChart& chart, std::int64_t s, std::int64_t w)
{
    if (s < 0 || s > chart.s_max)
        throw RangeError(fmt::format("stem {} is outside the chart range 0..{}", s, chart.s_max));
    const std::int64_t f = 2 * w - s;
    if (f < 0)
        return GroupDescriptor::trivial();
    return chart.group_at(s, f);
}

bool in_localization_range(std::int64_t s, std::int64_t f)
{
    return s < 5 * f - 10;
}

std::map<StemFiltration, LocalizedEntry> eta_localize_chart(const ClassicalChart& chart, int max_steps)
{
    enum class Fate
    {
        Survives,
        Dies,
        Unknown,
    };
    auto follow = [&](const ClassicalChartClass& start) {
        const ClassicalChartClass* cur = &start;
        for (int step = 0;; ++step) {
            /* inside the range the localization map is an isomorphism, so the
             * class and all its alpha1-multiples survive */
            if (in_localization_range(cur->s, cur->f))
                return Fate::Survives;
            if (step >= max_steps)
                return Fate::Unknown;
            if (!cur->eta_edge)
                return cur->s + 1 <= chart.s_max ? Fate::Dies : Fate::Unknown;
            const auto* next = chart.find(*cur->eta_edge);
            if (!next)
                return Fate::Unknown;
            cur = next;
        }
    };

    std::map<StemFiltration, LocalizedEntry> out;
    for (const auto& [sf, cls] : chart.entries) {
        LocalizedEntry e;
        for (const auto& c : cls) {
            switch (follow(c)) {
            case Fate::Survives:
                e.survivors.push_back(c.name);
                break;
            case Fate::Dies:
                break;
            case Fate::Unknown:
                e.unresolved.push_back(c.name);
                break;
            }
        }
        e.stability = e.unresolved.empty() ? Stability::Stable : Stability::Unresolved;
        out.emplace(sf, std::move(e));
    }
    return out;
}

}  // namespace motivic
