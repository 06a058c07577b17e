#include "motivic/algebra.h"
#include "motivic/errors.h"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace motivic {

Presentation::Presentation(std::vector<GeneratorSpec> generators) : gens_(std::move(generators))
{
    std::set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty())
            throw PresentationMismatch("generator with empty name");
        if (!seen.insert(g.name).second)
            throw PresentationMismatch("duplicate generator name '" + g.name + "'");
        if (g.invertible && g.square_zero)
            throw PresentationMismatch("generator '" + g.name + "' cannot be both invertible and square_zero");
    }
}

namespace {

std::int64_t parse_int(std::string_view tok, int line)
{
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + std::string(tok) + "'");
    return v;
}

}  // namespace

Presentation Presentation::parse(std::string_view text)
{
    std::vector<GeneratorSpec> gens;
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.resize(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        for (std::string t; ls >> t;)
            toks.push_back(t);
        if (toks.empty())
            continue;
        if (toks.size() < 4)
            throw ParseError(lineno, "expected `name s f w [invertible] [square_zero]`");
        GeneratorSpec g;
        g.name = toks[0];
        g.degree = {parse_int(toks[1], lineno), parse_int(toks[2], lineno), parse_int(toks[3], lineno)};
        for (std::size_t i = 4; i < toks.size(); ++i) {
            if (toks[i] == "invertible")
                g.invertible = true;
            else if (toks[i] == "square_zero")
                g.square_zero = true;
            else
                throw ParseError(lineno, "unknown generator flag '" + toks[i] + "'");
        }
        gens.push_back(std::move(g));
    }
    return Presentation(std::move(gens));
}

std::size_t Presentation::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name)
            return i;
    throw PresentationMismatch("unknown generator '" + std::string(name) + "'");
}

Monomial Presentation::monomial(std::initializer_list<std::pair<std::string_view, int>> powers) const
{
    Monomial m = one();
    for (const auto& [name, e] : powers)
        m[index_of(name)] += e;
    check(m);
    return m;
}

void Presentation::check(const Monomial& m) const
{
    if (m.size() != gens_.size())
        throw PresentationMismatch(fmt::format("monomial has {} exponents, presentation has {} generators", m.size(), gens_.size()));
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!gens_[i].invertible && m[i] < 0)
            throw PresentationMismatch(fmt::format("negative exponent on non-invertible generator '{}'", gens_[i].name));
        if (gens_[i].square_zero && m[i] > 1)
            throw PresentationMismatch(fmt::format("exponent {} on square-zero generator '{}'", m[i], gens_[i].name));
    }
}

bool Presentation::is_valid(const Monomial& m) const
{
    try {
        check(m);
        return true;
    }
    catch (const PresentationMismatch&) {
        return false;
    }
}

std::string Presentation::format(const Monomial& m) const
{
    std::string out;
    for (std::size_t i = 0; i < m.size() && i < gens_.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += gens_[i].name;
        if (m[i] != 1)
            out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

Tridegree degree(const Presentation& p, const Monomial& m)
{
    p.check(m);
    Tridegree d;
    for (std::size_t i = 0; i < m.size(); ++i)
        d += std::int64_t(m[i]) * p.generator(i).degree;
    return d;
}

std::optional<Monomial> multiply(const Presentation& p, const Monomial& a, const Monomial& b)
{
    p.check(a);
    p.check(b);
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = a[i] + b[i];
        if (p.generator(i).square_zero && r[i] >= 2)
            return std::nullopt;
    }
    return r;
}

void F2Sum::toggle(const Monomial& m)
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

F2Sum& F2Sum::operator+=(const F2Sum& o)
{
    std::vector<Monomial> merged;
    merged.reserve(terms_.size() + o.terms_.size());
    std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(), std::back_inserter(merged));
    terms_ = std::move(merged);
    return *this;
}

F2Sum multiply(const Presentation& p, const F2Sum& a, const Monomial& m)
{
    F2Sum r;
    for (const auto& t : a.terms())
        if (auto prod = multiply(p, t, m))
            r.toggle(*prod);
    return r;
}

std::string format(const Presentation& p, const F2Sum& x)
{
    if (x.empty())
        return "0";
    std::string out;
    for (const auto& t : x.terms()) {
        if (!out.empty())
            out += " + ";
        out += p.format(t);
    }
    return out;
}

bool Window::contains(const Monomial& m) const
{
    if (m.size() != bounds.size())
        return false;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] < bounds[i].first || m[i] > bounds[i].second)
            return false;
    return true;
}

bool Window::inverted() const
{
    return std::any_of(bounds.begin(), bounds.end(), [](const auto& b) { return b.first > b.second; });
}

Window Window::parse(const Presentation& p, std::string_view text)
{
    Window win;
    win.bounds.assign(p.size(), {0, 0});
    std::string spec(text);
    std::istringstream in(spec);
    for (std::string item; std::getline(in, item, ',');) {
        if (item.empty())
            continue;
        auto eq = item.find('=');
        auto colon = item.find(':', eq == std::string::npos ? 0 : eq);
        if (eq == std::string::npos || colon == std::string::npos)
            throw ParseError(1, "window item '" + item + "' is not name=lo:hi");
        std::size_t i = p.index_of(item.substr(0, eq));
        win.bounds[i] = {int(parse_int(std::string_view(item).substr(eq + 1, colon - eq - 1), 1)),
                         int(parse_int(std::string_view(item).substr(colon + 1), 1))};
    }
    return win;
}

std::string Window::format(const Presentation& p) const
{
    std::string out;
    for (std::size_t i = 0; i < bounds.size() && i < p.size(); ++i) {
        if (!out.empty())
            out += ',';
        out += fmt::format("{}={}:{}", p.generator(i).name, bounds[i].first, bounds[i].second);
    }
    return out;
}

void check_window(const Presentation& p, const Window& win)
{
    if (win.bounds.size() != p.size())
        throw PresentationMismatch(fmt::format("window has {} bounds, presentation has {} generators", win.bounds.size(), p.size()));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const auto& g = p.generator(i);
        auto [lo, hi] = win.bounds[i];
        if (lo > hi)
            continue;
        if (!g.invertible && lo < 0)
            throw PresentationMismatch("window allows negative exponent on non-invertible generator '" + g.name + "'");
        if (g.square_zero && hi > 1)
            throw PresentationMismatch("window allows exponent above 1 on square-zero generator '" + g.name + "'");
    }
}

std::size_t BasisEnumeration::monomial_count() const
{
    std::size_t n = 0;
    for (const auto& [d, ms] : by_degree)
        n += ms.size();
    return n;
}

BasisEnumeration enumerate_basis(const Presentation& p, const Window& win)
{
    check_window(p, win);
    BasisEnumeration out;
    if (win.inverted()) {
        out.inverted_window = true;
        return out;
    }
    const std::size_t n = p.size();
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i)
        m[i] = win.bounds[i].first;
    /* odometer with the last generator fastest: visits exponent vectors in lexicographic order */
    while (true) {
        Tridegree d = degree(p, m);
        if (!win.only_degree || *win.only_degree == d)
            out.by_degree[d].push_back(m);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (m[i] < win.bounds[i].second) {
                ++m[i];
                break;
            }
            m[i] = win.bounds[i].first;
            if (i == 0) {
                i = n + 1;
                break;
            }
        }
        if (n == 0 || i == n + 1)
            break;
    }
    return out;
}

}  // namespace motivic
