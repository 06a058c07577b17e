#include "motivic/regions.h"

#include <fmt/format.h>

namespace motivic {

std::string_view to_string(RegionLabel r)
{
    switch (r) {
    case RegionLabel::Zero:
        return "Zero";
    case RegionLabel::TauLocal:
        return "TauLocal";
    case RegionLabel::EtaLocal:
        return "EtaLocal";
    case RegionLabel::NotUnderstood:
        return "NotUnderstood";
    }
    return "?";
}

RegionLabel classify(std::int64_t s, std::int64_t w)
{
    if (s < 0 || w > s)
        return RegionLabel::Zero;
    if (s == 0)
        return RegionLabel::TauLocal;  // w <= 0 here
    const Rational S(s), W(w);
    if (W <= boundary::tau_upper.at(S))
        return RegionLabel::TauLocal;
    if (W > boundary::eta_lower.at(S))
        return RegionLabel::EtaLocal;
    return RegionLabel::NotUnderstood;
}

namespace {

std::string power(std::string_view name, std::int64_t e)
{
    if (e == 1)
        return std::string(name);
    return fmt::format("{}^{}", name, e);
}

}  // namespace

Known eta_local_group(std::int64_t s, std::int64_t w)
{
    /* s - w = 3*eps + 4*b; the residues 0 and 3 mod 4 separate eps = 0 from eps = 1 */
    const std::int64_t diff = s - w;
    for (int eps = 0; eps <= 1; ++eps) {
        const std::int64_t r = diff - 3 * eps;
        if (r < 0 || r % 4 != 0)
            continue;
        const std::int64_t b = r / 4;
        const std::int64_t a = w - 4 * eps - 5 * b;
        std::string gen;
        auto append = [&](std::string part) {
            if (!gen.empty())
                gen += '*';
            gen += part;
        };
        if (a != 0)
            append(power("eta", a));
        if (eps)
            append("sigma");
        if (b != 0)
            append(power("mu9", b));
        return {GroupDescriptor::cyclic(2), gen.empty() ? "1" : gen};
    }
    return {GroupDescriptor::trivial(), ""};
}

GroupValue resolve_group(std::int64_t s, std::int64_t w, const StemsTable* stems)
{
    switch (classify(s, w)) {
    case RegionLabel::Zero:
        return Known{GroupDescriptor::trivial(), ""};
    case RegionLabel::TauLocal:
        if (s == 0)
            return Known{GroupDescriptor::z2adic(), w == 0 ? "1" : power("tau", -w)};
        if (stems) {
            if (auto g = stems->lookup(s))
                return Known{*g, g->is_trivial() ? std::string() : fmt::format("pi_{}", s)};
        }
        return ReducibleToClassical{s};
    case RegionLabel::EtaLocal:
        return eta_local_group(s, w);
    case RegionLabel::NotUnderstood:
        return Unknown{};
    }
    return Unknown{};
}

bool adams_weak_bound(std::int64_t s, std::int64_t w)
{
    return Rational(w) >= boundary::adams_eta.at(Rational(s));
}

std::string group_string(const GroupValue& v)
{
    if (const auto* k = std::get_if<Known>(&v))
        return k->group.to_string();
    if (const auto* r = std::get_if<ReducibleToClassical>(&v))
        return fmt::format("classical:pi_{}", r->stem);
    return "unknown";
}

std::string generator_string(const GroupValue& v)
{
    if (const auto* k = std::get_if<Known>(&v); k && !k->generator.empty())
        return k->generator;
    return "-";
}

std::optional<std::int64_t> finite_order(const GroupValue& v)
{
    if (const auto* k = std::get_if<Known>(&v))
        return k->group.order();
    return std::nullopt;
}

}  // namespace motivic
