#include "motivic/io.h"
#include "motivic/regions.h"

#include <doctest.h>

using namespace motivic;

namespace {

const StemsTable& stems()
{
    static const StemsTable t = parse_stems(read_file(stems_path()));
    return t;
}

Known known(std::int64_t s, std::int64_t w)
{
    auto v = resolve_group(s, w, &stems());
    REQUIRE(std::holds_alternative<Known>(v));
    return std::get<Known>(v);
}

}  // namespace

TEST_CASE("region classification")
{
    CHECK(classify(-3, -5) == RegionLabel::Zero);
    CHECK(classify(3, 5) == RegionLabel::Zero);
    CHECK(classify(10, 4) == RegionLabel::TauLocal);
    CHECK(classify(20, 13) == RegionLabel::NotUnderstood);
    CHECK(classify(20, 14) == RegionLabel::EtaLocal);
    CHECK(classify(0, 0) == RegionLabel::TauLocal);
    CHECK(classify(0, -7) == RegionLabel::TauLocal);
    CHECK(classify(0, 1) == RegionLabel::Zero);
    CHECK(classify(1, 1) == RegionLabel::TauLocal);
    CHECK(classify(3, 3) == RegionLabel::EtaLocal);
    CHECK(classify(32, 18) == RegionLabel::NotUnderstood);
    CHECK(to_string(RegionLabel::NotUnderstood) == "NotUnderstood");
}

TEST_CASE("eta-local groups")
{
    auto g = eta_local_group(8, 8);
    CHECK(g.group == GroupDescriptor::cyclic(2));
    CHECK(g.generator == "eta^8");
    CHECK(eta_local_group(9, 8).group.is_trivial());
    CHECK(eta_local_group(16, 13).generator == "eta^9*sigma");
    CHECK(eta_local_group(20, 16).generator == "eta^11*mu9");
    CHECK(eta_local_group(25, 18).generator == "eta^9*sigma*mu9");
}

TEST_CASE("group resolution")
{
    CHECK(known(0, -4).group == GroupDescriptor::z2adic());
    CHECK(known(0, -4).generator == "tau^4");
    CHECK(known(0, 0).generator == "1");
    CHECK(known(12, 7).group == *stems().lookup(12));
    CHECK(known(15, 2).group == GroupDescriptor({32, 2}));
    CHECK(known(3, 5).group.is_trivial());
    CHECK(known(8, 8).generator == "eta^8");
    CHECK(std::holds_alternative<Unknown>(resolve_group(32, 18, &stems())));
    CHECK(std::get<ReducibleToClassical>(resolve_group(40, 3, &stems())).stem == 40);
    CHECK(std::holds_alternative<ReducibleToClassical>(resolve_group(5, 1, nullptr)));
    CHECK(group_string(resolve_group(40, 3, &stems())) == "classical:pi_40");
    CHECK(group_string(resolve_group(32, 18, &stems())) == "unknown");
    CHECK(generator_string(resolve_group(9, 8, &stems())) == "-");
    CHECK(finite_order(resolve_group(16, 13, &stems())) == 2);
    CHECK_FALSE(finite_order(resolve_group(0, 0, &stems())).has_value());
}

TEST_CASE("weak Adams bound")
{
    CHECK(adams_weak_bound(4, 4));
    CHECK_FALSE(adams_weak_bound(20, 14));
    CHECK(classify(20, 14) == RegionLabel::EtaLocal);
    CHECK(adams_weak_bound(0, 1));
    CHECK(classify(0, 1) == RegionLabel::Zero);
    for (std::int64_t s = 0; s <= 200; ++s)
        for (std::int64_t w = -10; w <= s; ++w)
            if (adams_weak_bound(s, w) && classify(s, w) != RegionLabel::Zero)
                CHECK(classify(s, w) == RegionLabel::EtaLocal);
}

TEST_CASE("boundary lines")
{
    CHECK(boundary::tau_upper.at(10) == Rational(6));
    CHECK(boundary::eta_lower.at(20) == Rational(13));
    CHECK(boundary::eta_upper.contains({5, 5}));
}
