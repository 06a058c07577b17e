#include "motivic/errors.h"
#include "motivic/families.h"
#include "motivic/regions.h"

#include <doctest.h>

using namespace motivic;

TEST_CASE("family points")
{
    CHECK(family("Pk_h1_4").at(2) == Tridegree{20, 12, 12});
    CHECK(family("w1_family").at(0) == Tridegree{9, 3, 6});
    CHECK(family("tau_powers").point(3) == Bidegree{0, -4});
    CHECK_THROWS_AS(family("nope"), std::invalid_argument);
}

TEST_CASE("family lines")
{
    CHECK(family_line("Pk_h1_4") == Line{Rational(1, 2), Rational(2)});
    CHECK(family_line("w1_family") == Line{Rational(3, 5), Rational(3, 5)});
    CHECK(family_line("eta_powers") == Line{Rational(1), Rational(0)});
    CHECK_THROWS_AS(family_line("tau_powers"), Error);
    for (const auto& f : builtin_families()) {
        if (f.period.s == 0)
            continue;
        auto l = family_line(f);
        for (std::int64_t k = 0; k <= 100; ++k)
            CHECK(l.contains(f.point(k)));
    }
}

TEST_CASE("torsion families sit just outside the regions they bound")
{
    for (std::int64_t k = 0; k <= 100; ++k) {
        auto p = family("Pk_h1_4").point(k);
        CHECK(Rational(p.w) > boundary::tau_upper.at(p.s));
        auto q = family("w1_family").point(k);
        CHECK(classify(q.s, q.w) != RegionLabel::EtaLocal);
        CHECK(Rational(q.w) > boundary::tau_upper.at(q.s));
    }
}

TEST_CASE("periodicity bidegrees")
{
    CHECK(wn_bidegree(0, 1) == Bidegree{1, 1});
    CHECK(wn_bidegree(1, 1) == Bidegree{5, 3});
    CHECK(wn_bidegree(2, 1) == Bidegree{13, 7});
    CHECK(wn_slope(2) == Rational(7, 13));
    CHECK(vn_bidegree(1, 3) == Bidegree{6, 3});
    for (int n = 1; n <= 20; ++n)
        CHECK(Rational(vn_bidegree(n, 1).w, vn_bidegree(n, 1).s) == Rational(1, 2));
    for (int n = 1; n <= 20; ++n) {
        CHECK(wn_slope(n) < wn_slope(n - 1));
        CHECK(wn_slope(n) > Rational(1, 2));
    }
    CHECK_THROWS(vn_bidegree(0, 1));
    CHECK(speculative_w2_slope().slope == Rational(7, 13));
    CHECK(speculative_w2_slope().note.find("SPECULATIVE") != std::string::npos);
}

TEST_CASE("May generators")
{
    auto h11 = may_generator(1, 1);
    CHECK(h11.stem == 1);
    CHECK(h11.weight == 1);
    auto h20 = may_generator(2, 0);
    CHECK(h20.stem == 2);
    CHECK(h20.weight == 1);
    auto h21 = may_generator(2, 1);
    CHECK(h21.stem == 5);
    CHECK(h21.weight == 3);

    auto zero = may_e1_generators(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].i == 1);
    CHECK(zero[0].j == 0);

    auto gens = may_e1_generators(1000);
    for (const auto& g : gens) {
        CHECK(g.weight <= g.stem);
        CHECK(g.stem <= 1000);
    }
    /* brute force over the same index range */
    std::size_t count = 0;
    for (int i = 1; i <= 12; ++i)
        for (int j = 0; j <= 12; ++j)
            count += may_generator(i, j).stem <= 1000;
    CHECK(gens.size() == count);
}

TEST_CASE("sharpness report")
{
    auto r = sharpness_report(nullptr);
    CHECK(r.find("Pk_h1_4: tau-torsion family on w = s/2 + 2") != std::string::npos);
    CHECK(r.find("w1_family: eta-torsion family on w = 3s/5 + 3/5") != std::string::npos);
    CHECK(r.find("eta_powers: eta-local family on w = s,") != std::string::npos);
    CHECK(r.find("(32,18) region=NotUnderstood") != std::string::npos);
    CHECK(r.find("NO") == std::string::npos);
}
