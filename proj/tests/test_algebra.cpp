#include "motivic/algebra.h"
#include "motivic/dga.h"
#include "motivic/errors.h"

#include <doctest.h>

using namespace motivic;

namespace {

const Presentation& anss()
{
    static const Presentation p = localized_motivic_anss().presentation;
    return p;
}

}  // namespace

TEST_CASE("generator degrees of the localized presentation")
{
    const auto& p = anss();
    CHECK(p.size() == 4);
    CHECK(degree(p, p.monomial({{"alpha1", 2}})) == Tridegree{2, 2, 2});
    CHECK(degree(p, p.monomial({{"alpha3", 1}})) == Tridegree{5, 1, 3});
    CHECK(degree(p, p.monomial({{"tau", 1}, {"alpha1", -1}, {"alpha4", 1}})) == Tridegree{6, 0, 2});
    CHECK(degree(p, p.one()) == Tridegree{0, 0, 0});
    CHECK(p.generator(p.index_of("alpha4")).square_zero);
    CHECK(p.generator(p.index_of("alpha1")).invertible);
}

TEST_CASE("multiplication")
{
    const auto& p = anss();
    auto a4 = p.monomial({{"alpha4", 1}});
    CHECK_FALSE(multiply(p, a4, a4).has_value());

    auto m = p.monomial({{"tau", 2}, {"alpha3", 1}});
    CHECK(multiply(p, m, p.one()) == m);

    auto cube = p.monomial({{"alpha1", 3}});
    auto inv = p.monomial({{"alpha1", -1}});
    CHECK(multiply(p, cube, inv) == p.monomial({{"alpha1", 2}}));
}

TEST_CASE("monomial formatting")
{
    const auto& p = anss();
    CHECK(p.format(p.one()) == "1");
    CHECK(p.format(p.monomial({{"tau", 2}, {"alpha1", -3}, {"alpha3", 1}})) == "tau^2*alpha1^-3*alpha3");
    F2Sum x;
    CHECK(format(p, x) == "0");
}

TEST_CASE("presentation invariants")
{
    CHECK_THROWS_AS(Presentation({{"x", {1, 1, 1}, true, true}}), PresentationMismatch);
    CHECK_THROWS_AS(Presentation({{"x", {1, 1, 1}}, {"x", {2, 2, 2}}}), PresentationMismatch);
    CHECK_THROWS_AS(anss().check({1, 2}), PresentationMismatch);
    CHECK_THROWS_AS(anss().check(anss().monomial({{"tau", -1}})), PresentationMismatch);
    CHECK_FALSE(anss().is_valid({0, 0, 0, 2}));
    CHECK_THROWS_AS(anss().monomial({{"alpha4", 2}}), PresentationMismatch);
    CHECK(anss().is_valid(anss().monomial({{"alpha1", -7}})));
}

TEST_CASE("presentation parsing")
{
    auto p = Presentation::parse("# comment\nx 1 1 1 invertible\n\ny 7 1 4 square_zero\n");
    CHECK(p.size() == 2);
    CHECK(p.generator(0).invertible);
    CHECK(p.generator(1).square_zero);
    CHECK_THROWS_AS(Presentation::parse("x 1 1\n"), ParseError);
    CHECK_THROWS_AS(Presentation::parse("x 1 1 1 weird\n"), ParseError);
}

TEST_CASE("F2 sums cancel in pairs")
{
    const auto& p = anss();
    auto a = p.monomial({{"alpha1", 1}});
    F2Sum x;
    x.toggle(a);
    x.toggle(p.one());
    CHECK(x.size() == 2);
    x.toggle(a);
    CHECK(x.size() == 1);
    CHECK((x + x).empty());
}

TEST_CASE("basis enumeration")
{
    const auto& p = anss();
    auto win = Window::parse(p, "tau=0:1,alpha1=0:1,alpha4=0:1");
    auto basis = enumerate_basis(p, win);
    CHECK(basis.monomial_count() == 8);

    win.only_degree = Tridegree{1, 1, 1};
    basis = enumerate_basis(p, win);
    REQUIRE(basis.by_degree.size() == 1);
    CHECK(basis.by_degree.begin()->second == std::vector<Monomial>{p.monomial({{"alpha1", 1}})});

    Presentation empty;
    auto unit = enumerate_basis(empty, Window{});
    REQUIRE(unit.by_degree.size() == 1);
    CHECK(unit.by_degree.begin()->first == Tridegree{0, 0, 0});
    CHECK(unit.monomial_count() == 1);
}

TEST_CASE("enumeration is exhaustive and in canonical order")
{
    const auto& p = anss();
    auto win = Window::parse(p, "tau=0:3,alpha1=-4:4,alpha3=0:2,alpha4=0:1");
    auto basis = enumerate_basis(p, win);
    CHECK(basis.monomial_count() == 4 * 9 * 3 * 2);
    for (const auto& [d, ms] : basis.by_degree) {
        CHECK(std::is_sorted(ms.begin(), ms.end()));
        for (const auto& m : ms)
            CHECK(degree(p, m) == d);
    }
}

TEST_CASE("window validation")
{
    const auto& p = anss();
    Window inverted{{{2, 1}, {0, 0}, {0, 0}, {0, 0}}, std::nullopt};
    auto basis = enumerate_basis(p, inverted);
    CHECK(basis.inverted_window);
    CHECK(basis.monomial_count() == 0);
    CHECK_THROWS(check_window(p, Window::parse(p, "tau=-1:2")));
    CHECK_THROWS(check_window(p, Window::parse(p, "alpha4=0:2")));
    CHECK_THROWS(Window::parse(p, "beta=0:1"));
    CHECK(Window::parse(p, "tau=0:8,alpha1=-12:12,alpha3=0:6,alpha4=0:1").format(p) ==
          "tau=0:8,alpha1=-12:12,alpha3=0:6,alpha4=0:1");
}
