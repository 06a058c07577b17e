#include "motivic/dga.h"
#include "motivic/errors.h"

#include <doctest.h>

#include <set>

using namespace motivic;

namespace {

const SpectralSequence& anss()
{
    static const SpectralSequence ss = localized_motivic_anss();
    return ss;
}

F2Sum sum(const Monomial& m)
{
    return F2Sum(m);
}

}  // namespace

TEST_CASE("built-in instance")
{
    const auto& ss = anss();
    CHECK(ss.presentation.size() == 4);
    REQUIRE(ss.differentials.size() == 1);
    CHECK(ss.differentials[0].page() == 3);
    CHECK(ss.differentials[0].shift() == Tridegree{-1, 3, 0});
    CHECK(ss.presentation.generator(3).square_zero);
}

TEST_CASE("Leibniz extension in characteristic 2")
{
    const auto& p = anss().presentation;
    const auto& d = anss().differentials[0];
    CHECK(leibniz_extend(p, d, p.monomial({{"alpha3", 1}})) == sum(p.monomial({{"tau", 1}, {"alpha1", 4}})));
    CHECK(leibniz_extend(p, d, p.monomial({{"alpha3", 2}})).empty());
    CHECK(leibniz_extend(p, d, p.monomial({{"tau", 2}, {"alpha1", -3}, {"alpha3", 1}, {"alpha4", 1}})) ==
          sum(p.monomial({{"tau", 3}, {"alpha1", 1}, {"alpha4", 1}})));
    CHECK(leibniz_extend(p, d, p.monomial({{"alpha1", -5}})).empty());
    CHECK(leibniz_extend(p, d, p.monomial({{"alpha3", 3}})) == sum(p.monomial({{"tau", 1}, {"alpha1", 4}, {"alpha3", 2}})));
}

TEST_CASE("differential specs are degree-checked")
{
    const auto& p = anss().presentation;
    CHECK_THROWS_AS(DifferentialSpec(p, 3, {{"alpha3", sum(p.monomial({{"alpha1", 4}}))}}), SpecError);
    CHECK_THROWS_AS(DifferentialSpec(p, 3, {{"beta", sum(p.one())}}), SpecError);
    CHECK_THROWS_AS(DifferentialSpec(p, 1, {}), SpecError);
    DifferentialSpec zero(p, 5, {});
    CHECK(zero.generator_count() == 4);
}

TEST_CASE("differential matrices")
{
    const auto& p = anss().presentation;
    const auto& d = anss().differentials[0];
    auto win = Window::parse(p, "tau=0:2,alpha1=-6:6,alpha3=0:2,alpha4=0:1");
    auto e3 = PageState::initial(p, win).skip_to(3);

    auto m = differential_matrix(e3, d, {5, 1, 3});
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(m.get(0, 0));

    auto four = differential_matrix(e3, d, {4, 4, 4});
    CHECK(four.rows() == 1);
    CHECK(four.is_zero());

    auto none = differential_matrix(e3, d, {2, 0, 1});
    CHECK(none.rows() == 0);

    CHECK_THROWS_AS(differential_matrix(e3, d, {1000, 0, 0}), RangeError);
}

TEST_CASE("tau alpha1^4 dies at E4")
{
    const auto& p = anss().presentation;
    auto win = Window::parse(p, "tau=0:2,alpha1=-6:6,alpha3=0:2,alpha4=0:1");
    auto e4 = turn_page(PageState::initial(p, win).skip_to(3), anss().differentials[0]);
    CHECK(e4.page() == 4);
    CHECK(e4.dimension({4, 4, 3}) == 0);
    CHECK(e4.dimension({5, 1, 3}) == 0);
    CHECK(e4.dimension({4, 4, 4}) == 1);
    const auto& st = e4.last_turn().at({4, 4, 3});
    CHECK(st.rank_in == 1);
    CHECK(st.new_dim == st.old_dim - st.rank_in - st.rank_out);
}

TEST_CASE("no differentials leaves E2 unchanged")
{
    const auto& p = anss().presentation;
    auto win = Window::parse(p, "tau=0:2,alpha1=-3:3,alpha3=0:2,alpha4=0:1");
    auto e2 = PageState::initial(p, win);
    auto einf = run_to_einfty(p, {}, win);
    CHECK(einf.degrees() == e2.degrees());
    for (const auto& d : e2.degrees())
        CHECK(einf.classes(d) == e2.classes(d));
}

TEST_CASE("E-infinity of the localized instance")
{
    const auto& ss = anss();
    const auto& p = ss.presentation;
    auto win = Window::parse(p, "tau=0:6,alpha1=-10:10,alpha3=0:4,alpha4=0:1");
    auto einf = run_to_einfty(p, ss.differentials, win);
    const auto& core = einf.core();

    std::set<Monomial> expected, found;
    for (int a = core.bounds[1].first; a <= core.bounds[1].second; ++a)
        for (int c = 0; 2 * c <= core.bounds[2].second; ++c)
            for (int e = 0; e <= 1; ++e) {
                Monomial m{0, a, 2 * c, e};
                if (einf.valid(degree(p, m)))
                    expected.insert(m);
            }
    for (const auto& d : einf.degrees()) {
        if (!einf.valid(d))
            continue;
        for (const auto& x : einf.classes(d)) {
            REQUIRE(x.size() == 1);
            found.insert(x.terms()[0]);
        }
    }
    CHECK(!expected.empty());
    CHECK(found == expected);

    for (const auto& m : found) {
        CHECK(m[0] == 0);
        CHECK(m[2] % 2 == 0);
    }
}

TEST_CASE("core box shrinks artificial edges by the reach")
{
    const auto& ss = anss();
    auto win = Window::parse(ss.presentation, "tau=0:8,alpha1=-12:12,alpha3=0:6,alpha4=0:1");
    auto einf = run_to_einfty(ss.presentation, ss.differentials, win);
    CHECK(einf.core().format(ss.presentation) == "tau=0:7,alpha1=-8:8,alpha3=0:5,alpha4=0:1");
    CHECK(ss.differentials[0].reach() == std::vector<int>{1, 4, 1, 0});
}

TEST_CASE("pages must increase")
{
    const auto& ss = anss();
    auto win = Window::parse(ss.presentation, "tau=0:1,alpha1=-1:1");
    auto d = ss.differentials[0];
    CHECK_THROWS(run_to_einfty(ss.presentation, {d, d}, win));
    auto e4 = turn_page(PageState::initial(ss.presentation, win).skip_to(3), d);
    CHECK_THROWS(turn_page(e4, d));
}
