#pragma once

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace motivic {

// Compare only against another Rational: with Boost 1.74 under C++20, rational == int recurses forever.
using Rational = boost::rational<std::int64_t>;

/* Motivic Adams-Novikov degree: stem, filtration, weight. */
struct Tridegree
{
    std::int64_t s = 0;
    std::int64_t f = 0;
    std::int64_t w = 0;

    Tridegree& operator+=(const Tridegree& o)
    {
        s += o.s;
        f += o.f;
        w += o.w;
        return *this;
    }
    Tridegree& operator-=(const Tridegree& o)
    {
        s -= o.s;
        f -= o.f;
        w -= o.w;
        return *this;
    }
    friend Tridegree operator+(Tridegree a, const Tridegree& b) { return a += b; }
    friend Tridegree operator-(Tridegree a, const Tridegree& b) { return a -= b; }
    friend Tridegree operator*(std::int64_t k, const Tridegree& d) { return {k * d.s, k * d.f, k * d.w}; }
    friend auto operator<=>(const Tridegree&, const Tridegree&) = default;
};

/* Position in the (s,w)-plane of homotopy groups. */
struct Bidegree
{
    std::int64_t s = 0;
    std::int64_t w = 0;

    friend Bidegree operator+(const Bidegree& a, const Bidegree& b) { return {a.s + b.s, a.w + b.w}; }
    friend Bidegree operator*(std::int64_t k, const Bidegree& d) { return {k * d.s, k * d.w}; }
    friend auto operator<=>(const Bidegree&, const Bidegree&) = default;
};

/* A non-vertical line w = slope * s + intercept, with exact coefficients. */
struct Line
{
    Rational slope;
    Rational intercept;

    Rational at(const Rational& s) const { return slope * s + intercept; }
    bool contains(const Bidegree& p) const { return Rational(p.w) == at(Rational(p.s)); }
    friend bool operator==(const Line&, const Line&) = default;
};

std::string to_string(const Tridegree& d);
std::string to_string(const Bidegree& d);
std::string to_string(const Rational& q);

}  // namespace motivic
