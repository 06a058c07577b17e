#include "motivic/degree.h"
#include "motivic/errors.h"

#include <fmt/format.h>

namespace motivic {

std::string to_string(const Tridegree& d)
{
    return fmt::format("({},{},{})", d.s, d.f, d.w);
}

std::string to_string(const Bidegree& d)
{
    return fmt::format("({},{})", d.s, d.w);
}

std::string to_string(const Rational& q)
{
    if (q.denominator() == 1)
        return std::to_string(q.numerator());
    return fmt::format("{}/{}", q.numerator(), q.denominator());
}

namespace {
std::string join_violations(const std::vector<std::string>& v)
{
    std::string out = "validation failed";
    for (const auto& s : v)
        out += "\n  " + s;
    return out;
}
}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(join_violations(violations)), violations_(std::move(violations))
{
}

}  // namespace motivic
