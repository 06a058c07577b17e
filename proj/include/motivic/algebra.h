#pragma once

#include "motivic/degree.h"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motivic {

struct GeneratorSpec
{
    std::string name;
    Tridegree degree;
    bool invertible = false;
    bool square_zero = false;
};

/* Exponent vector, one entry per generator in declaration order.
 * The default std::vector ordering is the canonical monomial order. */
using Monomial = std::vector<int>;

/* Finitely generated graded-commutative monomial algebra over F_2.
 * Generators may be invertible (Laurent) or square-zero, never both. */
class Presentation
{
public:
    Presentation() = default;
    explicit Presentation(std::vector<GeneratorSpec> generators);

    /* One generator per line: `name s f w [invertible] [square_zero]`, `#` comments. */
    static Presentation parse(std::string_view text);

    std::size_t size() const { return gens_.size(); }
    const std::vector<GeneratorSpec>& generators() const { return gens_; }
    const GeneratorSpec& generator(std::size_t i) const { return gens_.at(i); }
    std::size_t index_of(std::string_view name) const;

    Monomial one() const { return Monomial(gens_.size(), 0); }
    Monomial monomial(std::initializer_list<std::pair<std::string_view, int>> powers) const;

    /* Throws PresentationMismatch if m has the wrong arity or violates exponent constraints. */
    void check(const Monomial& m) const;
    bool is_valid(const Monomial& m) const;

    /* e.g. "tau^2*alpha1^-3*alpha3", "1" for the unit */
    std::string format(const Monomial& m) const;

private:
    std::vector<GeneratorSpec> gens_;
};

Tridegree degree(const Presentation& p, const Monomial& m);

/* Product, or nullopt when a square-zero generator reaches exponent 2. */
std::optional<Monomial> multiply(const Presentation& p, const Monomial& a, const Monomial& b);

/* Formal sum of monomials with F_2 coefficients, kept sorted in monomial order. */
class F2Sum
{
public:
    F2Sum() = default;
    explicit F2Sum(Monomial m) { terms_.push_back(std::move(m)); }

    void toggle(const Monomial& m);
    F2Sum& operator+=(const F2Sum& o);
    friend F2Sum operator+(F2Sum a, const F2Sum& b) { return a += b; }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Monomial>& terms() const { return terms_; }
    friend bool operator==(const F2Sum&, const F2Sum&) = default;

private:
    std::vector<Monomial> terms_;
};

F2Sum multiply(const Presentation& p, const F2Sum& a, const Monomial& m);
std::string format(const Presentation& p, const F2Sum& x);

/* Inclusive exponent bounds per generator. Windows bound exponents, not degrees;
 * the optional tridegree filter is applied after enumeration. */
struct Window
{
    std::vector<std::pair<int, int>> bounds;
    std::optional<Tridegree> only_degree;

    bool contains(const Monomial& m) const;
    bool inverted() const;

    /* "tau=0:8,alpha1=-12:12,alpha3=0:6,alpha4=0:1"; unnamed generators default to 0:0 */
    static Window parse(const Presentation& p, std::string_view text);
    std::string format(const Presentation& p) const;
};

/* Rejects bounds that contradict the generator type (negative exponent on a
 * non-invertible generator, exponent above 1 on a square-zero one). */
void check_window(const Presentation& p, const Window& win);

struct BasisEnumeration
{
    std::map<Tridegree, std::vector<Monomial>> by_degree;
    bool inverted_window = false;

    std::size_t monomial_count() const;
};

/* Every monomial in the window exactly once, grouped by tridegree, each group
 * in canonical (lexicographic exponent) order. */
BasisEnumeration enumerate_basis(const Presentation& p, const Window& win);

}  // namespace motivic
