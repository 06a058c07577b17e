#pragma once

#include "motivic/chart.h"
#include "motivic/degree.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <optional>
#include <variant>

namespace motivic {

enum class RegionLabel
{
    Zero,
    TauLocal,
    EtaLocal,
    NotUnderstood,
};

std::string_view to_string(RegionLabel r);

/* Region boundaries in the (s,w)-plane. */
namespace boundary {
inline const Line eta_upper{1, 0};                  // w = s
inline const Line eta_lower{Rational(3, 5), 1};     // w = 3s/5 + 1
inline const Line tau_upper{Rational(1, 2), 1};     // w = s/2 + 1
inline const Line adams_eta{Rational(3, 4), 1};     // w = 3s/4 + 1
}  // namespace boundary

struct Known
{
    GroupDescriptor group;
    std::string generator;  // empty when there is no single named generator

    friend bool operator==(const Known&, const Known&) = default;
};

/* tau-local group whose classical value is missing from the stems table. */
struct ReducibleToClassical
{
    std::int64_t stem = 0;

    friend bool operator==(const ReducibleToClassical&, const ReducibleToClassical&) = default;
};

struct Unknown
{
    friend bool operator==(const Unknown&, const Unknown&) = default;
};

using GroupValue = std::variant<Known, ReducibleToClassical, Unknown>;

RegionLabel classify(std::int64_t s, std::int64_t w);

/* The group of F_2[eta^{+-1}, sigma, mu9]/sigma^2 in bidegree (s,w), with
 * eta in (1,1), sigma in (7,4), mu9 in (9,5). Every bidegree holds at most one
 * monomial. */
Known eta_local_group(std::int64_t s, std::int64_t w);

GroupValue resolve_group(std::int64_t s, std::int64_t w, const StemsTable* stems);

/* The cruder eta-locality bound w >= 3s/4 + 1 coming from the Adams vanishing line. */
bool adams_weak_bound(std::int64_t s, std::int64_t w);

/* "Z/2", "classical:pi_12", "unknown" */
std::string group_string(const GroupValue& v);
std::string generator_string(const GroupValue& v);

/* Number of elements when finite; nullopt for Z_2 summands or unresolved values. */
std::optional<std::int64_t> finite_order(const GroupValue& v);

}  // namespace motivic
