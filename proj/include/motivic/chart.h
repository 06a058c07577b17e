#pragma once

#include "motivic/degree.h"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace motivic {

/* Finite direct sum of 2-adic integers (entry 0) and cyclic 2-groups (entry 2^k). */
class GroupDescriptor
{
public:
    GroupDescriptor() = default;
    /* Throws std::invalid_argument on an entry that is neither 0 nor a power of 2 >= 2. */
    explicit GroupDescriptor(std::vector<std::int64_t> summands);

    static GroupDescriptor trivial() { return {}; }
    static GroupDescriptor z2adic() { return GroupDescriptor({0}); }
    static GroupDescriptor cyclic(std::int64_t order) { return GroupDescriptor({order}); }

    /* Sorted with 0-entries first, then descending. */
    const std::vector<std::int64_t>& summands() const { return summands_; }
    bool is_trivial() const { return summands_.empty(); }
    /* Order of a finite group; nullopt when there is a Z_2 summand. */
    std::optional<std::int64_t> order() const;

    GroupDescriptor operator+(const GroupDescriptor& o) const;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

    /* "0", "Z2", "Z/2", "Z2+Z/8" */
    std::string to_string() const;
    /* File syntax: "0", "Z", "32,2" */
    std::string to_token() const;
    static GroupDescriptor from_token(std::string_view token);

private:
    std::vector<std::int64_t> summands_;
};

bool is_power_of_two(std::int64_t n);

struct ClassicalChartClass
{
    std::string name;
    std::int64_t s = 0;
    std::int64_t f = 0;
    std::int64_t order = 2;  // 0 means Z_2
    std::optional<std::string> eta_edge;

    friend bool operator==(const ClassicalChartClass&, const ClassicalChartClass&) = default;
};

using StemFiltration = std::pair<std::int64_t, std::int64_t>;

/* Classical Adams-Novikov E_2 classes with alpha1-multiplication edges. */
struct ClassicalChart
{
    std::map<StemFiltration, std::vector<ClassicalChartClass>> entries;
    std::int64_t s_max = 0;

    void add(ClassicalChartClass c);
    const ClassicalChartClass* find(std::string_view name) const;
    const std::vector<ClassicalChartClass>& at(std::int64_t s, std::int64_t f) const;
    GroupDescriptor group_at(std::int64_t s, std::int64_t f) const;
    std::size_t class_count() const;
};

/* Lines `s f name order [eta:target]`, `#` comments, order `Z` for Z_2.
 * An optional `range N` line declares s_max; otherwise it is the largest stem present. */
ClassicalChart parse_chart_unchecked(std::string_view text);
/* As above, then throws ValidationError if validate_chart finds anything. */
ClassicalChart parse_chart(std::string_view text);
std::string serialize_chart(const ClassicalChart& chart);
std::vector<std::string> validate_chart(const ClassicalChart& chart);

/* Classical 2-complete stable stems, treated purely as input data. */
struct StemsTable
{
    std::map<std::int64_t, GroupDescriptor> stems;
    std::string provenance;

    std::optional<GroupDescriptor> lookup(std::int64_t s) const;
    std::int64_t s_max() const { return stems.empty() ? -1 : stems.rbegin()->first; }
};

/* Lines `s order[,order...]` with `Z`, `0` or powers of 2; optional `provenance <text>` line. */
StemsTable parse_stems(std::string_view text);
std::string serialize_stems(const StemsTable& table);
std::vector<std::string> validate_stems(const StemsTable& table);

/* A classical class seen motivically: present at every weight w <= w_top as a tau-multiple. */
struct MotivicChartClass
{
    std::string name;
    std::int64_t s = 0;
    std::int64_t f = 0;
    std::int64_t order = 2;
    std::int64_t w_top = 0;  // (s + f) / 2

    bool present_at(std::int64_t w) const { return w <= w_top; }
    bool is_tower_top(std::int64_t w) const { return w == w_top; }
};

struct MotivicLift
{
    std::vector<MotivicChartClass> classes;
    /* Classes with s + f odd, which have no integral weight; kept out of the lift. */
    std::vector<ClassicalChartClass> rejected;

    std::vector<const MotivicChartClass*> at(const Tridegree& d) const;
    /* All (s,f,w) slots with w >= w_min. */
    std::map<Tridegree, std::vector<std::string>> materialize(std::int64_t w_min) const;
};

MotivicLift lift_to_motivic(const ClassicalChart& chart);

/* pi_{s,w}(C tau) read off the classical chart at (s, 2w - s). Throws RangeError
 * when s lies outside the chart's declared range. */
GroupDescriptor ctau_homotopy(const ClassicalChart& chart, std::int64_t s, std::int64_t w);

enum class Stability
{
    Stable,
    Unresolved,
};

struct LocalizedEntry
{
    std::vector<std::string> survivors;   // classes nonzero in the alpha1-colimit
    std::vector<std::string> unresolved;  // chain left the data before deciding
    Stability stability = Stability::Stable;
};

/* Colimit along alpha1-multiplication, decided from the finite edge data.
 * Classes with s < 5f - 10 are stable by the localization range guarantee. */
std::map<StemFiltration, LocalizedEntry> eta_localize_chart(const ClassicalChart& chart, int max_steps);

bool in_localization_range(std::int64_t s, std::int64_t f);

}  // namespace motivic
