#pragma once

#include "motivic/chart.h"
#include "motivic/degree.h"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace motivic {

enum class Annihilator
{
    Tau,
    Eta,
    None,
};

std::string_view to_string(Annihilator a);

/* Element family base + k * period, k >= 0, in (s,f,w) degrees. Families are
 * stored data with cited notes; their nontriviality is not recomputed here. */
struct FamilySpec
{
    std::string name;
    Tridegree base;
    Tridegree period;
    Annihilator annihilated_by = Annihilator::None;
    std::string note;

    Tridegree at(std::int64_t k) const { return base + k * period; }
    Bidegree point(std::int64_t k) const
    {
        auto d = at(k);
        return {d.s, d.w};
    }
};

struct Annotation
{
    Bidegree at;
    std::string note;
};

const std::vector<FamilySpec>& builtin_families();
const FamilySpec& family(std::string_view name);
const std::vector<Annotation>& builtin_annotations();

/* Exact line through the family's (s,w) points. Throws Error for the vertical tau tower. */
Line family_line(const FamilySpec& fam);
Line family_line(std::string_view name);

/* v_n self-map of period k: k * (2^{n+1} - 2, 2^n - 1); n >= 1. */
Bidegree vn_bidegree(int n, std::int64_t k);
/* w_n self-map of period k: k * (2^{n+2} - 3, 2^{n+1} - 1); n >= 0. */
Bidegree wn_bidegree(int n, std::int64_t k);
Rational wn_slope(int n);

/* Conjectural slope 7/13 line from w_2; exposed as data only, never used to classify. */
struct SpeculativeSlope
{
    Rational slope;
    std::string note;
};
SpeculativeSlope speculative_w2_slope();

/* May E_1 generator h_{ij}, i >= 1, j >= 0. */
struct MayGenerator
{
    int i = 1;
    int j = 0;
    std::int64_t stem = 0;
    std::int64_t weight = 0;
};

MayGenerator may_generator(int i, int j);
/* All h_{ij} with stem <= max_stem, ordered by (i, j). */
std::vector<MayGenerator> may_e1_generators(std::int64_t max_stem);

/* One line per family naming the boundary it witnesses, with line checks over k <= 100. */
std::string sharpness_report(const StemsTable* stems);

}  // namespace motivic
