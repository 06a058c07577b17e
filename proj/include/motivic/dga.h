#pragma once

#include "motivic/algebra.h"
#include "motivic/gf2.h"

#include <map>
#include <string>
#include <vector>

namespace motivic {

/* The d_r differential on generators, extended to monomials by the Leibniz rule.
 * Shift is fixed at (-1, r, 0) in Adams-Novikov grading. */
class DifferentialSpec
{
public:
    /* Throws SpecError if an image has the wrong tridegree or names an unknown generator. */
    DifferentialSpec(const Presentation& p, int page, const std::map<std::string, F2Sum>& images);

    int page() const { return page_; }
    Tridegree shift() const { return {-1, page_, 0}; }
    const F2Sum& image(std::size_t generator) const { return images_.at(generator); }
    std::size_t generator_count() const { return images_.size(); }

    /* Largest |exponent change| per generator over all Leibniz terms; how far a
     * differential can move a monomial inside the exponent box. */
    std::vector<int> reach() const;

private:
    int page_;
    std::vector<F2Sum> images_;
};

/* d(m) = sum over generators g of (exponent of g mod 2) * d(g) * m/g, in characteristic 2. */
F2Sum leibniz_extend(const Presentation& p, const DifferentialSpec& d, const Monomial& m);
F2Sum leibniz_extend(const Presentation& p, const DifferentialSpec& d, const F2Sum& x);

struct TurnStats
{
    std::size_t old_dim = 0;
    std::size_t new_dim = 0;
    std::size_t rank_in = 0;
    std::size_t rank_out = 0;
};

/* Surviving classes per tridegree on one page of a windowed spectral sequence.
 *
 * Each tridegree keeps its window monomials, the accumulated boundaries and the
 * current class representatives, all as vectors over that monomial basis.
 * Representatives are reduced modulo the boundaries and mutually in reduced
 * echelon form, so they are canonical for a given window. */
class PageState
{
public:
    static PageState initial(const Presentation& p, const Window& win, int page = 2);

    /* Same classes relabelled as a later page; the skipped differentials are zero. */
    PageState skip_to(int page) const;

    const Presentation& presentation() const { return pres_; }
    const Window& window() const { return window_; }
    /* Exponent box on which results are certified. */
    const Window& core() const { return core_; }
    int page() const { return page_; }

    std::vector<Tridegree> degrees() const;
    bool has_degree(const Tridegree& d) const { return slots_.count(d) != 0; }
    std::size_t dimension(const Tridegree& d) const;
    std::vector<F2Sum> classes(const Tridegree& d) const;
    const std::vector<Monomial>& basis(const Tridegree& d) const;

    /* True when every window monomial of this tridegree lies in the core box. */
    bool valid(const Tridegree& d) const;
    /* True when d is within the tridegree bounding box of the window. */
    bool in_window_range(const Tridegree& d) const;

    /* Per-tridegree ranks recorded by the page turn that produced this state. */
    const std::map<Tridegree, TurnStats>& last_turn() const { return stats_; }

private:
    friend PageState turn_page(const PageState&, const DifferentialSpec&);
    friend gf2::Matrix differential_matrix(const PageState&, const DifferentialSpec&, const Tridegree&);

    struct Slot
    {
        std::vector<Monomial> basis;
        std::vector<gf2::Vec> boundaries;  // reduced echelon
        std::vector<gf2::Vec> classes;     // reduced echelon, reduced mod boundaries
    };

    gf2::Vec to_vector(const Slot& slot, const F2Sum& x, bool* dropped) const;
    F2Sum to_sum(const Slot& slot, const gf2::Vec& v) const;

    Presentation pres_;
    Window window_;
    Window core_;
    int page_ = 2;
    std::map<Tridegree, Slot> slots_;
    std::map<Tridegree, TurnStats> stats_;
    Tridegree lo_, hi_;
};

/* Matrix of d_r from the classes at `source` to the classes at source + shift.
 * Rows index source classes, columns target classes. Throws RangeError when
 * `source` is outside the window's degree range. */
gf2::Matrix differential_matrix(const PageState& state, const DifferentialSpec& d, const Tridegree& source);

/* E_{r+1} = ker d_r / im d_r, tridegree by tridegree. */
PageState turn_page(const PageState& state, const DifferentialSpec& d);

/* Applies each differential in page order; pages without one have d_r = 0. */
PageState run_to_einfty(const Presentation& p, const std::vector<DifferentialSpec>& diffs, const Window& win);

struct SpectralSequence
{
    Presentation presentation;
    std::vector<DifferentialSpec> differentials;
};

/* eta-localized motivic Adams-Novikov E_2 = F_2[tau, alpha1^{+-1}, alpha3, alpha4]/alpha4^2
 * with the single differential d_3(alpha3) = tau * alpha1^4. */
SpectralSequence localized_motivic_anss();

}  // namespace motivic
