#include "motivic/dga.h"
#include "motivic/errors.h"

#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>

namespace motivic {

namespace {
bool inside(const std::vector<Monomial>& basis, const Window& box);
}

DifferentialSpec::DifferentialSpec(const Presentation& p, int page, const std::map<std::string, F2Sum>& images)
    : page_(page), images_(p.size())
{
    if (page < 2)
        throw SpecError(fmt::format("differential page {} is below 2", page));
    for (const auto& [name, img] : images) {
        std::size_t g;
        try {
            g = p.index_of(name);
        }
        catch (const PresentationMismatch& e) {
            throw SpecError(e.what());
        }
        const Tridegree want = p.generator(g).degree + shift();
        for (const auto& t : img.terms()) {
            if (!p.is_valid(t))
                throw SpecError(fmt::format("d_{}({}): term is not a valid monomial", page, name));
            if (degree(p, t) != want)
                throw SpecError(fmt::format("d_{}({}) = {} has degree {}, expected {}", page, name, p.format(t),
                                            to_string(degree(p, t)), to_string(want)));
        }
        images_[g] = img;
    }
}

std::vector<int> DifferentialSpec::reach() const
{
    std::vector<int> r(images_.size(), 0);
    for (std::size_t g = 0; g < images_.size(); ++g) {
        for (const auto& t : images_[g].terms()) {
            for (std::size_t i = 0; i < t.size(); ++i) {
                int delta = t[i] - (i == g ? 1 : 0);
                r[i] = std::max(r[i], std::abs(delta));
            }
        }
    }
    return r;
}

F2Sum leibniz_extend(const Presentation& p, const DifferentialSpec& d, const Monomial& m)
{
    p.check(m);
    if (d.generator_count() != p.size())
        throw PresentationMismatch("differential and presentation disagree on generator count");
    F2Sum out;
    for (std::size_t g = 0; g < m.size(); ++g) {
        /* n * x^{n-1} dx vanishes for even n, negative n included */
        if (m[g] % 2 == 0 || d.image(g).empty())
            continue;
        Monomial rest = m;
        --rest[g];
        out += multiply(p, d.image(g), rest);
    }
    return out;
}

F2Sum leibniz_extend(const Presentation& p, const DifferentialSpec& d, const F2Sum& x)
{
    F2Sum out;
    for (const auto& t : x.terms())
        out += leibniz_extend(p, d, t);
    return out;
}

PageState PageState::initial(const Presentation& p, const Window& win, int page)
{
    PageState st;
    st.pres_ = p;
    st.window_ = win;
    st.core_ = win;
    st.page_ = page;
    auto basis = enumerate_basis(p, win);
    bool first = true;
    for (auto& [d, mons] : basis.by_degree) {
        Slot slot;
        slot.basis = std::move(mons);
        for (std::size_t i = 0; i < slot.basis.size(); ++i) {
            gf2::Vec v(slot.basis.size());
            v[i] = true;
            slot.classes.push_back(std::move(v));
        }
        st.slots_.emplace(d, std::move(slot));
        if (first) {
            st.lo_ = st.hi_ = d;
            first = false;
        }
        st.lo_ = {std::min(st.lo_.s, d.s), std::min(st.lo_.f, d.f), std::min(st.lo_.w, d.w)};
        st.hi_ = {std::max(st.hi_.s, d.s), std::max(st.hi_.f, d.f), std::max(st.hi_.w, d.w)};
    }
    return st;
}

PageState PageState::skip_to(int page) const
{
    if (page < page_)
        throw SpecError(fmt::format("cannot go back from page {} to page {}", page_, page));
    PageState st = *this;
    st.page_ = page;
    st.stats_.clear();
    return st;
}

std::vector<Tridegree> PageState::degrees() const
{
    std::vector<Tridegree> out;
    out.reserve(slots_.size());
    for (const auto& [d, slot] : slots_)
        out.push_back(d);
    return out;
}

std::size_t PageState::dimension(const Tridegree& d) const
{
    auto it = slots_.find(d);
    return it == slots_.end() ? 0 : it->second.classes.size();
}

std::vector<F2Sum> PageState::classes(const Tridegree& d) const
{
    std::vector<F2Sum> out;
    auto it = slots_.find(d);
    if (it == slots_.end())
        return out;
    for (const auto& v : it->second.classes)
        out.push_back(to_sum(it->second, v));
    return out;
}

const std::vector<Monomial>& PageState::basis(const Tridegree& d) const
{
    static const std::vector<Monomial> empty;
    auto it = slots_.find(d);
    return it == slots_.end() ? empty : it->second.basis;
}

bool PageState::valid(const Tridegree& d) const
{
    auto it = slots_.find(d);
    if (it == slots_.end())
        return in_window_range(d);
    return inside(it->second.basis, core_);
}

bool PageState::in_window_range(const Tridegree& d) const
{
    if (slots_.empty())
        return false;
    return lo_.s <= d.s && d.s <= hi_.s && lo_.f <= d.f && d.f <= hi_.f && lo_.w <= d.w && d.w <= hi_.w;
}

gf2::Vec PageState::to_vector(const Slot& slot, const F2Sum& x, bool* dropped) const
{
    gf2::Vec v(slot.basis.size());
    for (const auto& t : x.terms()) {
        auto it = std::lower_bound(slot.basis.begin(), slot.basis.end(), t);
        if (it != slot.basis.end() && *it == t)
            v.flip(std::size_t(it - slot.basis.begin()));
        else if (dropped)
            *dropped = true;
    }
    return v;
}

F2Sum PageState::to_sum(const Slot& slot, const gf2::Vec& v) const
{
    F2Sum out;
    for (auto i = v.find_first(); i != gf2::Vec::npos; i = v.find_next(i))
        out.toggle(slot.basis[i]);
    return out;
}

namespace {

/* Reduced echelon basis of (boundaries + classes) that remembers, for each row,
 * which combination of classes it came from. Used to write a vector of the
 * ambient space in class coordinates modulo boundaries. */
class ClassCoordinates
{
public:
    ClassCoordinates(const std::vector<gf2::Vec>& boundaries, const std::vector<gf2::Vec>& classes)
        : nclasses_(classes.size())
    {
        for (const auto& b : boundaries)
            add(b, gf2::Vec(nclasses_));
        for (std::size_t i = 0; i < classes.size(); ++i) {
            gf2::Vec c(nclasses_);
            c[i] = true;
            add(classes[i], c);
        }
    }

    /* Coordinates of y in the class basis, and whatever is left outside span(classes + boundaries). */
    std::pair<gf2::Vec, gf2::Vec> express(gf2::Vec y) const
    {
        gf2::Vec combo(nclasses_);
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (y[gf2::pivot(rows_[k])]) {
                y ^= rows_[k];
                combo ^= combos_[k];
            }
        }
        return {combo, y};
    }

private:
    void add(gf2::Vec v, gf2::Vec combo)
    {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (v[gf2::pivot(rows_[k])]) {
                v ^= rows_[k];
                combo ^= combos_[k];
            }
        }
        auto p = gf2::pivot(v);
        if (p == gf2::Vec::npos)
            return;
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            if (rows_[k][p]) {
                rows_[k] ^= v;
                combos_[k] ^= combo;
            }
        }
        rows_.push_back(std::move(v));
        combos_.push_back(std::move(combo));
    }

    std::size_t nclasses_;
    std::vector<gf2::Vec> rows_, combos_;
};

/* Core box after applying d: artificial window edges move inward by the reach of d.
 * Natural edges (exponent 0 of an ordinary generator, exponent 1 of a square-zero
 * one) are true edges of the algebra and stay put. */
Window shrink(const Presentation& p, Window core, const DifferentialSpec& d)
{
    const auto reach = d.reach();
    for (std::size_t i = 0; i < reach.size(); ++i) {
        const auto& g = p.generator(i);
        auto& [lo, hi] = core.bounds[i];
        if (!(lo == 0 && !g.invertible))
            lo += reach[i];
        if (!(hi == 1 && g.square_zero))
            hi -= reach[i];
    }
    return core;
}

bool inside(const std::vector<Monomial>& basis, const Window& box)
{
    return std::all_of(basis.begin(), basis.end(), [&](const Monomial& m) { return box.contains(m); });
}

gf2::Vec combine(const std::vector<gf2::Vec>& vectors, const gf2::Vec& combo, std::size_t dim)
{
    gf2::Vec out(dim);
    for (auto i = combo.find_first(); i != gf2::Vec::npos; i = combo.find_next(i))
        out ^= vectors[i];
    return out;
}

}  // namespace

gf2::Matrix differential_matrix(const PageState& state, const DifferentialSpec& d, const Tridegree& source)
{
    if (!state.in_window_range(source))
        throw RangeError("tridegree " + to_string(source) + " is outside the window");
    const Tridegree target = source + d.shift();
    auto src = state.slots_.find(source);
    auto tgt = state.slots_.find(target);
    const std::size_t nrows = src == state.slots_.end() ? 0 : src->second.classes.size();
    const std::size_t ncols = tgt == state.slots_.end() ? 0 : tgt->second.classes.size();
    gf2::Matrix m(nrows, ncols);
    if (nrows == 0 || ncols == 0)
        return m;

    const auto& ts = tgt->second;
    ClassCoordinates coords(ts.boundaries, ts.classes);
    const Window core = shrink(state.pres_, state.core_, d);
    const bool certify = inside(src->second.basis, core) && inside(ts.basis, core);
    for (std::size_t i = 0; i < nrows; ++i) {
        F2Sum image = leibniz_extend(state.pres_, d, state.to_sum(src->second, src->second.classes[i]));
        bool dropped = false;
        auto [combo, residual] = coords.express(state.to_vector(ts, image, &dropped));
        if (certify && (dropped || residual.any()))
            throw SpecError(fmt::format("d_{} of a class at {} does not land in E_{} at {}", d.page(), to_string(source),
                                        d.page(), to_string(target)));
        m.row(i) = combo;
    }
    return m;
}

PageState turn_page(const PageState& state, const DifferentialSpec& d)
{
    if (d.page() != state.page())
        throw SpecError(fmt::format("differential is d_{} but the state is page {}", d.page(), state.page()));

    struct Outgoing
    {
        std::vector<gf2::Vec> kernel;  // ambient vectors at the source
        std::vector<gf2::Vec> image;   // ambient vectors at the target
        std::size_t rank = 0;
    };
    std::map<Tridegree, Outgoing> out;
    for (const auto& [src, slot] : state.slots_) {
        Outgoing o;
        gf2::Matrix m = differential_matrix(state, d, src);
        for (const auto& k : gf2::left_kernel(m))
            o.kernel.push_back(combine(slot.classes, k, slot.basis.size()));
        if (m.cols() > 0) {
            const auto& ts = state.slots_.at(src + d.shift());
            gf2::Echelon img(m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i)
                img.insert(m.row(i));
            for (const auto& r : img.rows())
                o.image.push_back(combine(ts.classes, r, ts.basis.size()));
            o.rank = img.rank();
        }
        out.emplace(src, std::move(o));
    }

    PageState next = state;
    next.page_ = state.page() + 1;
    next.stats_.clear();

    next.core_ = shrink(state.pres_, state.core_, d);

    for (auto& [deg, slot] : next.slots_) {
        TurnStats st;
        st.old_dim = slot.classes.size();
        st.rank_out = out.at(deg).rank;

        gf2::Echelon bounds(slot.basis.size());
        for (const auto& b : slot.boundaries)
            bounds.insert(b);
        auto in = out.find(deg - d.shift());
        if (in != out.end()) {
            st.rank_in = in->second.rank;
            for (const auto& v : in->second.image)
                bounds.insert(v);
        }
        gf2::Echelon reps(slot.basis.size());
        for (const auto& k : out.at(deg).kernel)
            reps.insert(bounds.reduce(k));

        slot.boundaries = bounds.rows();
        slot.classes = reps.rows();
        st.new_dim = slot.classes.size();
        next.stats_.emplace(deg, st);
    }
    return next;
}

PageState run_to_einfty(const Presentation& p, const std::vector<DifferentialSpec>& diffs, const Window& win)
{
    for (std::size_t i = 1; i < diffs.size(); ++i)
        if (diffs[i].page() <= diffs[i - 1].page())
            throw SpecError("differentials must be listed in strictly increasing page order");
    PageState st = PageState::initial(p, win);
    for (const auto& d : diffs)
        st = turn_page(st.skip_to(d.page()), d);
    return st;
}

SpectralSequence localized_motivic_anss()
{
    Presentation p({
        {"tau", {0, 0, -1}, false, false},
        {"alpha1", {1, 1, 1}, true, false},
        {"alpha3", {5, 1, 3}, false, false},
        {"alpha4", {7, 1, 4}, false, true},
    });
    DifferentialSpec d3(p, 3, {{"alpha3", F2Sum(p.monomial({{"tau", 1}, {"alpha1", 4}}))}});
    return {std::move(p), {std::move(d3)}};
}

}  // namespace motivic
