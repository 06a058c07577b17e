#include "motivic/gf2.h"

#include <algorithm>

namespace motivic::gf2 {

bool Matrix::is_zero() const
{
    return std::all_of(rows_.begin(), rows_.end(), [](const Vec& r) { return r.none(); });
}

Vec Echelon::reduce(Vec v) const
{
    for (const auto& r : rows_)
        if (v[pivot(r)])
            v ^= r;
    return v;
}

bool Echelon::insert(Vec v)
{
    v = reduce(std::move(v));
    std::size_t p = pivot(v);
    if (p == Vec::npos)
        return false;
    for (auto& r : rows_)
        if (r[p])
            r ^= v;
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), p, [](const Vec& r, std::size_t q) { return pivot(r) < q; });
    rows_.insert(pos, std::move(v));
    return true;
}

std::size_t rank(const Matrix& m)
{
    Echelon e(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        e.insert(m.row(i));
    return e.rank();
}

std::vector<Vec> left_kernel(const Matrix& m)
{
    /* eliminate on [row | identity]; rows that vanish on the left carry kernel combinations */
    const std::size_t n = m.rows(), c = m.cols();
    std::vector<Vec> aug;
    aug.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vec v(c + n);
        for (std::size_t j = 0; j < c; ++j)
            v[j] = m.get(i, j);
        v[c + i] = true;
        aug.push_back(std::move(v));
    }
    std::size_t next = 0;
    for (std::size_t col = 0; col < c && next < n; ++col) {
        std::size_t piv = next;
        while (piv < n && !aug[piv][col])
            ++piv;
        if (piv == n)
            continue;
        std::swap(aug[next], aug[piv]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != next && aug[i][col])
                aug[i] ^= aug[next];
        ++next;
    }
    Echelon ker(n);
    for (std::size_t i = next; i < n; ++i) {
        Vec k(n);
        for (std::size_t j = 0; j < n; ++j)
            k[j] = aug[i][c + j];
        ker.insert(std::move(k));
    }
    return ker.rows();
}

}  // namespace motivic::gf2
