#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <vector>

namespace motivic::gf2 {

using Vec = boost::dynamic_bitset<>;

/* Leading (lowest-index) nonzero column, or Vec::npos for the zero vector. */
inline std::size_t pivot(const Vec& v) { return v.find_first(); }

/* Dense row-major matrix over F_2. Rows are vectors in the target space. */
class Matrix
{
public:
    Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, Vec(cols)) {}

    std::size_t rows() const { return rows_.size(); }
    std::size_t cols() const { return cols_; }
    const Vec& row(std::size_t i) const { return rows_[i]; }
    Vec& row(std::size_t i) { return rows_[i]; }
    bool get(std::size_t i, std::size_t j) const { return rows_[i][j]; }
    void set(std::size_t i, std::size_t j, bool v = true) { rows_[i][j] = v; }
    bool is_zero() const;

private:
    std::size_t cols_;
    std::vector<Vec> rows_;
};

/* Subspace kept in reduced row echelon form: pivots are distinct and every
 * pivot column is zero in all other rows. */
class Echelon
{
public:
    explicit Echelon(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }

    /* Clears every pivot column of v. */
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const { return reduce(v).none(); }
    /* Returns false when v was already in the span. */
    bool insert(Vec v);

private:
    std::size_t dim_;
    std::vector<Vec> rows_;  // sorted by pivot
};

std::size_t rank(const Matrix& m);

/* Basis of {x : x^T M = 0}, i.e. combinations of rows summing to zero, in reduced echelon form. */
std::vector<Vec> left_kernel(const Matrix& m);

}  // namespace motivic::gf2
