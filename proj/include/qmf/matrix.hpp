#ifndef QMF_MATRIX_HPP
#define QMF_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "qmf/rational.hpp"

namespace qmf {

// Dense row-major matrix over Q. Dimensions are fixed at construction;
// 0xN and Nx0 matrices are legal and behave as the empty linear map.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RationalMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    static RationalMatrix identity(std::size_t n);

    RationalMatrix transposed() const;
    RationalMatrix operator*(const RationalMatrix& rhs) const;

    std::vector<Rational> column(std::size_t j) const;
    void set_column(std::size_t j, const std::vector<Rational>& col);

    // Matrix-vector product (v as column vector).
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

struct RrefResult {
    RationalMatrix matrix;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

// Reduced row echelon form with the canonical pivot rule: scan columns left to
// right, pick the first row with a nonzero entry. rank(M) = pivots.size().
RrefResult rref(const RationalMatrix& m);

// Basis of {v : Mv = 0} in the rref parameterization: one vector per free
// column, with that free coordinate set to 1, the other free coordinates 0,
// and the pivot coordinates solved. Vectors are ordered by free column index.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

struct ColumnImage {
    std::vector<std::size_t> indices;        // pivot columns of rref(M), increasing
    std::vector<std::vector<Rational>> columns;  // the original columns at those indices
};

ColumnImage column_image_basis(const RationalMatrix& m);

// Incremental variant of column_image_basis for callers that generate columns
// one at a time (integer entries). Feeding the columns of M left to right
// selects exactly the pivot columns of rref(M). Internally fraction-free.
class IntColumnScanner {
public:
    explicit IntColumnScanner(std::size_t column_length) : len_(column_length) {}

    // Returns true iff the column is independent of everything seen so far
    // (i.e. it would be a pivot column).
    bool offer(const std::vector<Int>& column);

    std::size_t rank() const { return echelon_.size(); }

private:
    struct EchelonRow {
        std::size_t lead;
        std::vector<Int> v;  // primitive, v[lead] > 0
    };
    std::size_t len_;
    std::vector<EchelonRow> echelon_;  // sorted by lead
};

// Echelonizes the given vectors (as rows) against the coordinate order
// given by `order` (order[0] is treated as the leftmost column). Returns the
// rref rows translated back to natural coordinates, dropping zero rows.
std::vector<std::vector<Rational>> row_space_echelon(
    const std::vector<std::vector<Rational>>& vectors,
    const std::vector<std::size_t>& order);

}  // namespace qmf

#endif
