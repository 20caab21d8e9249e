#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "erasurelab/combin.hpp"
#include "erasurelab/gf.hpp"

namespace erasurelab {

/// Dense matrix over a finite field, row-major. Matrices are values: all
/// operations below are pure functions of their inputs.
class GfMatrix {
  public:
    GfMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(&f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static GfMatrix from_rows(const Field& f, const std::vector<std::vector<int>>& rows);
    static GfMatrix identity(const Field& f, std::size_t n);

    const Field& field() const { return *field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Elem v) { a_[r * cols_ + c] = v; }

    const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }

    bool operator==(const GfMatrix& o) const {
        return field_->q() == o.field_->q() && rows_ == o.rows_ && cols_ == o.cols_ &&
               a_ == o.a_;
    }

  private:
    const Field* field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

struct RrefResult {
    GfMatrix matrix;
    std::size_t rank;
    std::vector<std::size_t> pivots;  // strictly increasing column indices
};

/// Reduced row echelon form. Pivot selection is the first nonzero entry
/// top-to-bottom in each column, so the result is deterministic.
RrefResult rref(const GfMatrix& m);

std::size_t rank(const GfMatrix& m);

/// Basis of the right null space {x : m x^T = 0}, one vector per row.
/// Row count is always cols(m) - rank(m).
GfMatrix kernel_basis(const GfMatrix& m);

/// Columns selected in ascending index order. Indices must be valid and
/// distinct (IndexOutOfRange / InvalidParams otherwise).
GfMatrix column_submatrix(const GfMatrix& m, const std::vector<std::size_t>& cols);
GfMatrix column_submatrix(const GfMatrix& m, CoordSet cols);

/// Rank of the submatrix formed by the columns in `cols`; avoids
/// materializing the submatrix.
std::size_t column_rank(const GfMatrix& m, CoordSet cols);

namespace detail {
// Both elimination paths are exposed so tests can pin their agreement.
// rref() dispatches to the bit-packed GF(2) path when q == 2 and cols <= 64.
RrefResult rref_generic(const GfMatrix& m);
RrefResult rref_gf2(const GfMatrix& m);
}  // namespace detail

}  // namespace erasurelab
