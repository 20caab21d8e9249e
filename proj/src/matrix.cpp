#include "erasurelab/matrix.hpp"

#include <algorithm>

namespace erasurelab {

GfMatrix GfMatrix::from_rows(const Field& f, const std::vector<std::vector<int>>& rows) {
    if (rows.empty() || rows[0].empty()) throw EmptyMatrix("matrix needs at least one entry");
    std::size_t cols = rows[0].size();
    GfMatrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidParams("ragged row lengths");
        for (std::size_t c = 0; c < cols; ++c) {
            if (!f.is_element(rows[r][c]))
                throw InvalidParams("entry " + std::to_string(rows[r][c]) +
                                    " is not an element of GF(" + std::to_string(f.q()) + ")");
            m.set(r, c, Elem(rows[r][c]));
        }
    }
    return m;
}

GfMatrix GfMatrix::identity(const Field& f, std::size_t n) {
    GfMatrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

namespace detail {

RrefResult rref_generic(const GfMatrix& m) {
    const Field& f = m.field();
    GfMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        std::size_t sel = pr;
        while (sel < a.rows() && a.at(sel, c) == 0) ++sel;
        if (sel == a.rows()) continue;
        if (sel != pr) {
            for (std::size_t j = 0; j < a.cols(); ++j) {
                Elem t = a.at(pr, j);
                a.set(pr, j, a.at(sel, j));
                a.set(sel, j, t);
            }
        }
        Elem piv_inv = f.inv(a.at(pr, c));
        for (std::size_t j = c; j < a.cols(); ++j) a.set(pr, j, f.mul(a.at(pr, j), piv_inv));
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pr) continue;
            Elem factor = a.at(r, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.set(r, j, f.sub(a.at(r, j), f.mul(factor, a.at(pr, j))));
        }
        pivots.push_back(c);
        ++pr;
    }
    return {std::move(a), pivots.size(), std::move(pivots)};
}

RrefResult rref_gf2(const GfMatrix& m) {
    if (m.field().q() != 2 || m.cols() > 64)
        throw InvalidParams("rref_gf2 requires q = 2 and cols <= 64");
    std::vector<std::uint64_t> rows(m.rows(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.at(r, c)) rows[r] |= std::uint64_t(1) << c;

    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    for (std::size_t c = 0; c < m.cols() && pr < m.rows(); ++c) {
        std::uint64_t bit = std::uint64_t(1) << c;
        std::size_t sel = pr;
        while (sel < m.rows() && !(rows[sel] & bit)) ++sel;
        if (sel == m.rows()) continue;
        std::swap(rows[pr], rows[sel]);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != pr && (rows[r] & bit)) rows[r] ^= rows[pr];
        pivots.push_back(c);
        ++pr;
    }
    GfMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out.set(r, c, Elem((rows[r] >> c) & 1));
    return {std::move(out), pivots.size(), std::move(pivots)};
}

}  // namespace detail

RrefResult rref(const GfMatrix& m) {
    if (m.field().q() == 2 && m.cols() <= 64) return detail::rref_gf2(m);
    return detail::rref_generic(m);
}

std::size_t rank(const GfMatrix& m) { return rref(m).rank; }

GfMatrix kernel_basis(const GfMatrix& m) {
    const Field& f = m.field();
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;

    GfMatrix basis(f, m.cols() - rr.rank, m.cols());
    std::size_t row = 0;
    for (std::size_t free_c = 0; free_c < m.cols(); ++free_c) {
        if (is_pivot[free_c]) continue;
        basis.set(row, free_c, 1);
        for (std::size_t i = 0; i < rr.rank; ++i)
            basis.set(row, rr.pivots[i], f.neg(rr.matrix.at(i, free_c)));
        ++row;
    }
    return basis;
}

GfMatrix column_submatrix(const GfMatrix& m, const std::vector<std::size_t>& cols) {
    std::vector<std::size_t> sorted = cols;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= m.cols())
            throw IndexOutOfRange("column index " + std::to_string(sorted[i]));
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw InvalidParams("duplicate column index " + std::to_string(sorted[i]));
    }
    GfMatrix out(m.field(), m.rows(), sorted.size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t j = 0; j < sorted.size(); ++j) out.set(r, j, m.at(r, sorted[j]));
    return out;
}

GfMatrix column_submatrix(const GfMatrix& m, CoordSet cols) {
    std::vector<std::size_t> idx;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (cols & (CoordSet(1) << c)) idx.push_back(c);
    return column_submatrix(m, idx);
}

std::size_t column_rank(const GfMatrix& m, CoordSet cols) {
    const Field& f = m.field();
    if (f.q() == 2 && m.rows() <= 64) {
        // columns as bit vectors of length rows; xor basis keyed on lowest bit
        std::uint64_t basis[64] = {0};
        std::size_t rk = 0;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (!(cols & (CoordSet(1) << c))) continue;
            std::uint64_t v = 0;
            for (std::size_t r = 0; r < m.rows(); ++r)
                if (m.at(r, c)) v |= std::uint64_t(1) << r;
            while (v) {
                int low = __builtin_ctzll(v);
                if (!basis[low]) {
                    basis[low] = v;
                    ++rk;
                    break;
                }
                v ^= basis[low];
            }
        }
        return rk;
    }
    return rank(column_submatrix(m, cols));
}

}  // namespace erasurelab
