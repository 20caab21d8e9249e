#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erasurelab/matrix.hpp"
#include "erasurelab/simulate.hpp"  // SplitMix64 for the generators
#include "support/oracle.hpp"

using namespace erasurelab;

namespace {

GfMatrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, SplitMix64& rng) {
    GfMatrix m(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m.set(r, c, Elem(rng.next_below(std::uint64_t(f.q()))));
    return m;
}

}  // namespace

TEST_CASE("rref examples") {
    const Field& f2 = make_field(2);
    SUBCASE("duplicate rows over GF(2)") {
        auto rr = rref(GfMatrix::from_rows(f2, {{1, 0}, {1, 0}}));
        CHECK(rr.rank == 1);
        CHECK(rr.pivots == std::vector<std::size_t>{0});
    }
    SUBCASE("identity is a fixed point") {
        GfMatrix id = GfMatrix::identity(f2, 3);
        auto rr = rref(id);
        CHECK(rr.rank == 3);
        CHECK(rr.matrix == id);
    }
    SUBCASE("proportional rows over GF(3)") {
        // row2 = 2 * row1; oracle: the row span has 3 elements per dimension
        GfMatrix m = GfMatrix::from_rows(make_field(3), {{1, 2}, {2, 1}});
        CHECK(oracle::rank_by_row_span(m) == 1);
        CHECK(rank(m) == 1);
    }
}

TEST_CASE("kernel_basis examples") {
    const Field& f2 = make_field(2);
    SUBCASE("full-rank square matrix has a trivial kernel") {
        CHECK(kernel_basis(GfMatrix::identity(f2, 3)).rows() == 0);
    }
    SUBCASE("zero matrix kernel is everything") {
        GfMatrix z(f2, 2, 3);
        GfMatrix ker = kernel_basis(z);
        CHECK(ker.rows() == 3);
        CHECK(rank(ker) == 3);
    }
    SUBCASE("single parity equation over GF(2)") {
        GfMatrix m = GfMatrix::from_rows(f2, {{1, 1, 0}});
        CHECK(oracle::kernel_dim_by_enumeration(m) == 2);  // 4 of the 8 vectors
        CHECK(kernel_basis(m).rows() == 2);
    }
}

TEST_CASE("column_submatrix") {
    const Field& f2 = make_field(2);
    GfMatrix g = GfMatrix::from_rows(f2, {{1, 0, 0}, {0, 1, 1}});
    SUBCASE("all columns reproduce the matrix") {
        CHECK(column_submatrix(g, std::vector<std::size_t>{0, 1, 2}) == g);
    }
    SUBCASE("empty selection") {
        GfMatrix sub = column_submatrix(g, std::vector<std::size_t>{});
        CHECK(sub.cols() == 0);
        CHECK(rank(sub) == 0);
    }
    SUBCASE("columns {1,2} of the running example") {
        GfMatrix sub = column_submatrix(g, std::vector<std::size_t>{1, 2});
        CHECK(sub == GfMatrix::from_rows(f2, {{0, 0}, {1, 1}}));
        CHECK(rank(sub) == 1);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(column_submatrix(g, std::vector<std::size_t>{3}), IndexOutOfRange);
        CHECK_THROWS_AS(column_submatrix(g, std::vector<std::size_t>{1, 1}), InvalidParams);
    }
}

TEST_CASE("rank-nullity, submatrix rank and idempotence on random matrices") {
    for (int q : {2, 3, 4, 5, 8, 9}) {
        const Field& f = make_field(q);
        SplitMix64 rng(40 + q);
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t rows = 1 + rng.next_below(5);
            std::size_t cols = 1 + rng.next_below(6);
            GfMatrix m = random_matrix(f, rows, cols, rng);

            auto rr = rref(m);
            CHECK(rr.rank + kernel_basis(m).rows() == cols);
            CHECK(std::is_sorted(rr.pivots.begin(), rr.pivots.end()));

            // rref is idempotent
            auto rr2 = rref(rr.matrix);
            CHECK(rr2.matrix == rr.matrix);
            CHECK(rr2.rank == rr.rank);

            // every kernel row is annihilated
            GfMatrix ker = kernel_basis(m);
            for (std::size_t b = 0; b < ker.rows(); ++b) {
                for (std::size_t r = 0; r < rows; ++r) {
                    Elem acc = 0;
                    for (std::size_t c = 0; c < cols; ++c)
                        acc = f.add(acc, f.mul(m.at(r, c), ker.at(b, c)));
                    CHECK(acc == 0);
                }
            }

            // rank of a column selection never beats min(rank, |S|)
            CoordSet sel = CoordSet(rng.next()) & full_set(int(cols));
            std::size_t sub_rank = column_rank(m, sel);
            CHECK(sub_rank <= rr.rank);
            CHECK(sub_rank <= std::size_t(set_size(sel)));
            CHECK(sub_rank == rank(column_submatrix(m, sel)));

            // small instances also get the span-counting oracle
            if (rows <= 3 && cols <= 4 && q <= 4) {
                CHECK(rr.rank == oracle::rank_by_row_span(m));
                CHECK(kernel_basis(m).rows() == oracle::kernel_dim_by_enumeration(m));
            }
        }
    }
}

TEST_CASE("bit-packed GF(2) elimination agrees with the generic path exactly") {
    const Field& f2 = make_field(2);
    SplitMix64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t rows = 1 + rng.next_below(6);
        std::size_t cols = 1 + rng.next_below(8);
        GfMatrix m = random_matrix(f2, rows, cols, rng);
        auto a = detail::rref_generic(m);
        auto b = detail::rref_gf2(m);
        CHECK(a.matrix == b.matrix);
        CHECK(a.rank == b.rank);
        CHECK(a.pivots == b.pivots);
    }
}
