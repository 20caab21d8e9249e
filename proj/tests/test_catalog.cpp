#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "erasurelab/catalog.hpp"
#include "erasurelab/erasure.hpp"

using namespace erasurelab;

TEST_CASE("constructor examples") {
    SUBCASE("hamming") {
        LinearCode h = hamming(3);
        CHECK(h.n() == 7);
        CHECK(h.k() == 4);
        CHECK(hierarchy(h).d == std::vector<int>{3, 5, 6, 7});
        CHECK(hamming(2).n() == 3);
        CHECK_THROWS_AS(hamming(1), InvalidParams);
        CHECK_THROWS_AS(hamming(5), InvalidParams);
    }
    SUBCASE("single parity [3,2] is the even-weight MDS code") {
        LinearCode c = single_parity(3, 2);
        CHECK(c.generator() == GfMatrix::from_rows(make_field(2), {{1, 0, 1}, {0, 1, 1}}));
        CodeProfile p = classify(c, hierarchy(c).d);
        CHECK(p.mds);
        CHECK(p.d1 == 2);
    }
    SUBCASE("repetition") {
        LinearCode c = repetition(5, 2);
        CHECK(c.k() == 1);
        CodeProfile p = classify(c, hierarchy(c).d);
        CHECK(p.d1 == 5);
        CHECK(p.mds);
    }
    SUBCASE("reed-solomon") {
        LinearCode rs = reed_solomon(4, 2, 5);
        CodeProfile p = classify(rs, hierarchy(rs).d);
        CHECK(p.d1 == 3);  // n - k + 1
        CHECK(p.mds);
        CHECK(classify(reed_solomon(3, 3, 3), hierarchy(reed_solomon(3, 3, 3)).d).mds);
        CHECK_THROWS_AS(reed_solomon(4, 2, 3), InvalidParams);
    }
    SUBCASE("full space") {
        CHECK(full_space(3, 2).generator() == GfMatrix::identity(make_field(2), 3));
    }
}

TEST_CASE("the six binary AMDS codes") {
    std::vector<CatalogEntry> six = binary_amds_six();
    REQUIRE(six.size() == 6);

    const std::uint64_t expect_a1[] = {2, 3, 4, 7, 7, 14};
    const std::pair<int, int> expect_nk[] = {{5, 2}, {6, 2}, {6, 3}, {7, 3}, {7, 4}, {8, 4}};

    for (std::size_t idx = 0; idx < 6; ++idx) {
        const CatalogEntry& e = six[idx];
        CAPTURE(e.name);
        CHECK(e.code.n() == expect_nk[idx].first);
        CHECK(e.code.k() == expect_nk[idx].second);
        CHECK(e.expected_a1_d1 == expect_a1[idx]);

        CodeAnalysis a = analyze(e.code);
        CHECK(a.hierarchy.d == e.expected_hierarchy);
        CHECK(a.profile.amds);
        CHECK(a.profile.full_support);
        CHECK(a.profile.d1 == e.code.n() - e.code.k());
        CHECK(a.profile.d1 >= 3);
        CHECK(a.spectra.at(1, a.profile.d1) == mpz_class(expect_a1[idx]));

        // the cached witness regenerates from the exhaustive search
        LinearCode searched = search_systematic_amds(e.code.n(), e.code.k(), expect_a1[idx]);
        CHECK(searched == e.code);

        // AMDS closed forms agree with the exact engine
        REQUIRE(a.profile.pjmds.has_value());
        int s = *a.profile.pjmds;
        std::vector<mpz_class> higher;
        for (int i = 1; i <= s - 2; ++i)
            higher.push_back(a.spectra.at(i + 1, e.code.n() - e.code.k() + i));
        CHECK(amds_closed_form(e.code.n(), e.code.k(), 2, expect_a1[idx], s, higher,
                               ErrorKind::amb)
                  .Q == a.q_amb.Q);
        CHECK(amds_closed_form(e.code.n(), e.code.k(), 2, expect_a1[idx], s, higher,
                               ErrorKind::dec)
                  .Q == a.q_dec.Q);
    }
}

TEST_CASE("search rejects impossible targets") {
    CHECK_THROWS_AS(search_systematic_amds(5, 2, 7), SearchFailed);
}

TEST_CASE("every catalog entry matches its declared profile") {
    for (const CatalogEntry& e : standard_catalog()) {
        CAPTURE(e.name);
        CodeAnalysis a = analyze(e.code);
        CHECK(a.hierarchy.d == e.expected_hierarchy);
        CHECK(a.profile.label == e.expected_label);
        CHECK(a.spectra.at(1, a.hierarchy[1]) == mpz_class(e.expected_a1_d1));
        CHECK(a.profile.full_support);
    }
}

TEST_CASE("catalog lookup") {
    CHECK(catalog_entry("paper32").code.n() == 3);
    CHECK_THROWS_AS(catalog_entry("nope"), InvalidParams);
    CHECK(catalog_group("amds6").size() == 6);
    CHECK(catalog_group("hamming-7-4").size() == 1);
    CHECK(catalog_group("all").size() == standard_catalog().size());
}
