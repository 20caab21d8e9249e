#include "erasurelab/catalog.hpp"

#include <algorithm>

#include "erasurelab/ghw.hpp"

namespace erasurelab {

LinearCode hamming(int r) {
    if (r < 2 || r > 4) throw InvalidParams("hamming: supported redundancy is 2..4");
    const Field& f = make_field(2);
    const int n = (1 << r) - 1, k = n - r;
    std::vector<std::vector<int>> rows;
    int col = 0;
    for (int v = 1; v < (1 << r); ++v) {
        if (__builtin_popcount(v) < 2) continue;
        std::vector<int> row(n, 0);
        row[col] = 1;
        for (int b = 0; b < r; ++b) row[k + b] = (v >> (r - 1 - b)) & 1;
        rows.push_back(std::move(row));
        ++col;
    }
    return LinearCode::from_generator(f, rows);
}

LinearCode repetition(int n, int q) {
    if (n < 1) throw InvalidParams("repetition: n must be >= 1");
    const Field& f = make_field(q);
    return LinearCode::from_generator(f, {std::vector<int>(n, 1)});
}

LinearCode single_parity(int n, int q) {
    if (n < 2) throw InvalidParams("single_parity: n must be >= 2");
    const Field& f = make_field(q);
    std::vector<std::vector<int>> rows(n - 1, std::vector<int>(n, 0));
    for (int i = 0; i < n - 1; ++i) {
        rows[i][i] = 1;
        rows[i][n - 1] = f.neg(1);
    }
    return LinearCode::from_generator(f, rows);
}

LinearCode full_space(int n, int q) {
    if (n < 1) throw InvalidParams("full_space: n must be >= 1");
    return LinearCode::from_generator(GfMatrix::identity(make_field(q), n));
}

LinearCode reed_solomon(int n, int k, int q) {
    if (k < 1 || k > n) throw InvalidParams("reed_solomon: need 1 <= k <= n");
    if (n > q) throw InvalidParams("reed_solomon: need n <= q for distinct evaluation points");
    const Field& f = make_field(q);
    std::vector<std::vector<int>> rows(k, std::vector<int>(n));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) rows[i][j] = f.pow(Elem(j), i);
    return LinearCode::from_generator(f, rows);
}

LinearCode search_systematic_amds(int n, int k, std::uint64_t expected_a1) {
    if (k < 1 || k >= n || n - k > 8 || std::uint64_t(k) * (n - k) > 24)
        throw InvalidParams("search_systematic_amds: parameters out of search range");
    const Field& f = make_field(2);
    const int m = n - k;  // parity width; AMDS means d_1 = m
    const int bits = k * m;

    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << bits); ++mask) {
        // bit for P(r, c) sits at weight 2^(bits - 1 - (r*m + c)), so
        // ascending masks scan P matrices in row-major lexicographic order
        std::vector<std::uint32_t> prow(k);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < m; ++c)
                if (mask & (std::uint64_t(1) << (bits - 1 - (r * m + c))))
                    prow[r] |= std::uint32_t(1) << c;

        std::uint64_t weight_d = 0;  // words of weight exactly m
        std::uint32_t support = 0;
        int dmin = n;
        for (std::uint32_t msg = 1; msg < (std::uint32_t(1) << k); ++msg) {
            std::uint32_t parity = 0;
            for (int r = 0; r < k; ++r)
                if (msg & (std::uint32_t(1) << r)) parity ^= prow[r];
            int w = __builtin_popcount(msg) + __builtin_popcount(parity);
            dmin = std::min(dmin, w);
            if (w == m) ++weight_d;
            support |= msg | (parity << k);
        }
        if (dmin != m || weight_d != expected_a1) continue;
        if (support != (std::uint32_t(1) << n) - 1) continue;  // want d_k = n

        std::vector<std::vector<int>> rows(k, std::vector<int>(n, 0));
        for (int r = 0; r < k; ++r) {
            rows[r][r] = 1;
            for (int c = 0; c < m; ++c) rows[r][k + c] = (prow[r] >> c) & 1;
        }
        return LinearCode::from_generator(f, rows);
    }
    throw SearchFailed("no systematic AMDS witness for [" + std::to_string(n) + "," +
                       std::to_string(k) + "] with A^1_{n-k} = " + std::to_string(expected_a1));
}

namespace {

CatalogEntry make_entry(std::string name, LinearCode code, std::vector<int> hierarchy,
                        std::string label, std::uint64_t a1) {
    return CatalogEntry{std::move(name), std::move(code), std::move(hierarchy), std::move(label),
                        a1};
}

}  // namespace

std::vector<CatalogEntry> binary_amds_six() {
    struct Witness {
        int n, k;
        std::uint64_t a1;
        std::vector<std::vector<int>> rows;
        std::vector<int> hierarchy;
    };
    // smallest row-major systematic witnesses; regenerated from
    // search_systematic_amds by the catalog tests
    static const std::vector<Witness> witnesses = {
        {5, 2, 2, {{1, 0, 0, 1, 1}, {0, 1, 1, 0, 1}}, {3, 5}},
        {6, 2, 3, {{1, 0, 0, 1, 1, 1}, {0, 1, 1, 0, 1, 1}}, {4, 6}},
        {6, 3, 4, {{1, 0, 0, 0, 1, 1}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 1, 1, 0}}, {3, 5, 6}},
        {7, 3, 7,
         {{1, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 1, 0, 1, 1}, {0, 0, 1, 1, 1, 0, 1}},
         {4, 6, 7}},
        {7, 4, 7,
         {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0},
          {0, 0, 0, 1, 1, 1, 1}},
         {3, 5, 6, 7}},
        {8, 4, 14,
         {{1, 0, 0, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 1, 0, 1, 1}, {0, 0, 1, 0, 1, 1, 0, 1},
          {0, 0, 0, 1, 1, 1, 1, 0}},
         {4, 6, 7, 8}},
    };
    const Field& f = make_field(2);
    std::vector<CatalogEntry> out;
    for (const Witness& w : witnesses) {
        std::string name = "amds-" + std::to_string(w.n) + "-" + std::to_string(w.k);
        out.push_back(make_entry(name, LinearCode::from_generator(f, w.rows), w.hierarchy, "AMDS",
                                 w.a1));
    }
    return out;
}

const std::vector<CatalogEntry>& standard_catalog() {
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> all;
        all.push_back(make_entry("paper32",
                                 LinearCode::from_generator(make_field(2), {{1, 0, 0}, {0, 1, 1}}),
                                 {1, 3}, "AMDS", 1));
        all.push_back(make_entry("parity-3-2", single_parity(3, 2), {2, 3}, "MDS", 3));
        all.push_back(make_entry("parity-5-4", single_parity(5, 2), {2, 3, 4, 5}, "MDS", 10));
        all.push_back(make_entry("parity-4-3-q3", single_parity(4, 3), {2, 3, 4}, "MDS", 6));
        all.push_back(make_entry("hamming-7-4", hamming(3), {3, 5, 6, 7}, "AMDS", 7));
        all.push_back(make_entry("repetition-5-2", repetition(5, 2), {5}, "MDS", 1));
        all.push_back(make_entry("repetition-4-3", repetition(4, 3), {4}, "MDS", 1));
        all.push_back(make_entry("full-3-2", full_space(3, 2), {1, 2, 3}, "MDS", 3));
        all.push_back(make_entry("full-2-3", full_space(2, 3), {1, 2}, "MDS", 2));
        all.push_back(make_entry("rs-4-2-5", reed_solomon(4, 2, 5), {3, 4}, "MDS", 4));
        all.push_back(make_entry("rs-5-3-5", reed_solomon(5, 3, 5), {3, 4, 5}, "MDS", 10));
        all.push_back(make_entry("rs-4-2-4", reed_solomon(4, 2, 4), {3, 4}, "MDS", 4));
        for (CatalogEntry& e : binary_amds_six()) all.push_back(std::move(e));
        return all;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
    for (const CatalogEntry& e : standard_catalog())
        if (e.name == name) return e;
    throw InvalidParams("unknown catalog entry: " + name);
}

std::vector<const CatalogEntry*> catalog_group(const std::string& name) {
    std::vector<const CatalogEntry*> out;
    if (name == "amds6") {
        for (const CatalogEntry& e : standard_catalog())
            if (e.name.rfind("amds-", 0) == 0) out.push_back(&e);
        return out;
    }
    if (name == "all") {
        for (const CatalogEntry& e : standard_catalog()) out.push_back(&e);
        return out;
    }
    out.push_back(&catalog_entry(name));
    return out;
}

}  // namespace erasurelab
