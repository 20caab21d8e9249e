#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "erasurelab/code.hpp"

namespace erasurelab {

/// A named corpus code together with its expected profile; the expectations
/// double as frozen test oracles.
struct CatalogEntry {
    std::string name;
    LinearCode code;
    std::vector<int> expected_hierarchy;
    std::string expected_label;          // MDS / AMDS / ...
    std::uint64_t expected_a1_d1 = 0;    // A^1_{d_1}
};

/// Binary Hamming code of redundancy r as [2^r - 1, 2^r - 1 - r, 3], in
/// systematic form [I_k | P] with the weight >= 2 parity columns in
/// increasing binary order.
LinearCode hamming(int r);

LinearCode repetition(int n, int q);

/// [n, n-1]_q code whose codewords sum to zero: [I_{n-1} | -1].
LinearCode single_parity(int n, int q);

LinearCode full_space(int n, int q);

/// Vandermonde generator over the first n field elements; requires
/// k <= n <= q. The result is MDS.
LinearCode reed_solomon(int n, int k, int q);

/// Exhaustive search for the lexicographically smallest systematic binary
/// [n,k] generator [I_k | P] that is AMDS with full support and
/// A^1_{n-k} = expected_a1. P matrices are ordered by their row-major bit
/// string. Throws SearchFailed when no witness exists.
LinearCode search_systematic_amds(int n, int k, std::uint64_t expected_a1);

/// The six binary systematic AMDS codes of minimum distance >= 3, with
/// (n, k, A^1_{n-k}) = (5,2,2), (6,2,3), (6,3,4), (7,3,7), (7,4,7), (8,4,14).
/// Witness generators are cached; a test regenerates them with
/// search_systematic_amds.
std::vector<CatalogEntry> binary_amds_six();

/// Every named catalog entry (classical families plus the six AMDS codes).
const std::vector<CatalogEntry>& standard_catalog();

/// Lookup by name; InvalidParams when unknown. "amds6" selects the six AMDS
/// entries as a group.
const CatalogEntry& catalog_entry(const std::string& name);
std::vector<const CatalogEntry*> catalog_group(const std::string& name);

}  // namespace erasurelab
