#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "erasurelab/matrix.hpp"

namespace erasurelab {

/// An [n,k]_q linear code given by a full-rank generator matrix. The
/// generator is stored exactly as supplied (not normalized). Immutable.
class LinearCode {
  public:
    static LinearCode from_generator(const Field& f, const std::vector<std::vector<int>>& rows);
    static LinearCode from_generator(GfMatrix generator);

    const Field& field() const { return generator_.field(); }
    int q() const { return field().q(); }
    int n() const { return int(generator_.cols()); }
    int k() const { return int(generator_.rows()); }
    const GfMatrix& generator() const { return generator_; }

    std::vector<Elem> encode(const std::vector<Elem>& message) const;

    /// dim [0]_R = k - rank of the generator columns outside R. Coordinates
    /// in R are given as a 0-based bitmask; external formats are 1-based.
    int dim_zero_class(CoordSet R) const;

    /// Throws BudgetExceeded unless q^k <= budget.
    void check_enumeration_budget(std::uint64_t budget) const;

    bool operator==(const LinearCode& o) const { return generator_ == o.generator_; }

  private:
    explicit LinearCode(GfMatrix g) : generator_(std::move(g)) {}
    GfMatrix generator_;
};

/// Classification data for a code: weight distribution, Singleton defects and
/// the separability labels built from the weight hierarchy.
struct CodeProfile {
    std::vector<std::uint64_t> weights;  // W_0..W_n (empty if not computed)
    int d1 = 0;                          // minimum distance
    std::vector<int> defects;            // s_1..s_k
    bool mds = false;                    // s_1 == 0
    bool amds = false;                   // s_1 == 1
    std::optional<int> pjmds;            // min{i : s_i = 0}
    std::optional<int> pjamds;           // min{i : s_i = 1}
    bool full_support = false;           // d_k == n
    std::string label;                   // primary classification
};

/// Exact weight distribution W_0..W_n by exhaustive codeword enumeration.
/// Throws BudgetExceeded when q^k > budget.
std::vector<std::uint64_t> weight_distribution(const LinearCode& c,
                                               std::uint64_t budget = std::uint64_t(1) << 24);

/// Fills every profile field from the exact weight hierarchy (d_1..d_k).
/// The weight distribution is computed when q^k is within budget, otherwise
/// left empty.
CodeProfile classify(const LinearCode& c, const std::vector<int>& hierarchy,
                     std::uint64_t weight_budget = std::uint64_t(1) << 24);

// --- code file format -------------------------------------------------------
//
// Text format: first significant line "q n k", then k lines of n integers in
// 0..q-1 (generator rows). '#' starts a comment. Parsing rejects
// rank-deficient generators.

LinearCode parse_code_file(std::istream& in);
LinearCode load_code_file(const std::string& path);
void write_code_file(std::ostream& out, const LinearCode& c, const std::string& comment = "");
void save_code_file(const std::string& path, const LinearCode& c, const std::string& comment = "");

}  // namespace erasurelab
