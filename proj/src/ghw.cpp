#include "erasurelab/ghw.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace erasurelab {

namespace {

// Incremental column echelon over F_q^k with O(1) undo: inserted vectors are
// normalized and keyed by leading position, existing basis vectors are never
// rewritten.
class ColumnEchelon {
  public:
    ColumnEchelon(const Field& f, int k) : f_(&f), k_(k), by_lead_(k), rank_(0) {}

    // Returns the slot filled by v, or -1 when v is dependent.
    int insert(std::vector<Elem> v) {
        for (int t = 0; t < k_; ++t) {
            if (v[t] == 0) continue;
            if (!by_lead_[t].empty()) {
                Elem factor = v[t];
                const std::vector<Elem>& b = by_lead_[t];
                for (int s = t; s < k_; ++s) v[s] = f_->sub(v[s], f_->mul(factor, b[s]));
                continue;
            }
            Elem inv = f_->inv(v[t]);
            for (int s = t; s < k_; ++s) v[s] = f_->mul(v[s], inv);
            by_lead_[t] = std::move(v);
            ++rank_;
            return t;
        }
        return -1;
    }

    void erase(int slot) {
        by_lead_[slot].clear();
        --rank_;
    }

    int rank() const { return rank_; }

  private:
    const Field* f_;
    int k_;
    std::vector<std::vector<Elem>> by_lead_;
    int rank_;
};

std::vector<Elem> generator_column(const LinearCode& c, int j) {
    std::vector<Elem> v(c.k());
    for (int t = 0; t < c.k(); ++t) v[t] = c.generator().at(t, j);
    return v;
}

// Classify every subset of columns idx..n-1 on top of the current echelon
// state; subsets are visited in lexicographic order of inclusion.
void classify_subsets(const LinearCode& c, int idx, int included, ColumnEchelon& ech,
                      std::vector<std::vector<std::uint64_t>>& acc) {
    const int n = c.n(), k = c.k();
    if (idx == n) {
        ++acc[k - ech.rank()][n - included];
        return;
    }
    classify_subsets(c, idx + 1, included, ech, acc);  // column idx erased
    int slot = ech.insert(generator_column(c, idx));
    classify_subsets(c, idx + 1, included + 1, ech, acc);
    if (slot >= 0) ech.erase(slot);
}

}  // namespace

SupportMatrix support_matrix(const LinearCode& c, int max_n) {
    const int n = c.n(), k = c.k();
    if (n > max_n)
        throw BudgetExceeded("support_matrix: n = " + std::to_string(n) + " exceeds budget " +
                             std::to_string(max_n));

    SupportMatrix out;
    out.n = n;
    out.k = k;
    out.a.assign(k + 1, std::vector<std::uint64_t>(n + 1, 0));

    int threads = effective_threads();
    if (n <= 14 || threads == 1) {
        ColumnEchelon ech(c.field(), k);
        classify_subsets(c, 0, 0, ech, out.a);
        return out;
    }

    // split the subset tree on the inclusion pattern of the leading columns;
    // counts merge by addition, so the result is independent of the split
    int prefix_bits = 1;
    while ((1 << prefix_bits) < 4 * threads && prefix_bits < n - 1) ++prefix_bits;
    const int tasks = 1 << prefix_bits;

    std::vector<std::vector<std::vector<std::uint64_t>>> local(
        threads, std::vector<std::vector<std::uint64_t>>(k + 1, std::vector<std::uint64_t>(n + 1, 0)));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (int prefix = w; prefix < tasks; prefix += threads) {
                ColumnEchelon ech(c.field(), k);
                int included = 0;
                for (int j = 0; j < prefix_bits; ++j) {
                    if (prefix & (1 << j)) {
                        ech.insert(generator_column(c, j));
                        ++included;
                    }
                }
                classify_subsets(c, prefix_bits, included, ech, local[w]);
            }
        });
    }
    for (auto& t : pool) t.join();
    for (int w = 0; w < threads; ++w)
        for (int i = 0; i <= k; ++i)
            for (int r = 0; r <= n; ++r) out.a[i][r] += local[w][i][r];
    return out;
}

void for_each_subspace(const Field& f, int k, int i,
                       const std::function<void(const std::vector<std::vector<Elem>>&)>& visit) {
    if (i < 0 || i > k) throw InvalidParams("subspace dimension out of range");
    if (i == 0) {
        visit({});
        return;
    }
    const int q = f.q();
    std::vector<int> pivots(i);
    for (int t = 0; t < i; ++t) pivots[t] = t;

    std::vector<std::vector<Elem>> rows(i, std::vector<Elem>(k, 0));
    while (true) {
        // free entries of the reduced echelon pattern for this pivot choice
        std::vector<bool> is_pivot(k, false);
        for (int p : pivots) is_pivot[p] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int t = 0; t < i; ++t)
            for (int col = pivots[t] + 1; col < k; ++col)
                if (!is_pivot[col]) free_pos.emplace_back(t, col);

        for (auto& row : rows) std::fill(row.begin(), row.end(), 0);
        for (int t = 0; t < i; ++t) rows[t][pivots[t]] = 1;

        std::vector<Elem> digits(free_pos.size(), 0);
        while (true) {
            visit(rows);
            std::size_t pos = 0;
            while (pos < digits.size() && digits[pos] == q - 1) {
                digits[pos] = 0;
                rows[free_pos[pos].first][free_pos[pos].second] = 0;
                ++pos;
            }
            if (pos == digits.size()) break;
            ++digits[pos];
            rows[free_pos[pos].first][free_pos[pos].second] = digits[pos];
        }

        // next pivot combination
        int t = i - 1;
        while (t >= 0 && pivots[t] == k - i + t) --t;
        if (t < 0) break;
        ++pivots[t];
        for (int s = t + 1; s < i; ++s) pivots[s] = pivots[s - 1] + 1;
    }
}

namespace {

CoordSet subcode_support(const LinearCode& c, const std::vector<std::vector<Elem>>& basis) {
    // supp(D) is the union of the supports of any basis of D
    const Field& f = c.field();
    CoordSet supp = 0;
    for (const auto& b : basis) {
        for (int j = 0; j < c.n(); ++j) {
            if (supp & (CoordSet(1) << j)) continue;
            Elem x = 0;
            for (int t = 0; t < c.k(); ++t)
                if (b[t] != 0) x = f.add(x, f.mul(b[t], c.generator().at(t, j)));
            if (x != 0) supp |= CoordSet(1) << j;
        }
    }
    return supp;
}

}  // namespace

SpectraMatrix spectra_matrix(const LinearCode& c, const mpz_class& per_dim_budget) {
    const int n = c.n(), k = c.k(), q = c.q();
    for (int i = 1; i <= k; ++i) {
        if (gaussian_binomial(k, i, q) > per_dim_budget)
            throw BudgetExceeded("spectra_matrix: [k choose " + std::to_string(i) +
                                 "]_q exceeds per-dimension budget");
    }
    SpectraMatrix out;
    out.n = n;
    out.k = k;
    out.A.assign(k + 1, std::vector<mpz_class>(n + 1, 0));
    out.A[0][0] = 1;
    for (int i = 1; i <= k; ++i) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        for_each_subspace(c.field(), k, i, [&](const std::vector<std::vector<Elem>>& basis) {
            ++counts[set_size(subcode_support(c, basis))];
        });
        for (int j = 0; j <= n; ++j) out.A[i][j] = counts[j];
    }
    return out;
}

WeightHierarchy hierarchy_from_support(const SupportMatrix& m) {
    WeightHierarchy h;
    for (int i = 1; i <= m.k; ++i) {
        int d = -1;
        for (int r = 0; r <= m.n; ++r) {
            if (m.a[i][r] > 0) {
                d = r;
                break;
            }
        }
        if (d < 0) throw Error("support matrix row " + std::to_string(i) + " is identically zero");
        h.d.push_back(d);
    }
    return h;
}

WeightHierarchy hierarchy_from_spectra(const SpectraMatrix& m) {
    WeightHierarchy h;
    for (int i = 1; i <= m.k; ++i) {
        int d = -1;
        for (int j = 0; j <= m.n; ++j) {
            if (m.A[i][j] > 0) {
                d = j;
                break;
            }
        }
        if (d < 0) throw Error("spectra matrix row " + std::to_string(i) + " is identically zero");
        h.d.push_back(d);
    }
    return h;
}

WeightHierarchy hierarchy(const LinearCode& c, int max_n, const mpz_class& per_dim_budget) {
    WeightHierarchy hs = hierarchy_from_support(support_matrix(c, max_n));
    WeightHierarchy ha = hierarchy_from_spectra(spectra_matrix(c, per_dim_budget));
    if (hs.d != ha.d) throw Error("weight hierarchy paths disagree");
    return hs;
}

std::vector<CoordSet> support_realizers(const LinearCode& c, int i,
                                        const mpz_class& per_dim_budget) {
    if (i < 1 || i > c.k()) throw InvalidParams("dimension out of range");
    if (gaussian_binomial(c.k(), i, c.q()) > per_dim_budget)
        throw BudgetExceeded("support_realizers: subspace count exceeds budget");

    // d_i = smallest support size seen over all i-dimensional subcodes
    std::set<CoordSet> realizers;
    int best = c.n() + 1;
    for_each_subspace(c.field(), c.k(), i, [&](const std::vector<std::vector<Elem>>& basis) {
        CoordSet supp = subcode_support(c, basis);
        int size = set_size(supp);
        if (size < best) {
            best = size;
            realizers.clear();
        }
        if (size == best) realizers.insert(supp);
    });
    return {realizers.begin(), realizers.end()};
}

std::uint64_t count_support_realizers(const LinearCode& c, int i, const mpz_class& per_dim_budget) {
    return support_realizers(c, i, per_dim_budget).size();
}

}  // namespace erasurelab
