#include "erasurelab/simulate.hpp"

#include <cmath>
#include <thread>

#include "erasurelab/combin.hpp"

namespace erasurelab {

Received transmit(const LinearCode& c, const std::vector<Elem>& message, const ChannelConfig& cfg,
                  SplitMix64& rng) {
    if (cfg.p < 0 || cfg.p > 1) throw OutOfRange("channel p must lie in [0, 1]");
    Received out;
    out.symbols = c.encode(message);
    for (int j = 0; j < c.n(); ++j) {
        if (rng.next_double() < cfg.p) {
            out.erased |= CoordSet(1) << j;
            out.symbols[j] = 0;
        }
    }
    return out;
}

DecodeResult ml_erasure_decode(const LinearCode& c, const Received& received, SplitMix64& rng) {
    const Field& f = c.field();
    const int n = c.n(), k = c.k();
    if (int(received.symbols.size()) != n) throw InvalidParams("received word length != n");

    // messages m with m G[:, unerased] = y[unerased]: row-reduce the
    // transposed system [A | b] with one row per unerased coordinate
    std::vector<int> unerased;
    for (int j = 0; j < n; ++j)
        if (!(received.erased & (CoordSet(1) << j))) unerased.push_back(j);

    GfMatrix sys(f, unerased.size(), k + 1);
    for (std::size_t r = 0; r < unerased.size(); ++r) {
        for (int t = 0; t < k; ++t) sys.set(r, t, c.generator().at(t, unerased[r]));
        sys.set(r, k, received.symbols[unerased[r]]);
    }
    RrefResult rr = rref(sys);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == std::size_t(k))
            throw Inadmissible("received word matches no codeword");
    }

    // particular solution: pivot variables from the reduced system
    std::vector<Elem> particular(k, 0);
    for (std::size_t i = 0; i < rr.rank; ++i)
        particular[rr.pivots[i]] = rr.matrix.at(i, k);

    int dim = k - int(rr.rank);
    DecodeResult out;
    out.zero_class_dim = dim;
    out.ambiguous = dim > 0;
    out.message = particular;
    if (dim > 0) {
        // uniform pick over the solution coset: random combination of a
        // kernel basis of the coefficient part
        GfMatrix coeff(f, unerased.size(), k);
        for (std::size_t r = 0; r < unerased.size(); ++r)
            for (int t = 0; t < k; ++t) coeff.set(r, t, sys.at(r, t));
        GfMatrix ker = kernel_basis(coeff);
        for (std::size_t b = 0; b < ker.rows(); ++b) {
            Elem lambda = Elem(rng.next_below(std::uint64_t(c.q())));
            if (lambda == 0) continue;
            for (int t = 0; t < k; ++t)
                out.message[t] = f.add(out.message[t], f.mul(lambda, ker.at(b, t)));
        }
    }
    return out;
}

EstimateResult estimate(const LinearCode& c, const ChannelConfig& cfg,
                        std::uint64_t trial_budget) {
    if (cfg.trials < 1) throw InvalidParams("estimate: trials must be >= 1");
    if (cfg.trials > trial_budget) throw BudgetExceeded("estimate: trials exceed budget");
    if (cfg.p < 0 || cfg.p > 1) throw OutOfRange("channel p must lie in [0, 1]");

    const int k = c.k(), q = c.q();

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, std::uint64_t& amb,
                         std::uint64_t& err) {
        std::vector<Elem> message(k);
        for (std::uint64_t trial = lo; trial < hi; ++trial) {
            SplitMix64 rng = SplitMix64::substream(cfg.seed, trial);
            for (int t = 0; t < k; ++t) message[t] = Elem(rng.next_below(std::uint64_t(q)));
            Received rx = transmit(c, message, cfg, rng);
            DecodeResult dr = ml_erasure_decode(c, rx, rng);
            if (dr.ambiguous) ++amb;
            if (dr.message != message) ++err;
        }
    };

    std::uint64_t amb = 0, err = 0;
    int threads = effective_threads();
    if (threads > 1 && cfg.trials >= 4096) {
        std::vector<std::uint64_t> amb_w(threads, 0), err_w(threads, 0);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (cfg.trials + threads - 1) / threads;
        for (int w = 0; w < threads; ++w) {
            std::uint64_t lo = std::min<std::uint64_t>(w * chunk, cfg.trials);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, cfg.trials);
            pool.emplace_back(run_range, lo, hi, std::ref(amb_w[w]), std::ref(err_w[w]));
        }
        for (auto& t : pool) t.join();
        for (int w = 0; w < threads; ++w) {
            amb += amb_w[w];
            err += err_w[w];
        }
    } else {
        run_range(0, cfg.trials, amb, err);
    }

    EstimateResult out;
    out.trials = cfg.trials;
    out.ambiguous_count = amb;
    out.decode_error_count = err;
    out.p_amb_hat = double(amb) / double(cfg.trials);
    out.p_dec_hat = double(err) / double(cfg.trials);
    out.se_amb = std::sqrt(out.p_amb_hat * (1 - out.p_amb_hat) / double(cfg.trials));
    out.se_dec = std::sqrt(out.p_dec_hat * (1 - out.p_dec_hat) / double(cfg.trials));
    out.p_outside_paper_range = !(cfg.p > 0 && cfg.p < 0.5);
    return out;
}

}  // namespace erasurelab
