#include "erasurelab/combin.hpp"

#include <cstdlib>
#include <thread>

namespace erasurelab {

std::uint64_t binomial(int n, int r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    std::uint64_t acc = 1;
    for (int i = 1; i <= r; ++i) {
        acc = acc * std::uint64_t(n - r + i) / std::uint64_t(i);
    }
    return acc;
}

mpz_class binomial_mpz(int n, int r) {
    if (r < 0 || r > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, r);
    return out;
}

mpz_class gaussian_binomial(int a, int b, int q) {
    if (b < 0 || b > a) return 0;
    if (q < 2) throw InvalidParams("gaussian_binomial: q must be >= 2");
    // prod_{i=0}^{b-1} (q^{a-i} - 1) / (q^{b-i} - 1); divide as we go so every
    // intermediate value stays integral.
    mpz_class num = 1, den = 1;
    mpz_class qz = q;
    for (int i = 0; i < b; ++i) {
        mpz_class t;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), a - i);
        num *= t - 1;
        mpz_pow_ui(t.get_mpz_t(), qz.get_mpz_t(), b - i);
        den *= t - 1;
    }
    mpz_class out = num / den;
    return out;
}

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw ParseError("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        mpq_class x;
        if (x.set_str(text, 10) != 0) throw ParseError("bad rational literal: " + text);
        if (x.get_den() == 0) throw ParseError("zero denominator: " + text);
        x.canonicalize();
        return x;
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw ParseError("bad decimal literal: " + text);
        mpz_class num;
        if (num.set_str(digits, 10) != 0) throw ParseError("bad decimal literal: " + text);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, text.size() - dot - 1);
        mpq_class x(num, den);
        x.canonicalize();
        return x;
    }
    mpq_class x;
    if (x.set_str(text, 10) != 0) throw ParseError("bad integer literal: " + text);
    x.canonicalize();
    return x;
}

std::string rational_to_string(const mpq_class& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

int effective_threads() {
    int hw = int(std::thread::hardware_concurrency());
    if (hw <= 0) hw = 1;
    if (const char* env = std::getenv("ERASURELAB_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

}  // namespace erasurelab
