#include "erasurelab/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace erasurelab {

namespace {

nlohmann::json mpz_json(const mpz_class& v) {
    if (v.fits_slong_p()) return nlohmann::json(v.get_si());
    return nlohmann::json(v.get_str());
}

nlohmann::json q_strings(const ErrorPolynomial& poly) {
    nlohmann::json arr = nlohmann::json::array();
    for (const mpq_class& q : poly.Q) arr.push_back(rational_to_string(q));
    return arr;
}

std::string csv_float(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

}  // namespace

nlohmann::json matrices_json(const CodeAnalysis& a) {
    nlohmann::json j;
    j["n"] = a.code.n();
    j["k"] = a.code.k();
    j["q"] = a.code.q();
    j["hierarchy"] = a.hierarchy.d;
    nlohmann::json support = nlohmann::json::array();
    for (int i = 0; i <= a.code.k(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r <= a.code.n(); ++r) row.push_back(a.support.a[i][r]);
        support.push_back(std::move(row));
    }
    j["support"] = std::move(support);
    nlohmann::json spectra = nlohmann::json::array();
    for (int i = 0; i <= a.code.k(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int r = 0; r <= a.code.n(); ++r) row.push_back(mpz_json(a.spectra.A[i][r]));
        spectra.push_back(std::move(row));
    }
    j["spectra"] = std::move(spectra);
    return j;
}

nlohmann::json bounds_json(const BoundsReport& b) {
    nlohmann::json rows = nlohmann::json::array();
    for (const BoundsRow& r : b.rows) {
        nlohmann::json row;
        row["i"] = r.i;
        row["d_i"] = r.d;
        row["dec_lower"] = rational_to_string(r.dec_lower);
        row["dec_upper"] = rational_to_string(r.dec_upper);
        if (r.amb_lower) row["amb_lower"] = rational_to_string(*r.amb_lower);
        if (r.amb_exact) row["amb_exact"] = rational_to_string(*r.amb_exact);
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["theorem4"] = std::move(rows);
    j["singleton_Q"] = q_strings(b.singleton_bound);
    j["liva_improved_Q"] = q_strings(b.liva_improved);
    j["liva_original_Q"] = q_strings(b.liva_original);
    if (b.proper_mds_index) j["proper_mds_index"] = *b.proper_mds_index;
    return j;
}

nlohmann::json analysis_json(const CodeAnalysis& a) {
    nlohmann::json j;
    j["n"] = a.code.n();
    j["k"] = a.code.k();
    j["q"] = a.code.q();
    j["hierarchy"] = a.hierarchy.d;
    j["defects"] = a.profile.defects;
    j["classification"] = a.profile.label;
    j["mds"] = a.profile.mds;
    j["amds"] = a.profile.amds;
    if (a.profile.pjmds) j["proper_mds_index"] = *a.profile.pjmds;
    if (a.profile.pjamds) j["proper_amds_index"] = *a.profile.pjamds;
    j["full_support"] = a.profile.full_support;
    j["d1"] = a.profile.d1;
    if (!a.profile.weights.empty()) j["weight_distribution"] = a.profile.weights;
    j["Q_amb"] = q_strings(a.q_amb);
    j["Q_dec"] = q_strings(a.q_dec);
    return j;
}

nlohmann::json analysis_json(const CodeAnalysis& a, const BoundsReport& bounds) {
    nlohmann::json j = analysis_json(a);
    j["bounds"] = bounds_json(bounds);
    return j;
}

nlohmann::json simulate_json(const ChannelConfig& cfg, const EstimateResult& est,
                             const CodeAnalysis* exact) {
    nlohmann::json j;
    j["p"] = cfg.p;
    j["seed"] = cfg.seed;
    j["trials"] = est.trials;
    j["P_amb_hat"] = est.p_amb_hat;
    j["P_dec_hat"] = est.p_dec_hat;
    j["se_amb"] = est.se_amb;
    j["se_dec"] = est.se_dec;
    j["ambiguous_count"] = est.ambiguous_count;
    j["decode_error_count"] = est.decode_error_count;
    if (est.p_outside_paper_range) j["p_outside_paper_range"] = true;
    if (exact) {
        double pa = exact->q_amb.eval_double(cfg.p);
        double pd = exact->q_dec.eval_double(cfg.p);
        j["P_amb_exact"] = pa;
        j["P_dec_exact"] = pd;
        j["z_amb"] = est.se_amb > 0 ? (est.p_amb_hat - pa) / est.se_amb : 0.0;
        j["z_dec"] = est.se_dec > 0 ? (est.p_dec_hat - pd) / est.se_dec : 0.0;
    }
    return j;
}

namespace {

const char* order_name(SmallPOrder o) {
    switch (o) {
        case SmallPOrder::First: return "first";
        case SmallPOrder::Second: return "second";
        case SmallPOrder::TieAtPrefix: return "tie-at-prefix";
    }
    return "?";
}

nlohmann::json verdict_json(const CompareVerdict& v) {
    nlohmann::json j;
    j["order"] = order_name(v.order);
    j["governing"] = v.governing;
    if (v.divergence_r >= 0) j["divergence_r"] = v.divergence_r;
    return j;
}

}  // namespace

nlohmann::json compare_json(const std::string& name1, const std::string& name2,
                            const CompareVerdict& amb, const CompareVerdict& dec) {
    nlohmann::json j;
    j["first"] = name1;
    j["second"] = name2;
    j["amb"] = verdict_json(amb);
    j["dec"] = verdict_json(dec);
    return j;
}

void write_curve_csv(std::ostream& out, const CodeAnalysis& a, const std::vector<double>& grid,
                     const BoundsReport* bounds) {
    out << "p,P_amb,P_dec";
    if (bounds) out << ",bound_singleton,bound_liva_improved,bound_liva_original";
    out << "\n";
    for (double p : grid) {
        out << csv_float(p) << "," << csv_float(a.q_amb.eval_double(p)) << ","
            << csv_float(a.q_dec.eval_double(p));
        if (bounds) {
            out << "," << csv_float(bounds->singleton_bound.eval_double(p)) << ","
                << csv_float(bounds->liva_improved.eval_double(p)) << ","
                << csv_float(bounds->liva_original.eval_double(p));
        }
        out << "\n";
    }
}

std::vector<double> parse_grid(const std::string& spec) {
    auto c1 = spec.find(':');
    auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw ParseError("grid must be start:stop:step");
    double start = 0, stop = 0, step = 0;
    try {
        start = std::stod(spec.substr(0, c1));
        stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(spec.substr(c2 + 1));
    } catch (const std::exception&) {
        throw ParseError("bad grid literal: " + spec);
    }
    if (step <= 0 || stop < start) throw ParseError("grid must be increasing with positive step");
    std::vector<double> grid;
    for (double p = start; p <= stop + step * 1e-9; p += step) grid.push_back(std::min(p, stop));
    return grid;
}

}  // namespace erasurelab
