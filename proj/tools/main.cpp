// erasurelab: exact erasure-channel error probabilities for small linear codes.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "erasurelab/catalog.hpp"
#include "erasurelab/report.hpp"

namespace el = erasurelab;
namespace fs = std::filesystem;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

struct CodeRef {
    std::string file;
    std::string catalog;
};

struct LoadedCode {
    std::string name;
    el::LinearCode code;
};

LoadedCode resolve(const CodeRef& ref) {
    if (ref.file.empty() == ref.catalog.empty())
        throw CLI::ValidationError("give exactly one of --code and --catalog");
    if (!ref.catalog.empty()) {
        const el::CatalogEntry& e = el::catalog_entry(ref.catalog);
        return {e.name, e.code};
    }
    return {fs::path(ref.file).stem().string(), el::load_code_file(ref.file)};
}

// name-or-path, for compare operands
LoadedCode resolve_loose(const std::string& spec) {
    try {
        const el::CatalogEntry& e = el::catalog_entry(spec);
        return {e.name, e.code};
    } catch (const el::InvalidParams&) {
        return {fs::path(spec).stem().string(), el::load_code_file(spec)};
    }
}

void add_code_options(CLI::App* cmd, CodeRef& ref) {
    cmd->add_option("--code", ref.file, "code file (format: 'q n k' then k generator rows)");
    cmd->add_option("--catalog", ref.catalog, "named catalog code");
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw el::IoError("cannot open " + out_path + " for writing");
    out << text << "\n";
    if (!out) throw el::IoError("write failed: " + out_path);
}

int run(int argc, char** argv) {
    CLI::App app{"exact ambiguity and ML-decoding error probabilities of linear codes over "
                 "q-ary erasure channels"};
    app.require_subcommand(1);

    CodeRef ref;
    std::string out_path;
    std::string kind_name = "amb";
    std::string p_text = "1/2";
    std::string grid_spec = "0:0.5:0.01";
    bool with_bounds = false;
    bool as_float = false;

    auto* analyze = app.add_subcommand("analyze", "hierarchy, spectra, classification, Q vectors");
    add_code_options(analyze, ref);
    analyze->add_flag("--bounds", with_bounds, "include the bounds report");
    analyze->add_option("--out", out_path, "write JSON here instead of stdout");

    auto* spectra = app.add_subcommand("spectra", "support and spectra matrices as JSON");
    add_code_options(spectra, ref);
    spectra->add_option("--out", out_path);

    auto* prob = app.add_subcommand("prob", "exact P_amb or P_dec at a rational p");
    add_code_options(prob, ref);
    prob->add_option("--kind", kind_name, "amb or dec")->check(CLI::IsMember({"amb", "dec"}));
    prob->add_option("--p", p_text, "erasure probability (fraction, integer or decimal)");
    prob->add_flag("--float", as_float, "print a double instead of the exact fraction");

    auto* bounds = app.add_subcommand("bounds", "Theorem-style bound report as JSON");
    add_code_options(bounds, ref);
    bounds->add_option("--out", out_path);

    auto* curve = app.add_subcommand("curve", "CSV curves p,P_amb,P_dec over a grid");
    add_code_options(curve, ref);
    curve->add_option("--grid", grid_spec, "start:stop:step, endpoints included");
    curve->add_flag("--bounds", with_bounds, "append bound columns");
    curve->add_option("--out", out_path, "output directory (default .)");

    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    double p_float = 0.1;
    auto* simulate = app.add_subcommand("simulate", "seeded Monte Carlo channel estimate");
    add_code_options(simulate, ref);
    simulate->add_option("--p", p_float, "erasure probability")->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--trials", trials)->check(CLI::PositiveNumber);
    simulate->add_option("--seed", seed);
    simulate->add_option("--out", out_path);

    std::string first_spec, second_spec;
    auto* compare = app.add_subcommand("compare", "small-p ordering of two codes");
    compare->add_option("first", first_spec, "code file or catalog name")->required();
    compare->add_option("second", second_spec, "code file or catalog name")->required();
    compare->add_option("--out", out_path);

    std::string export_name;
    auto* catalog = app.add_subcommand("catalog", "list catalog codes or export one");
    catalog->add_option("--export", export_name, "entry to export in code file format");
    catalog->add_option("--out", out_path);

    app.parse(argc, argv);

    if (analyze->parsed() || spectra->parsed() || bounds->parsed()) {
        LoadedCode lc = resolve(ref);
        el::CodeAnalysis a = el::analyze(lc.code);
        nlohmann::json j;
        if (spectra->parsed()) {
            j = el::matrices_json(a);
        } else if (bounds->parsed()) {
            j = el::bounds_json(el::bounds_report(lc.code, a.support, a.spectra, a.hierarchy));
        } else if (with_bounds) {
            j = el::analysis_json(a, el::bounds_report(lc.code, a.support, a.spectra, a.hierarchy));
        } else {
            j = el::analysis_json(a);
        }
        j["name"] = lc.name;
        emit(out_path, j.dump(2));
        return 0;
    }

    if (prob->parsed()) {
        LoadedCode lc = resolve(ref);
        mpq_class p = el::parse_rational(p_text);
        el::CodeAnalysis a = el::analyze(lc.code);
        const el::ErrorPolynomial& poly =
            kind_name == "amb" ? a.q_amb : a.q_dec;
        mpq_class value = el::error_probability(poly, p);
        if (as_float)
            std::printf("%.12g\n", value.get_d());
        else
            std::cout << el::rational_to_string(value) << "\n";
        return 0;
    }

    if (curve->parsed()) {
        std::vector<LoadedCode> codes;
        if (!ref.catalog.empty() && ref.file.empty()) {
            for (const el::CatalogEntry* e : el::catalog_group(ref.catalog))
                codes.push_back({e->name, e->code});
        } else {
            codes.push_back(resolve(ref));
        }
        std::vector<double> grid = el::parse_grid(grid_spec);
        fs::path dir = out_path.empty() ? fs::path(".") : fs::path(out_path);
        std::error_code ec;
        fs::create_directories(dir, ec);
        for (const LoadedCode& lc : codes) {
            el::CodeAnalysis a = el::analyze(lc.code);
            std::optional<el::BoundsReport> br;
            if (with_bounds)
                br = el::bounds_report(lc.code, a.support, a.spectra, a.hierarchy);
            fs::path file = dir / (lc.name + ".csv");
            std::ofstream out(file);
            if (!out) throw el::IoError("cannot open " + file.string());
            el::write_curve_csv(out, a, grid, br ? &*br : nullptr);
            if (!out) throw el::IoError("write failed: " + file.string());
            std::cerr << "wrote " << file.string() << "\n";
        }
        return 0;
    }

    if (simulate->parsed()) {
        LoadedCode lc = resolve(ref);
        el::ChannelConfig cfg{p_float, seed, trials};
        el::EstimateResult est = el::estimate(lc.code, cfg);
        std::optional<el::CodeAnalysis> exact;
        try {
            exact = el::analyze(lc.code);
        } catch (const el::BudgetExceeded&) {
        }
        nlohmann::json j = el::simulate_json(cfg, est, exact ? &*exact : nullptr);
        j["name"] = lc.name;
        emit(out_path, j.dump(2));
        return 0;
    }

    if (compare->parsed()) {
        LoadedCode c1 = resolve_loose(first_spec);
        LoadedCode c2 = resolve_loose(second_spec);
        el::CodeAnalysis a1 = el::analyze(c1.code);
        el::CodeAnalysis a2 = el::analyze(c2.code);
        el::CompareVerdict amb = el::compare_small_p(a1, a2, el::ErrorKind::amb);
        el::CompareVerdict dec = el::compare_small_p(a1, a2, el::ErrorKind::dec);
        emit(out_path, el::compare_json(c1.name, c2.name, amb, dec).dump(2));
        return 0;
    }

    if (catalog->parsed()) {
        if (!export_name.empty()) {
            const el::CatalogEntry& e = el::catalog_entry(export_name);
            if (out_path.empty()) {
                el::write_code_file(std::cout, e.code, e.name);
            } else {
                el::save_code_file(out_path, e.code, e.name);
            }
            return 0;
        }
        for (const el::CatalogEntry& e : el::standard_catalog()) {
            std::printf("%-16s [%d,%d]_%d  %-8s d=(", e.name.c_str(), e.code.n(), e.code.k(),
                        e.code.q(), e.expected_label.c_str());
            for (std::size_t i = 0; i < e.expected_hierarchy.size(); ++i)
                std::printf("%s%d", i ? "," : "", e.expected_hierarchy[i]);
            std::printf(")\n");
        }
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const el::BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const el::IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return kExitIo;
    } catch (const el::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitIo;
    } catch (const el::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
