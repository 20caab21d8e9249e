#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "erasurelab/erasure.hpp"
#include "erasurelab/simulate.hpp"

namespace erasurelab {

/// {"n","k","q","hierarchy","spectra","support"}; matrix rows are indexed by
/// dimension i, columns by size. Entries that fit in 64 bits are numbers,
/// larger ones decimal strings.
nlohmann::json matrices_json(const CodeAnalysis& a);

/// Full per-code report: parameters, hierarchy, defects, classification,
/// exact Q vectors as fraction strings, bounds report.
nlohmann::json analysis_json(const CodeAnalysis& a, const BoundsReport& bounds);
nlohmann::json analysis_json(const CodeAnalysis& a);

nlohmann::json bounds_json(const BoundsReport& b);

nlohmann::json simulate_json(const ChannelConfig& cfg, const EstimateResult& est,
                             const CodeAnalysis* exact);

nlohmann::json compare_json(const std::string& name1, const std::string& name2,
                            const CompareVerdict& amb, const CompareVerdict& dec);

/// CSV curve: header "p,P_amb,P_dec[,bound_...]", one row per grid point,
/// floats with 12 significant digits.
void write_curve_csv(std::ostream& out, const CodeAnalysis& a, const std::vector<double>& grid,
                     const BoundsReport* bounds);

/// Inclusive grid "start:stop:step" (endpoints within step tolerance).
std::vector<double> parse_grid(const std::string& spec);

}  // namespace erasurelab
