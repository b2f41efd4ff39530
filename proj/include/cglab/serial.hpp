#pragma once

#include <optional>
#include <string>

#include "cglab/analysis.hpp"
#include "cglab/dfa.hpp"
#include "cglab/growth.hpp"

namespace cglab {

// Fixed float formatting: 12 significant digits, used for every float that
// reaches an output artifact.
std::string format_double(double x);

// Growth tables: versioned JSON with decimal-string coefficients and an
// fnv1a-64 payload checksum.
std::string table_to_json(const GrowthTable& t);
GrowthTable table_from_json(const std::string& text);  // verifies the checksum
std::string table_to_csv(const GrowthTable& t);        // "n,coeff" lines

// One cache file per (group, kind, mode); entries are reused only when the
// engine, engine version and n_max also match.
std::string cache_file_name(const std::string& group, GrowthKind kind, GrowthMode mode);
void cache_write(const std::string& dir, const GrowthTable& t);
std::optional<GrowthTable> cache_read(const std::string& dir, const std::string& group,
                                      GrowthKind kind, GrowthMode mode, GrowthEngine engine,
                                      int n_max);

// Automata: canonical JSON and DOT (fail state suppressed in DOT).
std::string dfa_to_json(const Dfa& d);
std::string dfa_to_dot(const Dfa& d);

std::string recurrence_report_to_json(const RecurrenceReport& rep, int n_coeffs);
std::string asymptotics_report_to_json(const BandCheckReport& band, const AsymptoticFit& fit,
                                       double e_h, bool e_h_exact);

}  // namespace cglab
