#ifndef TOPOREG_REPORT_HPP
#define TOPOREG_REPORT_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "config.hpp"
#include "persistence.hpp"
#include "significance.hpp"
#include "structures.hpp"

namespace toporeg {

using json = nlohmann::ordered_json;

// Diagram wire format: array of {death, birth, degree} sorted by
// descending persistence.
json diagram_to_json(const persistence_diagram& d);
persistence_diagram diagram_from_json(const json& j);
persistence_diagram diagram_from_json_text(const std::string& text);
persistence_diagram diagram_from_json_file(const std::string& path);

// Significance table mirroring the per-feature layout of the verdict
// evidence: one row per feature with both endpoint fits.
json significance_table_json(const std::vector<feature_significance>& rows);

json config_to_json(const analysis_config& cfg, std::size_t n);
json verdict_to_json(const structure_verdict& v);

// CSV with a mandatory "x,y" header and round-trip-exact decimals.
sample sample_from_csv_file(const std::string& path);
sample sample_from_csv_text(const std::string& text, const std::string& origin);
std::string sample_to_csv(const sample& s);
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

// Shortest round-trip decimal form of v.
std::string format_double(double v);

// Horizontal bars sorted by descending persistence over a labeled level
// axis; byte-identical for identical diagrams.
std::string barcode_svg(const persistence_diagram& d);

}  // namespace toporeg

#endif
