#include "report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace toporeg {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

json diagram_to_json(const persistence_diagram& d) {
  persistence_diagram sorted = d;
  sorted.sort_by_persistence();
  json arr = json::array();
  for (const auto& f : sorted.features) {
    arr.push_back({{"death", f.death}, {"birth", f.birth}, {"degree", f.degree}});
  }
  return arr;
}

persistence_diagram diagram_from_json(const json& j) {
  if (!j.is_array()) {
    fail(errc::parse_error, "diagram JSON must be an array of features");
  }
  persistence_diagram d;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("death") || !item.contains("birth")) {
      fail(errc::parse_error, "diagram feature needs death and birth fields");
    }
    pd_feature f;
    f.death = item.at("death").get<double>();
    f.birth = item.at("birth").get<double>();
    f.degree = item.value("degree", 0);
    if (f.death > f.birth) {
      fail(errc::parse_error, "feature death exceeds birth");
    }
    d.features.push_back(f);
  }
  d.sort_by_persistence();
  return d;
}

persistence_diagram diagram_from_json_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "invalid diagram JSON");
  return diagram_from_json(j);
}

persistence_diagram diagram_from_json_file(const std::string& path) {
  return diagram_from_json_text(read_text_file(path));
}

namespace {

json fit_to_json(const std::optional<slope_fit>& fit) {
  if (!fit) return nullptr;
  return json{{"beta0", fit->beta0},
              {"beta1", fit->beta1},
              {"std_err_beta1", fit->std_err_beta1},
              {"t_stat", fit->t_stat},
              {"p_value", fit->p_value},
              {"n_used", fit->n_used}};
}

}  // namespace

json significance_table_json(const std::vector<feature_significance>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json row{{"death", r.feature.death},
             {"birth", r.feature.birth},
             {"death_x", r.death_x},
             {"birth_x", r.birth_x}};
    row["beta1_death"] = r.death_fit ? json(r.death_fit->beta1) : json(nullptr);
    row["p_death"] = r.death_fit ? json(r.death_fit->p_value) : json(nullptr);
    row["beta1_birth"] = r.birth_fit ? json(r.birth_fit->beta1) : json(nullptr);
    row["p_birth"] = r.birth_fit ? json(r.birth_fit->p_value) : json(nullptr);
    row["death_significant"] = r.death_significant;
    row["birth_significant"] = r.birth_significant;
    row["significant"] = r.significant;
    row["fits"] = {{"death", fit_to_json(r.death_fit)},
                   {"birth", fit_to_json(r.birth_fit)}};
    arr.push_back(std::move(row));
  }
  return arr;
}

json config_to_json(const analysis_config& cfg, std::size_t n) {
  json j;
  j["kernel"] = kernel_family_name(cfg.family);
  if (cfg.bandwidth.fixed) {
    j["bandwidth_rule"] = "fixed";
  } else {
    j["bandwidth_rule"] = "n^(-1/" + std::to_string(cfg.bandwidth.exponent) + ")";
  }
  j["bandwidth"] = cfg.bandwidth.resolve(n);
  j["epsilon"] = cfg.epsilon;
  j["grid_points"] = cfg.grid_points;
  j["alpha"] = cfg.alpha;
  j["modality_delta"] = cfg.modality_delta;
  j["seed"] = cfg.seed;
  return j;
}

json verdict_to_json(const structure_verdict& v) {
  json j;
  j["kind"] = structure_kind_name(v.kind);
  j["conclusion"] = conclusion_name(v.result);
  j["region"] = {v.region_lo, v.region_hi};
  j["diagram"] = diagram_to_json(v.diagram);
  j["significance"] = significance_table_json(v.evidence);
  if (!v.negated_diagram.empty() || v.kind == structure_kind::convexity) {
    j["negated_diagram"] = diagram_to_json(v.negated_diagram);
    j["negated_significance"] = significance_table_json(v.negated_evidence);
  }
  if (!v.critical_points.empty()) j["critical_points"] = v.critical_points;
  if (!v.note.empty()) j["note"] = v.note;
  if (!v.parts.empty()) {
    json parts = json::array();
    for (const auto& p : v.parts) parts.push_back(verdict_to_json(p));
    j["parts"] = std::move(parts);
  }
  return j;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::io_error, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::io_error, "cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail(errc::io_error, "failed writing '" + path + "'");
}

namespace {

double parse_field(std::string_view field, std::size_t line_no,
                   const std::string& origin) {
  // Trim surrounding spaces and a trailing CR.
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) {
    field.remove_prefix(1);
  }
  while (!field.empty() &&
         (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
    field.remove_suffix(1);
  }
  double value = 0.0;
  const auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
    fail(errc::parse_error, origin + ": line " + std::to_string(line_no) +
                                ": expected a number, got '" +
                                std::string(field) + "'");
  }
  return value;
}

}  // namespace

sample sample_from_csv_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) {
    fail(errc::parse_error, origin + ": empty file");
  }
  std::string header = line;
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != "x,y") {
    fail(errc::parse_error, origin + ": line 1: expected header 'x,y'");
  }
  std::vector<double> xs, ys;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      fail(errc::parse_error, origin + ": line " + std::to_string(line_no) +
                                  ": expected 'x,y' row");
    }
    if (line.find(',', comma + 1) != std::string::npos) {
      fail(errc::parse_error, origin + ": line " + std::to_string(line_no) +
                                  ": too many fields");
    }
    xs.push_back(parse_field(std::string_view(line).substr(0, comma), line_no,
                             origin));
    ys.push_back(parse_field(std::string_view(line).substr(comma + 1), line_no,
                             origin));
  }
  if (xs.size() < 2) {
    fail(errc::parse_error, origin + ": need at least 2 data rows, got " +
                                std::to_string(xs.size()));
  }
  return sample(std::move(xs), std::move(ys));
}

sample sample_from_csv_file(const std::string& path) {
  return sample_from_csv_text(read_text_file(path), path);
}

std::string sample_to_csv(const sample& s) {
  std::string out = "x,y\n";
  for (std::size_t i = 0; i < s.size(); ++i) {
    out += format_double(s.x()[i]);
    out += ',';
    out += format_double(s.y()[i]);
    out += '\n';
  }
  return out;
}

std::string barcode_svg(const persistence_diagram& d) {
  persistence_diagram sorted = d;
  sorted.sort_by_persistence();

  constexpr int width = 640;
  constexpr int margin_left = 60, margin_right = 20;
  constexpr int bar_height = 14, bar_gap = 10, axis_space = 40;
  const int n = static_cast<int>(sorted.size());
  const int height = axis_space + std::max(n, 1) * (bar_height + bar_gap) + 20;

  double lo = 0.0, hi = 1.0;
  if (n > 0) {
    lo = sorted.features.front().death;
    hi = sorted.features.front().birth;
    for (const auto& f : sorted.features) {
      lo = std::min(lo, f.death);
      hi = std::max(hi, f.birth);
    }
  }
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double plot_w = width - margin_left - margin_right;
  const auto x_of = [&](double t) {
    return margin_left + (t - lo) / (hi - lo) * plot_w;
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  const int axis_y = height - axis_space + 10;
  svg += "<line x1=\"" + std::to_string(margin_left) + "\" y1=\"" +
         std::to_string(axis_y) + "\" x2=\"" +
         std::to_string(width - margin_right) + "\" y2=\"" +
         std::to_string(axis_y) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double t = lo + (hi - lo) * i / 4.0;
    const double xx = x_of(t);
    svg += "<line x1=\"" + format_double(xx) + "\" y1=\"" +
           std::to_string(axis_y) + "\" x2=\"" + format_double(xx) +
           "\" y2=\"" + std::to_string(axis_y + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + format_double(xx) + "\" y=\"" +
           std::to_string(axis_y + 18) +
           "\" font-size=\"11\" text-anchor=\"middle\">" +
           format_double(std::round(t * 1e6) / 1e6) + "</text>\n";
  }
  svg += "<text x=\"" + std::to_string(width / 2) + "\" y=\"" +
         std::to_string(height - 4) +
         "\" font-size=\"11\" text-anchor=\"middle\">level t</text>\n";

  for (int i = 0; i < n; ++i) {
    const auto& f = sorted.features[i];
    const double x0 = x_of(f.death);
    const double x1 = x_of(f.birth);
    const int y = 10 + i * (bar_height + bar_gap);
    svg += "<rect x=\"" + format_double(x0) + "\" y=\"" + std::to_string(y) +
           "\" width=\"" + format_double(std::max(x1 - x0, 1.0)) +
           "\" height=\"" + std::to_string(bar_height) +
           "\" fill=\"steelblue\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace toporeg
