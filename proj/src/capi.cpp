#include "toporeg.h"

#include <cstring>
#include <new>
#include <string>

#include <nlohmann/json.hpp>

#include "config.hpp"
#include "datagen.hpp"
#include "errors.hpp"
#include "metric.hpp"
#include "pipeline.hpp"
#include "report.hpp"

using namespace toporeg;

struct tr_sample {
  sample data;
};
struct tr_config {
  analysis_config cfg;
};
struct tr_diagram {
  persistence_diagram dgm;
};

namespace {

thread_local std::string g_last_error = "no error";

tr_status status_of(const error& e) {
  switch (e.kind()) {
    case error_kind::usage: return TR_ERR_USAGE;
    case error_kind::parse: return TR_ERR_PARSE;
    case error_kind::pipeline: return TR_ERR_PIPELINE;
  }
  return TR_ERR_PIPELINE;
}

template <typename Fn>
tr_status guarded(Fn&& fn) {
  try {
    fn();
    return TR_OK;
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TR_ERR_PIPELINE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TR_ERR_PIPELINE;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

const char* require(const void* p, const char* what) {
  if (p == nullptr) fail(errc::invalid_argument, std::string(what) + " is null");
  return static_cast<const char*>(p);
}

}  // namespace

extern "C" {

const char* tr_version(void) { return "0.1.0"; }

const char* tr_last_error(void) { return g_last_error.c_str(); }

void tr_string_free(char* s) { delete[] s; }

tr_status tr_sample_from_arrays(const double* x, const double* y, size_t n,
                                tr_sample** out) {
  return guarded([&] {
    require(x, "x");
    require(y, "y");
    require(out, "out");
    *out = new tr_sample{sample(std::vector<double>(x, x + n),
                                std::vector<double>(y, y + n))};
  });
}

tr_status tr_sample_from_csv(const char* path, tr_sample** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new tr_sample{sample_from_csv_file(path)};
  });
}

tr_status tr_sample_write_csv(const tr_sample* s, const char* path) {
  return guarded([&] {
    require(s, "sample");
    require(path, "path");
    write_text_file(path, sample_to_csv(s->data));
  });
}

size_t tr_sample_size(const tr_sample* s) { return s ? s->data.size() : 0; }

void tr_sample_free(tr_sample* s) { delete s; }

tr_status tr_simulate(const char* scenario_name, int n, double noise_sd,
                      uint64_t seed, tr_sample** out) {
  return guarded([&] {
    require(scenario_name, "scenario");
    require(out, "out");
    scenario sc;
    sc.kind = scenario_from_name(scenario_name);
    sc.n = n;
    if (noise_sd > 0.0) sc.noise_sd = noise_sd;
    sc.seed = seed;
    *out = new tr_sample{generate(sc)};
  });
}

tr_status tr_scenario_metadata_json(const char* scenario_name, int n,
                                    double noise_sd, uint64_t seed,
                                    char** out_json) {
  return guarded([&] {
    require(scenario_name, "scenario");
    require(out_json, "out_json");
    scenario sc;
    sc.kind = scenario_from_name(scenario_name);
    sc.n = n;
    if (noise_sd > 0.0) sc.noise_sd = noise_sd;
    sc.seed = seed;
    json j{{"scenario", scenario_name},
           {"n", sc.n},
           {"noise_sd", sc.noise_sd},
           {"domain", {sc.lo, sc.hi}},
           {"seed", sc.seed}};
    *out_json = copy_string(j.dump(2) + "\n");
  });
}

tr_status tr_config_new(tr_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new tr_config{};
  });
}

void tr_config_free(tr_config* c) { delete c; }

tr_status tr_config_set_kernel(tr_config* c, const char* family) {
  return guarded([&] {
    require(c, "config");
    require(family, "family");
    c->cfg.family = kernel_spec::make(std::string(family), 1.0).family;
  });
}

tr_status tr_config_set_bandwidth(tr_config* c, double h) {
  return guarded([&] {
    require(c, "config");
    c->cfg.bandwidth = bandwidth_rule::fixed_h(h);
  });
}

tr_status tr_config_set_bandwidth_exponent(tr_config* c, int e) {
  return guarded([&] {
    require(c, "config");
    c->cfg.bandwidth = bandwidth_rule::power_law(e);
  });
}

tr_status tr_config_set_epsilon(tr_config* c, double epsilon) {
  return guarded([&] {
    require(c, "config");
    if (!(epsilon > 0.0)) fail(errc::non_positive_epsilon, "epsilon must be positive");
    c->cfg.epsilon = epsilon;
  });
}

tr_status tr_config_set_grid_points(tr_config* c, int count) {
  return guarded([&] {
    require(c, "config");
    if (count < 2) fail(errc::invalid_argument, "grid needs at least 2 points");
    c->cfg.grid_points = count;
  });
}

tr_status tr_config_set_alpha(tr_config* c, double alpha) {
  return guarded([&] {
    require(c, "config");
    if (!(alpha > 0.0 && alpha < 1.0)) {
      fail(errc::invalid_argument, "alpha must lie in (0, 1)");
    }
    c->cfg.alpha = alpha;
  });
}

tr_status tr_config_set_modality_delta(tr_config* c, double delta) {
  return guarded([&] {
    require(c, "config");
    if (!(delta > 0.0)) fail(errc::invalid_argument, "delta must be positive");
    c->cfg.modality_delta = delta;
  });
}

tr_status tr_config_set_seed(tr_config* c, uint64_t seed) {
  return guarded([&] {
    require(c, "config");
    c->cfg.seed = seed;
  });
}

tr_status tr_diagram_from_json(const char* text, tr_diagram** out) {
  return guarded([&] {
    require(text, "json");
    require(out, "out");
    *out = new tr_diagram{diagram_from_json_text(text)};
  });
}

tr_status tr_diagram_from_json_file(const char* path, tr_diagram** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new tr_diagram{diagram_from_json_file(path)};
  });
}

tr_status tr_diagram_to_json(const tr_diagram* d, char** out_json) {
  return guarded([&] {
    require(d, "diagram");
    require(out_json, "out_json");
    *out_json = copy_string(diagram_to_json(d->dgm).dump(2) + "\n");
  });
}

size_t tr_diagram_size(const tr_diagram* d) { return d ? d->dgm.size() : 0; }

tr_status tr_diagram_feature(const tr_diagram* d, size_t index, double* death,
                             double* birth, int* degree) {
  return guarded([&] {
    require(d, "diagram");
    if (index >= d->dgm.size()) {
      fail(errc::invalid_argument, "feature index out of range");
    }
    const pd_feature& f = d->dgm.features[index];
    if (death) *death = f.death;
    if (birth) *birth = f.birth;
    if (degree) *degree = f.degree;
  });
}

void tr_diagram_free(tr_diagram* d) { delete d; }

tr_status tr_estimate_diagram(const tr_sample* s, const tr_config* c,
                              tr_diagram** out) {
  return guarded([&] {
    require(s, "sample");
    require(c, "config");
    require(out, "out");
    *out = new tr_diagram{estimate_diagram(s->data, c->cfg)};
  });
}

tr_status tr_analyze(const tr_sample* s, const tr_config* c,
                     const char* structure, const double* critical_point,
                     int auto_detect, char** out_report_json) {
  return guarded([&] {
    require(s, "sample");
    require(c, "config");
    require(structure, "structure");
    require(out_report_json, "out_report_json");
    const std::string name(structure);
    structure_kind kind;
    if (name == "monotonicity") {
      kind = structure_kind::monotonicity;
    } else if (name == "convexity") {
      kind = structure_kind::convexity;
    } else if (name == "modality") {
      kind = structure_kind::modality;
    } else {
      fail(errc::invalid_argument,
           "unknown structure '" + name +
               "' (expected monotonicity, convexity, or modality)");
    }
    std::optional<double> cp;
    if (critical_point) cp = *critical_point;
    *out_report_json =
        copy_string(analyze_to_json(s->data, c->cfg, kind, cp, auto_detect != 0));
  });
}

tr_status tr_bottleneck_distance(const tr_diagram* a, const tr_diagram* b,
                                 double* out) {
  return guarded([&] {
    require(a, "diagram a");
    require(b, "diagram b");
    require(out, "out");
    *out = bottleneck_distance(a->dgm, b->dgm);
  });
}

tr_status tr_consistency(const char* scenario_name, int n, int reps,
                         double noise_sd, const tr_config* c, char** out_json) {
  return guarded([&] {
    require(scenario_name, "scenario");
    require(c, "config");
    require(out_json, "out_json");
    scenario sc;
    sc.kind = scenario_from_name(scenario_name);
    sc.n = n;
    if (noise_sd > 0.0) sc.noise_sd = noise_sd;
    sc.seed = c->cfg.seed;
    *out_json = copy_string(run_consistency(sc, reps, c->cfg).json);
  });
}

tr_status tr_barcode_svg(const tr_diagram* d, char** out_svg) {
  return guarded([&] {
    require(d, "diagram");
    require(out_svg, "out_svg");
    *out_svg = copy_string(barcode_svg(d->dgm));
  });
}

}  // extern "C"
