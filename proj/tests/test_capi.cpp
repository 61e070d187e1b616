#include <cstring>
#include <doctest.h>
#include <string>

#include "toporeg.h"

namespace {

struct cstr {
  char* p = nullptr;
  ~cstr() { tr_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

}  // namespace

TEST_CASE("c api sample and simulate") {
  tr_sample* s = nullptr;
  REQUIRE(tr_simulate("exp-monotone", 50, 0.0, 7, &s) == TR_OK);
  CHECK(tr_sample_size(s) == 50);

  tr_sample* again = nullptr;
  REQUIRE(tr_simulate("exp-monotone", 50, 0.0, 7, &again) == TR_OK);
  CHECK(tr_sample_size(again) == 50);
  tr_sample_free(again);

  CHECK(tr_simulate("nope", 50, 0.0, 7, &again) == TR_ERR_USAGE);
  CHECK(std::string(tr_last_error()).find("scenario") != std::string::npos);
  CHECK(tr_simulate("exp-monotone", 1, 0.0, 7, &again) == TR_ERR_USAGE);

  const double xs[] = {0.0, 0.5, 1.0};
  const double ys[] = {1.0, 2.0, 3.0};
  tr_sample* manual = nullptr;
  REQUIRE(tr_sample_from_arrays(xs, ys, 3, &manual) == TR_OK);
  CHECK(tr_sample_size(manual) == 3);
  tr_sample_free(manual);
  tr_sample_free(s);
}

TEST_CASE("c api pipeline to report") {
  tr_sample* s = nullptr;
  REQUIRE(tr_simulate("exp-monotone", 60, 0.0, 5, &s) == TR_OK);
  tr_config* cfg = nullptr;
  REQUIRE(tr_config_new(&cfg) == TR_OK);
  REQUIRE(tr_config_set_kernel(cfg, "gaussian") == TR_OK);
  REQUIRE(tr_config_set_bandwidth_exponent(cfg, 5) == TR_OK);
  REQUIRE(tr_config_set_epsilon(cfg, 0.1) == TR_OK);
  REQUIRE(tr_config_set_seed(cfg, 5) == TR_OK);

  cstr report;
  REQUIRE(tr_analyze(s, cfg, "monotonicity", nullptr, 0, &report.p) == TR_OK);
  const std::string text = report.str();
  CHECK(text.find("\"conclusion\": \"non-decreasing\"") != std::string::npos);
  CHECK(text.find("\"diagram\"") != std::string::npos);

  cstr rerun;
  REQUIRE(tr_analyze(s, cfg, "monotonicity", nullptr, 0, &rerun.p) == TR_OK);
  CHECK(text == rerun.str());  // determinism

  CHECK(tr_analyze(s, cfg, "shape", nullptr, 0, &rerun.p) == TR_ERR_USAGE);
  CHECK(tr_analyze(s, cfg, "modality", nullptr, 0, &rerun.p) == TR_ERR_USAGE);

  tr_diagram* dgm = nullptr;
  REQUIRE(tr_estimate_diagram(s, cfg, &dgm) == TR_OK);
  REQUIRE(tr_diagram_size(dgm) >= 1);
  double death = 0.0, birth = 0.0;
  int degree = -1;
  REQUIRE(tr_diagram_feature(dgm, 0, &death, &birth, &degree) == TR_OK);
  CHECK(death <= birth);
  CHECK(degree == 0);
  CHECK(tr_diagram_feature(dgm, 999, &death, &birth, &degree) ==
        TR_ERR_USAGE);

  cstr json;
  REQUIRE(tr_diagram_to_json(dgm, &json.p) == TR_OK);
  tr_diagram* parsed = nullptr;
  REQUIRE(tr_diagram_from_json(json.p, &parsed) == TR_OK);
  CHECK(tr_diagram_size(parsed) == tr_diagram_size(dgm));

  double dist = -1.0;
  REQUIRE(tr_bottleneck_distance(dgm, parsed, &dist) == TR_OK);
  CHECK(dist == 0.0);

  cstr svg;
  REQUIRE(tr_barcode_svg(dgm, &svg.p) == TR_OK);
  CHECK(svg.str().rfind("<svg", 0) == 0);

  CHECK(tr_diagram_from_json("###", &parsed) == TR_ERR_PARSE);

  tr_diagram_free(parsed);
  tr_diagram_free(dgm);
  tr_config_free(cfg);
  tr_sample_free(s);
}

TEST_CASE("c api consistency with a vacuous threshold") {
  // 5 epsilon beyond the diagram diameter makes every replication pass.
  tr_config* cfg = nullptr;
  REQUIRE(tr_config_new(&cfg) == TR_OK);
  REQUIRE(tr_config_set_bandwidth_exponent(cfg, 5) == TR_OK);
  REQUIRE(tr_config_set_epsilon(cfg, 0.5) == TR_OK);
  REQUIRE(tr_config_set_seed(cfg, 1) == TR_OK);
  cstr out;
  REQUIRE(tr_consistency("exp-monotone", 60, 5, 0.0, cfg, &out.p) == TR_OK);
  const std::string text = out.str();
  CHECK(text.find("\"fraction_within\": 1.0") != std::string::npos);
  CHECK(text.find("\"threshold\": 2.5") != std::string::npos);
  CHECK(tr_consistency("nope", 60, 5, 0.0, cfg, &out.p) == TR_ERR_USAGE);
  tr_config_free(cfg);
}

TEST_CASE("c api null handling") {
  CHECK(tr_sample_from_csv(nullptr, nullptr) == TR_ERR_USAGE);
  CHECK(tr_sample_size(nullptr) == 0);
  CHECK(tr_diagram_size(nullptr) == 0);
  tr_sample_free(nullptr);
  tr_diagram_free(nullptr);
  tr_config_free(nullptr);
  tr_string_free(nullptr);
  CHECK(std::strlen(tr_version()) > 0);
}
