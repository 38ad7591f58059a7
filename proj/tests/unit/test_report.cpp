#include "doctest.h"
#include "invfield/report.hpp"

using namespace invfield;

TEST_CASE("group elements serialize in the chart") {
  const Json j = to_json(SU2Element(cplx(0.6, 0.0), cplx(0.0, 0.8)));
  CHECK(j["type"] == "SU2");
  CHECK(j["a"][0].get<double>() == doctest::Approx(0.6));
  CHECK(j["b"][1].get<double>() == doctest::Approx(0.8));
  const Json k = to_json(GroupElement(SO4Element{}));
  CHECK(k["type"] == "SO4");
  CHECK(k["g1"]["a"][0] == 1.0);
}

TEST_CASE("test reports carry the decisions") {
  const Json j = to_json(make_report("gaussianity", 0.4, 0.004, 500, 12));
  CHECK(j["test"] == "gaussianity");
  CHECK(j["n"] == 500);
  CHECK(j["seed"] == 12);
  CHECK(j["alpha_decisions"]["0.05"] == true);
  CHECK(j["alpha_decisions"]["0.01"] == true);
  CHECK(j["alpha_decisions"]["0.001"] == false);
  CHECK(alpha_key(0.001) == "0.001");
}

TEST_CASE("mixing reports") {
  RngStream rng(61, 0);
  const SelfConjBasis b = torus_adapted_selfconj_basis({Space::S2, 4});
  const Json j = to_json(check_mixing(b, 500, 1e-6, rng));
  CHECK(j["verdict"] == "Mixing");
  CHECK(j["dim"] == 5);
  CHECK(j["witness_g"]["type"] == "SU2");
  CHECK(j["pair"].size() == 2);
  CHECK(j.contains("margin"));
  CHECK(j.contains("reason"));

  const Json n = to_json(check_mixing(torus_adapted_selfconj_basis({Space::S2, 2}), 10, 1e-6, rng));
  CHECK(n["verdict"] == "NotMixing");
  CHECK(n["witness_g"].is_null());

  const Json e = to_json(s3_exact_mixing(2, 1, 1));
  CHECK(e["verdict"] == "Mixing");
  CHECK(e["comparisons"].is_array());
}
