#include "invfield/report.hpp"

#include <cstdio>

namespace invfield {

namespace {

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const SU2Element& g) {
  return Json{{"type", "SU2"}, {"a", complex_json(g.a())}, {"b", complex_json(g.b())}};
}

Json to_json(const GroupElement& g) {
  if (const auto* x = std::get_if<SU2Element>(&g)) return to_json(*x);
  const auto& y = std::get<SO4Element>(g);
  return Json{{"type", "SO4"}, {"g1", to_json(y.g1)}, {"g2", to_json(y.g2)}};
}

Json to_json(const MixingReport& r) {
  Json j{{"dim", r.dim},
         {"verdict", to_string(r.verdict)},
         {"witness_g", r.witness_g ? to_json(*r.witness_g) : Json(nullptr)},
         {"pair", r.pair ? Json::array({(*r.pair)[0], (*r.pair)[1]}) : Json(nullptr)},
         {"margin", r.margin},
         {"samples_used", r.samples_used},
         {"tol", r.tol},
         {"reason", r.reason}};
  return j;
}

Json to_json(const OrbitReport& r) {
  Json pairs = Json::array();
  for (const auto& [i, j] : r.S) pairs.push_back(Json::array({i, j}));
  return Json{{"ranks", r.ranks},
              {"S", pairs},
              {"S_tilde", r.S_tilde},
              {"verdict", to_string(r.verdict)},
              {"samples_used", r.samples_used},
              {"converged", r.converged}};
}

Json to_json(const S3ExactReport& r) {
  Json cmps = Json::array();
  for (const auto& c : r.comparisons)
    cmps.push_back(Json{{"s", c.s},
                        {"j", c.j},
                        {"differ", c.differ},
                        {"proportional", c.proportional},
                        {"leading_exponent_j", c.lead_x_plus},
                        {"leading_exponent_ell_minus_j", c.lead_x_minus},
                        {"h1", c.h1},
                        {"h2", c.h2}});
  return Json{{"ell", r.ell},
              {"m1", r.m1},
              {"m2", r.m2},
              {"rows", Json::array({Json::array({r.rows[0][0], r.rows[0][1]}),
                                    Json::array({r.rows[1][0], r.rows[1][1]})})},
              {"verdict", to_string(r.verdict)},
              {"table_certificate", r.table_certificate},
              {"leading_certificate", r.leading_certificate},
              {"comparisons", cmps}};
}

std::string alpha_key(double alpha) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", alpha);
  return buf;
}

Json to_json(const TestReport& r) {
  Json decisions = Json::object();
  for (const auto& [alpha, reject] : r.reject_at) decisions[alpha_key(alpha)] = reject;
  return Json{{"test", r.test},
              {"statistic", r.statistic},
              {"p_value", r.p_value},
              {"n", r.n},
              {"alpha_decisions", decisions},
              {"seed", r.seed}};
}

Json to_json(const CovarianceEstimate& est) {
  Json c = Json::array();
  Json se = Json::array();
  for (Eigen::Index i = 0; i < est.C_hat.rows(); ++i) {
    Json crow = Json::array();
    Json srow = Json::array();
    for (Eigen::Index k = 0; k < est.C_hat.cols(); ++k) {
      crow.push_back(complex_json(est.C_hat(i, k)));
      srow.push_back(est.std_err(i, k));
    }
    c.push_back(crow);
    se.push_back(srow);
  }
  return Json{{"C_hat", c}, {"std_err", se}, {"n", est.n}};
}

}  // namespace invfield
