#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "invfield/mixing.hpp"
#include "invfield/report.hpp"
#include "invfield/stats.hpp"

namespace invfield::cli {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || !std::isfinite(v))
    throw InvalidArgument("cannot parse " + what + " '" + s + "'");
  return v;
}

// Entries "re" or "re:im".
CVector parse_complex_list(const std::string& s) {
  std::vector<cplx> vals;
  for (const auto& item : split(s, ',')) {
    const auto parts = split(item, ':');
    if (parts.size() == 1)
      vals.emplace_back(parse_double(parts[0], "alpha entry"), 0.0);
    else if (parts.size() == 2)
      vals.emplace_back(parse_double(parts[0], "alpha entry"), parse_double(parts[1], "alpha entry"));
    else
      throw InvalidArgument("cannot parse alpha entry '" + item + "'");
  }
  CVector v(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i) v(static_cast<Eigen::Index>(i)) = vals[i];
  return v;
}

SpaceTag make_tag(const RunConfig& cfg) { return SpaceTag{parse_space(cfg.space), cfg.ell}; }

std::shared_ptr<const SelfConjBasis> make_basis(const RunConfig& cfg) {
  const SpaceTag tag = make_tag(cfg);
  const SelfConjBasis ref = torus_adapted_selfconj_basis(tag);
  if (cfg.basis == "torus") return std::make_shared<SelfConjBasis>(ref);
  RngStream rng(cfg.basis_seed, 0);
  if (cfg.basis == "random") return std::make_shared<SelfConjBasis>(random_selfconj_basis(ref, rng));
  if (cfg.basis == "translated")
    return std::make_shared<SelfConjBasis>(translated_basis(ref, haar_sample_for(tag, rng)));
  throw InvalidArgument("unknown basis '" + cfg.basis + "' (expected torus, random or translated)");
}

GroupElement parse_group(const std::string& text, const SpaceTag& tag) {
  std::vector<double> a;
  for (const auto& item : split(text, ',')) a.push_back(parse_double(item, "Euler angle"));
  if (tag.space == Space::S3) {
    if (a.size() != 6) throw InvalidArgument("--g needs six Euler angles on s3 (one triple per factor)");
    return SO4Element{from_euler_zyz(a[0], a[1], a[2]), from_euler_zyz(a[3], a[4], a[5])};
  }
  if (a.size() != 3) throw InvalidArgument("--g needs three Euler angles \"alpha,beta,gamma\"");
  return from_euler_zyz(a[0], a[1], a[2]);
}

Json config_json(const RunConfig& cfg) {
  return Json{{"command", cfg.command}, {"space", cfg.space},       {"ell", cfg.ell},
              {"basis", cfg.basis},     {"basis_seed", cfg.basis_seed}, {"seed", cfg.seed},
              {"samples", cfg.samples}, {"tol", cfg.tol},           {"threads", cfg.threads},
              {"out", cfg.out},         {"format", cfg.format},     {"g", cfg.g}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
}

// JSON goes to --out when given (with a one-line summary on stdout),
// otherwise to stdout.
void emit(const RunConfig& cfg, const Json& j, const std::string& summary) {
  const std::string text = j.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text(cfg.out, text);
    std::cout << summary << "\n";
    spdlog::info("wrote {}", cfg.out);
  }
}

int verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Mixing: return kOk;
    case Verdict::NotMixing: return kNegative;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kError;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

// Samples read from a `sample_id,k,re,im` file, in order of appearance.
struct CsvSamples {
  std::vector<long> ids;
  std::vector<std::map<int, cplx>> values;
};

CsvSamples read_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot read '" + path + "'");
  std::string line;
  long lineno = 0;
  auto bad = [&](const std::string& why) {
    return InvalidArgument("malformed CSV at line " + std::to_string(lineno) + ": " + why);
  };
  if (!std::getline(f, line)) throw InvalidArgument("malformed CSV at line 1: empty file");
  lineno = 1;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "sample_id,k,re,im") throw bad("expected header 'sample_id,k,re,im'");

  CsvSamples out;
  std::map<long, std::size_t> slot;
  while (std::getline(f, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != 4) throw bad("expected 4 fields, found " + std::to_string(cells.size()));
    long id = 0;
    int k = 0;
    double re = 0.0, im = 0.0;
    try {
      std::size_t u1 = 0, u2 = 0;
      id = std::stol(cells[0], &u1);
      k = std::stoi(cells[1], &u2);
      if (u1 != cells[0].size() || u2 != cells[1].size()) throw std::invalid_argument("trailing");
      re = parse_double(cells[2], "re");
      im = parse_double(cells[3], "im");
    } catch (const std::exception&) {
      throw bad("cannot parse '" + line + "'");
    }
    auto it = slot.find(id);
    if (it == slot.end()) {
      it = slot.emplace(id, out.ids.size()).first;
      out.ids.push_back(id);
      out.values.emplace_back();
    }
    if (!out.values[it->second].emplace(k, cplx(re, im)).second)
      throw bad("duplicate k " + std::to_string(k) + " for sample " + std::to_string(id));
  }
  if (out.values.empty()) throw bad("no data rows");
  for (std::size_t t = 1; t < out.values.size(); ++t) {
    if (out.values[t].size() != out.values[0].size())
      throw InvalidArgument("malformed CSV: sample " + std::to_string(out.ids[t]) + " has " +
                            std::to_string(out.values[t].size()) + " entries, expected " +
                            std::to_string(out.values[0].size()));
  }
  return out;
}

CVector coefficient_vector(const std::map<int, cplx>& row, const SelfConjBasis& basis, long id) {
  CVector a(basis.dim());
  for (int i = 0; i < basis.dim(); ++i) {
    const auto it = row.find(basis.label_of(i));
    if (it == row.end())
      throw InvalidArgument("sample " + std::to_string(id) + " lacks label " + std::to_string(basis.label_of(i)));
    a(i) = it->second;
  }
  return a;
}

std::vector<cplx> label_series(const CsvSamples& data, int label) {
  std::vector<cplx> out;
  for (std::size_t t = 0; t < data.values.size(); ++t) {
    const auto it = data.values[t].find(label);
    if (it == data.values[t].end())
      throw InvalidArgument("sample " + std::to_string(data.ids[t]) + " lacks k = " + std::to_string(label));
    out.push_back(it->second);
  }
  return out;
}

std::vector<CMatrix> matrix_samples(const CsvSamples& data) {
  const auto count = static_cast<int>(data.values[0].size());
  const int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(count))));
  if (d * d != count || d < 2)
    throw InvalidArgument("structure test needs d*d entries per sample (k = i*d + j), found " +
                          std::to_string(count));
  std::vector<CMatrix> out;
  for (std::size_t t = 0; t < data.values.size(); ++t) {
    CVector v(count);
    for (int k = 0; k < count; ++k) {
      const auto it = data.values[t].find(k);
      if (it == data.values[t].end())
        throw InvalidArgument("sample " + std::to_string(data.ids[t]) + " lacks k = " + std::to_string(k));
      v(k) = it->second;
    }
    out.push_back(unflatten(v, d));
  }
  return out;
}

}  // namespace

int cmd_check_mixing(const RunConfig& cfg, const MixingOptions& opt) {
  const auto basis = make_basis(cfg);
  RngStream rng(cfg.seed, 0);
  spdlog::info("checking {} ell={} basis={} (dim {})", cfg.space, cfg.ell, cfg.basis, basis->dim());

  const MixingReport report = cfg.g.empty()
                                  ? check_mixing(*basis, cfg.samples, cfg.tol, rng, cfg.threads)
                                  : check_witness(*basis, parse_group(cfg.g, basis->tag()), cfg.tol);
  Json j{{"config", config_json(cfg)}, {"report", to_json(report)}};
  Verdict verdict = report.verdict;

  if (opt.orbit) {
    RngStream orbit_rng = rng.split(1);
    const OrbitReport orbit = orbit_orthogonality(*basis, opt.orbit_samples, opt.rank_tol, orbit_rng);
    j["config"]["orbit_samples"] = opt.orbit_samples;
    j["config"]["rank_tol"] = opt.rank_tol;
    j["orbit"] = to_json(orbit);
    if (verdict == Verdict::Inconclusive) verdict = orbit.verdict;
  }
  if (opt.exact) {
    if (basis->tag().space != Space::S3 || cfg.basis != "torus")
      throw InvalidArgument("--exact applies to the torus basis on s3");
    const int m2 = opt.m2 > 0 ? opt.m2 : std::min(2, cfg.ell - cfg.ell / 2);
    const S3ExactReport exact = s3_exact_mixing(cfg.ell, opt.m1, m2);
    j["config"]["m1"] = opt.m1;
    j["config"]["m2"] = m2;
    j["exact"] = to_json(exact);
    if (exact.verdict == Verdict::Mixing) verdict = Verdict::Mixing;
  }
  j["verdict"] = to_string(verdict);

  emit(cfg, j, "verdict " + to_string(verdict) + " (margin " + std::to_string(report.margin) + ")");
  spdlog::info("verdict {}", to_string(verdict));
  return verdict_code(verdict);
}

int cmd_simulate(const RunConfig& cfg, const SimulateOptions& opt) {
  require(cfg.samples >= 1, "--n must be positive");
  RngStream rng(cfg.seed, 0);
  std::ostringstream os;
  os << "sample_id,k,re,im\n";
  auto row = [&os](long id, int k, cplx z) { os << id << ',' << k << ',' << fmt17(z.real()) << ',' << fmt17(z.imag()) << '\n'; };

  if (opt.dist == "bijoux") {
    require(!opt.alpha.empty(), "bijoux needs --alpha");
    const CVector alpha = parse_complex_list(opt.alpha);
    require(alpha.size() >= 2, "bijoux needs at least 2 alpha entries");
    const int d = static_cast<int>(alpha.size());
    for (long t = 0; t < cfg.samples; ++t) {
      const BijouxSample s = bijoux_sample(d - 1, alpha, rng);
      const CVector v = flatten(s.B);
      for (int k = 0; k < d * d; ++k) row(t, k, v(k));
    }
  } else {
    Marginal m;
    if (opt.dist == "gaussian")
      m = Marginal::gaussian(opt.c);
    else if (opt.dist == "uniform-disc")
      m = Marginal::uniform_disc(opt.r);
    else if (opt.dist == "two-point")
      m = Marginal::two_point(opt.rho);
    else
      throw InvalidArgument("unknown distribution '" + opt.dist +
                            "' (expected gaussian, uniform-disc, two-point or bijoux)");
    const auto basis = make_basis(cfg);
    for (long t = 0; t < cfg.samples; ++t) {
      const CoefficientVector a = sample_independent(basis, m, rng);
      for (int i = 0; i < basis->dim(); ++i) row(t, basis->label_of(i), a.values()(i));
    }
  }

  if (cfg.out.empty()) {
    std::cout << os.str();
  } else {
    write_text(cfg.out, os.str());
    std::cout << "wrote " << cfg.samples << " samples to " << cfg.out << "\n";
  }
  spdlog::info("simulated {} samples, dist={}, seed={}", cfg.samples, opt.dist, cfg.seed);
  return kOk;
}

int cmd_test(const RunConfig& cfg, const TestOptions& opt) {
  require(!opt.in.empty(), "test needs --in");
  const CsvSamples data = read_csv(opt.in);
  RngStream rng(cfg.seed, 0);
  Json j{{"config", config_json(cfg)}};
  j["config"]["kind"] = opt.kind;
  j["config"]["in"] = opt.in;
  j["config"]["alpha"] = opt.alpha;

  TestReport report;
  bool reject = false;
  if (opt.kind == "invariance") {
    const auto basis = make_basis(cfg);
    std::vector<CVector> all;
    for (std::size_t t = 0; t < data.values.size(); ++t)
      all.push_back(coefficient_vector(data.values[t], *basis, data.ids[t]));
    require(all.size() >= 4, "invariance test needs at least 4 samples");
    const std::size_t half = all.size() / 2;
    const std::vector<CVector> a(all.begin(), all.begin() + static_cast<long>(half));
    const std::vector<CVector> b(all.begin() + static_cast<long>(half), all.end());

    std::vector<GroupElement> gs;
    if (!cfg.g.empty()) {
      gs.push_back(parse_group(cfg.g, basis->tag()));
    } else if (opt.witness) {
      const MixingReport mix = check_mixing(*basis, cfg.samples, cfg.tol, rng, cfg.threads);
      if (!mix.witness_g) throw InvalidArgument("no mixing witness found: " + mix.reason);
      gs.push_back(*mix.witness_g);
      j["witness"] = to_json(mix);
    } else {
      for (int i = 0; i < opt.n_g; ++i) gs.push_back(haar_sample_for(basis->tag(), rng));
    }
    Json glist = Json::array();
    for (const auto& g : gs) glist.push_back(to_json(g));
    j["g_list"] = glist;
    report = invariance_test(a, b, coefficient_rotation(basis), coefficient_features(*basis), gs);
    reject = report.rejects(opt.alpha);
  } else if (opt.kind == "structure") {
    const std::vector<CMatrix> mats = matrix_samples(data);
    const ColumnStructureReport s = check_column_structure(mats, opt.z_max);
    const double z = std::max(s.cross_column_z, s.within_column_z);
    const int d = static_cast<int>(mats.front().rows());
    // Two-sided normal tail, Bonferroni over the complex comparisons made.
    const double comparisons = static_cast<double>(d) * d * (d * (d - 1) / 2 + d);
    report = make_report("column_structure", z, std::min(1.0, comparisons * std::erfc(z / std::sqrt(2.0))),
                         static_cast<long>(mats.size()));
    j["structure"] = Json{{"cross_column_z", s.cross_column_z},
                          {"within_column_z", s.within_column_z},
                          {"z_max", opt.z_max},
                          {"passes", s.passes},
                          {"pooled", to_json(s.pooled)}};
    reject = !s.passes;
  } else if (opt.kind == "gaussianity") {
    std::vector<double> xs;
    for (cplx z : label_series(data, opt.label)) {
      if (opt.part == "re")
        xs.push_back(z.real());
      else if (opt.part == "im")
        xs.push_back(z.imag());
      else
        throw InvalidArgument("--part must be re or im");
    }
    report = gaussianity_test(xs);
    reject = report.rejects(opt.alpha);
  } else if (opt.kind == "phase") {
    report = phase_invariance_test(label_series(data, opt.label), opt.phi);
    reject = report.rejects(opt.alpha);
  } else {
    throw InvalidArgument("unknown test kind '" + opt.kind + "' (expected invariance, structure, gaussianity or phase)");
  }
  report.seed = cfg.seed;
  j["report"] = to_json(report);
  j["rejected"] = reject;
  emit(cfg, j, report.test + ": statistic " + std::to_string(report.statistic) + ", p " +
                   std::to_string(report.p_value) + (reject ? " (reject)" : " (pass)"));
  return reject ? kNegative : kOk;
}

int cmd_demo_nonorthogonal(const RunConfig& cfg, const DemoOptions& opt) {
  const CVector alpha = parse_complex_list(opt.alpha);
  require(alpha.size() >= 2, "demo-nonorthogonal needs at least 2 alpha entries");
  require(cfg.samples >= 2, "--n must be at least 2");
  const int d = static_cast<int>(alpha.size());
  RngStream rng(cfg.seed, 0);
  std::vector<CMatrix> mats;
  mats.reserve(static_cast<std::size_t>(cfg.samples));
  for (long t = 0; t < cfg.samples; ++t) mats.push_back(bijoux_sample(d - 1, alpha, rng).B);
  const ColumnStructureReport s = check_column_structure(mats);
  const bool enough = cfg.samples >= 100;
  const CMatrix expected = alpha * alpha.adjoint();

  Json table = Json::array();
  std::ostringstream csv;
  csv << "i,k,re,im,std_err,z,expected_re,expected_im,significant\n";
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      const cplx c = s.pooled.C_hat(i, k);
      const double se = s.pooled.std_err(i, k);
      const double z = se > 0.0 ? std::abs(c) / se : 0.0;
      const bool sig = enough && i != k && z > opt.z_flag;
      table.push_back(Json{{"i", i},
                           {"k", k},
                           {"C", Json::array({c.real(), c.imag()})},
                           {"std_err", se},
                           {"z", z},
                           {"expected", Json::array({expected(i, k).real(), expected(i, k).imag()})},
                           {"significant", sig}});
      csv << i << ',' << k << ',' << fmt17(c.real()) << ',' << fmt17(c.imag()) << ',' << fmt17(se) << ','
          << fmt17(z) << ',' << fmt17(expected(i, k).real()) << ',' << fmt17(expected(i, k).imag()) << ','
          << (sig ? 1 : 0) << '\n';
    }
  if (!opt.table.empty()) write_text(opt.table, csv.str());

  Json j{{"config", config_json(cfg)},
         {"status", enough ? "ok" : "insufficient n"},
         {"n", cfg.samples},
         {"z_flag", opt.z_flag},
         {"covariance", to_json(s.pooled)},
         {"entries", table},
         {"column_structure", Json{{"cross_column_z", s.cross_column_z},
                                   {"within_column_z", s.within_column_z},
                                   {"passes", s.passes}}}};
  j["config"]["alpha"] = opt.alpha;
  if (cfg.format == "csv") {
    if (cfg.out.empty())
      std::cout << csv.str();
    else
      write_text(cfg.out, csv.str());
  } else if (cfg.format == "json") {
    emit(cfg, j, std::string("status ") + (enough ? "ok" : "insufficient n"));
  } else {
    throw InvalidArgument("unknown format '" + cfg.format + "' (expected json or csv)");
  }
  if (!enough) spdlog::warn("n = {} is below 100; no significance claims are made", cfg.samples);
  return kOk;
}

}  // namespace invfield::cli
