#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "invfield/exact_poly.hpp"
#include "invfield/irrep.hpp"
#include "invfield/mixing.hpp"
#include "invfield/report.hpp"
#include "invfield/stats.hpp"

namespace py = pybind11;
using namespace invfield;

namespace {

std::shared_ptr<const SelfConjBasis> make_basis(const std::string& space, int ell, const std::string& kind,
                                                std::uint64_t seed) {
  const SpaceTag tag{parse_space(space), ell};
  const SelfConjBasis ref = torus_adapted_selfconj_basis(tag);
  if (kind == "torus") return std::make_shared<SelfConjBasis>(ref);
  RngStream rng(seed, 0);
  if (kind == "random") return std::make_shared<SelfConjBasis>(random_selfconj_basis(ref, rng));
  if (kind == "translated") return std::make_shared<SelfConjBasis>(translated_basis(ref, haar_sample_for(tag, rng)));
  throw InvalidArgument("unknown basis '" + kind + "' (expected torus, random or translated)");
}

Marginal make_marginal(const std::string& dist, double param) {
  if (dist == "gaussian") return Marginal::gaussian(param);
  if (dist == "uniform-disc") return Marginal::uniform_disc(param);
  if (dist == "two-point") return Marginal::two_point(param);
  throw InvalidArgument("unknown distribution '" + dist + "'");
}

// Rows are samples, columns basis indices.
CMatrix stack(const std::vector<CVector>& xs) {
  CMatrix m(static_cast<Eigen::Index>(xs.size()), xs.empty() ? 0 : xs.front().size());
  for (std::size_t t = 0; t < xs.size(); ++t) m.row(static_cast<Eigen::Index>(t)) = xs[t].transpose();
  return m;
}

std::vector<CVector> unstack(const CMatrix& m) {
  std::vector<CVector> xs;
  for (Eigen::Index t = 0; t < m.rows(); ++t) xs.push_back(m.row(t).transpose());
  return xs;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Invariant random fields on spheres and SU(2)";
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);

  py::class_<SU2Element>(m, "SU2Element")
      .def(py::init<>())
      .def(py::init<cplx, cplx>(), py::arg("a"), py::arg("b"))
      .def_property_readonly("a", &SU2Element::a)
      .def_property_readonly("b", &SU2Element::b)
      .def("matrix", &SU2Element::matrix)
      .def("inverse", [](const SU2Element& g) { return inverse(g); })
      .def("__matmul__", [](const SU2Element& g, const SU2Element& h) { return compose(g, h); })
      .def("__repr__", [](const SU2Element& g) { return to_json(g).dump(); });

  m.def("from_euler_zyz", &from_euler_zyz, py::arg("alpha"), py::arg("beta"), py::arg("gamma"));
  m.def("haar_sample", [](std::uint64_t seed, std::uint64_t stream) {
    RngStream rng(seed, stream);
    return haar_sample(rng);
  }, py::arg("seed"), py::arg("stream") = 0);

  m.def("rep_matrix", &rep_matrix, py::arg("ell"), py::arg("g"));
  m.def("matrix_coeff", &matrix_coeff, py::arg("ell"), py::arg("g"), py::arg("s"), py::arg("j"));
  m.def("clebsch_gordan_components", &clebsch_gordan_components, py::arg("ell"), py::arg("k"));
  m.def("p_poly", [](int ell, int s, int j) {
    const ExactPoly p = p_poly(ell, s, j);
    std::vector<std::string> out;
    for (const auto& c : p.coeffs()) out.push_back(c.str());
    return out;
  }, py::arg("ell"), py::arg("s"), py::arg("j"), "Exact coefficients of x^k as fraction strings.");

  py::class_<SelfConjBasis, std::shared_ptr<SelfConjBasis>>(m, "Basis")
      .def(py::init([](const std::string& space, int ell, const std::string& kind, std::uint64_t seed) {
             return std::const_pointer_cast<SelfConjBasis>(make_basis(space, ell, kind, seed));
           }),
           py::arg("space"), py::arg("ell"), py::arg("kind") = "torus", py::arg("seed") = 1)
      .def_property_readonly("dim", &SelfConjBasis::dim)
      .def_property_readonly("change", &SelfConjBasis::change)
      .def_property_readonly("labels", [](const SelfConjBasis& b) {
        std::vector<int> l;
        for (int i = 0; i < b.dim(); ++i) l.push_back(b.label_of(i));
        return l;
      })
      .def("rep_matrix", [](const SelfConjBasis& b, const SU2Element& g) { return basis_rep_matrix(b, g); })
      .def("rep_matrix", [](const SelfConjBasis& b, const SU2Element& g1, const SU2Element& g2) {
        return basis_rep_matrix(b, SO4Element{g1, g2});
      })
      .def("realified_rep", [](const SelfConjBasis& b, const SU2Element& g) { return realified_rep(b, g); })
      .def("pairing_defect", &pairing_defect);

  m.def("check_mixing", [](const SelfConjBasis& b, long n, double tol, std::uint64_t seed, int threads) {
    RngStream rng(seed, 0);
    return to_json(check_mixing(b, n, tol, rng, threads)).dump();
  }, py::arg("basis"), py::arg("n") = 1000, py::arg("tol") = 1e-6, py::arg("seed") = 20160705,
        py::arg("threads") = 1);
  m.def("orbit_orthogonality", [](const SelfConjBasis& b, long n, double rank_tol, std::uint64_t seed) {
    RngStream rng(seed, 0);
    return to_json(orbit_orthogonality(b, n, rank_tol, rng)).dump();
  }, py::arg("basis"), py::arg("n") = 100000, py::arg("rank_tol") = 1e-8, py::arg("seed") = 20160705);
  m.def("s3_exact_mixing", [](int ell, int m1, int m2) { return to_json(s3_exact_mixing(ell, m1, m2)).dump(); },
        py::arg("ell"), py::arg("m1"), py::arg("m2"));
  m.def("wedge_pairing", [](const SelfConjBasis& b, const SU2Element& g, int s, int mm) {
    return wedge_pairing(b, g, s, mm);
  }, py::arg("basis"), py::arg("g"), py::arg("s"), py::arg("m"));

  m.def("simulate", [](std::shared_ptr<SelfConjBasis> b, const std::string& dist, double param, long n,
                       std::uint64_t seed) {
    RngStream rng(seed, 0);
    const Marginal marginal = make_marginal(dist, param);
    std::vector<CVector> xs;
    for (long t = 0; t < n; ++t) xs.push_back(sample_independent(b, marginal, rng).values());
    return stack(xs);
  }, py::arg("basis"), py::arg("dist") = "gaussian", py::arg("param") = 1.0, py::arg("n") = 1000,
        py::arg("seed") = 20160705);
  m.def("rotate_coeffs", [](const SelfConjBasis& b, const CMatrix& a, const SU2Element& g) {
    return CMatrix(a * basis_rep_matrix(b, inverse(g)).transpose());
  }, py::arg("basis"), py::arg("samples"), py::arg("g"), "Applies a -> D(g^-1) a to every row.");
  m.def("bijoux_samples", [](const CVector& alpha, long n, std::uint64_t seed) {
    RngStream rng(seed, 0);
    std::vector<CVector> xs;
    for (long t = 0; t < n; ++t) xs.push_back(flatten(bijoux_sample(static_cast<int>(alpha.size()) - 1, alpha, rng).B));
    return stack(xs);
  }, py::arg("alpha"), py::arg("n"), py::arg("seed") = 20160705, "Rows are B flattened row-major.");

  m.def("invariance_test", [](std::shared_ptr<SelfConjBasis> b, const CMatrix& group_a, const CMatrix& group_b,
                              const std::vector<SU2Element>& gs) {
    std::vector<GroupElement> g_list(gs.begin(), gs.end());
    return to_json(invariance_test(unstack(group_a), unstack(group_b), coefficient_rotation(b),
                                   coefficient_features(*b), g_list)).dump();
  }, py::arg("basis"), py::arg("group_a"), py::arg("group_b"), py::arg("g_list"));
  m.def("gaussianity_test", [](std::vector<double> x) { return to_json(gaussianity_test(std::move(x))).dump(); },
        py::arg("samples"));
  m.def("ks_two_sample", [](std::vector<double> x, std::vector<double> y) {
    return to_json(ks_two_sample(std::move(x), std::move(y))).dump();
  }, py::arg("x"), py::arg("y"));
  m.def("phase_invariance_test", [](const std::vector<cplx>& z, double phi) {
    return to_json(phase_invariance_test(z, phi)).dump();
  }, py::arg("samples"), py::arg("phi"));
  m.def("check_column_structure", [](const CMatrix& rows, int d, double z_max) {
    std::vector<CMatrix> mats;
    for (Eigen::Index t = 0; t < rows.rows(); ++t) mats.push_back(unflatten(rows.row(t).transpose(), d));
    const ColumnStructureReport r = check_column_structure(mats, z_max);
    Json j{{"cross_column_z", r.cross_column_z},
           {"within_column_z", r.within_column_z},
           {"passes", r.passes},
           {"pooled", to_json(r.pooled)}};
    return j.dump();
  }, py::arg("samples"), py::arg("d"), py::arg("z_max") = 4.0);
}
