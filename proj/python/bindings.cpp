#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "acfc/catalog.hpp"
#include "acfc/cli.hpp"
#include "acfc/counterexamples.hpp"
#include "acfc/errors.hpp"
#include "acfc/functional_calculus.hpp"
#include "acfc/json_io.hpp"
#include "acfc/lp_extrapolation.hpp"

namespace py = pybind11;
using namespace acfc;

namespace {

std::vector<Scalar> valuesOf(const BVFunction& f) { return f.values(); }

BVFunction onSet(const std::string& set, const std::vector<Scalar>& values) {
  return BVFunction(parseSet(set), values);
}

NormOptions seeded(std::uint64_t seed) {
  NormOptions o;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-truncation BV/AC functional calculus models";

  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<SetMismatch>(m, "SetMismatch", PyExc_ValueError);
  py::register_exception<UnsupportedRule>(m, "UnsupportedRule", PyExc_RuntimeError);

  // Sets and functions.
  m.def("set_points", [](const std::string& set) { return parseSet(set).pointsAsDouble(); }, py::arg("set"),
        "Points of a set descriptor such as 'sigma0:4' or 'grid:0,1,5'.");
  m.def("set_json", [](const std::string& set) { return json(parseSet(set)).dump(); }, py::arg("set"));
  m.def("restrict", [](const std::string& rule, const std::string& set) {
    return valuesOf(restrict(parseRule(rule), parseSet(set)));
  }, py::arg("rule"), py::arg("set"));
  m.def("variation", [](const std::string& set, const std::vector<Scalar>& v) { return variation(onSet(set, v)); },
        py::arg("set"), py::arg("values"));
  m.def("sup_norm", [](const std::string& set, const std::vector<Scalar>& v) { return supNorm(onSet(set, v)); },
        py::arg("set"), py::arg("values"));
  m.def("bv_norm", [](const std::string& set, const std::vector<Scalar>& v) { return bvNorm(onSet(set, v)); },
        py::arg("set"), py::arg("values"));
  m.def("is_continuous_at_markers", [](const std::string& rule, const std::string& set) {
    return isContinuousAtMarkers(parseRule(rule), parseSet(set));
  }, py::arg("rule"), py::arg("set"));
  m.def("standard_catalog", [] {
    std::vector<std::string> ids;
    for (const auto& f : standardCatalog()) ids.push_back(f.id());
    return ids;
  });

  // Operator models.
  m.def("matrix_norm", [](const Matrix& a, double p, std::uint64_t seed) {
    const auto n = matrixPNorm(a, p, seeded(seed));
    return py::make_tuple(n.value, n.exact);
  }, py::arg("a"), py::arg("p"), py::arg("seed") = 0,
        "(value, exact): exact for p in {1, 2, inf}, otherwise a lower bound.");
  m.def("multiplication_operator", [](const std::string& set) { return multiplicationOperator(parseSet(set)).matrix; },
        py::arg("set"));
  m.def("u_iso_c0", [](std::size_t n) {
    auto [u, uInv] = uIsoC0(n);
    return py::make_tuple(u.matrix, uInv.matrix);
  }, py::arg("n"));
  m.def("ell1_iso", [](std::size_t n) {
    const Ell1Iso iso(n);
    return py::make_tuple(iso.forwardMatrix().matrix, iso.inverseMatrix().matrix);
  }, py::arg("n"));

  // Functional calculi.
  m.def("diagonal_calculus", [](const std::string& set, const std::string& rule) {
    return diagonalCalculus(parseSet(set)).matrix(parseRule(rule));
  }, py::arg("set"), py::arg("rule"));
  m.def("phi1", [](std::size_t n, const std::string& rule) { return phi1(n).matrix(parseRule(rule)); },
        py::arg("n"), py::arg("rule"));
  m.def("phi2", [](std::size_t n, const std::string& rule) { return phi2(n).matrix(parseRule(rule)); },
        py::arg("n"), py::arg("rule"));
  m.def("homomorphism_check", [](const std::string& set, double tol) {
    return json(homomorphismCheck(diagonalCalculus(parseSet(set)), standardCatalog(), tol)).dump();
  }, py::arg("set"), py::arg("tol") = 1e-10);

  // Demonstrations; reports are JSON strings.
  m.def("c0_obstruction", [](std::size_t n, double eps, std::size_t window) {
    return json(c0ObstructionDemo(n, eps, window)).dump();
  }, py::arg("n"), py::arg("eps") = 0.0, py::arg("window") = 1);
  m.def("ell1_iso_demo", [](std::size_t n, std::size_t trials, std::uint64_t seed) {
    return json(ell1IsoDemo(n, trials, seed)).dump();
  }, py::arg("n"), py::arg("trials") = 100, py::arg("seed") = 1);
  m.def("banach_limit_demo", [](std::size_t m) { return json(banachLimitDemo(m)).dump(); }, py::arg("m"));
  m.def("riesz_thorin", [](const Matrix& a, double p0, double p1, double theta, double tol) {
    return json(rieszThorinCheck(a, p0, p1, theta, tol)).dump();
  }, py::arg("a"), py::arg("p0"), py::arg("p1"), py::arg("theta"), py::arg("tol") = 1e-9);
  m.def("duality_identity", [](const Matrix& a, std::size_t trials, std::uint64_t seed, double tol) {
    return json(dualityIdentityCheck(a, trials, seed, tol)).dump();
  }, py::arg("a"), py::arg("trials") = 100, py::arg("seed") = 0, py::arg("tol") = 1e-12);
  m.def("random_idempotent", &randomIdempotent, py::arg("dim"), py::arg("rank"), py::arg("seed"));

  // Command line front end.
  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::runCli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
