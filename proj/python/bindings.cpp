#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "linpoly/error.hpp"
#include "linpoly/galois.hpp"
#include "linpoly/parse.hpp"
#include "linpoly/report.hpp"

namespace py = pybind11;
using namespace linpoly;

// Results cross the boundary as JSON text; the Python package decodes them.
PYBIND11_MODULE(_core, m) {
  m.doc() = "linpoly core";
  py::register_exception<Error>(m, "LinpolyError", PyExc_ValueError);
  m.attr("DEFAULT_SEED") = kDefaultSeed;
  m.attr("__version__") = kToolVersion;

  m.def("factor", [](const std::string& field, const std::string& poly, std::uint64_t seed) {
    const Field F = parse_field(field, seed);
    const Poly a = parse_poly(F, poly);
    Rng rng = Rng::stream(seed, "edf");
    return factorization_json(a, factor(a, rng)).dump();
  }, py::arg("field"), py::arg("poly"), py::arg("seed") = kDefaultSeed);

  m.def("group_order", [](unsigned n, std::uint64_t q, unsigned d) {
    return (d ? order_gamma_l(n, q, d) : order_gl(n, q)).str();
  }, py::arg("n"), py::arg("q"), py::arg("d") = 0);

  m.def("cycle_types", [](unsigned n, std::uint64_t q, unsigned d) {
    GroupDescriptor g = d ? describe_gamma_l(n, q, d) : describe_gl(n, q);
    g.census = d ? semilinear_cycle_types(q, n, d) : gl_cycle_types(n, q);
    return group_json(g).dump();
  }, py::arg("n"), py::arg("q"), py::arg("d") = 0);

  m.def("deduction", [](std::uint64_t q, unsigned n) { return deduction_json(divisibility_deduction(q, n)).dump(); },
        py::arg("q"), py::arg("n"));

  m.def("multiplicity", [](const std::string& field, const std::string& L, std::uint64_t seed) {
    const LinearizedPoly Lp = parse_linearized(parse_field(field, seed), L);
    return multiplicity_json(Lp, multiplicity_decomposition(Lp)).dump();
  }, py::arg("field"), py::arg("L"), py::arg("seed") = kDefaultSeed);

  m.def("classify", [](const std::string& field, const std::string& L, std::uint64_t seed, unsigned count, unsigned max_k) {
    const LinearizedPoly Lp = parse_linearized(parse_field(field, seed), L);
    return classification_json(Lp, classify(Lp, Budget::uniform(count, max_k), seed)).dump();
  }, py::arg("field"), py::arg("L"), py::arg("seed") = kDefaultSeed, py::arg("count") = 64, py::arg("max_k") = 6);

  m.def("proposition", [](const std::string& field, const std::string& L, std::uint64_t seed) {
    const LinearizedPoly Lp = parse_linearized(parse_field(field, seed), L);
    return proposition_json(Lp, proposition_check(Lp, false, Budget::standard(), seed)).dump();
  }, py::arg("field"), py::arg("L"), py::arg("seed") = kDefaultSeed);

  m.def("verify_theorem", [](std::uint64_t q, unsigned n, std::uint64_t seed) {
    return theorem_json(verify_theorem(q, n, Budget::standard(), seed)).dump();
  }, py::arg("q"), py::arg("n"), py::arg("seed") = kDefaultSeed);

  m.def("hensel", [](const std::string& field, const std::string& f, const std::string& g, const std::string& alpha,
                     const std::string& beta, std::size_t N, std::uint64_t seed) {
    const Field F = parse_field(field, seed);
    const Poly fp = parse_poly(F, f), gp = parse_poly(F, g);
    Rng rng = Rng::stream(seed, "edf");
    const HenselProblem prob = alpha.empty() ? choose_problem(fp, gp, rng)
                                             : HenselProblem::make(fp, parse_element(F, alpha), gp, parse_element(F, beta));
    return run_hensel(prob, N).report.dump();
  }, py::arg("field"), py::arg("f"), py::arg("g"), py::arg("alpha") = "", py::arg("beta") = "",
     py::arg("N") = kDefaultTruncation, py::arg("seed") = kDefaultSeed);

  m.def("reproduce_paper", [](const std::vector<std::string>& sections, std::uint64_t seed, bool meta) {
    ReproduceOptions o;
    o.seed = seed;
    o.meta = meta;
    o.sections = {sections.begin(), sections.end()};
    py::gil_scoped_release release;
    return reproduce_paper(o).dump();
  }, py::arg("sections") = std::vector<std::string>{}, py::arg("seed") = kDefaultSeed, py::arg("meta") = false);
}
