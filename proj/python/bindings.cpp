#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qkc/cli.hpp"
#include "qkc/curves.hpp"
#include "qkc/error.hpp"
#include "qkc/grassq.hpp"
#include "qkc/io.hpp"
#include "qkc/qk.hpp"

namespace py = pybind11;
using namespace qkc;

namespace {

std::string expr_json(const Poset& p, const SchubertExpr& e) { return expr_to_json(p, e).dump(); }

template <class F>
std::string on_shape(const std::string& space, const std::string& shape, F&& f) {
  const Poset p(parse_space(space));
  return expr_json(p, f(p, parse_shape(p, shape)));
}

py::tuple run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_qkc, m) {
  m.doc() = "Quantum K-theory of cominuscule flag varieties";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("space_name", [](const std::string& s) { return parse_space(s).name(); });
  m.def("shapes", [](const std::string& s) {
    const Poset p(parse_space(s));
    std::vector<std::vector<int>> out;
    for (const Shape& sh : enumerate_shapes(p)) out.push_back(shape_rows(p, sh));
    return out;
  });
  m.def("ideal", [](const std::string& s, const std::string& mu) { return on_shape(s, mu, ideal_sheaf); });
  m.def("qideal", [](const std::string& s, const std::string& mu) {
    return on_shape(s, mu, [](const Poset& p, const Shape& x) { return quantized_ideal_sheaf(p, x); });
  });
  m.def("alpha", [](const std::string& s, const std::string& mu) { return on_shape(s, mu, alpha); });
  m.def("chev", [](const std::string& s, const std::string& mu, bool quantum) {
    return on_shape(s, mu, [quantum](const Poset& p, const Shape& x) {
      return quantum ? chevalley_quantum(p, x).opposite : chevalley_classical(p, x).opposite;
    });
  }, py::arg("space"), py::arg("mu"), py::arg("quantum") = false);
  m.def("psi", [](const std::string& s, const std::string& u) {
    const Poset p(parse_space(s));
    return shape_rows(p, psi_shape(p, parse_shape(p, u)));
  });
  m.def("distance", [](const std::string& s, const std::string& u, const std::string& v) {
    const Poset p(parse_space(s));
    return distance(p, parse_shape(p, u), parse_shape(p, v));
  });
  m.def("detq", [](int k, int n, const std::vector<int>& mu) {
    const Poset p(Space::grassmannian(k, n));
    return expr_json(p, detq_product(k, n, mu));
  });
  m.def("format", [](const std::string& s, const std::string& expr_json_text) {
    const Poset p(parse_space(s));
    return format_expr(p, expr_from_json(p, nlohmann::json::parse(expr_json_text)));
  });
  m.def("verify", [](const std::string& s, const std::string& check, unsigned jobs) {
    const Poset p(parse_space(s));
    VerifyReport r;
    if (check == "duality") r = verify_duality(p, jobs);
    else if (check == "classical") r = verify_classical(p, jobs);
    else if (check == "alpha") r = verify_alpha(p, jobs);
    else if (check == "branch") r = verify_branch_law(p);
    else if (check == "lemma-weight") r = verify_lemma_weight(p);
    else throw ConfigError("unknown check '" + check + "'");
    return py::make_tuple(r.checked, r.failures.size());
  }, py::arg("space"), py::arg("check"), py::arg("jobs") = 1);
  m.def("run", &run, "Run a command line; returns (exit code, stdout, stderr).");
}
