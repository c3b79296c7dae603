#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "heckeho/commands.hpp"
#include "heckeho/error.hpp"
#include "heckeho/gln.hpp"
#include "heckeho/haff.hpp"
#include "heckeho/oracle.hpp"
#include "heckeho/weyl.hpp"

namespace py = pybind11;
using namespace heckeho;

namespace {

weyl::NodeSet parse_nodes(const weyl::GroupSpec& spec, const std::vector<std::string>& names) {
  weyl::NodeSet s = 0;
  for (const auto& n : names) s |= weyl::single(spec.parse_node(n));
  return s;
}

std::vector<std::string> names_of(const weyl::GroupSpec& spec, weyl::NodeSet s) {
  std::vector<std::string> out;
  for (auto n : weyl::nodes_of(s)) out.push_back(spec.node_name(n));
  return out;
}

}  // namespace

PYBIND11_MODULE(_heckeho, m) {
  m.doc() = "Finite-field Hecke algebra computations for GL products";
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<ff::GaloisField, std::shared_ptr<ff::GaloisField>>(m, "GaloisField")
      .def_property_readonly("p", &ff::GaloisField::p)
      .def_property_readonly("m", &ff::GaloisField::m)
      .def_property_readonly("order", &ff::GaloisField::order)
      .def("__repr__", [](const ff::GaloisField& f) {
        return "GF(" + std::to_string(f.p()) + "^" + std::to_string(f.m()) + ")";
      });
  m.def("field", [](int p, int deg) { return std::const_pointer_cast<ff::GaloisField>(ff::GaloisField::make(p, deg)); },
        py::arg("p"), py::arg("m") = 1);

  py::class_<weyl::GroupSpec>(m, "GroupSpec")
      .def_readonly("factors", &weyl::GroupSpec::factors)
      .def_readonly("torus_rank", &weyl::GroupSpec::torus_rank)
      .def_readonly("q", &weyl::GroupSpec::q)
      .def_readonly("p", &weyl::GroupSpec::p)
      .def_readonly("f", &weyl::GroupSpec::f)
      .def_property_readonly("node_count", &weyl::GroupSpec::node_count)
      .def("node_names", [](const weyl::GroupSpec& s) { return names_of(s, s.all_nodes()); })
      .def("__eq__", [](const weyl::GroupSpec& a, const weyl::GroupSpec& b) { return a == b; })
      .def("__repr__", [](const weyl::GroupSpec& s) {
        std::ostringstream os;
        os << "GroupSpec(factors=[";
        for (std::size_t i = 0; i < s.factors.size(); ++i) os << (i ? ", " : "") << s.factors[i];
        os << "], torus_rank=" << s.torus_rank << ", q=" << s.q << ")";
        return os.str();
      });
  m.def("build_spec", &weyl::build_spec, py::arg("factors"), py::arg("torus_rank") = 0, py::arg("q"));
  m.def("faces", [](const weyl::GroupSpec& spec) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : weyl::faces(spec)) out.push_back(names_of(spec, f.nodes));
    return out;
  });

  py::class_<haff::AffChar>(m, "AffChar")
      .def_property_readonly("exponents", [](const haff::AffChar& c) { return c.xi.exponents; })
      .def_property_readonly("torus_exponents", [](const haff::AffChar& c) { return c.xi.torus_exponents; })
      .def("J", [](const haff::AffChar& c, const weyl::GroupSpec& spec) { return names_of(spec, c.J); })
      .def("__eq__", [](const haff::AffChar& a, const haff::AffChar& b) { return a == b; });
  m.def(
      "make_char",
      [](const weyl::GroupSpec& spec, std::vector<std::vector<int>> exps, std::vector<int> torus,
         const std::vector<std::string>& J) {
        return haff::make_char(spec, {std::move(exps), std::move(torus)}, parse_nodes(spec, J));
      },
      py::arg("spec"), py::arg("exponents"), py::arg("torus_exponents") = std::vector<int>{}, py::arg("J"));
  m.def("all_characters", &haff::all_characters, py::arg("spec"), py::arg("cap") = 1000000);
  m.def("s_xi", [](const weyl::GroupSpec& spec, const haff::AffChar& c) {
    return names_of(spec, haff::s_xi(spec, c.xi));
  });
  m.def("is_supersingular", py::overload_cast<const weyl::GroupSpec&, const haff::AffChar&>(&haff::is_supersingular));
  m.def("has_finite_pd", py::overload_cast<const weyl::GroupSpec&, const haff::AffChar&>(&haff::has_finite_pd));
  m.def("stabilizer", &haff::stabilizer);
  m.def("conj_char", &haff::conj_char);
  m.def("char_label", &haff::label);
  m.def("ho_delta_hom", [](const weyl::GroupSpec& spec, const haff::AffChar& a, const haff::AffChar& b) {
    const auto h = haff::ho_delta_hom(spec, a, b);
    return py::make_tuple(h.dim, h.contains_iso);
  });
  m.def("res_face_projective", [](const weyl::GroupSpec& spec, const haff::AffChar& c,
                                  const std::vector<std::string>& face) {
    return haff::res_face_projective(spec, c, weyl::make_face(spec, parse_nodes(spec, face)));
  });

  py::class_<gln::SimpleSS>(m, "SimpleModule")
      .def_readonly("spec", &gln::SimpleSS::spec)
      .def_readonly("chi", &gln::SimpleSS::chi)
      .def_readonly("lambda_", &gln::SimpleSS::lambda)
      .def_readonly("nu", &gln::SimpleSS::nu)
      .def_readonly("d", &gln::SimpleSS::d)
      .def_property_readonly("dim", &gln::SimpleSS::dim)
      .def_property_readonly("label", &gln::SimpleSS::label)
      .def("__repr__", [](const gln::SimpleSS& s) { return "SimpleModule(" + s.label() + ")"; });
  m.def(
      "build_simple",
      [](const weyl::GroupSpec& spec, const haff::AffChar& chi, std::vector<ff::Elem> lambda,
         std::vector<ff::Elem> nu, const std::shared_ptr<ff::GaloisField>& field) {
        return gln::build_simple(spec, chi, std::move(lambda), std::move(nu), field);
      },
      py::arg("spec"), py::arg("chi"), py::arg("lambda_"), py::arg("nu") = std::vector<ff::Elem>{},
      py::arg("field"));
  m.def("mod_isomorphic", &gln::mod_isomorphic);
  m.def("ho_isomorphic", &gln::ho_isomorphic);
  m.def("classify", [](const gln::SimpleSS& a, const gln::SimpleSS& b) {
    const auto d = gln::classify(a, b);
    py::dict out;
    out["mod_iso"] = d.mod_iso;
    out["ho_iso"] = d.ho_iso;
    out["witness"] = d.witness;
    return out;
  });
  m.def(
      "enumerate_simples",
      [](const weyl::GroupSpec& spec, const std::shared_ptr<ff::GaloisField>& field, std::size_t cap) {
        return gln::enumerate_simples(spec, field, cap);
      },
      py::arg("spec"), py::arg("field"), py::arg("cap") = gln::default_simple_cap);

  m.def(
      "oracle_check",
      [](const weyl::GroupSpec& spec, const std::shared_ptr<ff::GaloisField>& field, std::size_t cap) {
        const auto r = oracle::oracle_check(spec, field, cap);
        py::dict out;
        out["rows"] = r.rows.size();
        out["disagreements"] = r.disagreements();
        out["warnings"] = r.warnings;
        return out;
      },
      py::arg("spec"), py::arg("field"), py::arg("cap") = oracle::default_sweep_cap);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"heckeho"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
