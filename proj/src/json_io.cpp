#include "heckeho/json_io.hpp"

#include "heckeho/error.hpp"

namespace heckeho::io {

namespace {

const json& field_of(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("missing JSON key \"") + key + "\"");
  return j.at(key);
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) throw DomainError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> ints_of(const json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(int_of(x, what));
  return out;
}

}  // namespace

weyl::GroupSpec spec_from_json(const json& j) {
  const int torus = j.is_object() && j.contains("torus_rank") ? int_of(j.at("torus_rank"), "torus_rank") : 0;
  return weyl::build_spec(ints_of(field_of(j, "factors"), "factors"), torus, int_of(field_of(j, "q"), "q"));
}

json to_json(const weyl::GroupSpec& spec) {
  return json{{"factors", spec.factors}, {"torus_rank", spec.torus_rank}, {"q", spec.q}};
}

haff::AffChar char_from_json(const weyl::GroupSpec& spec, const json& j) {
  haff::TorusChar xi;
  const auto& ex = field_of(j, "exponents");
  if (!ex.is_array()) throw DomainError("exponents must be an array of arrays");
  for (const auto& part : ex) xi.exponents.push_back(ints_of(part, "exponents"));
  if (j.contains("torus_exponents")) xi.torus_exponents = ints_of(j.at("torus_exponents"), "torus_exponents");
  weyl::NodeSet J = 0;
  if (j.contains("J")) {
    if (!j.at("J").is_array()) throw DomainError("J must be an array of node names");
    for (const auto& name : j.at("J")) {
      if (!name.is_string()) throw DomainError("J must be an array of node names");
      J |= weyl::single(spec.parse_node(name.get<std::string>()));
    }
  }
  return haff::make_char(spec, std::move(xi), J);
}

json to_json(const weyl::GroupSpec& spec, const haff::AffChar& chi) {
  json names = json::array();
  for (auto s : weyl::nodes_of(chi.J)) names.push_back(spec.node_name(s));
  return json{{"exponents", chi.xi.exponents}, {"torus_exponents", chi.xi.torus_exponents}, {"J", names}};
}

ff::Elem elem_from_json(const ff::GaloisField& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  const auto c = ints_of(j, "field element");
  if (static_cast<int>(c.size()) > f.m()) throw DomainError("field element has more coefficients than the degree");
  for (int x : c)
    if (x < 0 || x >= f.p()) throw DomainError("field element coefficients must lie in [0, p)");
  return f.from_coeffs(c);
}

json elem_to_json(const ff::GaloisField& f, ff::Elem e) { return json(f.coeffs(e)); }

ff::Field field_from_json(const json& j) {
  const int m = j.is_object() && j.contains("m") ? int_of(j.at("m"), "m") : 1;
  return ff::GaloisField::make(int_of(field_of(j, "p"), "p"), m);
}

json to_json(const ff::GaloisField& f) { return json{{"p", f.p()}, {"m", f.m()}}; }

gln::SimpleSS simple_from_json(const weyl::GroupSpec& spec, const json& j) {
  auto field = field_from_json(field_of(j, "field"));
  const auto chi = char_from_json(spec, field_of(j, "chi"));
  std::vector<ff::Elem> lambda, nu;
  const auto& lam = field_of(j, "lambda");
  if (!lam.is_array()) throw DomainError("lambda must be an array");
  for (const auto& x : lam) lambda.push_back(elem_from_json(*field, x));
  if (j.contains("nu")) {
    if (!j.at("nu").is_array()) throw DomainError("nu must be an array");
    for (const auto& x : j.at("nu")) nu.push_back(elem_from_json(*field, x));
  }
  return gln::build_simple(spec, chi, std::move(lambda), std::move(nu), std::move(field));
}

json to_json(const gln::SimpleSS& m) {
  json lam = json::array(), nu = json::array();
  for (auto e : m.lambda) lam.push_back(elem_to_json(*m.field, e));
  for (auto e : m.nu) nu.push_back(elem_to_json(*m.field, e));
  return json{{"chi", to_json(m.spec, m.chi)}, {"lambda", lam}, {"nu", nu}, {"field", to_json(*m.field)}};
}

}  // namespace heckeho::io
