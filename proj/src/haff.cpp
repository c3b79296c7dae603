#include "heckeho/haff.hpp"

#include <sstream>

#include "heckeho/error.hpp"

namespace heckeho::haff {

using weyl::has_node;
using weyl::is_subset;
using weyl::single;

TorusChar normalize(const GroupSpec& spec, TorusChar xi) {
  if (static_cast<int>(xi.exponents.size()) != spec.rank())
    throw DomainError("expected one exponent tuple per GL factor");
  if (static_cast<int>(xi.torus_exponents.size()) != spec.torus_rank)
    throw DomainError("expected one exponent per torus coordinate");
  const int mod = spec.q - 1;
  auto reduce = [mod](int& e) { e = ((e % mod) + mod) % mod; };
  for (int i = 0; i < spec.rank(); ++i) {
    if (static_cast<int>(xi.exponents[i].size()) != spec.factors[i])
      throw DomainError("exponent tuple " + std::to_string(i + 1) + " has the wrong length");
    for (int& e : xi.exponents[i]) reduce(e);
  }
  for (int& e : xi.torus_exponents) reduce(e);
  return xi;
}

TorusChar det_power(const GroupSpec& spec, const std::vector<int>& a) {
  if (static_cast<int>(a.size()) != spec.rank()) throw DomainError("need one det exponent per factor");
  TorusChar xi;
  for (int i = 0; i < spec.rank(); ++i) xi.exponents.emplace_back(spec.factors[i], a[i]);
  xi.torus_exponents.assign(spec.torus_rank, 0);
  return normalize(spec, xi);
}

NodeSet s_xi(const GroupSpec& spec, const TorusChar& xi) {
  const TorusChar x = normalize(spec, xi);
  NodeSet s = 0;
  for (int i = 0; i < spec.rank(); ++i) {
    const auto& a = x.exponents[i];
    const int n = spec.factors[i];
    // Node j pairs the exponents at positions j-1 and j (cyclically).
    for (int j = 0; j < n; ++j)
      if (a[(j + n - 1) % n] == a[j]) s |= single(spec.node(i, j));
  }
  return s;
}

AffChar make_char(const GroupSpec& spec, TorusChar xi, NodeSet J) {
  AffChar chi{normalize(spec, std::move(xi)), J};
  if (!is_subset(J, spec.all_nodes())) throw DomainError("J uses nodes outside the diagram");
  if (!is_subset(J, s_xi(spec, chi.xi))) throw DomainError("J is not contained in S_xi");
  return chi;
}

CharData char_data(const GroupSpec& spec, const AffChar& chi) {
  CharData c{s_xi(spec, chi.xi), chi.J, {}};
  for (const auto& a : chi.xi.exponents) c.xi_key.insert(c.xi_key.end(), a.begin(), a.end());
  c.xi_key.insert(c.xi_key.end(), chi.xi.torus_exponents.begin(), chi.xi.torus_exponents.end());
  return c;
}

// A character restricted to a component S_i inside S_xi is the twisted
// trivial character when J misses S_i and the twisted sign character when J
// contains S_i; supersingular means neither happens on any such component.
bool is_supersingular(const AffineDynkin& d, const CharData& chi) {
  for (int c = 0; c < d.component_count(); ++c) {
    const NodeSet comp = d.component_nodes(c);
    if (!is_subset(comp, chi.s_xi)) continue;
    const NodeSet part = chi.J & comp;
    if (part == 0 || part == comp) return false;
  }
  return true;
}

bool is_supersingular(const GroupSpec& spec, const AffChar& chi) {
  return is_supersingular(weyl::affine_dynkin(spec), char_data(spec, chi));
}

bool has_finite_pd(const AffineDynkin& d, const CharData& chi) {
  if (!is_supersingular(d, chi)) throw DomainError("finite projective dimension is only decided for supersingular characters");
  for (int c = 0; c < d.component_count(); ++c)
    if (weyl::node_count(d.component_nodes(c)) != 2) return false;
  return chi.s_xi == d.all_nodes();
}

bool has_finite_pd(const GroupSpec& spec, const AffChar& chi) {
  return has_finite_pd(weyl::affine_dynkin(spec), char_data(spec, chi));
}

bool res_face_projective(const AffineDynkin& d, const CharData& chi, const Face& f) {
  if (f.universe != d.node_count()) throw DomainError("face belongs to a different diagram");
  if (!is_subset(f.nodes, chi.s_xi)) return false;
  const auto nodes = weyl::nodes_of(f.nodes);
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (d.adjacent(nodes[a], nodes[b]) && has_node(chi.J, nodes[a]) != has_node(chi.J, nodes[b]))
        return false;
  return true;
}

bool res_face_projective(const GroupSpec& spec, const AffChar& chi, const Face& f) {
  return res_face_projective(weyl::affine_dynkin(spec), char_data(spec, chi), f);
}

namespace {

// chi has J = {s, s'} and chi' has J = {s'} on the rank-2 component, with
// s' adjacent to the remaining node s''.
bool special_pattern(const AffineDynkin& d, NodeSet comp, const CharData& big, const CharData& small) {
  const NodeSet jb = big.J & comp, js = small.J & comp;
  if (weyl::node_count(jb) != 2 || weyl::node_count(js) != 1 || !is_subset(js, jb)) return false;
  const NodeId shared = weyl::nodes_of(js).front();
  const NodeId outside = weyl::nodes_of(comp & ~jb).front();
  return d.adjacent(shared, outside);
}

}  // namespace

HoDeltaHom ho_delta_hom(const AffineDynkin& d, const CharData& a, const CharData& b) {
  if (a == b) throw DomainError("ho_delta_hom needs two distinct characters");
  if (!is_supersingular(d, a) || !is_supersingular(d, b))
    throw DomainError("ho_delta_hom needs supersingular characters");
  if (has_finite_pd(d, a) || has_finite_pd(d, b))
    throw DomainError("ho_delta_hom needs characters of infinite projective dimension");
  if (d.component_count() == 0) throw DomainError("ho_delta_hom needs a component of rank 2");

  int rank_two = -1;
  for (int c = 0; c < d.component_count(); ++c) {
    const int size = weyl::node_count(d.component_nodes(c));
    if (size == 3 && rank_two < 0)
      rank_two = c;
    else if (size != 2)
      return {};
  }
  if (rank_two < 0) return {};
  if (a.xi_key != b.xi_key || a.s_xi != d.all_nodes() || b.s_xi != d.all_nodes()) return {};
  for (int c = 0; c < d.component_count(); ++c) {
    if (c == rank_two) continue;
    const NodeSet comp = d.component_nodes(c);
    if ((a.J & comp) != (b.J & comp)) return {};
  }
  const NodeSet comp = d.component_nodes(rank_two);
  if (special_pattern(d, comp, a, b) || special_pattern(d, comp, b, a)) return {1, false};
  return {};
}

HoDeltaHom ho_delta_hom(const GroupSpec& spec, const AffChar& a, const AffChar& b) {
  return ho_delta_hom(weyl::affine_dynkin(spec), char_data(spec, a), char_data(spec, b));
}

AffChar conj_char(const GroupSpec& spec, const AffChar& chi, const std::vector<int>& rotation) {
  if (static_cast<int>(rotation.size()) != spec.rank()) throw DomainError("need one rotation per GL factor");
  AffChar out = chi;
  out.J = 0;
  for (NodeId s : weyl::nodes_of(chi.J)) {
    const int i = spec.factor_of(s);
    out.J |= single(weyl::omega_rotate(spec, i, rotation[i], s));
  }
  for (int i = 0; i < spec.rank(); ++i) {
    const int n = spec.factors[i];
    const int k = ((rotation[i] % n) + n) % n;
    const auto& old = chi.xi.exponents[i];
    auto& fresh = out.xi.exponents[i];
    for (int m = 0; m < n; ++m) fresh[(m + k) % n] = old[m];
  }
  return out;
}

std::vector<int> stabilizer(const GroupSpec& spec, const AffChar& chi) {
  std::vector<int> d(spec.rank(), 0);
  for (int i = 0; i < spec.rank(); ++i) {
    std::vector<int> rot(spec.rank(), 0);
    for (int k = 1; k <= spec.factors[i]; ++k) {
      rot[i] = k;
      if (conj_char(spec, chi, rot) == chi) {
        d[i] = k;
        break;
      }
    }
  }
  return d;
}

std::vector<AffChar> all_characters(const GroupSpec& spec, std::size_t cap) {
  const int mod = spec.q - 1;
  const int len = spec.torus_dim();
  std::vector<int> flat(len, 0);
  std::vector<AffChar> out;
  while (true) {
    TorusChar xi;
    int pos = 0;
    for (int i = 0; i < spec.rank(); ++i) {
      xi.exponents.emplace_back(flat.begin() + pos, flat.begin() + pos + spec.factors[i]);
      pos += spec.factors[i];
    }
    xi.torus_exponents.assign(flat.begin() + pos, flat.end());
    const NodeSet allowed = s_xi(spec, xi);
    // Subsets of allowed in increasing numeric order.
    for (NodeSet J = 0;; J = (J - allowed) & allowed) {
      out.push_back(AffChar{xi, J});
      if (out.size() > cap) throw DomainError("character count exceeds cap " + std::to_string(cap));
      if (J == allowed) break;
    }
    int k = len - 1;
    while (k >= 0 && flat[k] == mod - 1) flat[k--] = 0;
    if (k < 0) break;
    ++flat[k];
  }
  return out;
}

std::string describe(const GroupSpec& spec, const AffChar& chi) {
  std::ostringstream os;
  os << "J={";
  bool first = true;
  for (NodeId s : weyl::nodes_of(chi.J)) {
    os << (first ? "" : ",") << spec.node_name(s);
    first = false;
  }
  os << "} a=[";
  for (std::size_t i = 0; i < chi.xi.exponents.size(); ++i) {
    os << (i ? "," : "") << '(';
    for (std::size_t j = 0; j < chi.xi.exponents[i].size(); ++j) os << (j ? "," : "") << chi.xi.exponents[i][j];
    os << ')';
  }
  os << "] b=(";
  for (std::size_t j = 0; j < chi.xi.torus_exponents.size(); ++j)
    os << (j ? "," : "") << chi.xi.torus_exponents[j];
  os << ')';
  return os.str();
}

std::string label(const GroupSpec& spec, const AffChar& chi) {
  std::ostringstream os;
  os << "J=";
  for (int i = 0; i < spec.rank(); ++i) {
    if (i) os << '/';
    for (int j = 0; j < spec.factors[i]; ++j) os << (has_node(chi.J, spec.node(i, j)) ? '1' : '0');
  }
  os << ";a=";
  for (int i = 0; i < spec.rank(); ++i) {
    if (i) os << '/';
    for (std::size_t j = 0; j < chi.xi.exponents[i].size(); ++j) os << (j ? "." : "") << chi.xi.exponents[i][j];
  }
  os << ";b=";
  for (std::size_t j = 0; j < chi.xi.torus_exponents.size(); ++j) os << (j ? "." : "") << chi.xi.torus_exponents[j];
  return os.str();
}

}  // namespace heckeho::haff
