#include "heckeho/weyl.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <functional>
#include <map>
#include <unordered_map>

#include "heckeho/error.hpp"

namespace heckeho::weyl {

std::vector<NodeId> nodes_of(NodeSet s) {
  std::vector<NodeId> out;
  for (NodeId n = 0; s != 0; ++n, s >>= 1)
    if (s & 1u) out.push_back(n);
  return out;
}

std::pair<int, int> prime_power(long long q) {
  if (q < 2) return {0, 0};
  long long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) p = q;
  int f = 0;
  while (q % p == 0) {
    q /= p;
    ++f;
  }
  if (q != 1) return {0, 0};
  return {static_cast<int>(p), f};
}

GroupSpec build_spec(std::vector<int> factors, int torus_rank, int q) {
  for (int n : factors)
    if (n < 2) throw DomainError("every GL factor needs n >= 2, got " + std::to_string(n));
  if (torus_rank < 0) throw DomainError("torus rank must be non-negative");
  auto [p, f] = prime_power(q);
  if (p == 0) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  std::sort(factors.begin(), factors.end(), std::greater<>());
  GroupSpec spec{std::move(factors), torus_rank, q, p, f};
  if (spec.node_count() > 64) throw DomainError("more than 64 affine nodes");
  return spec;
}

int GroupSpec::node_count() const {
  int total = 0;
  for (int n : factors) total += n;
  return total;
}

int GroupSpec::torus_dim() const { return node_count() + torus_rank; }

int GroupSpec::offset(int factor) const {
  if (factor < 0 || factor > rank()) throw DomainError("factor index out of range");
  int total = 0;
  for (int i = 0; i < factor; ++i) total += factors[i];
  return total;
}

int GroupSpec::factor_of(NodeId n) const {
  int start = 0;
  for (int i = 0; i < rank(); ++i) {
    if (n >= start && n < start + factors[i]) return i;
    start += factors[i];
  }
  throw DomainError("node " + std::to_string(n) + " is not in the diagram");
}

NodeSet GroupSpec::factor_nodes(int factor) const {
  NodeSet s = 0;
  for (int j = 0; j < factors.at(factor); ++j) s |= single(node(factor, j));
  return s;
}

NodeSet GroupSpec::all_nodes() const {
  const int n = node_count();
  return n == 64 ? ~NodeSet{0} : (NodeSet{1} << n) - 1;
}

std::string GroupSpec::node_name(NodeId n) const {
  const int i = factor_of(n);
  return "s" + std::to_string(i + 1) + "." + std::to_string(n - offset(i));
}

namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw DomainError("cannot parse " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

NodeId GroupSpec::parse_node(std::string_view name) const {
  const auto dot = name.find('.');
  if (name.size() < 4 || name[0] != 's' || dot == std::string_view::npos)
    throw DomainError("bad node name '" + std::string(name) + "'");
  const int factor = parse_int(name.substr(1, dot - 1), "factor index") - 1;
  const int local = parse_int(name.substr(dot + 1), "node index");
  if (factor < 0 || factor >= rank() || local < 0 || local >= factors[factor])
    throw DomainError("node '" + std::string(name) + "' is not in the diagram");
  return node(factor, local);
}

NodeSet AffineDynkin::component_nodes(int c) const {
  NodeSet s = 0;
  for (int n = 0; n < node_count(); ++n)
    if (component[n] == c) s |= single(n);
  return s;
}

NodeSet AffineDynkin::all_nodes() const {
  return node_count() == 64 ? ~NodeSet{0} : (NodeSet{1} << node_count()) - 1;
}

int AffineDynkin::bond(NodeId s, NodeId t) const {
  if (s == t) return 1;
  switch (cartan[s][t] * cartan[t][s]) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

namespace {

void name_nodes(AffineDynkin& d) {
  d.names.assign(d.node_count(), "");
  std::vector<int> seen(d.component_count(), 0);
  for (int n = 0; n < d.node_count(); ++n) {
    const int c = d.component[n];
    d.names[n] = "s" + std::to_string(c + 1) + "." + std::to_string(seen[c]++);
  }
}

std::vector<std::vector<int>> zero_matrix(int n) {
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

void link(std::vector<std::vector<int>>& a, int i, int j, int aij = -1, int aji = -1) {
  a[i][j] = aij;
  a[j][i] = aji;
}

void check_type(char type, int rank) {
  const bool ok = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
                  (type == 'C' && rank >= 2) || (type == 'D' && rank >= 4) ||
                  (type == 'E' && rank >= 6 && rank <= 8) || (type == 'F' && rank == 4) ||
                  (type == 'G' && rank == 2);
  if (!ok) throw DomainError(std::string("unknown finite type ") + type + std::to_string(rank));
}

}  // namespace

std::vector<std::vector<int>> finite_cartan(char type, int rank) {
  check_type(type, rank);
  auto a = zero_matrix(rank);
  const int n = rank;
  switch (type) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -1, -2);
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(a, i, i + 1);
      link(a, n - 2, n - 1, -2, -1);
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(a, i, i + 1);
      link(a, n - 3, n - 1);
      break;
    case 'E':
      link(a, 0, 2);
      link(a, 1, 3);
      for (int i = 2; i + 1 < n; ++i) link(a, i, i + 1);
      break;
    case 'F':
      link(a, 0, 1);
      link(a, 1, 2, -1, -2);
      link(a, 2, 3);
      break;
    case 'G':
      link(a, 0, 1, -3, -1);
      break;
  }
  return a;
}

AffineDynkin affine_dynkin(char type, int rank) {
  check_type(type, rank);
  if (type == 'B' && rank == 2) type = 'C';
  const auto fin = finite_cartan(type, rank);
  auto a = zero_matrix(rank + 1);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) a[i + 1][j + 1] = fin[i][j];
  // Attachments of the affine node; node k is Bourbaki node k.
  switch (type) {
    case 'A':
      if (rank == 1) {
        link(a, 0, 1, -2, -2);
      } else {
        link(a, 0, 1);
        link(a, 0, rank);
      }
      break;
    case 'B': link(a, 0, 2); break;
    case 'C': link(a, 0, 1, -1, -2); break;
    case 'D': link(a, 0, 2); break;
    case 'E': link(a, 0, rank == 6 ? 2 : rank == 7 ? 1 : 8); break;
    case 'F': link(a, 0, 1); break;
    case 'G': link(a, 0, 2); break;
  }
  AffineDynkin d;
  d.cartan = std::move(a);
  d.component.assign(rank + 1, 0);
  d.kinds = {std::string(1, type) + std::to_string(rank) + "~"};
  name_nodes(d);
  return d;
}

AffineDynkin disjoint_union(const AffineDynkin& a, const AffineDynkin& b) {
  const int na = a.node_count(), nb = b.node_count();
  AffineDynkin d;
  d.cartan = zero_matrix(na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) d.cartan[i][j] = a.cartan[i][j];
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) d.cartan[na + i][na + j] = b.cartan[i][j];
  d.component = a.component;
  for (int c : b.component) d.component.push_back(c + a.component_count());
  d.kinds = a.kinds;
  d.kinds.insert(d.kinds.end(), b.kinds.begin(), b.kinds.end());
  name_nodes(d);
  return d;
}

AffineDynkin affine_dynkin(const GroupSpec& spec) {
  AffineDynkin d;
  const int total = spec.node_count();
  d.cartan = zero_matrix(total);
  for (int i = 0; i < spec.rank(); ++i) {
    const int n = spec.factors[i];
    for (int j = 0; j < n; ++j) {
      d.component.push_back(i);
      if (n == 2) {
        if (j == 0) link(d.cartan, spec.node(i, 0), spec.node(i, 1), -2, -2);
      } else {
        link(d.cartan, spec.node(i, j), spec.node(i, (j + 1) % n));
      }
    }
    d.kinds.push_back("A" + std::to_string(n - 1) + "~");
  }
  d.names.clear();
  for (int n = 0; n < total; ++n) d.names.push_back(spec.node_name(n));
  return d;
}

Face make_face(const AffineDynkin& d, NodeSet nodes) {
  if (!is_subset(nodes, d.all_nodes())) throw DomainError("face uses nodes outside the diagram");
  for (int c = 0; c < d.component_count(); ++c) {
    const NodeSet comp = d.component_nodes(c);
    if ((nodes & comp) == comp)
      throw DomainError("face contains a whole component; it is not a facet of the chamber");
  }
  return Face{nodes, d.node_count()};
}

Face make_face(const GroupSpec& spec, NodeSet nodes) { return make_face(affine_dynkin(spec), nodes); }

std::vector<Face> faces(const AffineDynkin& d) {
  const int n = d.node_count();
  if (n > 24) throw DomainError("too many nodes to enumerate faces");
  std::vector<NodeSet> comps;
  for (int c = 0; c < d.component_count(); ++c) comps.push_back(d.component_nodes(c));
  std::vector<std::vector<NodeId>> lists;
  for (NodeSet s = 0; s < (NodeSet{1} << n); ++s) {
    bool proper = true;
    for (NodeSet c : comps) proper = proper && (s & c) != c;
    if (proper) lists.push_back(nodes_of(s));
  }
  std::sort(lists.begin(), lists.end());
  std::vector<Face> out;
  out.reserve(lists.size());
  for (const auto& l : lists) {
    NodeSet s = 0;
    for (NodeId x : l) s |= single(x);
    out.push_back(Face{s, n});
  }
  return out;
}

std::vector<Face> faces(const GroupSpec& spec) { return faces(affine_dynkin(spec)); }

bool closure_leq(const Face& f, const Face& g) {
  if (f.universe != g.universe) throw DomainError("faces belong to different diagrams");
  return is_subset(f.nodes, g.nodes);
}

std::vector<std::string> face_names(const GroupSpec& spec, const Face& f) {
  std::vector<std::string> out;
  for (NodeId n : nodes_of(f.nodes)) out.push_back(spec.node_name(n));
  return out;
}

NodeId omega_rotate(const GroupSpec& spec, int factor, int k, NodeId node) {
  if (factor < 0 || factor >= spec.rank()) throw DomainError("factor index out of range");
  if (node < 0 || node >= spec.node_count()) throw DomainError("node index out of range");
  if (spec.factor_of(node) != factor)
    throw DomainError("node " + spec.node_name(node) + " is not in factor " + std::to_string(factor + 1));
  const int n = spec.factors[factor];
  const int local = ((spec.local_of(node) + k) % n + n) % n;
  return spec.node(factor, local);
}

CoxeterType CoxeterType::parse(std::string_view text) {
  CoxeterType t;
  if (text.empty() || text == "trivial") return t;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('x', pos);
    if (next == std::string_view::npos) next = text.size();
    const auto part = text.substr(pos, next - pos);
    if (part.size() < 2) throw DomainError("bad Coxeter type '" + std::string(text) + "'");
    const char letter = part[0];
    const int rank = parse_int(part.substr(1), "Coxeter rank");
    check_type(letter, rank);
    t.components.emplace_back(letter, rank);
    pos = next + 1;
  }
  return t;
}

std::string CoxeterType::str() const {
  if (components.empty()) return "trivial";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += 'x';
    s += components[i].first + std::to_string(components[i].second);
  }
  return s;
}

int CoxeterType::rank() const {
  int r = 0;
  for (const auto& c : components) r += c.second;
  return r;
}

namespace {

std::pair<char, int> classify_connected(const std::vector<std::vector<int>>& a,
                                        const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  const auto fail = [] { return DomainError("Cartan matrix is not of finite type"); };
  if (n == 1) return {'A', 1};
  std::vector<int> degree(n, 0);
  int edges = 0, doubles = 0, triples = 0;
  std::pair<int, int> double_edge{-1, -1};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int prod = a[nodes[i]][nodes[j]] * a[nodes[j]][nodes[i]];
      if (prod == 0) continue;
      ++edges;
      ++degree[i];
      ++degree[j];
      if (prod == 2) {
        ++doubles;
        double_edge = {i, j};
      } else if (prod == 3) {
        ++triples;
      } else if (prod != 1) {
        throw fail();
      }
    }
  if (edges != n - 1) throw fail();
  const int max_degree = *std::max_element(degree.begin(), degree.end());
  if (triples > 0) {
    if (n == 2) return {'G', 2};
    throw fail();
  }
  if (doubles > 1) throw fail();
  if (doubles == 1) {
    if (max_degree > 2) throw fail();
    if (n == 2) return {'B', 2};
    auto [u, v] = double_edge;
    if (n == 4 && degree[u] == 2 && degree[v] == 2) return {'F', 4};
    if (degree[u] != 1 && degree[v] != 1) throw fail();
    const int leaf = degree[u] == 1 ? u : v;
    const int other = leaf == u ? v : u;
    // The short simple root has the -2 in its row.
    return {a[nodes[leaf]][nodes[other]] == -2 ? 'B' : 'C', n};
  }
  if (max_degree <= 2) return {'A', n};
  if (max_degree > 3 || std::count(degree.begin(), degree.end(), 3) != 1) throw fail();
  const int branch = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  std::vector<int> arms;
  for (int start = 0; start < n; ++start) {
    if (start == branch || a[nodes[branch]][nodes[start]] == 0) continue;
    int len = 1, prev = branch, cur = start;
    for (bool moved = true; moved;) {
      moved = false;
      for (int k = 0; k < n; ++k)
        if (k != prev && k != cur && a[nodes[cur]][nodes[k]] != 0) {
          prev = cur;
          cur = k;
          ++len;
          moved = true;
          break;
        }
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {'E', n};
  throw fail();
}

}  // namespace

CoxeterType classify_cartan(const std::vector<std::vector<int>>& cartan) {
  const int n = static_cast<int>(cartan.size());
  std::vector<int> comp(n, -1);
  CoxeterType t;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = s;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && cartan[nodes[k]][j] != 0) {
          comp[j] = s;
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());
    t.components.push_back(classify_connected(cartan, nodes));
  }
  return t;
}

namespace {

// Block-diagonal Cartan matrix for a product type.
std::vector<std::vector<int>> cartan_of(const CoxeterType& type) {
  const int n = type.rank();
  auto a = zero_matrix(n);
  int start = 0;
  for (auto [letter, rank] : type.components) {
    const auto block = finite_cartan(letter, rank);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) a[start + i][start + j] = block[i][j];
    start += rank;
  }
  return a;
}

std::uint64_t key_of(const std::vector<std::uint16_t>& perm, int rank) {
  std::uint64_t key = 0;
  for (int i = 0; i < rank; ++i) key = (key << 8) | perm[i];
  return key;
}

}  // namespace

CoxeterGroup CoxeterGroup::from_type(const CoxeterType& type, std::size_t max_elements) {
  auto g = from_cartan(cartan_of(type), max_elements);
  return g;
}

CoxeterGroup CoxeterGroup::from_cartan(std::vector<std::vector<int>> cartan, std::size_t max_elements) {
  const int n = static_cast<int>(cartan.size());
  if (n > 8) throw DomainError("Coxeter rank above 8 is not supported");
  CoxeterGroup g;
  g.type_ = classify_cartan(cartan);
  g.cartan_ = std::move(cartan);

  // Roots in simple-root coordinates; the simple roots come first.
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    index[e] = i;
    g.roots_.push_back(e);
  }
  for (std::size_t k = 0; k < g.roots_.size(); ++k)
    for (int i = 0; i < n; ++i) {
      auto beta = g.roots_[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += g.cartan_[i][j] * beta[j];
      beta[i] -= pairing;
      if (!index.count(beta)) {
        if (g.roots_.size() >= 255) throw DomainError("root system is not finite");
        index[beta] = static_cast<int>(g.roots_.size());
        g.roots_.push_back(beta);
      }
    }
  const std::size_t nr = g.roots_.size();
  for (const auto& r : g.roots_)
    g.positive_.push_back(std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; }));

  std::vector<std::vector<std::uint16_t>> gens(n, std::vector<std::uint16_t>(nr));
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < nr; ++k) {
      auto beta = g.roots_[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += g.cartan_[i][j] * beta[j];
      beta[i] -= pairing;
      gens[i][k] = static_cast<std::uint16_t>(index.at(beta));
    }

  std::vector<std::uint16_t> id(nr);
  for (std::size_t k = 0; k < nr; ++k) id[k] = static_cast<std::uint16_t>(k);
  std::unordered_map<std::uint64_t, std::size_t> lookup;
  lookup[key_of(id, n)] = 0;
  g.perms_.push_back(id);
  g.length_.push_back(0);
  g.parent_.push_back(0);
  g.last_letter_.push_back(-1);
  for (std::size_t w = 0; w < g.perms_.size(); ++w) {
    for (int s = 0; s < n; ++s) {
      std::vector<std::uint16_t> ws(nr);
      for (std::size_t k = 0; k < nr; ++k) ws[k] = g.perms_[w][gens[s][k]];
      const auto key = key_of(ws, n);
      auto it = lookup.find(key);
      std::size_t idx;
      if (it == lookup.end()) {
        idx = g.perms_.size();
        if (idx >= max_elements)
          throw DomainError("Coxeter group exceeds the element cap of " + std::to_string(max_elements));
        lookup.emplace(key, idx);
        g.perms_.push_back(std::move(ws));
        g.length_.push_back(g.length_[w] + 1);
        g.parent_.push_back(w);
        g.last_letter_.push_back(s);
      } else {
        idx = it->second;
      }
      g.right_.push_back(idx);
    }
  }
  g.left_.assign(g.perms_.size() * n, 0);
  for (std::size_t w = 0; w < g.perms_.size(); ++w)
    for (int s = 0; s < n; ++s) {
      std::vector<std::uint16_t> sw(n);
      for (int k = 0; k < n; ++k) sw[k] = gens[s][g.perms_[w][k]];
      g.left_[w * n + s] = lookup.at(key_of(sw, n));
    }
  return g;
}

std::vector<int> CoxeterGroup::word(std::size_t w) const {
  std::vector<int> letters;
  while (w != 0) {
    letters.push_back(last_letter_[w]);
    w = parent_[w];
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

int CoxeterGroup::inversions(std::size_t w) const {
  int count = 0;
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (positive_[k] && !positive_[perms_[w][k]]) ++count;
  return count;
}

CoxeterGroup enumerate_coxeter(const CoxeterType& type, std::size_t max_elements) {
  return CoxeterGroup::from_type(type, max_elements);
}

std::vector<std::vector<int>> sub_cartan(const AffineDynkin& d, NodeSet nodes) {
  const auto list = nodes_of(nodes);
  std::vector<std::vector<int>> a(list.size(), std::vector<int>(list.size()));
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j < list.size(); ++j) a[i][j] = d.cartan[list[i]][list[j]];
  return a;
}

CoxeterGroup face_group(const AffineDynkin& d, const Face& f, std::size_t max_elements) {
  if (f.universe != d.node_count()) throw DomainError("face belongs to a different diagram");
  return CoxeterGroup::from_cartan(sub_cartan(d, f.nodes), max_elements);
}

}  // namespace heckeho::weyl
