#include "heckeho/oracle.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "heckeho/error.hpp"

namespace heckeho::oracle {

using weyl::NodeSet;

namespace {

int mod_p(long long x, int p) { return static_cast<int>(((x % p) + p) % p); }

int inv_mod(int x, int p) {
  long long r = 1, b = x, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<int>(r);
}

// Discrete logarithms in F_p with respect to the field's primitive element.
struct PrimeLog {
  int p = 0;
  Elem generator = 0;
  std::vector<int> log;

  explicit PrimeLog(int prime) : p(prime), log(prime, -1) {
    const auto fp = ff::GaloisField::make(prime, 1);
    generator = fp->primitive();
    long long x = 1;
    for (int e = 0; e < prime - 1; ++e) {
      log[x] = e;
      x = x * generator % prime;
    }
  }
  int power(int e) const {
    long long x = 1;
    for (int k = 0; k < e; ++k) x = x * generator % p;
    return static_cast<int>(x);
  }
  int of(int residue) const {
    const int e = log[mod_p(residue, p)];
    if (e < 0) throw DomainError("zero has no logarithm");
    return e;
  }
};

std::vector<int> torus_exps_of(const MonomialMatrix& m, const PrimeLog& lg) {
  if (!m.is_torus()) throw DomainError("expected an element of T(F_p), got " + m.to_string());
  std::vector<int> e(m.size());
  for (int k = 0; k < m.size(); ++k) e[k] = lg.of(m.coeff[k]);
  return e;
}

std::vector<int> flat_exponents(const TorusChar& xi) {
  std::vector<int> a;
  for (const auto& part : xi.exponents) a.insert(a.end(), part.begin(), part.end());
  a.insert(a.end(), xi.torus_exponents.begin(), xi.torus_exponents.end());
  return a;
}

TorusChar torus_char_from_flat(const GroupSpec& spec, const std::vector<int>& flat) {
  TorusChar xi;
  int pos = 0;
  for (int n : spec.factors) {
    xi.exponents.emplace_back(flat.begin() + pos, flat.begin() + pos + n);
    pos += n;
  }
  xi.torus_exponents.assign(flat.begin() + pos, flat.end());
  return xi;
}

FFMatrix mat_pow(const FFMatrix& m, int e) {
  FFMatrix r = FFMatrix::identity(m.field(), m.rows());
  for (int k = 0; k < e; ++k) r = r * m;
  return r;
}

// Alternating product s t s ... with m factors.
template <class T>
T alternating(const T& s, const T& t, int m, T unit) {
  for (int k = 0; k < m; ++k) unit = unit * (k % 2 == 0 ? s : t);
  return unit;
}

std::string node_pair(const GroupSpec& spec, NodeId s, NodeId t) {
  return spec.node_name(s) + "," + spec.node_name(t);
}

// Node s' with m = c * s'-hat for a torus element c.
std::pair<NodeId, MonomialMatrix> split_reflection(const Lifts& lifts, const MonomialMatrix& m) {
  for (NodeId s = 0; s < static_cast<int>(lifts.reflection.size()); ++s) {
    MonomialMatrix c = m * lifts.reflection[s].inverse();
    if (c.is_torus()) return {s, std::move(c)};
  }
  throw DomainError("matrix " + m.to_string() + " is not a torus multiple of a reflection lift");
}

}  // namespace

// ---------------------------------------------------------------------------
// MonomialMatrix

MonomialMatrix MonomialMatrix::identity(int size, int p) {
  MonomialMatrix m;
  m.p = p;
  m.row.resize(size);
  for (int k = 0; k < size; ++k) m.row[k] = k;
  m.coeff.assign(size, 1);
  m.val.assign(size, 0);
  return m;
}

MonomialMatrix MonomialMatrix::operator*(const MonomialMatrix& o) const {
  if (o.size() != size() || o.p != p) throw DomainError("monomial matrix shape mismatch");
  MonomialMatrix r = o;
  for (int j = 0; j < size(); ++j) {
    const int mid = o.row[j];
    r.row[j] = row[mid];
    r.coeff[j] = static_cast<int>(static_cast<long long>(o.coeff[j]) * coeff[mid] % p);
    r.val[j] = o.val[j] + val[mid];
  }
  return r;
}

MonomialMatrix MonomialMatrix::inverse() const {
  MonomialMatrix r = *this;
  for (int j = 0; j < size(); ++j) {
    r.row[row[j]] = j;
    r.coeff[row[j]] = inv_mod(coeff[j], p);
    r.val[row[j]] = -val[j];
  }
  return r;
}

bool MonomialMatrix::is_diagonal() const {
  for (int j = 0; j < size(); ++j)
    if (row[j] != j) return false;
  return true;
}

bool MonomialMatrix::is_torus() const {
  return is_diagonal() && std::all_of(val.begin(), val.end(), [](int v) { return v == 0; });
}

std::string MonomialMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int j = 0; j < size(); ++j) {
    if (j) os << ' ';
    os << 'e' << j + 1 << "->";
    os << (coeff[j] == p - 1 ? "-" : (coeff[j] == 1 ? "" : std::to_string(coeff[j]) + "*"));
    if (val[j] != 0) os << "pi^" << val[j] << '*';
    os << 'e' << row[j] + 1;
  }
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Lifts

std::pair<int, int> coroot_slots(const GroupSpec& spec, NodeId s) {
  const int i = spec.factor_of(s);
  const int j = spec.local_of(s);
  const int off = spec.offset(i);
  if (j == 0) return {off + spec.factors[i] - 1, off};
  return {off + j - 1, off + j};
}

MonomialMatrix Lifts::coroot(NodeId s, int x) const {
  const auto [a, b] = coroot_slots(spec, s);
  MonomialMatrix m = MonomialMatrix::identity(spec.torus_dim(), spec.p);
  m.coeff[a] = mod_p(x, spec.p);
  m.coeff[b] = inv_mod(m.coeff[a], spec.p);
  return m;
}

MonomialMatrix Lifts::torus_unit(int k, int x) const {
  MonomialMatrix m = MonomialMatrix::identity(spec.torus_dim(), spec.p);
  m.coeff[k] = mod_p(x, spec.p);
  return m;
}

namespace {

Lifts raw_lifts(const GroupSpec& spec) {
  Lifts l;
  l.spec = spec;
  const int dim = spec.torus_dim();
  const int p = spec.p;
  for (int i = 0; i < spec.rank(); ++i) {
    const int n = spec.factors[i];
    const int off = spec.offset(i);
    for (int j = 0; j < n; ++j) {
      MonomialMatrix s = MonomialMatrix::identity(dim, p);
      if (j == 0) {
        // e_1 -> pi^{-1} e_n and e_n -> -pi e_1.
        const int first = off, last = off + n - 1;
        s.row[first] = last;
        s.val[first] = -1;
        s.row[last] = first;
        s.coeff[last] = p - 1;
        s.val[last] = 1;
      } else {
        const int r1 = off + j - 1, r2 = off + j;
        s.row[r1] = r2;
        s.coeff[r1] = p - 1;
        s.row[r2] = r1;
      }
      l.reflection.push_back(std::move(s));
    }
    MonomialMatrix w = MonomialMatrix::identity(dim, p);
    for (int k = 0; k < n; ++k) w.row[off + k] = off + (k + 1) % n;
    w.val[off + n - 1] = 1;
    l.omega.push_back(std::move(w));
  }
  const int base = dim - spec.torus_rank;
  for (int j = 0; j < spec.torus_rank; ++j) {
    MonomialMatrix u = MonomialMatrix::identity(dim, p);
    u.val[base + j] = 1;
    l.torus_omega.push_back(std::move(u));
  }
  for (NodeId s = 0; s < spec.node_count(); ++s) {
    const int i = spec.factor_of(s);
    const NodeId moved = weyl::omega_rotate(spec, i, 1, s);
    l.rotation_correction.push_back(l.omega[i] * l.reflection[s] * l.omega[i].inverse() *
                                    l.reflection[moved].inverse());
  }
  return l;
}

}  // namespace

std::vector<std::string> lift_failures(const Lifts& l) {
  std::vector<std::string> fail;
  const auto& spec = l.spec;
  const int dim = spec.torus_dim();
  const auto id = MonomialMatrix::identity(dim, spec.p);
  const auto d = weyl::affine_dynkin(spec);

  for (NodeId s = 0; s < spec.node_count(); ++s) {
    if (!(l.reflection[s] * l.reflection[s] == l.coroot(s, -1)))
      fail.push_back("lift square " + spec.node_name(s));
    if (!l.rotation_correction[s].is_torus())
      fail.push_back("rotation correction of " + spec.node_name(s) + " is not in T(F_p)");
    for (NodeId t = s + 1; t < spec.node_count(); ++t) {
      const int m = d.bond(s, t);
      if (m == 0) continue;
      if (!(alternating(l.reflection[s], l.reflection[t], m, id) ==
            alternating(l.reflection[t], l.reflection[s], m, id)))
        fail.push_back("lift braid " + node_pair(spec, s, t));
    }
  }
  for (int i = 0; i < spec.rank(); ++i) {
    MonomialMatrix power = id;
    for (int k = 0; k < spec.factors[i]; ++k) power = power * l.omega[i];
    MonomialMatrix expect = id;
    for (int k = 0; k < spec.factors[i]; ++k) expect.val[spec.offset(i) + k] = 1;
    if (!(power == expect)) fail.push_back("omega" + std::to_string(i + 1) + " power is not pi on its factor");
    for (NodeId s = 0; s < spec.node_count(); ++s) {
      if (spec.factor_of(s) == i) continue;
      if (!(l.omega[i] * l.reflection[s] == l.reflection[s] * l.omega[i]))
        fail.push_back("omega" + std::to_string(i + 1) + " moves " + spec.node_name(s));
    }
  }
  std::vector<MonomialMatrix> lengthless = l.omega;
  lengthless.insert(lengthless.end(), l.torus_omega.begin(), l.torus_omega.end());
  for (std::size_t a = 0; a < lengthless.size(); ++a)
    for (std::size_t b = a + 1; b < lengthless.size(); ++b)
      if (!(lengthless[a] * lengthless[b] == lengthless[b] * lengthless[a]))
        fail.push_back("length-zero lifts " + std::to_string(a + 1) + "," + std::to_string(b + 1) +
                       " do not commute");
  return fail;
}

Lifts build_lifts(const GroupSpec& spec) {
  if (spec.p == 0) throw DomainError("group spec has no characteristic");
  Lifts l = raw_lifts(spec);
  const auto fail = lift_failures(l);
  if (!fail.empty()) {
    std::string msg = "lift identities fail:";
    for (const auto& f : fail) msg += " " + f + ";";
    throw DomainError(msg);
  }
  return l;
}

// ---------------------------------------------------------------------------
// Relations of a generator representation

std::vector<std::string> affine_relation_failures(const Lifts& lifts, const HeckeGens& g) {
  std::vector<std::string> fail;
  const auto& spec = lifts.spec;
  const PrimeLog lg(spec.p);
  const int p = spec.p;
  const FFMatrix id = FFMatrix::identity(g.field, g.dim);
  auto torus_of = [&](const std::vector<int>& e) {
    FFMatrix r = id;
    for (std::size_t k = 0; k < e.size(); ++k) r = r * mat_pow(g.torus[k], e[k]);
    return r;
  };
  const int n = static_cast<int>(g.torus.size());
  for (int a = 0; a < n; ++a) {
    if (!(mat_pow(g.torus[a], p - 1) == id)) fail.push_back("torus order t" + std::to_string(a + 1));
    for (int b = a + 1; b < n; ++b)
      if (!(g.torus[a] * g.torus[b] == g.torus[b] * g.torus[a]))
        fail.push_back("torus commute t" + std::to_string(a + 1) + ",t" + std::to_string(b + 1));
  }
  const auto d = weyl::affine_dynkin(spec);
  for (std::size_t x = 0; x < g.reflection.size(); ++x) {
    const auto& [s, rs] = g.reflection[x];
    const auto& hat = lifts.reflection[s];
    for (int k = 0; k < n; ++k) {
      const auto conj = hat * lifts.torus_unit(k, static_cast<int>(lg.generator)) * hat.inverse();
      if (!(rs * g.torus[k] == torus_of(torus_exps_of(conj, lg)) * rs))
        fail.push_back("torus conjugation " + spec.node_name(s) + ",t" + std::to_string(k + 1));
    }
    FFMatrix sum(g.field, g.dim, g.dim);
    for (int e = 0; e < p - 1; ++e) {
      sum = sum + torus_of(torus_exps_of(lifts.coroot(s, lg.power(e)), lg));
    }
    if (!(rs * rs == rs * sum)) fail.push_back("quadratic " + spec.node_name(s));
    for (std::size_t y = x + 1; y < g.reflection.size(); ++y) {
      const auto& [t, rt] = g.reflection[y];
      const int m = d.bond(s, t);
      if (m == 0) continue;
      if (!(alternating(rs, rt, m, id) == alternating(rt, rs, m, id)))
        fail.push_back("braid " + node_pair(spec, s, t));
    }
  }
  return fail;
}

// ---------------------------------------------------------------------------
// BruteFaceAlg

BruteFaceAlg BruteFaceAlg::build(const GroupSpec& spec, const Face& face, Field field, std::size_t cap) {
  if (spec.f != 1) throw DomainError("the oracle needs prime q, got q = " + std::to_string(spec.q));
  if (!field || field->p() != spec.p)
    throw DomainError("oracle field must have characteristic " + std::to_string(spec.p));
  const auto d = weyl::affine_dynkin(spec);
  weyl::make_face(d, face.nodes);
  if (face.universe != d.node_count()) throw DomainError("face belongs to a different diagram");

  BruteFaceAlg alg;
  alg.lifts_ = build_lifts(spec);
  alg.face_ = face;
  alg.field_ = field;
  alg.prime_ = ff::GaloisField::make(spec.p, 1);
  alg.coords_ = spec.torus_dim();
  alg.nodes_ = weyl::nodes_of(face.nodes);

  double torus = 1;
  for (int k = 0; k < alg.coords_; ++k) torus *= spec.p - 1;
  if (torus > static_cast<double>(cap))
    throw DomainError("face algebra would exceed the dimension cap " + std::to_string(cap));
  const auto group = weyl::face_group(d, face, cap);
  alg.torus_size_ = static_cast<std::size_t>(torus);
  alg.group_size_ = group.size();
  const std::size_t dim = alg.torus_size_ * alg.group_size_;
  if (dim > cap)
    throw DomainError("face algebra dimension " + std::to_string(dim) + " exceeds the cap " +
                      std::to_string(cap));

  for (std::size_t w = 0; w < group.size(); ++w) {
    MonomialMatrix hat = MonomialMatrix::identity(alg.coords_, spec.p);
    for (int letter : group.word(w)) hat = hat * alg.lifts_.reflection[alg.nodes_[letter]];
    alg.hats_.push_back(std::move(hat));
  }

  const PrimeLog lg(spec.p);
  const std::size_t wn = alg.group_size_;
  std::vector<std::string> names;
  std::vector<FFMatrix> actions;
  for (int k = 0; k < alg.coords_; ++k) {
    names.push_back("t" + std::to_string(k + 1));
    std::vector<int> unit(alg.coords_, 0);
    unit[k] = 1;
    actions.push_back(alg.torus_action(unit));
  }
  for (std::size_t g = 0; g < alg.nodes_.size(); ++g) {
    const NodeId s = alg.nodes_[g];
    const auto& hat = alg.lifts_.reflection[s];
    const auto [a, b] = coroot_slots(spec, s);
    FFMatrix m(field, dim, dim);
    for (std::size_t w = 0; w < wn; ++w) {
      const std::size_t ws = group.right_mult(w, static_cast<int>(g));
      if (group.length(ws) > group.length(w)) {
        const auto c = torus_exps_of(alg.hats_[w] * hat * alg.hats_[ws].inverse(), lg);
        for (std::size_t t = 0; t < alg.torus_size_; ++t) {
          auto e = alg.torus_exps(t);
          for (int k = 0; k < alg.coords_; ++k) e[k] += c[k];
          m(t * wn + w, alg.torus_index(e) * wn + ws) = 1;
        }
      } else {
        for (int x = 0; x < spec.p - 1; ++x) {
          std::vector<int> co(alg.coords_, 0);
          co[a] = x;
          co[b] = -x;
          const auto shift = alg.conj(w, co);
          for (std::size_t t = 0; t < alg.torus_size_; ++t) {
            auto e = alg.torus_exps(t);
            for (int k = 0; k < alg.coords_; ++k) e[k] += shift[k];
            Elem& slot = m(t * wn + w, alg.torus_index(e) * wn + w);
            slot = field->add(slot, 1);
          }
        }
      }
    }
    names.push_back(spec.node_name(s));
    actions.push_back(std::move(m));
  }

  auto algebra = std::make_shared<zerohecke::FiniteAlgebra>();
  algebra->field = field;
  algebra->dim = dim;
  algebra->unit = 0;
  algebra->gen_names = std::move(names);
  algebra->gen_action = std::move(actions);
  algebra->label = "H_F(" + face_label(spec, face) + ")";
  alg.algebra_ = std::move(algebra);
  return alg;
}

std::size_t BruteFaceAlg::torus_index(const std::vector<int>& exps) const {
  const int m = spec().p - 1;
  std::size_t idx = 0;
  for (int k = coords_ - 1; k >= 0; --k) idx = idx * m + mod_p(exps[k], m);
  return idx;
}

std::vector<int> BruteFaceAlg::torus_exps(std::size_t index) const {
  const std::size_t m = spec().p - 1;
  std::vector<int> e(coords_);
  for (int k = 0; k < coords_; ++k) {
    e[k] = static_cast<int>(index % m);
    index /= m;
  }
  return e;
}

// Exponents of w-hat t w-hat^{-1}: the entry of coordinate k moves to row(k).
std::vector<int> BruteFaceAlg::conj(std::size_t w, const std::vector<int>& exps) const {
  std::vector<int> out(coords_);
  for (int k = 0; k < coords_; ++k) out[hats_[w].row[k]] = exps[k];
  return out;
}

FFMatrix BruteFaceAlg::torus_action(const std::vector<int>& exps) const {
  if (static_cast<int>(exps.size()) != coords_) throw DomainError("torus element has the wrong length");
  const std::size_t wn = group_size_;
  FFMatrix m(field_, dim(), dim());
  for (std::size_t w = 0; w < wn; ++w) {
    const auto shift = conj(w, exps);
    for (std::size_t t = 0; t < torus_size_; ++t) {
      auto e = torus_exps(t);
      for (int k = 0; k < coords_; ++k) e[k] += shift[k];
      m(t * wn + w, torus_index(e) * wn + w) = 1;
    }
  }
  return m;
}

const FFMatrix& BruteFaceAlg::reflection_action(NodeId s) const {
  const auto it = std::find(nodes_.begin(), nodes_.end(), s);
  if (it == nodes_.end()) throw DomainError("node " + spec().node_name(s) + " is not in the face");
  return algebra_->gen_action[coords_ + (it - nodes_.begin())];
}

Elem BruteFaceAlg::xi_value(const TorusChar& xi, const std::vector<int>& exps) const {
  const auto a = flat_exponents(haff::normalize(spec(), xi));
  long long s = 0;
  for (int k = 0; k < coords_; ++k) s += static_cast<long long>(a[k]) * exps[k];
  return field_->pow(field_->from_int(prime_->primitive()), s);
}

FFMatrix BruteFaceAlg::central_idempotent(const TorusChar& xi) const {
  const Elem scale = field_->inv(field_->from_int(static_cast<long long>(torus_size_)));
  FFMatrix e(field_, dim(), dim());
  for (std::size_t t = 0; t < torus_size_; ++t) {
    auto exps = torus_exps(t);
    const Elem c = field_->mul(scale, xi_value(xi, exps));
    for (int& x : exps) x = -x;
    const FFMatrix inv_t = torus_action(exps);
    for (std::size_t r = 0; r < dim(); ++r)
      for (std::size_t col = 0; col < dim(); ++col)
        if (inv_t(r, col) != 0) e(r, col) = field_->add(e(r, col), field_->mul(c, inv_t(r, col)));
  }
  return e;
}

HModule BruteFaceAlg::character(const AffChar& chi) const {
  const AffChar valid = haff::make_char(spec(), chi.xi, chi.J);
  std::vector<FFMatrix> actions;
  for (int k = 0; k < coords_; ++k) {
    std::vector<int> unit(coords_, 0);
    unit[k] = 1;
    FFMatrix m(field_, 1, 1);
    m(0, 0) = xi_value(valid.xi, unit);
    actions.push_back(std::move(m));
  }
  for (NodeId s : nodes_) {
    FFMatrix m(field_, 1, 1);
    m(0, 0) = field_->from_int(valid.value(s));
    actions.push_back(std::move(m));
  }
  return HModule(algebra_, std::move(actions));
}

HeckeGens BruteFaceAlg::gens() const {
  HeckeGens g{field_, dim(), {}, {}};
  for (int k = 0; k < coords_; ++k) g.torus.push_back(algebra_->gen_action[k]);
  for (std::size_t x = 0; x < nodes_.size(); ++x) g.reflection.emplace_back(nodes_[x], algebra_->gen_action[coords_ + x]);
  return g;
}

std::vector<std::string> BruteFaceAlg::relation_failures() const {
  auto fail = affine_relation_failures(lifts_, gens());
  const std::string where = " on " + face_label(spec(), face_);
  for (auto& f : fail) f += where;
  if (algebra_->dim != torus_size_ * group_size_) fail.push_back("dimension bookkeeping" + where);

  const FFMatrix zero(field_, dim(), dim());
  for (std::size_t t = 0; t < torus_size_; ++t) {
    const TorusChar xi = torus_char_from_flat(spec(), torus_exps(t));
    if (!weyl::is_subset(face_.nodes, haff::s_xi(spec(), xi))) continue;
    const FFMatrix e = central_idempotent(xi);
    std::string tag = " xi=";
    for (int x : flat_exponents(xi)) tag += std::to_string(x);
    tag += where;
    if (!(e * e == e)) fail.push_back("e_xi idempotent" + tag);
    for (std::size_t g = 0; g < algebra_->gen_action.size(); ++g) {
      const auto& r = algebra_->gen_action[g];
      if (!(e * r == r * e)) fail.push_back("e_xi central against " + algebra_->gen_names[g] + tag);
    }
    for (int k = 0; k < coords_; ++k) {
      std::vector<int> unit(coords_, 0);
      unit[k] = 1;
      if (!(e * algebra_->gen_action[k] == e.scaled(xi_value(xi, unit))))
        fail.push_back("e_xi eigenvalue t" + std::to_string(k + 1) + tag);
    }
    for (NodeId s : nodes_) {
      const FFMatrix es = e * reflection_action(s);
      if (!(es * es + es == zero)) fail.push_back("e_xi quadratic " + spec().node_name(s) + tag);
    }
  }
  return fail;
}

bool brute_res_projective(const BruteFaceAlg& alg, const AffChar& chi) {
  return zerohecke::is_projective(alg.character(chi));
}

bool brute_res_projective(const GroupSpec& spec, const AffChar& chi, const Face& face, Field field) {
  return brute_res_projective(BruteFaceAlg::build(spec, face, std::move(field)), chi);
}

std::size_t brute_stable_hom(const BruteFaceAlg& alg, const AffChar& a, const AffChar& b) {
  return zerohecke::stable_hom_dim(alg.character(a), alg.character(b));
}

std::size_t brute_stable_hom(const GroupSpec& spec, const AffChar& a, const AffChar& b, const Face& face,
                             Field field) {
  return brute_stable_hom(BruteFaceAlg::build(spec, face, std::move(field)), a, b);
}

// ---------------------------------------------------------------------------
// Module models

namespace {

std::size_t rotation_index(const std::vector<int>& k, const std::vector<int>& d) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < d.size(); ++i) idx = idx * d[i] + ((k[i] % d[i]) + d[i]) % d[i];
  return idx;
}

MonomialMatrix rotation_lift(const Lifts& l, const std::vector<int>& k) {
  MonomialMatrix r = MonomialMatrix::identity(l.spec.torus_dim(), l.spec.p);
  for (std::size_t i = 0; i < k.size(); ++i)
    for (int step = 0; step < k[i]; ++step) r = r * l.omega[i];
  return r;
}

}  // namespace

ModuleModel brute_module_model(const gln::SimpleSS& m) {
  const auto& spec = m.spec;
  if (spec.f != 1) throw DomainError("the oracle needs prime q, got q = " + std::to_string(spec.q));
  if (!m.field || m.field->p() != spec.p)
    throw DomainError("field too small: the model needs characteristic " + std::to_string(spec.p));
  const auto& f = *m.field;
  Lifts lifts = build_lifts(spec);
  const PrimeLog lg(spec.p);
  const int coords = spec.torus_dim();
  const auto basis = gln::rotations(m.d);
  const std::size_t n = basis.size();
  const auto a = flat_exponents(m.chi.xi);
  const Elem gen = f.from_int(lg.generator);
  auto xi_of = [&](const std::vector<int>& e) {
    long long s = 0;
    for (int k = 0; k < coords; ++k) s += static_cast<long long>(a[k]) * e[k];
    return f.pow(gen, s);
  };

  std::vector<std::string> names;
  std::vector<FFMatrix> actions;
  std::vector<MonomialMatrix> omegas;
  for (const auto& k : basis) omegas.push_back(rotation_lift(lifts, k));

  for (int j = 0; j < coords; ++j) {
    FFMatrix x(m.field, n, n);
    for (std::size_t b = 0; b < n; ++b) {
      const auto conj = omegas[b] * lifts.torus_unit(j, static_cast<int>(lg.generator)) * omegas[b].inverse();
      x(b, b) = xi_of(torus_exps_of(conj, lg));
    }
    names.push_back("t" + std::to_string(j + 1));
    actions.push_back(std::move(x));
  }
  for (NodeId s = 0; s < spec.node_count(); ++s) {
    FFMatrix x(m.field, n, n);
    for (std::size_t b = 0; b < n; ++b) {
      const auto [moved, c] = split_reflection(lifts, omegas[b] * lifts.reflection[s] * omegas[b].inverse());
      x(b, b) = f.mul(xi_of(torus_exps_of(c, lg)), f.from_int(m.chi.value(moved)));
    }
    names.push_back(spec.node_name(s));
    actions.push_back(std::move(x));
  }
  for (int i = 0; i < spec.rank(); ++i) {
    FFMatrix x(m.field, n, n);
    for (std::size_t b = 0; b < n; ++b) {
      auto k = basis[b];
      const bool wrap = k[i] + 1 == m.d[i];
      k[i] = wrap ? 0 : k[i] + 1;
      x(b, rotation_index(k, m.d)) = wrap ? m.lambda[i] : f.one();
    }
    auto inv = ff::inverse(x);
    names.push_back("w" + std::to_string(i + 1));
    actions.push_back(std::move(x));
    names.push_back("w" + std::to_string(i + 1) + "^-1");
    actions.push_back(std::move(*inv));
  }
  for (int j = 0; j < spec.torus_rank; ++j) {
    names.push_back("u" + std::to_string(j + 1));
    actions.push_back(FFMatrix::identity(m.field, n).scaled(m.nu[j]));
    names.push_back("u" + std::to_string(j + 1) + "^-1");
    actions.push_back(FFMatrix::identity(m.field, n).scaled(f.inv(m.nu[j])));
  }
  HModule module(m.field, std::move(names), std::move(actions));
  return ModuleModel{m, std::move(lifts), basis, std::move(module)};
}

std::vector<std::string> model_relation_failures(const ModuleModel& model) {
  const auto& spec = model.source.spec;
  const auto& mod = model.module;
  const auto& field = mod.field();
  const std::size_t n = mod.dim();
  const int coords = spec.torus_dim();
  auto gen = [&](const std::string& name) -> const FFMatrix& {
    const auto& names = mod.gen_names();
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw DomainError("model has no generator " + name);
    return mod.action(it - names.begin());
  };

  HeckeGens g{field, n, {}, {}};
  for (int k = 0; k < coords; ++k) g.torus.push_back(gen("t" + std::to_string(k + 1)));
  for (NodeId s = 0; s < spec.node_count(); ++s) g.reflection.emplace_back(s, gen(spec.node_name(s)));
  auto fail = affine_relation_failures(model.lifts, g);

  const PrimeLog lg(spec.p);
  const FFMatrix id = FFMatrix::identity(field, n);
  auto torus_of = [&](const std::vector<int>& e) {
    FFMatrix r = id;
    for (int k = 0; k < coords; ++k) r = r * mat_pow(g.torus[k], e[k]);
    return r;
  };

  std::vector<std::pair<std::string, FFMatrix>> lengthless;
  for (int i = 0; i < spec.rank(); ++i) {
    const std::string wn = "w" + std::to_string(i + 1);
    const FFMatrix& w = gen(wn);
    const FFMatrix& winv = gen(wn + "^-1");
    if (!(w * winv == id)) fail.push_back(wn + " inverse");
    const auto& omega = model.lifts.omega[i];
    for (NodeId s = 0; s < spec.node_count(); ++s) {
      const auto [moved, c] = split_reflection(model.lifts, omega * model.lifts.reflection[s] * omega.inverse());
      if (!(w * gen(spec.node_name(s)) * winv == torus_of(torus_exps_of(c, lg)) * gen(spec.node_name(moved))))
        fail.push_back(wn + " conjugation of " + spec.node_name(s));
    }
    for (int k = 0; k < coords; ++k) {
      const auto conj = omega * model.lifts.torus_unit(k, static_cast<int>(lg.generator)) * omega.inverse();
      if (!(w * g.torus[k] * winv == torus_of(torus_exps_of(conj, lg))))
        fail.push_back(wn + " conjugation of t" + std::to_string(k + 1));
    }
    const FFMatrix central = mat_pow(w, spec.factors[i]);
    for (std::size_t x = 0; x < mod.gen_names().size(); ++x)
      if (!(central * mod.action(x) == mod.action(x) * central))
        fail.push_back(wn + " power not central against " + mod.gen_names()[x]);
    lengthless.emplace_back(wn, w);
  }
  for (int j = 0; j < spec.torus_rank; ++j) {
    const std::string un = "u" + std::to_string(j + 1);
    const FFMatrix& u = gen(un);
    if (!(u * gen(un + "^-1") == id)) fail.push_back(un + " inverse");
    for (std::size_t x = 0; x < mod.gen_names().size(); ++x)
      if (!(u * mod.action(x) == mod.action(x) * u)) fail.push_back(un + " not central against " + mod.gen_names()[x]);
    lengthless.emplace_back(un, u);
  }
  for (std::size_t a = 0; a < lengthless.size(); ++a)
    for (std::size_t b = a + 1; b < lengthless.size(); ++b)
      if (!(lengthless[a].second * lengthless[b].second == lengthless[b].second * lengthless[a].second))
        fail.push_back(lengthless[a].first + "," + lengthless[b].first + " do not commute");
  return fail;
}

bool brute_mod_isomorphic(const ModuleModel& a, const ModuleModel& b) {
  if (!ff::same_field(a.module.field(), b.module.field())) throw DomainError("models use different fields");
  if (a.module.gen_names() != b.module.gen_names()) throw DomainError("models use different generators");
  if (a.module.dim() != b.module.dim()) return false;
  for (const auto& f : zerohecke::hom_basis(a.module, b.module))
    if (ff::inverse(f)) return true;
  return false;
}

bool brute_mod_isomorphic(const gln::SimpleSS& a, const gln::SimpleSS& b) {
  return brute_mod_isomorphic(brute_module_model(a), brute_module_model(b));
}

// ---------------------------------------------------------------------------
// Sweeps

std::size_t OracleReport::disagreements() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const OracleRow& r) { return !r.agree; }));
}

void OracleReport::append(OracleReport other) {
  rows.insert(rows.end(), std::make_move_iterator(other.rows.begin()), std::make_move_iterator(other.rows.end()));
  warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
}

std::string face_label(const GroupSpec& spec, const Face& face) {
  std::string s = "F=";
  const auto names = weyl::face_names(spec, face);
  if (names.empty()) return s + "-";
  for (std::size_t k = 0; k < names.size(); ++k) s += (k ? "+" : "") + names[k];
  return s;
}

namespace {

std::string bool_text(bool b) { return b ? "true" : "false"; }

void add_row(OracleReport& r, std::string instance, std::string pred, std::string orc) {
  const bool agree = pred == orc;
  r.rows.push_back({std::move(instance), std::move(pred), std::move(orc), agree});
}

// Null when the face algebra is over the cap; the report gets a warning.
std::optional<BruteFaceAlg> face_algebra(OracleReport& r, const GroupSpec& spec, const Face& face,
                                         const Field& field) {
  try {
    return BruteFaceAlg::build(spec, face, field);
  } catch (const DomainError& e) {
    r.warnings.push_back("skipped " + face_label(spec, face) + ": " + e.what());
    return std::nullopt;
  }
}

bool full(OracleReport& r, std::size_t cap, const std::string& sweep) {
  if (r.rows.size() < cap) return false;
  r.warnings.push_back(sweep + " sweep stopped at the cap of " + std::to_string(cap) + " rows");
  return true;
}

void require_oracle_inputs(const GroupSpec& spec, const Field& field) {
  if (spec.f != 1) throw DomainError("the oracle needs prime q, got q = " + std::to_string(spec.q));
  if (!field || field->p() != spec.p)
    throw DomainError("oracle field must have characteristic " + std::to_string(spec.p));
}

}  // namespace

OracleReport projectivity_sweep(const GroupSpec& spec, Field field, std::size_t cap) {
  require_oracle_inputs(spec, field);
  OracleReport r;
  const auto d = weyl::affine_dynkin(spec);
  const auto chars = haff::all_characters(spec);
  for (const auto& face : weyl::faces(d)) {
    const auto alg = face_algebra(r, spec, face, field);
    if (!alg) continue;
    for (const auto& chi : chars) {
      if (full(r, cap, "projectivity")) return r;
      add_row(r, "projective|" + face_label(spec, face) + "|" + haff::label(spec, chi),
              bool_text(haff::res_face_projective(spec, chi, face)), bool_text(brute_res_projective(*alg, chi)));
    }
  }
  return r;
}

OracleReport stable_hom_sweep(const GroupSpec& spec, Field field, std::size_t cap) {
  require_oracle_inputs(spec, field);
  OracleReport r;
  const auto d = weyl::affine_dynkin(spec);
  const auto chars = haff::all_characters(spec);
  for (const auto& face : weyl::faces(d)) {
    const auto alg = face_algebra(r, spec, face, field);
    if (!alg) continue;
    std::vector<HModule> mods;
    std::vector<bool> projective;
    for (const auto& chi : chars) {
      mods.push_back(alg->character(chi));
      projective.push_back(haff::res_face_projective(spec, chi, face));
    }
    for (std::size_t a = 0; a < chars.size(); ++a)
      for (std::size_t b = 0; b < chars.size(); ++b) {
        if (full(r, cap, "stable-hom")) return r;
        const bool same = chars[a].xi == chars[b].xi && (chars[a].J & face.nodes) == (chars[b].J & face.nodes);
        const int expect = same && !projective[a] ? 1 : 0;
        add_row(r,
                "stable-hom|" + face_label(spec, face) + "|" + haff::label(spec, chars[a]) + "|" +
                    haff::label(spec, chars[b]),
                std::to_string(expect), std::to_string(zerohecke::stable_hom_dim(mods[a], mods[b])));
      }
  }
  return r;
}

OracleReport relation_sweep(const GroupSpec& spec, Field field, std::size_t cap) {
  require_oracle_inputs(spec, field);
  OracleReport r;
  const Lifts lifts = build_lifts(spec);
  add_row(r, "relations|lifts", "0", std::to_string(lift_failures(lifts).size()));
  for (const auto& face : weyl::faces(spec)) {
    if (full(r, cap, "relations")) return r;
    const auto alg = face_algebra(r, spec, face, field);
    if (!alg) continue;
    const auto fail = alg->relation_failures();
    add_row(r, "relations|" + face_label(spec, face), "0", std::to_string(fail.size()));
    for (const auto& f : fail) r.warnings.push_back("relation failure: " + f);
  }
  return r;
}

namespace {

// Character of the model restricted to basis vector b, read off the diagonal.
AffChar model_character(const ModuleModel& model, std::size_t b) {
  const auto& spec = model.source.spec;
  const auto& mod = model.module;
  const PrimeLog lg(spec.p);
  std::vector<int> flat;
  for (int k = 0; k < spec.torus_dim(); ++k) flat.push_back(lg.of(static_cast<int>(mod.action(k)(b, b))));
  AffChar chi{torus_char_from_flat(spec, flat), 0};
  for (NodeId s = 0; s < spec.node_count(); ++s)
    if (mod.action(spec.torus_dim() + s)(b, b) != 0) chi.J |= weyl::single(s);
  return chi;
}

std::string sorted_labels(const GroupSpec& spec, std::vector<AffChar> chars) {
  std::sort(chars.begin(), chars.end());
  std::string s;
  for (std::size_t k = 0; k < chars.size(); ++k) s += (k ? "+" : "") + haff::label(spec, chars[k]);
  return s;
}

}  // namespace

OracleReport module_sweep(const GroupSpec& spec, Field field, std::size_t cap) {
  require_oracle_inputs(spec, field);
  OracleReport r;
  const auto simples = gln::enumerate_simples(spec, field);
  std::vector<ModuleModel> models, rotated;
  const std::vector<int> one(spec.rank(), 1);
  for (const auto& m : simples) {
    models.push_back(brute_module_model(m));
    rotated.push_back(brute_module_model(
        gln::build_simple(spec, haff::conj_char(spec, m.chi, one), m.lambda, m.nu, field)));
  }
  for (std::size_t a = 0; a < simples.size(); ++a) {
    if (full(r, cap, "module")) return r;
    const auto& model = models[a];
    add_row(r, "model-relations|" + simples[a].label(), "0",
            std::to_string(model_relation_failures(model).size()));
    std::vector<AffChar> seen;
    for (std::size_t b = 0; b < model.module.dim(); ++b) seen.push_back(model_character(model, b));
    add_row(r, "restriction|" + simples[a].label(), sorted_labels(spec, gln::restriction_decomposition(simples[a])),
            sorted_labels(spec, seen));
  }
  for (std::size_t a = 0; a < simples.size(); ++a)
    for (std::size_t b = 0; b < simples.size(); ++b) {
      if (full(r, cap, "module")) return r;
      add_row(r, "mod-iso|" + simples[a].label() + "|" + simples[b].label(),
              bool_text(gln::mod_isomorphic(simples[a], simples[b])),
              bool_text(brute_mod_isomorphic(models[a], models[b])));
      add_row(r, "mod-iso|" + rotated[a].source.label() + "|" + simples[b].label(),
              bool_text(gln::mod_isomorphic(rotated[a].source, simples[b])),
              bool_text(brute_mod_isomorphic(rotated[a], models[b])));
    }
  return r;
}

OracleReport oracle_check(const GroupSpec& spec, Field field, std::size_t cap) {
  require_oracle_inputs(spec, field);
  OracleReport r;
  using Sweep = OracleReport (*)(const GroupSpec&, Field, std::size_t);
  const std::pair<const char*, Sweep> sweeps[] = {{"relations", relation_sweep},
                                                  {"projectivity", projectivity_sweep},
                                                  {"stable-hom", stable_hom_sweep},
                                                  {"module", module_sweep}};
  for (const auto& [name, sweep] : sweeps) {
    try {
      r.append(sweep(spec, field, cap));
    } catch (const DomainError& e) {
      r.warnings.push_back(std::string(name) + " sweep incomplete: " + e.what());
    }
  }
  return r;
}

}  // namespace heckeho::oracle
