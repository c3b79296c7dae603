#include "heckeho/zerohecke.hpp"

#include <algorithm>
#include <set>

#include "heckeho/error.hpp"

namespace heckeho::zerohecke {

using ff::Elem;

int FiniteAlgebra::gen_index(const std::string& name) const {
  auto it = std::find(gen_names.begin(), gen_names.end(), name);
  if (it == gen_names.end()) throw DomainError("algebra has no generator '" + name + "'");
  return static_cast<int>(it - gen_names.begin());
}

namespace {

// Coefficient matrix of F |-> (X_g F - F Y_g)_g on row-major F of shape a x b.
FFMatrix intertwiner_system(const Field& field, const std::vector<FFMatrix>& xs,
                            const std::vector<FFMatrix>& ys, std::size_t a, std::size_t b) {
  const auto& f = *field;
  FFMatrix sys(field, xs.size() * a * b, a * b);
  for (std::size_t g = 0; g < xs.size(); ++g) {
    const FFMatrix& x = xs[g];
    const FFMatrix& y = ys[g];
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < b; ++j) {
        const std::size_t row = (g * a + i) * b + j;
        for (std::size_t k = 0; k < a; ++k)
          if (x(i, k) != 0) sys(row, k * b + j) = f.add(sys(row, k * b + j), x(i, k));
        for (std::size_t l = 0; l < b; ++l)
          if (y(l, j) != 0) sys(row, i * b + l) = f.sub(sys(row, i * b + l), y(l, j));
      }
  }
  return sys;
}

std::vector<FFMatrix> intertwiners(const Field& field, const std::vector<FFMatrix>& xs,
                                   const std::vector<FFMatrix>& ys, std::size_t a, std::size_t b) {
  std::vector<FFMatrix> out;
  if (a == 0 || b == 0) return out;
  if (xs.empty()) {
    for (std::size_t k = 0; k < a * b; ++k) {
      FFMatrix e(field, a, b);
      e(k / b, k % b) = 1;
      out.push_back(e);
    }
    return out;
  }
  const FFMatrix ker = ff::kernel_rows(intertwiner_system(field, xs, ys, a, b));
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    FFMatrix m(field, a, b);
    for (std::size_t k = 0; k < a * b; ++k) m(k / b, k % b) = ker(r, k);
    out.push_back(m);
  }
  return out;
}

// Maps A -> M, a |-> m_j a, one per basis vector m_j, as dim(A) x dim(M)
// matrices. Exists exactly when M is a module over A.
std::vector<FFMatrix> evaluation_maps(const FiniteAlgebra& alg, const Field& field,
                                      const std::vector<FFMatrix>& actions, std::size_t n) {
  auto basis = intertwiners(field, alg.gen_action, actions, alg.dim, n);
  FFMatrix units(field, basis.size(), n);
  for (std::size_t k = 0; k < basis.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) units(k, j) = basis[k](alg.unit, j);
  if (basis.size() != n) return {};
  auto inv = ff::inverse(units);
  if (!inv) return {};
  std::vector<FFMatrix> out;
  const auto& f = *field;
  for (std::size_t j = 0; j < n; ++j) {
    FFMatrix phi(field, alg.dim, n);
    for (std::size_t k = 0; k < n; ++k) {
      const Elem c = (*inv)(j, k);
      if (c == 0) continue;
      for (std::size_t r = 0; r < alg.dim; ++r)
        for (std::size_t s = 0; s < n; ++s)
          phi(r, s) = f.add(phi(r, s), f.mul(c, basis[k](r, s)));
    }
    out.push_back(std::move(phi));
  }
  return out;
}

void check_actions(const Field& field, const std::vector<FFMatrix>& actions, std::size_t& dim) {
  dim = actions.empty() ? 0 : actions.front().rows();
  for (const auto& a : actions) {
    if (a.rows() != dim || a.cols() != dim) throw DomainError("module actions must be square of equal size");
    if (!ff::same_field(a.field(), field)) throw DomainError("module actions over the wrong field");
  }
}

}  // namespace

HModule::HModule(AlgebraPtr parent, std::vector<FFMatrix> actions)
    : parent_(std::move(parent)), actions_(std::move(actions)) {
  if (!parent_) throw DomainError("module parent algebra is null");
  field_ = parent_->field;
  names_ = parent_->gen_names;
  if (actions_.size() != names_.size()) throw DomainError("one action matrix per generator is required");
  check_actions(field_, actions_, dim_);
  if (dim_ > 0 && evaluation_maps(*parent_, field_, actions_, dim_).empty())
    throw DomainError("action does not satisfy the relations of " + parent_->label);
}

HModule::HModule(Field field, std::vector<std::string> gen_names, std::vector<FFMatrix> actions)
    : field_(std::move(field)), names_(std::move(gen_names)), actions_(std::move(actions)) {
  if (actions_.size() != names_.size()) throw DomainError("one action matrix per generator is required");
  check_actions(field_, actions_, dim_);
}

ZeroHeckeAlg build_zero_hecke(const weyl::CoxeterGroup& group, Field field,
                              std::vector<std::string> names, std::size_t cap) {
  if (group.size() > cap)
    throw DomainError("Weyl group of order " + std::to_string(group.size()) + " exceeds cap " +
                      std::to_string(cap));
  const int n = group.rank();
  if (names.empty())
    for (int s = 0; s < n; ++s) names.push_back("H" + std::to_string(s + 1));
  if (static_cast<int>(names.size()) != n) throw DomainError("need one generator name per node");
  auto alg = std::make_shared<FiniteAlgebra>();
  alg->field = field;
  alg->dim = group.size();
  alg->unit = 0;
  alg->gen_names = std::move(names);
  alg->label = "0-Hecke(" + group.type().str() + ")";
  const Elem minus_one = field->neg(1);
  for (int s = 0; s < n; ++s) {
    FFMatrix m(field, alg->dim, alg->dim);
    for (std::size_t w = 0; w < group.size(); ++w) {
      const std::size_t ws = group.right_mult(w, s);
      if (group.length(ws) > group.length(w))
        m(w, ws) = 1;
      else
        m(w, w) = minus_one;
    }
    alg->gen_action.push_back(std::move(m));
  }
  return ZeroHeckeAlg{group, std::move(alg)};
}

ZeroHeckeAlg build_zero_hecke(const weyl::CoxeterType& type, Field field,
                              std::vector<std::string> names, std::size_t cap) {
  return build_zero_hecke(weyl::enumerate_coxeter(type, cap + 1), std::move(field), std::move(names), cap);
}

HModule character_module(const AlgebraPtr& alg, const std::vector<Elem>& values) {
  if (values.size() != alg->gen_names.size()) throw DomainError("need one value per generator");
  std::vector<FFMatrix> actions;
  for (Elem v : values) {
    FFMatrix m(alg->field, 1, 1);
    m(0, 0) = v;
    actions.push_back(std::move(m));
  }
  return HModule(alg, std::move(actions));
}

HModule character_module(const ZeroHeckeAlg& alg, weyl::NodeSet subset) {
  const int n = alg.group.rank();
  if (n < 64 && (subset >> n) != 0) throw DomainError("character subset uses unknown generators");
  std::vector<Elem> values;
  for (int s = 0; s < n; ++s) values.push_back(weyl::has_node(subset, s) ? alg.algebra->field->neg(1) : 0);
  return character_module(alg.algebra, values);
}

HModule regular_module(const AlgebraPtr& alg) { return HModule(alg, alg->gen_action); }

HModule direct_sum(const HModule& m, const HModule& n) {
  if (m.gen_names() != n.gen_names() || !ff::same_field(m.field(), n.field()))
    throw DomainError("direct sum of modules over different algebras");
  std::vector<FFMatrix> actions;
  const std::size_t a = m.dim(), b = n.dim();
  for (std::size_t g = 0; g < m.actions().size(); ++g) {
    FFMatrix x(m.field(), a + b, a + b);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j) x(i, j) = m.action(g)(i, j);
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) x(a + i, a + j) = n.action(g)(i, j);
    actions.push_back(std::move(x));
  }
  if (m.parent()) return HModule(m.parent(), std::move(actions));
  return HModule(m.field(), m.gen_names(), std::move(actions));
}

namespace {
void require_same_algebra(const HModule& m, const HModule& n) {
  if (m.gen_names() != n.gen_names() || !ff::same_field(m.field(), n.field()))
    throw DomainError("modules are over different algebras");
}

const FiniteAlgebra& require_parent(const HModule& m) {
  if (!m.parent()) throw DomainError("operation needs a finite-dimensional parent algebra");
  return *m.parent();
}
}  // namespace

std::vector<FFMatrix> hom_basis(const HModule& m, const HModule& n) {
  require_same_algebra(m, n);
  return intertwiners(m.field(), m.actions(), n.actions(), m.dim(), n.dim());
}

FFMatrix hom_space(const HModule& m, const HModule& n) {
  FFMatrix out(m.field(), 0, m.dim() * n.dim());
  for (const auto& f : hom_basis(m, n)) out.append_row(f.data());
  return out;
}

std::size_t hom_dim(const HModule& m, const HModule& n) { return hom_basis(m, n).size(); }

bool is_projective(const HModule& m) {
  const FiniteAlgebra& alg = require_parent(m);
  const std::size_t n = m.dim();
  if (n == 0) return true;
  // Free cover A^n -> M sending the j-th unit to the j-th basis vector; M is
  // projective iff the identity factors through it.
  const auto sections = intertwiners(m.field(), m.actions(), alg.gen_action, n, alg.dim);
  const auto covers = evaluation_maps(alg, m.field(), m.actions(), n);
  FFMatrix span(m.field(), 0, n * n);
  for (const auto& sigma : sections)
    for (const auto& pi : covers) span.append_row((sigma * pi).data());
  const std::size_t before = ff::rank(span);
  span.append_row(FFMatrix::identity(m.field(), n).data());
  return ff::rank(span) == before;
}

std::size_t stable_hom_dim(const HModule& m, const HModule& n) {
  require_same_algebra(m, n);
  const FiniteAlgebra& alg = require_parent(m);
  const std::size_t homs = hom_dim(m, n);
  if (homs == 0) return 0;
  const auto sections = intertwiners(m.field(), m.actions(), alg.gen_action, m.dim(), alg.dim);
  const auto covers = evaluation_maps(alg, n.field(), n.actions(), n.dim());
  FFMatrix span(m.field(), 0, m.dim() * n.dim());
  for (const auto& sigma : sections)
    for (const auto& theta : covers) span.append_row((sigma * theta).data());
  return homs - ff::rank(span);
}

AlgebraPtr tensor_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!ff::same_field(a->field, b->field)) throw DomainError("tensor product over different fields");
  auto out = std::make_shared<FiniteAlgebra>();
  out->field = a->field;
  out->dim = a->dim * b->dim;
  out->unit = a->unit * b->dim + b->unit;
  out->label = a->label + " (x) " + b->label;
  std::set<std::string> names(a->gen_names.begin(), a->gen_names.end());
  for (const auto& s : b->gen_names)
    if (names.count(s)) throw DomainError("tensor factors share the generator name '" + s + "'");
  const auto ib = FFMatrix::identity(a->field, b->dim);
  const auto ia = FFMatrix::identity(a->field, a->dim);
  for (std::size_t g = 0; g < a->gen_names.size(); ++g) {
    out->gen_names.push_back(a->gen_names[g]);
    out->gen_action.push_back(a->gen_action[g].kron(ib));
  }
  for (std::size_t g = 0; g < b->gen_names.size(); ++g) {
    out->gen_names.push_back(b->gen_names[g]);
    out->gen_action.push_back(ia.kron(b->gen_action[g]));
  }
  return out;
}

namespace {
std::vector<FFMatrix> tensor_actions(const HModule& m, const HModule& n) {
  std::vector<FFMatrix> actions;
  const auto in = FFMatrix::identity(m.field(), n.dim());
  const auto im = FFMatrix::identity(m.field(), m.dim());
  for (const auto& x : m.actions()) actions.push_back(x.kron(in));
  for (const auto& y : n.actions()) actions.push_back(im.kron(y));
  return actions;
}
}  // namespace

HModule tensor_module(const HModule& m, const HModule& n) {
  if (!ff::same_field(m.field(), n.field())) throw DomainError("tensor product over different fields");
  if (m.parent() && n.parent()) return HModule(tensor_algebra(m.parent(), n.parent()), tensor_actions(m, n));
  std::vector<std::string> names = m.gen_names();
  for (const auto& s : n.gen_names())
    if (std::find(names.begin(), names.end(), s) != names.end())
      throw DomainError("tensor factors share the generator name '" + s + "'");
  names.insert(names.end(), n.gen_names().begin(), n.gen_names().end());
  return HModule(m.field(), std::move(names), tensor_actions(m, n));
}

HModule tensor_module(const HModule& m, const HModule& n, const AlgebraPtr& target) {
  if (!ff::same_field(m.field(), n.field())) throw DomainError("tensor product over different fields");
  auto actions = tensor_actions(m, n);
  std::vector<std::string> names = m.gen_names();
  names.insert(names.end(), n.gen_names().begin(), n.gen_names().end());
  if (names.size() != target->gen_names.size())
    throw DomainError("target algebra generators do not match the factors");
  std::vector<FFMatrix> ordered;
  for (const auto& name : target->gen_names) {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) throw DomainError("generator '" + name + "' missing from both factors");
    ordered.push_back(actions[it - names.begin()]);
  }
  return HModule(target, std::move(ordered));
}

}  // namespace heckeho::zerohecke
