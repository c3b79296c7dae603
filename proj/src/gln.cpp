#include "heckeho/gln.hpp"

#include <algorithm>
#include <sstream>

#include "heckeho/error.hpp"

namespace heckeho::gln {

using weyl::NodeSet;

std::size_t SimpleSS::dim() const {
  std::size_t n = 1;
  for (int x : d) n *= static_cast<std::size_t>(x);
  return n;
}

namespace {

std::string elem_label(const ff::GaloisField& f, Elem e) {
  if (f.m() == 1) return std::to_string(e);
  std::string s = "(";
  const auto c = f.coeffs(e);
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ":" : "") + std::to_string(c[i]);
  return s + ")";
}

}  // namespace

std::string SimpleSS::label() const {
  std::ostringstream os;
  os << haff::label(spec, chi);
  os << ";lam=";
  for (std::size_t j = 0; j < lambda.size(); ++j) os << (j ? "/" : "") << elem_label(*field, lambda[j]);
  os << ";nu=";
  for (std::size_t j = 0; j < nu.size(); ++j) os << (j ? "/" : "") << elem_label(*field, nu[j]);
  return os.str();
}

SimpleSS build_simple(const GroupSpec& spec, const AffChar& chi, std::vector<Elem> lambda,
                      std::vector<Elem> nu, Field field) {
  if (!field) throw DomainError("no coefficient field given");
  if (field->p() != spec.p)
    throw DomainError("coefficient field must have characteristic p = " + std::to_string(spec.p));
  AffChar valid = haff::make_char(spec, chi.xi, chi.J);
  if (!haff::is_supersingular(spec, valid)) throw DomainError("character is not supersingular");
  if (static_cast<int>(lambda.size()) != spec.rank())
    throw DomainError("expected " + std::to_string(spec.rank()) + " lambda scalars");
  if (static_cast<int>(nu.size()) != spec.torus_rank)
    throw DomainError("expected " + std::to_string(spec.torus_rank) + " nu scalars");
  for (Elem e : lambda)
    if (e == 0 || !field->contains(e)) throw DomainError("lambda scalars must be nonzero field elements");
  for (Elem e : nu)
    if (e == 0 || !field->contains(e)) throw DomainError("nu scalars must be nonzero field elements");
  auto d = haff::stabilizer(spec, valid);
  return SimpleSS{spec, std::move(valid), std::move(lambda), std::move(nu), std::move(field), std::move(d)};
}

std::vector<std::vector<int>> rotations(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> k(bound.size(), 0);
  for (int b : bound)
    if (b <= 0) return out;
  while (true) {
    out.push_back(k);
    int i = static_cast<int>(k.size()) - 1;
    while (i >= 0 && k[i] == bound[i] - 1) k[i--] = 0;
    if (i < 0) break;
    ++k[i];
  }
  return out;
}

std::vector<AffChar> restriction_decomposition(const SimpleSS& m) {
  std::vector<AffChar> out;
  for (const auto& k : rotations(m.d)) out.push_back(haff::conj_char(m.spec, m.chi, k));
  return out;
}

namespace {

void require_compatible(const SimpleSS& a, const SimpleSS& b) {
  if (!(a.spec == b.spec)) throw DomainError("modules belong to different groups");
  if (!ff::same_field(a.field, b.field)) throw DomainError("modules use different coefficient fields");
}

std::string rotation_text(const std::vector<int>& k) {
  std::string s = "(";
  for (std::size_t i = 0; i < k.size(); ++i) s += (i ? " " : "") + std::to_string(k[i]);
  return s + ")";
}

bool full_s_xi(const SimpleSS& m) { return haff::s_xi(m.spec, m.chi.xi) == m.spec.all_nodes(); }

// The second module's character, rotated, has a single J-node on the GL_3
// factor inside the first module's two J-nodes and agrees on the GL_2 factors.
std::optional<std::vector<int>> exceptional_rotation(const SimpleSS& big, const SimpleSS& small) {
  const auto& spec = big.spec;
  const NodeSet first = spec.factor_nodes(0);
  const NodeSet jb = big.chi.J & first;
  if (weyl::node_count(jb) != 2) return std::nullopt;
  for (const auto& k : rotations(spec.factors)) {
    const AffChar c = haff::conj_char(spec, small.chi, k);
    const NodeSet js = c.J & first;
    if (weyl::node_count(js) != 1 || !weyl::is_subset(js, jb)) continue;
    bool rest = true;
    for (int i = 1; i < spec.rank(); ++i)
      rest = rest && (c.J & spec.factor_nodes(i)) == (big.chi.J & spec.factor_nodes(i));
    if (rest) return k;
  }
  return std::nullopt;
}

}  // namespace

// Conjugation by T(F_q) never changes the scalars: omega_i^{d_i} fixes xi, so
// t omega_i^{d_i} t^{-1} omega_i^{-d_i} lies in the kernel of xi. Only the
// rotation transversal needs to be searched.
std::optional<std::vector<int>> conjugating_rotation(const SimpleSS& m, const SimpleSS& other) {
  require_compatible(m, other);
  if (m.lambda != other.lambda || m.nu != other.nu) return std::nullopt;
  for (const auto& k : rotations(m.spec.factors))
    if (haff::conj_char(m.spec, m.chi, k) == other.chi) return k;
  return std::nullopt;
}

bool mod_isomorphic(const SimpleSS& m, const SimpleSS& other) {
  return conjugating_rotation(m, other).has_value();
}

bool is_exceptional_shape(const GroupSpec& spec) {
  if (spec.rank() == 0 || spec.factors[0] != 3) return false;
  return std::all_of(spec.factors.begin() + 1, spec.factors.end(), [](int n) { return n == 2; });
}

Decision classify(const SimpleSS& m, const SimpleSS& other) {
  require_compatible(m, other);
  for (const SimpleSS* x : {&m, &other})
    if (haff::has_finite_pd(x->spec, x->chi))
      throw DomainError("module " + x->label() +
                        " has finite projective dimension (every factor is GL_2 and S_xi = S); "
                        "it is zero in the homotopy category and outside the classifier's hypothesis");
  Decision out;
  if (auto k = conjugating_rotation(m, other)) {
    out.mod_iso = out.ho_iso = true;
    out.witness = "conjugate by rotation " + rotation_text(*k);
    return out;
  }
  if (!is_exceptional_shape(m.spec)) {
    out.witness = "not conjugate; shape is not (3,2,...,2)";
    return out;
  }
  if (!(m.chi.xi == other.chi.xi) || !full_s_xi(m)) {
    out.witness = "not conjugate; exceptional case needs equal xi with S_xi = S";
    return out;
  }
  if (m.lambda != other.lambda || m.nu != other.nu) {
    out.witness = "not conjugate; scalars differ";
    return out;
  }
  if (auto k = exceptional_rotation(m, other)) {
    out.ho_iso = true;
    out.witness = "exceptional pair: second module rotated by " + rotation_text(*k);
  } else if (auto k2 = exceptional_rotation(other, m)) {
    out.ho_iso = true;
    out.witness = "exceptional pair: first module rotated by " + rotation_text(*k2);
  } else {
    out.witness = "not conjugate; J patterns do not form an exceptional pair";
  }
  return out;
}

bool ho_isomorphic(const SimpleSS& m, const SimpleSS& other) { return classify(m, other).ho_iso; }

std::vector<int> chi_key(const GroupSpec& spec, const AffChar& chi) {
  std::vector<int> key;
  for (int s = 0; s < spec.node_count(); ++s) key.push_back(weyl::has_node(chi.J, s) ? 1 : 0);
  for (const auto& a : chi.xi.exponents) key.insert(key.end(), a.begin(), a.end());
  key.insert(key.end(), chi.xi.torus_exponents.begin(), chi.xi.torus_exponents.end());
  return key;
}

AffChar canonical_rotation(const GroupSpec& spec, const AffChar& chi) {
  AffChar best = chi;
  auto best_key = chi_key(spec, chi);
  for (const auto& k : rotations(spec.factors)) {
    AffChar c = haff::conj_char(spec, chi, k);
    auto key = chi_key(spec, c);
    if (key < best_key) {
      best = std::move(c);
      best_key = std::move(key);
    }
  }
  return best;
}

std::vector<SimpleSS> enumerate_simples(const GroupSpec& spec, Field field, std::size_t cap) {
  std::vector<std::pair<std::vector<int>, AffChar>> reps;
  for (const auto& chi : haff::all_characters(spec)) {
    if (!haff::is_supersingular(spec, chi)) continue;
    if (!(canonical_rotation(spec, chi) == chi)) continue;
    reps.emplace_back(chi_key(spec, chi), chi);
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  const std::size_t units = field->order() - 1;
  const int slots = spec.rank() + spec.torus_rank;
  double total = static_cast<double>(reps.size());
  for (int i = 0; i < slots; ++i) total *= static_cast<double>(units);
  if (total > static_cast<double>(cap))
    throw DomainError("enumeration would produce " + std::to_string(static_cast<long long>(total)) +
                      " modules, above the cap of " + std::to_string(cap));

  std::vector<SimpleSS> out;
  std::vector<int> bound(slots, static_cast<int>(units));
  const auto scalar_tuples = rotations(bound);
  for (const auto& [key, chi] : reps)
    for (const auto& t : scalar_tuples) {
      std::vector<Elem> lambda, nu;
      for (int i = 0; i < slots; ++i) (i < spec.rank() ? lambda : nu).push_back(static_cast<Elem>(t[i] + 1));
      out.push_back(build_simple(spec, chi, std::move(lambda), std::move(nu), field));
    }
  return out;
}

}  // namespace heckeho::gln
