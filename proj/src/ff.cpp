#include "heckeho/ff.hpp"

#include <algorithm>
#include <sstream>

#include "heckeho/error.hpp"

namespace heckeho::ff {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over F_p as coefficient vectors, lowest degree first.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if ((x * m.back()) % p == 1) return x;
    return 1;
  }();
  while (a.size() >= m.size()) {
    const int shift = static_cast<int>(a.size() - m.size());
    const int factor = (a.back() * lead_inv) % p;
    for (std::size_t i = 0; i < m.size(); ++i)
      a[i + shift] = ((a[i + shift] - factor * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly decode(long long code, int p, int len) {
  Poly c(len);
  for (int i = 0; i < len; ++i) {
    c[i] = static_cast<int>(code % p);
    code /= p;
  }
  return c;
}

bool irreducible(const Poly& f, int p) {
  const int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long code = 0; code < count; ++code) {
      Poly g = decode(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int m) {
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long code = 0; code < count; ++code) {
    Poly f = decode(code, p, m);
    f.push_back(1);
    if (irreducible(f, p)) return f;
  }
  throw DomainError("no irreducible polynomial found");
}

}  // namespace

GaloisField::GaloisField(int p, int m) : p_(p), m_(m) {
  long long order = 1;
  for (int i = 0; i < m; ++i) order *= p;
  order_ = static_cast<Elem>(order);
  modulus_ = least_irreducible(p, m);

  auto mul_poly = [&](Elem a, Elem b) {
    Poly pa = decode(a, p, m), pb = decode(b, p, m);
    Poly prod(2 * m, 0);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
    Poly r = poly_mod(prod, modulus_, p);
    Elem code = 0;
    for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) code = code * p + r[i];
    return code;
  };

  neg_.resize(order_);
  for (Elem a = 0; a < order_; ++a) {
    Poly c = decode(a, p, m);
    Elem code = 0;
    for (int i = m - 1; i >= 0; --i) code = code * p + (p - c[i]) % p;
    neg_[a] = code;
  }

  if (order_ == 2) {
    exp_ = {1, 1};
    log_ = {0, 0};
  } else {
    for (Elem cand = 2; cand < order_; ++cand) {
      std::vector<Elem> powers;
      std::vector<bool> seen(order_, false);
      Elem x = 1;
      bool ok = true;
      for (Elem k = 0; k + 1 < order_; ++k) {
        if (seen[x]) {
          ok = false;
          break;
        }
        seen[x] = true;
        powers.push_back(x);
        x = mul_poly(x, cand);
      }
      if (ok) {
        exp_ = std::move(powers);
        break;
      }
    }
    log_.assign(order_, 0);
    for (Elem k = 0; k < exp_.size(); ++k) log_[exp_[k]] = k;
    exp_.push_back(1);
  }

  if (order_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    for (Elem a = 0; a < order_; ++a)
      for (Elem b = 0; b < order_; ++b) add_table_[a * order_ + b] = add_digits(a, b);
  }
}

std::shared_ptr<const GaloisField> GaloisField::make(int p, int m) {
  if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw DomainError("field degree must be positive");
  long long order = 1;
  for (int i = 0; i < m; ++i) {
    order *= p;
    if (order > 65536) throw DomainError("field order exceeds 65536");
  }
  return std::shared_ptr<const GaloisField>(new GaloisField(p, m));
}

Elem GaloisField::add_digits(Elem a, Elem b) const {
  if (m_ == 1) return (a + b) % p_;
  Elem result = 0, scale = 1;
  for (int i = 0; i < m_; ++i) {
    result += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return result;
}

Elem GaloisField::add(Elem a, Elem b) const {
  if (!add_table_.empty()) return add_table_[a * order_ + b];
  return add_digits(a, b);
}

Elem GaloisField::neg(Elem a) const { return neg_[a]; }

Elem GaloisField::inv(Elem a) const {
  if (a == 0) throw DomainError("division by zero in GF(" + std::to_string(order_) + ")");
  return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

Elem GaloisField::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e < 0) throw DomainError("zero has no inverse");
    return e == 0 ? 1 : 0;
  }
  const long long n = order_ - 1;
  long long k = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (k < 0) k += n;
  return exp_[k];
}

Elem GaloisField::from_int(long long n) const { return static_cast<Elem>(((n % p_) + p_) % p_); }

Elem GaloisField::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > m_)
    throw DomainError("coefficient vector longer than field degree");
  Elem code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    code = code * p_ + static_cast<Elem>(((coeffs[i] % p_) + p_) % p_);
  return code;
}

std::vector<int> GaloisField::coeffs(Elem a) const {
  std::vector<int> c(m_);
  for (int i = 0; i < m_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

std::string GaloisField::to_string(Elem a) const {
  if (m_ == 1) return std::to_string(a);
  std::ostringstream os;
  os << '[';
  auto c = coeffs(a);
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

bool same_field(const Field& a, const Field& b) { return a && b && (a == b || *a == *b); }

FFMatrix::FFMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FFMatrix FFMatrix::identity(Field field, std::size_t n) {
  FFMatrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FFMatrix FFMatrix::from_ints(Field field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FFMatrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field->from_int(rows[r][c]);
  }
  return m;
}

namespace {
void require_compatible(const FFMatrix& a, const FFMatrix& b) {
  if (!same_field(a.field(), b.field())) throw DomainError("matrices over different fields");
}
}  // namespace

FFMatrix FFMatrix::operator*(const FFMatrix& o) const {
  require_compatible(*this, o);
  if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in product");
  FFMatrix out(field_, rows_, o.cols_);
  const auto& f = *field_;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Elem b = o(k, j);
        if (b != 0) out(i, j) = f.add(out(i, j), f.mul(a, b));
      }
    }
  return out;
}

FFMatrix FFMatrix::operator+(const FFMatrix& o) const {
  require_compatible(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in sum");
  FFMatrix out(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = field_->add(data_[i], o.data_[i]);
  return out;
}

FFMatrix FFMatrix::operator-(const FFMatrix& o) const { return *this + o.scaled(field_->neg(1)); }

FFMatrix FFMatrix::scaled(Elem s) const {
  FFMatrix out(*this);
  for (auto& x : out.data_) x = field_->mul(x, s);
  return out;
}

FFMatrix FFMatrix::transposed() const {
  FFMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool FFMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x == 0; });
}

bool FFMatrix::operator==(const FFMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_ &&
         (rows_ * cols_ == 0 || same_field(field_, o.field_));
}

FFMatrix FFMatrix::kron(const FFMatrix& o) const {
  require_compatible(*this, o);
  FFMatrix out(field_, rows_ * o.rows_, cols_ * o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const Elem a = (*this)(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < o.rows_; ++k)
        for (std::size_t l = 0; l < o.cols_; ++l)
          out(i * o.rows_ + k, j * o.cols_ + l) = field_->mul(a, o(k, l));
    }
  return out;
}

FFMatrix FFMatrix::flattened() const { return reshaped(1, rows_ * cols_); }

FFMatrix FFMatrix::reshaped(std::size_t rows, std::size_t cols) const {
  if (rows * cols != data_.size()) throw DomainError("reshape changes element count");
  FFMatrix out(field_, rows, cols);
  out.data_ = data_;
  return out;
}

void FFMatrix::append_row(std::span<const Elem> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DomainError("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::string FFMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ",[" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << field_->to_string((*this)(i, j));
    os << ']';
  }
  os << ']';
  return os.str();
}

RrefResult rref(const FFMatrix& a) {
  RrefResult res{a, 0, {}};
  FFMatrix& m = res.reduced;
  if (m.rows() == 0 || m.cols() == 0) return res;
  const auto& f = *m.field();
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const Elem s = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), s);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Elem factor = m(i, col);
      if (factor == 0) continue;
      const Elem nf = f.neg(factor);
      for (std::size_t j = col; j < m.cols(); ++j) {
        const Elem v = m(row, j);
        if (v != 0) m(i, j) = f.add(m(i, j), f.mul(nf, v));
      }
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  return res;
}

std::size_t rank(const FFMatrix& a) { return rref(a).rank; }

std::optional<FFMatrix> solve(const FFMatrix& a, const FFMatrix& b) {
  if (a.rows() != b.rows()) throw DomainError("solve: row count mismatch");
  require_compatible(a, b);
  const std::size_t n = a.cols(), k = b.cols();
  FFMatrix aug(a.field(), a.rows(), n + k);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < k; ++j) aug(i, n + j) = b(i, j);
  }
  auto r = rref(aug);
  FFMatrix x(a.field(), n, k);
  for (std::size_t i = 0; i < r.rank; ++i) {
    const std::size_t col = r.pivots[i];
    if (col >= n) return std::nullopt;
    for (std::size_t j = 0; j < k; ++j) x(col, j) = r.reduced(i, n + j);
  }
  return x;
}

FFMatrix kernel(const FFMatrix& a) { return kernel_rows(a).transposed(); }

FFMatrix kernel_rows(const FFMatrix& a) {
  auto r = rref(a);
  const auto& f = *a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  FFMatrix basis(a.field(), 0, a.cols());
  std::vector<Elem> v(a.cols());
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.reduced(i, free));
    basis.append_row(v);
  }
  return basis;
}

std::optional<FFMatrix> inverse(const FFMatrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, FFMatrix::identity(a.field(), a.rows()));
  if (!x || !(a * *x == FFMatrix::identity(a.field(), a.rows()))) return std::nullopt;
  return x;
}

}  // namespace heckeho::ff
