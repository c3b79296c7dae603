#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace heckeho::ff {

using Elem = std::uint32_t;

// GF(p^m) with the least monic irreducible modulus in the order that compares
// lower coefficients as base-p integers. Element e encodes the polynomial
// sum c_k x^k with e = sum c_k p^k, so small integers are prime-field elements.
class GaloisField {
 public:
  static std::shared_ptr<const GaloisField> make(int p, int m = 1);

  int p() const { return p_; }
  int m() const { return m_; }
  Elem order() const { return order_; }
  // Coefficients c_0..c_m of the monic modulus.
  const std::vector<int>& modulus() const { return modulus_; }
  Elem primitive() const { return exp_[1]; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (order_ - 1)];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  Elem from_int(long long n) const;
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem a) const;
  bool contains(Elem a) const { return a < order_; }
  std::string to_string(Elem a) const;

  bool operator==(const GaloisField& o) const { return p_ == o.p_ && m_ == o.m_; }

 private:
  GaloisField(int p, int m);
  Elem add_digits(Elem a, Elem b) const;

  int p_;
  int m_;
  Elem order_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;  // filled for small orders only
};

using Field = std::shared_ptr<const GaloisField>;

bool same_field(const Field& a, const Field& b);

// Dense row-major matrix over a GaloisField.
class FFMatrix {
 public:
  FFMatrix() = default;
  FFMatrix(Field field, std::size_t rows, std::size_t cols);

  static FFMatrix identity(Field field, std::size_t n);
  static FFMatrix from_ints(Field field, const std::vector<std::vector<long long>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }

  FFMatrix operator*(const FFMatrix& o) const;
  FFMatrix operator+(const FFMatrix& o) const;
  FFMatrix operator-(const FFMatrix& o) const;
  FFMatrix scaled(Elem s) const;
  FFMatrix transposed() const;
  bool is_zero() const;
  bool operator==(const FFMatrix& o) const;

  // Kronecker product.
  FFMatrix kron(const FFMatrix& o) const;
  // Row-major flattening into a single row.
  FFMatrix flattened() const;
  FFMatrix reshaped(std::size_t rows, std::size_t cols) const;
  void append_row(std::span<const Elem> values);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct RrefResult {
  FFMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const FFMatrix& a);
std::size_t rank(const FFMatrix& a);
// Some X with A X = B; free variables are set to zero.
std::optional<FFMatrix> solve(const FFMatrix& a, const FFMatrix& b);
// Columns form a basis of {x : A x = 0}, one per free variable.
FFMatrix kernel(const FFMatrix& a);
// The same basis laid out as rows.
FFMatrix kernel_rows(const FFMatrix& a);
std::optional<FFMatrix> inverse(const FFMatrix& a);

}  // namespace heckeho::ff
