#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isocay/ff/field.hpp"

namespace isocay::ff {

/// Dense square matrix over a Field, row-major.
class FqMatrix {
 public:
  using Elem = Field::Elem;

  FqMatrix(std::shared_ptr<const Field> field, std::size_t n);
  static FqMatrix identity(std::shared_ptr<const Field> field, std::size_t n);
  static FqMatrix from_rows(std::shared_ptr<const Field> field, const std::vector<std::vector<Elem>>& rows);

  const std::shared_ptr<const Field>& field() const { return field_; }
  std::size_t size() const { return n_; }
  Elem at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  Elem& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const std::vector<Elem>& data() const { return a_; }

  friend FqMatrix operator+(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator-(const FqMatrix& a, const FqMatrix& b);
  friend FqMatrix operator*(const FqMatrix& a, const FqMatrix& b);
  FqMatrix scaled(Elem s) const;
  FqMatrix transpose() const;
  /// Negative exponents go through the inverse.
  FqMatrix pow(std::int64_t e) const;
  /// Throws ArithmeticError when singular.
  FqMatrix inverse() const;
  Elem det() const;
  std::size_t rank() const;
  /// Reduced row-echelon form.
  FqMatrix rref() const;
  bool is_identity() const;

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

  /// Rows separated by ';', entries by ' ' in F_p tuple form.
  std::string to_string() const;

 private:
  std::shared_ptr<const Field> field_;
  std::size_t n_;
  std::vector<Elem> a_;
};

/// Reduced row-echelon basis (nonzero rows) of the column span of m, as a
/// list of row vectors. Two subspaces are equal iff these lists are equal.
std::vector<std::vector<Field::Elem>> column_space_basis(const FqMatrix& m);

/// Matrix of x -> x^{q^i} on F_{q^d} in the basis 1, tau, ..., tau^{d-1},
/// acting on coordinate columns.
FqMatrix frobenius_matrix(const ExtField& E, std::int64_t i);
/// Matrix of x -> a*x in the same basis.
FqMatrix regular_rep(const ExtField& E, ExtField::Elem a);
/// An element whose class generates F_{q^d}^x / F_q^x; tau is tried first,
/// then codes in increasing order.
ExtField::Elem mult_generator(const ExtField& E);
/// Whether the class of u generates F_{q^d}^x / F_q^x.
bool generates_quotient(const ExtField& E, ExtField::Elem u);

}  // namespace isocay::ff
