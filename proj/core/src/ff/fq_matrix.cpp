#include "isocay/ff/fq_matrix.hpp"

#include <sstream>

namespace isocay::ff {

FqMatrix::FqMatrix(std::shared_ptr<const Field> field, std::size_t n)
    : field_(std::move(field)), n_(n), a_(n * n, 0) {}

FqMatrix FqMatrix::identity(std::shared_ptr<const Field> field, std::size_t n) {
  FqMatrix m(std::move(field), n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FqMatrix FqMatrix::from_rows(std::shared_ptr<const Field> field, const std::vector<std::vector<Elem>>& rows) {
  FqMatrix m(std::move(field), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows.size()) throw PreconditionError("matrix rows must form a square");
    for (std::size_t c = 0; c < rows.size(); ++c) {
      if (rows[r][c] >= m.field_->order()) throw PreconditionError("matrix entry out of range");
      m.at(r, c) = rows[r][c];
    }
  }
  return m;
}

namespace {
void check_same(const FqMatrix& a, const FqMatrix& b) {
  if (a.size() != b.size()) throw PreconditionError("matrix size mismatch");
  if (a.field() != b.field() && !a.field()->same_as(*b.field()))
    throw PreconditionError("matrices over different fields");
}
}  // namespace

FqMatrix operator+(const FqMatrix& a, const FqMatrix& b) {
  check_same(a, b);
  FqMatrix r(a.field_, a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.field_->add(a.a_[i], b.a_[i]);
  return r;
}

FqMatrix operator-(const FqMatrix& a, const FqMatrix& b) {
  check_same(a, b);
  FqMatrix r(a.field_, a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.field_->sub(a.a_[i], b.a_[i]);
  return r;
}

FqMatrix operator*(const FqMatrix& a, const FqMatrix& b) {
  check_same(a, b);
  const Field& f = *a.field_;
  const std::size_t n = a.n_;
  FqMatrix r(a.field_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const auto x = a.a_[i * n + k];
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.a_[i * n + j] = f.add(r.a_[i * n + j], f.mul(x, b.a_[k * n + j]));
    }
  return r;
}

FqMatrix FqMatrix::scaled(Elem s) const {
  FqMatrix r(field_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->mul(a_[i], s);
  return r;
}

FqMatrix FqMatrix::transpose() const {
  FqMatrix r(field_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.at(j, i) = at(i, j);
  return r;
}

FqMatrix FqMatrix::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  FqMatrix r = identity(field_, n_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

FqMatrix FqMatrix::inverse() const {
  const Field& f = *field_;
  const std::size_t n = n_;
  FqMatrix a = *this, r = identity(field_, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col) == 0) ++piv;
    if (piv == n) throw ArithmeticError("matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(r.at(piv, j), r.at(col, j));
      }
    const auto inv = f.inv(a.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = f.mul(a.at(col, j), inv);
      r.at(col, j) = f.mul(r.at(col, j), inv);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col) continue;
      const auto c = a.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
        r.at(i, j) = f.sub(r.at(i, j), f.mul(c, r.at(col, j)));
      }
    }
  }
  return r;
}

FqMatrix::Elem FqMatrix::det() const {
  const Field& f = *field_;
  FqMatrix a = *this;
  Elem d = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t piv = col;
    while (piv < n_ && a.at(piv, col) == 0) ++piv;
    if (piv == n_) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(piv, j), a.at(col, j));
      d = f.neg(d);
    }
    d = f.mul(d, a.at(col, col));
    const auto inv = f.inv(a.at(col, col));
    for (std::size_t i = col + 1; i < n_; ++i) {
      const auto c = f.mul(a.at(i, col), inv);
      if (c == 0) continue;
      for (std::size_t j = col; j < n_; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(col, j)));
    }
  }
  return d;
}

FqMatrix FqMatrix::rref() const {
  const Field& f = *field_;
  FqMatrix a = *this;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n_ && row < n_; ++col) {
    std::size_t piv = row;
    while (piv < n_ && a.at(piv, col) == 0) ++piv;
    if (piv == n_) continue;
    for (std::size_t j = 0; j < n_; ++j) std::swap(a.at(piv, j), a.at(row, j));
    const auto inv = f.inv(a.at(row, col));
    for (std::size_t j = 0; j < n_; ++j) a.at(row, j) = f.mul(a.at(row, j), inv);
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == row) continue;
      const auto c = a.at(i, col);
      if (c == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) a.at(i, j) = f.sub(a.at(i, j), f.mul(c, a.at(row, j)));
    }
    ++row;
  }
  return a;
}

std::size_t FqMatrix::rank() const {
  const FqMatrix r = rref();
  std::size_t k = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    bool nz = false;
    for (std::size_t j = 0; j < n_; ++j) nz = nz || r.at(i, j) != 0;
    k += nz;
  }
  return k;
}

bool FqMatrix::is_identity() const {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (at(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

std::string FqMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < n_; ++j) os << (j ? " " : "") << field_->format(at(i, j));
  }
  return os.str();
}

std::vector<std::vector<Field::Elem>> column_space_basis(const FqMatrix& m) {
  const FqMatrix r = m.transpose().rref();
  std::vector<std::vector<Field::Elem>> out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::vector<Field::Elem> row(r.size());
    bool nz = false;
    for (std::size_t j = 0; j < r.size(); ++j) {
      row[j] = r.at(i, j);
      nz = nz || row[j] != 0;
    }
    if (nz) out.push_back(std::move(row));
  }
  return out;
}

FqMatrix frobenius_matrix(const ExtField& E, std::int64_t i) {
  const std::size_t d = E.degree();
  FqMatrix m(E.base_ptr(), d);
  ExtField::Elem basis = 1;
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = E.digits(E.frobenius(basis, i));
    for (std::size_t r = 0; r < d; ++r) m.at(r, j) = col[r];
    basis = E.mul(basis, E.tau());
  }
  return m;
}

FqMatrix regular_rep(const ExtField& E, ExtField::Elem a) {
  const std::size_t d = E.degree();
  FqMatrix m(E.base_ptr(), d);
  ExtField::Elem basis = 1;
  for (std::size_t j = 0; j < d; ++j) {
    const auto col = E.digits(E.mul(a, basis));
    for (std::size_t r = 0; r < d; ++r) m.at(r, j) = col[r];
    basis = E.mul(basis, E.tau());
  }
  return m;
}

bool generates_quotient(const ExtField& E, ExtField::Elem u) {
  if (u == 0) return false;
  const std::uint64_t q = E.base().order();
  const std::uint64_t n = (E.order() - 1) / (q - 1);
  if (!E.in_base(E.pow(u, n))) return false;
  for (auto l : prime_factors(n))
    if (E.in_base(E.pow(u, n / l))) return false;
  return true;
}

ExtField::Elem mult_generator(const ExtField& E) {
  if (generates_quotient(E, E.tau())) return E.tau();
  for (ExtField::Elem c = 2; c < E.order(); ++c)
    if (generates_quotient(E, c)) return c;
  throw VerificationError("no generator of the quotient group found");
}

}  // namespace isocay::ff
