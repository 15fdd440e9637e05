#include "isocay/ff/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "isocay/common/text.hpp"

namespace isocay::ff {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

// Dense polynomials over F_p, coefficients low-to-high, used only while
// building a Field (before its tables exist).
using RawPoly = std::vector<std::uint32_t>;

void trim(RawPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

RawPoly raw_mod(RawPoly a, const RawPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() > dm) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

RawPoly raw_mulmod(const RawPoly& a, const RawPoly& b, const RawPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  RawPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return raw_mod(std::move(r), m, p);
}

bool raw_divides(const RawPoly& d, const RawPoly& a, std::uint32_t p) {
  return raw_mod(a, d, p).empty();
}

// Trial factoring: m has no monic factor of degree 1..deg/2.
bool raw_irreducible(const RawPoly& m, std::uint32_t p) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      RawPoly cand(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      cand[k] = 1;
      if (raw_divides(cand, m, p)) return false;
    }
  }
  return true;
}

std::uint64_t int_pow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus)
    : p_(p), f_(f), q_(int_pow(p, f)), modulus_(std::move(modulus)) {
  const auto code_of = [&](const RawPoly& a) {
    std::uint64_t c = 0, scale = 1;
    for (std::size_t i = 0; i < f_; ++i) {
      if (i < a.size()) c += a[i] * scale;
      scale *= p_;
    }
    return static_cast<Elem>(c);
  };
  const auto poly_of = [&](std::uint64_t code) {
    RawPoly a(f_, 0);
    for (std::size_t i = 0; i < f_; ++i) {
      a[i] = static_cast<std::uint32_t>(code % p_);
      code /= p_;
    }
    trim(a);
    return a;
  };

  neg_.resize(q_);
  for (std::uint64_t a = 0; a < q_; ++a) {
    RawPoly pa = poly_of(a);
    for (auto& c : pa) c = (p_ - c) % p_;
    neg_[a] = code_of(pa);
  }

  // Find a generator of F_q^x by checking a^{(q-1)/l} != 1 for each prime l.
  const auto factors = prime_factors(q_ - 1);
  const auto raw_pow = [&](RawPoly base, std::uint64_t e) {
    RawPoly r{1};
    while (e > 0) {
      if (e & 1) r = raw_mulmod(r, base, modulus_, p_);
      base = raw_mulmod(base, base, modulus_, p_);
      e >>= 1;
    }
    return r;
  };
  if (q_ == 2) {
    primitive_ = 1;
  } else {
    for (std::uint64_t c = 2; c < q_; ++c) {
      const RawPoly a = poly_of(c);
      bool ok = true;
      for (auto l : factors) {
        if (raw_pow(a, (q_ - 1) / l) == RawPoly{1}) {
          ok = false;
          break;
        }
      }
      if (ok) {
        primitive_ = static_cast<Elem>(c);
        break;
      }
    }
  }

  exp_.resize(2 * (q_ - 1));
  log_.assign(q_, 0);
  RawPoly cur{1};
  const RawPoly g = poly_of(primitive_);
  for (std::uint64_t e = 0; e < q_ - 1; ++e) {
    const Elem c = code_of(cur);
    exp_[e] = c;
    exp_[e + q_ - 1] = c;
    log_[c] = static_cast<std::uint32_t>(e);
    cur = raw_mulmod(cur, g, modulus_, p_);
  }

  if (q_ <= 256) {
    add_table_.resize(q_ * q_);
    for (std::uint64_t a = 0; a < q_; ++a)
      for (std::uint64_t b = 0; b < q_; ++b) {
        std::uint64_t ca = a, cb = b, r = 0, scale = 1;
        for (std::uint32_t i = 0; i < f_; ++i) {
          r += ((ca % p_ + cb % p_) % p_) * scale;
          ca /= p_;
          cb /= p_;
          scale *= p_;
        }
        add_table_[a * q_ + b] = static_cast<Elem>(r);
      }
  }
}

std::shared_ptr<const Field> Field::create(std::uint32_t p, std::uint32_t f,
                                           std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw PreconditionError("field characteristic " + std::to_string(p) + " is not prime");
  if (f == 0) throw PreconditionError("field degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < f; ++i) {
    q *= p;
    if (q > kMaxOrder) throw PreconditionError("field order exceeds 2^16");
  }
  if (modulus.size() != f + 1 || modulus.back() != 1)
    throw PreconditionError("field modulus must be monic of degree f");
  for (auto c : modulus)
    if (c >= p) throw PreconditionError("field modulus coefficient out of range");
  if (!raw_irreducible(modulus, p)) throw PreconditionError("field modulus is reducible over F_p");
  return std::shared_ptr<const Field>(new Field(p, f, std::move(modulus)));
}

std::shared_ptr<const Field> Field::prime(std::uint32_t p) { return create(p, 1, {0, 1}); }

std::shared_ptr<const Field> Field::of_order(std::uint64_t q) {
  const auto factors = prime_factors(q);
  if (q < 2 || factors.size() != 1) throw PreconditionError("q = " + std::to_string(q) + " is not a prime power");
  const auto p = static_cast<std::uint32_t>(factors[0]);
  std::uint32_t f = 0;
  for (std::uint64_t r = q; r > 1; r /= p) ++f;
  if (f == 1) return prime(p);
  if (q > kMaxOrder) throw PreconditionError("field order exceeds 2^16");
  for (std::uint64_t code = 0; code < q; ++code) {
    RawPoly m(f + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < f; ++i) {
      m[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    m[f] = 1;
    if (raw_irreducible(m, p)) return create(p, f, m);
  }
  throw VerificationError("no irreducible polynomial found");  // unreachable
}

std::shared_ptr<const Field> Field::parse(std::string_view descriptor) {
  const auto kv = text::parse_kv(descriptor);
  const auto p = text::to_u64(text::require(kv, "p"));
  const auto f = text::to_u64(text::require(kv, "f"));
  std::vector<std::uint32_t> mod;
  for (auto part : text::split(text::require(kv, "mod"), ','))
    mod.push_back(static_cast<std::uint32_t>(text::to_u64(part)));
  return create(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(f), std::move(mod));
}

std::string Field::descriptor() const {
  std::ostringstream os;
  os << "p=" << p_ << " f=" << f_ << " mod=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << modulus_[i];
  return os.str();
}

Field::Elem Field::add(Elem a, Elem b) const {
  if (f_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[a * q_ + b];
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

Field::Elem Field::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(q_));
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Field::Elem Field::pow(Elem a, std::int64_t e) const {
  if (a == 0) {
    if (e < 0) throw ArithmeticError("negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t m = static_cast<std::int64_t>(q_ - 1);
  std::int64_t l = (static_cast<std::int64_t>(log_[a]) * (e % m)) % m;
  if (l < 0) l += m;
  return exp_[l];
}

Field::Elem Field::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> out(f_);
  for (auto& d : out) {
    d = a % p_;
    a /= p_;
  }
  return out;
}

Field::Elem Field::from_digits(std::span<const std::uint32_t> digits) const {
  if (digits.size() != f_) throw PreconditionError("element needs exactly f coefficients");
  Elem r = 0, scale = 1;
  for (auto d : digits) {
    if (d >= p_) throw PreconditionError("coefficient out of range for F_p");
    r += d * scale;
    scale *= p_;
  }
  return r;
}

std::uint32_t Field::log(Elem a) const {
  if (a == 0) throw ArithmeticError("discrete log of zero");
  return log_[a];
}

std::string Field::format(Elem a, char sep) const {
  std::string out;
  const auto ds = digits(a);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(ds[i]);
  }
  return out;
}

Field::Elem Field::parse_elem(std::string_view text, char sep) const {
  std::vector<std::uint32_t> ds;
  for (auto part : text::split(text, sep)) ds.push_back(static_cast<std::uint32_t>(text::to_u64(part)));
  return from_digits(ds);
}

bool Field::same_as(const Field& other) const {
  return this == &other || (p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_);
}

}  // namespace isocay::ff
