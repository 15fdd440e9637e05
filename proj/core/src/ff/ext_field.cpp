#include <sstream>

#include "isocay/common/text.hpp"
#include "isocay/ff/field.hpp"

namespace isocay::ff {
namespace {

using BasePoly = std::vector<Field::Elem>;

void trim(BasePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

BasePoly base_mod(BasePoly a, const BasePoly& m, const Field& F) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const auto lead_inv = F.inv(m.back());
  while (a.size() > dm) {
    const auto c = F.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, m[i]));
    trim(a);
  }
  return a;
}

bool base_irreducible(const BasePoly& m, const Field& F) {
  const std::size_t deg = m.size() - 1;
  if (deg <= 1) return deg == 1;
  const std::uint64_t q = F.order();
  for (std::size_t k = 1; k <= deg / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= q;
    for (std::uint64_t code = 0; code < count; ++code) {
      BasePoly cand(k + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i) {
        cand[i] = static_cast<Field::Elem>(c % q);
        c /= q;
      }
      cand[k] = 1;
      if (base_mod(m, cand, F).empty()) return false;
    }
  }
  return true;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

constexpr std::uint64_t kTableLimit = 1u << 21;

}  // namespace

ExtField::ExtField(std::shared_ptr<const Field> base, std::uint32_t d, std::vector<BaseElem> modulus)
    : base_(std::move(base)), d_(d), q_(base_->order()), order_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < d_; ++i) order_ *= q_;
  if (order_ > kTableLimit) return;

  // Primitive element search, then exp/log tables.
  const auto factors = prime_factors(order_ - 1);
  const auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e > 0) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  Elem gen = 0;
  for (Elem c = (order_ == 2 ? 1 : 2); c < order_; ++c) {
    bool ok = true;
    for (auto l : factors) {
      if (slow_pow(c, (order_ - 1) / l) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = c;
      break;
    }
  }
  exp_.resize(2 * (order_ - 1));
  log_.assign(order_, 0);
  Elem cur = 1;
  for (std::uint64_t e = 0; e < order_ - 1; ++e) {
    exp_[e] = static_cast<std::uint32_t>(cur);
    exp_[e + order_ - 1] = static_cast<std::uint32_t>(cur);
    log_[cur] = static_cast<std::uint32_t>(e);
    cur = mul_slow(cur, gen);
  }
  tabled_ = true;
}

std::shared_ptr<const ExtField> ExtField::create(std::shared_ptr<const Field> base, std::uint32_t d,
                                                 std::vector<BaseElem> modulus) {
  if (!base) throw PreconditionError("extension needs a base field");
  if (d == 0) throw PreconditionError("extension degree must be >= 1");
  long double approx = 1;
  for (std::uint32_t i = 0; i < d; ++i) approx *= static_cast<long double>(base->order());
  if (approx > 9.2e18L) throw PreconditionError("extension order exceeds 2^63");
  if (modulus.size() != d + 1 || modulus.back() != 1)
    throw PreconditionError("extension modulus must be monic of degree d");
  for (auto c : modulus)
    if (c >= base->order()) throw PreconditionError("extension modulus coefficient out of range");
  if (!base_irreducible(modulus, *base)) throw PreconditionError("extension modulus is reducible over the base field");
  return std::shared_ptr<const ExtField>(new ExtField(std::move(base), d, std::move(modulus)));
}

std::shared_ptr<const ExtField> ExtField::standard(std::shared_ptr<const Field> base, std::uint32_t d) {
  if (!base) throw PreconditionError("extension needs a base field");
  const std::uint64_t q = base->order();
  if (q == 3 && d == 5) {
    // lambda^5 - lambda - 1
    return create(base, d, {base->from_int(-1), base->from_int(-1), 0, 0, 0, 1});
  }
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= q;
  for (std::uint64_t code = 0; code < count; ++code) {
    BasePoly m(d + 1, 0);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      m[i] = static_cast<BaseElem>(c % q);
      c /= q;
    }
    m[d] = 1;
    if (base_irreducible(m, *base)) return create(base, d, std::move(m));
  }
  throw VerificationError("no irreducible polynomial found");  // unreachable
}

std::shared_ptr<const ExtField> ExtField::parse(std::string_view descriptor) {
  auto base = Field::parse(descriptor);
  const auto kv = text::parse_kv(descriptor);
  const auto d = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "d")));
  std::vector<BaseElem> mod;
  for (auto part : text::split(text::require(kv, "emod"), ',')) mod.push_back(base->parse_elem(part, ':'));
  return create(std::move(base), d, std::move(mod));
}

std::string ExtField::descriptor() const {
  std::ostringstream os;
  os << base_->descriptor() << " d=" << d_ << " emod=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) os << (i ? "," : "") << base_->format(modulus_[i], ':');
  return os.str();
}

ExtField::Elem ExtField::add(Elem a, Elem b) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_ && (a | b); ++i) {
    r += base_->add(static_cast<BaseElem>(a % q_), static_cast<BaseElem>(b % q_)) * scale;
    a /= q_;
    b /= q_;
    scale *= q_;
  }
  return r;
}

ExtField::Elem ExtField::neg(Elem a) const {
  Elem r = 0, scale = 1;
  for (std::uint32_t i = 0; i < d_ && a; ++i) {
    r += base_->neg(static_cast<BaseElem>(a % q_)) * scale;
    a /= q_;
    scale *= q_;
  }
  return r;
}

ExtField::Elem ExtField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (tabled_) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

ExtField::Elem ExtField::mul_slow(Elem a, Elem b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  BasePoly r(2 * d_ - 1, 0);
  for (std::uint32_t i = 0; i < d_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < d_; ++j) r[i + j] = base_->add(r[i + j], base_->mul(da[i], db[j]));
  }
  r = base_mod(std::move(r), modulus_, *base_);
  r.resize(d_, 0);
  return from_digits(r);
}

ExtField::Elem ExtField::inv(Elem a) const {
  if (a == 0) throw ArithmeticError("inverse of zero in F_" + std::to_string(order_));
  if (tabled_) return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
  return pow(a, order_ - 2);
}

ExtField::Elem ExtField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (tabled_) return exp_[mulmod_u64(log_[a], e % (order_ - 1), order_ - 1)];
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

ExtField::Elem ExtField::frobenius(Elem a, std::int64_t i) const {
  std::int64_t k = i % static_cast<std::int64_t>(d_);
  if (k < 0) k += d_;
  if (k == 0 || a == 0) return a;
  if (tabled_) {
    std::uint64_t e = 1;
    for (std::int64_t j = 0; j < k; ++j) e = mulmod_u64(e, q_, order_ - 1);
    return exp_[mulmod_u64(log_[a], e, order_ - 1)];
  }
  for (std::int64_t j = 0; j < k; ++j) a = pow(a, q_);
  return a;
}

ExtField::BaseElem ExtField::to_base(Elem a) const {
  if (!in_base(a)) throw PreconditionError("element does not lie in the base field");
  return static_cast<BaseElem>(a);
}

std::vector<ExtField::BaseElem> ExtField::digits(Elem a) const {
  std::vector<BaseElem> out(d_);
  for (auto& c : out) {
    c = static_cast<BaseElem>(a % q_);
    a /= q_;
  }
  return out;
}

ExtField::Elem ExtField::from_digits(std::span<const BaseElem> ds) const {
  if (ds.size() != d_) throw PreconditionError("extension element needs exactly d coordinates");
  Elem r = 0, scale = 1;
  for (auto c : ds) {
    if (c >= q_) throw PreconditionError("coordinate out of range for the base field");
    r += c * scale;
    scale *= q_;
  }
  return r;
}

ExtField::BaseElem ExtField::root_of_linear() const { return base_->neg(modulus_[0]); }

std::string ExtField::format(Elem a) const {
  std::string out;
  const auto ds = digits(a);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ',';
    out += base_->format(ds[i], ':');
  }
  return out;
}

ExtField::Elem ExtField::parse_elem(std::string_view text) const {
  std::vector<BaseElem> ds;
  for (auto part : text::split(text, ',')) ds.push_back(base_->parse_elem(part, ':'));
  return from_digits(ds);
}

bool ExtField::same_as(const ExtField& other) const {
  return this == &other || (d_ == other.d_ && modulus_ == other.modulus_ && base_->same_as(*other.base_));
}

}  // namespace isocay::ff
