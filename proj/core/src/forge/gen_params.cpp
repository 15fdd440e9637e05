#include "isocay/forge/gen_params.hpp"

#include <numeric>
#include <sstream>

#include "isocay/common/text.hpp"

namespace isocay::forge {

namespace {
bool admissible(const ff::Field& F, ff::Field::Elem a, std::uint32_t d) {
  try {
    cyc::check_alpha(F, a, d);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}
}  // namespace

ff::Field::Elem default_alpha(const ff::Field& F, std::uint32_t d) {
  if (F.order() == 3 && d == 5) return 1;
  const auto m2 = F.from_int(-2);
  if (admissible(F, m2, d)) return m2;
  for (ff::Field::Elem a = 1; a < F.order(); ++a)
    if (admissible(F, a, d)) return a;
  throw PreconditionError("no admissible alpha exists for this (q, d)");
}

ff::Field::Elem parse_alpha(const ff::Field& F, std::string_view s) {
  if (s.find(',') != std::string_view::npos || s.find(':') != std::string_view::npos)
    return F.parse_elem(s, s.find(',') != std::string_view::npos ? ',' : ':');
  return F.from_int(text::to_i64(s));
}

GenParams GenParams::make(std::uint64_t q, std::uint32_t d, std::uint32_t s, std::optional<ff::Field::Elem> alpha,
                          std::shared_ptr<const ff::ExtField> E, std::optional<ff::ExtField::Elem> u) {
  if (q == 2) throw PreconditionError("q = 2 needs a congruence ideal of degree e > 1, which is not supported");
  if (d < 2) throw PreconditionError("d must be at least 2");
  GenParams p;
  p.q = q;
  p.d = d;
  p.s = s;
  if (E) {
    if (E->base().order() != q || E->degree() != d) throw PreconditionError("extension field does not match (q, d)");
    p.F = E->base_ptr();
    p.E = std::move(E);
  } else {
    p.F = ff::Field::of_order(q);
    p.E = ff::ExtField::standard(p.F, d);
  }
  p.alg = cyc::CycAlg::create(p.E, s);
  p.pgl = cayley::PglContext::create(p.F, d);
  p.alpha = alpha ? *alpha : default_alpha(*p.F, d);
  cyc::check_alpha(*p.F, p.alpha, d);
  p.gamma = cyc::gamma_of(*p.F, p.alpha, d);
  p.u = u ? *u : ff::mult_generator(*p.E);
  if (!ff::generates_quotient(*p.E, p.u)) throw PreconditionError("u does not generate F_{q^d}^x / F_q^x");
  p.n = (p.E->order() - 1) / (q - 1);
  if (q % 2 == 0 || d % 2 == 0 || std::gcd<std::uint64_t>(q, d) != 1)
    p.warnings.push_back("q and d are not odd and coprime");
  if (q <= 4ull * d * d + 1) p.warnings.push_back("q <= 4d^2+1: the quotient may be too small for the construction");
  return p;
}

GenParams GenParams::with_s(std::uint32_t s2) const {
  GenParams p = *this;
  p.s = s2;
  p.alg = cyc::CycAlg::create(E, s2);
  return p;
}

std::string GenParams::describe() const {
  std::ostringstream os;
  os << "q=" << q << " d=" << d << " s=" << s << " alpha=" << F->format(alpha) << " gamma=" << F->format(gamma)
     << " n=" << n;
  return os.str();
}

}  // namespace isocay::forge
