#include <algorithm>

#include "isocay/forge/genset.hpp"

namespace isocay::forge {

// Over F_q((t)) the algebra splits F_q-rationally: c -> regular_rep(c)
// coefficient-wise in t, z -> w * frobenius_matrix(E, s) with w^d = 1+t and
// w = 1 mod t. After dividing by t^{nu_min} the reduction mod t is
// sum over the minimal-valuation coefficients of R(lead c_j) Phi_s^j.
Subspace attach_subspace(const Generator& g, const GenParams& p) {
  if (!g.lift) throw PreconditionError("attach_subspace needs a global lift");
  const cyc::CycElem& a = *g.lift;
  const std::uint32_t d = p.d;
  const auto& E = *p.E;
  int vmin = ff::kInfiniteValuation;
  for (const auto& c : a.coeffs()) vmin = std::min(vmin, c.leading_at_zero().first);
  if (vmin == ff::kInfiniteValuation) throw PreconditionError("attach_subspace of zero");
  const int vdet = ff::valuation(cyc::reduced_norm(a), ff::Place<ff::Field>::zero());
  const int index = vdet - static_cast<int>(d) * vmin;
  if (index == 0) throw PreconditionError("color 0 element (a homothety) has no attached proper subspace");
  if (index < 0 || index >= static_cast<int>(d))
    throw VerificationError("normalized lift is not a building neighbor: index " + std::to_string(index));

  const ff::FqMatrix phi = ff::frobenius_matrix(E, p.s);
  ff::FqMatrix m(p.F, d);
  ff::FqMatrix phi_j = ff::FqMatrix::identity(p.F, d);
  for (std::uint32_t j = 0; j < d; ++j) {
    const auto [v, lead] = a.coeff(j).leading_at_zero();
    if (v == vmin) m = m + ff::regular_rep(E, lead) * phi_j;
    phi_j = phi_j * phi;
  }
  Subspace out{ff::column_space_basis(m)};
  if (out.dim() != d - static_cast<std::uint32_t>(index))
    throw VerificationError("reduction mod t has rank " + std::to_string(out.dim()) + ", expected " +
                            std::to_string(d - index));
  return out;
}

}  // namespace isocay::forge
