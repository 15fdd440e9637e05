#pragma once

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "isocay/cyc/cyclic_algebra.hpp"

namespace isocay::cyc {

/// `num=<c0;c1;...> den=<c0;...>`, each coefficient in ExtField::format form.
/// The zero polynomial prints as an empty list.
std::string format_ratfunc(const ERat& a);
ERat parse_ratfunc(std::string_view line, const ff::ExtField& E);

std::string format_poly(const EPoly& p);
EPoly parse_poly(std::string_view text, const ff::ExtField& E);

/// `version=1 kind=cycelem s=<s> <extension descriptor>` then d RatFunc lines.
void write_cyc_elem(std::ostream& os, const CycElem& a);
CycElem read_cyc_elem(std::istream& is);

/// `version=1 kind=globalmat n=<n> <extension descriptor>` then n*n RatFunc
/// lines, row-major. The extension field is returned through `field`.
void write_global_mat(std::ostream& os, const GlobalMat& m);
GlobalMat read_global_mat(std::istream& is, std::shared_ptr<const ff::ExtField>& field);

}  // namespace isocay::cyc
