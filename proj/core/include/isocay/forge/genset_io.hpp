#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "isocay/forge/genset.hpp"

namespace isocay::forge {

/// Header `version=1 kind=<omega|omegabar|omegahat> q= d= s= alpha= p= f=
/// bmod= mod= u=`, then one line per generator
/// `idx= j= color= inv= mat=<row-major entries joined by ';'>` with an
/// optional ` word=<i,i,...>` for omegahat.
void write_genset(std::ostream& os, const GenSet& g);
std::string genset_to_string(const GenSet& g);
/// FNV-1a of the text serialization.
std::uint64_t genset_fingerprint(const GenSet& g);

/// Rebuilds parameters and global lifts and checks every stored matrix
/// against the specialization of its lift.
GenSet read_genset(std::istream& is);

}  // namespace isocay::forge
