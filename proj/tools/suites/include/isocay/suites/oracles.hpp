#pragma once

#include <cstdint>
#include <vector>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/bigint.hpp"

// Independent reference computations. None of these call into the library
// code they are used to check.
namespace isocay::suites {

/// (q^d - 1)(q^d - q)...(q^d - q^{d-1}) / (q - 1), by direct products.
BigInt pgl_order_oracle(std::uint64_t q, std::uint32_t d);
/// |PGL_d(F_q)| / gcd(d, q - 1).
BigInt psl_order_oracle(std::uint64_t q, std::uint32_t d);

/// All k-dimensional subspaces of F_p^d (p prime) as reduced row-echelon
/// bases, generated from pivot patterns and free entries.
using Basis = std::vector<std::vector<std::uint32_t>>;
std::vector<Basis> enumerate_subspaces(std::uint32_t p, std::uint32_t d, std::uint32_t k);

/// Number of distinct cosets {q^i, -q^i} mod d, i >= 0.
std::uint32_t family_order_oracle(std::uint64_t q, std::uint32_t d);

/// Triangles of the undirected simple graph: sum over edges of common
/// neighbor counts, divided by 3.
std::uint64_t triangle_oracle(const cayley::CayleyGraph& g);

/// Eigenvalues of the circulant graph on Z/n with symmetric connection set
/// S: sum_{s in S} cos(2 pi j s / n), sorted descending.
std::vector<double> circulant_spectrum_oracle(std::uint32_t n, const std::vector<std::uint32_t>& S);
/// The same circulant as a CayleyGraph (vertex keys are the residues).
cayley::CayleyGraph circulant_graph(std::uint32_t n, const std::vector<std::uint32_t>& S);

}  // namespace isocay::suites
