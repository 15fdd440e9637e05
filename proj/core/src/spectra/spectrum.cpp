#include "isocay/spectra/spectrum.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/common/text.hpp"

namespace isocay::spectra {

namespace {

double tolerance(const SpectrumReport& s) { return 1e-8 * static_cast<double>(std::max<std::uint64_t>(s.r, 1)); }

}  // namespace

SpectrumReport dense_spectrum(const cayley::CayleyGraph& full, const std::optional<std::set<std::uint32_t>>& colors,
                              std::size_t cap) {
  const cayley::CayleyGraph g = colors ? cayley::colored_subgraph(full, *colors) : full;
  if (g.n() > cap)
    throw ResourceError("dense spectrum needs n <= " + std::to_string(cap) + ", graph has " + std::to_string(g.n()));
  if (!cayley::is_regular_symmetric(g))
    throw PreconditionError("adjacency relation is not symmetric; compare colored operators by moments instead");
  const auto n = static_cast<Eigen::Index>(g.n());
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t v = 0; v < g.n(); ++v)
    for (std::size_t c = 0; c < g.r(); ++c) A(static_cast<Eigen::Index>(v), g.neighbor(v, c)) += 1.0;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success) throw VerificationError("symmetric eigensolver did not converge");

  SpectrumReport out;
  out.n = g.n();
  out.r = g.r();
  const double tol = tolerance(out);
  // Re-verify each pair against the sparse operator.
  const auto& V = es.eigenvectors();
  const auto& L = es.eigenvalues();
  Eigen::VectorXd Av(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    Av.setZero();
    for (std::size_t v = 0; v < g.n(); ++v) {
      double acc = 0;
      for (std::size_t c = 0; c < g.r(); ++c) acc += V(g.neighbor(v, c), i);
      Av(static_cast<Eigen::Index>(v)) = acc;
    }
    const double res = (Av - L(i) * V.col(i)).norm();
    out.residual = std::max(out.residual, res);
    if (res > tol)
      throw VerificationError("eigenpair " + std::to_string(i) + " has residual " + std::to_string(res));
  }
  out.values.assign(L.data(), L.data() + n);
  std::sort(out.values.begin(), out.values.end(), std::greater<>());
  return out;
}

std::vector<std::pair<double, std::size_t>> grouped(const SpectrumReport& s) {
  const double tol = tolerance(s);
  std::vector<std::pair<double, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.values.size()) {
    std::size_t j = i + 1;
    double sum = s.values[i];
    while (j < s.values.size() && s.values[j - 1] - s.values[j] <= tol) sum += s.values[j++];
    out.emplace_back(sum / static_cast<double>(j - i), j - i);
    i = j;
  }
  return out;
}

double power_sum(const SpectrumReport& s, std::uint32_t k) {
  long double acc = 0;
  for (double x : s.values) acc += std::pow(static_cast<long double>(x), static_cast<int>(k));
  return static_cast<double>(acc);
}

void write_spectrum(std::ostream& os, const SpectrumReport& s) {
  std::ostringstream res;
  res << std::setprecision(3) << std::scientific << s.residual;
  os << "version=1 n=" << s.n << " r=" << s.r << " method=" << s.method << " residual=" << res.str() << '\n';
  for (const auto& [lambda, mult] : grouped(s)) {
    std::ostringstream line;
    // Round tiny values so that -0 and 1e-15 print as 0.
    const double shown = std::abs(lambda) < 1e-9 ? 0.0 : lambda;
    line << std::setprecision(12) << shown << ' ' << mult;
    os << line.str() << '\n';
  }
}

SpectrumReport read_spectrum(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty spectrum file");
  const auto kv = text::parse_kv(line);
  if (text::require(kv, "version") != "1") throw FormatError("unsupported spectrum file version");
  SpectrumReport s;
  s.n = text::to_u64(text::require(kv, "n"));
  s.r = text::to_u64(text::require(kv, "r"));
  s.method = text::require(kv, "method");
  try {
    s.residual = std::stod(text::require(kv, "residual"));
  } catch (const std::logic_error&) {
    throw FormatError("bad residual");
  }
  while (std::getline(is, line)) {
    const auto tok = text::tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw FormatError("bad spectrum line: " + line);
    double lambda = 0;
    try {
      std::size_t used = 0;
      const std::string t(tok[0]);
      lambda = std::stod(t, &used);
      if (used != t.size()) throw FormatError("bad eigenvalue: " + t);
    } catch (const std::logic_error&) {
      throw FormatError("bad eigenvalue in: " + line);
    }
    const auto mult = text::to_u64(tok[1]);
    s.values.insert(s.values.end(), mult, lambda);
  }
  if (s.values.size() != s.n) throw FormatError("spectrum multiplicities do not add up to n");
  if (!std::is_sorted(s.values.begin(), s.values.end(), std::greater<>()))
    throw FormatError("spectrum not in descending order");
  return s;
}

}  // namespace isocay::spectra
