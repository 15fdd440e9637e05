#include "isocay/spectra/compare.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/common/hash.hpp"

namespace isocay::spectra {

const char* compare_mode_name(CompareMode m) {
  switch (m) {
    case CompareMode::Moments: return "moments";
    case CompareMode::Spectrum: return "spectrum";
    case CompareMode::Wl: return "wl";
    case CompareMode::Iso: return "iso";
  }
  return "?";
}

CompareMode parse_compare_mode(std::string_view s) {
  if (s == "moments") return CompareMode::Moments;
  if (s == "spectrum") return CompareMode::Spectrum;
  if (s == "wl") return CompareMode::Wl;
  if (s == "iso") return CompareMode::Iso;
  throw PreconditionError("unknown compare mode '" + std::string(s) + "' (moments, spectrum, wl, iso)");
}

std::string ComparisonReport::to_text() const {
  std::ostringstream os;
  os << "mode=" << mode << '\n';
  for (const auto& [k, v] : fields) os << k << '=' << v << '\n';
  os << "verdict=" << verdict << '\n';
  return os.str();
}

ComparisonReport compare_moments(const MomentSeq& a, const MomentSeq& b) {
  if (a.K() != b.K()) throw PreconditionError("moment sequences have different K");
  ComparisonReport rep;
  rep.mode = "moments";
  rep.add("K", std::to_string(a.K()));
  rep.add("genset_a", hex64(a.genset_hash));
  rep.add("genset_b", hex64(b.genset_hash));
  rep.add("colors_a", a.colors);
  rep.add("colors_b", b.colors);
  std::string first_diff = "none";
  for (std::size_t k = 0; k < a.N.size(); ++k) {
    const bool eq = a.N[k] == b.N[k];
    rep.add("k" + std::to_string(k), eq ? "equal" : a.N[k].str() + "!=" + b.N[k].str());
    if (!eq && first_diff == "none") first_diff = std::to_string(k);
  }
  rep.add("first_difference", first_diff);
  rep.add("evidence", "partial: power sums up to K only");
  rep.verdict = first_diff == "none" ? "equal" : "different";
  return rep;
}

ComparisonReport compare_spectra(const SpectrumReport& a, const SpectrumReport& b) {
  ComparisonReport rep;
  rep.mode = "spectrum";
  rep.add("n", std::to_string(a.n) + (a.n == b.n ? "" : "!=" + std::to_string(b.n)));
  rep.add("r", std::to_string(a.r) + (a.r == b.r ? "" : "!=" + std::to_string(b.r)));
  if (a.n != b.n || a.r != b.r || a.values.size() != b.values.size()) {
    rep.add("reason", "orders or degrees differ");
    rep.verdict = "different";
    return rep;
  }
  const double tol = 1e-8 * static_cast<double>(std::max<std::uint64_t>(a.r, 1));
  auto x = a.values, y = b.values;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  double worst = 0;
  for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
  std::ostringstream w;
  w << worst;
  rep.add("max_deviation", w.str());
  std::ostringstream t;
  t << tol;
  rep.add("tolerance", t.str());
  rep.verdict = worst <= tol ? "equal" : "different";
  return rep;
}

ComparisonReport compare_wl(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b) {
  ComparisonReport rep;
  rep.mode = "wl";
  if (a.n() != b.n()) {
    rep.add("reason", "orders differ");
    rep.verdict = "non-isomorphic";
    return rep;
  }
  const auto ca = wl_certificate(a), cb = wl_certificate(b);
  rep.add("rounds_a", std::to_string(ca.rounds));
  rep.add("rounds_b", std::to_string(cb.rounds));
  rep.add("classes_a", std::to_string(ca.histogram.size()));
  rep.add("classes_b", std::to_string(cb.histogram.size()));
  rep.verdict = ca == cb ? "possibly-isomorphic" : "non-isomorphic";
  return rep;
}

ComparisonReport compare_iso(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b, const IsoOptions& opt) {
  ComparisonReport rep;
  rep.mode = "iso";
  const auto res = find_isomorphism(a, b, opt);
  rep.add("nodes", std::to_string(res.nodes));
  std::ostringstream s;
  s << res.seconds;
  rep.add("seconds", s.str());
  if (res.verdict == IsoVerdict::Isomorphic) {
    std::string head;
    for (std::size_t i = 0; i < std::min<std::size_t>(8, res.witness.size()); ++i)
      head += (i ? "," : "") + std::to_string(res.witness[i]);
    rep.add("witness_prefix", head);
    rep.add("witness_checked", "1");
  }
  rep.verdict = iso_verdict_name(res.verdict);
  return rep;
}

}  // namespace isocay::spectra
