#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/errors.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/ff/qbinomial.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/spectra/moments.hpp"
#include "isocay/suites/fixtures.hpp"
#include "isocay/suites/oracles.hpp"
#include "isocay/suites/suites.hpp"

namespace isocay::suites {

namespace {

namespace fx = fixtures;

// Collects sub-checks; a criterion passes when all of them do.
struct Checks {
  bool ok = true;
  std::vector<std::string> notes;
  void expect(bool cond, const std::string& what) {
    ok = ok && cond;
    notes.push_back((cond ? "ok: " : "FAILED: ") + what);
  }
  void info(const std::string& what) { notes.push_back(what); }
  std::string detail() const {
    std::string out;
    for (const auto& n : notes) out += (out.empty() ? "" : "; ") + n;
    return out;
  }
};

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string join(const std::vector<BigInt>& v) {
  std::string out;
  for (const auto& x : v) out += (out.empty() ? "" : ",") + x.str();
  return out;
}

ff::FqMatrix mat(const std::shared_ptr<const ff::Field>& F, const fx::Rows& rows) {
  return ff::FqMatrix::from_rows(F, rows);
}

forge::GenParams paper_params(std::uint32_t s = 1) { return forge::GenParams::make(3, 5, s, 1); }

// Omega-hat for (q, d) = (3, 5), shared by A4 and A6 within one process.
const forge::GenSet& paper_omega_hat() {
  static const forge::GenSet hat = forge::build_omega_hat(forge::build_omega(paper_params()));
  return hat;
}

CriterionResult a1() {
  Checks c;
  const auto p = paper_params();
  c.expect(p.E->modulus() == std::vector<ff::ExtField::BaseElem>{2, 2, 0, 0, 0, 1}, "modulus lambda^5 - lambda - 1");
  c.expect(p.alpha == 1 && p.gamma == 1, "alpha = 1, gamma = 1");
  c.expect(ff::frobenius_matrix(*p.E, 1) == mat(p.F, fx::kPhi1), "frobenius_matrix(E, 1) = printed phi_1");
  c.expect(ff::regular_rep(*p.E, p.E->tau()) == mat(p.F, fx::kTheta), "regular_rep(t) = printed theta");
  c.expect(forge::build_omega(p).gens[0].matrix == mat(p.F, fx::kB1), "b^(1) = printed");
  c.expect(forge::build_omega(paper_params(2)).gens[0].matrix == mat(p.F, fx::kB2), "b^(2) = printed");
  return {"A1", c.ok, c.detail(), 0};
}

CriterionResult a2() {
  Checks c;
  const auto p = paper_params();
  const auto& E = *p.E;
  const auto t = E.tau();
  c.expect(E.pow(t, fx::kOrderOfT) == E.one(), "t^121 = 1");
  const auto t11 = E.pow(t, 11);
  c.expect(t11 == E.from_digits(fx::kT11), "t^11 = t^3 - t^2 + t");
  c.expect(t11 != E.one(), "t^11 != 1");
  return {"A2", c.ok, c.detail(), 0};
}

CriterionResult a3() {
  Checks c;
  const auto b1 = forge::build_omega(paper_params(1)).gens[0].matrix;
  const auto b2 = forge::build_omega(paper_params(2)).gens[0].matrix;
  const auto b3 = forge::build_omega(paper_params(3)).gens[0].matrix;
  const auto cube1 = b1.pow(3);
  c.expect(cube1 == b2, "(b^(1))^3 = b^(2)");
  if (!(cube1 == b2)) c.info(std::string("(b^(1))^3 = b^(3): ") + (cube1 == b3 ? "yes" : "no"));
  c.expect(b2.pow(3) == b1, "(b^(2))^3 = b^(1)");

  // (b_j^(s))^q = b_j^(qs mod d) for every s prime to d and every j.
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> sets = {
      {5, 2}, {7, 2}, {9, 2}, {11, 2}, {5, 3}, {7, 3}, {8, 3}, {7, 4}, {3, 5}, {4, 5}, {3, 7}};
  std::size_t checked = 0, good = 0;
  for (auto [q, d] : sets) {
    const auto base = forge::GenParams::make(q, d, 1);
    std::map<std::uint32_t, forge::GenSet> omega;
    for (std::uint32_t s = 1; s < d; ++s)
      if (std::gcd(s, d) == 1) omega.emplace(s, forge::build_omega(base.with_s(s)));
    for (const auto& [s, om] : omega) {
      const auto& target = omega.at(static_cast<std::uint32_t>(q * s % d));
      bool all = true;
      for (std::size_t j = 0; j < om.gens.size(); ++j)
        all = all && om.gens[j].matrix.pow(static_cast<std::int64_t>(q)) == target.gens[j].matrix;
      ++checked;
      good += all;
    }
  }
  c.expect(good == checked, "(b^(s))^q = b^(qs mod d) for " + str(good) + "/" + str(checked) + " (q,d,s) cases");
  return {"A3", c.ok, c.detail(), 0};
}

CriterionResult a4() {
  Checks c;
  const auto omega = forge::build_omega(paper_params());
  const auto bar = forge::symmetrize(omega);
  const auto& hat = paper_omega_hat();
  c.expect(omega.size() == fx::kOmegaSize, "|Omega| = " + str(omega.size()));
  c.expect(bar.size() == fx::kOmegaBarSize, "|Omega-bar| = " + str(bar.size()));
  c.expect(hat.size() == fx::kOmegaHatSize, "|Omega-hat| = " + str(hat.size()));
  std::vector<std::uint64_t> per(5, 0);
  for (const auto& g : hat.gens) ++per.at(g.color);
  c.expect(per[0] == 0 && std::vector<std::uint64_t>(per.begin() + 1, per.end()) == fx::kColorClasses,
           "color classes " + str(per[1]) + "/" + str(per[2]) + "/" + str(per[3]) + "/" + str(per[4]));
  const auto& st = *hat.stats;
  c.expect(st.verified == st.candidates && st.candidates > 0,
           "all " + str(st.candidates) + " identity words verified as central scalars");
  c.info("rejected finite-quotient collisions: " + str(st.rejected));
  c.info("prefix class conflicts: " + str(st.prefix_conflicts));
  return {"A4", c.ok, c.detail(), 0};
}

CriterionResult a5() {
  Checks c;
  const auto p = paper_params();
  const auto omega = forge::build_omega(p);
  const auto* F = p.F.get();
  const cyc::BRat expected(cyc::BPoly::t(F), cyc::BPoly(F, {1, 1}));
  std::size_t good = 0;
  for (const auto& g : omega.gens) good += cyc::reduced_norm(*g.lift) == expected;
  c.expect(good == omega.size(), "reduced_norm = t/(1+t) for " + str(good) + "/" + str(omega.size()) + " conjugates");
  return {"A5", c.ok, c.detail(), 0};
}

CriterionResult a6() {
  Checks c;
  const auto& hat = paper_omega_hat();
  std::set<Basis> oracle;
  for (std::uint32_t k = 1; k < 5; ++k)
    for (auto& b : enumerate_subspaces(3, 5, k)) oracle.insert(std::move(b));
  std::set<Basis> attached;
  for (const auto& g : hat.gens) attached.insert(forge::attach_subspace(g, hat.params).basis);
  c.expect(oracle.size() == fx::kOmegaHatSize, "oracle enumerates " + str(oracle.size()) + " proper subspaces");
  c.expect(attached.size() == hat.size(), "attach_subspace injective (" + str(attached.size()) + " distinct)");
  c.expect(attached == oracle, "image equals the set of all proper nonzero subspaces of F_3^5");
  return {"A6", c.ok, c.detail(), 0};
}

std::vector<std::vector<std::uint32_t>> undirected(const cayley::CayleyGraph& g) { return cayley::undirected_neighbors(g); }

bool connected(const cayley::CayleyGraph& g) {
  const auto nb = undirected(g);
  std::vector<char> seen(g.n(), 0);
  std::vector<std::uint32_t> st{0};
  seen[0] = 1;
  std::size_t cnt = 1;
  while (!st.empty()) {
    const auto v = st.back();
    st.pop_back();
    for (auto w : nb[v])
      if (!seen[w]) seen[w] = 1, ++cnt, st.push_back(w);
  }
  return cnt == g.n();
}

CriterionResult a7() {
  Checks c;
  const auto p = forge::GenParams::make(5, 3, 1);
  c.info("alpha = " + p.F->format(p.alpha));
  const auto bar = forge::symmetrize(forge::build_omega(p));
  const auto g = cayley::bfs_build(bar, 1'000'000);
  const BigInt pgl = pgl_order_oracle(5, 3);
  c.expect(BigInt(g.n()) == pgl, "|closure| = " + str(g.n()) + " = |PGL_3(F_5)| = " + pgl.str());
  const BigInt predicted = psl_order_oracle(5, 3) * forge::expected_index(p);
  c.expect(BigInt(g.n()) == predicted, "consistent with |PSL_3(F_5)| * expected_index = " + predicted.str());
  c.expect(g.r() == 62, "62 generator columns");
  c.expect(cayley::is_regular_symmetric(g), "62-regular with symmetric adjacency");
  c.expect(connected(g), "connected");
  return {"A7", c.ok, c.detail(), 0};
}

CriterionResult a8() {
  Checks c;
  std::map<std::uint32_t, std::vector<BigInt>> N;
  for (std::uint32_t s : {1u, 2u, 3u}) {
    const auto bar = forge::symmetrize(forge::build_omega(paper_params(s)));
    N[s] = spectra::ball_mitm_moments(*bar.params.pgl, bar.projs(), 6, 8ull << 30);
  }
  c.info("N_0..N_6 = " + join(N[1]));
  c.expect(N[1][0] == 1 && N[1][2] == 242, "N_0 = 1, N_2 = 242");
  c.expect(N[1] == N[2], "N_k(sigma) = N_k(sigma^2) for k <= 6");
  c.info(std::string("cubed set (sigma^3): ") + (N[3] == N[1] ? "equal" : "different"));
  c.info("evidence is partial: power sums up to k = 6 only");
  return {"A8", c.ok, c.detail(), 0};
}

CriterionResult a9() {
  Checks c;
  std::vector<std::vector<BigInt>> dp, mitm;
  for (std::uint32_t s : {1u, 2u}) {
    const auto bar = forge::symmetrize(forge::build_omega(forge::GenParams::make(5, 3, s)));
    const auto g = cayley::bfs_build(bar, 1'000'000);
    std::vector<std::uint32_t> cols(g.r());
    std::iota(cols.begin(), cols.end(), 0u);
    dp.push_back(spectra::group_dp_moments(g, 10, cols));
    mitm.push_back(spectra::ball_mitm_moments(*bar.params.pgl, bar.projs(), 8, 4ull << 30));
  }
  c.info("N_0..N_10 = " + join(dp[0]));
  c.expect(dp[0] == dp[1], "group-dp N_k(sigma) = N_k(sigma^2) for k <= 10");
  bool agree = true;
  for (std::size_t i = 0; i < 2; ++i)
    agree = agree && std::equal(mitm[i].begin(), mitm[i].end(), dp[i].begin());
  c.expect(agree, "ball-mitm = group-dp for k <= 8 (both sets)");
  return {"A9", c.ok, c.detail(), 0};
}

CriterionResult a10() {
  Checks c;
  const auto props = run_properties();
  std::size_t good = 0;
  for (const auto& p : props) {
    good += p.pass;
    if (!p.pass) c.expect(false, p.name + " (" + p.detail + ")");
  }
  c.expect(good == props.size(), str(good) + "/" + str(props.size()) + " property checks");
  return {"A10", c.ok, c.detail(), 0};
}

CriterionResult a11() {
  Checks c;
  const auto m35 = forge::family_order(3, 5), m37 = forge::family_order(3, 7);
  c.expect(m35 == fx::kFamily35 && family_order_oracle(3, 5) == m35, "m(3,5) = " + str(m35));
  c.expect(m37 == fx::kFamily37 && family_order_oracle(3, 7) == m37, "m(3,7) = " + str(m37));
  std::size_t agree = 0, total = 0;
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13})
    for (std::uint32_t d = 2; d <= 13; ++d)
      if (std::gcd<std::uint64_t>(q, d) == 1) {
        ++total;
        agree += forge::family_order(q, d) == family_order_oracle(q, d);
      }
  c.expect(agree == total, "brute-force agreement on " + str(agree) + "/" + str(total) + " (q,d) pairs");
  return {"A11", c.ok, c.detail(), 0};
}

using Fn = CriterionResult (*)();
const std::map<std::string, Fn, std::less<>>& table() {
  static const std::map<std::string, Fn, std::less<>> t = {{"A1", a1}, {"A2", a2}, {"A3", a3}, {"A4", a4},
                                                           {"A5", a5}, {"A6", a6}, {"A7", a7}, {"A8", a8},
                                                           {"A9", a9}, {"A10", a10}, {"A11", a11}};
  return t;
}

}  // namespace

const std::vector<std::string>& criterion_ids() {
  static const std::vector<std::string> ids = {"A1", "A2", "A3", "A4", "A5", "A6", "A7", "A8", "A9", "A10", "A11"};
  return ids;
}

CriterionResult run_criterion(std::string_view id) {
  const auto it = table().find(id);
  if (it == table().end()) throw PreconditionError("unknown criterion '" + std::string(id) + "'");
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = it->second();
  } catch (const Error& e) {
    r = {std::string(id), false, std::string("error: ") + e.what(), 0};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.seconds << "s " << r.detail;
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"paper-d5q3", "small-d3q5", "moments-d5q3", "properties", "family"};
  return names;
}

std::vector<std::string> suite_criteria(std::string_view suite) {
  if (suite == "paper-d5q3") return {"A1", "A2", "A3", "A4", "A5", "A6"};
  if (suite == "small-d3q5") return {"A7", "A9"};
  if (suite == "moments-d5q3") return {"A8"};
  if (suite == "properties") return {"A10"};
  if (suite == "family") return {"A11"};
  throw PreconditionError("unknown suite '" + std::string(suite) + "'");
}

}  // namespace isocay::suites
