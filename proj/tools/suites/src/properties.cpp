#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/errors.hpp"
#include "isocay/common/parallel.hpp"
#include "isocay/cyc/serialize.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/ff/qbinomial.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/forge/genset_io.hpp"
#include "isocay/spectra/compare.hpp"
#include "isocay/suites/oracles.hpp"
#include "isocay/suites/suites.hpp"

namespace isocay::suites {

namespace {

using Rng = std::mt19937_64;

// Thrown by require(); turns into a failing property with its message.
struct PropertyFailure {
  std::string what;
};

void require(bool cond, const std::string& what) {
  if (!cond) throw PropertyFailure{what};
}

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::uint64_t uniform(Rng& rng, std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng); }

std::vector<ff::Field::Elem> matvec(const ff::FqMatrix& m, const std::vector<ff::Field::Elem>& v) {
  const auto& F = *m.field();
  std::vector<ff::Field::Elem> out(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) out[r] = F.add(out[r], F.mul(m.at(r, c), v[c]));
  return out;
}

// Small test groups are rebuilt on demand and cached per process.
struct SmallCase {
  forge::GenSet bar;
  cayley::CayleyGraph graph;
};
const SmallCase& small_case(std::uint64_t q, std::uint32_t d) {
  static std::map<std::pair<std::uint64_t, std::uint32_t>, SmallCase> cache;
  auto it = cache.find({q, d});
  if (it == cache.end()) {
    auto bar = forge::symmetrize(forge::build_omega(forge::GenParams::make(q, d, 1)));
    auto g = cayley::bfs_build(bar, 100'000);
    it = cache.emplace(std::make_pair(q, d), SmallCase{std::move(bar), std::move(g)}).first;
  }
  return it->second;
}

std::vector<std::uint32_t> all_columns(const cayley::CayleyGraph& g) {
  std::vector<std::uint32_t> c(g.r());
  std::iota(c.begin(), c.end(), 0u);
  return c;
}

// ---------------------------------------------------------------- ff

std::string frobenius_relations(Rng& rng) {
  const std::vector<std::pair<std::uint64_t, std::uint32_t>> shapes = {{3, 2}, {3, 5}, {4, 3}, {5, 3}, {7, 2},
                                                                       {9, 2}, {25, 2}, {3, 7}, {2, 5}, {8, 3}};
  std::size_t cases = 0;
  for (int iter = 0; iter < 120; ++iter) {
    const auto [q, d] = shapes[uniform(rng, shapes.size())];
    const auto E = ff::ExtField::standard(ff::Field::of_order(q), d);
    const auto a = uniform(rng, E->order()), b = uniform(rng, E->order());
    const auto fa = E->frobenius(a, 1), fb = E->frobenius(b, 1);
    const std::string where = " (q=" + str(q) + " d=" + str(d) + " a=" + str(a) + " b=" + str(b) + ")";
    require(E->frobenius(E->add(a, b), 1) == E->add(fa, fb), "Frobenius additive" + where);
    require(E->frobenius(E->mul(a, b), 1) == E->mul(fa, fb), "Frobenius multiplicative" + where);
    require(fa == E->pow(a, q), "Frobenius is x^q" + where);
    require(E->frobenius(a, d) == a, "Frobenius^d = id" + where);
    if (a != 0) {
      require(E->pow(a, E->order() - 1) == E->one(), "a^(Q-1) = 1" + where);
      require(E->mul(a, E->inv(a)) == E->one(), "a a^-1 = 1" + where);
    }
    const auto i = static_cast<std::int64_t>(uniform(rng, d)), j = static_cast<std::int64_t>(uniform(rng, d));
    require(ff::frobenius_matrix(*E, i) * ff::frobenius_matrix(*E, j) == ff::frobenius_matrix(*E, i + j),
            "Phi_i Phi_j = Phi_{i+j}" + where);
    require(matvec(ff::frobenius_matrix(*E, 1), E->digits(a)) == E->digits(fa), "Phi_1 acts as Frobenius" + where);
    require(ff::regular_rep(*E, E->mul(a, b)) == ff::regular_rep(*E, a) * ff::regular_rep(*E, b),
            "regular_rep multiplicative" + where);
    require(matvec(ff::regular_rep(*E, a), E->digits(b)) == E->digits(E->mul(a, b)), "regular_rep acts as a*" + where);
    const auto phi = ff::frobenius_matrix(*E, 1);
    require(phi * ff::regular_rep(*E, a) * phi.inverse() == ff::regular_rep(*E, fa), "Phi rho(a) Phi^-1 = rho(a^q)" + where);
    require(phi.pow(d).is_identity(), "Phi^d = I" + where);
    require(ff::regular_rep(*E, E->add(a, b)) == ff::regular_rep(*E, a) + ff::regular_rep(*E, b),
            "regular_rep additive" + where);
    require((a == b) == (ff::regular_rep(*E, a) == ff::regular_rep(*E, b)), "regular_rep injective" + where);
    ++cases;
  }
  return str(cases) + " randomized cases";
}

std::string ratfunc_product_formula(Rng& rng) {
  std::size_t cases = 0;
  for (int iter = 0; iter < 100; ++iter) {
    const std::uint64_t q = std::vector<std::uint64_t>{3, 4, 5, 7, 9}[uniform(rng, 5)];
    const auto F = ff::Field::of_order(q);
    auto rand_poly = [&] {
      std::vector<ff::Field::Elem> c(1 + uniform(rng, 6));
      for (auto& x : c) x = static_cast<ff::Field::Elem>(uniform(rng, q));
      c.back() = 1 + static_cast<ff::Field::Elem>(uniform(rng, q - 1));
      return ff::Poly<ff::Field>(F.get(), c);
    };
    const ff::RatFunc<ff::Field> f(rand_poly(), rand_poly()), g(rand_poly(), rand_poly());
    // Canonical form: the same quotient built two ways is bit-identical.
    const auto h = rand_poly();
    const ff::RatFunc<ff::Field> f2(f.num() * h, f.den() * h);
    require(f2.num() == f.num() && f2.den() == f.den(), "canonical form unique");
    const auto back = (f * g) / g;
    require(back.num() == f.num() && back.den() == f.den(), "(f g) / g = f canonically");
    std::map<std::vector<ff::Field::Elem>, ff::Poly<ff::Field>> places;
    for (const auto* h : {&f, &g})
      for (const auto* p : {&h->num(), &h->den()})
        for (auto& P : ff::irreducible_factors(*p)) places.emplace(P.coeffs(), P);
    long total_f = ff::valuation(f, ff::Place<ff::Field>::infinity());
    for (const auto& [key, P] : places) {
      const auto place = ff::Place<ff::Field>::finite(P);
      const int vf = ff::valuation(f, place), vg = ff::valuation(g, place);
      require(ff::valuation(f * g, place) == vf + vg, "v(fg) = v(f) + v(g)");
      total_f += static_cast<long>(place.degree()) * vf;
    }
    require(total_f == 0, "sum over places of deg(P) v_P(f) = 0 (q=" + str(q) + ")");
    ++cases;
  }
  return str(cases) + " random rational functions";
}

// ---------------------------------------------------------------- cyc

cyc::CycElem random_elem(Rng& rng, const std::shared_ptr<const cyc::CycAlg>& alg, bool integral) {
  const auto& E = alg->ext();
  std::vector<cyc::ERat> c;
  for (std::uint32_t j = 0; j < alg->degree(); ++j) {
    std::vector<ff::ExtField::Elem> num(1 + uniform(rng, 3)), den(1 + uniform(rng, 2));
    for (auto& x : num) x = uniform(rng, E.order());
    for (auto& x : den) x = uniform(rng, E.order());
    den.back() = 1 + uniform(rng, E.order() - 1);
    if (integral || uniform(rng, 2) == 0) den = {1};
    c.emplace_back(cyc::EPoly(&E, num), cyc::EPoly(&E, den));
  }
  return cyc::CycElem(alg, std::move(c));
}

std::string representation_homomorphism(Rng& rng) {
  std::size_t cases = 0;
  for (auto [q, d, s] : std::vector<std::tuple<std::uint64_t, std::uint32_t, std::uint32_t>>{
           {3, 3, 1}, {3, 3, 2}, {5, 3, 1}, {3, 4, 3}, {3, 5, 2}}) {
    const auto E = ff::ExtField::standard(ff::Field::of_order(q), d);
    const auto alg = cyc::CycAlg::create(E, s);
    for (int iter = 0; iter < 20; ++iter) {
      const auto x = random_elem(rng, alg, false), y = random_elem(rng, alg, false);
      const auto xy = x * y;
      require(cyc::to_matrix(xy) == cyc::to_matrix(x) * cyc::to_matrix(y), "to_matrix multiplicative");
      require(cyc::reduced_norm(xy) == cyc::reduced_norm(x) * cyc::reduced_norm(y), "reduced norm multiplicative");
      if (!x.is_zero()) require((x * x.inverse()).is_one(), "x x^-1 = 1");
      const auto u = 1 + uniform(rng, E->order() - 1);
      require(cyc::reduced_norm(cyc::conj_by_unit(x, u)) == cyc::reduced_norm(x), "reduced norm conjugation invariant");
      ++cases;
    }
    const auto z = cyc::CycElem::z(alg);
    const auto c = cyc::CycElem::ext(alg, E->tau());
    require(z * c == cyc::CycElem::ext(alg, alg->sigma(E->tau(), 1)) * z, "z a = sigma(a) z");
    require(z.pow(d) == cyc::CycElem::scalar(alg, alg->one_plus_t()), "z^d = 1 + t");
  }
  return str(cases) + " random products";
}

std::string specialize_multiplicative(Rng& rng) {
  std::size_t cases = 0;
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{5, 3}, {3, 5}, {7, 2}, {7, 4}}) {
    const auto p = forge::GenParams::make(q, d, 1);
    for (int iter = 0; iter < 6; ++iter) {
      const auto x = random_elem(rng, p.alg, true), y = random_elem(rng, p.alg, true);
      require(cyc::specialize(x * y, p.alpha) == cyc::specialize(x, p.alpha) * cyc::specialize(y, p.alpha),
              "specialize(xy) = specialize(x) specialize(y) (q=" + str(q) + " d=" + str(d) + ")");
      ++cases;
    }
    const auto z = cyc::CycElem::z(p.alg);
    const auto c = cyc::CycElem::ext(p.alg, p.u);
    require(cyc::specialize(z * c, p.alpha) == cyc::specialize(z, p.alpha) * cyc::specialize(c, p.alpha),
            "specialize respects z a");
    // The two images of z: Z^d = (1 + gamma) I and Z rho(a) Z^-1 = rho(a^(q^s)).
    for (std::uint32_t s = 1; s < d; ++s) {
      if (std::gcd(s, d) != 1) continue;
      const auto ps = p.with_s(s);
      const auto Z = cyc::specialize(cyc::CycElem::z(ps.alg), ps.alpha);
      require(Z.pow(d) == ff::FqMatrix::identity(ps.F, d).scaled(ps.F->add(1, ps.gamma)), "Z^d = (1 + gamma) I");
      for (int iter = 0; iter < 5; ++iter) {
        const auto a = uniform(rng, ps.E->order());
        require(Z * ff::regular_rep(*ps.E, a) * Z.inverse() == ff::regular_rep(*ps.E, ps.E->frobenius(a, s)),
                "Z rho(a) Z^-1 = rho(a^(q^s))");
      }
    }
  }
  // Odd d with alpha = -2 gives gamma = -2.
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{5, 3}, {7, 3}, {4, 5}, {3, 7}, {8, 3}}) {
    const auto F = ff::Field::of_order(q);
    require(cyc::gamma_of(*F, F->from_int(-2), d) == F->from_int(-2), "gamma(-2) = -2 for odd d");
  }
  return str(cases) + " random products";
}

// ---------------------------------------------------------------- forge

std::string subspace_counts(Rng&) {
  std::size_t checked = 0;
  for (auto [p, d] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {3, 3}, {3, 4}, {5, 3}, {7, 2}}) {
    for (std::uint32_t k = 0; k <= d; ++k) {
      require(BigInt(enumerate_subspaces(p, d, k).size()) == ff::gaussian_binomial(d, k, p),
              "gaussian_binomial(" + str(d) + "," + str(k) + "," + str(p) + ") matches enumeration");
      require(ff::gaussian_binomial(d, k, p) == ff::gaussian_binomial(d, d - k, p), "gaussian_binomial symmetric");
      ++checked;
    }
    require(ff::pgl_order(d, p) == pgl_order_oracle(p, d), "pgl_order matches the order formula");
  }
  return str(checked) + " binomials";
}

std::string omega_hat_small(Rng&) {
  // (q, d) = (5, 3): every length-3 word over Omega, checked by plain
  // matrix products, against the meet-in-the-middle candidates.
  const auto p = forge::GenParams::make(5, 3, 1);
  const auto omega = forge::build_omega(p);
  const std::size_t n = omega.size();
  std::vector<std::uint32_t> brute;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = 0; b < n; ++b) {
      const auto ab = omega.gens[a].matrix * omega.gens[b].matrix;
      for (std::uint32_t c = 0; c < n; ++c) {
        const auto m = ab * omega.gens[c].matrix;
        bool scalar = m.at(0, 0) != 0;
        for (std::size_t i = 0; i < 3 && scalar; ++i)
          for (std::size_t j = 0; j < 3 && scalar; ++j) scalar = m.at(i, j) == (i == j ? m.at(0, 0) : 0);
        if (scalar) brute.insert(brute.end(), {a, b, c});
      }
    }
  require(forge::identity_word_candidates(omega, 1ull << 30) == brute, "identity words match brute force");
  const auto hat = forge::build_omega_hat(omega);
  require(hat.size() == 62, "|Omega-hat| = 62 for (5,3)");
  std::set<Basis> oracle, attached;
  for (std::uint32_t k = 1; k < 3; ++k)
    for (auto& b : enumerate_subspaces(5, 3, k)) oracle.insert(b);
  for (const auto& g : hat.gens) attached.insert(forge::attach_subspace(g, hat.params).basis);
  require(attached == oracle && attached.size() == hat.size(), "attach_subspace bijective for (5,3)");
  return str(brute.size() / 3) + " identity words";
}

// Per-generator facts for several sets: exact lift, color from the
// normalized lift, inverse colors, class sizes.
std::string generator_lifts(Rng&) {
  std::vector<forge::GenSet> sets;
  sets.push_back(forge::symmetrize(forge::build_omega(forge::GenParams::make(3, 5, 1))));
  sets.push_back(forge::symmetrize(forge::build_omega(forge::GenParams::make(7, 4, 1))));
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{3, 3}, {5, 3}, {7, 3}})
    sets.push_back(forge::build_omega_hat(forge::build_omega(forge::GenParams::make(q, d, 1))));
  std::size_t checked = 0;
  for (const auto& gs : sets) {
    const auto& p = gs.params;
    const std::string w = " (q=" + str(p.q) + " d=" + str(p.d) + " " + forge::kind_name(gs.kind) + ")";
    require(gs.inverse_closed(), "inverse closed" + w);
    std::map<std::uint32_t, std::uint64_t> by_color;
    for (const auto& g : gs.gens) {
      require(g.lift && cyc::specialize(*g.lift, p.alpha) == g.matrix, "specialize(lift) = matrix" + w);
      require(!p.pgl->is_identity(g.proj), "no identity generator" + w);
      int vmin = ff::kInfiniteValuation;
      for (const auto& c : g.lift->coeffs()) vmin = std::min(vmin, c.leading_at_zero().first);
      const int vdet = ff::valuation(cyc::reduced_norm(*g.lift), ff::Place<ff::Field>::zero());
      require(vdet - static_cast<int>(p.d) * vmin == static_cast<int>(g.color), "nu_0(Nrd of normalized lift) = color" + w);
      require(forge::color_of(g, p.d) == g.color, "stored color" + w);
      require(gs.gens[g.inv].color == (p.d - g.color) % p.d, "color(g^-1) = d - color(g)" + w);
      ++by_color[g.color];
      ++checked;
    }
    BigInt total = 0;
    for (std::uint32_t l = 1; l < p.d; ++l) total += ff::gaussian_binomial(p.d, l, p.q);
    if (gs.kind == forge::GenKind::OmegaHat) {
      require(BigInt(gs.size()) == total, "|Omega-hat| = sum of gaussian binomials" + w);
      for (std::uint32_t l = 1; l < p.d; ++l)
        require(BigInt(by_color[l]) == ff::gaussian_binomial(p.d, l, p.q), "color class sizes" + w);
    } else {
      require(gs.size() == 2 * p.n && p.n == (ff::gaussian_binomial(p.d, 1, p.q)), "|Omega-bar| = 2 |Omega|" + w);
    }
    // attach_subspace is a bijection onto proper subspaces (prime q only).
    if (gs.kind == forge::GenKind::OmegaHat && p.F->degree() == 1) {
      std::set<Basis> oracle, attached;
      for (std::uint32_t k = 1; k < p.d; ++k)
        for (auto& b : enumerate_subspaces(static_cast<std::uint32_t>(p.q), p.d, k)) oracle.insert(b);
      for (const auto& g : gs.gens) attached.insert(forge::attach_subspace(g, p).basis);
      require(attached == oracle && attached.size() == gs.size(), "attach_subspace bijective" + w);
    }
    // d = 3: Omega-hat and Omega-bar agree as sets of projective classes.
    if (gs.kind == forge::GenKind::OmegaHat && p.d == 3) {
      const auto bar = forge::symmetrize(forge::build_omega(p));
      std::set<std::string> ka, kb;
      for (const auto& g : gs.gens) ka.insert(p.pgl->key(g.proj).hex());
      for (const auto& g : bar.gens) kb.insert(p.pgl->key(g.proj).hex());
      require(ka == kb, "Omega-hat = Omega-bar for d = 3" + w);
    }
  }
  return str(checked) + " generators in " + str(sets.size()) + " sets";
}

std::string family_small(Rng&) {
  const auto p = forge::GenParams::make(3, 5, 1);
  const auto bar = forge::symmetrize(forge::build_omega(p));
  const auto fam = forge::family(p, bar, false);
  require(fam.m == 2 && fam.sigma_exponents == std::vector<std::uint32_t>{1, 3}, "family exponents 1, 3");
  require(std::all_of(fam.matches_independent.begin(), fam.matches_independent.end(), [](bool b) { return b; }),
          "powered Omega-bar equals the independently built set");
  return "m = 2";
}

std::string exhaustive_pairs(Rng&) {
  // N_1 = 0 and N_2 = |Omega-bar| for (3, 5) by enumerating all pairs.
  const auto bar = forge::symmetrize(forge::build_omega(forge::GenParams::make(3, 5, 1)));
  const auto& ctx = *bar.params.pgl;
  std::uint64_t n1 = 0, n2 = 0;
  for (const auto& g : bar.gens) {
    n1 += ctx.is_identity(ctx.from_matrix(g.matrix));
    for (const auto& h : bar.gens) n2 += ctx.is_identity(ctx.from_matrix(g.matrix * h.matrix));
  }
  const auto N = spectra::ball_mitm_moments(ctx, bar.projs(), 2, 1ull << 30);
  require(n1 == 0 && N[1] == 0, "N_1 = 0");
  require(n2 == bar.size() && N[2] == n2, "N_2 = |Omega-bar| = " + str(n2));
  return "N_1 = 0, N_2 = " + str(n2);
}

// ---------------------------------------------------------------- cayley

std::string small_graph_invariants(Rng&) {
  std::string out;
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{5, 2}, {7, 2}, {9, 2}, {3, 3}}) {
    const auto& sc = small_case(q, d);
    const auto& g = sc.graph;
    const std::string w = " (q=" + str(q) + " d=" + str(d) + ")";
    require(BigInt(g.n()) == psl_order_oracle(q, d) * forge::expected_index(sc.bar.params),
            "closure size = |PSL| * expected_index" + w);
    require(g.r() == sc.bar.size() && g.adj.size() == g.n() * g.r(), "regular of degree |gens|" + w);
    require(g.vertices[0] == sc.bar.params.pgl->key(sc.bar.params.pgl->identity()), "vertex 0 is the identity" + w);
    require(cayley::is_regular_symmetric(g), "adjacency symmetric" + w);
    const auto nb = cayley::undirected_neighbors(g);
    std::uint64_t deg_sum = 0;
    for (const auto& l : nb) deg_sum += l.size();
    const auto cells = cayley::clique_cells(g, d);
    require(cells.counts[0] == g.n(), "0-cells = n" + w);
    require(cells.counts[1] * 2 == deg_sum, "1-cells = edge count" + w);
    if (deg_sum == g.n() * g.r()) require(cells.counts[1] * 2 == g.n() * g.r(), "1-cells = n r / 2" + w);
    require(cells.counts[2] == triangle_oracle(g), "2-cells = triangle oracle" + w);
    // Triangles through each vertex are constant.
    std::set<std::uint64_t> per_vertex;
    for (std::size_t v = 0; v < g.n(); ++v) {
      std::uint64_t t = 0;
      for (auto a : nb[v])
        for (auto b : nb[v])
          if (a < b && std::binary_search(nb[a].begin(), nb[a].end(), b)) ++t;
      per_vertex.insert(t);
    }
    require(per_vertex.size() == 1, "triangles per vertex constant" + w);
    out += (out.empty() ? "" : ", ") + str(q) + "/" + str(d) + ": n=" + str(g.n()) + " cells=";
    for (std::size_t i = 0; i < cells.counts.size(); ++i) out += (i ? "/" : "") + str(cells.counts[i]);
  }
  return out;
}

std::string colored_subgraphs(Rng&) {
  const auto& sc = small_case(3, 3);
  const auto& g = sc.graph;
  require(cayley::colored_subgraph(g, {1, 2}) == g, "full color set gives the same graph");
  bool threw = false;
  try {
    (void)cayley::colored_subgraph(g, {});
  } catch (const PreconditionError&) {
    threw = true;
  }
  require(threw, "empty color set rejected");
  const auto c1 = cayley::colored_subgraph(g, {1});
  require(c1.r() == 13 && !c1.symmetric, "color 1 alone: 13 out-edges, directed");
  const auto hat = forge::build_omega_hat(forge::build_omega(sc.bar.params));
  const auto gh = cayley::bfs_build(hat, 100'000);
  const auto sub = cayley::colored_subgraph(gh, {1, 2});
  require(sub.r() == 26 && cayley::is_regular_symmetric(sub) && sub.connected, "Omega-hat colors {1,2}: 26-regular");
  return "ok";
}

// ---------------------------------------------------------------- spectra

std::string moment_spectrum_consistency(Rng&) {
  std::string out;
  for (auto q : {5u, 7u, 9u}) {
    const auto& sc = small_case(q, 2);
    const auto& g = sc.graph;
    const auto spec = spectra::dense_spectrum(g);
    const auto N = spectra::group_dp_moments(g, 8, all_columns(g));
    const auto M = spectra::ball_mitm_moments(*sc.bar.params.pgl, sc.bar.projs(), 8, 1ull << 30);
    require(N == M, "group-dp = ball-mitm for k <= 8 (q=" + str(q) + ")");
    for (std::uint32_t k = 0; k <= 6; ++k) {
      const double exact = static_cast<double>(N[k]) * static_cast<double>(g.n());
      const double ps = spectra::power_sum(spec, k);
      require(std::abs(ps - exact) <= 1e-6 * std::max(1.0, std::abs(exact)),
              "|G| N_" + str(k) + " = sum lambda^k (q=" + str(q) + ")");
    }
    const auto grp = spectra::grouped(spec);
    require(std::abs(grp.front().first - static_cast<double>(g.r())) < 1e-8 * g.r() && grp.front().second == 1,
            "lambda_max = r with multiplicity 1");
    require(std::abs(spectra::power_sum(spec, 1)) < 1e-6, "trace 0");
    require(spec.residual <= 1e-8 * g.r(), "residuals within tolerance");
    out += (out.empty() ? "" : ", ") + str("q=") + str(q) + " n=" + str(g.n());
  }
  return out;
}

std::string color_decomposition(Rng&) {
  const auto& sc = small_case(3, 3);
  const auto& g = sc.graph;
  spectra::MomentOptions all_colors;
  all_colors.colors = std::set<std::uint32_t>{1, 2};
  const auto a = spectra::walk_moments(sc.bar, 8, spectra::Strategy::GroupDp, all_colors);
  const auto b = spectra::walk_moments(sc.bar, 8, spectra::Strategy::GroupDp);
  require(a.N == b.N, "all colors = union multiset");
  const auto c = spectra::walk_moments(sc.bar, 6, spectra::Strategy::BallMitm, all_colors);
  require(std::equal(c.N.begin(), c.N.end(), b.N.begin()), "ball-mitm with colors agrees");
  const auto p12 = spectra::pattern_moments(g, 8, {1, 2});
  const auto p21 = spectra::pattern_moments(g, 8, {2, 1});
  require(p12 == p21, "pattern (1,2) = pattern (2,1)");
  spectra::MomentOptions one;
  one.colors = std::set<std::uint32_t>{1};
  const auto m1 = spectra::walk_moments(sc.bar, 6, spectra::Strategy::GroupDp, one);
  const auto m1b = spectra::walk_moments(sc.bar, 6, spectra::Strategy::BallMitm, one);
  require(m1.N == m1b.N, "directed color-1 moments agree across strategies");
  return "ok";
}

cayley::CayleyGraph relabel(const cayley::CayleyGraph& g, Rng& rng, std::vector<std::uint32_t>& perm) {
  perm.resize(g.n());
  std::iota(perm.begin(), perm.end(), 0u);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  cayley::CayleyGraph h = g;
  for (std::size_t v = 0; v < g.n(); ++v) {
    h.vertices[perm[v]] = g.vertices[v];
    for (std::size_t c = 0; c < g.r(); ++c) h.adj[perm[v] * g.r() + c] = perm[g.neighbor(v, c)];
  }
  return h;
}

std::string wl_and_iso(Rng& rng) {
  const auto& g = small_case(5, 2).graph;
  require(spectra::compare_wl(g, g).verdict == "possibly-isomorphic", "wl(G, G)");
  require(spectra::compare_iso(g, g).verdict == "isomorphic", "iso(G, G)");
  std::vector<std::uint32_t> perm;
  const auto h = relabel(g, rng, perm);
  require(spectra::is_isomorphism(g, h, perm), "relabeling is an isomorphism");
  const auto res = spectra::find_isomorphism(g, h);
  require(res.verdict == spectra::IsoVerdict::Isomorphic && spectra::is_isomorphism(g, h, res.witness),
          "iso search finds a checked witness for a relabeled copy");
  // Regular graphs that 1-WL cannot separate but that differ in triangles.
  const auto c12 = circulant_graph(64, {1, 63, 2, 62}), c13 = circulant_graph(64, {1, 63, 3, 61});
  require(triangle_oracle(c12) != triangle_oracle(c13), "oracle: triangle counts differ");
  require(spectra::compare_wl(c12, c13).verdict == "possibly-isomorphic", "wl cannot separate them");
  require(spectra::compare_iso(c12, c13).verdict == "non-isomorphic", "iso search separates them");
  return "ok";
}

std::string circulant_spectra(Rng& rng) {
  // Two random symmetric connection sets of equal size on Z/64.
  auto pick = [&] {
    std::set<std::uint32_t> s;
    while (s.size() < 6) {
      const auto x = static_cast<std::uint32_t>(1 + uniform(rng, 31));
      s.insert(x);
      s.insert(64 - x);
    }
    return std::vector<std::uint32_t>(s.begin(), s.end());
  };
  std::vector<std::uint32_t> s1 = pick(), s2 = pick();
  while (s2 == s1) s2 = pick();
  const auto g1 = circulant_graph(64, s1), g2 = circulant_graph(64, s2);
  const auto sp1 = spectra::dense_spectrum(g1), sp2 = spectra::dense_spectrum(g2);
  const auto o1 = circulant_spectrum_oracle(64, s1), o2 = circulant_spectrum_oracle(64, s2);
  const double tol = 1e-8 * static_cast<double>(s1.size());
  for (std::size_t i = 0; i < 64; ++i) {
    require(std::abs(sp1.values[i] - o1[i]) <= tol, "circulant 1 spectrum matches the closed form");
    require(std::abs(sp2.values[i] - o2[i]) <= tol, "circulant 2 spectrum matches the closed form");
  }
  bool oracle_equal = true;
  for (std::size_t i = 0; i < 64; ++i) oracle_equal = oracle_equal && std::abs(o1[i] - o2[i]) <= tol;
  const auto verdict = spectra::compare_spectra(sp1, sp2).verdict;
  require(verdict == (oracle_equal ? "equal" : "different"), "compare verdict agrees with the oracle");
  require(spectra::compare_spectra(sp1, sp1).verdict == "equal", "compare(G, G) equal");
  return "verdict " + verdict;
}

// ---------------------------------------------------------------- io

template <class Fn>
bool throws_format(Fn&& fn) {
  try {
    fn();
  } catch (const FormatError&) {
    return true;
  }
  return false;
}

std::string roundtrips(Rng&) {
  for (auto [q, d] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{{5, 2}, {3, 3}}) {
    const auto& g = small_case(q, d).graph;
    std::stringstream t, b;
    cayley::export_text(t, g);
    cayley::export_binary(b, g);
    const auto gt = cayley::import_text(t);
    const auto gb = cayley::import_binary(b);
    require(gt == g && gb == g, "text and binary graph round trips");
  }
  // The (3,5) graph of order 372000, binary only.
  const auto big = cayley::bfs_build(forge::symmetrize(forge::build_omega(forge::GenParams::make(5, 3, 1))), 1'000'000);
  std::string bytes = cayley::to_binary_string(big);
  {
    std::istringstream in(bytes);
    require(cayley::import_binary(in) == big, "binary round trip of the 372000-vertex graph");
  }
  std::string corrupt = bytes;
  corrupt[12] ^= 0x01;  // vertex count field
  require(throws_format([&] {
            std::istringstream in(corrupt);
            (void)cayley::import_binary(in);
          }),
          "corrupted length field rejected");
  require(throws_format([&] {
            std::istringstream in(bytes.substr(0, bytes.size() / 2));
            (void)cayley::import_binary(in);
          }),
          "truncated file rejected");

  const auto bar = forge::symmetrize(forge::build_omega(forge::GenParams::make(3, 5, 1)));
  const auto hat = forge::build_omega_hat(forge::build_omega(forge::GenParams::make(5, 3, 1)));
  for (const auto* gs : {&bar, &hat}) {
    std::stringstream s;
    forge::write_genset(s, *gs);
    const auto back = forge::read_genset(s);
    require(forge::genset_to_string(back) == forge::genset_to_string(*gs), "generator file round trip");
  }

  const auto& sc = small_case(5, 2);
  const auto m = spectra::walk_moments(sc.bar, 6, spectra::Strategy::GroupDp);
  std::stringstream ms;
  spectra::write_moments(ms, m);
  require(spectra::read_moments(ms) == m, "moment file round trip");

  const auto spec = spectra::dense_spectrum(sc.graph);
  std::stringstream ss;
  spectra::write_spectrum(ss, spec);
  const auto back = spectra::read_spectrum(ss);
  require(spectra::compare_spectra(spec, back).verdict == "equal", "spectrum file round trip");

  const auto& lift = *bar.gens[7].lift;
  std::stringstream cs;
  cyc::write_cyc_elem(cs, lift);
  const auto lift2 = cyc::read_cyc_elem(cs);
  std::stringstream a1, a2;
  cyc::write_cyc_elem(a1, lift);
  cyc::write_cyc_elem(a2, lift2);
  require(a1.str() == a2.str(), "algebra element round trip");
  return "ok";
}

std::string deterministic_builds(Rng&) {
  const std::size_t saved = thread_count();
  std::vector<std::string> graphs, hats, moments;
  const auto bar = small_case(3, 3).bar;
  const auto omega = forge::build_omega(forge::GenParams::make(5, 3, 1));
  for (std::size_t threads : {1u, 3u}) {
    set_thread_count(threads);
    graphs.push_back(cayley::to_binary_string(cayley::bfs_build(bar, 100'000)));
    hats.push_back(forge::genset_to_string(forge::build_omega_hat(omega)));
    std::stringstream s;
    spectra::write_moments(s, spectra::walk_moments(bar, 6, spectra::Strategy::BallMitm));
    moments.push_back(s.str());
  }
  set_thread_count(saved);
  require(graphs[0] == graphs[1], "graph export identical for 1 and 3 threads");
  require(hats[0] == hats[1], "Omega-hat identical for 1 and 3 threads");
  require(moments[0] == moments[1], "moments identical for 1 and 3 threads");
  return "ok";
}

using Property = std::pair<const char*, std::string (*)(Rng&)>;

}  // namespace

std::vector<PropertyResult> run_properties(std::uint64_t seed) {
  static const std::vector<Property> props = {
      {"ff.frobenius_relations", frobenius_relations},
      {"ff.ratfunc_product_formula", ratfunc_product_formula},
      {"cyc.representation_homomorphism", representation_homomorphism},
      {"cyc.specialize_multiplicative", specialize_multiplicative},
      {"forge.subspace_counts", subspace_counts},
      {"forge.omega_hat_small", omega_hat_small},
      {"forge.generator_lifts", generator_lifts},
      {"forge.family_small", family_small},
      {"forge.exhaustive_pairs", exhaustive_pairs},
      {"cayley.small_graph_invariants", small_graph_invariants},
      {"cayley.colored_subgraphs", colored_subgraphs},
      {"spectra.moment_spectrum_consistency", moment_spectrum_consistency},
      {"spectra.color_decomposition", color_decomposition},
      {"spectra.wl_and_iso", wl_and_iso},
      {"spectra.circulant_spectra", circulant_spectra},
      {"io.roundtrips", roundtrips},
      {"io.deterministic_builds", deterministic_builds},
  };
  std::vector<PropertyResult> out;
  for (std::size_t i = 0; i < props.size(); ++i) {
    Rng rng(seed + i);
    PropertyResult r{props[i].first, false, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.detail = props[i].second(rng);
      r.pass = true;
    } catch (const PropertyFailure& f) {
      r.detail = f.what;
    } catch (const Error& e) {
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace isocay::suites
