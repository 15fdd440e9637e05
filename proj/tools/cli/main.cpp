#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "config.hpp"
#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/errors.hpp"
#include "isocay/common/hash.hpp"
#include "isocay/common/parallel.hpp"
#include "isocay/common/text.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/forge/genset_io.hpp"
#include "isocay/spectra/compare.hpp"
#include "isocay/suites/suites.hpp"
#include "manifest.hpp"

namespace fs = std::filesystem;

namespace isocay::cli {

namespace {

constexpr const char* kVersion = "1.0.0";

enum Exit : int { kOk = 0, kVerify = 1, kResource = 2, kUsage = 64, kData = 65 };

// ---------------------------------------------------------------- options

struct ParamOpts {
  std::uint64_t q = 3;
  std::uint32_t d = 5;
  std::uint32_t s = 1;
  std::string alpha;  // empty: default for (q, d)
  std::string kind = "omega-bar";
  std::string gens_file;
};

struct RunOpts {
  std::string out;
  std::string format = "text";
  std::string mem_budget;
  std::uint64_t max_vertices = 10'000'000;
  std::string colors = "all";
};

struct Run {
  std::vector<std::string> args;
  std::vector<std::string> inputs;
  std::string params;
  std::optional<std::uint64_t> seed;
  bool manifest = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

void add_param_opts(CLI::App* sub, ParamOpts& p, bool with_kind) {
  sub->add_option("--q", p.q, "field order q (prime power, q > 2)");
  sub->add_option("--d", p.d, "degree d");
  sub->add_option("--s", p.s, "sigma exponent s, prime to d");
  sub->add_option("--alpha", p.alpha, "alpha as an integer or F_p coordinates c0,c1,...");
  if (with_kind) {
    sub->add_option("--kind", p.kind, "omega, omega-bar or omega-hat");
    sub->add_option("--gens", p.gens_file, "read generators from a file instead of building them");
  }
}

std::uint64_t memory_budget(const RunOpts& o) {
  if (!o.mem_budget.empty()) return parse_bytes(o.mem_budget);
  if (const char* env = std::getenv("ISOCAY_MEM_BUDGET"); env && *env) return parse_bytes(env);
  return 4ull << 30;
}

std::optional<std::set<std::uint32_t>> parse_colors(const std::string& s) {
  if (s == "all") return std::nullopt;
  std::set<std::uint32_t> out;
  for (auto part : text::split(s, ',')) {
    try {
      out.insert(static_cast<std::uint32_t>(text::to_u64(part)));
    } catch (const FormatError&) {
      throw PreconditionError("bad --colors value '" + s + "' (all or a list like 1,2)");
    }
  }
  if (out.empty()) throw PreconditionError("empty --colors list");
  return out;
}

forge::GenKind parse_kind_flag(std::string s) {
  s.erase(std::remove(s.begin(), s.end(), '-'), s.end());
  try {
    return forge::parse_kind(s);
  } catch (const FormatError&) {
    throw PreconditionError("unknown --kind (omega, omega-bar or omega-hat)");
  }
}

forge::GenParams make_params(const ParamOpts& p) {
  std::optional<ff::Field::Elem> alpha;
  if (!p.alpha.empty()) {
    const auto F = ff::Field::of_order(p.q);
    try {
      alpha = forge::parse_alpha(*F, p.alpha);
    } catch (const FormatError& e) {
      throw PreconditionError(std::string("bad --alpha: ") + e.what());
    }
  }
  return forge::GenParams::make(p.q, p.d, p.s, alpha);
}

forge::GenSet build_kind(const forge::GenParams& params, forge::GenKind kind, std::uint64_t budget) {
  auto omega = forge::build_omega(params);
  if (kind == forge::GenKind::Omega) return omega;
  if (kind == forge::GenKind::OmegaBar) return forge::symmetrize(omega);
  forge::OmegaHatOptions opt;
  opt.memory_budget = budget;
  return forge::build_omega_hat(omega, opt);
}

std::ifstream open_input(Run& run, const std::string& path, bool binary = false) {
  std::ifstream in(path, binary ? std::ios::binary : std::ios::in);
  if (!in) throw PreconditionError("cannot open " + path);
  run.inputs.push_back(path);
  return in;
}

forge::GenSet load_gens(Run& run, const ParamOpts& p, std::uint64_t budget) {
  if (!p.gens_file.empty()) {
    auto in = open_input(run, p.gens_file);
    auto g = forge::read_genset(in);
    run.params = "gens=" + p.gens_file + " " + g.params.describe() + " kind=" + forge::kind_name(g.kind);
    return g;
  }
  const auto kind = parse_kind_flag(p.kind);
  const auto params = make_params(p);
  run.params = params.describe() + " kind=" + forge::kind_name(kind);
  return build_kind(params, kind, budget);
}

bool is_binary_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  char magic[8] = {};
  in.read(magic, 8);
  return in.gcount() == 8 && std::string(magic, 8) == "ISOCAYG1";
}

cayley::CayleyGraph load_graph(Run& run, const std::string& path) {
  const bool bin = is_binary_graph(path);
  auto in = open_input(run, path, bin);
  return bin ? cayley::import_binary(in) : cayley::import_text(in);
}

// ---------------------------------------------------------------- output

// Writes to a temporary sibling and renames on commit, so a failed run
// leaves no partial file behind. Existing non-regular targets (devices,
// pipes) are written in place and get no manifest.
class Output {
 public:
  Output(Run& run, std::string path, bool binary) : run_(run), path_(std::move(path)) {
    if (path_.empty()) return;
    std::error_code ec;
    const auto st = fs::status(path_, ec);
    if (!ec && fs::exists(st) && !fs::is_regular_file(st)) {
      special_ = true;
      file_.open(path_, binary ? std::ios::binary : std::ios::out);
      if (!file_) throw PreconditionError("cannot write " + path_);
      return;
    }
    tmp_ = path_ + ".tmp";
    file_.open(tmp_, binary ? std::ios::binary | std::ios::trunc : std::ios::trunc);
    if (!file_) throw PreconditionError("cannot write " + tmp_);
  }
  ~Output() {
    if (!tmp_.empty() && !committed_) {
      file_.close();
      std::error_code ec;
      fs::remove(tmp_, ec);
    }
  }
  Output(const Output&) = delete;
  Output& operator=(const Output&) = delete;

  std::ostream& stream() { return path_.empty() ? std::cout : file_; }

  void commit() {
    if (path_.empty()) {
      std::cout.flush();
      return;
    }
    if (special_) {
      file_.flush();
      if (!file_) throw ResourceError("write to " + path_ + " failed");
      return;
    }
    file_.close();
    if (!file_) throw ResourceError("write to " + tmp_ + " failed");
    fs::rename(tmp_, path_);
    committed_ = true;
    if (!run_.manifest) return;
    RunManifest m;
    m.tool_version = kVersion;
    m.args = run_.args;
    m.params = run_.params;
    for (const auto& p : run_.inputs) m.inputs.emplace_back(p, file_hash(p));
    m.outputs.emplace_back(path_, file_hash(path_));
    m.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - run_.start).count();
    m.peak_rss_kb = peak_rss_kb();
    m.threads = thread_count();
    m.seed = run_.seed;
    const std::string mpath = path_ + ".manifest";
    write_manifest(mpath + ".tmp", m);
    fs::rename(mpath + ".tmp", mpath);
  }

 private:
  Run& run_;
  std::string path_;
  std::string tmp_;
  std::ofstream file_;
  bool committed_ = false;
  bool special_ = false;
};

void check_format(const std::string& f) {
  if (f != "text" && f != "binary") throw PreconditionError("--format must be text or binary");
}

// ---------------------------------------------------------------- commands

int cmd_gens(Run& run, const ParamOpts& p, const RunOpts& o) {
  const auto g = load_gens(run, p, memory_budget(o));
  Output out(run, o.out, false);
  forge::write_genset(out.stream(), g);
  out.commit();
  std::cerr << run.params << " size=" << g.size() << '\n';
  for (const auto& w : g.params.warnings) std::cerr << "warning: " << w << '\n';
  for (const auto& m : g.diagnostics) std::cerr << "note: " << m << '\n';
  return kOk;
}

int cmd_omega_hat(Run& run, ParamOpts p, const RunOpts& o) {
  p.kind = "omega-hat";
  p.gens_file.clear();
  const auto g = load_gens(run, p, memory_budget(o));
  Output out(run, o.out, false);
  forge::write_genset(out.stream(), g);
  out.commit();
  std::vector<std::size_t> by_color(g.params.d, 0);
  for (const auto& x : g.gens) ++by_color[x.color % g.params.d];
  std::cerr << run.params << " size=" << g.size() << " colors=";
  for (std::size_t c = 1; c < by_color.size(); ++c) std::cerr << (c > 1 ? "/" : "") << by_color[c];
  std::cerr << '\n';
  if (g.stats)
    std::cerr << "candidates=" << g.stats->candidates << " verified=" << g.stats->verified
              << " rejected=" << g.stats->rejected << " prefix_conflicts=" << g.stats->prefix_conflicts << '\n';
  return kOk;
}

int cmd_graph(Run& run, const ParamOpts& p, const RunOpts& o, std::uint32_t cells) {
  check_format(o.format);
  const auto gens = load_gens(run, p, memory_budget(o));
  auto g = cayley::bfs_build(gens, o.max_vertices);
  if (const auto colors = parse_colors(o.colors)) g = cayley::colored_subgraph(g, *colors);
  run.params += " colors=" + o.colors + " max_vertices=" + std::to_string(o.max_vertices);
  const bool bin = o.format == "binary";
  if (bin && o.out.empty()) throw PreconditionError("--format binary needs --out");
  Output out(run, o.out, bin);
  if (bin) cayley::export_binary(out.stream(), g);
  else cayley::export_text(out.stream(), g);
  out.commit();
  std::cerr << "n=" << g.n() << " r=" << g.r() << " symmetric=" << g.symmetric << " connected=" << g.connected << '\n';
  if (cells > 0) {
    const auto c = cayley::clique_cells(g, cells);
    std::cerr << "cells=";
    for (std::size_t i = 0; i < c.counts.size(); ++i) std::cerr << (i ? "," : "") << c.counts[i];
    std::cerr << '\n';
  }
  return kOk;
}

int cmd_moments(Run& run, const ParamOpts& p, const RunOpts& o, std::uint32_t kmax, const std::string& strategy) {
  const auto strat = spectra::parse_strategy(strategy);
  const auto gens = load_gens(run, p, memory_budget(o));
  spectra::MomentOptions opt;
  opt.colors = parse_colors(o.colors);
  opt.memory_budget = memory_budget(o);
  opt.max_vertices = o.max_vertices;
  run.params += " K=" + std::to_string(kmax) + " strategy=" + strategy + " colors=" + o.colors;
  const auto m = spectra::walk_moments(gens, kmax, strat, opt);
  Output out(run, o.out, false);
  spectra::write_moments(out.stream(), m);
  out.commit();
  return kOk;
}

int cmd_spectrum(Run& run, const ParamOpts& p, const RunOpts& o, const std::string& graph_file, std::size_t cap) {
  cayley::CayleyGraph g;
  if (!graph_file.empty()) {
    g = load_graph(run, graph_file);
    run.params = "graph=" + graph_file;
  } else {
    const auto gens = load_gens(run, p, memory_budget(o));
    g = cayley::bfs_build(gens, std::min<std::uint64_t>(o.max_vertices, cap));
  }
  run.params += " colors=" + o.colors + " dense_cap=" + std::to_string(cap);
  const auto s = spectra::dense_spectrum(g, parse_colors(o.colors), cap);
  Output out(run, o.out, false);
  spectra::write_spectrum(out.stream(), s);
  out.commit();
  return kOk;
}

int cmd_compare(Run& run, const std::string& mode_s, const std::string& a, const std::string& b, const RunOpts& o,
                const spectra::IsoOptions& iso) {
  const auto mode = spectra::parse_compare_mode(mode_s);
  run.params = "mode=" + mode_s;
  spectra::ComparisonReport r;
  switch (mode) {
    case spectra::CompareMode::Moments: {
      auto ia = open_input(run, a), ib = open_input(run, b);
      r = spectra::compare_moments(spectra::read_moments(ia), spectra::read_moments(ib));
      break;
    }
    case spectra::CompareMode::Spectrum: {
      auto ia = open_input(run, a), ib = open_input(run, b);
      r = spectra::compare_spectra(spectra::read_spectrum(ia), spectra::read_spectrum(ib));
      break;
    }
    case spectra::CompareMode::Wl:
      r = spectra::compare_wl(load_graph(run, a), load_graph(run, b));
      break;
    case spectra::CompareMode::Iso:
      r = spectra::compare_iso(load_graph(run, a), load_graph(run, b), iso);
      break;
  }
  Output out(run, o.out, false);
  out.stream() << r.to_text();
  out.commit();
  return kOk;
}

int cmd_family(Run& run, const ParamOpts& p, const RunOpts& o) {
  if (!p.gens_file.empty()) throw PreconditionError("family builds its own generators; drop --gens");
  const auto kind = parse_kind_flag(p.kind);
  if (kind == forge::GenKind::Omega) throw PreconditionError("family needs --kind omega-bar or omega-hat");
  const auto params = make_params(p);
  run.params = params.describe() + " kind=" + forge::kind_name(kind);
  const auto base = build_kind(params, kind, memory_budget(o));
  const auto fam = forge::family(params, base, kind == forge::GenKind::OmegaHat);
  Output out(run, o.out, false);
  auto& os = out.stream();
  os << "q=" << params.q << " d=" << params.d << " s=" << params.s << " kind=" << forge::kind_name(kind)
     << " m=" << fam.m << '\n';
  for (std::size_t i = 0; i < fam.sets.size(); ++i)
    os << "i=" << i << " sigma_exponent=" << fam.sigma_exponents[i] << " size=" << fam.sets[i].size()
       << " genset=" << hex64(forge::genset_fingerprint(fam.sets[i]))
       << " matches_independent=" << (fam.matches_independent[i] ? "yes" : "no") << '\n';
  for (const auto& n : fam.notes) os << "note=" << n << '\n';
  out.commit();
  return kOk;
}

int cmd_verify(Run& run, const std::string& suite, const std::vector<std::string>& only, const RunOpts& o) {
  const auto ids = only.empty() ? suites::suite_criteria(suite) : only;
  run.params = "suite=" + suite;
  if (std::find(ids.begin(), ids.end(), "A10") != ids.end()) run.seed = suites::kPropertySeed;
  bool ok = true;
  Output out(run, o.out, false);
  for (const auto& id : ids) {
    const auto r = suites::run_criterion(id);
    const auto line = suites::format_result(r);
    out.stream() << line << '\n';
    if (!o.out.empty()) std::cerr << line << '\n';
    ok = ok && r.pass;
  }
  out.commit();
  return ok ? kOk : kVerify;
}

int run(std::vector<std::string> argv, bool write_manifest_file);

int cmd_replay(const std::string& path) {
  const auto m = read_manifest(path);
  for (const auto& [p, h] : m.inputs)
    if (file_hash(p) != h) {
      std::cerr << "replay: input " << p << " changed (" << file_hash(p) << " != " << h << ")\n";
      return kVerify;
    }
  if (m.outputs.size() != 1) throw FormatError("manifest must list exactly one output");
  const auto& [out_path, expected] = m.outputs.front();
  const std::string tmp = out_path + ".replay";
  std::vector<std::string> args{"isocay"};
  for (std::size_t i = 0; i < m.args.size(); ++i) {
    if (m.args[i] == "--out" && i + 1 < m.args.size()) {
      args.insert(args.end(), {"--out", tmp});
      ++i;
    } else if (m.args[i].rfind("--out=", 0) == 0) {
      args.push_back("--out=" + tmp);
    } else {
      args.push_back(m.args[i]);
    }
  }
  const int code = run(args, false);
  if (code != kOk && code != kVerify) return code;
  const auto got = file_hash(tmp);
  std::error_code ec;
  fs::remove(tmp, ec);
  std::cout << "output=" << out_path << " expected=" << expected << " replayed=" << got
            << " verdict=" << (got == expected ? "identical" : "different") << '\n';
  return got == expected ? kOk : kVerify;
}

// ---------------------------------------------------------------- driver

int run(std::vector<std::string> argv, bool write_manifest_file) {
  try {
    argv = expand_config(argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }

  CLI::App app{"isocay: isospectral Cayley complexes from cyclic division algebras", "isocay"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  std::size_t threads = 0;
  app.add_option("--threads", threads, "worker threads (0: all cores)");
  std::string config_unused;
  app.add_option("--config", config_unused, "key=value file; command-line flags override it");

  ParamOpts p;
  RunOpts o;
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "output file (default: stdout)"); };
  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--mem-budget", o.mem_budget, "memory budget, e.g. 8G (default: $ISOCAY_MEM_BUDGET or 4G)");
  };

  auto* gens = app.add_subcommand("gens", "build Omega or Omega-bar (or Omega-hat) and write a generator file");
  add_param_opts(gens, p, true);
  add_budget(gens);
  add_out(gens);

  auto* hat = app.add_subcommand("omega-hat", "build Omega-hat from verified identity words");
  add_param_opts(hat, p, false);
  add_budget(hat);
  add_out(hat);

  std::uint32_t cells = 0;
  auto* graph = app.add_subcommand("graph", "BFS-build the Cayley graph of a generator set");
  add_param_opts(graph, p, true);
  add_budget(graph);
  add_out(graph);
  graph->add_option("--max-vertices", o.max_vertices, "abort beyond this many vertices");
  graph->add_option("--colors", o.colors, "keep only these generator colors (all or 1,2,...)");
  graph->add_option("--format", o.format, "text or binary");
  graph->add_option("--cells", cells, "also count clique cells up to this dimension");

  std::uint32_t kmax = 6;
  std::string strategy = "ball-mitm";
  auto* moments = app.add_subcommand("moments", "exact closed-walk counts N_0..N_K");
  add_param_opts(moments, p, true);
  add_budget(moments);
  add_out(moments);
  moments->add_option("--kmax", kmax, "largest walk length K");
  moments->add_option("--strategy", strategy, "group-dp or ball-mitm");
  moments->add_option("--colors", o.colors, "restrict letters to these colors");
  moments->add_option("--max-vertices", o.max_vertices, "group-dp: abort beyond this group order");

  std::string graph_file;
  std::size_t dense_cap = spectra::kDefaultDenseCap;
  auto* spectrum = app.add_subcommand("spectrum", "dense adjacency spectrum with residual check");
  add_param_opts(spectrum, p, true);
  add_budget(spectrum);
  add_out(spectrum);
  spectrum->add_option("--graph", graph_file, "read a graph file instead of building one");
  spectrum->add_option("--colors", o.colors, "colored operator (must be symmetric)");
  spectrum->add_option("--max-vertices", o.max_vertices, "abort beyond this many vertices");
  spectrum->add_option("--dense-cap", dense_cap, "largest n handled by the dense solver");

  std::string mode = "moments", file_a, file_b;
  spectra::IsoOptions iso;
  auto* compare = app.add_subcommand("compare", "compare two moment, spectrum or graph files");
  compare->add_option("--mode", mode, "moments, spectrum, wl or iso");
  compare->add_option("a", file_a, "first file")->required();
  compare->add_option("b", file_b, "second file")->required();
  compare->add_option("--node-limit", iso.node_limit, "iso: search node limit");
  compare->add_option("--time-limit", iso.time_limit_s, "iso: seconds");
  add_out(compare);

  auto* family = app.add_subcommand("family", "the q-power family of generator sets");
  add_param_opts(family, p, true);
  add_budget(family);
  add_out(family);

  std::string suite;
  std::vector<std::string> only;
  auto* verify = app.add_subcommand("verify", "run a packaged verification suite");
  verify->add_option("--suite", suite, "paper-d5q3, small-d3q5, moments-d5q3, properties or family");
  verify->add_option("--only", only, "run just these criteria (A1..A11)")
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  add_out(verify);

  std::string manifest_path;
  auto* replay = app.add_subcommand("replay", "re-run a manifest and compare output hashes");
  replay->add_option("manifest", manifest_path, "a .manifest file")->required();

  std::vector<const char*> cargv;
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Run r;
  r.args.assign(argv.begin() + 1, argv.end());
  r.manifest = write_manifest_file;
  try {
    if (threads > 0) set_thread_count(threads);
    if (*gens) return cmd_gens(r, p, o);
    if (*hat) return cmd_omega_hat(r, p, o);
    if (*graph) return cmd_graph(r, p, o, cells);
    if (*moments) return cmd_moments(r, p, o, kmax, strategy);
    if (*spectrum) return cmd_spectrum(r, p, o, graph_file, dense_cap);
    if (*compare) return cmd_compare(r, mode, file_a, file_b, o, iso);
    if (*family) return cmd_family(r, p, o);
    if (*verify) {
      if (suite.empty() && only.empty()) throw PreconditionError("verify needs --suite or --only");
      return cmd_verify(r, suite, only, o);
    }
    if (*replay) return cmd_replay(manifest_path);
  } catch (const PreconditionError& e) {
    const auto used = app.get_subcommands();
    std::cerr << "error: " << e.what() << "\n\n" << (used.empty() ? app.help() : used.front()->help());
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "bad input: " << e.what() << '\n';
    return kData;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const Error& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kVerify;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::bad_alloc&) {
    std::cerr << "resource limit: out of memory\n";
    return kResource;
  }
  return kUsage;
}

}  // namespace

}  // namespace isocay::cli

int main(int argc, char** argv) {
  return isocay::cli::run(std::vector<std::string>(argv, argv + argc), true);
}
