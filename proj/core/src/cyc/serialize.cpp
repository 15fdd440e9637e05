#include "isocay/cyc/serialize.hpp"

#include <istream>
#include <ostream>

#include "isocay/common/text.hpp"

namespace isocay::cyc {

std::string format_poly(const EPoly& p) {
  std::string out;
  const auto& E = *p.field();
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ';';
    out += E.format(p.coeffs()[i]);
  }
  return out;
}

EPoly parse_poly(std::string_view text, const ff::ExtField& E) {
  std::vector<ff::ExtField::Elem> c;
  if (!text.empty())
    for (auto part : text::split(text, ';')) c.push_back(E.parse_elem(part));
  if (!c.empty() && c.back() == 0) throw FormatError("polynomial has a trailing zero coefficient");
  return EPoly(&E, std::move(c));
}

std::string format_ratfunc(const ERat& a) { return "num=" + format_poly(a.num()) + " den=" + format_poly(a.den()); }

ERat parse_ratfunc(std::string_view line, const ff::ExtField& E) {
  const auto kv = text::parse_kv(line);
  EPoly n = parse_poly(text::require(kv, "num"), E);
  EPoly d = parse_poly(text::require(kv, "den"), E);
  if (d.is_zero()) throw FormatError("rational function with zero denominator");
  ERat r(n, d);
  if (!(r.num() == n) || !(r.den() == d)) throw FormatError("rational function is not in reduced form");
  return r;
}

namespace {
std::string next_line(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("unexpected end of input");
  return line;
}

void check_header(const std::map<std::string, std::string, std::less<>>& kv, std::string_view kind) {
  if (text::require(kv, "version") != "1") throw FormatError("unsupported format version");
  if (text::require(kv, "kind") != kind) throw FormatError("expected kind=" + std::string(kind));
}
}  // namespace

void write_cyc_elem(std::ostream& os, const CycElem& a) {
  os << "version=1 kind=cycelem s=" << a.alg()->s() << ' ' << a.alg()->ext().descriptor() << '\n';
  for (const auto& c : a.coeffs()) os << format_ratfunc(c) << '\n';
}

CycElem read_cyc_elem(std::istream& is) {
  const std::string header = next_line(is);
  const auto kv = text::parse_kv(header);
  check_header(kv, "cycelem");
  auto E = ff::ExtField::parse(header);
  auto alg = CycAlg::create(E, static_cast<std::uint32_t>(text::to_u64(text::require(kv, "s"))));
  std::vector<ERat> c;
  for (std::uint32_t j = 0; j < alg->degree(); ++j) c.push_back(parse_ratfunc(next_line(is), *E));
  return CycElem(alg, std::move(c));
}

void write_global_mat(std::ostream& os, const GlobalMat& m) {
  os << "version=1 kind=globalmat n=" << m.size() << ' ' << m.field()->descriptor() << '\n';
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c) os << format_ratfunc(m.at(r, c)) << '\n';
}

GlobalMat read_global_mat(std::istream& is, std::shared_ptr<const ff::ExtField>& field) {
  const std::string header = next_line(is);
  const auto kv = text::parse_kv(header);
  check_header(kv, "globalmat");
  field = ff::ExtField::parse(header);
  const auto n = static_cast<std::size_t>(text::to_u64(text::require(kv, "n")));
  if (n == 0 || n > 64) throw FormatError("matrix size out of range");
  GlobalMat m(field.get(), n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = parse_ratfunc(next_line(is), *field);
  return m;
}

}  // namespace isocay::cyc
