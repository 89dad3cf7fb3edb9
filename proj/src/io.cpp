#include "comass/io.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace comass {

namespace {

[[noreturn]] void bad_line(int line_no, const std::string& what) {
  throw MalformedInput("line " + std::to_string(line_no) + ": " + what);
}

bool skip_line(const std::string& line) {
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c)))
      return c == '#';
  return true;
}

/// Tokenized significant lines with their 1-based line numbers.
std::vector<std::pair<int, std::vector<std::string>>> tokenize(
    std::istream& in) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    out.emplace_back(line_no, std::move(toks));
  }
  return out;
}

bool parse_int(const std::string& s, long long& out) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  try {
    out = std::stoll(s);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int parse_vertex(const std::string& s, int line_no) {
  long long v;
  if (!parse_int(s, v) || v < 0 || v > 1'000'000'000)
    bad_line(line_no, "bad vertex label '" + s + "'");
  return static_cast<int>(v);
}

Integer parse_integer_tok(const std::string& s, int line_no) {
  if (s.empty()) bad_line(line_no, "empty integer");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) bad_line(line_no, "bad integer '" + s + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      bad_line(line_no, "bad integer '" + s + "'");
  return Integer(s);
}

Rational parse_rational_at(const std::string& s, int line_no) {
  std::size_t slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(parse_integer_tok(s, line_no));
  Integer num = parse_integer_tok(s.substr(0, slash), line_no);
  Integer den = parse_integer_tok(s.substr(slash + 1), line_no);
  if (den <= 0) bad_line(line_no, "denominator must be positive");
  return Rational(num) / Rational(den);
}

}  // namespace

Rational parse_rational(const std::string& s) {
  return parse_rational_at(s, 0);
}

std::string to_string(const Rational& q) {
  if (is_integral(q)) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

SimplicialComplex read_complex(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw MalformedInput("line 1: missing 'dim' header");
  auto& [hline, htoks] = lines.front();
  long long m;
  if (htoks.size() != 2 || htoks[0] != "dim" || !parse_int(htoks[1], m) ||
      m < 0)
    bad_line(hline, "expected header 'dim <m>'");
  Rational scale = 1;
  std::vector<Simplex> maximal;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [ln, toks] = lines[i];
    if (toks[0] == "scale") {
      if (i != 1 || toks.size() != 2)
        bad_line(ln, "'scale <p>/<q>' must directly follow the header");
      scale = parse_rational_at(toks[1], ln);
      if (scale <= 0) bad_line(ln, "scale must be positive");
      continue;
    }
    if (toks[0] != "s") bad_line(ln, "expected simplex line 's v0 v1 ...'");
    if (toks.size() < 2) bad_line(ln, "empty simplex");
    Simplex s;
    for (std::size_t j = 1; j < toks.size(); ++j)
      s.push_back(parse_vertex(toks[j], ln));
    for (std::size_t j = 1; j < s.size(); ++j)
      if (s[j] <= s[j - 1])
        bad_line(ln, "vertices must be strictly increasing");
    if (static_cast<long long>(s.size()) > m + 1)
      bad_line(ln, "simplex exceeds declared dimension");
    maximal.push_back(std::move(s));
  }
  SimplicialComplex x;
  try {
    x = SimplicialComplex::from_maximal(maximal);
  } catch (const Error& e) {
    throw MalformedInput(std::string("complex file: ") + e.what());
  }
  if (x.dim() > m)
    throw MalformedInput("complex file: dimension exceeds declared dim");
  x.set_edge_scale(scale);
  return x;
}

void write_complex(std::ostream& out, const SimplicialComplex& x) {
  out << "dim " << x.dim() << "\n";
  if (x.edge_scale() != 1) out << "scale " << to_string(x.edge_scale()) << "\n";
  // maximal = simplices that are a facet of nothing
  for (int k = 0; k <= x.dim(); ++k) {
    std::set<Simplex> facets;
    if (k < x.dim())
      for (const Simplex& t : x.simplices(k + 1))
        for (const Simplex& f : facets_of(t)) facets.insert(f);
    for (const Simplex& s : x.simplices(k)) {
      if (facets.count(s)) continue;
      out << "s";
      for (int v : s) out << " " << v;
      out << "\n";
    }
  }
}

Chain read_chain(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw MalformedInput("line 1: missing 'deg' header");
  auto& [hline, htoks] = lines.front();
  long long k;
  if (htoks.size() != 2 || htoks[0] != "deg" || !parse_int(htoks[1], k) ||
      k < 0)
    bad_line(hline, "expected header 'deg <k>'");
  Chain z(static_cast<int>(k));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [ln, toks] = lines[i];
    if (toks[0] != "c" || static_cast<long long>(toks.size()) != k + 3)
      bad_line(ln, "expected 'c v0 ... vk <coeff>' with " +
                       std::to_string(k + 1) + " vertices");
    Simplex s;
    for (long long j = 1; j <= k + 1; ++j)
      s.push_back(parse_vertex(toks[static_cast<std::size_t>(j)], ln));
    for (std::size_t j = 1; j < s.size(); ++j)
      if (s[j] <= s[j - 1])
        bad_line(ln, "vertices must be strictly increasing");
    z.add_term(s, parse_rational_at(toks.back(), ln));
  }
  return z;
}

void write_chain(std::ostream& out, const Chain& z) {
  out << "deg " << z.degree << "\n";
  for (const auto& [s, c] : z.coeffs) {
    out << "c";
    for (int v : s) out << " " << v;
    out << " " << to_string(c) << "\n";
  }
}

std::map<int, int> read_vertex_map(std::istream& in) {
  std::map<int, int> f;
  for (auto& [ln, toks] : tokenize(in)) {
    if (toks.size() != 3 || toks[1] != "->")
      bad_line(ln, "expected '<domain vertex> -> <codomain vertex>'");
    int a = parse_vertex(toks[0], ln), b = parse_vertex(toks[2], ln);
    if (f.count(a)) bad_line(ln, "repeated domain vertex");
    f[a] = b;
  }
  return f;
}

void write_vertex_map(std::ostream& out, const std::map<int, int>& f) {
  for (const auto& [a, b] : f) out << a << " -> " << b << "\n";
}

LatticeBasis read_lattice(std::istream& in) {
  auto lines = tokenize(in);
  if (lines.empty()) throw MalformedInput("line 1: missing 'N ... vecs ...'");
  auto& [hline, htoks] = lines.front();
  long long n, rows;
  if (htoks.size() != 4 || htoks[0] != "N" || htoks[2] != "vecs" ||
      !parse_int(htoks[1], n) || !parse_int(htoks[3], rows) || n < 1 ||
      rows < 1)
    bad_line(hline, "expected header 'N <N> vecs <M+1>'");
  LatticeBasis basis;
  basis.N = static_cast<int>(n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto& [ln, toks] = lines[i];
    if (static_cast<long long>(toks.size()) != n)
      bad_line(ln, "expected " + std::to_string(n) + " integers");
    std::vector<Integer> row;
    for (const std::string& t : toks) row.push_back(parse_integer_tok(t, ln));
    basis.vectors.push_back(std::move(row));
  }
  if (static_cast<long long>(basis.vectors.size()) != rows)
    throw MalformedInput("lattice file: row count does not match header");
  return basis;
}

void write_lattice(std::ostream& out, const LatticeBasis& basis) {
  out << "N " << basis.N << " vecs " << basis.vectors.size() << "\n";
  for (const auto& row : basis.vectors) {
    for (std::size_t j = 0; j < row.size(); ++j)
      out << (j ? " " : "") << row[j].str();
    out << "\n";
  }
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open file: " + path);
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw MalformedInput("cannot open file for writing: " + path);
  return out;
}

}  // namespace

SimplicialComplex read_complex_file(const std::string& path) {
  auto in = open_in(path);
  return read_complex(in);
}
void write_complex_file(const std::string& path, const SimplicialComplex& x) {
  auto out = open_out(path);
  write_complex(out, x);
}
Chain read_chain_file(const std::string& path) {
  auto in = open_in(path);
  return read_chain(in);
}
void write_chain_file(const std::string& path, const Chain& z) {
  auto out = open_out(path);
  write_chain(out, z);
}
std::map<int, int> read_vertex_map_file(const std::string& path) {
  auto in = open_in(path);
  return read_vertex_map(in);
}
void write_vertex_map_file(const std::string& path,
                           const std::map<int, int>& f) {
  auto out = open_out(path);
  write_vertex_map(out, f);
}
LatticeBasis read_lattice_file(const std::string& path) {
  auto in = open_in(path);
  return read_lattice(in);
}

}  // namespace comass
