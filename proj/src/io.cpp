#include "dchar/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace dchar {

InputError::InputError(const std::string& source, std::size_t line, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg) {}

InputError::InputError(const std::string& source, const std::string& msg)
    : std::runtime_error(source + ": " + msg) {}

std::string fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xf];
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<Rat> parse_rational(const std::string& token) {
  if (token.empty()) return std::nullopt;
  auto slash = token.find('/');
  auto valid_int = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  std::string num = token.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : token.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) return std::nullopt;
  if (num[0] == '+') num.erase(0, 1);
  Int n(num), d(den);
  if (d == 0) return std::nullopt;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Tokens split on whitespace, with ':' and '=' as separate tokens.
std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t n = 0;
  while (std::getline(in, raw)) {
    ++n;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::string spaced;
    for (char ch : raw) {
      if (ch == ':' || ch == '=') {
        spaced += ' ';
        spaced += ch;
        spaced += ' ';
      } else {
        spaced += ch;
      }
    }
    std::istringstream ls(spaced);
    Line line{n, {}};
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
  }
  return out;
}

Rat rational_or_throw(const std::string& tok, const std::string& source, std::size_t line) {
  auto r = parse_rational(tok);
  if (!r) throw InputError(source, line, "expected a rational number, got '" + tok + "'");
  return *r;
}

long integer_or_throw(const std::string& tok, const std::string& source, std::size_t line) {
  Rat r = rational_or_throw(tok, source, line);
  if (!is_integral(r) || !r.get_num().fits_slong_p())
    throw InputError(source, line, "expected an integer, got '" + tok + "'");
  return r.get_num().get_si();
}

Ring ring_or_throw(const std::string& tok, const std::string& source, std::size_t line) {
  if (tok == "Z") return Ring::Z;
  if (tok == "Q") return Ring::Q;
  if (tok == "QZ") return Ring::QZ;
  throw InputError(source, line, "unknown ring '" + tok + "' (expected Z, Q or QZ)");
}

bool is_assignment(const Line& l) { return l.tokens.size() == 3 && l.tokens[1] == "="; }

SimplexRef simplex_or_throw(const DeltaComplex& x, const std::string& id,
                            const std::string& source, std::size_t line) {
  auto ref = x.find(id);
  if (!ref) throw InputError(source, line, "unknown simplex '" + id + "'");
  return *ref;
}

struct RawCochain {
  int degree = 0;
  Ring ring = Ring::Q;
  RatVec values;
};

// Header line at lines[begin], entries until `end`.
RawCochain cochain_block(const std::vector<Line>& lines, std::size_t begin, std::size_t end,
                         const std::string& source, const DeltaComplex& x, int max_degree) {
  if (begin >= end) throw InputError(source, "missing 'degree <n> ring <R>' header");
  const Line& h = lines[begin];
  if (h.tokens.size() != 4 || h.tokens[0] != "degree" || h.tokens[2] != "ring")
    throw InputError(source, h.number, "expected 'degree <n> ring <Z|Q|QZ>'");
  RawCochain c;
  long deg = integer_or_throw(h.tokens[1], source, h.number);
  if (deg < 0 || deg > max_degree)
    throw InputError(source, h.number, "degree " + std::to_string(deg) + " out of range");
  c.degree = static_cast<int>(deg);
  c.ring = ring_or_throw(h.tokens[3], source, h.number);
  c.values.assign(c.degree <= x.dimension() ? x.count(c.degree) : 0, Rat(0));
  std::vector<bool> seen(c.values.size(), false);
  for (std::size_t k = begin + 1; k < end; ++k) {
    const Line& l = lines[k];
    if (!is_assignment(l)) throw InputError(source, l.number, "expected '<simplex_id> = <value>'");
    SimplexRef r = simplex_or_throw(x, l.tokens[0], source, l.number);
    if (r.dim != c.degree)
      throw InputError(source, l.number, "simplex '" + l.tokens[0] + "' has dimension " +
                                             std::to_string(r.dim) + ", expected " +
                                             std::to_string(c.degree));
    if (seen[r.index]) throw InputError(source, l.number, "duplicate value for '" + l.tokens[0] + "'");
    seen[r.index] = true;
    Rat v = rational_or_throw(l.tokens[2], source, l.number);
    if (c.ring == Ring::Z && !is_integral(v))
      throw InputError(source, l.number, "non-integral value in a Z-cochain");
    c.values[r.index] = c.ring == Ring::QZ ? frac(v) : v;
  }
  return c;
}

}  // namespace

DeltaComplex parse_complex(const std::string& text, const std::string& source) {
  DeltaComplex x;
  for (const auto& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] != "simplex" || t.size() < 2 || (t.size() > 2 && t[2] != ":") || t.size() == 3)
      throw InputError(source, l.number, "expected 'simplex <id> [: <face_id> ...]'");
    std::vector<std::string> faces(t.begin() + std::min<std::size_t>(t.size(), 3), t.end());
    try {
      x.add_simplex(t[1], faces);
    } catch (const std::exception& e) {
      throw InputError(source, l.number, e.what());
    }
  }
  if (x.dimension() < 0) throw InputError(source, "complex has no simplices");
  try {
    x.validate();
  } catch (const std::exception& e) {
    throw InputError(source, e.what());
  }
  return x;
}

std::string format_complex(const DeltaComplex& x) {
  std::string out;
  for (int n = 0; n <= x.dimension(); ++n)
    for (std::size_t i = 0; i < x.count(n); ++i) {
      out += "simplex " + x.id(n, i);
      if (n > 0) {
        out += " :";
        for (std::size_t f : x.faces(n, i)) out += " " + x.id(n - 1, f);
      }
      out += "\n";
    }
  return out;
}

Cochain parse_cochain(const std::string& text, const std::string& source, ComplexPtr x) {
  auto lines = tokenize(text);
  RawCochain c = cochain_block(lines, 0, lines.size(), source, *x, x->dimension());
  return Cochain::make(std::move(x), c.degree, c.ring, std::move(c.values));
}

std::string format_cochain(const Cochain& c) {
  std::string out = "degree " + std::to_string(c.degree) + " ring " + ring_name(c.ring) + "\n";
  for (std::size_t i = 0; i < c.values.size(); ++i)
    if (sgn(c.values[i]) != 0) out += c.complex->id(c.degree, i) + " = " + c.values[i].get_str() + "\n";
  return out;
}

Chain parse_chain(const std::string& text, const std::string& source, const DeltaComplex& x) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "chain")
    throw InputError(source, lines.empty() ? 1 : lines[0].number, "expected 'chain <n>'");
  long deg = integer_or_throw(lines[0].tokens[1], source, lines[0].number);
  if (deg < 0 || deg > x.dimension())
    throw InputError(source, lines[0].number, "chain degree out of range");
  Chain z{static_cast<int>(deg), IntVec(x.count(static_cast<int>(deg)))};
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (!is_assignment(l)) throw InputError(source, l.number, "expected '<simplex_id> = <integer>'");
    SimplexRef r = simplex_or_throw(x, l.tokens[0], source, l.number);
    if (r.dim != z.degree) throw InputError(source, l.number, "simplex dimension mismatch");
    z.coeffs[r.index] = integer_or_throw(l.tokens[2], source, l.number);
  }
  return z;
}

FinGroupAction parse_action(const std::string& text, const std::string& source, ComplexPtr x) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "group")
    throw InputError(source, lines.empty() ? 1 : lines[0].number, "expected 'group <n>'");
  long n = integer_or_throw(lines[0].tokens[1], source, lines[0].number);
  if (n < 1) throw InputError(source, lines[0].number, "group order must be positive");
  const std::size_t order = static_cast<std::size_t>(n);
  std::vector<std::vector<long>> mul(order, std::vector<long>(order, -1));
  for (std::size_t j = 0; j < order; ++j) mul[0][j] = mul[j][0] = static_cast<long>(j);
  std::vector<std::vector<std::vector<std::size_t>>> perm(order);
  for (auto& p : perm)
    for (int d = 0; d <= x->dimension(); ++d) {
      p.emplace_back(x->count(d));
      for (std::size_t i = 0; i < x->count(d); ++i) p.back()[i] = i;
    }
  auto element = [&](const std::string& tok, std::size_t line) {
    long g = integer_or_throw(tok, source, line);
    if (g < 0 || g >= n) throw InputError(source, line, "group element " + tok + " out of range");
    return static_cast<std::size_t>(g);
  };
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const auto& t = l.tokens;
    if (t[0] == "mul" && t.size() == 5 && t[3] == "=") {
      std::size_t a = element(t[1], l.number), b = element(t[2], l.number),
                  c = element(t[4], l.number);
      if ((a == 0 || b == 0) && mul[a][b] != static_cast<long>(c))
        throw InputError(source, l.number, "element 0 must be the identity");
      mul[a][b] = static_cast<long>(c);
    } else if (t[0] == "act" && t.size() == 5 && t[3] == "=") {
      std::size_t g = element(t[1], l.number);
      SimplexRef from = simplex_or_throw(*x, t[2], source, l.number);
      SimplexRef to = simplex_or_throw(*x, t[4], source, l.number);
      if (from.dim != to.dim)
        throw InputError(source, l.number, "action must preserve dimension");
      perm[g][from.dim][from.index] = to.index;
    } else {
      throw InputError(source, l.number, "expected 'mul <i> <j> = <k>' or 'act <g> <id> = <id>'");
    }
  }
  std::vector<std::vector<std::size_t>> table(order, std::vector<std::size_t>(order));
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      if (mul[a][b] < 0)
        throw InputError(source, "missing product 'mul " + std::to_string(a) + " " +
                                     std::to_string(b) + "'");
      table[a][b] = static_cast<std::size_t>(mul[a][b]);
    }
  try {
    return FinGroupAction(std::move(table), std::move(x), std::move(perm));
  } catch (const ActionError& e) {
    throw InputError(source, e.what());
  }
}

CoverFile parse_cover(const std::string& text, const std::string& source, ComplexPtr x) {
  std::vector<std::pair<std::string, std::vector<std::string>>> elements;
  std::map<std::string, std::string> tau;
  std::vector<std::tuple<std::size_t, std::string, std::string, Rat>> weights;
  for (const auto& l : tokenize(text)) {
    const auto& t = l.tokens;
    if (t[0] == "element" && t.size() >= 4 && t[2] == ":") {
      std::vector<std::string> ids(t.begin() + 3, t.end());
      for (const auto& id : ids) simplex_or_throw(*x, id, source, l.number);
      elements.emplace_back(t[1], ids);
    } else if (t[0] == "tau" && t.size() == 4 && t[2] == "=") {
      simplex_or_throw(*x, t[1], source, l.number);
      if (!tau.emplace(t[1], t[3]).second)
        throw InputError(source, l.number, "duplicate tau for '" + t[1] + "'");
    } else if (t[0] == "weight" && t.size() == 5 && t[3] == "=") {
      weights.emplace_back(l.number, t[1], t[2], rational_or_throw(t[4], source, l.number));
    } else {
      throw InputError(source, l.number,
                       "expected 'element <name> : <ids>', 'tau <id> = <name>' or "
                       "'weight <vertex> <element> = <r>'");
    }
  }
  CoverFile out;
  try {
    out.cover = Cover::make(x, elements, tau);
  } catch (const CoverError& e) {
    throw InputError(source, e.what());
  }
  if (!weights.empty()) {
    PartitionOfUnity pou;
    pou.weight.assign(x->count(0), std::vector<Rat>(out.cover.size()));
    for (const auto& [line, v, e, w] : weights) {
      SimplexRef r = simplex_or_throw(*x, v, source, line);
      if (r.dim != 0) throw InputError(source, line, "weights are given on vertices");
      auto idx = out.cover.element(e);
      if (!idx) throw InputError(source, line, "unknown cover element '" + e + "'");
      pou.weight[r.index][*idx] = w;
    }
    try {
      pou.validate(out.cover);
    } catch (const CoverError& e) {
      throw InputError(source, e.what());
    }
    out.partition = std::move(pou);
  }
  return out;
}

std::optional<std::string> referenced_complex(const std::string& text) {
  auto lines = tokenize(text);
  if (lines.empty()) return std::nullopt;
  const auto& t = lines[0].tokens;
  if ((t[0] == "gauge" || t[0] == "complex") && t.size() == 2) return t[1];
  return std::nullopt;
}

GaugeFile parse_gauge(const std::string& text, const std::string& source, ComplexPtr x) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].tokens[0] != "gauge" || lines[0].tokens.size() > 2)
    throw InputError(source, lines.empty() ? 1 : lines[0].number, "expected 'gauge [complex]'");
  if (x->dimension() < 1) throw InputError(source, "gauge fields need a complex with edges");
  RatVec a(x->count(1));
  std::vector<std::pair<std::string, Rat>> descent;
  bool in_descent = false;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.tokens.size() == 1 && l.tokens[0] == "descent") {
      if (in_descent) throw InputError(source, l.number, "duplicate 'descent' block");
      in_descent = true;
      continue;
    }
    if (!is_assignment(l)) throw InputError(source, l.number, "expected '<id> = <rational>'");
    Rat v = rational_or_throw(l.tokens[2], source, l.number);
    if (in_descent) {
      descent.emplace_back(l.tokens[0], v);
      continue;
    }
    SimplexRef r = simplex_or_throw(*x, l.tokens[0], source, l.number);
    if (r.dim != 1) throw InputError(source, l.number, "'" + l.tokens[0] + "' is not an edge");
    if (sgn(v) < 0 || v >= 1) throw InputError(source, l.number, "gauge values lie in [0, 1)");
    a[r.index] = v;
  }
  return GaugeFile{GaugeField::make(std::move(x), std::move(a)), std::move(descent)};
}

EquivariantGaugeField resolve_descent(const GaugeFile& g, const Nerve& nerve,
                                      const std::string& source) {
  const DeltaComplex& g1 = nerve.level(1);
  RatVec t(g1.count(0));
  for (const auto& [id, v] : g.descent) {
    auto r = g1.find(id);
    if (!r || r->dim != 0) throw InputError(source, "unknown nerve vertex '" + id + "'");
    t[r->index] = frac(v);
  }
  return EquivariantGaugeField{g.field, std::move(t)};
}

DCTriple parse_dc_triple(const std::string& text, const std::string& source, ComplexPtr x, int s) {
  auto lines = tokenize(text);
  std::size_t k = 0;
  if (k < lines.size() && lines[k].tokens[0] == "complex") ++k;
  std::map<std::string, std::pair<std::size_t, std::size_t>> blocks;
  std::string current;
  for (; k < lines.size(); ++k) {
    const auto& t = lines[k].tokens;
    if (t.size() == 2 && t[1] == ":" && (t[0] == "c" || t[0] == "h" || t[0] == "omega")) {
      if (blocks.count(t[0])) throw InputError(source, lines[k].number, "duplicate block " + t[0]);
      if (!current.empty()) blocks[current].second = k;
      current = t[0];
      blocks[current] = {k + 1, lines.size()};
    } else if (current.empty()) {
      throw InputError(source, lines[k].number, "expected a 'c:', 'h:' or 'omega:' block");
    }
  }
  if (!blocks.count("c")) throw InputError(source, "missing 'c:' block");
  const int top = x->dimension() + 1;
  auto [cb, ce] = blocks["c"];
  RawCochain c = cochain_block(lines, cb, ce, source, *x, top);
  if (c.ring != Ring::Z) throw InputError(source, lines[cb].number, "the c block must be ring Z");
  DCTriple t{c.degree, c.values, {}, {}};
  auto other = [&](const std::string& name, int degree) -> RatVec {
    std::size_t n = degree >= 0 && degree <= x->dimension() ? x->count(degree) : 0;
    if (!blocks.count(name)) return RatVec(n);
    auto [b, e] = blocks[name];
    RawCochain r = cochain_block(lines, b, e, source, *x, top);
    if (r.degree != degree)
      throw InputError(source, lines[b].number,
                       "the " + name + " block must have degree " + std::to_string(degree));
    if (r.ring == Ring::QZ)
      throw InputError(source, lines[b].number, "the " + name + " block must be ring Q or Z");
    return r.values;
  };
  t.h = other("h", c.degree - 1);
  if (c.degree >= s) {
    t.omega = other("omega", c.degree);
  } else if (blocks.count("omega")) {
    throw InputError(source, "no omega component below degree " + std::to_string(s));
  }
  return t;
}

std::string format_vector(const RatVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].get_str();
  return out + ")";
}

void Report::add(const std::string& key, const std::string& value) {
  lines_.emplace_back(key, value);
}

void Report::add_input(const std::string& role, const std::string& path,
                       const std::string& contents) {
  add("input." + role, path + " fnv1a64:" + fnv1a64(contents));
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + " = " + v + "\n";
  return out;
}

}  // namespace dchar
