#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "ceplab/cli.hpp"
#include "ceplab/errors.hpp"

namespace ceplab {

namespace {

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> words(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  Frame parse() {
    skip_ws();
    if (text_.substr(pos_).starts_with("family")) return family();
    FiniteFrame f = finite();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected input");
    return f;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const { throw SyntaxError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_ws();
    std::size_t const start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  unsigned number() {
    skip_ws();
    std::size_t const start = pos_;
    unsigned v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(text_[pos_++] - '0');
      if (v > 1000) fail("number too large");
    }
    if (start == pos_) fail("expected a number");
    return v;
  }

  std::string path() {
    skip_ws();
    std::size_t const start = pos_;
    while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
    std::string p(trim(text_.substr(start, pos_ - start)));
    if (p.empty()) fail("expected a file path");
    return p;
  }

  Frame family() {
    word();
    std::string const name = word();
    Family fam;
    if (name == "A") fam = Family::A;
    else if (name == "B") fam = Family::B;
    else if (name == "C") fam = Family::C;
    else fail("family must be A, B or C");
    skip_ws();
    if (!text_.substr(pos_).starts_with("x=")) fail("expected 'x='");
    pos_ += 2;
    return family_frame(fam, parse_epset(trim(text_.substr(pos_))));
  }

  FiniteFrame finite() {
    std::size_t const at = (skip_ws(), pos_);
    std::string const head = word();
    if (head == "wheel") return wheel(number());
    if (head == "identity") return identity_frame(number());
    if (head == "negation") return negation_frame(number());
    if (head == "complex") return complex_algebra(parse_kripke(read_file(path())));
    if (head == "table") return parse_frame_table(read_file(path()));
    if (head == "family") fail("a family frame can only be used on its own");
    if (head == "product") {
      expect('(');
      FiniteFrame l = finite();
      expect(',');
      FiniteFrame r = finite();
      expect(')');
      return frame_product(l, r);
    }
    static std::map<std::string, FiniteFrame (*)(FiniteFrame const&)> const unary{
        {"star", &star}, {"sharp", &sharp}, {"flat", &flat}, {"neg-op", &negated_operation}};
    auto it = unary.find(head);
    if (it == unary.end()) {
      pos_ = at;
      fail("unknown frame constructor '" + head + "'");
    }
    expect('(');
    FiniteFrame inner = finite();
    expect(')');
    return it->second(inner);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Frame parse_frame_expression(std::string_view text) { return ExprParser(text).parse(); }

KripkeFrame parse_kripke(std::string_view text) {
  KripkeFrame k;
  std::map<std::string, std::size_t> index;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  bool have_worlds = false;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> w = words(line);
    if (w.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (!have_worlds) {
      if (w[0] != "worlds:") throw ValidationError(where + "expected 'worlds:'");
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (!index.emplace(w[i], k.worlds.size()).second) throw ValidationError(where + "duplicate world '" + w[i] + "'");
        k.worlds.push_back(w[i]);
      }
      if (k.worlds.empty()) throw ValidationError(where + "no worlds");
      have_worlds = true;
      continue;
    }
    if (w[0] != "edge:" || w.size() != 3) throw ValidationError(where + "expected 'edge: <world> <world>'");
    auto a = index.find(w[1]);
    auto b = index.find(w[2]);
    if (a == index.end() || b == index.end()) throw ValidationError(where + "unknown world");
    k.relation.emplace_back(a->second, b->second);
  }
  if (!have_worlds) throw ValidationError("missing 'worlds:' line");
  return k;
}

namespace {

std::uint32_t parse_hex(std::string const& s, std::string const& where) {
  if (!s.starts_with("0x") || s.size() == 2 || s.size() > 10 ||
      !std::all_of(s.begin() + 2, s.end(), [](char c) { return std::isxdigit(static_cast<unsigned char>(c)); })) {
    throw ValidationError(where + "expected a hex value like 0x1f, got '" + s + "'");
  }
  return static_cast<std::uint32_t>(std::stoul(s.substr(2), nullptr, 16));
}

}  // namespace

FiniteFrame parse_frame_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  std::optional<FiniteAlgebra> alg;
  std::map<std::uint32_t, std::uint32_t> entries;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::vector<std::string> w = words(line);
    if (w.empty()) continue;
    auto where = "line " + std::to_string(line_no) + ": ";
    if (!alg) {
      if (w.size() != 2 || w[0] != "atoms:" || !std::all_of(w[1].begin(), w[1].end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) || w[1].size() > 2) {
        throw ValidationError(where + "expected 'atoms: <n>'");
      }
      alg = make_powerset_algebra(static_cast<unsigned>(std::stoul(w[1])));
      continue;
    }
    if (w.size() != 3 || w[0] != "f") throw ValidationError(where + "expected 'f <hex> <hex>'");
    std::uint32_t const x = parse_hex(w[1], where);
    if (!entries.emplace(x, parse_hex(w[2], where)).second) {
      throw ValidationError(where + "duplicate entry for " + w[1]);
    }
  }
  if (!alg) throw ValidationError("missing 'atoms:' line");
  return finite_frame(*alg, entries);
}

std::string format_frame_table(FiniteFrame const& frame) {
  std::ostringstream out;
  out << "atoms: " << frame.algebra().atom_count() << '\n';
  for (std::uint32_t x = 0; x < frame.algebra().size(); ++x) {
    out << "f " << to_hex(Element{x}) << ' ' << to_hex(frame.apply(Element{x})) << '\n';
  }
  return out.str();
}

Element parse_element(FiniteAlgebra const& alg, std::string_view text) {
  std::string const s(trim(text));
  std::uint64_t value = 0;
  if (s.size() == 5 && s[0] == '<' && s[2] == ',' && s[4] == '>' && (s[1] == '0' || s[1] == '1') &&
      (s[3] == '0' || s[3] == '1')) {
    if (alg.atom_count() % 2 != 0) throw UsageError("corner notation needs an even number of atoms");
    FiniteAlgebra const factor = make_powerset_algebra(alg.atom_count() / 2);
    Corners const c = square_corners(factor);
    Element const table[2][2] = {{c.zero_zero, c.zero_one}, {c.one_zero, c.one_one}};
    return table[s[1] - '0'][s[3] - '0'];
  }
  try {
    std::size_t used = 0;
    if (s.starts_with("0x")) {
      value = std::stoull(s.substr(2), &used, 16);
      used += 2;
    } else {
      value = std::stoull(s, &used, 10);
    }
    if (used != s.size()) throw std::invalid_argument(s);
  } catch (std::logic_error const&) {
    throw UsageError("malformed element '" + s + "'");
  }
  if (value >= alg.size()) throw UsageError("element '" + s + "' is outside the carrier");
  return Element{static_cast<std::uint32_t>(value)};
}

std::string lattice_dot(CongruenceLattice const& lattice) {
  std::ostringstream out;
  out << "digraph congruences {\n  rankdir=BT;\n";
  for (Element e : lattice.elements) out << "  \"" << to_hex(e) << "\";\n";
  for (auto const& [lower, upper] : lattice.covers()) {
    out << "  \"" << to_hex(lower) << "\" -> \"" << to_hex(upper) << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace ceplab
