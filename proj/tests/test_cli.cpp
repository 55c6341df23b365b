#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ceplab/cli.hpp"
#include "ceplab/errors.hpp"

using namespace ceplab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int const code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(std::string const& name) {
  char const* dir = std::getenv("CEPLAB_DATA");
  return std::string(dir ? dir : "tests/data") + "/" + name;
}

std::string slurp(std::filesystem::path const& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t count(std::string const& text, std::string const& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("frame expressions") {
  CHECK(parse_frame_expression("wheel 5").finite().algebra().size() == 64);
  CHECK(parse_frame_expression("star(product(identity 1, identity 1))").finite().algebra().size() == 16);
  CHECK(parse_frame_expression("flat(wheel 5)").finite() == flat(wheel(5)));
  CHECK(parse_frame_expression("neg-op(identity 2)").finite() == negation_frame(2));
  CHECK(parse_frame_expression("sharp(wheel 5)").finite() == sharp(wheel(5)));
  auto const fam = parse_frame_expression("family A x={2}");
  CHECK(fam.symbolic().family() == Family::A);
  CHECK(fam.symbolic().parameter() == ep::singleton(2));
  CHECK(parse_frame_expression("complex " + data("two_worlds.kripke")).finite().apply(Element{2}) == Element{3});
  CHECK(parse_frame_expression("table " + data("identity1.frame")).finite() == identity_frame(1));
  CHECK_THROWS_AS(parse_frame_expression("star(wheel 5"), SyntaxError);
  CHECK_THROWS_AS(parse_frame_expression("cube 3"), SyntaxError);
  CHECK_THROWS_AS(parse_frame_expression("star(family A x=E)"), SyntaxError);
  CHECK_THROWS_AS(parse_frame_expression("wheel 3"), UsageError);
}

TEST_CASE("frame files") {
  auto const k = parse_kripke("worlds: a b\nedge: a b\n");
  CHECK(k.worlds.size() == 2);
  CHECK(k.relation == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK_THROWS_AS(parse_kripke("worlds: a\nedge: a c\n"), ValidationError);
  auto const t = format_frame_table(wheel(5));
  CHECK(parse_frame_table(t) == wheel(5));
  CHECK_THROWS_AS(parse_frame_table("atoms: 1\nf 0x0 0x0\n"), ValidationError);
  CHECK_THROWS_AS(parse_frame_table("atoms: 1\nf 0x0 0x0\nf 0x0 0x1\nf 0x1 0x1\n"), ValidationError);
}

TEST_CASE("element literals") {
  auto const a = make_powerset_algebra(4);
  CHECK(parse_element(a, "0xf") == Element{15});
  CHECK(parse_element(a, "5") == Element{5});
  CHECK(parse_element(a, "<1,0>") == Element{0b0011});
  CHECK(parse_element(a, "<0,1>") == Element{0b1100});
  CHECK_THROWS(parse_element(a, "0x10"));
  CHECK_THROWS(parse_element(make_powerset_algebra(3), "<1,0>"));
}

TEST_CASE("commands") {
  auto const props = run({"check", "props", "--frame", "wheel 5", "--prop", "additive"});
  CHECK(props.code == 0);
  CHECK(props.out.find("holds") != std::string::npos);
  auto const e = run({"eval", "--frame", "family A x={2}", "--identity", "f(-(f(f(f(0))))) = 1"});
  CHECK(e.code == 0);
  CHECK(e.out.find("holds") != std::string::npos);
  auto const fig = run({"verify", "--item", "figure1"});
  CHECK(fig.code == 0);
  CHECK(fig.out.find("4 congruences, 2 non-trivial") != std::string::npos);
  auto const term = run({"eval", "--frame", "wheel 5", "--term", "f(x)", "--assign", "x=0x1"});
  CHECK(term.code == 0);
  CHECK(term.out.find("0x33") != std::string::npos);
  CHECK(run({"cong", "simple", "--frame", "sharp(wheel 5)"}).out.find("simple") != std::string::npos);
  auto const ref = run({"cep", "refute", "--frame", "flat(product(wheel 5, wheel 5))", "--corners", "--at", "<0,1>"});
  CHECK(ref.code == 0);
  CHECK(ref.out.find("0xfff") != std::string::npos);
  CHECK(run({"trace", "replay", "--builtin", "cont", "--x", "{2,4}"}).code == 0);
  CHECK(run({"check", "clause", "--frame", "sharp(wheel 5)", "--psi", "f(x) | f(-x) = 1"}).code == 0);
  CHECK(run({"check", "props", "--frame", "negation 2", "--prop", "monotone", "--expect", "fails"}).code == 0);
  CHECK(run({"check", "props", "--frame", "negation 2", "--prop", "monotone", "--expect", "holds"}).code == 1);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check", "props", "--frame", "wheel 5", "--bogus"}).code == 2);
  CHECK(run({"check", "props", "--frame", "star("}).code == 2);
  CHECK(run({"verify", "--item", "no-such-item"}).code == 2);
  CHECK(run({"cong", "lattice", "--frame", "star(product(wheel 5, identity 1))"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("lattice export") {
  auto const dir = std::filesystem::temp_directory_path() / "ceplab-cli-test";
  std::filesystem::create_directories(dir);
  auto const path = (dir / "diamond.dot").string();
  REQUIRE(run({"export", "dot", "--frame", "identity 2", "--out", path}).code == 0);
  auto const diamond = slurp(path);
  CHECK(diamond.rfind("digraph congruences", 0) == 0);
  CHECK(count(diamond, "->") == 4);
  CHECK(count(diamond, ";\n") >= 4);
  auto const simple = run({"export", "dot", "--frame", "sharp(wheel 5)"});
  CHECK(count(simple.out, "->") == 1);
  CHECK(count(simple.out, "\"0x") == 4);
  auto const lat = congruence_lattice(identity_frame(2));
  auto const text = lattice_dot(lat);
  for (Element x : lat.elements) CHECK(text.find("\"" + to_hex(x) + "\"") != std::string::npos);
}

TEST_CASE("reports are deterministic") {
  auto const dir = std::filesystem::temp_directory_path() / "ceplab-cli-test";
  std::filesystem::create_directories(dir);
  auto const a = (dir / "a.json").string(), b = (dir / "b.json").string();
  std::vector<std::string> const args{"check", "props", "--frame", "family C x={3,5}", "--prop", "subadditive"};
  auto with = [&](std::string const& p) {
    auto v = args;
    v.insert(v.begin(), {"--seed", "5", "--report", p});
    return v;
  };
  REQUIRE(run(with(a)).code == 0);
  REQUIRE(run(with(b)).code == 0);
  CHECK(slurp(a) == slurp(b));
  auto const j = nlohmann::json::parse(slurp(a));
  CHECK(j["seed"] == 5);
  CHECK(j["ok"] == true);
  CHECK(j["results"].is_array());
}
