#include <doctest.h>

#include "support.hpp"
#include "ybsys/error.hpp"
#include "ybsys/structure_file.hpp"

using namespace ybsys;
using test::Q;
using test::S;

namespace {

StructureFile round_trip(const StructureFile& f) { return read_structure_file(write_structure_file(f)); }

const char* kSmall = R"json({
  "scalars": ["s"],
  "spaces": [{"label": "A", "basis": ["1", "x"]}],
  "algebra": {"space": "A",
              "mult": [{"i": 0, "j": 0, "k": 0, "coeff": "1"}, {"i": 0, "j": 1, "k": 1, "coeff": 1},
                       {"i": 1, "j": 0, "k": 1, "coeff": "1"}, {"i": 1, "j": 1, "k": 0, "coeff": "1/(s+1)"}],
              "unit": [{"i": 0, "coeff": "1"}]}
})json";

}  // namespace

TEST_CASE("a hand-written file reads as the worked algebra") {
  StructureFile f = read_structure_file(kSmall);
  REQUIRE(f.algebra);
  CHECK(*f.algebra == ex28_algebra(S));
  CHECK(f.scalars == std::vector<Var>{Var::s});
  CHECK(!f.coalgebra);
  CHECK(f.maps.empty());
}

TEST_CASE("every registry payload survives a round trip") {
  for (const auto& info : list_examples()) {
    CAPTURE(info.name);
    ExampleEntry e = get_example(info.name);
    StructureFile f = to_structure_file(e.payload, info.name);
    CHECK(round_trip(f) == f);
  }
}

TEST_CASE("entwinings and systems are recovered from their files") {
  EntwiningStructure e = ex28_entwining(S, Q);
  StructureFile f = round_trip(to_structure_file(e));
  CHECK(entwining_from_file(f) == e);
  CHECK(f.map("psi") == e.psi);

  WXZSystem sys = wxz_from_entwining(e, 1, S, S, 1);
  CHECK(wxz_from_file(round_trip(to_structure_file(sys))) == sys);
}

TEST_CASE("random symbolic maps survive a round trip") {
  test::Rng rng(503);
  Space v("V", {"a", "b", "c"}), w("W", {"u", "v"});
  for (int trial = 0; trial < 20; ++trial) {
    StructureFile f;
    f.spaces = {v, w};
    f.maps.emplace("m", test::random_map(rng, ProductSpace(v) * ProductSpace(w), ProductSpace(w)));
    f.maps.emplace("k", test::random_map(rng, ProductSpace(), ProductSpace(v)));
    StructureFile back = round_trip(f);
    CHECK(back.map("m") == f.map("m"));
    CHECK(back.map("k") == f.map("k"));
  }
}

TEST_CASE("malformed files are rejected") {
  CHECK_THROWS_AS(read_structure_file("{"), ParseError);
  CHECK_THROWS_AS(read_structure_file("[]"), InvalidArgument);
  CHECK_THROWS_AS(read_structure_file(R"({"bogus": 1})"), InvalidArgument);
  CHECK_THROWS_AS(read_structure_file(R"({"scalars": ["z"]})"), InvalidArgument);
  CHECK_THROWS_AS(read_structure_file(R"({"spaces": [{"label": "A", "basis": ["1"]}, {"label": "A", "basis": ["x"]}]})"),
                  InvalidArgument);
  CHECK_THROWS_AS(read_structure_file(R"({"spaces": [{"label": "A", "basis": ["1", "1"]}]})"), InvalidArgument);

  const std::string head = R"({"scalars": ["s"], "spaces": [{"label": "A", "basis": ["1", "x"]}], "maps": {"m": )";
  auto with_map = [&](const std::string& body) { return head + body + "}}"; };
  CHECK_NOTHROW(read_structure_file(with_map(R"({"domain": ["A"], "codomain": ["A"], "entries": []})")));
  CHECK_THROWS_AS(read_structure_file(with_map(R"({"domain": ["B"], "codomain": ["A"], "entries": []})")),
                  InvalidArgument);
  CHECK_THROWS_AS(
      read_structure_file(with_map(R"({"domain": ["A"], "codomain": ["A"], "entries": [{"row": 2, "col": 0, "coeff": "1"}]})")),
      InvalidArgument);
  CHECK_THROWS_AS(read_structure_file(with_map(
                      R"({"domain": ["A"], "codomain": ["A"], "entries": [{"row": 0, "col": 0, "coeff": "1"}, {"row": 0, "col": 0, "coeff": "2"}]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(
      read_structure_file(with_map(R"({"domain": ["A"], "codomain": ["A"], "entries": [{"row": 0, "col": 0, "coeff": "q"}]})")),
      InvalidArgument);
  CHECK_THROWS_AS(
      read_structure_file(with_map(R"({"domain": ["A"], "codomain": ["A"], "entries": [{"row": 0, "col": 0, "coeff": "1+"}]})")),
      ParseError);
  CHECK_THROWS_AS(
      read_structure_file(with_map(R"({"domain": ["A"], "codomain": ["A"], "entries": [{"row": -1, "col": 0, "coeff": "1"}]})")),
      InvalidArgument);
}

TEST_CASE("missing pieces are reported") {
  StructureFile f = read_structure_file(kSmall);
  CHECK_THROWS_AS(f.map("psi"), InvalidArgument);
  CHECK_THROWS_AS(entwining_from_file(f), InvalidArgument);
  CHECK_THROWS_AS(wxz_from_file(f), InvalidArgument);
}

TEST_CASE("writer refuses two spaces with one label") {
  StructureFile f;
  f.maps.emplace("a", LinMap::identity(ProductSpace(Space("V", {"x"}))));
  f.maps.emplace("b", LinMap::identity(ProductSpace(Space("V", {"y"}))));
  CHECK_THROWS_AS(write_structure_file(f), InvalidArgument);
}
