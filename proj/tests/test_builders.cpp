#include <catch_amalgamated.hpp>

#include <nlohmann/json.hpp>

#include "ample/builders.hpp"
#include "ample/report.hpp"
#include "support.hpp"

using namespace ample;
using testing::make;

namespace {

ExactElement delta(const GroupoidPtr& g, ArrowId x, const Cyclotomic& c = Cyclotomic(1)) {
  ExactElement e = ExactElement::zero(g);
  e[x] = c;
  return e;
}

}  // namespace

TEST_CASE("builder sizes and numbering") {
  const auto p3 = make("pair(3)");
  CHECK(p3->size() == 9);
  CHECK(p3->unit_count() == 3);
  // (i, j) = 3i + j goes from j to i.
  CHECK(p3->src(5) == 8);
  CHECK(p3->rng(5) == 4);
  CHECK(p3->comp(5, 6) == 3);

  const auto z4 = make("group(cyclic 4)");
  CHECK(z4->size() == 4);
  CHECK(z4->unit_count() == 1);
  CHECK(z4->comp(3, 2) == 1);

  const auto s3 = make("group(sym 3)");
  // Lexicographic permutations: 1 = [0,2,1], 2 = [1,0,2], 3 = [1,2,0], 4 = [2,0,1].
  CHECK(s3->comp(1, 2) == 4);
  CHECK(s3->comp(2, 1) == 3);

  const auto act = make("action(cyclic 3, 3, [[1,2,0]])");
  // (x, g) = 3x + g goes from (x, 0) to (g.x, 0).
  CHECK(act->src(5) == 3);
  CHECK(act->rng(5) == 0);
  CHECK(act->comp(1, 5) == 3 + 0);  // (0,1) o (1,2) = (1, 0)

  const auto u = make("union(pair(2), group(cyclic 3))");
  CHECK(u->size() == 7);
  CHECK(u->comp(5, 6) == 4);

  const auto pr = make("product(pair(2), group(cyclic 3))");
  CHECK(pr->size() == 12);
  CHECK(pr->unit_count() == 2);
  CHECK(pr->comp(1 * 3 + 1, 2 * 3 + 2) == 0 * 3 + 0);
}

TEST_CASE("action builder checks the action") {
  CHECK_THROWS_AS(build(parse_spec("action(cyclic 3, 3, [[1,0,2]])")), NotAGroupAction);
  CHECK_THROWS_AS(build(parse_spec("action(cyclic 2, 2, [[1,1]])")), NotAGroupAction);
  CHECK_THROWS_AS(build(parse_spec("action(sym 3, 3, [[1,0,2]])")), NotAGroupAction);
  CHECK_NOTHROW(build(parse_spec("action(group(sym 3), 3, [[1,0,2],[1,2,0]])")));
  CHECK_NOTHROW(build(parse_spec("action(table [[0,1],[1,0]], 2, [[0,1],[1,0]])")));
}

TEST_CASE("group tables are checked") {
  CHECK_THROWS_AS(build(parse_spec("group(table [[0,1],[1,1]])")), MalformedTable);
  CHECK_THROWS_AS(build(parse_spec("group(table [[0,1],[1]])")), MalformedTable);
  // The identity need not be element 0.
  const auto g = make("group(table [[1,0],[0,1]])");
  CHECK(g->units() == std::vector<ArrowId>{1});
  CHECK(validate(*g).ok());
}

TEST_CASE("explicit tables are taken verbatim and size limits apply") {
  const auto g = make("explicit{arrows: 1, units: [0], src: [0], rng: [0], inv: [0], comp: [[0,0,0]]}");
  CHECK(g->size() == 1);
  CHECK(validate(*g).ok());
  CHECK_THROWS_AS(build(parse_spec("explicit{arrows: 2, units: [0], src: [0], rng: [0], inv: [0], comp: []}")),
                  MalformedTable);
  CHECK_THROWS_AS(build(parse_spec("explicit{arrows: 1, units: [3], src: [0], rng: [0], inv: [0], comp: []}")),
                  MalformedTable);
  CHECK_THROWS_AS(build(parse_spec("product(pair(64), pair(2))")), SizeLimitExceeded);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_spec("# comment\npair(3");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
  CHECK_THROWS_AS(parse_spec("pear(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("pair(3) pair(2)"), ParseError);
  CHECK_THROWS_AS(parse_spec("group(dihedral 4)"), ParseError);
  CHECK_THROWS_AS(parse_spec("explicit{arrows: 1, colour: []}"), ParseError);
  CHECK_THROWS_AS(parse_spec("pair(0)"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
}

TEST_CASE("print(parse(x)) is canonical on a corpus of specs") {
  const std::vector<std::pair<std::string, std::string>> corpus = {
      {"pair(3)", "pair(3)"},
      {"  pair ( 2 )  ", "pair(2)"},
      {"# leading comment\npair(1)", "pair(1)"},
      {"group(cyclic 4)", "group(cyclic 4)"},
      {"group( cyclic   12 )", "group(cyclic 12)"},
      {"group(sym 3)", "group(sym 3)"},
      {"group(table [[0,1],[1,0]])", "group(table [[0,1],[1,0]])"},
      {"group(table [ [0, 1, 2], [1, 2, 0], [2, 0, 1] ])", "group(table [[0,1,2],[1,2,0],[2,0,1]])"},
      {"action(cyclic 2, 2, [[1,0]])", "action(cyclic 2, 2, [[1,0]])"},
      {"action(group(cyclic 3), 3, [[1,2,0]])", "action(cyclic 3, 3, [[1,2,0]])"},
      {"action(sym 3,3,[[1,0,2],[1,2,0]])", "action(sym 3, 3, [[1,0,2],[1,2,0]])"},
      {"action(table [[0,1],[1,0]], 2, [[0,1],[1,0]])", "action(table [[0,1],[1,0]], 2, [[0,1],[1,0]])"},
      {"union(pair(2),pair(1))", "union(pair(2), pair(1))"},
      {"union(pair(2), union(group(cyclic 2), pair(1)))", "union(pair(2), union(group(cyclic 2), pair(1)))"},
      {"product(pair(2),group(cyclic 2))", "product(pair(2), group(cyclic 2))"},
      {"product(union(pair(1),pair(1)), group(sym 3))", "product(union(pair(1), pair(1)), group(sym 3))"},
      {"explicit{arrows:1,units:[0],src:[0],rng:[0],inv:[0],comp:[[0,0,0]]}",
       "explicit{arrows: 1, units: [0], src: [0], rng: [0], inv: [0], comp: [[0,0,0]]}"},
      {"explicit{\n  comp: [[1,1,0],[0,0,0],[0,1,1],[1,0,1]],\n  arrows: 2, units: [0],\n  src: [0,0], rng: [0,0], inv: [0,1]\n}",
       "explicit{arrows: 2, units: [0], src: [0,0], rng: [0,0], inv: [0,1], comp: [[0,0,0],[0,1,1],[1,0,1],[1,1,0]]}"},
      {"pair(3) # trailing comment", "pair(3)"},
      {"union(\n  # first\n  pair(2),\n  # second\n  group(cyclic 3)\n)", "union(pair(2), group(cyclic 3))"},
  };
  REQUIRE(corpus.size() == 20);
  for (const auto& [input, canonical] : corpus) {
    INFO(input);
    const std::string printed = print_spec(parse_spec(input));
    CHECK(printed == canonical);
    CHECK(print_spec(parse_spec(printed)) == printed);
    CHECK(validate(build(parse_spec(input))).ok());
  }
}

TEST_CASE("element expressions") {
  const auto p2 = make("pair(2)");
  CHECK(parse_element("ind([0,3])", p2) == indicator<Cyclotomic>(p2, Bisection::units(*p2)));
  // Phase 1/2 at unit 0 on the swap: arrow 1 has range 0.
  const ExactElement swap = parse_element("phase(0:1/2)*ind([1,2])", p2);
  CHECK(swap == delta(p2, 1, Cyclotomic(-1)) + delta(p2, 2));
  CHECK(parse_element("sum(ind([0]), ind([3]))", p2) == parse_element("ind([0,3])", p2));
  CHECK(parse_element("scale(0, 1, ind([1]))", p2) == delta(p2, 1, Cyclotomic(Rational(0), Rational(1))));
  CHECK(parse_element("scale(0.5, -1/4, ind([1]))", p2) ==
        delta(p2, 1, Cyclotomic(Rational(1, 2), Rational(-1, 4))));
  CHECK(parse_element("mul(ind([1]), ind([2]))", p2) == delta(p2, 0));
  CHECK(parse_element("ind([])", p2) == ExactElement::zero(p2));

  CHECK_THROWS_AS(parse_element("ind([4])", p2), ParseError);
  CHECK_THROWS_AS(parse_element("phase(1:1/2)*ind([1])", p2), ParseError);
  CHECK_THROWS_AS(parse_element("phase(0:1/2, 0:1/3)*ind([1])", p2), ParseError);
  CHECK_THROWS_AS(parse_element("phase(0:1/2)", p2), ParseError);
  CHECK_THROWS_AS(parse_element("ind([0]) ind([3])", p2), ParseError);
  CHECK_THROWS_AS(parse_element("neg(ind([0]))", p2), ParseError);
  try {
    parse_element("sum(ind([0]),\n ind([9]))", p2);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("reports") {
  Report r;
  r.command = "demo";
  r.line().add("A", "1").add("B", "two words");
  r.line().add("C", "[0,1]").add("D", "");
  CHECK(r.text() == "A=1 B=\"two words\"\nC=[0,1] D=\"\"\n");
  CHECK_THROWS(r.line().add("X", "1").add("X", "2"));
  const auto doc = nlohmann::json::parse(r.json());
  CHECK(doc["command"] == "demo");
  CHECK(doc["records"][0]["B"] == "two words");
  CHECK(doc["records"][1]["C"] == "[0,1]");
}
