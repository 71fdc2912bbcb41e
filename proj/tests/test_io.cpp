#include <catch_amalgamated.hpp>

#include "cartan/io.hpp"
#include "oracles.hpp"

using cartan::Cochain;
using cartan::Face;
namespace io = cartan::io;

TEST_CASE("cochain JSON is sorted and round-trips") {
  const Cochain c(3, 1, {Face{2, 3}, Face{0, 1}});
  const std::string text = io::dump(io::cochain_to_json(c));
  CHECK(text == R"({"ambient":3,"dim":1,"support":[[0,1],[2,3]]})");
  CHECK(io::parse_cochain(text) == c);
  CHECK(io::dump(io::cochain_to_json(io::parse_cochain(R"({"support":[[2,3],[0,1]],"dim":1,"ambient":3})"))) == text);
}

TEST_CASE("malformed cochains are parse errors") {
  CHECK_THROWS_AS(io::parse_cochain("{"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_cochain("[]"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":2,"dim":1})"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":2,"dim":1,"support":[[1,0]]})"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":2,"dim":1,"support":[["a"]]})"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":"2","dim":1,"support":[]})"), cartan::ParseError);
}

TEST_CASE("shape violations in well-formed cochains") {
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":2,"dim":1,"support":[[0,1,2]]})"), cartan::ShapeMismatch);
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":2,"dim":1,"support":[[0,5]]})"), cartan::ShapeMismatch);
  CHECK_THROWS_AS(io::parse_cochain(R"({"ambient":99,"dim":1,"support":[]})"), cartan::ShapeMismatch);
}

TEST_CASE("tuples of permutations") {
  const auto e = io::parse_be_simplex("[[1,3,2,4],[1,2,3,4],[2,1,4,3]]");
  CHECK(e == oracle::tuple(4, {"(23)", "e", "(12)(34)"}));
  CHECK(io::be_simplex_to_json(e).dump() == "[[1,3,2,4],[1,2,3,4],[2,1,4,3]]");
  CHECK(io::format_be_chain(cartan::BEChain(e)) == "((23), e, (12)(34))");
  CHECK_THROWS_AS(io::parse_be_simplex("[[1,1]]"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_be_simplex("[[1,2],[1,2,3]]"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_be_simplex("[]"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_be_simplex("[[0,1]]"), cartan::ParseError);
}

TEST_CASE("surjection text") {
  CHECK(io::format_surjections({}) == "0");
  const cartan::SurChain two{cartan::Surjection(4, {1, 3, 2, 3, 4, 3}), cartan::Surjection(4, {1, 2, 4, 1, 4, 3})};
  CHECK(io::format_surjections(two) == "(1,2,4,1,4,3) + (1,3,2,3,4,3)");
  CHECK(io::surjections_to_json(two).dump() == "[[1,2,4,1,4,3],[1,3,2,3,4,3]]");
  CHECK(io::parse_surjection("[1,2,1]") == cartan::Surjection(2, {1, 2, 1}));
  CHECK_THROWS_AS(io::parse_surjection("[1,1,2]"), cartan::ParseError);
  CHECK_THROWS_AS(io::parse_surjection("[]"), cartan::ParseError);
}
