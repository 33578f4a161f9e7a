#include "extrainv/io.hpp"
#include "extrainv/render.hpp"

#include "support/instances.hpp"

#include <doctest.h>

#include <regex>
#include <set>

using namespace extrainv;
using io::json;

TEST_CASE("rational parsing") {
  CHECK(io::parse_rational(json::parse("[1, 3]")) == Rational(1, 3));
  CHECK(io::parse_rational(json::parse("-4")) == Rational(-4));
  CHECK(io::parse_rational(json::parse("\"-2/6\"")) == Rational(-1, 3));
  CHECK(io::parse_rational(json::parse("\"123456789012345678901234567890/2\"")) ==
        Rational(Integer("61728394506172839450617283945")));
  CHECK_THROWS_AS((void)io::parse_rational(json::parse("[1, 0]")), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_rational(json::parse("0.5")), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_rational(json::parse("\"1/x\"")), io::ParseError);
  CHECK(io::integer_to_json(Integer("123456789012345678901234567890")) == json("123456789012345678901234567890"));
  CHECK(io::integer_to_json(Integer(-5)) == json(-5));
}

TEST_CASE("subgroup documents") {
  const auto spec = io::parse_subgroup_spec(
      json::parse(R"({"d": 2, "discrete": [[[1,3],[0,1]]], "continuous": [[-1, 1]]})"));
  CHECK(spec.dim == 2);
  CHECK(spec.discrete == std::vector<RatVector>{{Rational(1, 3), 0}});
  CHECK(spec.continuous == std::vector<RatVector>{{-1, 1}});
  CHECK(io::parse_subgroup_spec(io::spec_to_json(spec)).discrete == spec.discrete);

  const auto m = ClosedSubgroup::canonicalize(spec);
  const json c = io::canonical_to_json(spec, m);
  CHECK(c["q"] == 1);
  CHECK(c["factors"] == json::parse("[3]"));
  CHECK(c["V"] == json::parse("[[1,0],[-1,1]]"));
  CHECK(c["W"] == json::parse("[[1,1],[0,1]]"));

  CHECK_THROWS_AS((void)io::parse_subgroup_spec(json::parse(R"({"discrete": []})")), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_subgroup_spec(json::parse(R"({"d": 2, "discrete": [[1]]})")), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_subgroup_spec(json::parse(R"({"d": 0})")), io::ParseError);
}

TEST_CASE("generator documents round trip") {
  testing::Rng rng(83);
  const auto window = testing::random_window(rng, 2, 8);
  const auto g = testing::random_generator(rng, 2, window, {2, 3}, false);
  const auto back = io::parse_generator(json::parse(io::generator_to_json(g).dump()));
  CHECK(back == g);
  const auto list = io::parse_generators(io::generators_to_json({g, g}));
  CHECK(list.size() == 2);
  CHECK(io::parse_generators(json::array({io::generator_to_json(g)})).size() == 1);
  CHECK(io::parse_generators(io::generator_to_json(g)).size() == 1);

  CHECK_THROWS_AS((void)io::parse_generator(json::parse(R"({"d":1,"grid":[2],"tiles":[{"k":[0],"re":[1]}]})")),
                  io::ParseError);
  CHECK_THROWS_AS(
      (void)io::parse_generator(json::parse(R"({"d":1,"grid":[1],"tiles":[{"k":[0],"re":[1]},{"k":[0],"re":[2]}]})")),
      io::ParseError);
  const auto real_only = io::parse_generator(json::parse(R"({"d":1,"grid":[1],"tiles":[{"k":[2],"re":[1.5]}]})"));
  CHECK(real_only.value({2}, 0) == Complex(1.5, 0));
}

TEST_CASE("argument parsing") {
  CHECK(io::parse_point("1/3, 0,-2") == RatVector{Rational(1, 3), 0, -2});
  CHECK(io::parse_points("1/2;0,1").size() == 2);
  CHECK(io::parse_window("-1..1,0..1").size() == 6);
  CHECK(io::parse_window("-1..1,0..1").front() == Tile{-1, 0});
  CHECK(io::parse_window("3") == std::vector<Tile>{{3}});
  CHECK_THROWS_AS((void)io::parse_window("2..1"), io::ParseError);
  CHECK_THROWS_AS((void)io::parse_window("a..1"), io::ParseError);
  CHECK(io::parse_grid("4,2") == std::vector<std::size_t>{4, 2});
  CHECK_THROWS_AS((void)io::parse_grid("0"), io::ParseError);
}

namespace {

struct DrawnTile {
  Tile k;
  std::string fill;
};

std::vector<DrawnTile> drawn_tiles(const std::string& svg) {
  static const std::regex tile_re(R"re(<polygon class="tile" data-k="([-0-9,]+)" fill="(#[0-9a-f]{6})")re");
  std::vector<DrawnTile> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), tile_re); it != std::sregex_iterator(); ++it)
    out.push_back({io::parse_window((*it)[1].str()).front(), (*it)[2].str()});
  return out;
}

}  // namespace

TEST_CASE("render colors follow residue classes") {
  const auto q = ClosedSubgroup::canonicalize(testing::make_spec(1, {{Rational(1, 4)}}));
  const auto window = io::parse_window("-7..8");
  const std::string svg = render_svg(q, make_render_spec(q, window));
  const auto tiles = drawn_tiles(svg);
  REQUIRE(tiles.size() == 16);
  for (const auto& a : tiles)
    for (const auto& b : tiles)
      CHECK((a.fill == b.fill) == (reduce_tile(q, a.k).sigma == reduce_tile(q, b.k).sigma));
  std::set<std::string> colors;
  for (const auto& t : tiles) colors.insert(t.fill);
  CHECK(colors.size() == 4);
  CHECK(svg == render_svg(q, make_render_spec(q, window)));
}

TEST_CASE("render rejects high dimensions") {
  const auto m = ClosedSubgroup::integer_lattice(3);
  CHECK_THROWS_AS((void)make_render_spec(m, {{0, 0, 0}}), std::invalid_argument);
  const auto m2 = ClosedSubgroup::integer_lattice(2);
  CHECK_THROWS_AS((void)make_render_spec(m2, {}), std::invalid_argument);
}

TEST_CASE("palette colors are distinct") {
  for (std::size_t n : {1u, 2u, 5u, 17u, 60u, 400u}) {
    const auto p = class_palette(n);
    CHECK(std::set<std::string>(p.begin(), p.end()).size() == n);
  }
}
