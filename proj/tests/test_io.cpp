#include <catch2/catch_amalgamated.hpp>

#include "simptree/io.hpp"
#include "test_support.hpp"

using simptree::FacetComplex;
using simptree::NameMode;
using simptree::ParseError;
using simptree::ParseOptions;
using simptree::parse_complex;
using simptree::serialize_complex;
using testsupport::cx;

TEST_CASE("parse comma-separated single-character facets") {
  auto c = parse_complex("xy, xz, yz, yu, zt");
  REQUIRE(c == cx({"xy", "xz", "yz", "yu", "zt"}));
}

TEST_CASE("parse one facet per line with comments and blanks") {
  auto c = parse_complex("# a small tree\n\nxyz\nyzu\n\nuv  # tail facet\n");
  REQUIRE(c == cx({"xyz", "yzu", "uv"}));
}

TEST_CASE("parse mixed commas and newlines") {
  auto c = parse_complex("xy, xz\nyz, yu\nzt");
  REQUIRE(c == cx({"xy", "xz", "yz", "yu", "zt"}));
}

TEST_CASE("multi-character names split on whitespace") {
  auto c = parse_complex("x1 x2 x3, x3 x4");
  REQUIRE(c.vertex_count() == 4);
  REQUIRE(c.facet_count() == 2);
  REQUIRE(c.vertex_id("x1") == 0);
  REQUIRE(c.label(1) == "x3 x4");
}

TEST_CASE("monomial generators with star separators") {
  auto c = parse_complex("x1*x2*x3, x3*x4");
  REQUIRE(c == parse_complex("x1 x2 x3, x3 x4"));
  // juxtaposed single-character monomials parse as characters
  auto compact = parse_complex("xyz, yzu, uv");
  REQUIRE(compact == cx({"xyz", "yzu", "uv"}));
}

TEST_CASE("name mode declarations") {
  // in-band header
  auto declared = parse_complex("# names: multi\nxy\n");
  REQUIRE(declared.facet_count() == 1);
  REQUIRE(declared.vertex_count() == 1);
  REQUIRE(declared.vertex_id("xy").has_value());

  auto chars = parse_complex("# names: single\nxy\n");
  REQUIRE(chars.vertex_count() == 2);

  // explicit option beats auto-detection
  ParseOptions named;
  named.names = NameMode::named;
  REQUIRE(parse_complex("xy", named).vertex_count() == 1);
  ParseOptions single;
  single.names = NameMode::single_char;
  REQUIRE(parse_complex("xy", single).vertex_count() == 2);

  // without declarations, bare juxtaposition means single characters
  REQUIRE(parse_complex("xy").vertex_count() == 2);
}

TEST_CASE("parse errors carry positions") {
  try {
    parse_complex("");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 1);
  }

  try {
    parse_complex("xy,,yz");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 1);
    REQUIRE(e.column() == 4);
  }

  try {
    parse_complex("xy,\nx$y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    // the trailing comma on line 1 is reported first
    REQUIRE(e.line() == 1);
  }

  try {
    parse_complex("ab\nx$y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
    REQUIRE(e.column() == 2);
  }

  try {
    parse_complex("xx");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(std::string(e.what()).find("repeated vertex") != std::string::npos);
  }

  try {
    parse_complex("xy, zt, xy");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 1);
    REQUIRE(e.column() == 9);
    REQUIRE(std::string(e.what()).find("duplicate") != std::string::npos);
  }

  try {
    parse_complex("xyz\nyz");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    REQUIRE(e.line() == 2);
    REQUIRE(e.column() == 1);
    REQUIRE(std::string(e.what()).find("antichain") != std::string::npos);
  }
}

TEST_CASE("minimize option instead of antichain errors") {
  ParseOptions minimize;
  minimize.minimize = true;
  auto c = parse_complex("xy, xyz, xy", minimize);
  REQUIRE(c.facet_count() == 1);
  REQUIRE(c.label(0) == "xyz");
}

TEST_CASE("serialization round-trips") {
  auto c = cx({"xy", "xz", "yz", "yu", "zt"});
  REQUIRE(serialize_complex(c) == "xy\nxz\nyz\nyu\nzt\n");
  REQUIRE(parse_complex(serialize_complex(c)) == c);

  auto wide = FacetComplex::from_names({{"x1", "x2", "x3"}, {"x3", "x4"}});
  REQUIRE(serialize_complex(wide) == "# names: multi\nx1 x2 x3\nx3 x4\n");
  REQUIRE(parse_complex(serialize_complex(wide)) == wide);

  // the header makes even a lone multi-character vertex unambiguous
  auto lone = FacetComplex::from_names({{"x1"}});
  REQUIRE(parse_complex(serialize_complex(lone)) == lone);
}

TEST_CASE("windows line endings are tolerated") {
  REQUIRE(parse_complex("xy\r\nxz\r\n") == cx({"xy", "xz"}));
}

TEST_CASE("serialized facets list vertices in id order") {
  auto c = parse_complex("yx, zy");  // y gets id 0, x id 1, z id 2
  REQUIRE(serialize_complex(c) == "yx\nyz\n");
}
