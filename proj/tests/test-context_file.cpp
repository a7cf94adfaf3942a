#include "catch_amalgamated.hpp"
#include "fixtures.hpp"

#include "graphprod/context_file.hpp"
#include "graphprod/normalform.hpp"

using namespace graphprod;
namespace fx = graphprod::fixtures;

namespace {
  char const* const p2free_text = R"(
# two copies of U
monoid U { elements: 1 a; identity: 1; table: 1 a, a a }
graph { vertices: A:U B:U; edges: }
word x = A.a B.a A.a
word one = e
)";

  std::string error_of(std::string const& text) {
    try {
      parse_context(text);
    } catch (ParseError const& e) {
      return e.what();
    }
    return "";
  }
}  // namespace

TEST_CASE("context_file 001: the P2free file", "[context_file][quick]") {
  auto const f = parse_context(p2free_text);
  CHECK(f.context == fx::P2free().ctx);
  REQUIRE(f.find_word("x"));
  CHECK(format_word(f.context, *f.find_word("x")) == "A.a B.a A.a");
  REQUIRE(f.find_word("one"));
  CHECK(f.find_word("one")->empty());
  CHECK_FALSE(f.find_word("y"));
}

TEST_CASE("context_file 002: multi-line tables and free monoids",
          "[context_file][quick]") {
  auto const f = parse_context(R"(
monoid Z3 {
  elements: 1 g h
  identity: 1
  table:
    1 g h
    g h 1
    h 1 g
}
monoid F free { alphabet: x y }
graph {
  vertices: A:Z3 B:F C:F
  edges: A-B B-C
}
word w = B.xy A.g C.yyx
)");
  CHECK(f.context.monoid(0) == fx::Z3());
  CHECK(f.context.monoid(1).is_free());
  CHECK(f.context.adjacent(0, 1));
  CHECK_FALSE(f.context.adjacent(0, 2));
  CHECK(format_canonical(f.context, canonical(f.context, *f.find_word("w")))
        == "[A.g B.xy][C.yyx]");
}

TEST_CASE("context_file 003: errors carry locations", "[context_file][quick]") {
  auto const loop = error_of(
      "monoid U { elements: 1 a; identity: 1; table: 1 a, a a }\n"
      "graph { vertices: v1:U v2:U; edges: v1-v1 }\n");
  CHECK_THAT(loop, Catch::Matchers::ContainsSubstring("loop edge"));
  CHECK_THAT(loop, Catch::Matchers::StartsWith("line 2, column 37"));

  auto const width = error_of(
      "monoid U {\n  elements: 1 a\n  identity: 1\n  table:\n    1 a\n"
      "    a a a\n}\ngraph { vertices: A:U }\n");
  CHECK_THAT(width, Catch::Matchers::StartsWith("line 6"));
  CHECK_THAT(width, Catch::Matchers::ContainsSubstring("3 entries"));

  CHECK_THAT(error_of("graph { vertices: A:U }"),
             Catch::Matchers::ContainsSubstring("unknown monoid \"U\""));
  CHECK_THAT(error_of("monoid U { elements: 1 a; identity: 1; table: 1 a, a a }"
                      "\nmonoid U { elements: 1 a; identity: 1; table: 1 a, a a }"),
             Catch::Matchers::ContainsSubstring("declared twice"));
  CHECK_THAT(error_of("monoid U { elements: 1 a; identity: 1; table: 1 a, a b }"),
             Catch::Matchers::ContainsSubstring("unknown element \"b\""));
  CHECK_THAT(error_of("monoid U { elements: 1 a; identity: 1; table: 1 a, a 1 }\n"
                      "graph { vertices: A:U B:U }\nword w = A.a C.a\n"),
             Catch::Matchers::ContainsSubstring("unknown vertex \"C\""));
  CHECK_THAT(error_of("monoid U { elements: 1 a; identity: 1; table: 1 a, a a }\n"
                      "graph { vertices: A:U A:U }\n"),
             Catch::Matchers::ContainsSubstring("declared twice"));
  CHECK_THAT(error_of("monoid U { elements: 1 a; identity: 1; table: 1 1, 1 a }\n"),
             Catch::Matchers::ContainsSubstring("identity"));
  CHECK_THAT(error_of("monoid T { elements: 1 a b; identity: 1;"
                      " table: 1 a b, a b a, b 1 b }"),
             Catch::Matchers::ContainsSubstring("not associative"));
  CHECK_THAT(error_of("monoid U { elements: 1 a; identity: 1; table: 1 a, a a }"),
             Catch::Matchers::ContainsSubstring("no graph"));
  CHECK_THAT(error_of("monoid U $"),
             Catch::Matchers::ContainsSubstring("unexpected character"));
}

TEST_CASE("context_file 004: printing round trips", "[context_file][property]") {
  for (auto const& f : fx::all()) {
    ContextFile file{f.ctx, {}};
    std::mt19937_64 rng(4);
    for (int i = 0; i < 3; ++i) {
      file.words.emplace_back("w" + std::to_string(i),
                              fx::random_word(rng, f.letters, 4));
    }
    auto const text = format_context(file);
    INFO(text);
    auto const back = parse_context(text);
    CHECK(back.context == file.context);
    CHECK(back.words == file.words);
    CHECK(format_context(back) == text);
  }
}
