#include "catch_amalgamated.hpp"
#include "fixtures.hpp"

#include "graphprod/howson.hpp"
#include "graphprod/ideals.hpp"
#include "graphprod/oracle.hpp"

using namespace graphprod;
namespace fx = graphprod::fixtures;

namespace {
  Word W(fx::Fixture const& f, char const* s) {
    return parse_word(f.ctx, s);
  }

  std::vector<std::string> shown(fx::Fixture const&                 f,
                                 std::vector<CanonicalForm> const& cs) {
    std::vector<std::string> out;
    for (auto const& c : cs) {
      out.push_back(format_canonical(f.ctx, c));
    }
    return out;
  }

  using S = std::vector<std::string>;
}  // namespace

TEST_CASE("howson 001: intersection witnesses", "[howson][quick]") {
  auto const p2dir = fx::P2dir(), p2free = fx::P2free();
  auto       z = find_intersection_witness(p2dir.ctx, W(p2dir, "A.a"),
                                           W(p2dir, "B.a"));
  REQUIRE(z);
  CHECK(format_canonical(p2dir.ctx, *z) == "[A.a B.a]");
  CHECK_FALSE(find_intersection_witness(p2free.ctx, W(p2free, "A.a"),
                                        W(p2free, "B.a")));
  auto const a = W(p2free, "B.a A.a");
  CHECK(find_intersection_witness(p2free.ctx, a, a) == canonical(p2free.ctx, a));
}

TEST_CASE("howson 002: intersect_principal examples", "[howson][quick]") {
  auto const p2dir = fx::P2dir(), p2free = fx::P2free();
  auto       r = intersect_principal(p2dir.ctx, W(p2dir, "A.a"), W(p2dir, "B.a"));
  CHECK_FALSE(r.empty);
  CHECK(shown(p2dir, r.elements()) == S{"[A.a B.a]"});

  r = intersect_principal(p2free.ctx, W(p2free, "A.a"), W(p2free, "B.a"));
  CHECK(r.empty);
  CHECK(r.generators.empty());

  r = intersect_principal(p2free.ctx, W(p2free, "A.a"), W(p2free, "A.a"));
  CHECK(shown(p2free, r.elements()) == S{"[A.a]"});

  auto const t = fx::TRACE2();
  r            = intersect_principal(t.ctx, W(t, "A.x"), W(t, "B.y"));
  CHECK(shown(t, r.elements()) == S{"[A.x B.y]"});
  r = intersect_principal(t.ctx, W(t, "A.xx"), W(t, "A.x B.y"));
  CHECK(shown(t, r.elements()) == S{"[A.xx B.y]"});
}

TEST_CASE("howson 003: lcm_check", "[howson][quick]") {
  auto const p2dir = fx::P2dir(), p2free = fx::P2free();
  auto       r = lcm_check(p2dir.ctx, W(p2dir, "A.a"), W(p2dir, "B.a"));
  CHECK(r.shape == IdealShape::principal);
  REQUIRE(r.generator);
  CHECK(format_canonical(p2dir.ctx, *r.generator) == "[A.a B.a]");
  CHECK(lcm_check(p2free.ctx, W(p2free, "A.a"), W(p2free, "B.a")).shape
        == IdealShape::empty);
  auto const a = W(p2free, "A.a B.a");
  r            = lcm_check(p2free.ctx, a, a);
  CHECK(r.shape == IdealShape::principal);
  CHECK(r.generator == canonical(p2free.ctx, a));
}

TEST_CASE("howson 004: vertex level intersections", "[howson][quick]") {
  // l x = l, so GP[l] = {l, r} = GP[r]
  auto const f = fx::make("LZ", {"A"}, {{"LZ", fx::left_zero()}}, {});
  auto const r = lcm_check(f.ctx, W(f, "A.l"), W(f, "A.r"));
  CHECK(r.shape == IdealShape::principal);
  CHECK(eq_principal(f.ctx, r.generator->word(), W(f, "A.l")));

  auto const g = fx::make("B3", {"A", "B"},
                          {{"B3", fx::band3()}, {"LZ", fx::left_zero()}},
                          {{0, 1}});
  auto const s = intersect_principal(g.ctx, W(g, "B.l"), W(g, "A.a"));
  CHECK(shown(g, s.elements()) == S{"[A.a B.l]"});
}

TEST_CASE("howson 005: generators are sound and complete at small bounds",
          "[howson][oracle]") {
  for (auto const& f : fx::all()) {
    auto const ws = fx::words_upto(f.letters, f.letters.size() > 4 ? 1 : 2);
    for (auto const& a : ws) {
      for (auto const& b : ws) {
        auto const r = intersect_principal(f.ctx, a, b);
        INFO(f.name << ": " << format_word(f.ctx, a) << " ^ "
                    << format_word(f.ctx, b));
        for (auto const& g : r.elements()) {
          CHECK(leq_principal(f.ctx, g.word(), a));
          CHECK(leq_principal(f.ctx, g.word(), b));
          CHECK(oracle_leq_principal(f.ctx, g.word(), a,
                                     g.length() + a.size()));
        }
        auto const zs = oracle_intersection_elements(f.ctx, a, b,
                                                     a.size() + b.size() + 1);
        CHECK(zs.empty() == r.empty);
        for (auto const& z : zs) {
          bool covered = false;
          for (auto const& g : r.elements()) {
            covered = covered || leq_principal(f.ctx, z, g.word()).has_value();
          }
          CHECK(covered);
        }
      }
    }
  }
}

TEST_CASE("howson 006: element enumeration", "[howson][quick]") {
  auto const p = fx::P2free();
  auto const es = enumerate_elements(p.ctx, p.letters, 2);
  CHECK(shown(p, es)
        == S{"e", "[A.a]", "[B.a]", "[A.a][B.a]", "[B.a][A.a]"});
  auto const d = fx::P2dir();
  CHECK(shown(d, enumerate_elements(d.ctx, d.letters, 3))
        == S{"e", "[A.a]", "[B.a]", "[A.a B.a]"});
}
