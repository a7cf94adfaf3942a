#include <set>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"

#include "graphprod/howson.hpp"
#include "graphprod/structure.hpp"

using namespace graphprod;
namespace fx = graphprod::fixtures;

namespace {
  Word W(fx::Fixture const& f, char const* s) {
    return parse_word(f.ctx, s);
  }

  using Pair = std::pair<std::size_t, std::size_t>;
  using Vs   = std::vector<std::size_t>;

  fx::Fixture all_z2(std::size_t n, bool complete) {
    std::vector<std::string>                          names;
    std::vector<std::pair<std::string, VertexMonoid>> ms;
    std::vector<Pair>                                 edges;
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("G" + std::to_string(i));
      ms.emplace_back("Z2", fx::Z2());
      for (std::size_t j = 0; complete && j < i; ++j) {
        edges.emplace_back(j, i);
      }
    }
    return fx::make("Z2^n", names, ms, edges);
  }

  fx::Fixture v_shape() {
    return fx::make("V", {"A", "B", "C"},
                    {{"U", fx::U()}, {"U", fx::U()}, {"Z2", fx::Z2()}},
                    {{0, 2}, {1, 2}});
  }
}  // namespace

TEST_CASE("structure 001: relative completeness", "[structure][quick]") {
  auto r = relative_completeness(fx::P2free().ctx);
  CHECK(r.holds);
  CHECK(r.special_pair == Pair{0, 1});

  r = relative_completeness(fx::T3free().ctx);
  CHECK_FALSE(r.holds);
  REQUIRE_FALSE(r.violations.empty());
  CHECK(r.violations.front()
        == "pair (A,B) violates Def (i): (A,C) not an edge");

  CHECK(is_relatively_complete(all_z2(4, false).ctx));
  CHECK(is_relatively_complete(fx::P2dir().ctx));
  CHECK(is_relatively_complete(v_shape().ctx));

  auto const band = fx::make("BU", {"A", "B"},
                             {{"B3", fx::band3()}, {"U", fx::U()}}, {});
  r = relative_completeness(band.ctx);
  CHECK_FALSE(r.holds);
  CHECK(r.violations.front() == "pair (A,B) violates Def (i): |M_A| = 3");

  auto const fr = fx::make("XU", {"A", "B"},
                           {{"X", fx::Free({"x"})}, {"U", fx::U()}}, {});
  CHECK(relative_completeness(fr.ctx).violations.front()
        == "pair (A,B) violates Def (i): M_A is infinite");

  // two exceptional pairs
  auto const two = fx::make("4U", {"A", "B", "C", "D"},
                            {{"U", fx::U()}, {"U", fx::U()}, {"U", fx::U()},
                             {"U", fx::U()}},
                            {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  r = relative_completeness(two.ctx);
  CHECK_FALSE(r.holds);
  CHECK(r.violations.front()
        == "pair (C,D) violates Def (i): (A,B) is already the exceptional pair");
}

TEST_CASE("structure 002: decide_wln", "[structure][quick]") {
  CHECK(decide_wln(fx::P2free().ctx).holds);
  CHECK_FALSE(decide_wln(fx::T3free().ctx).holds);
  auto const band = fx::make("BU", {"A", "B"},
                             {{"B3", fx::band3()}, {"U", fx::U()}}, {});
  CHECK_FALSE(decide_wln(band.ctx).holds);
  CHECK(decide_wln(all_z2(3, false).ctx).holds);
  CHECK(decide_wln(fx::P2dir().ctx).holds);
  CHECK(decide_wln(fx::TRACE2().ctx).holds);
  auto const r = decide_wln(fx::FREEU().ctx);
  CHECK_FALSE(r.holds);
  CHECK(r.vertices == std::vector<bool>{false, true});
  CHECK(r.non_group_vertices == Vs{0, 1});
  CHECK(decide_wln(fx::MIX3().ctx).non_group_vertices == Vs{1, 2});
}

TEST_CASE("structure 003: two vertex classification",
          "[structure][property]") {
  std::vector<std::pair<std::string, VertexMonoid>> ms{
      {"U", fx::U()},         {"Z2", fx::Z2()},  {"Z3", fx::Z3()},
      {"B3", fx::band3()},    {"LZ", fx::left_zero()},
      {"X", fx::Free({"x"})}, {"F", fx::Free({"x", "y"})}};
  auto two_elements = [](VertexMonoid const& m) {
    return !m.is_free() && m.size() == 2;
  };
  for (auto const& p : ms) {
    for (auto const& q : ms) {
      for (bool edge : {false, true}) {
        auto const f = fx::make("2", {"A", "B"}, {p, q},
                                edge ? std::vector<Pair>{{0, 1}}
                                     : std::vector<Pair>{});
        bool const both_wln = vertex_wln(p.second) && vertex_wln(q.second);
        bool expected       = both_wln;
        if (!edge) {
          bool const groups = is_group(p.second) && is_group(q.second);
          expected = expected
                     && (groups || (two_elements(p.second)
                                    && two_elements(q.second)));
        }
        INFO(p.first << " " << q.first << " edge " << edge);
        CHECK(decide_wln(f.ctx).holds == expected);
      }
    }
  }
}

TEST_CASE("structure 004: split_bipartite", "[structure][quick]") {
  auto const d = fx::P2dir();
  auto const s = split_bipartite(d.ctx, {0});
  auto const [x, y] = s.psi(W(d, "A.a B.a"));
  CHECK(format_canonical(s.first(), x) == "[A.a]");
  CHECK(format_canonical(s.second(), y) == "[B.a]");

  auto const m  = fx::MIX3();
  auto const s0 = split_bipartite(m.ctx, {});
  auto const w  = W(m, "C.a A.g B.a");
  auto const [e, z] = s0.psi(w);
  CHECK(e.blocks.empty());
  CHECK(z == canonical(m.ctx, w));
  CHECK(s0.second() == m.ctx);

  CHECK_THROWS_AS(split_bipartite(fx::P2free().ctx, {0}), PreconditionError);
}

TEST_CASE("structure 005: psi is an isomorphism", "[structure][property]") {
  struct Case {
    fx::Fixture f;
    Vs          first;
  };
  std::vector<Case> cases{{fx::P2dir(), {0}},
                          {fx::TRACE2(), {1}},
                          {v_shape(), {2}},
                          {fx::LZB(), {1}}};
  for (auto const& [f, first] : cases) {
    auto const s  = split_bipartite(f.ctx, first);
    auto const n  = f.letters.size() > 4 ? 2 : 4;
    auto const es = enumerate_elements(f.ctx, f.letters, n);
    std::set<std::pair<Word, Word>> images;
    for (auto const& e : es) {
      auto const [x, y] = s.psi(e.word());
      CHECK(s.combine(x, y) == e);
      images.emplace(x.word(), y.word());
    }
    CHECK(images.size() == es.size());
    for (std::size_t i = 0; i < es.size(); i += 3) {
      for (std::size_t j = 0; j < es.size(); j += 5) {
        auto const u  = es[i].word();
        auto const v  = es[j].word();
        auto const pu = s.psi(u), pv = s.psi(v);
        auto const puv = s.psi(concat(u, v));
        CHECK(puv.first
              == multiply(s.first(), pu.first.word(), pv.first.word()));
        CHECK(puv.second
              == multiply(s.second(), pu.second.word(), pv.second.word()));
      }
    }
  }
}

TEST_CASE("structure 006: direct4_partition", "[structure][quick]") {
  auto d = direct4_partition(v_shape().ctx);
  CHECK(d.free_pair == Pair{0, 1});
  CHECK(d.restricted_direct.empty());
  CHECK(d.group_product == Vs{2});

  d = direct4_partition(fx::P2dir().ctx);
  CHECK_FALSE(d.free_pair);
  CHECK(d.restricted_direct == Vs{0, 1});
  CHECK(d.group_product.empty());

  d = direct4_partition(all_z2(3, true).ctx);
  CHECK_FALSE(d.free_pair);
  CHECK(d.restricted_direct.empty());
  CHECK(d.group_product == Vs{0, 1, 2});

  CHECK_THROWS_AS(direct4_partition(fx::T3free().ctx), PreconditionError);
}

TEST_CASE("structure 007: the parts rebuild the product",
          "[structure][property]") {
  auto const f = fx::make("5", {"A", "B", "C", "D", "E"},
                          {{"U", fx::U()}, {"U", fx::U()}, {"U", fx::U()},
                           {"Z2", fx::Z2()}, {"Z2", fx::Z2()}},
                          {{0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3},
                           {0, 4}, {1, 4}, {2, 4}});
  auto const d = direct4_partition(f.ctx);
  REQUIRE(d.free_pair == Pair{0, 1});
  CHECK(d.restricted_direct == Vs{2});
  CHECK(d.group_product == Vs{3, 4});

  Vs first{d.free_pair->first, d.free_pair->second};
  auto const outer = split_bipartite(f.ctx, first);
  auto const inner = split_bipartite(outer.second(), {0});
  auto const es    = enumerate_elements(f.ctx, f.letters, 3);
  std::set<std::tuple<Word, Word, Word>> images;
  for (auto const& e : es) {
    auto const [x, rest] = outer.psi(e.word());
    auto const [y, z]    = inner.psi(rest.word());
    CHECK(outer.combine(x, inner.combine(y, z)) == e);
    images.emplace(x.word(), y.word(), z.word());
  }
  CHECK(images.size() == es.size());
}

TEST_CASE("structure 008: coherency_report", "[structure][quick]") {
  for (auto const& f : fx::all()) {
    auto const r = coherency_report(f.ctx);
    CHECK(r.holds);
    bool all = true;
    for (auto const& v : r.vertices) {
      all = all && v.howson && v.fle;
    }
    CHECK(r.holds == all);
  }
  auto const p = fx::P2dir();
  auto const r = coherency_report(p.ctx, {W(p, "A.a"), W(p, "B.a")});
  REQUIRE(r.intersections.size() == 1);
  CHECK(r.intersections[0].intersection_generators == 1);
  CHECK_FALSE(r.intersections[0].intersection_empty);
  CHECK(r.annihilators.size() == 2);
}

TEST_CASE("structure 009: induced contexts", "[structure][quick]") {
  auto const m = fx::MIX3();
  auto const c = induced_context(m.ctx, {0, 1});
  CHECK(c.vertex_count() == 2);
  CHECK(c.adjacent(0, 1));
  CHECK(c.vertex_names == std::vector<std::string>{"A", "B"});
}
