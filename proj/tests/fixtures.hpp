// Small graph products used across the test suites, and word generators.

#ifndef GRAPHPROD_TESTS_FIXTURES_HPP_
#define GRAPHPROD_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/core.hpp"

namespace graphprod::fixtures {

  // {1, a} with a a = a.
  inline VertexMonoid U() {
    return VertexMonoid::finite({"1", "a"}, 0, {{0, 1}, {1, 1}});
  }

  inline VertexMonoid Z2() {
    return VertexMonoid::finite({"1", "g"}, 0, {{0, 1}, {1, 0}});
  }

  inline VertexMonoid Z3() {
    return VertexMonoid::finite({"1", "g", "h"}, 0,
                                {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  }

  // Commutative band {1, a, b} with a b = b a = b.
  inline VertexMonoid band3() {
    return VertexMonoid::finite({"1", "a", "b"}, 0,
                                {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}});
  }

  // {1, l, r} with x y = x for x != 1.
  inline VertexMonoid left_zero() {
    return VertexMonoid::finite({"1", "l", "r"}, 0,
                                {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}});
  }

  inline VertexMonoid Free(std::vector<std::string> alphabet) {
    return VertexMonoid::free(std::move(alphabet));
  }

  struct Fixture {
    std::string         name;
    GPContext           ctx;
    std::vector<Letter> letters;  // the letters words are drawn from
  };

  // Non-identity elements of each finite vertex, and free elements of
  // length at most two.
  inline std::vector<Letter> universe_letters(GPContext const& ctx) {
    std::vector<Letter> out;
    for (std::uint32_t v = 0; v < ctx.vertex_count(); ++v) {
      auto const& m = ctx.monoid(v);
      if (!m.is_free()) {
        for (auto const& x : m.elements()) {
          if (!m.is_identity(x)) {
            out.push_back({v, x});
          }
        }
        continue;
      }
      for (std::size_t i = 0; i < m.rank(); ++i) {
        out.push_back({v, Element::free(std::string(1, char(i)))});
      }
      for (std::size_t i = 0; i < m.rank(); ++i) {
        for (std::size_t j = 0; j < m.rank(); ++j) {
          out.push_back({v, Element::free(std::string{char(i), char(j)})});
        }
      }
    }
    return out;
  }

  inline Fixture make(std::string                                  name,
                      std::vector<std::string>                     vertices,
                      std::vector<std::pair<std::string, VertexMonoid>> ms,
                      std::vector<std::pair<std::size_t, std::size_t>> edges) {
    Graph g(vertices.size());
    for (auto [u, v] : edges) {
      g.add_edge(u, v);
    }
    std::vector<VertexMonoid> monoids;
    std::vector<std::string>  names;
    for (auto& [n, m] : ms) {
      names.push_back(n);
      monoids.push_back(m);
    }
    auto ctx = build_context(std::move(g), std::move(monoids),
                             std::move(vertices), std::move(names));
    auto letters = universe_letters(ctx);
    return {std::move(name), std::move(ctx), std::move(letters)};
  }

  inline Fixture P2free() {
    return make("P2free", {"A", "B"}, {{"U", U()}, {"U", U()}}, {});
  }

  inline Fixture P2dir() {
    return make("P2dir", {"A", "B"}, {{"U", U()}, {"U", U()}}, {{0, 1}});
  }

  inline Fixture L3() {
    return make("L3", {"V1", "V2", "V3"}, {{"U", U()}, {"U", U()}, {"U", U()}},
                {{0, 1}});
  }

  inline Fixture T3free() {
    return make("T3free", {"A", "B", "C"}, {{"U", U()}, {"U", U()}, {"U", U()}},
                {});
  }

  inline Fixture Z2single() {
    return make("Z2", {"A"}, {{"Z2", Z2()}}, {});
  }

  // A group vertex commuting with one of two copies of U.
  inline Fixture MIX3() {
    return make("MIX3", {"A", "B", "C"},
                {{"Z2", Z2()}, {"U", U()}, {"U", U()}}, {{0, 1}});
  }

  // The free commutative monoid on x and y.
  inline Fixture TRACE2() {
    return make("TRACE2", {"A", "B"},
                {{"X", Free({"x"})}, {"Y", Free({"y"})}}, {{0, 1}});
  }

  // A path of three free monoids of rank one.
  inline Fixture TRACE3() {
    return make("TRACE3", {"A", "B", "C"},
                {{"X", Free({"x"})}, {"Y", Free({"y"})}, {"Z", Free({"z"})}},
                {{0, 1}, {1, 2}});
  }

  // A non-commutative vertex, a band and a group on a path.
  inline Fixture LZB() {
    return make("LZB", {"A", "B", "C"},
                {{"LZ", left_zero()}, {"Z3", Z3()}, {"B3", band3()}},
                {{0, 1}, {1, 2}});
  }

  // A rank two free vertex next to a copy of U.
  inline Fixture FREEU() {
    return make("FREEU", {"A", "B"}, {{"F", Free({"x", "y"})}, {"U", U()}},
                {{0, 1}});
  }

  inline std::vector<Fixture> all() {
    return {P2free(), P2dir(), L3(),  T3free(), Z2single(), MIX3(),
            TRACE2(), TRACE3(), LZB(), FREEU()};
  }

  // Every word of length at most n over the given letters, shortest first.
  inline std::vector<Word> words_upto(std::vector<Letter> const& letters,
                                      std::size_t                n) {
    std::vector<Word> out{Word{}};
    std::size_t       begin = 0;
    for (std::size_t len = 1; len <= n; ++len) {
      std::size_t const end = out.size();
      for (std::size_t i = begin; i < end; ++i) {
        for (auto const& x : letters) {
          auto w = out[i];
          w.push_back(x);
          out.push_back(std::move(w));
        }
      }
      begin = end;
    }
    return out;
  }

  inline Word random_word(std::mt19937_64&           rng,
                          std::vector<Letter> const& letters,
                          std::size_t                max_length) {
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    Word                                       w(len(rng));
    for (auto& x : w) {
      x = letters[pick(rng)];
    }
    return w;
  }

  // Letters including the identity of every vertex.
  inline std::vector<Letter> letters_with_identities(GPContext const& ctx) {
    auto out = universe_letters(ctx);
    for (std::uint32_t v = 0; v < ctx.vertex_count(); ++v) {
      out.push_back({v, ctx.monoid(v).identity()});
    }
    return out;
  }

}  // namespace graphprod::fixtures

#endif  // GRAPHPROD_TESTS_FIXTURES_HPP_
