// Graph products of monoids: vertex monoids, graphs, letters and words.
//
// A graph product is specified by a simple undirected graph on the vertex set
// {0, ..., n - 1} together with one monoid per vertex.  Vertex monoids are
// either finite (given by a Cayley table) or free on a finite alphabet.

#ifndef GRAPHPROD_CORE_HPP_
#define GRAPHPROD_CORE_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace graphprod {

  //! Base class for all errors thrown by this library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! A context (graph or vertex monoid) is malformed.
  class ContextError : public Error {
   public:
    using Error::Error;
  };

  //! A documented precondition of a function was violated.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  //! An internal consistency check failed.  Indicates a bug.
  class InvariantError : public Error {
   public:
    using Error::Error;
  };

  //! An element of a vertex monoid.
  //!
  //! Elements of a finite monoid are table indices; elements of a free monoid
  //! are strings of symbol indices.  Ordering is shortlex, which for finite
  //! monoids is the index order.
  class Element {
   public:
    Element() = default;

    static Element finite(std::uint32_t index) {
      Element x;
      x._index = index;
      return x;
    }

    static Element free(std::string symbols) {
      Element x;
      x._symbols = std::move(symbols);
      return x;
    }

    std::uint32_t index() const noexcept {
      return _index;
    }

    std::string const& symbols() const noexcept {
      return _symbols;
    }

    bool operator==(Element const&) const = default;

    std::strong_ordering operator<=>(Element const& that) const {
      if (auto c = _symbols.size() <=> that._symbols.size(); c != 0) {
        return c;
      }
      if (auto c = _symbols.compare(that._symbols); c != 0) {
        return c < 0 ? std::strong_ordering::less
                     : std::strong_ordering::greater;
      }
      return _index <=> that._index;
    }

    std::size_t hash() const noexcept {
      return std::hash<std::string>{}(_symbols) * 31 + _index;
    }

   private:
    std::uint32_t _index = 0;
    std::string   _symbols;
  };

  //! A vertex monoid: finite with a Cayley table, or free on an alphabet.
  class VertexMonoid {
   public:
    //! Throws ContextError unless \p table is an associative n x n table
    //! with two-sided identity \p identity.
    static VertexMonoid finite(std::vector<std::string>                names,
                               std::size_t                             identity,
                               std::vector<std::vector<std::uint32_t>> table);

    //! Throws ContextError if the alphabet has repeated or empty symbols.
    static VertexMonoid free(std::vector<std::string> alphabet);

    bool is_free() const noexcept {
      return _free;
    }

    //! Number of elements; only for finite monoids.
    std::size_t size() const;

    //! Number of generators; only for free monoids.
    std::size_t rank() const;

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::vector<std::vector<std::uint32_t>> const& table() const noexcept {
      return _table;
    }

    std::size_t identity_index() const noexcept {
      return _identity;
    }

    Element identity() const;
    bool    is_identity(Element const& x) const;
    bool    contains(Element const& x) const;
    Element multiply(Element const& x, Element const& y) const;

    //! All elements in index order; only for finite monoids.
    std::vector<Element> elements() const;

    bool is_left_invertible(Element const& x) const;

    std::string            format(Element const& x) const;
    std::optional<Element> parse(std::string_view text) const;

    bool operator==(VertexMonoid const&) const = default;

   private:
    bool                                    _free = false;
    std::vector<std::string>                _names;
    std::size_t                             _identity = 0;
    std::vector<std::vector<std::uint32_t>> _table;
  };

  //! True iff every element is invertible.  Free monoids of positive rank are
  //! not groups; the free monoid of rank 0 is trivial.
  bool is_group(VertexMonoid const& m);

  //! The least left inverse of x, if any.
  std::optional<Element> left_inverse_of(VertexMonoid const& m,
                                         Element const&      x);

  //! All left inverses of x, in increasing order.
  std::vector<Element> left_inverses_of(VertexMonoid const& m,
                                        Element const&      x);

  //! The least p with a = p * b, if any.
  std::optional<Element> vertex_divides(VertexMonoid const& m,
                                        Element const&      a,
                                        Element const&      b);

  //! Generators of the left ideal Ma intersected with Mb: one least
  //! representative of each maximal principal left ideal inside it.
  std::vector<Element> vertex_ideal_intersection(VertexMonoid const& m,
                                                 Element const&      a,
                                                 Element const&      b);

  //! All pairs (s, t), s != t, with s * a = t * a.  Empty for free monoids.
  std::vector<std::pair<Element, Element>>
  vertex_annihilator(VertexMonoid const& m, Element const& a);

  //! True iff some non-identity p has p * x != 1.
  bool admits_glue(VertexMonoid const& m, Element const& x);

  //! The least non-identity p with p * x != 1, if any.
  std::optional<Element> glue_multiplier(VertexMonoid const& m,
                                         Element const&      x);

  //! A simple undirected graph on {0, ..., n - 1}.
  class Graph {
   public:
    Graph() = default;
    explicit Graph(std::size_t n) : _n(n), _adj(n * n, 0) {}

    //! Throws ContextError on loops or out of range vertices.
    void add_edge(std::size_t u, std::size_t v);

    std::size_t vertex_count() const noexcept {
      return _n;
    }

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return _adj[u * _n + v] != 0;
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    bool operator==(Graph const&) const = default;

   private:
    std::size_t               _n = 0;
    std::vector<std::uint8_t> _adj;
  };

  //! A graph product context.  Vertex and monoid names only affect printing.
  struct GPContext {
    Graph                     graph;
    std::vector<VertexMonoid> monoids;
    std::vector<std::string>  vertex_names;
    std::vector<std::string>  monoid_names;

    std::size_t vertex_count() const noexcept {
      return graph.vertex_count();
    }

    VertexMonoid const& monoid(std::size_t v) const {
      return monoids[v];
    }

    bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return graph.adjacent(u, v);
    }

    std::optional<std::size_t> vertex_index(std::string_view name) const;

    bool operator==(GPContext const&) const = default;
  };

  //! Validates and completes a context.  Missing names are filled in with
  //! "v0", "v1", ... and "M0", "M1", ...
  GPContext build_context(Graph                     graph,
                          std::vector<VertexMonoid> monoids,
                          std::vector<std::string>  vertex_names = {},
                          std::vector<std::string>  monoid_names = {});

  //! A generator of the graph product: an element of one vertex monoid.
  struct Letter {
    std::uint32_t vertex = 0;
    Element       element;

    bool                 operator==(Letter const&) const = default;
    std::strong_ordering operator<=>(Letter const&) const = default;
  };

  using Word = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::size_t h = w.size();
      for (auto const& x : w) {
        h = h * 1000003u ^ (x.vertex * 7919u + x.element.hash());
      }
      return h;
    }
  };

  //! Shortlex order on words: length first, then letter by letter.
  bool shortlex_less(Word const& u, Word const& v);

  //! Throws PreconditionError unless every letter refers to a vertex of ctx
  //! and an element of its monoid.
  void validate_word(GPContext const& ctx, Word const& w);

  bool is_identity_letter(GPContext const& ctx, Letter const& x);

  //! Letters x, y commute in the product iff their vertices are adjacent.
  inline bool commutes(GPContext const& ctx, Letter const& x, Letter const& y) {
    return ctx.adjacent(x.vertex, y.vertex);
  }

  Word concat(Word u, Word const& v);

  std::string format_letter(GPContext const& ctx, Letter const& x);

  //! Letters separated by single spaces; the empty word is "e".
  std::string format_word(GPContext const& ctx, Word const& w);

  //! Parses "v.e v.e ..." or "e".  Throws PreconditionError on bad input.
  Word parse_word(GPContext const& ctx, std::string_view text);

}  // namespace graphprod

#endif  // GRAPHPROD_CORE_HPP_
