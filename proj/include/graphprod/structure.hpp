// Structural properties of the graph: relative completeness, weak left
// Noetherianity, and decompositions into simpler factors.

#ifndef GRAPHPROD_STRUCTURE_HPP_
#define GRAPHPROD_STRUCTURE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphprod/core.hpp"
#include "graphprod/normalform.hpp"

namespace graphprod {

  struct RelativeCompleteness {
    bool holds = false;
    //! The non-adjacent pair of two element vertex monoids, if any.
    std::optional<std::pair<std::size_t, std::size_t>> special_pair;
    std::vector<std::string>                           violations;
  };

  //! Every pair of distinct non-adjacent vertices must either carry two
  //! groups, or be the single pair of two element monoids (not both groups)
  //! adjacent to every other vertex.
  RelativeCompleteness relative_completeness(GPContext const& ctx);

  bool is_relatively_complete(GPContext const& ctx);

  //! Weak left Noetherianity of a single vertex monoid.  True for finite
  //! monoids and free monoids of rank at most one.
  bool vertex_wln(VertexMonoid const& m);

  struct WlnReport {
    bool                     holds = false;
    RelativeCompleteness     completeness;
    std::vector<bool>        vertices;
    //! Vertices whose monoid is not a group; finitely many, as the graph is
    //! finite.
    std::vector<std::size_t> non_group_vertices;
    std::vector<std::string> reasons;
  };

  WlnReport decide_wln(GPContext const& ctx);

  struct Decomposition {
    std::optional<std::pair<std::size_t, std::size_t>> free_pair;
    //! The other vertices with a non-group monoid; pairwise adjacent.
    std::vector<std::size_t> restricted_direct;
    //! Vertices with group monoids.
    std::vector<std::size_t> group_product;
  };

  //! Throws PreconditionError unless ctx is relatively complete.
  Decomposition direct4_partition(GPContext const& ctx);

  //! The product over the induced subgraph on a set of vertices.
  GPContext induced_context(GPContext const&                ctx,
                            std::vector<std::size_t> const& vertices);

  //! The isomorphism GP = GP(first) x GP(second), for a vertex set whose
  //! every vertex is adjacent to every vertex outside it.
  class BipartiteSplit {
   public:
    BipartiteSplit(GPContext const& ctx, std::vector<std::size_t> first);

    GPContext const& first() const noexcept {
      return _first;
    }
    GPContext const& second() const noexcept {
      return _second;
    }
    std::vector<std::size_t> const& first_vertices() const noexcept {
      return _first_vertices;
    }
    std::vector<std::size_t> const& second_vertices() const noexcept {
      return _second_vertices;
    }

    std::pair<CanonicalForm, CanonicalForm> psi(Word const& w) const;

    CanonicalForm combine(CanonicalForm const& x, CanonicalForm const& y) const;

   private:
    GPContext const*           _ctx;
    GPContext                  _first, _second;
    std::vector<std::size_t>   _first_vertices, _second_vertices;
    std::vector<std::uint32_t> _local;  // index in its part of each vertex
    std::vector<bool>          _in_first;
  };

  //! Throws PreconditionError if some vertex of first is not adjacent to some
  //! vertex outside it.
  BipartiteSplit split_bipartite(GPContext const&                ctx,
                                 std::vector<std::size_t> const& first);

  struct VertexCoherency {
    bool        howson = false;
    bool        fle    = false;
    std::string reason;
  };

  struct SampleEvidence {
    Word        a, b;
    std::size_t intersection_generators = 0;
    bool        intersection_empty      = true;
  };

  struct AnnihilatorEvidence {
    Word        a;
    std::size_t generators = 0;
  };

  struct CoherencyReport {
    bool                             holds = false;
    std::vector<VertexCoherency>     vertices;
    std::vector<SampleEvidence>      intersections;
    std::vector<AnnihilatorEvidence> annihilators;
  };

  //! Left coherency holds iff every vertex monoid is left Howson and finitely
  //! left equated.  The samples are used to produce evidence only.
  CoherencyReport coherency_report(GPContext const&         ctx,
                                   std::vector<Word> const& samples = {});

}  // namespace graphprod

#endif  // GRAPHPROD_STRUCTURE_HPP_
