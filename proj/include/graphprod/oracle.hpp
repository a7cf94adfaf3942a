// Brute force reference implementations.  Nothing here uses reduce, the
// Foata forms, or any other part of the library beyond core.hpp; equality is
// decided by rewriting with the defining relations.

#ifndef GRAPHPROD_ORACLE_HPP_
#define GRAPHPROD_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "graphprod/core.hpp"

namespace graphprod {

  //! Searches the words reachable from u by single applications of the
  //! defining relations, in either direction.  A relation that lengthens a
  //! word is applied only if the result has at most length_bound letters.
  //! Default bound: max(|u|, |v|) + 2.
  bool oracle_equal(GPContext const&           ctx,
                    Word const&                u,
                    Word const&                v,
                    std::optional<std::size_t> length_bound = std::nullopt);

  //! All words reachable from u as in oracle_equal.
  std::vector<Word> oracle_component(GPContext const& ctx,
                                     Word const&      u,
                                     std::size_t      length_bound);

  //! The lexicographically least shortest word reachable from w by deleting
  //! identities, merging neighbouring letters of one vertex monoid, and
  //! swapping neighbouring letters of adjacent vertices.  Two words are equal
  //! in the product iff their keys coincide.
  Word oracle_key(GPContext const& ctx, Word const& w);

  //! Distinct elements (as keys) of length at most max_length over the given
  //! letters, in shortlex order.
  std::vector<Word> oracle_elements(GPContext const&           ctx,
                                    std::vector<Letter> const& letters,
                                    std::size_t                max_length);

  //! Every non-identity element of each finite vertex monoid, and for each
  //! free vertex its single symbols and the non-empty factors of the free
  //! letters of the given words.
  std::vector<Letter> oracle_letters(GPContext const&         ctx,
                                     std::vector<Word> const& words);

  //! The shortlex least c of length at most bound (default |u| + |v|) with
  //! c o v = u, searching letters of the vertices occurring in u and v.
  std::optional<Word> oracle_leq_principal(
      GPContext const&           ctx,
      Word const&                u,
      Word const&                v,
      std::optional<std::size_t> bound = std::nullopt);

  //! Keys of all elements of length at most bound lying in GP[a] and GP[b].
  std::vector<Word> oracle_intersection_elements(GPContext const& ctx,
                                                 Word const&      a,
                                                 Word const&      b,
                                                 std::size_t      bound);

  //! All pairs (s, t) of distinct elements of length at most max_length,
  //! s before t in shortlex order, with s o a = t o a.
  std::vector<std::pair<Word, Word>>
  oracle_annihilator_pairs(GPContext const& ctx,
                           Word const&      a,
                           std::size_t      max_length);

}  // namespace graphprod

#endif  // GRAPHPROD_ORACLE_HPP_
