// Reducing a product of two reduced words, and the combinatorics of how
// letters cancel or merge across the join.

#ifndef GRAPHPROD_PRODUCT_REDUCTION_HPP_
#define GRAPHPROD_PRODUCT_REDUCTION_HPP_

#include <compare>
#include <cstddef>
#include <vector>

#include "graphprod/core.hpp"

namespace graphprod {

  //! Records which letters of the right factor a were consumed when a reduced
  //! word s was multiplied onto it, in the order they were consumed.
  //!
  //! Move k consumed the letter of a at position theta[k] (0-based).  It was
  //! either merged into a letter of s (a glue) or cancelled against a left
  //! inverse in s (a deletion).
  struct ReductionFunction {
    std::vector<std::size_t> theta;
    std::vector<bool>        glue;

    std::size_t moves() const noexcept {
      return theta.size();
    }

    std::vector<std::size_t> glue_moves() const;
    std::vector<std::size_t> deletion_moves() const;

    bool                 operator==(ReductionFunction const&) const = default;
    std::strong_ordering operator<=>(ReductionFunction const& that) const;
  };

  struct TracedReduction {
    //! residual_prefix o target, reduced and equal to s o a.
    Word              result;
    ReductionFunction function;
    //! Position in s of the letter used by each move.
    std::vector<std::size_t> s_positions;
    //! The letters of s not used by any move, in order.
    Word residual_prefix;
    //! The glued letters (in move order) followed by the unused letters of a.
    Word target;
    //! For each letter of target, the position in a it came from.
    std::vector<std::size_t> target_origin;
    //! The first glued_count letters of target are glued letters.
    std::size_t glued_count = 0;
  };

  //! Reduces s o a for reduced s and a, one move at a time.  At each step the
  //! move using the leftmost available letter of a is taken.
  TracedReduction reduce_product_traced(GPContext const& ctx,
                                        Word const&      s,
                                        Word const&      a);

  //! All reduction functions arising from reduce_product_traced(s, a) as s
  //! ranges over reduced words, in increasing order.
  std::vector<ReductionFunction>
  enumerate_reduction_functions(GPContext const& ctx, Word const& a);

  //! The word s whose letters are values[k] at the vertex of a[theta[k]],
  //! glue letters first in move order, then deletion letters in reverse move
  //! order.
  Word realize_reduction(GPContext const&            ctx,
                         Word const&                 a,
                         ReductionFunction const&    f,
                         std::vector<Element> const& values);

  //! The least choice of values for realize_reduction: least left inverses
  //! for deletions and least non-trivial multipliers for glues.
  std::vector<Element> default_realization(GPContext const&         ctx,
                                           Word const&              a,
                                           ReductionFunction const& f);

  //! For reduced words x and y which are shuffles of each other: the map
  //! sending a position of y to the position of x holding the same letter.
  std::vector<std::size_t> occurrence_matching(Word const& x, Word const& y);

  struct Factorization {
    //! Positions of the letters of a that end up in v (increasing).
    std::vector<std::size_t> a_prime;
    //! Positions of the letters of b that end up in u (increasing).
    std::vector<std::size_t> b_prime;
    //! u = w o b', v = w o a'.
    Word w;
  };

  //! For reduced u o a and v o b representing the same element.
  Factorization factor_common_multiple(GPContext const& ctx,
                                       Word const&      u,
                                       Word const&      a,
                                       Word const&      v,
                                       Word const&      b);

  struct DoubleShuffle {
    std::vector<std::size_t> i_a, j_a, k_a;
    std::vector<std::size_t> i_b, j_b, k_b;
    //! (i, j) with i in i_a matched to j in i_b.
    std::vector<std::pair<std::size_t, std::size_t>> sigma;
    //! Letters of a at j_a, of b at j_b, of a at i_a.
    Word a_left, b_left, w_ab;
    //! a' o b = a_left o b_left o w_ab o tail.
    Word tail;
  };

  //! For reduced a, b and subwords a', b' (given by positions) with
  //! b' o a = a' o b, both sides reduced.  The distinguished prefixes of a and
  //! b are their first Foata blocks.
  DoubleShuffle double_shuffle_decompose(GPContext const&                ctx,
                                         Word const&                     a,
                                         Word const&                     b,
                                         std::vector<std::size_t> const& a_prime,
                                         std::vector<std::size_t> const& b_prime);

  //! Letters of w at the given positions.
  Word subword(Word const& w, std::vector<std::size_t> const& positions);

  //! Positions of the letters of the first Foata block of a reduced word.
  std::vector<std::size_t> first_block_positions(GPContext const& ctx,
                                                 Word const&      w);

}  // namespace graphprod

#endif  // GRAPHPROD_PRODUCT_REDUCTION_HPP_
