// Principal left ideals of a graph product.

#ifndef GRAPHPROD_IDEALS_HPP_
#define GRAPHPROD_IDEALS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "graphprod/core.hpp"

namespace graphprod {

  struct StandardSplit {
    //! Left invertible letters moved off the front.
    Word prefix;
    //! A reduced word whose first Foata block has no left invertible letter.
    Word standard;
  };

  //! Repeatedly moves the left invertible letters of the first Foata block
  //! into the prefix.  The input need not be reduced.
  StandardSplit strip_left_invertible(GPContext const& ctx, Word const& w);

  //! Is the first Foata block of reduce(w) free of left invertible letters?
  bool is_standard(GPContext const& ctx, Word const& w);

  //! A left inverse of a word of left invertible letters.
  Word left_inverse_word(GPContext const& ctx, Word const& w);

  //! If GP[u] is contained in GP[v], a reduced word c with [u] = [c][v].
  std::optional<Word> leq_principal(GPContext const& ctx,
                                    Word const&      u,
                                    Word const&      v);

  //! GP[u] = GP[v].
  bool eq_principal(GPContext const& ctx, Word const& u, Word const& v);

  struct VertexAccpl {
    bool        holds = false;
    std::string reason;
  };

  struct AccplReport {
    bool                     holds = false;
    std::vector<VertexAccpl> vertices;
  };

  //! ACCPL for the product holds iff it holds in every vertex monoid.  Finite
  //! monoids satisfy it trivially; free monoids because the length of a
  //! generator strictly decreases along a strict chain.
  AccplReport accpl_report(GPContext const& ctx);

}  // namespace graphprod

#endif  // GRAPHPROD_IDEALS_HPP_
