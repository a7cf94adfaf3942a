// Reduced words and Foata normal forms.

#ifndef GRAPHPROD_NORMALFORM_HPP_
#define GRAPHPROD_NORMALFORM_HPP_

#include <cstddef>
#include <vector>

#include "graphprod/core.hpp"

namespace graphprod {

  //! A word split into complete blocks, each sorted by vertex.
  struct CanonicalForm {
    std::vector<Word> blocks;

    Word        word() const;
    std::size_t length() const;

    bool operator==(CanonicalForm const&) const = default;
  };

  struct CanonicalFormHash {
    std::size_t operator()(CanonicalForm const& c) const noexcept {
      return WordHash{}(c.word());
    }
  };

  //! Shortlex order on the flattened words.
  bool shortlex_less(CanonicalForm const& x, CanonicalForm const& y);

  //! No identity letters, and between any two letters with the same vertex
  //! there is a letter whose vertex is not adjacent to it.
  bool is_reduced(GPContext const& ctx, Word const& w);

  //! A reduced word equal to w in the graph product.
  Word reduce(GPContext const& ctx, Word const& w);

  //! Is y the rearrangement of x with y[i] = x[sigma[i]] obtained by
  //! swapping commuting letters only?
  bool shuffle_valid(GPContext const&                ctx,
                     Word const&                     x,
                     std::vector<std::size_t> const& sigma);

  //! Left Foata form of a reduced word: the first block holds the letters
  //! that can be moved to the front.
  CanonicalForm foata_left(GPContext const& ctx, Word const& reduced);

  //! Mirror image of foata_left: the last block holds the letters that can
  //! be moved to the end.
  CanonicalForm foata_right(GPContext const& ctx, Word const& reduced);

  CanonicalForm canonical(GPContext const& ctx, Word const& w);

  bool equal(GPContext const& ctx, Word const& u, Word const& v);

  CanonicalForm multiply(GPContext const& ctx, Word const& u, Word const& v);

  //! "[v.e v.e][v.e]"; the empty form prints as "e".
  std::string format_canonical(GPContext const& ctx, CanonicalForm const& c);

}  // namespace graphprod

#endif  // GRAPHPROD_NORMALFORM_HPP_
