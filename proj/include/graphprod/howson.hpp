// Intersections of principal left ideals.

#ifndef GRAPHPROD_HOWSON_HPP_
#define GRAPHPROD_HOWSON_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "graphprod/core.hpp"
#include "graphprod/normalform.hpp"

namespace graphprod {

  //! Letters usable when searching below a and b: every non-identity element
  //! of each finite vertex monoid met by a or b, and every non-empty factor of
  //! a free letter of a or b.
  std::vector<Letter> search_letters(GPContext const& ctx,
                                     Word const&      a,
                                     Word const&      b);

  //! Reduced words of length at most max_length over the given letters, in
  //! shortlex order of their canonical forms.
  std::vector<CanonicalForm>
  enumerate_elements(GPContext const&           ctx,
                     std::vector<Letter> const& letters,
                     std::size_t                max_length);

  //! The shortlex least element of GP[a] and GP[b] with length at most
  //! bound (default: the sum of the lengths of the standard forms).
  std::optional<CanonicalForm>
  find_intersection_witness(GPContext const&           ctx,
                            Word const&                a,
                            Word const&                b,
                            std::optional<std::size_t> bound = std::nullopt);

  struct IntersectionGenerator {
    CanonicalForm element;
    //! Letters coming from vertex level intersections, one per matched pair.
    Word vertex_part;
    //! The remaining letters.
    Word rest;
  };

  struct IntersectionResult {
    bool empty = true;
    //! Sorted in shortlex order, without repeats.
    std::vector<IntersectionGenerator> generators;
    std::optional<CanonicalForm>       witness;

    std::vector<CanonicalForm> elements() const;
  };

  //! A finite generating set for GP[a] intersected with GP[b].  Every
  //! generator is checked to lie in both ideals.
  IntersectionResult intersect_principal(GPContext const& ctx,
                                         Word const&      a,
                                         Word const&      b);

  enum class IdealShape { empty, principal, not_principal };

  struct LcmReport {
    IdealShape                   shape = IdealShape::empty;
    std::optional<CanonicalForm> generator;
    //! For not_principal: two generators neither of which divides the other.
    std::optional<std::pair<CanonicalForm, CanonicalForm>> incomparable;
  };

  LcmReport lcm_check(GPContext const& ctx, Word const& a, Word const& b);

}  // namespace graphprod

#endif  // GRAPHPROD_HOWSON_HPP_
