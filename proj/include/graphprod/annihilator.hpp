// Generators for the left annihilator congruence of an element.

#ifndef GRAPHPROD_ANNIHILATOR_HPP_
#define GRAPHPROD_ANNIHILATOR_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "graphprod/core.hpp"
#include "graphprod/normalform.hpp"
#include "graphprod/product_reduction.hpp"

namespace graphprod {

  enum class PairSource { deletion, glue, parallel };

  struct AnnihilatorPair {
    CanonicalForm left, right;
    PairSource    source = PairSource::deletion;
    //! Indices into reduction_functions of the annihilator.
    std::size_t first = 0, second = 0;
  };

  struct Annihilator {
    Word                           word;
    std::vector<ReductionFunction> reduction_functions;
    //! Distinct, non-diagonal, each with left o word = right o word.
    std::vector<AnnihilatorPair> pairs;
  };

  //! A finite set of pairs generating the left congruence of all (s, t) with
  //! s o a = t o a.
  Annihilator annihilator_generators(GPContext const& ctx, Word const& a);

  struct CongruenceBound {
    std::size_t max_length = 6;
    std::size_t max_states = 10000;
  };

  struct CongruenceSearch {
    bool        reached = false;
    std::size_t states  = 0;
  };

  //! Breadth first search from s, replacing c o p by c o q for (p, q) or
  //! (q, p) in the generating pairs.  reached == false means "unknown".
  CongruenceSearch in_left_congruence(GPContext const&              ctx,
                                      Word const&                   s,
                                      Word const&                   t,
                                      std::vector<AnnihilatorPair> const& pairs,
                                      CongruenceBound               bound = {});

  //! All reduced c with [c][p] = [u].
  std::vector<CanonicalForm> left_quotients(GPContext const& ctx,
                                            Word const&      u,
                                            Word const&      p);

  struct FleBounds {
    //! Component length of the oracle pairs to reach.
    std::size_t     oracle_length = 3;
    CongruenceBound congruence;
  };

  struct FleTarget {
    Annihilator generators;
    //! Every pair multiplies equal against the target.
    bool        verified     = false;
    std::size_t oracle_pairs = 0;
    std::size_t reached      = 0;

    double completeness() const {
      return oracle_pairs == 0 ? 1.0
                               : static_cast<double>(reached) / oracle_pairs;
    }
  };

  struct FleReport {
    bool                     holds = false;
    std::vector<bool>        vertices;
    std::vector<std::string> reasons;
    std::vector<FleTarget>   targets;
  };

  //! The product is finitely left equated iff every vertex monoid is.  For
  //! each sample target, K is computed, checked, and measured against the
  //! oracle pairs.
  FleReport fle_report(GPContext const&         ctx,
                       std::vector<Word> const& targets,
                       FleBounds                bounds = {});

  std::string to_string(PairSource s);

}  // namespace graphprod

#endif  // GRAPHPROD_ANNIHILATOR_HPP_
