#include "graphprod/howson.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "graphprod/ideals.hpp"
#include "graphprod/product_reduction.hpp"

namespace graphprod {

  std::vector<Letter> search_letters(GPContext const& ctx,
                                     Word const&      a,
                                     Word const&      b) {
    std::set<Letter>           out;
    std::set<std::uint32_t>    finite_vertices;
    for (auto const* w : {&a, &b}) {
      for (auto const& x : *w) {
        auto const& m = ctx.monoid(x.vertex);
        if (!m.is_free()) {
          finite_vertices.insert(x.vertex);
          continue;
        }
        auto const& s = x.element.symbols();
        for (std::size_t i = 0; i < s.size(); ++i) {
          for (std::size_t j = i + 1; j <= s.size(); ++j) {
            out.insert(Letter{x.vertex, Element::free(s.substr(i, j - i))});
          }
        }
      }
    }
    for (auto v : finite_vertices) {
      auto const& m = ctx.monoid(v);
      for (auto const& e : m.elements()) {
        if (!m.is_identity(e)) {
          out.insert(Letter{v, e});
        }
      }
    }
    return {out.begin(), out.end()};
  }

  namespace {
    // Reduced words of length exactly n + 1 extending the given level.
    std::vector<CanonicalForm>
    next_level(GPContext const&                  ctx,
               std::vector<CanonicalForm> const& level,
               std::vector<Letter> const&        letters) {
      std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
      std::vector<CanonicalForm>                           out;
      for (auto const& e : level) {
        auto const n = e.length();
        for (auto const& x : letters) {
          auto w = e.word();
          w.push_back(x);
          if (!is_reduced(ctx, w)) {
            continue;
          }
          auto c = foata_left(ctx, w);
          if (c.length() == n + 1 && seen.insert(c).second) {
            out.push_back(std::move(c));
          }
        }
      }
      std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
        return shortlex_less(x, y);
      });
      return out;
    }
  }  // namespace

  std::vector<CanonicalForm>
  enumerate_elements(GPContext const&           ctx,
                     std::vector<Letter> const& letters,
                     std::size_t                max_length) {
    std::vector<CanonicalForm> level{CanonicalForm{}}, out{CanonicalForm{}};
    for (std::size_t n = 0; n < max_length && !level.empty(); ++n) {
      level = next_level(ctx, level, letters);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  std::optional<CanonicalForm>
  find_intersection_witness(GPContext const&           ctx,
                            Word const&                a,
                            Word const&                b,
                            std::optional<std::size_t> bound) {
    std::size_t const max_length
        = bound.value_or(strip_left_invertible(ctx, a).standard.size()
                         + strip_left_invertible(ctx, b).standard.size());
    auto const letters = search_letters(ctx, a, b);
    std::vector<CanonicalForm> level{CanonicalForm{}};
    for (std::size_t n = 0; n <= max_length && !level.empty(); ++n) {
      if (n > 0) {
        level = next_level(ctx, level, letters);
      }
      for (auto const& z : level) {
        auto w = z.word();
        if (leq_principal(ctx, w, a) && leq_principal(ctx, w, b)) {
          return z;
        }
      }
    }
    return std::nullopt;
  }

  std::vector<CanonicalForm> IntersectionResult::elements() const {
    std::vector<CanonicalForm> out;
    for (auto const& g : generators) {
      out.push_back(g.element);
    }
    return out;
  }

  IntersectionResult intersect_principal(GPContext const& ctx,
                                         Word const&      a0,
                                         Word const&      b0) {
    auto const         a = strip_left_invertible(ctx, a0).standard;
    auto const         b = strip_left_invertible(ctx, b0).standard;
    IntersectionResult out;
    out.witness = find_intersection_witness(ctx, a, b);
    if (!out.witness) {
      return out;
    }
    out.empty   = false;
    auto const z = out.witness->word();
    auto const s = *leq_principal(ctx, z, a);
    auto const t = *leq_principal(ctx, z, b);
    auto const ra = reduce_product_traced(ctx, s, a);
    auto const rb = reduce_product_traced(ctx, t, b);
    if (!ra.function.deletion_moves().empty()
        || !rb.function.deletion_moves().empty()) {
      throw InvariantError("cancellation against a standard word");
    }
    auto const& c  = ra.target;
    auto const& d  = rb.target;
    auto const  f  = factor_common_multiple(
        ctx, ra.residual_prefix, c, rb.residual_prefix, d);
    auto const ds = double_shuffle_decompose(ctx, c, d, f.a_prime, f.b_prime);

    auto original_a = [&](std::size_t i) { return a[ra.target_origin[i]]; };
    auto original_b = [&](std::size_t j) { return b[rb.target_origin[j]]; };

    Word rest;
    for (auto i : ds.j_a) {
      rest.push_back(original_a(i));
    }
    for (auto j : ds.j_b) {
      rest.push_back(original_b(j));
    }
    rest.insert(rest.end(), ds.tail.begin(), ds.tail.end());

    std::vector<std::vector<Letter>> choices;
    for (auto const& [i, j] : ds.sigma) {
      auto const  x = original_a(i);
      auto const  y = original_b(j);
      auto const& m = ctx.monoid(x.vertex);
      std::vector<Letter> options;
      for (auto const& g : vertex_ideal_intersection(m, x.element, y.element)) {
        options.push_back(Letter{x.vertex, g});
      }
      if (options.empty()) {
        throw InvariantError("matched letters with disjoint vertex ideals");
      }
      choices.push_back(std::move(options));
    }

    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      Word head;
      for (std::size_t k = 0; k < choices.size(); ++k) {
        head.push_back(choices[k][pick[k]]);
      }
      auto g = canonical(ctx, concat(head, rest));
      if (seen.insert(g).second) {
        auto const w = g.word();
        if (!leq_principal(ctx, w, a0) || !leq_principal(ctx, w, b0)) {
          throw InvariantError("intersection generator outside an ideal");
        }
        out.generators.push_back(IntersectionGenerator{g, head, rest});
      }
      std::size_t k = 0;
      for (; k < choices.size(); ++k) {
        if (++pick[k] < choices[k].size()) {
          break;
        }
        pick[k] = 0;
      }
      if (k == choices.size()) {
        break;
      }
    }
    std::sort(out.generators.begin(),
              out.generators.end(),
              [](auto const& x, auto const& y) {
                return shortlex_less(x.element, y.element);
              });
    return out;
  }

  LcmReport lcm_check(GPContext const& ctx, Word const& a, Word const& b) {
    LcmReport  out;
    auto const r = intersect_principal(ctx, a, b);
    if (r.empty) {
      return out;
    }
    auto const gens = r.elements();
    for (auto const& g : gens) {
      bool all = true;
      for (auto const& h : gens) {
        if (!leq_principal(ctx, h.word(), g.word())) {
          all = false;
          break;
        }
      }
      if (all) {
        out.shape     = IdealShape::principal;
        out.generator = g;
        return out;
      }
    }
    out.shape = IdealShape::not_principal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (std::size_t j = i + 1; j < gens.size(); ++j) {
        if (!leq_principal(ctx, gens[i].word(), gens[j].word())
            && !leq_principal(ctx, gens[j].word(), gens[i].word())) {
          out.incomparable = std::make_pair(gens[i], gens[j]);
          return out;
        }
      }
    }
    return out;
  }

}  // namespace graphprod
