#include "graphprod/product_reduction.hpp"

#include <algorithm>
#include <map>

#include "graphprod/normalform.hpp"

namespace graphprod {

  std::vector<std::size_t> ReductionFunction::glue_moves() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < glue.size(); ++k) {
      if (glue[k]) {
        out.push_back(k);
      }
    }
    return out;
  }

  std::vector<std::size_t> ReductionFunction::deletion_moves() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < glue.size(); ++k) {
      if (!glue[k]) {
        out.push_back(k);
      }
    }
    return out;
  }

  std::strong_ordering
  ReductionFunction::operator<=>(ReductionFunction const& that) const {
    if (auto c = theta.size() <=> that.theta.size(); c != 0) {
      return c;
    }
    if (auto c = theta <=> that.theta; c != 0) {
      return c;
    }
    for (std::size_t k = 0; k < glue.size(); ++k) {
      if (glue[k] != that.glue[k]) {
        return glue[k] ? std::strong_ordering::greater
                       : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  Word subword(Word const& w, std::vector<std::size_t> const& positions) {
    Word out;
    for (auto i : positions) {
      out.push_back(w[i]);
    }
    return out;
  }

  std::vector<std::size_t> first_block_positions(GPContext const& ctx,
                                                 Word const&      w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      bool front = true;
      for (std::size_t j = 0; j < i && front; ++j) {
        front = ctx.adjacent(w[i].vertex, w[j].vertex);
      }
      if (front) {
        out.push_back(i);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Traced reduction
  ////////////////////////////////////////////////////////////////////////

  TracedReduction reduce_product_traced(GPContext const& ctx,
                                        Word const&      s,
                                        Word const&      a) {
    if (!is_reduced(ctx, s) || !is_reduced(ctx, a)) {
      throw PreconditionError("reduce_product_traced expects reduced words");
    }
    std::vector<bool> s_alive(s.size(), true), a_alive(a.size(), true);
    Word              glued;
    std::vector<std::size_t> glued_origin;
    TracedReduction          out;

    auto available = [&](std::size_t o) -> std::optional<std::size_t> {
      auto const v = a[o].vertex;
      for (std::size_t q = 0; q < o; ++q) {
        if (a_alive[q] && !ctx.adjacent(a[q].vertex, v)) {
          return std::nullopt;
        }
      }
      for (auto const& g : glued) {
        if (!ctx.adjacent(g.vertex, v)) {
          return std::nullopt;
        }
      }
      for (std::size_t y = s.size(); y-- > 0;) {
        if (!s_alive[y]) {
          continue;
        }
        if (s[y].vertex == v) {
          return y;
        }
        if (!ctx.adjacent(s[y].vertex, v)) {
          return std::nullopt;
        }
      }
      return std::nullopt;
    };

    while (true) {
      std::optional<std::size_t> y;
      std::size_t                o = 0;
      for (; o < a.size(); ++o) {
        if (a_alive[o] && (y = available(o))) {
          break;
        }
      }
      if (!y) {
        break;
      }
      auto const& m    = ctx.monoid(a[o].vertex);
      auto        prod = m.multiply(s[*y].element, a[o].element);
      bool const  del  = m.is_identity(prod);
      s_alive[*y]      = false;
      a_alive[o]       = false;
      out.function.theta.push_back(o);
      out.function.glue.push_back(!del);
      out.s_positions.push_back(*y);
      if (!del) {
        glued.push_back(Letter{a[o].vertex, std::move(prod)});
        glued_origin.push_back(o);
      }
    }

    for (std::size_t y = 0; y < s.size(); ++y) {
      if (s_alive[y]) {
        out.residual_prefix.push_back(s[y]);
      }
    }
    out.target        = glued;
    out.target_origin = glued_origin;
    out.glued_count   = glued.size();
    for (std::size_t o = 0; o < a.size(); ++o) {
      if (a_alive[o]) {
        out.target.push_back(a[o]);
        out.target_origin.push_back(o);
      }
    }
    out.result = concat(out.residual_prefix, out.target);
    if (!is_reduced(ctx, out.result)) {
      throw InvariantError("traced reduction produced a non-reduced word");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumerating reduction functions
  ////////////////////////////////////////////////////////////////////////

  Word realize_reduction(GPContext const&            ctx,
                         Word const&                 a,
                         ReductionFunction const&    f,
                         std::vector<Element> const& values) {
    if (values.size() != f.moves()) {
      throw PreconditionError("one value per move is required");
    }
    Word out;
    for (auto k : f.glue_moves()) {
      out.push_back(Letter{a[f.theta[k]].vertex, values[k]});
    }
    auto dels = f.deletion_moves();
    for (auto it = dels.rbegin(); it != dels.rend(); ++it) {
      out.push_back(Letter{a[f.theta[*it]].vertex, values[*it]});
    }
    validate_word(ctx, out);
    return out;
  }

  std::vector<Element> default_realization(GPContext const&         ctx,
                                           Word const&              a,
                                           ReductionFunction const& f) {
    std::vector<Element> values;
    for (std::size_t k = 0; k < f.moves(); ++k) {
      auto const& x = a[f.theta[k]];
      auto const& m = ctx.monoid(x.vertex);
      auto v = f.glue[k] ? glue_multiplier(m, x.element)
                         : left_inverse_of(m, x.element);
      if (!v) {
        throw PreconditionError("move " + std::to_string(k)
                                + " cannot be realized");
      }
      values.push_back(*v);
    }
    return values;
  }

  namespace {
    void candidates(GPContext const&                ctx,
                    Word const&                     a,
                    std::vector<bool>&              alive,
                    std::vector<std::uint32_t>&     glued_vertices,
                    ReductionFunction&              f,
                    std::vector<ReductionFunction>& out) {
      out.push_back(f);
      for (std::size_t o = 0; o < a.size(); ++o) {
        if (!alive[o]) {
          continue;
        }
        auto const v     = a[o].vertex;
        bool       front = true;
        for (std::size_t q = 0; q < o && front; ++q) {
          front = !alive[q] || ctx.adjacent(a[q].vertex, v);
        }
        for (auto g : glued_vertices) {
          front = front && ctx.adjacent(g, v);
        }
        if (!front) {
          continue;
        }
        auto const& m = ctx.monoid(v);
        alive[o]      = false;
        f.theta.push_back(o);
        if (m.is_left_invertible(a[o].element)) {
          f.glue.push_back(false);
          candidates(ctx, a, alive, glued_vertices, f, out);
          f.glue.pop_back();
        }
        if (admits_glue(m, a[o].element)) {
          f.glue.push_back(true);
          glued_vertices.push_back(v);
          candidates(ctx, a, alive, glued_vertices, f, out);
          glued_vertices.pop_back();
          f.glue.pop_back();
        }
        f.theta.pop_back();
        alive[o] = true;
      }
    }
  }  // namespace

  std::vector<ReductionFunction>
  enumerate_reduction_functions(GPContext const& ctx, Word const& a) {
    if (!is_reduced(ctx, a)) {
      throw PreconditionError(
          "enumerate_reduction_functions expects a reduced word");
    }
    std::vector<ReductionFunction> all;
    std::vector<bool>              alive(a.size(), true);
    std::vector<std::uint32_t>     glued;
    ReductionFunction              f;
    candidates(ctx, a, alive, glued, f, all);

    std::vector<ReductionFunction> out;
    for (auto const& g : all) {
      auto s = realize_reduction(ctx, a, g, default_realization(ctx, a, g));
      if (is_reduced(ctx, s)
          && reduce_product_traced(ctx, s, a).function == g) {
        out.push_back(g);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Factorisation of common multiples
  ////////////////////////////////////////////////////////////////////////

  std::vector<std::size_t> occurrence_matching(Word const& x, Word const& y) {
    if (x.size() != y.size()) {
      throw PreconditionError("words of different lengths");
    }
    std::map<std::uint32_t, std::vector<std::size_t>> where;
    for (std::size_t i = 0; i < x.size(); ++i) {
      where[x[i].vertex].push_back(i);
    }
    std::map<std::uint32_t, std::size_t> seen;
    std::vector<std::size_t>             out(y.size());
    for (std::size_t j = 0; j < y.size(); ++j) {
      auto& list = where[y[j].vertex];
      auto& k    = seen[y[j].vertex];
      if (k >= list.size()) {
        throw PreconditionError("words are not shuffles of each other");
      }
      out[j] = list[k++];
    }
    return out;
  }

  namespace {
    std::vector<std::size_t> invert(std::vector<std::size_t> const& m) {
      std::vector<std::size_t> inv(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) {
        inv[m[j]] = j;
      }
      return inv;
    }
  }  // namespace

  Factorization factor_common_multiple(GPContext const& ctx,
                                       Word const&      u,
                                       Word const&      a,
                                       Word const&      v,
                                       Word const&      b) {
    auto const x = concat(u, a);
    auto const y = concat(v, b);
    if (!is_reduced(ctx, x) || !is_reduced(ctx, y)) {
      throw PreconditionError("u o a and v o b must be reduced");
    }
    if (foata_left(ctx, x) != foata_left(ctx, y)) {
      throw PreconditionError("u o a and v o b are not equal");
    }
    auto const to_x = occurrence_matching(x, y);
    auto const to_y = invert(to_x);

    Factorization     out;
    std::vector<bool> used(u.size(), false);
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto i = to_x[v.size() + j];
      if (i < u.size()) {
        out.b_prime.push_back(j);
        used[i] = true;
      }
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (to_y[u.size() + i] < v.size()) {
        out.a_prime.push_back(i);
      }
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (!used[i]) {
        out.w.push_back(u[i]);
      }
    }
    auto const ap = subword(a, out.a_prime);
    auto const bp = subword(b, out.b_prime);
    if (!equal(ctx, u, concat(out.w, bp)) || !equal(ctx, v, concat(out.w, ap))
        || !equal(ctx, concat(ap, b), concat(bp, a))) {
      throw InvariantError("factorisation of a common multiple failed");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Double shuffle
  ////////////////////////////////////////////////////////////////////////

  DoubleShuffle double_shuffle_decompose(GPContext const&                ctx,
                                         Word const&                     a,
                                         Word const&                     b,
                                         std::vector<std::size_t> const& a_prime,
                                         std::vector<std::size_t> const& b_prime) {
    auto const ap = subword(a, a_prime);
    auto const bp = subword(b, b_prime);
    auto const x  = concat(bp, a);
    auto const y  = concat(ap, b);
    if (!is_reduced(ctx, x) || !is_reduced(ctx, y)
        || foata_left(ctx, x) != foata_left(ctx, y)) {
      throw PreconditionError("b' o a and a' o b must be equal reduced words");
    }
    auto const to_x = occurrence_matching(x, y);
    auto const to_y = invert(to_x);

    auto const a_first = first_block_positions(ctx, a);
    auto const b_first = first_block_positions(ctx, b);
    auto in = [](std::vector<std::size_t> const& v, std::size_t i) {
      return std::find(v.begin(), v.end(), i) != v.end();
    };

    DoubleShuffle out;
    for (auto i : a_first) {
      auto q = to_y[bp.size() + i];
      if (q >= ap.size() && in(b_first, q - ap.size())) {
        out.i_a.push_back(i);
        out.sigma.emplace_back(i, q - ap.size());
      } else if (in(a_prime, i)) {
        out.j_a.push_back(i);
      } else {
        out.k_a.push_back(i);
      }
    }
    for (auto j : b_first) {
      auto p = to_x[ap.size() + j];
      if (p >= bp.size() && in(a_first, p - bp.size())) {
        out.i_b.push_back(j);
      } else if (in(b_prime, j)) {
        out.j_b.push_back(j);
      } else {
        out.k_b.push_back(j);
      }
    }
    out.a_left = subword(a, out.j_a);
    out.b_left = subword(b, out.j_b);
    out.w_ab   = subword(a, out.i_a);

    std::vector<bool> drop(y.size(), false);
    for (std::size_t q = 0; q < a_prime.size(); ++q) {
      drop[q] = in(out.j_a, a_prime[q]);
    }
    for (auto j : out.j_b) {
      drop[ap.size() + j] = true;
    }
    for (auto j : out.i_b) {
      drop[ap.size() + j] = true;
    }
    for (std::size_t q = 0; q < y.size(); ++q) {
      if (!drop[q]) {
        out.tail.push_back(y[q]);
      }
    }
    auto rhs = concat(concat(concat(out.a_left, out.b_left), out.w_ab),
                      out.tail);
    if (!equal(ctx, y, rhs)) {
      throw InvariantError("double shuffle decomposition failed");
    }
    return out;
  }

}  // namespace graphprod
