#include "graphprod/ideals.hpp"

#include <set>

#include "graphprod/normalform.hpp"

namespace graphprod {

  StandardSplit strip_left_invertible(GPContext const& ctx, Word const& w) {
    StandardSplit out;
    out.standard = reduce(ctx, w);
    while (true) {
      auto cf = foata_left(ctx, out.standard);
      if (cf.blocks.empty()) {
        break;
      }
      Word moved, rest;
      for (auto const& x : cf.blocks[0]) {
        (ctx.monoid(x.vertex).is_left_invertible(x.element) ? moved : rest)
            .push_back(x);
      }
      if (moved.empty()) {
        break;
      }
      out.prefix.insert(out.prefix.end(), moved.begin(), moved.end());
      for (std::size_t i = 1; i < cf.blocks.size(); ++i) {
        rest.insert(rest.end(), cf.blocks[i].begin(), cf.blocks[i].end());
      }
      out.standard = std::move(rest);
    }
    return out;
  }

  bool is_standard(GPContext const& ctx, Word const& w) {
    return strip_left_invertible(ctx, w).prefix.empty();
  }

  Word left_inverse_word(GPContext const& ctx, Word const& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto y = left_inverse_of(ctx.monoid(it->vertex), it->element);
      if (!y) {
        throw PreconditionError("letter " + format_letter(ctx, *it)
                                + " has no left inverse");
      }
      out.push_back(Letter{it->vertex, *y});
    }
    return out;
  }

  namespace {
    // Index of the last letter of z at vertex v, provided it commutes with
    // everything after it.
    std::optional<std::size_t> last_movable(GPContext const& ctx,
                                            Word const&      z,
                                            std::uint32_t    v) {
      for (std::size_t i = z.size(); i-- > 0;) {
        if (z[i].vertex == v) {
          return i;
        }
        if (!ctx.adjacent(z[i].vertex, v)) {
          return std::nullopt;
        }
      }
      return std::nullopt;
    }
  }  // namespace

  std::optional<Word> leq_principal(GPContext const& ctx,
                                    Word const&      u,
                                    Word const&      v) {
    auto const split = strip_left_invertible(ctx, v);
    auto const cf    = foata_left(ctx, split.standard);
    Word       z     = canonical(ctx, u).word();
    Word       c;

    if (!cf.blocks.empty()) {
      for (std::size_t b = cf.blocks.size(); b-- > 1;) {
        for (auto it = cf.blocks[b].rbegin(); it != cf.blocks[b].rend(); ++it) {
          auto i = last_movable(ctx, z, it->vertex);
          if (!i || z[*i] != *it) {
            return std::nullopt;
          }
          z.erase(z.begin() + *i);
        }
      }
      std::set<std::size_t> removed;
      Word                  tail;
      for (auto const& y : cf.blocks[0]) {
        auto i = last_movable(ctx, z, y.vertex);
        if (!i) {
          return std::nullopt;
        }
        auto const& m = ctx.monoid(y.vertex);
        auto        p = vertex_divides(m, z[*i].element, y.element);
        if (!p) {
          return std::nullopt;
        }
        removed.insert(*i);
        if (!m.is_identity(*p)) {
          tail.push_back(Letter{y.vertex, *p});
        }
      }
      for (std::size_t i = 0; i < z.size(); ++i) {
        if (!removed.count(i)) {
          c.push_back(z[i]);
        }
      }
      c.insert(c.end(), tail.begin(), tail.end());
    } else {
      c = z;
    }
    c = canonical(ctx, concat(c, left_inverse_word(ctx, split.prefix))).word();
    if (!equal(ctx, concat(c, v), u)) {
      throw InvariantError("divisibility witness does not verify");
    }
    return c;
  }

  AccplReport accpl_report(GPContext const& ctx) {
    AccplReport out;
    out.holds = true;
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      auto const& m = ctx.monoid(v);
      VertexAccpl r;
      r.holds = true;
      if (m.is_free()) {
        r.reason = "free monoid: generator length bounds chain length";
      } else {
        std::set<std::vector<bool>> ideals;
        for (auto const& a : m.elements()) {
          std::vector<bool> in(m.size(), false);
          for (auto const& p : m.elements()) {
            in[m.multiply(p, a).index()] = true;
          }
          ideals.insert(in);
        }
        r.reason = "finite monoid with " + std::to_string(ideals.size())
                   + " principal left ideals";
      }
      out.vertices.push_back(r);
    }
    return out;
  }

  bool eq_principal(GPContext const& ctx, Word const& u, Word const& v) {
    return leq_principal(ctx, u, v) && leq_principal(ctx, v, u);
  }

}  // namespace graphprod
