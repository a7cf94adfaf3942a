#include "graphprod/structure.hpp"

#include <algorithm>

#include "graphprod/annihilator.hpp"
#include "graphprod/howson.hpp"

namespace graphprod {

  namespace {
    std::string pair_name(GPContext const& ctx, std::size_t u, std::size_t v) {
      return "(" + ctx.vertex_names[u] + "," + ctx.vertex_names[v] + ")";
    }

    bool two_elements(VertexMonoid const& m) {
      return !m.is_free() && m.size() == 2;
    }
  }  // namespace

  RelativeCompleteness relative_completeness(GPContext const& ctx) {
    RelativeCompleteness out;
    std::size_t const    n = ctx.vertex_count();
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (ctx.adjacent(u, v)) {
          continue;
        }
        auto const& mu = ctx.monoid(u);
        auto const& mv = ctx.monoid(v);
        if (is_group(mu) && is_group(mv)) {
          continue;
        }
        auto const prefix = "pair " + pair_name(ctx, u, v) + " violates Def (i): ";
        std::string problem;
        for (auto w : {u, v}) {
          if (problem.empty() && !two_elements(ctx.monoid(w))) {
            problem = ctx.monoid(w).is_free()
                          ? "M_" + ctx.vertex_names[w] + " is infinite"
                          : "|M_" + ctx.vertex_names[w]
                                + "| = " + std::to_string(ctx.monoid(w).size());
          }
        }
        for (std::size_t w = 0; w < n && problem.empty(); ++w) {
          if (w == u || w == v) {
            continue;
          }
          if (!ctx.adjacent(u, w)) {
            problem = pair_name(ctx, u, w) + " not an edge";
          } else if (!ctx.adjacent(v, w)) {
            problem = pair_name(ctx, v, w) + " not an edge";
          }
        }
        if (problem.empty() && out.special_pair) {
          problem = pair_name(ctx, out.special_pair->first,
                              out.special_pair->second)
                    + " is already the exceptional pair";
        }
        if (problem.empty()) {
          out.special_pair = std::make_pair(u, v);
        } else {
          out.violations.push_back(prefix + problem);
        }
      }
    }
    out.holds = out.violations.empty();
    return out;
  }

  bool is_relatively_complete(GPContext const& ctx) {
    return relative_completeness(ctx).holds;
  }

  bool vertex_wln(VertexMonoid const& m) {
    return !m.is_free() || m.rank() <= 1;
  }

  WlnReport decide_wln(GPContext const& ctx) {
    WlnReport out;
    out.completeness = relative_completeness(ctx);
    out.holds        = out.completeness.holds;
    out.reasons      = out.completeness.violations;
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      bool const ok = vertex_wln(ctx.monoid(v));
      out.vertices.push_back(ok);
      if (!is_group(ctx.monoid(v))) {
        out.non_group_vertices.push_back(v);
      }
      if (!ok) {
        out.holds = false;
        out.reasons.push_back("M_" + ctx.vertex_names[v]
                              + " is free of rank "
                              + std::to_string(ctx.monoid(v).rank()));
      }
    }
    return out;
  }

  Decomposition direct4_partition(GPContext const& ctx) {
    auto const rc = relative_completeness(ctx);
    if (!rc.holds) {
      throw PreconditionError("the graph is not relatively complete: "
                              + rc.violations.front());
    }
    Decomposition out;
    out.free_pair = rc.special_pair;
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      if (rc.special_pair
          && (v == rc.special_pair->first || v == rc.special_pair->second)) {
        continue;
      }
      (is_group(ctx.monoid(v)) ? out.group_product : out.restricted_direct)
          .push_back(v);
    }
    for (auto u : out.restricted_direct) {
      for (auto v : out.restricted_direct) {
        if (u != v && !ctx.adjacent(u, v)) {
          throw InvariantError("non-group vertices " + pair_name(ctx, u, v)
                               + " are not adjacent");
        }
      }
    }
    return out;
  }

  GPContext induced_context(GPContext const&                ctx,
                            std::vector<std::size_t> const& vertices) {
    Graph                     g(vertices.size());
    std::vector<VertexMonoid> monoids;
    std::vector<std::string>  vnames, mnames;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] >= ctx.vertex_count()) {
        throw PreconditionError("vertex out of range");
      }
      monoids.push_back(ctx.monoid(vertices[i]));
      vnames.push_back(ctx.vertex_names[vertices[i]]);
      mnames.push_back(ctx.monoid_names[vertices[i]]);
      for (std::size_t j = 0; j < i; ++j) {
        if (ctx.adjacent(vertices[i], vertices[j])) {
          g.add_edge(i, j);
        }
      }
    }
    return GPContext{std::move(g), std::move(monoids), std::move(vnames),
                     std::move(mnames)};
  }

  BipartiteSplit::BipartiteSplit(GPContext const&         ctx,
                                 std::vector<std::size_t> first)
      : _ctx(&ctx), _in_first(ctx.vertex_count(), false) {
    for (auto v : first) {
      if (v >= ctx.vertex_count()) {
        throw PreconditionError("vertex out of range");
      }
      _in_first[v] = true;
    }
    _local.resize(ctx.vertex_count());
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      auto& part = _in_first[v] ? _first_vertices : _second_vertices;
      _local[v]  = static_cast<std::uint32_t>(part.size());
      part.push_back(v);
    }
    for (auto u : _first_vertices) {
      for (auto v : _second_vertices) {
        if (!ctx.adjacent(u, v)) {
          throw PreconditionError("cannot split: " + pair_name(ctx, u, v)
                                  + " not an edge");
        }
      }
    }
    _first  = induced_context(ctx, _first_vertices);
    _second = induced_context(ctx, _second_vertices);
  }

  std::pair<CanonicalForm, CanonicalForm>
  BipartiteSplit::psi(Word const& w) const {
    validate_word(*_ctx, w);
    Word x, y;
    for (auto const& l : w) {
      (_in_first[l.vertex] ? x : y).push_back(Letter{_local[l.vertex], l.element});
    }
    return {canonical(_first, x), canonical(_second, y)};
  }

  CanonicalForm BipartiteSplit::combine(CanonicalForm const& x,
                                        CanonicalForm const& y) const {
    Word w;
    for (auto const& l : x.word()) {
      w.push_back(Letter{static_cast<std::uint32_t>(_first_vertices[l.vertex]),
                         l.element});
    }
    for (auto const& l : y.word()) {
      w.push_back(Letter{static_cast<std::uint32_t>(_second_vertices[l.vertex]),
                         l.element});
    }
    return canonical(*_ctx, w);
  }

  BipartiteSplit split_bipartite(GPContext const&                ctx,
                                 std::vector<std::size_t> const& first) {
    return BipartiteSplit(ctx, first);
  }

  namespace {
    // Does {x : x in Mg for some g in gens} equal Ma intersect Mb?
    bool check_vertex_intersection(VertexMonoid const& m,
                                   Element const&      a,
                                   Element const&      b) {
      auto const        gens = vertex_ideal_intersection(m, a, b);
      std::vector<bool> want(m.size(), false), got(m.size(), false);
      std::vector<bool> in_a(m.size(), false), in_b(m.size(), false);
      for (auto const& p : m.elements()) {
        in_a[m.multiply(p, a).index()] = true;
        in_b[m.multiply(p, b).index()] = true;
        for (auto const& g : gens) {
          got[m.multiply(p, g).index()] = true;
        }
      }
      for (std::size_t i = 0; i < m.size(); ++i) {
        want[i] = in_a[i] && in_b[i];
      }
      return want == got;
    }

    // Is the left congruence generated by the vertex annihilator of a the
    // kernel of x -> xa?
    bool check_vertex_annihilator(VertexMonoid const& m, Element const& a) {
      std::vector<std::size_t> parent(m.size());
      for (std::size_t i = 0; i < parent.size(); ++i) {
        parent[i] = i;
      }
      auto find = [&](std::size_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      };
      for (auto const& [p, q] : vertex_annihilator(m, a)) {
        for (auto const& c : m.elements()) {
          parent[find(m.multiply(c, p).index())] = find(m.multiply(c, q).index());
        }
      }
      for (auto const& s : m.elements()) {
        for (auto const& t : m.elements()) {
          bool const same  = find(s.index()) == find(t.index());
          bool const kills = m.multiply(s, a) == m.multiply(t, a);
          if (same != kills) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  CoherencyReport coherency_report(GPContext const&         ctx,
                                   std::vector<Word> const& samples) {
    CoherencyReport out;
    out.holds = true;
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      auto const&     m = ctx.monoid(v);
      VertexCoherency r;
      if (m.is_free()) {
        r.howson = r.fle = true;
        r.reason         = "free monoid";
      } else {
        r.howson = r.fle = true;
        for (auto const& a : m.elements()) {
          for (auto const& b : m.elements()) {
            r.howson = r.howson && check_vertex_intersection(m, a, b);
          }
          r.fle = r.fle && check_vertex_annihilator(m, a);
        }
        r.reason = "finite monoid, checked exhaustively";
      }
      out.holds = out.holds && r.howson && r.fle;
      out.vertices.push_back(r);
    }
    for (std::size_t i = 0; i < samples.size(); ++i) {
      for (std::size_t j = i + 1; j < samples.size(); ++j) {
        auto const r = intersect_principal(ctx, samples[i], samples[j]);
        out.intersections.push_back(
            {samples[i], samples[j], r.generators.size(), r.empty});
      }
      out.annihilators.push_back(
          {samples[i], annihilator_generators(ctx, samples[i]).pairs.size()});
    }
    return out;
  }

}  // namespace graphprod
