#include "graphprod/annihilator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <unordered_set>

#include "graphprod/oracle.hpp"

namespace graphprod {

  std::string to_string(PairSource s) {
    switch (s) {
      case PairSource::deletion:
        return "deletion";
      case PairSource::glue:
        return "glue";
      case PairSource::parallel:
        return "parallel";
    }
    return "";
  }

  namespace {
    // a'_{j_l} o ... o a'_{j_1} for the first l deletion moves of f.
    Word inverse_prefix(GPContext const&         ctx,
                        Word const&              a,
                        ReductionFunction const& f,
                        std::size_t              l) {
      auto const dels = f.deletion_moves();
      Word       out;
      for (std::size_t k = l; k-- > 0;) {
        auto const& x = a[f.theta[dels[k]]];
        out.push_back(
            Letter{x.vertex, *left_inverse_of(ctx.monoid(x.vertex), x.element)});
      }
      return out;
    }

    struct Entry {
      std::size_t pos;
      bool        glued;
    };

    // The skeleton of the target of a reduction: glued letters in move order,
    // then the unused letters of a.
    std::vector<Entry> target_skeleton(Word const& a, ReductionFunction const& f) {
      std::vector<Entry> out;
      std::vector<bool>  used(a.size(), false);
      for (auto k : f.glue_moves()) {
        out.push_back({f.theta[k], true});
      }
      for (auto o : f.theta) {
        used[o] = true;
      }
      for (std::size_t o = 0; o < a.size(); ++o) {
        if (!used[o]) {
          out.push_back({o, false});
        }
      }
      return out;
    }

    bool skeleton_reduced(GPContext const& ctx, std::vector<std::uint32_t> const& v) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
          if (v[i] == v[j]) {
            return false;
          }
          if (!ctx.adjacent(v[i], v[j])) {
            break;
          }
        }
      }
      return true;
    }

    struct Item {
      bool        from_a;  // entry of the first target, else of the second
      std::size_t idx;
    };

    // Candidate pairs from two reductions with a common left multiple: one
    // per choice of subwords A' of the first target and B' of the second
    // admitting a consistent matching B' o A = A' o B.
    void parallel_pairs(GPContext const&                  ctx,
                        Word const&                       a,
                        ReductionFunction const&          f,
                        ReductionFunction const&          g,
                        std::vector<std::pair<Word, Word>>& out) {
      auto const A  = target_skeleton(a, f);
      auto const B  = target_skeleton(a, g);
      auto const fi = inverse_prefix(ctx, a, f, f.deletion_moves().size());
      auto const gi = inverse_prefix(ctx, a, g, g.deletion_moves().size());

      for (std::size_t ma = 0; ma < (std::size_t(1) << A.size()); ++ma) {
        for (std::size_t mb = 0; mb < (std::size_t(1) << B.size()); ++mb) {
          auto const na = static_cast<std::size_t>(__builtin_popcountll(ma));
          auto const nb = static_cast<std::size_t>(__builtin_popcountll(mb));
          if (nb + A.size() != na + B.size()) {
            continue;
          }
          std::vector<Item> x, y;
          for (std::size_t j = 0; j < B.size(); ++j) {
            if (mb >> j & 1) {
              x.push_back({false, j});
            }
          }
          for (std::size_t i = 0; i < A.size(); ++i) {
            x.push_back({true, i});
          }
          for (std::size_t i = 0; i < A.size(); ++i) {
            if (ma >> i & 1) {
              y.push_back({true, i});
            }
          }
          for (std::size_t j = 0; j < B.size(); ++j) {
            y.push_back({false, j});
          }
          auto vertex = [&](Item const& it) {
            return a[it.from_a ? A[it.idx].pos : B[it.idx].pos].vertex;
          };
          std::vector<std::uint32_t> xv, yv;
          for (auto const& it : x) {
            xv.push_back(vertex(it));
          }
          for (auto const& it : y) {
            yv.push_back(vertex(it));
          }
          if (!skeleton_reduced(ctx, xv) || !skeleton_reduced(ctx, yv)) {
            continue;
          }
          // sigma[q] = position in x of the letter at position q of y
          std::map<std::uint32_t, std::vector<std::size_t>> where;
          for (std::size_t p = 0; p < x.size(); ++p) {
            where[xv[p]].push_back(p);
          }
          std::map<std::uint32_t, std::size_t> seen;
          std::vector<std::size_t>             sigma(y.size());
          bool                                 ok = true;
          for (std::size_t q = 0; q < y.size() && ok; ++q) {
            auto& list = where[yv[q]];
            auto& k    = seen[yv[q]];
            if (k >= list.size()) {
              ok = false;
              break;
            }
            sigma[q] = list[k++];
          }
          for (std::size_t m = 0; m < sigma.size() && ok; ++m) {
            for (std::size_t k = m + 1; k < sigma.size() && ok; ++k) {
              if (sigma[k] < sigma[m] && !ctx.adjacent(yv[k], yv[m])) {
                ok = false;
              }
            }
          }
          for (std::size_t q = 0; q < y.size() && ok; ++q) {
            auto const& src = y[q];
            auto const& dst = x[sigma[q]];
            bool const primed
                = src.from_a || (mb >> src.idx & 1);
            if (primed) {
              ok = src.from_a == dst.from_a && src.idx == dst.idx;
              continue;
            }
            if (!dst.from_a || (ma >> dst.idx & 1)) {
              ok = false;
              continue;
            }
            auto const& ea = A[dst.idx];
            auto const& eb = B[src.idx];
            if (ea.glued || eb.glued) {
              ok = ea.pos == eb.pos;
            } else {
              ok = a[ea.pos] == a[eb.pos];
            }
          }
          if (!ok) {
            continue;
          }
          Word left, right;
          for (std::size_t j = 0; j < B.size(); ++j) {
            if (mb >> j & 1) {
              left.push_back(a[B[j].pos]);
            }
          }
          for (std::size_t i = 0; i < A.size(); ++i) {
            if (ma >> i & 1) {
              right.push_back(a[A[i].pos]);
            }
          }
          out.emplace_back(concat(left, fi), concat(right, gi));
        }
      }
    }
  }  // namespace

  Annihilator annihilator_generators(GPContext const& ctx, Word const& a0) {
    Annihilator out;
    out.word                = canonical(ctx, a0).word();
    auto const& a           = out.word;
    out.reduction_functions = enumerate_reduction_functions(ctx, a);

    std::vector<std::vector<std::pair<Element, Element>>> kernel;
    for (auto const& x : a) {
      kernel.push_back(vertex_annihilator(ctx.monoid(x.vertex), x.element));
    }

    std::map<std::pair<Word, Word>, bool> seen;
    auto add = [&](Word const& s, Word const& t, PairSource src, std::size_t i,
                   std::size_t j) {
      auto cs = canonical(ctx, s);
      auto ct = canonical(ctx, t);
      if (cs == ct) {
        return;
      }
      if (shortlex_less(ct, cs)) {
        std::swap(cs, ct);
      }
      if (!seen.emplace(std::make_pair(cs.word(), ct.word()), true).second) {
        return;
      }
      out.pairs.push_back(AnnihilatorPair{cs, ct, src, i, j});
    };

    auto const& fs = out.reduction_functions;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      auto const& f    = fs[i];
      auto const  dels = f.deletion_moves();
      for (std::size_t l = 0; l < dels.size(); ++l) {
        auto const pos = f.theta[dels[l]];
        auto const inv = inverse_prefix(ctx, a, f, l);
        for (auto const& [p, q] : kernel[pos]) {
          add(concat({Letter{a[pos].vertex, p}}, inv),
              concat({Letter{a[pos].vertex, q}}, inv),
              PairSource::deletion, i, i);
        }
      }
      auto const inv = inverse_prefix(ctx, a, f, dels.size());
      for (auto k : f.glue_moves()) {
        auto const pos = f.theta[k];
        for (auto const& [p, q] : kernel[pos]) {
          add(concat({Letter{a[pos].vertex, p}}, inv),
              concat({Letter{a[pos].vertex, q}}, inv),
              PairSource::glue, i, i);
        }
      }
    }
    for (auto const& pr : out.pairs) {
      if (!equal(ctx, concat(pr.left.word(), a), concat(pr.right.word(), a))) {
        throw InvariantError("annihilator pair does not annihilate");
      }
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
      for (std::size_t j = 0; j < fs.size(); ++j) {
        std::vector<std::pair<Word, Word>> cands;
        parallel_pairs(ctx, a, fs[i], fs[j], cands);
        for (auto const& [s, t] : cands) {
          if (equal(ctx, concat(s, a), concat(t, a))) {
            add(s, t, PairSource::parallel, i, j);
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Left congruence search
  ////////////////////////////////////////////////////////////////////////

  namespace {
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

    std::vector<Element> glue_preimages(VertexMonoid const& m,
                                        Element const&      p,
                                        Element const&      b) {
      std::vector<Element> out;
      if (m.is_free()) {
        auto x = vertex_divides(m, b, p);
        if (x && !m.is_identity(*x)) {
          out.push_back(*x);
        }
        return out;
      }
      for (auto const& x : m.elements()) {
        if (!m.is_identity(x) && m.multiply(x, p) == b) {
          out.push_back(x);
        }
      }
      return out;
    }

    void quotients(GPContext const&                      ctx,
                   CanonicalForm const&                  u,
                   Word const&                           p,
                   std::vector<ReductionFunction> const& fs,
                   std::vector<CanonicalForm>&           out) {
      auto const uw = u.word();
      for (auto const& f : fs) {
        std::vector<bool> used(p.size(), false);
        for (auto o : f.theta) {
          used[o] = true;
        }
        Word z  = uw;
        bool ok = true;
        for (std::size_t o = p.size(); o-- > 0 && ok;) {
          if (used[o]) {
            continue;
          }
          auto i = last_movable(ctx, z, p[o].vertex);
          ok     = i && z[*i] == p[o];
          if (ok) {
            z.erase(z.begin() + *i);
          }
        }
        if (!ok) {
          continue;
        }
        std::vector<std::vector<Letter>> choices;
        std::vector<bool>                drop(z.size(), false);
        for (auto k : f.glue_moves()) {
          auto const& x = p[f.theta[k]];
          auto        i = last_movable(ctx, z, x.vertex);
          if (!i) {
            ok = false;
            break;
          }
          drop[*i] = true;
          std::vector<Letter> opts;
          for (auto const& e :
               glue_preimages(ctx.monoid(x.vertex), x.element, z[*i].element)) {
            opts.push_back(Letter{x.vertex, e});
          }
          choices.push_back(std::move(opts));
        }
        if (!ok) {
          continue;
        }
        auto const dels = f.deletion_moves();
        for (auto it = dels.rbegin(); it != dels.rend(); ++it) {
          auto const&         x = p[f.theta[*it]];
          std::vector<Letter> opts;
          for (auto const& e : left_inverses_of(ctx.monoid(x.vertex), x.element)) {
            opts.push_back(Letter{x.vertex, e});
          }
          choices.push_back(std::move(opts));
        }
        Word prefix;
        for (std::size_t i = 0; i < z.size(); ++i) {
          if (!drop[i]) {
            prefix.push_back(z[i]);
          }
        }
        if (std::any_of(choices.begin(), choices.end(),
                        [](auto const& c) { return c.empty(); })) {
          continue;
        }
        std::vector<std::size_t> pick(choices.size(), 0);
        while (true) {
          Word c = prefix;
          for (std::size_t k = 0; k < choices.size(); ++k) {
            c.push_back(choices[k][pick[k]]);
          }
          auto cf = canonical(ctx, c);
          if (multiply(ctx, cf.word(), p) == u) {
            out.push_back(std::move(cf));
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
      }
    }
  }  // namespace

  std::vector<CanonicalForm> left_quotients(GPContext const& ctx,
                                            Word const&      u,
                                            Word const&      p) {
    auto const                 pw = canonical(ctx, p).word();
    std::vector<CanonicalForm> out;
    quotients(ctx, canonical(ctx, u), pw, enumerate_reduction_functions(ctx, pw),
              out);
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      return shortlex_less(x, y);
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  CongruenceSearch in_left_congruence(GPContext const&                    ctx,
                                      Word const&                         s,
                                      Word const&                         t,
                                      std::vector<AnnihilatorPair> const& pairs,
                                      CongruenceBound                     bound) {
    struct Rule {
      Word                           lhs, rhs;
      std::vector<ReductionFunction> fs;
    };
    std::vector<Rule> rules;
    for (auto const& pr : pairs) {
      auto l = pr.left.word();
      auto r = pr.right.word();
      rules.push_back({l, r, enumerate_reduction_functions(ctx, l)});
      rules.push_back({r, l, enumerate_reduction_functions(ctx, r)});
    }

    CongruenceSearch out;
    auto const       start  = canonical(ctx, s);
    auto const       target = canonical(ctx, t);
    std::unordered_set<CanonicalForm, CanonicalFormHash> visited{start};
    std::deque<CanonicalForm>                            queue{start};
    out.states = 1;
    if (start == target) {
      out.reached = true;
      return out;
    }
    std::vector<CanonicalForm> cs;
    while (!queue.empty() && visited.size() < bound.max_states) {
      auto u = std::move(queue.front());
      queue.pop_front();
      for (auto const& rule : rules) {
        cs.clear();
        quotients(ctx, u, rule.lhs, rule.fs, cs);
        for (auto const& c : cs) {
          auto v = multiply(ctx, c.word(), rule.rhs);
          if (v.length() > bound.max_length || !visited.insert(v).second) {
            continue;
          }
          out.states = visited.size();
          if (v == target) {
            out.reached = true;
            return out;
          }
          queue.push_back(std::move(v));
        }
      }
    }
    out.states = visited.size();
    return out;
  }

  FleReport fle_report(GPContext const&         ctx,
                       std::vector<Word> const& targets,
                       FleBounds                bounds) {
    FleReport out;
    out.holds = true;
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      auto const& m = ctx.monoid(v);
      out.vertices.push_back(true);
      out.reasons.push_back(
          m.is_free() ? "free monoid: cancellative"
                      : "finite monoid: annihilators listed exhaustively");
    }
    for (auto const& a : targets) {
      FleTarget t;
      t.generators = annihilator_generators(ctx, a);
      auto const& w = t.generators.word;
      t.verified    = std::all_of(
          t.generators.pairs.begin(), t.generators.pairs.end(),
          [&](AnnihilatorPair const& p) {
            return multiply(ctx, p.left.word(), w)
                   == multiply(ctx, p.right.word(), w);
          });
      auto const pairs = oracle_annihilator_pairs(ctx, w, bounds.oracle_length);
      t.oracle_pairs   = pairs.size();
      for (auto const& [x, y] : pairs) {
        t.reached += in_left_congruence(ctx, x, y, t.generators.pairs,
                                        bounds.congruence)
                         .reached;
      }
      out.holds = out.holds && t.verified;
      out.targets.push_back(std::move(t));
    }
    return out;
  }

}  // namespace graphprod
