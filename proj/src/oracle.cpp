#include "graphprod/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace graphprod {

  namespace {
    using Code = std::u16string;

    // Letters met during a search, numbered on first sight.
    class Alphabet {
     public:
      explicit Alphabet(GPContext const& ctx) : _ctx(ctx) {}

      char16_t id(Letter const& x) {
        auto it = _ids.find(x);
        if (it != _ids.end()) {
          return it->second;
        }
        if (_letters.size() >= 0xFFFF) {
          throw Error("oracle alphabet overflow");
        }
        auto const n = static_cast<char16_t>(_letters.size());
        _ids.emplace(x, n);
        _letters.push_back(x);
        _splits.emplace_back();
        _split_done.push_back(false);
        return n;
      }

      Letter const& letter(char16_t c) const {
        return _letters[c];
      }

      Code encode(Word const& w) {
        Code out;
        for (auto const& x : w) {
          out.push_back(id(x));
        }
        return out;
      }

      Word decode(Code const& c) const {
        Word out;
        for (auto x : c) {
          out.push_back(_letters[x]);
        }
        return out;
      }

      bool is_identity(char16_t c) const {
        auto const& x = _letters[c];
        return _ctx.monoid(x.vertex).is_identity(x.element);
      }

      std::uint32_t vertex(char16_t c) const {
        return _letters[c].vertex;
      }

      char16_t product(char16_t a, char16_t b) {
        auto const& x = _letters[a];
        auto        e = _ctx.monoid(x.vertex).multiply(x.element,
                                                _letters[b].element);
        return id(Letter{x.vertex, std::move(e)});
      }

      // All (x, y) with x * y = c at the vertex of c.
      std::vector<std::pair<char16_t, char16_t>> const& splits(char16_t c) {
        if (!_split_done[c]) {
          auto const  z = _letters[c];
          auto const& m = _ctx.monoid(z.vertex);
          std::vector<std::pair<char16_t, char16_t>> out;
          if (m.is_free()) {
            auto const& s = z.element.symbols();
            for (std::size_t i = 0; i <= s.size(); ++i) {
              out.emplace_back(
                  id(Letter{z.vertex, Element::free(s.substr(0, i))}),
                  id(Letter{z.vertex, Element::free(s.substr(i))}));
            }
          } else {
            for (auto const& x : m.elements()) {
              for (auto const& y : m.elements()) {
                if (m.multiply(x, y) == z.element) {
                  out.emplace_back(id(Letter{z.vertex, x}),
                                   id(Letter{z.vertex, y}));
                }
              }
            }
          }
          _splits[c]     = std::move(out);
          _split_done[c] = true;
        }
        return _splits[c];
      }

      char16_t identity(std::uint32_t v) {
        return id(Letter{v, _ctx.monoid(v).identity()});
      }

      GPContext const& context() const {
        return _ctx;
      }

     private:
      GPContext const&                                        _ctx;
      std::map<Letter, char16_t>                              _ids;
      std::vector<Letter>                                     _letters;
      std::vector<std::vector<std::pair<char16_t, char16_t>>> _splits;
      std::vector<bool>                                       _split_done;
    };

    // Calls f on every word obtained from w by one relation.  Length
    // increasing moves are skipped when grow is false or the bound is hit.
    template <typename F>
    void neighbours(Alphabet& al, Code const& w, std::size_t bound, bool grow,
                    F&& f) {
      auto const& ctx = al.context();
      std::size_t const n = w.size();
      for (std::size_t i = 0; i < n; ++i) {
        if (al.is_identity(w[i])) {
          Code x = w;
          x.erase(i, 1);
          f(x);
        }
      }
      for (std::size_t i = 0; i + 1 < n; ++i) {
        auto const u = al.vertex(w[i]);
        auto const v = al.vertex(w[i + 1]);
        if (u == v) {
          Code x = w;
          x[i]   = al.product(w[i], w[i + 1]);
          x.erase(i + 1, 1);
          f(x);
        } else if (ctx.adjacent(u, v)) {
          Code x = w;
          std::swap(x[i], x[i + 1]);
          f(x);
        }
      }
      if (!grow || n + 1 > bound) {
        return;
      }
      for (std::uint32_t v = 0; v < ctx.vertex_count(); ++v) {
        auto const e = al.identity(v);
        for (std::size_t i = 0; i <= n; ++i) {
          Code x = w;
          x.insert(x.begin() + i, e);
          f(x);
        }
      }
      for (std::size_t i = 0; i < n; ++i) {
        auto const splits = al.splits(w[i]);
        for (auto const& [p, q] : splits) {
          Code x = w;
          x[i]   = p;
          x.insert(x.begin() + i + 1, q);
          f(x);
        }
      }
    }

    std::unordered_set<Code> closure(Alphabet&   al,
                                     Code const& start,
                                     std::size_t bound,
                                     bool        grow,
                                     Code const* target = nullptr) {
      std::unordered_set<Code> seen{start};
      std::deque<Code>         queue{start};
      while (!queue.empty()) {
        auto w = std::move(queue.front());
        queue.pop_front();
        bool found = false;
        neighbours(al, w, bound, grow, [&](Code const& x) {
          if (!found && seen.insert(x).second) {
            if (target && x == *target) {
              found = true;
            }
            queue.push_back(x);
          }
        });
        if (found) {
          break;
        }
      }
      return seen;
    }

    Word key_of(Alphabet& al, Word const& w) {
      auto const  all = closure(al, al.encode(w), w.size(), false);
      std::size_t best_len = w.size();
      for (auto const& c : all) {
        best_len = std::min(best_len, c.size());
      }
      std::optional<Word> best;
      for (auto const& c : all) {
        if (c.size() == best_len) {
          auto d = al.decode(c);
          if (!best || d < *best) {
            best = std::move(d);
          }
        }
      }
      return *best;
    }

    bool shortlex(Word const& x, Word const& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    }

    std::vector<Word> elements(Alphabet&                  al,
                               std::vector<Letter> const& letters,
                               std::size_t                max_length) {
      std::vector<Word> out{Word{}}, level{Word{}};
      for (std::size_t n = 0; n < max_length && !level.empty(); ++n) {
        std::set<Word> next;
        for (auto const& e : level) {
          for (auto const& x : letters) {
            auto w = e;
            w.push_back(x);
            auto k = key_of(al, w);
            if (k.size() == n + 1) {
              next.insert(std::move(k));
            }
          }
        }
        level.assign(next.begin(), next.end());
        std::sort(level.begin(), level.end(), shortlex);
        out.insert(out.end(), level.begin(), level.end());
      }
      return out;
    }

    void add_factors(std::set<Letter>& out, Letter const& x) {
      auto const& s = x.element.symbols();
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j <= s.size(); ++j) {
          out.insert(Letter{x.vertex, Element::free(s.substr(i, j - i))});
        }
      }
    }
  }  // namespace

  bool oracle_equal(GPContext const&           ctx,
                    Word const&                u,
                    Word const&                v,
                    std::optional<std::size_t> length_bound) {
    validate_word(ctx, u);
    validate_word(ctx, v);
    std::size_t const bound
        = length_bound.value_or(std::max(u.size(), v.size()) + 2);
    Alphabet   al(ctx);
    auto const cu = al.encode(u);
    auto const cv = al.encode(v);
    if (cu == cv) {
      return true;
    }
    return closure(al, cu, bound, true, &cv).count(cv) != 0;
  }

  std::vector<Word> oracle_component(GPContext const& ctx,
                                     Word const&      u,
                                     std::size_t      length_bound) {
    validate_word(ctx, u);
    Alphabet          al(ctx);
    std::vector<Word> out;
    for (auto const& c : closure(al, al.encode(u), length_bound, true)) {
      out.push_back(al.decode(c));
    }
    std::sort(out.begin(), out.end(), shortlex);
    return out;
  }

  Word oracle_key(GPContext const& ctx, Word const& w) {
    validate_word(ctx, w);
    Alphabet al(ctx);
    return key_of(al, w);
  }

  std::vector<Word> oracle_elements(GPContext const&           ctx,
                                    std::vector<Letter> const& letters,
                                    std::size_t                max_length) {
    Alphabet al(ctx);
    return elements(al, letters, max_length);
  }

  std::vector<Letter> oracle_letters(GPContext const&         ctx,
                                     std::vector<Word> const& words) {
    std::set<Letter> out;
    for (std::uint32_t v = 0; v < ctx.vertex_count(); ++v) {
      auto const& m = ctx.monoid(v);
      if (m.is_free()) {
        for (std::size_t i = 0; i < m.rank(); ++i) {
          out.insert(Letter{v, Element::free(std::string(1, static_cast<char>(i)))});
        }
        continue;
      }
      for (auto const& e : m.elements()) {
        if (!m.is_identity(e)) {
          out.insert(Letter{v, e});
        }
      }
    }
    Alphabet al(ctx);
    for (auto const& w : words) {
      auto const k = key_of(al, w);
      for (auto const* ws : {&w, &k}) {
        for (auto const& x : *ws) {
          if (ctx.monoid(x.vertex).is_free()) {
            add_factors(out, x);
          }
        }
      }
    }
    return {out.begin(), out.end()};
  }

  std::optional<Word> oracle_leq_principal(GPContext const&           ctx,
                                           Word const&                u,
                                           Word const&                v,
                                           std::optional<std::size_t> bound) {
    validate_word(ctx, u);
    validate_word(ctx, v);
    Alphabet                al(ctx);
    auto const              target = key_of(al, u);
    auto const              vkey   = key_of(al, v);
    std::set<std::uint32_t> support;
    std::set<Letter>        letters;
    for (auto const* w : {&u, &v, &target, &vkey}) {
      for (auto const& x : *w) {
        support.insert(x.vertex);
        if (ctx.monoid(x.vertex).is_free()) {
          add_factors(letters, x);
        }
      }
    }
    for (auto s : support) {
      auto const& m = ctx.monoid(s);
      if (!m.is_free()) {
        for (auto const& e : m.elements()) {
          if (!m.is_identity(e)) {
            letters.insert(Letter{s, e});
          }
        }
      }
    }
    for (auto const& c : elements(al, {letters.begin(), letters.end()},
                                  bound.value_or(u.size() + v.size()))) {
      if (key_of(al, concat(c, v)) == target) {
        return c;
      }
    }
    return std::nullopt;
  }

  std::vector<Word> oracle_intersection_elements(GPContext const& ctx,
                                                 Word const&      a,
                                                 Word const&      b,
                                                 std::size_t      bound) {
    validate_word(ctx, a);
    validate_word(ctx, b);
    Alphabet   al(ctx);
    auto const letters = oracle_letters(ctx, {a, b});
    // A multiplier of length |z| + |a| suffices to reach z from a.
    auto const cs = elements(al, letters, bound + std::max(a.size(), b.size()));
    std::set<Word> below_a, below_b;
    for (auto const& c : cs) {
      if (c.size() <= bound + a.size()) {
        below_a.insert(key_of(al, concat(c, a)));
      }
      if (c.size() <= bound + b.size()) {
        below_b.insert(key_of(al, concat(c, b)));
      }
    }
    std::vector<Word> out;
    for (auto const& z : cs) {
      if (z.size() <= bound && below_a.count(z) && below_b.count(z)) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<std::pair<Word, Word>>
  oracle_annihilator_pairs(GPContext const& ctx,
                           Word const&      a,
                           std::size_t      max_length) {
    validate_word(ctx, a);
    Alphabet   al(ctx);
    auto const es = elements(al, oracle_letters(ctx, {a}), max_length);
    std::map<Word, std::vector<std::size_t>> by_product;
    for (std::size_t i = 0; i < es.size(); ++i) {
      by_product[key_of(al, concat(es[i], a))].push_back(i);
    }
    std::vector<std::pair<Word, Word>> out;
    for (auto const& [k, idx] : by_product) {
      for (std::size_t i = 0; i < idx.size(); ++i) {
        for (std::size_t j = i + 1; j < idx.size(); ++j) {
          out.emplace_back(es[idx[i]], es[idx[j]]);
        }
      }
    }
    std::sort(out.begin(), out.end(), [](auto const& x, auto const& y) {
      if (x.first != y.first) {
        return shortlex(x.first, y.first);
      }
      return shortlex(x.second, y.second);
    });
    return out;
  }

}  // namespace graphprod
