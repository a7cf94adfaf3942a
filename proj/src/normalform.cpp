#include "graphprod/normalform.hpp"

#include <algorithm>

namespace graphprod {

  Word CanonicalForm::word() const {
    Word out;
    for (auto const& b : blocks) {
      out.insert(out.end(), b.begin(), b.end());
    }
    return out;
  }

  std::size_t CanonicalForm::length() const {
    std::size_t n = 0;
    for (auto const& b : blocks) {
      n += b.size();
    }
    return n;
  }

  bool shortlex_less(CanonicalForm const& x, CanonicalForm const& y) {
    return shortlex_less(x.word(), y.word());
  }

  bool is_reduced(GPContext const& ctx, Word const& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (is_identity_letter(ctx, w[i])) {
        return false;
      }
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (w[j].vertex == w[i].vertex) {
          // i and j can be brought together
          return false;
        }
        if (!ctx.adjacent(w[i].vertex, w[j].vertex)) {
          break;
        }
      }
    }
    return true;
  }

  Word reduce(GPContext const& ctx, Word const& w) {
    validate_word(ctx, w);
    Word acc;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto const& p = *it;
      if (is_identity_letter(ctx, p)) {
        continue;
      }
      std::size_t k = 0;
      for (; k < acc.size(); ++k) {
        if (acc[k].vertex == p.vertex
            || !ctx.adjacent(acc[k].vertex, p.vertex)) {
          break;
        }
      }
      if (k < acc.size() && acc[k].vertex == p.vertex) {
        auto const& m    = ctx.monoid(p.vertex);
        auto        prod = m.multiply(p.element, acc[k].element);
        acc.erase(acc.begin() + k);
        if (!m.is_identity(prod)) {
          acc.insert(acc.begin(), Letter{p.vertex, std::move(prod)});
        }
      } else {
        acc.insert(acc.begin(), p);
      }
    }
    return acc;
  }

  bool shuffle_valid(GPContext const&                ctx,
                     Word const&                     x,
                     std::vector<std::size_t> const& sigma) {
    if (sigma.size() != x.size()) {
      throw PreconditionError("permutation length does not match the word");
    }
    std::vector<bool> seen(x.size(), false);
    for (auto i : sigma) {
      if (i >= x.size() || seen[i]) {
        throw PreconditionError("not a permutation");
      }
      seen[i] = true;
    }
    for (std::size_t m = 0; m < sigma.size(); ++m) {
      for (std::size_t k = m + 1; k < sigma.size(); ++k) {
        if (sigma[k] < sigma[m]
            && !ctx.adjacent(x[sigma[k]].vertex, x[sigma[m]].vertex)) {
          return false;
        }
      }
    }
    return true;
  }

  CanonicalForm foata_left(GPContext const& ctx, Word const& reduced) {
    if (!is_reduced(ctx, reduced)) {
      throw PreconditionError("foata_left expects a reduced word");
    }
    CanonicalForm out;
    Word          rest = reduced;
    while (!rest.empty()) {
      Word block, next;
      for (std::size_t i = 0; i < rest.size(); ++i) {
        bool front = true;
        for (std::size_t j = 0; j < i && front; ++j) {
          front = ctx.adjacent(rest[i].vertex, rest[j].vertex);
        }
        (front ? block : next).push_back(rest[i]);
      }
      std::sort(block.begin(), block.end());
      out.blocks.push_back(std::move(block));
      rest = std::move(next);
    }
    return out;
  }

  CanonicalForm foata_right(GPContext const& ctx, Word const& reduced) {
    Word rev(reduced.rbegin(), reduced.rend());
    auto out = foata_left(ctx, rev);
    std::reverse(out.blocks.begin(), out.blocks.end());
    return out;
  }

  CanonicalForm canonical(GPContext const& ctx, Word const& w) {
    return foata_left(ctx, reduce(ctx, w));
  }

  bool equal(GPContext const& ctx, Word const& u, Word const& v) {
    return canonical(ctx, u) == canonical(ctx, v);
  }

  CanonicalForm multiply(GPContext const& ctx, Word const& u, Word const& v) {
    return canonical(ctx, concat(u, v));
  }

  std::string format_canonical(GPContext const& ctx, CanonicalForm const& c) {
    if (c.blocks.empty()) {
      return "e";
    }
    std::string out;
    for (auto const& b : c.blocks) {
      out += '[';
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (i != 0) {
          out += ' ';
        }
        out += format_letter(ctx, b[i]);
      }
      out += ']';
    }
    return out;
  }

}  // namespace graphprod
