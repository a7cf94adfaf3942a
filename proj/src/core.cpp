#include "graphprod/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace graphprod {

  namespace {
    bool is_name(std::string const& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    // Is v a suffix of u?
    bool has_suffix(std::string const& u, std::string const& v) {
      return u.size() >= v.size()
             && u.compare(u.size() - v.size(), v.size(), v) == 0;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // VertexMonoid
  ////////////////////////////////////////////////////////////////////////

  VertexMonoid
  VertexMonoid::finite(std::vector<std::string>                names,
                       std::size_t                             identity,
                       std::vector<std::vector<std::uint32_t>> table) {
    std::size_t const n = names.size();
    if (n == 0) {
      throw ContextError("a finite monoid needs at least one element");
    }
    std::set<std::string> seen;
    for (auto const& s : names) {
      if (!is_name(s)) {
        throw ContextError("invalid element name \"" + s + "\"");
      }
      if (!seen.insert(s).second) {
        throw ContextError("repeated element name \"" + s + "\"");
      }
    }
    if (identity >= n) {
      throw ContextError("identity index out of range");
    }
    if (table.size() != n) {
      throw ContextError("table has " + std::to_string(table.size())
                         + " rows, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw ContextError("table row " + std::to_string(i + 1) + " has "
                           + std::to_string(table[i].size())
                           + " entries, expected " + std::to_string(n));
      }
      for (auto x : table[i]) {
        if (x >= n) {
          throw ContextError("table entry out of range");
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[identity][i] != i || table[i][identity] != i) {
        throw ContextError("\"" + names[identity]
                           + "\" is not a two-sided identity");
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (table[table[a][b]][c] != table[a][table[b][c]]) {
            throw ContextError("table is not associative at (" + names[a]
                               + ", " + names[b] + ", " + names[c] + ")");
          }
        }
      }
    }
    VertexMonoid m;
    m._free     = false;
    m._names    = std::move(names);
    m._identity = identity;
    m._table    = std::move(table);
    return m;
  }

  VertexMonoid VertexMonoid::free(std::vector<std::string> alphabet) {
    if (alphabet.size() > 255) {
      throw ContextError("free alphabets are limited to 255 symbols");
    }
    for (std::size_t i = 0; i < alphabet.size(); ++i) {
      if (!is_name(alphabet[i]) || alphabet[i] == "1") {
        throw ContextError("invalid alphabet symbol \"" + alphabet[i] + "\"");
      }
      for (std::size_t j = 0; j < alphabet.size(); ++j) {
        if (i != j && alphabet[j].starts_with(alphabet[i])) {
          throw ContextError("alphabet symbol \"" + alphabet[i]
                             + "\" is a prefix of \"" + alphabet[j] + "\"");
        }
      }
    }
    VertexMonoid m;
    m._free  = true;
    m._names = std::move(alphabet);
    return m;
  }

  std::size_t VertexMonoid::size() const {
    if (_free) {
      throw PreconditionError("a free monoid has no finite size");
    }
    return _names.size();
  }

  std::size_t VertexMonoid::rank() const {
    if (!_free) {
      throw PreconditionError("rank is only defined for free monoids");
    }
    return _names.size();
  }

  Element VertexMonoid::identity() const {
    return _free ? Element::free("")
                 : Element::finite(static_cast<std::uint32_t>(_identity));
  }

  bool VertexMonoid::is_identity(Element const& x) const {
    return _free ? x.symbols().empty() : x.index() == _identity;
  }

  bool VertexMonoid::contains(Element const& x) const {
    if (_free) {
      return x.index() == 0
             && std::all_of(x.symbols().begin(), x.symbols().end(), [&](char c) {
                  return static_cast<unsigned char>(c) < _names.size();
                });
    }
    return x.symbols().empty() && x.index() < _names.size();
  }

  Element VertexMonoid::multiply(Element const& x, Element const& y) const {
    if (_free) {
      return Element::free(x.symbols() + y.symbols());
    }
    return Element::finite(_table[x.index()][y.index()]);
  }

  std::vector<Element> VertexMonoid::elements() const {
    if (_free) {
      throw PreconditionError("a free monoid has infinitely many elements");
    }
    std::vector<Element> out;
    for (std::uint32_t i = 0; i < _names.size(); ++i) {
      out.push_back(Element::finite(i));
    }
    return out;
  }

  bool VertexMonoid::is_left_invertible(Element const& x) const {
    return left_inverse_of(*this, x).has_value();
  }

  std::string VertexMonoid::format(Element const& x) const {
    if (!_free) {
      return _names[x.index()];
    }
    if (x.symbols().empty()) {
      return "1";
    }
    std::string out;
    for (char c : x.symbols()) {
      out += _names[static_cast<unsigned char>(c)];
    }
    return out;
  }

  std::optional<Element> VertexMonoid::parse(std::string_view text) const {
    if (!_free) {
      for (std::uint32_t i = 0; i < _names.size(); ++i) {
        if (_names[i] == text) {
          return Element::finite(i);
        }
      }
      return std::nullopt;
    }
    if (text == "1") {
      return Element::free("");
    }
    // The alphabet is prefix-free, so greedy matching is the only parse.
    std::string symbols;
    while (!text.empty()) {
      bool found = false;
      for (std::size_t i = 0; i < _names.size(); ++i) {
        if (text.starts_with(_names[i])) {
          symbols.push_back(static_cast<char>(i));
          text.remove_prefix(_names[i].size());
          found = true;
          break;
        }
      }
      if (!found) {
        return std::nullopt;
      }
    }
    if (symbols.empty()) {
      return std::nullopt;
    }
    return Element::free(std::move(symbols));
  }

  ////////////////////////////////////////////////////////////////////////
  // Vertex level operations
  ////////////////////////////////////////////////////////////////////////

  bool is_group(VertexMonoid const& m) {
    if (m.is_free()) {
      return m.rank() == 0;
    }
    for (auto const& x : m.elements()) {
      if (!left_inverse_of(m, x)) {
        return false;
      }
    }
    return true;
  }

  std::optional<Element> left_inverse_of(VertexMonoid const& m,
                                         Element const&      x) {
    if (m.is_free()) {
      if (m.is_identity(x)) {
        return x;
      }
      return std::nullopt;
    }
    for (auto const& y : m.elements()) {
      if (m.is_identity(m.multiply(y, x))) {
        return y;
      }
    }
    return std::nullopt;
  }

  std::vector<Element> left_inverses_of(VertexMonoid const& m,
                                        Element const&      x) {
    if (m.is_free()) {
      if (m.is_identity(x)) {
        return {x};
      }
      return {};
    }
    std::vector<Element> out;
    for (auto const& y : m.elements()) {
      if (m.is_identity(m.multiply(y, x))) {
        out.push_back(y);
      }
    }
    return out;
  }

  std::optional<Element> vertex_divides(VertexMonoid const& m,
                                        Element const&      a,
                                        Element const&      b) {
    if (m.is_free()) {
      if (!has_suffix(a.symbols(), b.symbols())) {
        return std::nullopt;
      }
      return Element::free(
          a.symbols().substr(0, a.symbols().size() - b.symbols().size()));
    }
    for (auto const& p : m.elements()) {
      if (m.multiply(p, b) == a) {
        return p;
      }
    }
    return std::nullopt;
  }

  std::vector<Element> vertex_ideal_intersection(VertexMonoid const& m,
                                                 Element const&      a,
                                                 Element const&      b) {
    if (m.is_free()) {
      auto const& x = a.symbols();
      auto const& y = b.symbols();
      if (has_suffix(x, y)) {
        return {a};
      }
      if (has_suffix(y, x)) {
        return {b};
      }
      return {};
    }
    auto const elts = m.elements();
    // ideal[i][j] : j is in M * elts[i]
    std::vector<std::vector<bool>> ideal(elts.size(),
                                         std::vector<bool>(elts.size(), false));
    for (auto const& x : elts) {
      for (auto const& p : elts) {
        ideal[x.index()][m.multiply(p, x).index()] = true;
      }
    }
    std::vector<Element> common;
    for (auto const& x : elts) {
      if (ideal[a.index()][x.index()] && ideal[b.index()][x.index()]) {
        common.push_back(x);
      }
    }
    std::vector<Element> out;
    for (auto const& y : common) {
      bool keep = true;
      for (auto const& z : common) {
        if (z == y || !ideal[z.index()][y.index()]) {
          continue;
        }
        // y is in Mz; drop y if Mz is strictly larger, or if they are equal
        // and z has a smaller index.
        if (!ideal[y.index()][z.index()] || z < y) {
          keep = false;
          break;
        }
      }
      if (keep) {
        out.push_back(y);
      }
    }
    return out;
  }

  std::vector<std::pair<Element, Element>>
  vertex_annihilator(VertexMonoid const& m, Element const& a) {
    std::vector<std::pair<Element, Element>> out;
    if (m.is_free()) {
      return out;
    }
    for (auto const& s : m.elements()) {
      for (auto const& t : m.elements()) {
        if (s != t && m.multiply(s, a) == m.multiply(t, a)) {
          out.emplace_back(s, t);
        }
      }
    }
    return out;
  }

  bool admits_glue(VertexMonoid const& m, Element const& x) {
    return glue_multiplier(m, x).has_value();
  }

  std::optional<Element> glue_multiplier(VertexMonoid const& m,
                                         Element const&      x) {
    if (m.is_free()) {
      if (m.rank() == 0) {
        return std::nullopt;
      }
      return Element::free(std::string(1, '\0'));
    }
    for (auto const& p : m.elements()) {
      if (!m.is_identity(p) && !m.is_identity(m.multiply(p, x))) {
        return p;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph and context
  ////////////////////////////////////////////////////////////////////////

  void Graph::add_edge(std::size_t u, std::size_t v) {
    if (u >= _n || v >= _n) {
      throw ContextError("edge (" + std::to_string(u) + ", "
                         + std::to_string(v) + ") has a vertex out of range");
    }
    if (u == v) {
      throw ContextError("loops are not allowed (vertex " + std::to_string(u)
                         + ")");
    }
    _adj[u * _n + v] = 1;
    _adj[v * _n + u] = 1;
  }

  std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < _n; ++u) {
      for (std::size_t v = u + 1; v < _n; ++v) {
        if (adjacent(u, v)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  std::optional<std::size_t>
  GPContext::vertex_index(std::string_view name) const {
    for (std::size_t i = 0; i < vertex_names.size(); ++i) {
      if (vertex_names[i] == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  GPContext build_context(Graph                     graph,
                          std::vector<VertexMonoid> monoids,
                          std::vector<std::string>  vertex_names,
                          std::vector<std::string>  monoid_names) {
    std::size_t const n = graph.vertex_count();
    if (monoids.size() != n) {
      throw ContextError("expected " + std::to_string(n)
                         + " vertex monoids, got "
                         + std::to_string(monoids.size()));
    }
    if (vertex_names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        vertex_names.push_back("v" + std::to_string(i));
      }
    }
    if (monoid_names.empty()) {
      for (std::size_t i = 0; i < n; ++i) {
        monoid_names.push_back("M" + std::to_string(i));
      }
    }
    if (vertex_names.size() != n || monoid_names.size() != n) {
      throw ContextError("name lists do not match the number of vertices");
    }
    for (std::size_t i = 0; i < n; ++i) {
      auto const& m = monoids[i];
      if (m.is_free() ? m.rank() == 0 : m.size() == 1) {
        throw ContextError("trivial vertex monoid at vertex "
                           + vertex_names[i]);
      }
    }
    std::set<std::string> seen;
    for (auto const& s : vertex_names) {
      if (!is_name(s)) {
        throw ContextError("invalid vertex name \"" + s + "\"");
      }
      if (!seen.insert(s).second) {
        throw ContextError("repeated vertex name \"" + s + "\"");
      }
    }
    return GPContext{std::move(graph),
                     std::move(monoids),
                     std::move(vertex_names),
                     std::move(monoid_names)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  void validate_word(GPContext const& ctx, Word const& w) {
    for (auto const& x : w) {
      if (x.vertex >= ctx.vertex_count()) {
        throw PreconditionError("letter refers to vertex "
                                + std::to_string(x.vertex)
                                + " which is out of range");
      }
      if (!ctx.monoid(x.vertex).contains(x.element)) {
        throw PreconditionError("letter at vertex "
                                + ctx.vertex_names[x.vertex]
                                + " is not an element of its monoid");
      }
    }
  }

  bool is_identity_letter(GPContext const& ctx, Letter const& x) {
    return ctx.monoid(x.vertex).is_identity(x.element);
  }

  Word concat(Word u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  std::string format_letter(GPContext const& ctx, Letter const& x) {
    return ctx.vertex_names[x.vertex] + "."
           + ctx.monoid(x.vertex).format(x.element);
  }

  std::string format_word(GPContext const& ctx, Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (auto const& x : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += format_letter(ctx, x);
    }
    return out;
  }

  Word parse_word(GPContext const& ctx, std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        token;
    Word               out;
    bool               saw_empty = false;
    while (in >> token) {
      if (token == "e") {
        saw_empty = true;
        continue;
      }
      auto dot = token.find('.');
      if (dot == std::string::npos) {
        throw PreconditionError("expected a letter of the form vertex.element,"
                                " got \"" + token + "\"");
      }
      auto v = ctx.vertex_index(token.substr(0, dot));
      if (!v) {
        throw PreconditionError("unknown vertex \"" + token.substr(0, dot)
                                + "\"");
      }
      auto x = ctx.monoid(*v).parse(token.substr(dot + 1));
      if (!x) {
        throw PreconditionError("unknown element \"" + token.substr(dot + 1)
                                + "\" at vertex " + ctx.vertex_names[*v]);
      }
      out.push_back(Letter{static_cast<std::uint32_t>(*v), *x});
    }
    if (saw_empty && !out.empty()) {
      throw PreconditionError("\"e\" denotes the empty word and cannot be "
                              "combined with letters");
    }
    return out;
  }

}  // namespace graphprod
