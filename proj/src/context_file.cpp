#include "graphprod/context_file.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace graphprod {

  namespace {
    struct Token {
      enum Kind { ident, punct, newline, end } kind;
      std::string text;
      std::size_t line, column;
    };

    std::vector<Token> tokenize(std::string_view s) {
      std::vector<Token> out;
      std::size_t        line = 1, col = 1;
      for (std::size_t i = 0; i < s.size();) {
        char const c = s[i];
        if (c == '\n') {
          out.push_back({Token::newline, "\n", line, col});
          ++line;
          col = 1;
          ++i;
        } else if (c == '#') {
          while (i < s.size() && s[i] != '\n') {
            ++i;
          }
        } else if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
          ++col;
        } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
          std::size_t j = i;
          while (j < s.size()
                 && (std::isalnum(static_cast<unsigned char>(s[j]))
                     || s[j] == '_')) {
            ++j;
          }
          out.push_back({Token::ident, std::string(s.substr(i, j - i)), line,
                         col});
          col += j - i;
          i = j;
        } else if (std::string_view("{}:;,=-.").find(c)
                   != std::string_view::npos) {
          out.push_back({Token::punct, std::string(1, c), line, col});
          ++i;
          ++col;
        } else {
          throw ParseError(line, col,
                           std::string("unexpected character '") + c + "'");
        }
      }
      out.push_back({Token::end, "", line, col});
      return out;
    }


    class Parser {
     public:
      explicit Parser(std::string_view text) : _toks(tokenize(text)) {}

      ContextFile run() {
        ContextFile out;
        bool        have_graph = false;
        while (true) {
          skip_newlines();
          auto const& t = peek();
          if (t.kind == Token::end) {
            break;
          }
          auto kw = expect_ident("a declaration");
          if (kw.text == "monoid") {
            parse_monoid();
          } else if (kw.text == "graph") {
            if (have_graph) {
              fail(kw, "a second graph declaration");
            }
            out.context = parse_graph();
            have_graph  = true;
          } else if (kw.text == "word") {
            if (!have_graph) {
              fail(kw, "word declared before the graph");
            }
            auto name = expect_ident("a word name");
            if (out.find_word(name.text)) {
              fail(name, "word \"" + name.text + "\" declared twice");
            }
            expect_punct("=");
            out.words.emplace_back(name.text, parse_letters(out.context));
          } else {
            fail(kw, "unknown declaration \"" + kw.text + "\"");
          }
        }
        if (!have_graph) {
          auto const& t = peek();
          throw ParseError(t.line, t.column, "no graph declaration");
        }
        return out;
      }

     private:
      [[noreturn]] void fail(Token const& t, std::string const& what) {
        throw ParseError(t.line, t.column, what);
      }

      Token const& peek() const {
        return _toks[_pos];
      }

      Token next() {
        auto t = _toks[_pos];
        if (t.kind != Token::end) {
          ++_pos;
        }
        return t;
      }

      bool at_punct(char const* p) const {
        return peek().kind == Token::punct && peek().text == p;
      }

      // A section keyword followed by ':' ends the previous section.
      bool at_section() const {
        static constexpr std::string_view keys[]
            = {"elements", "identity", "table", "alphabet", "vertices", "edges"};
        auto const& t = peek();
        if (t.kind != Token::ident || _pos + 1 >= _toks.size()) {
          return false;
        }
        auto const& n = _toks[_pos + 1];
        return n.kind == Token::punct && n.text == ":"
               && std::find(std::begin(keys), std::end(keys), t.text)
                      != std::end(keys);
      }

      void skip_newlines() {
        while (peek().kind == Token::newline) {
          ++_pos;
        }
      }

      Token expect_ident(std::string const& what) {
        auto t = next();
        if (t.kind != Token::ident) {
          fail(t, "expected " + what);
        }
        return t;
      }

      void expect_punct(char const* p) {
        auto t = next();
        if (t.kind != Token::punct || t.text != p) {
          fail(t, std::string("expected '") + p + "'");
        }
      }

      // Identifiers up to ';' or '}', ignoring line breaks.
      std::vector<Token> ident_list() {
        std::vector<Token> out;
        while (true) {
          skip_newlines();
          if (at_punct(";") || at_punct("}") || at_section()) {
            break;
          }
          out.push_back(expect_ident("a name"));
        }
        if (at_punct(";")) {
          next();
        }
        return out;
      }

      void parse_monoid() {
        auto name = expect_ident("a monoid name");
        if (_monoids.count(name.text)) {
          fail(name, "monoid \"" + name.text + "\" declared twice");
        }
        bool is_free = false;
        if (peek().kind == Token::ident && peek().text == "free") {
          next();
          is_free = true;
        }
        skip_newlines();
        expect_punct("{");
        std::optional<std::vector<Token>>              elements, alphabet;
        std::optional<Token>                           identity;
        std::optional<std::vector<std::vector<Token>>> table;
        while (true) {
          skip_newlines();
          if (at_punct("}")) {
            next();
            break;
          }
          auto key = expect_ident("a section name");
          expect_punct(":");
          if (is_free && key.text == "alphabet" && !alphabet) {
            alphabet = ident_list();
          } else if (!is_free && key.text == "elements" && !elements) {
            elements = ident_list();
          } else if (!is_free && key.text == "identity" && !identity) {
            auto ids = ident_list();
            if (ids.size() != 1) {
              fail(key, "identity takes exactly one element");
            }
            identity = ids[0];
          } else if (!is_free && key.text == "table" && !table) {
            table = parse_table();
          } else {
            fail(key, "unexpected section \"" + key.text + "\"");
          }
        }
        if (at_punct(";")) {
          next();
        }
        try {
          if (is_free) {
            std::vector<std::string> syms;
            for (auto const& t : alphabet.value_or(std::vector<Token>{})) {
              syms.push_back(t.text);
            }
            _monoids.emplace(name.text, VertexMonoid::free(std::move(syms)));
            return;
          }
          if (!elements || !identity || !table) {
            fail(name, "monoid \"" + name.text
                           + "\" needs elements, identity and table");
          }
          std::vector<std::string>        names;
          std::map<std::string, std::uint32_t> index;
          for (auto const& t : *elements) {
            index.emplace(t.text, static_cast<std::uint32_t>(names.size()));
            names.push_back(t.text);
          }
          auto lookup = [&](Token const& t) {
            auto it = index.find(t.text);
            if (it == index.end()) {
              fail(t, "unknown element \"" + t.text + "\"");
            }
            return it->second;
          };
          std::vector<std::vector<std::uint32_t>> rows;
          for (auto const& row : *table) {
            if (row.size() != names.size()) {
              fail(row.front(), "table row has " + std::to_string(row.size())
                                    + " entries, expected "
                                    + std::to_string(names.size()));
            }
            rows.emplace_back();
            for (auto const& t : row) {
              rows.back().push_back(lookup(t));
            }
          }
          auto id = lookup(*identity);
          _monoids.emplace(name.text,
                           VertexMonoid::finite(std::move(names), id,
                                                std::move(rows)));
        } catch (ContextError const& e) {
          fail(name, e.what());
        }
      }

      std::vector<std::vector<Token>> parse_table() {
        std::vector<std::vector<Token>> rows(1);
        while (true) {
          auto const& t = peek();
          if (t.kind == Token::newline || (t.kind == Token::punct && t.text == ",")) {
            next();
            if (!rows.back().empty()) {
              rows.emplace_back();
            }
            continue;
          }
          if (at_punct(";") || at_punct("}") || at_section()) {
            break;
          }
          rows.back().push_back(expect_ident("a table entry"));
        }
        if (at_punct(";")) {
          next();
        }
        if (rows.back().empty()) {
          rows.pop_back();
        }
        return rows;
      }

      GPContext parse_graph() {
        skip_newlines();
        expect_punct("{");
        std::vector<std::string>  vnames, mnames;
        std::vector<VertexMonoid> ms;
        std::vector<std::pair<Token, Token>> edges;
        bool seen_vertices = false, seen_edges = false;
        while (true) {
          skip_newlines();
          if (at_punct("}")) {
            next();
            break;
          }
          auto key = expect_ident("a section name");
          expect_punct(":");
          if (key.text == "vertices" && !seen_vertices) {
            seen_vertices = true;
            while (true) {
              skip_newlines();
              if (at_punct(";") || at_punct("}") || at_section()) {
                break;
              }
              auto v = expect_ident("a vertex name");
              expect_punct(":");
              auto m  = expect_ident("a monoid name");
              auto it = _monoids.find(m.text);
              if (it == _monoids.end()) {
                fail(m, "unknown monoid \"" + m.text + "\"");
              }
              for (auto const& x : vnames) {
                if (x == v.text) {
                  fail(v, "vertex \"" + v.text + "\" declared twice");
                }
              }
              vnames.push_back(v.text);
              mnames.push_back(m.text);
              ms.push_back(it->second);
            }
          } else if (key.text == "edges" && !seen_edges) {
            seen_edges = true;
            while (true) {
              skip_newlines();
              if (at_punct(";") || at_punct("}") || at_section()) {
                break;
              }
              auto u = expect_ident("a vertex name");
              expect_punct("-");
              auto v = expect_ident("a vertex name");
              edges.emplace_back(u, v);
            }
          } else {
            fail(key, "unexpected section \"" + key.text + "\"");
          }
          if (at_punct(";")) {
            next();
          }
        }
        if (at_punct(";")) {
          next();
        }
        Graph g(vnames.size());
        auto  find = [&](Token const& t) {
          for (std::size_t i = 0; i < vnames.size(); ++i) {
            if (vnames[i] == t.text) {
              return i;
            }
          }
          fail(t, "unknown vertex \"" + t.text + "\"");
        };
        for (auto const& [u, v] : edges) {
          auto i = find(u), j = find(v);
          if (i == j) {
            fail(u, "loop edge at vertex \"" + u.text + "\"");
          }
          g.add_edge(i, j);
        }
        return GPContext{std::move(g), std::move(ms), std::move(vnames),
                         std::move(mnames)};
      }

      Word parse_letters(GPContext const& ctx) {
        Word out;
        bool empty = false;
        while (peek().kind != Token::newline && peek().kind != Token::end) {
          auto v = expect_ident("a letter");
          if (!at_punct(".")) {
            if (v.text != "e") {
              fail(v, "expected a letter of the form vertex.element");
            }
            empty = true;
            continue;
          }
          next();
          auto e  = expect_ident("an element");
          auto vi = ctx.vertex_index(v.text);
          if (!vi) {
            fail(v, "unknown vertex \"" + v.text + "\"");
          }
          auto x = ctx.monoid(*vi).parse(e.text);
          if (!x) {
            fail(e, "unknown element \"" + e.text + "\" at vertex " + v.text);
          }
          out.push_back(Letter{static_cast<std::uint32_t>(*vi), *x});
        }
        if (empty && !out.empty()) {
          fail(peek(), "\"e\" cannot be combined with letters");
        }
        return out;
      }

      std::vector<Token>                  _toks;
      std::size_t                         _pos = 0;
      std::map<std::string, VertexMonoid> _monoids;
    };
  }  // namespace

  Word const* ContextFile::find_word(std::string_view name) const {
    for (auto const& [n, w] : words) {
      if (n == name) {
        return &w;
      }
    }
    return nullptr;
  }

  ContextFile parse_context(std::string_view text) {
    return Parser(text).run();
  }

  ContextFile load_context(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw Error("cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_context(ss.str());
  }

  std::string format_context(ContextFile const& file) {
    auto const&        ctx = file.context;
    std::ostringstream out;
    std::map<std::string, bool> printed;
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      auto const& name = ctx.monoid_names[v];
      if (printed[name]) {
        continue;
      }
      printed[name] = true;
      auto const& m = ctx.monoid(v);
      if (m.is_free()) {
        out << "monoid " << name << " free { alphabet:";
        for (auto const& s : m.names()) {
          out << ' ' << s;
        }
        out << " }\n";
        continue;
      }
      out << "monoid " << name << " {\n  elements:";
      for (auto const& s : m.names()) {
        out << ' ' << s;
      }
      out << ";\n  identity: " << m.names()[m.identity_index()]
          << ";\n  table:\n";
      for (auto const& row : m.table()) {
        out << "   ";
        for (auto x : row) {
          out << ' ' << m.names()[x];
        }
        out << '\n';
      }
      out << "}\n";
    }
    out << "graph {\n  vertices:";
    for (std::size_t v = 0; v < ctx.vertex_count(); ++v) {
      out << ' ' << ctx.vertex_names[v] << ':' << ctx.monoid_names[v];
    }
    out << ";\n  edges:";
    for (auto const& [u, v] : ctx.graph.edges()) {
      out << ' ' << ctx.vertex_names[u] << '-' << ctx.vertex_names[v];
    }
    out << "\n}\n";
    for (auto const& [name, w] : file.words) {
      out << "word " << name << " = " << format_word(ctx, w) << '\n';
    }
    return out.str();
  }

}  // namespace graphprod
