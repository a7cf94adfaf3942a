// Reading and writing graph product contexts in a small text format:
//
//   monoid U { elements: 1 a; identity: 1; table: 1 a, a a }
//   monoid F free { alphabet: x y }
//   graph { vertices: A:U B:F; edges: A-B }
//   word w = A.a B.xy
//
// Sections end with ";" or at the next section name.  Table rows are
// separated by commas or line breaks.  "#" starts a comment.

#ifndef GRAPHPROD_CONTEXT_FILE_HPP_
#define GRAPHPROD_CONTEXT_FILE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphprod/core.hpp"

namespace graphprod {

  //! A syntax or semantic error in a context file, with its location.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, std::string const& what)
        : Error("line " + std::to_string(line) + ", column "
                + std::to_string(column) + ": " + what),
          _line(line),
          _column(column) {}

    std::size_t line() const noexcept {
      return _line;
    }
    std::size_t column() const noexcept {
      return _column;
    }

   private:
    std::size_t _line, _column;
  };

  struct ContextFile {
    GPContext                                 context;
    std::vector<std::pair<std::string, Word>> words;

    Word const* find_word(std::string_view name) const;
  };

  ContextFile parse_context(std::string_view text);

  ContextFile load_context(std::string const& path);

  std::string format_context(ContextFile const& file);

}  // namespace graphprod

#endif  // GRAPHPROD_CONTEXT_FILE_HPP_
