#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>

#include "bettikit/complex.hpp"
#include "bettikit/error.hpp"
#include "bettikit/graph.hpp"
#include "bettikit/limits.hpp"

namespace bettikit::cli {

// Grammar (whitespace between tokens is ignored):
//
//   expr  := term ( '#' INT glue? term )*          left-associative
//   term  := atom | '(' expr ')'
//   glue  := '[' INT (',' INT)* ';' INT (',' INT)* ']'
//   atom  := 'K' INT | 'C' INT | 'simplex(' INT ')' | 'path(' INT ')'
//          | 'star(' INT ')' | 'file:' PATH
//
// K, C, path and star are graphs; simplex(d) is the boundary complex of the
// d-simplex; file atoms take the kind of the rest of the expression.

/// A malformed expression; `offset` is the byte position of the problem.
class ExpressionError : public Error {
 public:
  ExpressionError(Errc code, std::size_t offset, const std::string& message)
      : Error(code, "at offset " + std::to_string(offset) + ": " + message), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

struct SumExpression;
using SumExpressionPtr = std::shared_ptr<const SumExpression>;

struct SumExpression {
  struct Atom {
    enum class Kind { complete, cycle, simplex, path, star, file };
    Kind kind;
    std::size_t size = 0;  // unused for file
    std::string path;      // file only
  };
  struct Sum {
    std::size_t t;
    /// Explicit (F1, F2); the canonical choice is used when absent.
    std::optional<std::pair<VertexSet, VertexSet>> faces;
    SumExpressionPtr left;
    SumExpressionPtr right;
  };

  std::variant<Atom, Sum> node;
  /// Byte offset of the atom, or of the '#' of a sum, in the parsed text.
  std::size_t offset = 0;
};

/// Structural equality; offsets are ignored.
bool operator==(const SumExpression& a, const SumExpression& b);

SumExpressionPtr parse_sum_expression(std::string_view text);
std::string print_sum_expression(const SumExpression& expr);

using SumValue = std::variant<Graph, SimplicialComplex>;

/// Folds the tree through the connected sums. Unspecified glue faces are the
/// lexicographically smallest t-clique (graphs) or t-vertex facet (complexes)
/// of each operand, with the canonical relabeling. Mixing graph and complex
/// atoms throws MixedKinds; gluing errors name the offending '#'.
SumValue evaluate(const SumExpression& expr, const Limits& limits = {});

}  // namespace bettikit::cli
