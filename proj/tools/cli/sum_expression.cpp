#include "sum_expression.hpp"

#include <cctype>
#include <charconv>

#include "bettikit/connected_sum.hpp"
#include "bettikit/generators.hpp"
#include "bettikit/io.hpp"

namespace bettikit::cli {
namespace {

using Atom = SumExpression::Atom;
using Sum = SumExpression::Sum;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SumExpressionPtr parse() {
    skip_space();
    if (at_end()) throw ExpressionError(Errc::SyntaxError, pos_, "empty expression");
    auto expr = parse_expr();
    skip_space();
    if (!at_end()) {
      if (peek() == ')') throw ExpressionError(Errc::SyntaxError, pos_, "unbalanced ')'");
      throw ExpressionError(Errc::SyntaxError, pos_, "expected '#' or end of input");
    }
    return expr;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) throw ExpressionError(Errc::SyntaxError, pos_, std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  std::size_t parse_int() {
    skip_space();
    std::size_t value = 0;
    auto first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == first) throw ExpressionError(Errc::SyntaxError, pos_, "expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool starts_term() {
    skip_space();
    if (at_end()) return false;
    char c = peek();
    return c == '(' || c == 'K' || c == 'C' || c == 's' || c == 'p' || c == 'f';
  }

  SumExpressionPtr parse_expr() {
    auto left = parse_term();
    for (;;) {
      skip_space();
      if (peek() != '#') return left;
      const std::size_t offset = pos_++;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        throw ExpressionError(Errc::SyntaxError, pos_, "expected the glue size after '#'");
      }
      Sum sum{parse_int(), std::nullopt, left, nullptr};
      skip_space();
      if (peek() == '[') sum.faces = parse_glue();
      if (!starts_term()) throw ExpressionError(Errc::ArityError, offset, "'#' is missing its right operand");
      sum.right = parse_term();
      left = std::make_shared<const SumExpression>(SumExpression{std::move(sum), offset});
    }
  }

  std::pair<VertexSet, VertexSet> parse_glue() {
    expect('[');
    auto f1 = parse_list();
    expect(';');
    auto f2 = parse_list();
    expect(']');
    return {std::move(f1), std::move(f2)};
  }

  VertexSet parse_list() {
    std::vector<Vertex> labels{static_cast<Vertex>(parse_int())};
    while (accept(',')) labels.push_back(static_cast<Vertex>(parse_int()));
    return VertexSet(std::move(labels));
  }

  SumExpressionPtr parse_term() {
    skip_space();
    if (at_end()) throw ExpressionError(Errc::SyntaxError, pos_, "unexpected end of input");
    if (peek() == '#') throw ExpressionError(Errc::ArityError, pos_, "'#' is missing its left operand");
    if (accept('(')) {
      auto inner = parse_expr();
      expect(')');
      return inner;
    }
    const std::size_t offset = pos_;
    Atom atom{};
    if (accept_word("simplex")) {
      atom = {Atom::Kind::simplex, parse_call_argument(), {}};
    } else if (accept_word("path")) {
      atom = {Atom::Kind::path, parse_call_argument(), {}};
    } else if (accept_word("star")) {
      atom = {Atom::Kind::star, parse_call_argument(), {}};
    } else if (accept_word("file:")) {
      std::size_t end = pos_;
      while (end < text_.size() && !std::isspace(static_cast<unsigned char>(text_[end])) && text_[end] != ')' &&
             text_[end] != '#') {
        ++end;
      }
      if (end == pos_) throw ExpressionError(Errc::SyntaxError, pos_, "expected a path after 'file:'");
      atom = {Atom::Kind::file, 0, std::string(text_.substr(pos_, end - pos_))};
      pos_ = end;
    } else if (accept_word("K")) {
      atom = {Atom::Kind::complete, parse_atom_size(), {}};
    } else if (accept_word("C")) {
      atom = {Atom::Kind::cycle, parse_atom_size(), {}};
    } else {
      throw ExpressionError(Errc::SyntaxError, pos_, "expected an atom or '('");
    }
    return std::make_shared<const SumExpression>(SumExpression{std::move(atom), offset});
  }

  std::size_t parse_atom_size() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ExpressionError(Errc::SyntaxError, pos_, "expected a size directly after the atom name");
    }
    return parse_int();
  }

  std::size_t parse_call_argument() {
    expect('(');
    auto value = parse_int();
    expect(')');
    return value;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string print_list(const VertexSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? "," : "") + std::to_string(set[i]);
  return out;
}

enum class Mode { graph, complex };

struct Kinds {
  bool graph = false;
  bool complex = false;
};

void collect_kinds(const SumExpression& expr, Kinds& kinds) {
  if (const auto* atom = std::get_if<Atom>(&expr.node)) {
    if (atom->kind == Atom::Kind::simplex) kinds.complex = true;
    if (atom->kind != Atom::Kind::simplex && atom->kind != Atom::Kind::file) kinds.graph = true;
    if (kinds.graph && kinds.complex) {
      throw ExpressionError(Errc::MixedKinds, expr.offset, "graph and complex atoms cannot be summed together");
    }
    return;
  }
  const auto& sum = std::get<Sum>(expr.node);
  collect_kinds(*sum.left, kinds);
  collect_kinds(*sum.right, kinds);
}

template <typename T>
T rethrow_at(std::size_t offset, auto&& action) {
  try {
    return action();
  } catch (const ExpressionError&) {
    throw;
  } catch (const Error& e) {
    throw ExpressionError(e.code(), offset, e.detail());
  }
}

Graph evaluate_graph(const SumExpression& expr, const Limits& limits) {
  if (const auto* atom = std::get_if<Atom>(&expr.node)) {
    return rethrow_at<Graph>(expr.offset, [&]() -> Graph {
      switch (atom->kind) {
        case Atom::Kind::complete: return complete_graph(atom->size);
        case Atom::Kind::cycle: return cycle_graph(atom->size);
        case Atom::Kind::path: return tree(atom->size, TreeSpec{TreeShape::path, 0, {}});
        case Atom::Kind::star: return tree(atom->size, TreeSpec{TreeShape::star, 0, {}});
        case Atom::Kind::file: return read_graph_file(atom->path).graph;
        case Atom::Kind::simplex: break;
      }
      throw Error(Errc::MixedKinds, "simplex atom in a graph expression");
    });
  }
  const auto& sum = std::get<Sum>(expr.node);
  Graph left = evaluate_graph(*sum.left, limits);
  Graph right = evaluate_graph(*sum.right, limits);
  return rethrow_at<Graph>(expr.offset, [&] {
    VertexSet f1, f2;
    if (sum.faces) {
      std::tie(f1, f2) = *sum.faces;
    } else {
      auto left_cliques = cliques_of_size(left, sum.t);
      auto right_cliques = cliques_of_size(right, sum.t);
      if (sum.t == 0) throw Error(Errc::BadGlueSize, "glue size t must be at least 1");
      if (left_cliques.empty() || right_cliques.empty()) {
        throw Error(Errc::NotComplete, "no " + std::to_string(sum.t) + "-clique to glue along");
      }
      f1 = left_cliques.front();
      f2 = right_cliques.front();
    }
    if (f1.size() != sum.t || f2.size() != sum.t) {
      throw Error(Errc::SizeMismatch, "glue faces must have exactly t = " + std::to_string(sum.t) + " vertices");
    }
    return connected_sum(left, right, canonical_gluing(left.vertices(), f1, right.vertices(), f2));
  });
}

SimplicialComplex evaluate_complex(const SumExpression& expr, const Limits& limits) {
  if (const auto* atom = std::get_if<Atom>(&expr.node)) {
    return rethrow_at<SimplicialComplex>(expr.offset, [&]() -> SimplicialComplex {
      if (atom->kind == Atom::Kind::simplex) return simplex_boundary(static_cast<int>(atom->size));
      if (atom->kind == Atom::Kind::file) return read_complex_file(atom->path, limits).complex;
      throw Error(Errc::MixedKinds, "graph atom in a complex expression");
    });
  }
  const auto& sum = std::get<Sum>(expr.node);
  SimplicialComplex left = evaluate_complex(*sum.left, limits);
  SimplicialComplex right = evaluate_complex(*sum.right, limits);
  return rethrow_at<SimplicialComplex>(expr.offset, [&] {
    VertexSet f1, f2;
    if (sum.faces) {
      std::tie(f1, f2) = *sum.faces;
    } else {
      if (sum.t == 0) throw Error(Errc::BadGlueSize, "glue size t must be at least 1");
      auto left_facets = facets_of_size(left, sum.t);
      auto right_facets = facets_of_size(right, sum.t);
      if (left_facets.empty() || right_facets.empty()) {
        throw Error(Errc::NotMaximalFace, "no facet with " + std::to_string(sum.t) + " vertices to glue along");
      }
      f1 = left_facets.front();
      f2 = right_facets.front();
    }
    if (f1.size() != sum.t || f2.size() != sum.t) {
      throw Error(Errc::SizeMismatch, "glue faces must have exactly t = " + std::to_string(sum.t) + " vertices");
    }
    return connected_sum(left, right, canonical_gluing(left.vertices(), f1, right.vertices(), f2));
  });
}

}  // namespace

bool operator==(const SumExpression& a, const SumExpression& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* x = std::get_if<Atom>(&a.node)) {
    const auto& y = std::get<Atom>(b.node);
    return x->kind == y.kind && x->size == y.size && x->path == y.path;
  }
  const auto& x = std::get<Sum>(a.node);
  const auto& y = std::get<Sum>(b.node);
  return x.t == y.t && x.faces == y.faces && *x.left == *y.left && *x.right == *y.right;
}

SumExpressionPtr parse_sum_expression(std::string_view text) { return Parser(text).parse(); }

std::string print_sum_expression(const SumExpression& expr) {
  if (const auto* atom = std::get_if<Atom>(&expr.node)) {
    const auto n = std::to_string(atom->size);
    switch (atom->kind) {
      case Atom::Kind::complete: return "K" + n;
      case Atom::Kind::cycle: return "C" + n;
      case Atom::Kind::simplex: return "simplex(" + n + ")";
      case Atom::Kind::path: return "path(" + n + ")";
      case Atom::Kind::star: return "star(" + n + ")";
      case Atom::Kind::file: return "file:" + atom->path;
    }
  }
  const auto& sum = std::get<Sum>(expr.node);
  std::string out = print_sum_expression(*sum.left) + " #" + std::to_string(sum.t);
  if (sum.faces) out += "[" + print_list(sum.faces->first) + ";" + print_list(sum.faces->second) + "]";
  std::string right = print_sum_expression(*sum.right);
  if (std::holds_alternative<Sum>(sum.right->node)) right = "(" + right + ")";
  return out + " " + right;
}

SumValue evaluate(const SumExpression& expr, const Limits& limits) {
  Kinds kinds;
  collect_kinds(expr, kinds);
  if (kinds.graph) return evaluate_graph(expr, limits);
  return evaluate_complex(expr, limits);
}

}  // namespace bettikit::cli
