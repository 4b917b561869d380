#pragma once

// Minimal prefix-form expression language used as an independent oracle.
//
//   program  := form*
//   form     := (def NAME (PARAM...) BODY) | expr
//   expr     := number | symbol | (op expr...)
//
// Values are complex numbers or lists of integers. Built-in operators:
//   + - * / sinh cosh            arithmetic (variadic + and *)
//   (lam k) (mu k)               spectral variable / inhomogeneity k, 0-based
//   (range lo hi)                integers lo..hi inclusive
//   (except SET v...)            SET without the listed integers
//   (diff SET OTHER)             SET without the members of OTHER
//   (len LIST) (at LIST k)
//   (sum VAR SEQ BODY) (prod VAR SEQ BODY)
//       SEQ is a list, (subsets SET m) or (perms SET); VAR is bound to an
//       integer for lists and to a list for subsets / perms
//   (if COND THEN ELSE) (= x y)
// Free symbols resolve against bound variables, then the environment scalars.

#include <complex>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace sixv::oracle {

using cplx = std::complex<double>;
using IntList = std::vector<int>;
using Value = std::variant<cplx, IntList>;

struct Node {
  std::string atom;  // empty for lists
  std::vector<Node> items;
  bool is_list() const { return atom.empty(); }
};

/// Parses every top-level form of `text`. Throws std::runtime_error.
std::vector<Node> parse(const std::string& text);

struct Environment {
  std::vector<cplx> lam;
  std::vector<cplx> mu;
  std::map<std::string, Value> scalars;
};

class Interpreter {
 public:
  /// Loads the definitions in `program`; bare expressions are rejected.
  explicit Interpreter(const std::string& program);

  /// Evaluates one expression.
  Value eval(const std::string& expr, const Environment& env) const;
  cplx eval_complex(const std::string& expr, const Environment& env) const;

 private:
  struct Function {
    std::vector<std::string> params;
    Node body;
  };
  using Scope = std::map<std::string, Value>;

  Value eval_node(const Node& n, const Environment& env, const Scope& scope) const;
  Value reduce(const Node& n, const Environment& env, const Scope& scope, bool is_sum) const;

  std::map<std::string, Function> functions_;
};

}  // namespace sixv::oracle
