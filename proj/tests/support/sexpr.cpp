#include "sexpr.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sixv::oracle {

namespace {

void skip_space(const std::string& s, std::size_t& pos) {
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    } else if (s[pos] == ';') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

Node parse_node(const std::string& s, std::size_t& pos) {
  skip_space(s, pos);
  if (pos >= s.size()) throw std::runtime_error("unexpected end of input");
  if (s[pos] == ')') throw std::runtime_error("unbalanced ')'");
  Node n;
  if (s[pos] == '(') {
    ++pos;
    for (;;) {
      skip_space(s, pos);
      if (pos >= s.size()) throw std::runtime_error("missing ')'");
      if (s[pos] == ')') {
        ++pos;
        break;
      }
      n.items.push_back(parse_node(s, pos));
    }
    return n;
  }
  const std::size_t start = pos;
  while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != '(' && s[pos] != ')') ++pos;
  n.atom = s.substr(start, pos - start);
  return n;
}

cplx as_complex(const Value& v) {
  if (const auto* c = std::get_if<cplx>(&v)) return *c;
  throw std::runtime_error("expected a number, got a list");
}

const IntList& as_list(const Value& v) {
  if (const auto* l = std::get_if<IntList>(&v)) return *l;
  throw std::runtime_error("expected a list, got a number");
}

int as_int(const Value& v) {
  const cplx c = as_complex(v);
  const double r = std::round(c.real());
  if (std::abs(c.real() - r) > 1e-9 || std::abs(c.imag()) > 1e-12) throw std::runtime_error("expected an integer");
  return static_cast<int>(r);
}

bool is_number(const std::string& a) {
  if (a.empty()) return false;
  char* end = nullptr;
  std::strtod(a.c_str(), &end);
  return end == a.c_str() + a.size();
}

void combinations(const IntList& set, int m, std::size_t start, IntList& cur, std::vector<IntList>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < set.size(); ++i) {
    cur.push_back(set[i]);
    combinations(set, m, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Node> parse(const std::string& text) {
  std::vector<Node> out;
  std::size_t pos = 0;
  for (;;) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    out.push_back(parse_node(text, pos));
  }
  return out;
}

Interpreter::Interpreter(const std::string& program) {
  for (const Node& form : parse(program)) {
    if (!form.is_list() || form.items.size() != 4 || form.items[0].atom != "def") {
      throw std::runtime_error("top-level forms must be (def NAME (PARAMS) BODY)");
    }
    Function f;
    for (const Node& p : form.items[2].items) f.params.push_back(p.atom);
    f.body = form.items[3];
    functions_[form.items[1].atom] = std::move(f);
  }
}

Value Interpreter::eval(const std::string& expr, const Environment& env) const {
  const auto nodes = parse(expr);
  if (nodes.size() != 1) throw std::runtime_error("expected a single expression");
  return eval_node(nodes.front(), env, {});
}

cplx Interpreter::eval_complex(const std::string& expr, const Environment& env) const {
  return as_complex(eval(expr, env));
}

Value Interpreter::reduce(const Node& n, const Environment& env, const Scope& scope, bool is_sum) const {
  if (n.items.size() != 4) throw std::runtime_error("sum/prod take VAR SEQ BODY");
  const std::string& var = n.items[1].atom;
  const Node& seq = n.items[2];

  std::vector<Value> values;
  if (seq.is_list() && !seq.items.empty() && seq.items[0].atom == "subsets") {
    const IntList set = as_list(eval_node(seq.items[1], env, scope));
    const int m = as_int(eval_node(seq.items[2], env, scope));
    std::vector<IntList> subs;
    IntList cur;
    combinations(set, m, 0, cur, subs);
    for (auto& s : subs) values.emplace_back(std::move(s));
  } else if (seq.is_list() && !seq.items.empty() && seq.items[0].atom == "perms") {
    IntList set = as_list(eval_node(seq.items[1], env, scope));
    std::sort(set.begin(), set.end());
    do {
      values.emplace_back(set);
    } while (std::next_permutation(set.begin(), set.end()));
  } else {
    const Value list = eval_node(seq, env, scope);
    for (const int k : as_list(list)) values.emplace_back(cplx(k, 0.0));
  }

  cplx acc = is_sum ? cplx{0.0} : cplx{1.0};
  Scope inner = scope;
  for (const Value& v : values) {
    inner[var] = v;
    const cplx term = as_complex(eval_node(n.items[3], env, inner));
    acc = is_sum ? acc + term : acc * term;
  }
  return acc;
}

Value Interpreter::eval_node(const Node& n, const Environment& env, const Scope& scope) const {
  if (!n.is_list()) {
    if (is_number(n.atom)) return cplx(std::strtod(n.atom.c_str(), nullptr), 0.0);
    if (const auto it = scope.find(n.atom); it != scope.end()) return it->second;
    if (const auto it = env.scalars.find(n.atom); it != env.scalars.end()) return it->second;
    throw std::runtime_error("unbound symbol '" + n.atom + "'");
  }
  if (n.items.empty()) throw std::runtime_error("empty form");
  const std::string& op = n.items[0].atom;
  auto arg = [&](std::size_t k) { return eval_node(n.items.at(k), env, scope); };
  auto num = [&](std::size_t k) { return as_complex(arg(k)); };
  const std::size_t argc = n.items.size() - 1;

  if (op == "+" || op == "*") {
    cplx acc = op == "+" ? cplx{0.0} : cplx{1.0};
    for (std::size_t k = 1; k <= argc; ++k) acc = op == "+" ? acc + num(k) : acc * num(k);
    return acc;
  }
  if (op == "-") return argc == 1 ? -num(1) : num(1) - num(2);
  if (op == "/") return num(1) / num(2);
  if (op == "sinh") return std::sinh(num(1));
  if (op == "cosh") return std::cosh(num(1));
  if (op == "lam") return env.lam.at(static_cast<std::size_t>(as_int(arg(1))));
  if (op == "mu") return env.mu.at(static_cast<std::size_t>(as_int(arg(1))));
  if (op == "range") {
    IntList out;
    for (int k = as_int(arg(1)); k <= as_int(arg(2)); ++k) out.push_back(k);
    return out;
  }
  if (op == "except") {
    IntList out = as_list(arg(1));
    for (std::size_t k = 2; k <= argc; ++k) {
      const int v = as_int(arg(k));
      out.erase(std::remove(out.begin(), out.end(), v), out.end());
    }
    return out;
  }
  if (op == "diff") {
    IntList out = as_list(arg(1));
    const IntList other = as_list(arg(2));
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](int v) { return std::find(other.begin(), other.end(), v) != other.end(); }),
              out.end());
    return out;
  }
  if (op == "len") return cplx(static_cast<double>(as_list(arg(1)).size()), 0.0);
  if (op == "at") return cplx(as_list(arg(1)).at(static_cast<std::size_t>(as_int(arg(2)))), 0.0);
  if (op == "sum") return reduce(n, env, scope, true);
  if (op == "prod") return reduce(n, env, scope, false);
  if (op == "=") return cplx(num(1) == num(2) ? 1.0 : 0.0, 0.0);
  if (op == "if") return as_complex(arg(1)) != cplx{0.0} ? arg(2) : arg(3);

  const auto it = functions_.find(op);
  if (it == functions_.end()) throw std::runtime_error("unknown operator '" + op + "'");
  const Function& f = it->second;
  if (f.params.size() != argc) throw std::runtime_error("arity mismatch calling '" + op + "'");
  Scope inner = scope;
  for (std::size_t k = 0; k < argc; ++k) inner[f.params[k]] = arg(k + 1);
  return eval_node(f.body, env, inner);
}

}  // namespace sixv::oracle
