#include "spinor_inv/expr.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace spinv {

struct Expr::Node {
  enum class Op { Const, Pattern, Named, Conj, Abs2, Sum, Product, Scale };
  Op op = Op::Const;
  cplx value = 0.0;
  std::string text;
  std::shared_ptr<const EvaluationPlan> plan;
  std::vector<std::shared_ptr<const Node>> kids;
};

namespace {

using Node = Expr::Node;
using NodePtr = std::shared_ptr<const Node>;

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

cplx eval_node(const Node& n, const StateTensor& s, const NameResolver& resolve) {
  switch (n.op) {
    case Node::Op::Const: return n.value;
    case Node::Op::Pattern: return execute(*n.plan, s);
    case Node::Op::Named: return resolve(n.text);
    case Node::Op::Conj: return std::conj(eval_node(*n.kids[0], s, resolve));
    case Node::Op::Abs2: return std::norm(eval_node(*n.kids[0], s, resolve));
    case Node::Op::Sum: {
      cplx t = 0.0;
      for (const auto& k : n.kids) t += eval_node(*k, s, resolve);
      return t;
    }
    case Node::Op::Product: {
      cplx t = 1.0;
      for (const auto& k : n.kids) t *= eval_node(*k, s, resolve);
      return t;
    }
    case Node::Op::Scale: return n.value * eval_node(*n.kids[0], s, resolve);
  }
  return 0.0;
}

std::pair<int, int> degree_node(const Node& n, const BidegreeResolver& resolve) {
  switch (n.op) {
    case Node::Op::Const: return {0, 0};
    case Node::Op::Pattern: return n.plan->pattern.bidegree();
    case Node::Op::Named: return resolve(n.text);
    case Node::Op::Conj: {
      auto [k, l] = degree_node(*n.kids[0], resolve);
      return {l, k};
    }
    case Node::Op::Abs2: {
      auto [k, l] = degree_node(*n.kids[0], resolve);
      return {k + l, k + l};
    }
    case Node::Op::Sum: {
      auto d = degree_node(*n.kids[0], resolve);
      for (std::size_t i = 1; i < n.kids.size(); ++i) {
        if (degree_node(*n.kids[i], resolve) != d) throw std::logic_error("sum mixes bidegrees");
      }
      return d;
    }
    case Node::Op::Product: {
      std::pair<int, int> d{0, 0};
      for (const auto& k : n.kids) {
        auto e = degree_node(*k, resolve);
        d.first += e.first;
        d.second += e.second;
      }
      return d;
    }
    case Node::Op::Scale: return degree_node(*n.kids[0], resolve);
  }
  return {0, 0};
}

std::string format_cplx(cplx c) {
  std::ostringstream os;
  if (c.imag() == 0.0) {
    os << c.real();
  } else if (c.real() == 0.0) {
    os << c.imag() << "i";
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

std::string string_node(const Node& n) {
  switch (n.op) {
    case Node::Op::Const: return format_cplx(n.value);
    case Node::Op::Pattern: return "{" + n.text + "}";
    case Node::Op::Named: return n.text;
    case Node::Op::Conj: return "conj(" + string_node(*n.kids[0]) + ")";
    case Node::Op::Abs2: return "|" + string_node(*n.kids[0]) + "|^2";
    case Node::Op::Sum: {
      std::string s;
      for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? " + " : "") + string_node(*n.kids[i]);
      return "(" + s + ")";
    }
    case Node::Op::Product: {
      std::string s;
      for (std::size_t i = 0; i < n.kids.size(); ++i) s += (i ? " * " : "") + string_node(*n.kids[i]);
      return s;
    }
    case Node::Op::Scale: return format_cplx(n.value) + "*" + string_node(*n.kids[0]);
  }
  return "?";
}

NodePtr make(Node::Op op, std::vector<NodePtr> kids, cplx value = 0.0) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->kids = std::move(kids);
  n->value = value;
  return n;
}

}  // namespace

std::string trace_to_pattern(std::string_view tokens) {
  const std::vector<std::string> toks = split(tokens);
  if (toks.empty() || toks.size() % 2 != 0 || toks.size() > 26) {
    throw std::invalid_argument("trace needs an even number (2..26) of alternating tokens");
  }
  auto letter = [&](std::size_t k) { return static_cast<char>('a' + (k % toks.size())); };
  std::ostringstream os;
  for (std::size_t k = 0; k < toks.size(); ++k) {
    const std::string& t = toks[k];
    const char a = letter(k);
    const char b = letter(k + 1);
    if (k) os << ' ';
    if (t == "P") {
      os << "Psi[" << a << ' ' << b << ']';
    } else if (t == "PT") {
      os << "Psi[" << b << ' ' << a << ']';
    } else if (t == "Ps") {
      os << "Psi*[" << a << ' ' << b << ']';
    } else if (t == "Pd") {
      os << "Psi*[" << b << ' ' << a << ']';
    } else if (t == "C" || t == "C5" || t == "g0" || t == "g05") {
      os << t << '[' << a << ' ' << b << ']';
    } else {
      throw std::invalid_argument("unknown trace token '" + t + "'");
    }
  }
  return os.str();
}

Expr::Expr() : node_(std::make_shared<const Node>()) {}

Expr Expr::pattern(std::string_view text) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::Pattern;
  n->plan = std::make_shared<const EvaluationPlan>(plan(parse_pattern(text)));
  n->text = n->plan->pattern.to_string();
  return Expr(n);
}

Expr Expr::trace(std::string_view tokens) {
  Expr e = pattern(trace_to_pattern(tokens));
  auto n = std::make_shared<Node>(*e.node_);
  n->text = "Tr[" + std::string(tokens) + "]: " + n->text;
  return Expr(n);
}

Expr Expr::named(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = Node::Op::Named;
  n->text = std::move(name);
  return Expr(n);
}

Expr Expr::constant(cplx value) { return Expr(make(Node::Op::Const, {}, value)); }

Expr Expr::conj() const { return Expr(make(Node::Op::Conj, {node_})); }
Expr Expr::abs2() const { return Expr(make(Node::Op::Abs2, {node_})); }

Expr operator+(const Expr& a, const Expr& b) {
  std::vector<NodePtr> kids;
  for (const Expr* e : {&a, &b}) {
    if (e->node_->op == Expr::Node::Op::Sum) {
      kids.insert(kids.end(), e->node_->kids.begin(), e->node_->kids.end());
    } else {
      kids.push_back(e->node_);
    }
  }
  return Expr(make(Expr::Node::Op::Sum, std::move(kids)));
}

Expr operator-(const Expr& a) { return cplx(-1.0) * a; }
Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
  std::vector<NodePtr> kids;
  for (const Expr* e : {&a, &b}) {
    if (e->node_->op == Expr::Node::Op::Product) {
      kids.insert(kids.end(), e->node_->kids.begin(), e->node_->kids.end());
    } else {
      kids.push_back(e->node_);
    }
  }
  return Expr(make(Expr::Node::Op::Product, std::move(kids)));
}

Expr operator*(cplx c, const Expr& a) {
  if (a.node_->op == Expr::Node::Op::Scale) {
    return Expr(make(Expr::Node::Op::Scale, {a.node_->kids[0]}, c * a.node_->value));
  }
  return Expr(make(Expr::Node::Op::Scale, {a.node_}, c));
}

cplx Expr::eval(const StateTensor& s, const NameResolver& resolve) const { return eval_node(*node_, s, resolve); }

std::pair<int, int> Expr::bidegree(const BidegreeResolver& resolve) const { return degree_node(*node_, resolve); }

void Expr::patterns(std::vector<const EvaluationPlan*>& out) const {
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if (n->op == Node::Op::Pattern) out.push_back(n->plan.get());
    for (const auto& k : n->kids) stack.push_back(k.get());
  }
}

std::string Expr::to_string() const { return string_node(*node_); }

const EvaluationPlan* Expr::single_pattern() const {
  const Node* n = node_.get();
  while (n->op == Node::Op::Scale) n = n->kids[0].get();
  return n->op == Node::Op::Pattern ? n->plan.get() : nullptr;
}

}  // namespace spinv
