#include "blw/syntax.hpp"

#include <stdexcept>
#include <utility>

namespace blw {

struct Formula::Node {
  Kind kind;
  std::string name;  // atoms only
  Formula left, right;
};

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace

Formula Formula::atom(std::string name) {
  if (!valid_atom_name(name))
    throw std::invalid_argument("Formula: invalid atom name \"" + name + "\"");
  if (name == "bot" || name == "top")
    throw std::invalid_argument("Formula: \"" + name + "\" is a reserved constant");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::bottom() {
  static const Formula f = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Bottom;
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::top() {
  static const Formula f = [] {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Top;
    return Formula(std::move(node));
  }();
  return f;
}

Formula Formula::binary(Kind kind, Formula l, Formula r) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->left = std::move(l);
  node->right = std::move(r);
  return Formula(std::move(node));
}

Formula Formula::conj(Formula l, Formula r) {
  return binary(Kind::And, std::move(l), std::move(r));
}
Formula Formula::disj(Formula l, Formula r) {
  return binary(Kind::Or, std::move(l), std::move(r));
}
Formula Formula::tensor(Formula l, Formula r) {
  return binary(Kind::Tensor, std::move(l), std::move(r));
}
Formula Formula::implies(Formula l, Formula r) {
  return binary(Kind::Implies, std::move(l), std::move(r));
}

Formula::Kind Formula::kind() const { return node_->kind; }

bool Formula::is_binary() const {
  const Kind k = kind();
  return k == Kind::And || k == Kind::Or || k == Kind::Tensor || k == Kind::Implies;
}

const std::string& Formula::atom_name() const {
  if (kind() != Kind::Atom) throw std::logic_error("Formula: not an atom");
  return node_->name;
}

const Formula& Formula::left() const {
  if (!is_binary()) throw std::logic_error("Formula: no subformulas");
  return node_->left;
}

const Formula& Formula::right() const {
  if (!is_binary()) throw std::logic_error("Formula: no subformulas");
  return node_->right;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->kind != b.node_->kind) return false;
  switch (a.node_->kind) {
    case Formula::Kind::Atom: return a.node_->name == b.node_->name;
    case Formula::Kind::Bottom:
    case Formula::Kind::Top: return true;
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: {
      const std::string& name = f.atom_name();
      for (const auto& seen : out)
        if (seen == name) return;
      out.push_back(name);
      return;
    }
    case Formula::Kind::Bottom:
    case Formula::Kind::Top: return;
    default:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
  }
}

// Precedence levels, loosest first; atoms/constants never need parens.
int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Tensor: return 4;
    default: return 5;
  }
}

const char* op_token(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Implies: return " -> ";
    case Formula::Kind::Or: return " | ";
    case Formula::Kind::And: return " & ";
    case Formula::Kind::Tensor: return " * ";
    default: return "";
  }
}

void render_into(const Formula& f, int min_prec, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::Atom: out += f.atom_name(); return;
    case Formula::Kind::Bottom: out += "bot"; return;
    case Formula::Kind::Top: out += "top"; return;
    default: break;
  }
  const int prec = precedence(f.kind());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  if (f.kind() == Formula::Kind::Implies) {
    // Right-associative.
    render_into(f.left(), prec + 1, out);
    out += op_token(f.kind());
    render_into(f.right(), prec, out);
  } else {
    // Left-associative.
    render_into(f.left(), prec, out);
    out += op_token(f.kind());
    render_into(f.right(), prec + 1, out);
  }
  if (parens) out += ')';
}

}  // namespace

std::vector<std::string> atoms_of(const Formula& f) {
  std::vector<std::string> out;
  collect_atoms(f, out);
  return out;
}

std::vector<std::string> atoms_of(const Sequent& s) {
  std::vector<std::string> out;
  for (const auto& f : s.context) collect_atoms(f, out);
  collect_atoms(s.conclusion, out);
  return out;
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, 0, out);
  return out;
}

std::string render(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.context.size(); ++i) {
    if (i) out += ", ";
    out += render(s.context[i]);
  }
  if (!s.context.empty()) out += ' ';
  out += "|- ";
  out += render(s.conclusion);
  return out;
}

std::string ast_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atom: return f.atom_name();
    case Formula::Kind::Bottom: return "Bottom";
    case Formula::Kind::Top: return "Top";
    case Formula::Kind::And: return "And(" + ast_string(f.left()) + "," + ast_string(f.right()) + ")";
    case Formula::Kind::Or: return "Or(" + ast_string(f.left()) + "," + ast_string(f.right()) + ")";
    case Formula::Kind::Tensor:
      return "Tensor(" + ast_string(f.left()) + "," + ast_string(f.right()) + ")";
    case Formula::Kind::Implies:
      return "Implies(" + ast_string(f.left()) + "," + ast_string(f.right()) + ")";
  }
  return {};
}

}  // namespace blw
