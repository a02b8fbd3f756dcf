#include "minilog/term.hpp"

#include <sstream>

namespace minilog {

TermPtr mk_var(int id) { return std::make_shared<Term>(Term{Var{id}}); }

TermPtr mk_atom(std::string name) {
  return std::make_shared<Term>(Term{Atom{std::move(name)}});
}

TermPtr mk_int(long long value) {
  return std::make_shared<Term>(Term{IntLit{value}});
}

TermPtr mk_compound(std::string functor, std::vector<TermPtr> args) {
  return std::make_shared<Term>(Term{Compound{std::move(functor), std::move(args)}});
}

Substitution Substitution::extend(int var_id, TermPtr term) const {
  Substitution out;
  out.head_ = std::make_shared<Node>(Node{var_id, std::move(term), head_});
  return out;
}

const TermPtr* Substitution::lookup(int var_id) const {
  for (const Node* n = head_.get(); n != nullptr; n = n->next.get()) {
    if (n->var_id == var_id) return &n->term;
  }
  return nullptr;
}

TermPtr walk(TermPtr t, const Substitution& s) {
  while (t->is_var()) {
    const TermPtr* bound = s.lookup(t->as_var().id);
    if (!bound) return t;
    t = *bound;
  }
  return t;
}

TermPtr resolve(TermPtr t, const Substitution& s) {
  t = walk(std::move(t), s);
  if (!t->is_compound()) return t;
  const Compound& c = t->as_compound();
  bool changed = false;
  std::vector<TermPtr> args;
  args.reserve(c.args.size());
  for (const TermPtr& a : c.args) {
    TermPtr r = resolve(a, s);
    changed = changed || r.get() != a.get();
    args.push_back(std::move(r));
  }
  if (!changed) return t;
  return mk_compound(c.functor, std::move(args));
}

bool is_ground(TermPtr t, const Substitution& s) {
  t = walk(std::move(t), s);
  if (t->is_var()) return false;
  if (t->is_compound()) {
    for (const TermPtr& a : t->as_compound().args) {
      if (!is_ground(a, s)) return false;
    }
  }
  return true;
}

bool occurs(int var_id, TermPtr t, const Substitution& s) {
  t = walk(std::move(t), s);
  if (t->is_var()) return t->as_var().id == var_id;
  if (t->is_compound()) {
    for (const TermPtr& a : t->as_compound().args) {
      if (occurs(var_id, a, s)) return true;
    }
  }
  return false;
}

std::optional<Substitution> unify(TermPtr a, TermPtr b, const Substitution& s) {
  a = walk(std::move(a), s);
  b = walk(std::move(b), s);
  if (a->is_var() && b->is_var() && a->as_var().id == b->as_var().id) return s;
  if (a->is_var()) {
    if (occurs(a->as_var().id, b, s)) return std::nullopt;
    return s.extend(a->as_var().id, b);
  }
  if (b->is_var()) {
    if (occurs(b->as_var().id, a, s)) return std::nullopt;
    return s.extend(b->as_var().id, a);
  }
  if (a->is_atom() && b->is_atom()) {
    if (a->as_atom().name == b->as_atom().name) return s;
    return std::nullopt;
  }
  if (a->is_int() && b->is_int()) {
    if (a->as_int().value == b->as_int().value) return s;
    return std::nullopt;
  }
  if (a->is_compound() && b->is_compound()) {
    const Compound& ca = a->as_compound();
    const Compound& cb = b->as_compound();
    if (ca.functor != cb.functor || ca.args.size() != cb.args.size()) {
      return std::nullopt;
    }
    Substitution cur = s;
    for (std::size_t i = 0; i < ca.args.size(); ++i) {
      auto next = unify(ca.args[i], cb.args[i], cur);
      if (!next) return std::nullopt;
      cur = *next;
    }
    return cur;
  }
  return std::nullopt;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  if (a->is_var()) return a->as_var().id == b->as_var().id;
  if (a->is_atom()) return a->as_atom().name == b->as_atom().name;
  if (a->is_int()) return a->as_int().value == b->as_int().value;
  const Compound& ca = a->as_compound();
  const Compound& cb = b->as_compound();
  if (ca.functor != cb.functor || ca.args.size() != cb.args.size()) return false;
  for (std::size_t i = 0; i < ca.args.size(); ++i) {
    if (!term_equal(ca.args[i], cb.args[i])) return false;
  }
  return true;
}

std::string VarNamer::name(int var_id) {
  if (given_) {
    auto it = given_->find(var_id);
    if (it != given_->end()) return it->second;
  }
  auto it = assigned_.find(var_id);
  if (it != assigned_.end()) return it->second;
  std::string n = "_" + std::to_string(counter_++);
  assigned_.emplace(var_id, n);
  return n;
}

namespace {

bool plain_atom_name(const std::string& n) {
  if (n.empty()) return false;
  if (n == "[]") return true;
  if (!(n[0] >= 'a' && n[0] <= 'z')) return false;
  for (char c : n) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

void render_rec(const TermPtr& t, const Substitution& s, VarNamer& namer,
                std::ostringstream& out) {
  TermPtr w = walk(t, s);
  if (w->is_var()) {
    out << namer.name(w->as_var().id);
    return;
  }
  if (w->is_atom()) {
    const std::string& n = w->as_atom().name;
    if (plain_atom_name(n)) {
      out << n;
    } else {
      out << '\'' << n << '\'';
    }
    return;
  }
  if (w->is_int()) {
    out << w->as_int().value;
    return;
  }
  const Compound& c = w->as_compound();
  if (plain_atom_name(c.functor)) {
    out << c.functor;
  } else {
    out << '\'' << c.functor << '\'';
  }
  out << '(';
  for (std::size_t i = 0; i < c.args.size(); ++i) {
    if (i) out << ',';
    render_rec(c.args[i], s, namer, out);
  }
  out << ')';
}

}  // namespace

std::string render_term(const TermPtr& t, const Substitution& s, VarNamer& namer) {
  std::ostringstream out;
  render_rec(t, s, namer, out);
  return out.str();
}

std::string render_term(const TermPtr& t, const Substitution& s) {
  VarNamer namer;
  return render_term(t, s, namer);
}

std::string render_term(const TermPtr& t) {
  Substitution empty;
  return render_term(t, empty);
}

}  // namespace minilog
