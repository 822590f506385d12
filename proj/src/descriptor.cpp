#include "descriptor.hpp"

#include <cctype>

namespace deltader {

namespace {

enum class Tok { Ident, Number, LParen, RParen, Plus, Times, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto starts = [&](std::string_view lit) { return s.substr(i, lit.size()) == lit; };
  while (i < s.size()) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
    } else if (starts("o+")) {
      out.push_back({Tok::Plus, "o+", i});
      i += 2;
    } else if (starts("\xE2\x8A\x95")) {  // U+2295
      out.push_back({Tok::Plus, "o+", i});
      i += 3;
    } else if (starts("(x)")) {
      out.push_back({Tok::Times, "(x)", i});
      i += 3;
    } else if (starts("\xE2\x8A\x97")) {  // U+2297
      out.push_back({Tok::Times, "(x)", i});
      i += 3;
    } else if (c == '(') {
      out.push_back({Tok::LParen, "(", i++});
    } else if (c == ')') {
      out.push_back({Tok::RParen, ")", i++});
    } else if (std::isdigit(c)) {
      std::size_t b = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(b, i - b)), b});
    } else if (std::isalpha(c)) {
      std::size_t b = i;
      // "o+" inside an identifier run is an operator, so stop before it.
      while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i])) && !starts("o+")) ++i;
      std::string word(s.substr(b, i - b));
      if (word == "oplus")
        out.push_back({Tok::Plus, "o+", b});
      else if (word == "otimes")
        out.push_back({Tok::Times, "(x)", b});
      else
        out.push_back({Tok::Ident, std::move(word), b});
    } else {
      throw ParseError(std::string("unexpected character '") + s[i] + "'", i);
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) throw ParseError(std::string("expected ") + what, peek().pos);
    return take();
  }

  int number(const char* what) {
    Token t = expect(Tok::Number, what);
    if (t.text.size() > 6) throw ParseError("number too large", t.pos);
    return std::stoi(t.text);
  }

  int paren_number(const char* what) {
    expect(Tok::LParen, "'('");
    int n = number(what);
    expect(Tok::RParen, "')'");
    return n;
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string AlgebraDescriptor::canonical() const {
  std::string out;
  for (std::size_t k = 0; k < sl_ranks.size(); ++k) out += (k ? " o+ sl" : "sl") + std::to_string(sl_ranks[k]);
  return out;
}

AlgebraPtr AlgebraDescriptor::summand(std::size_t s) const {
  int n = sl_ranks.at(s);
  return n == 2 ? sl2() : sl_n(n).first;
}

AlgebraPtr AlgebraDescriptor::build() const {
  std::vector<AlgebraPtr> parts;
  for (std::size_t s = 0; s < sl_ranks.size(); ++s) parts.push_back(summand(s));
  return direct_sum_algebras(parts);
}

std::string ModuleAtom::canonical() const {
  switch (kind) {
    case Kind::Irreducible:
      return "V(" + std::to_string(param) + ")";
    case Kind::Natural:
      return "natural";
    case Kind::Adjoint:
      return "adjoint";
    case Kind::Trivial:
      return "trivial(" + std::to_string(param) + ")";
  }
  return {};
}

std::string ModuleDescriptor::canonical() const {
  std::string out;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    if (t) out += " o+ ";
    for (std::size_t f = 0; f < terms[t].size(); ++f) out += (f ? " (x) " : "") + terms[t][f].canonical();
  }
  return out;
}

AlgebraDescriptor parse_algebra_descriptor(std::string_view text) {
  Parser p(text);
  AlgebraDescriptor d;
  for (;;) {
    Token t = p.expect(Tok::Ident, "algebra name 'slN'");
    if (t.text != "sl") throw ParseError("unknown algebra '" + t.text + "'", t.pos);
    int n = p.number("rank after 'sl'");
    if (n < 2) throw SemanticError("sl" + std::to_string(n) + " is not defined; need N >= 2");
    d.sl_ranks.push_back(n);
    if (p.peek().kind == Tok::Plus) {
      p.take();
      continue;
    }
    if (p.peek().kind == Tok::Times) throw SemanticError("tensor product is defined for modules, not algebras");
    if (p.peek().kind != Tok::End) throw ParseError("expected 'o+' or end of input", p.peek().pos);
    return d;
  }
}

ModuleDescriptor parse_module_descriptor(std::string_view text) {
  Parser p(text);
  ModuleDescriptor d;
  std::vector<ModuleAtom> term;
  for (;;) {
    Token t = p.expect(Tok::Ident, "module atom");
    ModuleAtom atom;
    if (t.text == "V") {
      atom.kind = ModuleAtom::Kind::Irreducible;
      atom.param = p.paren_number("highest weight n");
    } else if (t.text == "adjoint") {
      atom.kind = ModuleAtom::Kind::Adjoint;
    } else if (t.text == "natural") {
      atom.kind = ModuleAtom::Kind::Natural;
    } else if (t.text == "trivial") {
      atom.kind = ModuleAtom::Kind::Trivial;
      atom.param = p.paren_number("dimension d");
    } else if (t.text == "sl") {
      throw SemanticError("'" + std::string(text) + "' names an algebra where a module was expected");
    } else {
      throw ParseError("unknown module '" + t.text + "'", t.pos);
    }
    term.push_back(atom);
    if (p.peek().kind == Tok::Times) {
      p.take();
      continue;
    }
    d.terms.push_back(std::move(term));
    term.clear();
    if (p.peek().kind == Tok::Plus) {
      p.take();
      continue;
    }
    if (p.peek().kind != Tok::End) throw ParseError("expected 'o+', '(x)' or end of input", p.peek().pos);
    return d;
  }
}

Representation rebase(const Representation& module, const AlgebraPtr& algebra) {
  if (module.algebra() == algebra) return module;
  if (!(*module.algebra() == *algebra)) throw AlgebraMismatch("module is defined over a different algebra");
  return Representation(algebra, module.dim_v(), module.action(), module.weight_labels(), Validation::Skip);
}

namespace {

Representation build_atom(const ModuleAtom& atom, const AlgebraPtr& algebra, int sl_rank) {
  switch (atom.kind) {
    case ModuleAtom::Kind::Irreducible:
      if (sl_rank != 2) throw SemanticError("V(n) is only available over sl2");
      return sl2_module(atom.param);
    case ModuleAtom::Kind::Natural:
      if (sl_rank == 2) return sl2_module(1);
      if (sl_rank < 2) throw SemanticError("natural module needs a single slN algebra");
      return sl_n(sl_rank).second;
    case ModuleAtom::Kind::Adjoint:
      return adjoint_module(algebra);
    case ModuleAtom::Kind::Trivial:
      return trivial_module(algebra, static_cast<std::size_t>(atom.param));
  }
  throw SemanticError("unknown module atom");
}

}  // namespace

Representation ModuleDescriptor::build(const AlgebraDescriptor& algebra) const {
  const AlgebraPtr full = algebra.build();
  const std::size_t summands = algebra.sl_ranks.size();
  std::vector<Representation> parts;
  for (const auto& term : terms) {
    if (term.size() == 1) {
      const int rank = summands == 1 ? algebra.sl_ranks[0] : 0;
      const auto kind = term[0].kind;
      if (summands > 1 && (kind == ModuleAtom::Kind::Irreducible || kind == ModuleAtom::Kind::Natural))
        throw SemanticError(term[0].canonical() + " over a direct sum needs one '(x)' factor per summand");
      parts.push_back(rebase(build_atom(term[0], full, rank), full));
      continue;
    }
    if (term.size() != summands)
      throw SemanticError("tensor term has " + std::to_string(term.size()) + " factors but the algebra has " +
                          std::to_string(summands) + " summands");
    Representation acc = build_atom(term[0], algebra.summand(0), algebra.sl_ranks[0]);
    for (std::size_t s = 1; s < term.size(); ++s)
      acc = tensor_module(acc, build_atom(term[s], algebra.summand(s), algebra.sl_ranks[s]));
    parts.push_back(rebase(acc, full));
  }
  return direct_sum_modules(parts);
}

}  // namespace deltader
