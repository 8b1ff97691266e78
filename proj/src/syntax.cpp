#include "provcalc/syntax.hpp"

#include <cctype>
#include <sstream>

namespace provcalc {

namespace {

std::string renderMessage(const SourceSpan& s,
                          const std::vector<std::string>& expected,
                          const std::string& found) {
  std::ostringstream os;
  os << "parse error at line " << s.line << ", column " << s.column
     << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) os << (i + 1 == expected.size() ? " or " : ", ");
    os << expected[i];
  }
  os << ", found " << (found.empty() ? "end of input" : "'" + found + "'");
  return os.str();
}

}  // namespace

ParseError::ParseError(SourceSpan s, std::vector<std::string> exp,
                       std::string fnd)
    : std::runtime_error(renderMessage(s, exp, fnd)),
      span(s),
      expected(std::move(exp)),
      found(std::move(fnd)) {}

namespace {

bool identChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == ':' || c == '/';
}

bool identSafe(const std::string& text) {
  if (text.empty()) return false;
  for (char c : text)
    if (!identChar(c)) return false;
  return true;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  void advance() {
    if (text[pos] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++pos;
  }

  void skipSpace() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  SourceSpan here(std::size_t len = 0) const {
    return SourceSpan{pos, pos + len, line, col};
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string found;
    if (!eof()) {
      std::size_t n = pos;
      if (identChar(text[n])) {
        while (n < text.size() && identChar(text[n])) ++n;
      } else {
        ++n;
      }
      found = std::string(text.substr(pos, n - pos));
    }
    throw ParseError(here(found.size()), std::move(expected), found);
  }

  bool tryConsume(char c) {
    skipSpace();
    if (eof() || peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c, const char* what) {
    skipSpace();
    if (eof() || peek() != c) fail({what});
    advance();
  }

  std::string ident() {
    std::size_t start = pos;
    while (!eof() && identChar(peek())) advance();
    return std::string(text.substr(start, pos - start));
  }
};

class Parser {
 public:
  explicit Parser(std::string_view text) : c_{text} {}

  Process parse() {
    Process p = process();
    c_.skipSpace();
    if (!c_.eof()) c_.fail({"end of input"});
    return p;
  }

 private:
  Cursor c_;

  bool atKeywordEx() {
    c_.skipSpace();
    if (c_.eof() || c_.peek() != 'e') return false;
    std::size_t p = c_.pos;
    if (p + 1 >= c_.text.size() || c_.text[p + 1] != 'x') return false;
    return p + 2 >= c_.text.size() || !identChar(c_.text[p + 2]);
  }

  Process process() {
    if (atKeywordEx()) return exProcess();
    return choiceLevel();
  }

  Process exProcess() {
    c_.advance();  // e
    c_.advance();  // x
    c_.skipSpace();
    if (c_.eof() || c_.peek() != '?') c_.fail({"variable (?name)"});
    c_.advance();
    std::string v = c_.ident();
    if (v.empty()) c_.fail({"variable name after '?'"});
    c_.expect('.', "'.' after quantified variable");
    return exists(Variable{v}, process());
  }

  Process choiceLevel() {
    Process p = parLevel();
    if (c_.tryConsume('+')) return choice(p, choiceLevel());
    return p;
  }

  Process parLevel() {
    Process p = seqLevel();
    if (c_.tryConsume('|')) return par(p, parLevel());
    return p;
  }

  Process seqLevel() {
    Process p = atom();
    if (c_.tryConsume(';')) return seq(p, seqLevel());
    return p;
  }

  Process atom() {
    if (atKeywordEx()) return exProcess();
    c_.skipSpace();
    if (c_.eof())
      c_.fail({"'1'", "tuple", "'*'", "'#'", "'('", "'ex'"});
    char ch = c_.peek();
    if (ch == '(') {
      c_.advance();
      Process p = process();
      c_.expect(')', "')'");
      return p;
    }
    if (ch == '[') return literal(Polarity::Consume, tuple());
    if (ch == '*') {
      c_.advance();
      return literal(Polarity::Stored, tuple());
    }
    if (ch == '#') {
      c_.advance();
      return literal(Polarity::Artefact, tuple());
    }
    if (ch == '1') {
      std::size_t p = c_.pos;
      if (p + 1 >= c_.text.size() || !identChar(c_.text[p + 1])) {
        c_.advance();
        return unit();
      }
    }
    c_.fail({"'1'", "tuple", "'*'", "'#'", "'('", "'ex'"});
  }

  TupleTerm tuple() {
    c_.skipSpace();
    if (c_.eof() || c_.peek() != '[') c_.fail({"'['"});
    SourceSpan open = c_.here(1);
    c_.advance();
    std::vector<Atom> atoms;
    for (;;) {
      c_.skipSpace();
      if (c_.eof()) c_.fail({"name, variable or ']'"});
      char ch = c_.peek();
      if (ch == ']') {
        c_.advance();
        break;
      }
      if (ch == '?') {
        c_.advance();
        std::string v = c_.ident();
        if (v.empty()) c_.fail({"variable name after '?'"});
        atoms.emplace_back(Variable{v});
      } else if (ch == '<') {
        c_.advance();
        std::size_t start = c_.pos;
        while (!c_.eof() && c_.peek() != '>' && c_.peek() != '\n') c_.advance();
        if (c_.eof() || c_.peek() != '>') c_.fail({"'>'"});
        std::string iri(c_.text.substr(start, c_.pos - start));
        c_.advance();
        if (iri.empty()) c_.fail({"nonempty IRI"});
        atoms.emplace_back(Name{iri});
      } else if (identChar(ch)) {
        atoms.emplace_back(Name{c_.ident()});
      } else {
        c_.fail({"name, variable or ']'"});
      }
    }
    if (atoms.empty())
      throw ParseError(open, {"at least one name or variable"}, "]");
    return TupleTerm{std::move(atoms)};
  }
};

std::string atomText(const Atom& a) {
  if (const auto* n = std::get_if<Name>(&a))
    return identSafe(n->text) ? n->text : "<" + n->text + ">";
  return "?" + std::get<Variable>(a).text;
}

// Precedence used for parenthesisation; higher binds tighter.
enum Prec { PrecChoice = 1, PrecPar = 2, PrecSeq = 3, PrecAtom = 4 };

void render(const Process& p, int context, bool rightmost, std::string& out) {
  if (as<UnitP>(p)) {
    out += '1';
    return;
  }
  if (const auto* l = as<LiteralP>(p)) {
    out += printLabel(l->label);
    return;
  }
  if (const auto* e = as<ExistsP>(p)) {
    // The body extends maximally right, so a quantifier needs parentheses
    // whenever anything follows it in the current group.
    bool parens = !rightmost;
    if (parens) out += '(';
    out += "ex ?" + e->var.text + ".";
    render(e->body, 0, true, out);
    if (parens) out += ')';
    return;
  }
  int prec;
  const Process *a, *b;
  const char* op;
  if (const auto* s = as<SeqP>(p)) {
    prec = PrecSeq;
    a = &s->first;
    b = &s->second;
    op = " ; ";
  } else if (const auto* q = as<ParP>(p)) {
    prec = PrecPar;
    a = &q->left;
    b = &q->right;
    op = " | ";
  } else {
    const auto* c = as<ChoiceP>(p);
    prec = PrecChoice;
    a = &c->left;
    b = &c->right;
    op = " + ";
  }
  bool parens = context > prec;
  if (parens) out += '(';
  // Right-nested chains of the same operator print flat; a left-nested
  // child of the same operator keeps its parentheses.
  render(*a, prec + 1, false, out);
  out += op;
  render(*b, prec, parens ? true : rightmost, out);
  if (parens) out += ')';
}

}  // namespace

Process parseProcess(std::string_view text) { return Parser(text).parse(); }

std::string printTuple(const TupleTerm& t) {
  std::string out = "[";
  for (std::size_t i = 0; i < t.atoms.size(); ++i) {
    if (i) out += ' ';
    out += atomText(t.atoms[i]);
  }
  out += ']';
  return out;
}

std::string printLabel(const Label& l) {
  switch (l.polarity) {
    case Polarity::Consume: return printTuple(l.tuple);
    case Polarity::Stored: return "*" + printTuple(l.tuple);
    case Polarity::Artefact: return "#" + printTuple(l.tuple);
  }
  return {};
}

std::string printProcess(const Process& p) {
  std::string out;
  render(p, 0, true, out);
  return out;
}

Process parseTriples(std::string_view text) {
  std::vector<Process> triples;
  std::size_t lineNo = 0;
  std::size_t offset = 0;
  while (offset < text.size()) {
    std::size_t end = text.find('\n', offset);
    std::string_view line = end == std::string_view::npos
                                ? text.substr(offset)
                                : text.substr(offset, end - offset);
    ++lineNo;
    std::size_t lineStart = offset;
    offset = end == std::string_view::npos ? text.size() : end + 1;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);

    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() &&
             std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      std::size_t start = i;
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])))
        ++i;
      if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    if (tokens.empty()) continue;

    SourceSpan span{lineStart, lineStart + line.size(), lineNo, 1};
    if (tokens.size() != 4 || tokens.back() != ".")
      throw ParseError(span, {"three tokens followed by '.'"},
                       std::string(line));
    std::vector<Atom> atoms;
    for (std::size_t k = 0; k < 3; ++k) {
      std::string tok = tokens[k];
      if (tok.size() >= 2 && tok.front() == '<' && tok.back() == '>')
        tok = tok.substr(1, tok.size() - 2);
      if (tok.empty())
        throw ParseError(span, {"nonempty token"}, tokens[k]);
      atoms.emplace_back(Name{tok});
    }
    triples.push_back(literal(Polarity::Stored, TupleTerm{std::move(atoms)}));
  }
  return parAll(triples);
}

}  // namespace provcalc
