#ifndef PROVCALC_SYNTAX_HPP
#define PROVCALC_SYNTAX_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "provcalc/terms.hpp"

namespace provcalc {

struct SourceSpan {
  std::size_t byteStart = 0;
  std::size_t byteEnd = 0;
  std::size_t line = 1;
  std::size_t column = 1;
};

struct ParseError : std::runtime_error {
  SourceSpan span;
  std::vector<std::string> expected;
  std::string found;

  ParseError(SourceSpan s, std::vector<std::string> exp, std::string fnd);
};

/// Parses the process grammar:
///
///   process := 'ex' VAR '.' process | choice
///   choice  := par ('+' par)*
///   par     := seq ('|' seq)*
///   seq     := atom (';' atom)*
///   atom    := '1' | literal | '(' process ')' | 'ex' VAR '.' process
///   literal := tuple | '*' tuple | '#' tuple
///   tuple   := '[' nameOrVar+ ']'
///
/// `;` binds tighter than `|`, which binds tighter than `+`; `ex ?x.` scopes
/// maximally to the right; parentheses override. Names are IDENT or <IRI>,
/// variables are ?IDENT.
Process parseProcess(std::string_view text);

/// Minimal-parentheses rendering; parseProcess(printProcess(p)) is
/// structurally identical to p (bound-variable names preserved verbatim).
std::string printProcess(const Process& p);

std::string printLabel(const Label& l);
std::string printTuple(const TupleTerm& t);

/// N-Triples-like subset: each noncomment line is `token token token .`
/// with whitespace-separated opaque tokens; `#` starts a comment. Yields the
/// right-nested parallel composition of stored triples in line order; an
/// empty file yields unit.
Process parseTriples(std::string_view text);

}  // namespace provcalc

#endif
