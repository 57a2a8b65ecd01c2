#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "csg/braid.hpp"
#include "csg/perm.hpp"

namespace csg {

/// Result of an expression: a permutation or a braid word.
using Value = std::variant<Perm, BraidWord>;

/// Evaluates an expression.
///
///   expr    := literal | op '(' expr {',' expr | int} ')'
///   literal := '[' int {',' int} ']'             permutation, one-line
///            | word '@' int                       braid word at a level
///   word    := 'e' | letter {letter}, letter := 's' k ['^-1']
///   op      := mul | inv | d_i | s_i | sL | sR | boxplus | circ_i | pad
///
/// pad(x, l, r) adds l fixed points on the left and r on the right.
/// Errors are csg::Error with the byte offset of the offending token in the
/// message.
Value evaluate(std::string_view text);

/// Canonical text form. Braids print the word, the permutation, the Artin
/// digest and whether the braid is trivial.
std::string describe(const Value& v);
std::string describe_json(const Value& v);

}  // namespace csg
