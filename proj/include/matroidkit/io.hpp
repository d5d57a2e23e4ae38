#pragma once

#include <string>
#include <string_view>

#include "matroidkit/matroid.hpp"

namespace matroidkit {

class ParseError : public MatroidError {
 public:
  ParseError(int line, const std::string& reason)
      : MatroidError(ErrorKind::kParseError, "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  int line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  int line_;
  std::string reason_;
};

struct MatroidFile {
  std::string name;
  Matroid matroid;
};

// One directive per line:
//   name <token>
//   elements <label>+
//   rank <int>                     (required with nonspanning_circuits)
//   bases {a,b} ... | circuits {...} ... | nonspanning_circuits {...} ...
// '#' starts a comment. Set literals may contain spaces; a body directive may
// be repeated to continue its list.
MatroidFile parse(std::string_view text);

// Canonical form: name, elements in id order, bases sorted lexicographically.
std::string serialize(const Matroid& m, std::string_view name);

// Construction recipes: a builder name and its integer arguments, optionally
// preceded by "dual". Builders: uniform r n, wheel r, whirl r, spike r, mk4,
// fano, non-fano, u8, u8-plus, fano-prime, fano-double-prime,
// spike-construction r, spike-construction-free-tip r, twisted-construction,
// elongated-quad-example, skew-whiff-example, twisted-cube-example, and
// catalog <id>. Throws BadInput on an unknown recipe.
Matroid build_recipe(std::string_view recipe);

// The recipe's words joined by '-', e.g. "whirl-3".
std::string recipe_name(std::string_view recipe);

}  // namespace matroidkit
