#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "towerdecomp/tower.hpp"

namespace towerdecomp {

/// Integers, names, + - * / ^ (integer exponents) and parentheses. `^`
/// binds tighter than unary minus, which binds tighter than * and /.
/// Throws SyntaxError (index = offset) or UnknownName.
RationalFunction parse_expression(std::string_view src, const std::vector<std::string>& names);
RationalFunction parse_expression(std::string_view src, const Tower& scope);

/// Line-oriented tower file:
///   var x
///   gen t1 : log(x)
///   gen t2 : prim 1/t1
///   gen t3 : log(x+1) - 2*log(t1)
/// `#` starts a comment. Errors carry the line number in the message.
Tower parse_tower_file(std::string_view text);

}  // namespace towerdecomp
