#include "towerdecomp/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

#include "towerdecomp/error.hpp"

namespace towerdecomp {

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class ExpressionParser {
 public:
  ExpressionParser(std::string_view src, const std::vector<std::string>& names, std::size_t base = 0)
      : src_(src), names_(names), base_(base) {}

  RationalFunction parse_all() {
    RationalFunction v = expr();
    skip();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return v;
  }

  RationalFunction expr() {
    RationalFunction v = term();
    while (true) {
      skip();
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

  void skip() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, msg + " at offset " + std::to_string(base_ + pos_), base_ + pos_);
  }

  std::optional<std::string> peek_name() {
    skip();
    if (pos_ >= src_.size() || !is_name_start(src_[pos_])) return std::nullopt;
    std::size_t end = pos_;
    while (end < src_.size() && is_name_char(src_[end])) ++end;
    return std::string(src_.substr(pos_, end - pos_));
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
    if (start == pos_) fail("expected integer");
    return Integer(std::string(src_.substr(start, pos_ - start)));
  }

 private:
  RationalFunction term() {
    RationalFunction v = unary();
    while (true) {
      skip();
      if (accept('*')) {
        v *= unary();
      } else if (pos_ < src_.size() && src_[pos_] == '/') {
        const std::size_t at = pos_;
        ++pos_;
        RationalFunction d = unary();
        if (d.is_zero()) {
          pos_ = at;
          throw Error(ErrorCode::DivisionByZero, "division by zero at offset " + std::to_string(base_ + at),
                      base_ + at);
        }
        v /= d;
      } else {
        return v;
      }
    }
  }

  RationalFunction unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction v = primary();
    if (!accept('^')) return v;
    const bool paren = accept('(');
    const bool neg = accept('-');
    const Integer e = integer();
    if (paren) expect(')');
    if (!e.fits_slong_p() || e > 100000) fail("exponent too large");
    const long k = e.get_si();
    if (neg && v.is_zero()) fail("negative power of zero");
    return v.pow(static_cast<int>(neg ? -k : k));
  }

  RationalFunction primary() {
    skip();
    const std::size_t nv = names_.size();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      expect(')');
      return v;
    }
    if (is_digit(c)) return RationalFunction::constant(nv, Rational(integer()));
    if (is_name_start(c)) {
      const std::size_t at = pos_;
      std::string name = *peek_name();
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end())
        throw Error(ErrorCode::UnknownName, "unknown name '" + name + "' at offset " + std::to_string(base_ + at),
                    base_ + at);
      pos_ += name.size();
      return RationalFunction::variable(nv, static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view src_;
  const std::vector<std::string>& names_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

std::string strip_comment(std::string line) {
  const auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.pop_back();
  return line;
}

bool valid_name(const std::string& s) {
  return !s.empty() && is_name_start(s[0]) && std::all_of(s.begin(), s.end(), is_name_char);
}

[[noreturn]] void line_error(ErrorCode code, std::size_t line, const std::string& msg) {
  throw Error(code, "line " + std::to_string(line) + ": " + msg, line);
}

// [sign] [c *] log(expr) { (+|-) [c *] log(expr) }
std::vector<LogTerm> parse_log_sum(std::string_view src, const std::vector<std::string>& names) {
  ExpressionParser p(src, names);
  std::vector<LogTerm> terms;
  bool first = true;
  while (true) {
    Rational sign = 1;
    if (p.accept('-')) {
      sign = -1;
    } else if (!p.accept('+') && !first) {
      break;
    }
    first = false;
    Rational coeff = 1;
    p.skip();
    if (auto nm = p.peek_name(); !nm || *nm != "log") {
      coeff = Rational(p.integer());
      if (p.accept('/')) coeff /= Rational(p.integer());
      coeff.canonicalize();
      p.expect('*');
    }
    auto nm = p.peek_name();
    if (!nm || *nm != "log") p.fail("expected log(...)");
    p.set_pos(p.pos() + 3);
    p.expect('(');
    RationalFunction arg = p.expr();
    p.expect(')');
    if (arg.is_zero()) throw Error(ErrorCode::ZeroArgument, "logarithm of zero");
    terms.push_back(LogTerm{sign * coeff, std::move(arg)});
  }
  p.skip();
  if (p.pos() != src.size()) p.fail("unexpected trailing input");
  return terms;
}

}  // namespace

RationalFunction parse_expression(std::string_view src, const std::vector<std::string>& names) {
  return ExpressionParser(src, names).parse_all();
}

RationalFunction parse_expression(std::string_view src, const Tower& scope) {
  return parse_expression(src, scope.names());
}

Tower parse_tower_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineno = 0;
  std::optional<Tower> tower;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (keyword == "var") {
      std::string name, extra;
      if (tower) line_error(ErrorCode::InvalidTower, lineno, "duplicate var declaration");
      if (!(words >> name) || (words >> extra) || !valid_name(name))
        line_error(ErrorCode::SyntaxError, lineno, "expected 'var <name>'");
      tower.emplace(name);
      continue;
    }
    if (keyword != "gen") line_error(ErrorCode::SyntaxError, lineno, "unknown keyword '" + keyword + "'");
    if (!tower) tower.emplace("x");
    const auto colon = line.find(':');
    if (colon == std::string::npos) line_error(ErrorCode::SyntaxError, lineno, "expected ':'");
    std::istringstream head(line.substr(0, colon));
    std::string kw, name, extra;
    head >> kw >> name;
    if (!valid_name(name) || (head >> extra)) line_error(ErrorCode::SyntaxError, lineno, "bad generator name");
    if (name == "log" || name == "prim") line_error(ErrorCode::SyntaxError, lineno, "reserved name " + name);
    std::string body = line.substr(colon + 1);
    const auto first = body.find_first_not_of(" \t");
    if (first == std::string::npos) line_error(ErrorCode::SyntaxError, lineno, "missing generator body");
    body = body.substr(first);
    try {
      if (body.rfind("prim", 0) == 0 && (body.size() == 4 || !is_name_char(body[4]))) {
        tower->add_primitive(name, parse_expression(std::string_view(body).substr(4), tower->names()));
      } else {
        tower->add_logarithmic(name, parse_log_sum(body, tower->names()));
      }
    } catch (const Error& e) {
      line_error(e.code(), lineno, e.what());
    }
  }
  if (!tower) tower.emplace("x");
  return std::move(*tower);
}

}  // namespace towerdecomp
