#include "csg/expr.hpp"

#include <cctype>
#include <cstdio>
#include <vector>

#include <json.hpp>

#include "csg/error.hpp"
#include "csg/instance.hpp"
#include "csg/operad.hpp"
#include "csg/symmetric.hpp"

namespace csg {

namespace {

struct Arg {
  std::size_t pos = 0;
  bool is_int = false;
  long long integer = 0;
  Value value;
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Value parse_all() {
    Value v = expr();
    skip();
    if (pos_ != text_.size()) fail(pos_, "unexpected trailing input");
    return v;
  }

private:
  [[noreturn]] void fail(std::size_t at, const std::string& why, ErrorKind kind = ErrorKind::Parse) const {
    throw Error(kind, "at offset " + std::to_string(at) + ": " + why);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  long long integer() {
    skip();
    const std::size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    long long v = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_++] - '0');
      if (++digits > 9) fail(start, "number too large");
    }
    if (digits == 0) fail(start, "expected a number");
    return neg ? -v : v;
  }

  std::string identifier() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Value perm_literal() {
    const std::size_t start = pos_;
    expect('[');
    std::vector<int> images;
    if (!peek(']')) {
      images.push_back(static_cast<int>(integer()));
      while (peek(',')) {
        ++pos_;
        images.push_back(static_cast<int>(integer()));
      }
    }
    expect(']');
    try {
      return Perm(std::move(images));
    } catch (const Error& e) {
      fail(start, e.what(), e.kind());
    }
  }

  Value braid_literal() {
    const std::size_t start = pos_;
    const auto at = text_.find('@', pos_);
    if (at == std::string_view::npos) fail(start, "braid literal needs '@level'");
    const std::string_view word = text_.substr(pos_, at - pos_);
    pos_ = at + 1;
    const long long level = integer();
    if (level < 0) fail(at + 1, "negative level");
    try {
      return BraidWord::parse(word, static_cast<std::size_t>(level));
    } catch (const Error& e) {
      fail(start, e.what(), e.kind());
    }
  }

  // A braid literal starts with 'e' or 's<digit>'; everything else that
  // starts with a letter is an operator call.
  bool at_braid_literal() const {
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    const char next = pos_ + 1 < text_.size() ? text_[pos_ + 1] : '\0';
    if (c == 'e') return next == '@' || std::isspace(static_cast<unsigned char>(next));
    return c == 's' && std::isdigit(static_cast<unsigned char>(next));
  }

  Value expr() {
    skip();
    if (pos_ >= text_.size()) fail(pos_, "unexpected end of input");
    if (text_[pos_] == '[') return perm_literal();
    if (at_braid_literal()) return braid_literal();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name.empty()) fail(start, "expected an expression");
    expect('(');
    std::vector<Arg> args;
    if (!peek(')')) {
      args.push_back(argument());
      while (peek(',')) {
        ++pos_;
        args.push_back(argument());
      }
    }
    expect(')');
    try {
      return apply(name, start, args);
    } catch (const Error& e) {
      const std::string what = e.what();
      if (what.rfind("at offset ", 0) == 0) throw;
      fail(start, what.rfind(name + ":", 0) == 0 ? what : name + ": " + what, e.kind());
    }
  }

  Arg argument() {
    skip();
    Arg a;
    a.pos = pos_;
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      a.is_int = true;
      a.integer = integer();
    } else {
      a.value = expr();
    }
    return a;
  }

  static std::size_t index_suffix(const std::string& name, std::size_t prefix, std::size_t at, const Parser& p) {
    const std::string digits = name.substr(prefix);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      p.fail(at, "bad index in '" + name + "'");
    }
    return static_cast<std::size_t>(std::stoul(digits));
  }

  void arity(const std::string& name, std::size_t at, const std::vector<Arg>& args, std::size_t n) const {
    if (args.size() != n) fail(at, name + " takes " + std::to_string(n) + " argument(s)");
  }

  const Value& value(const Arg& a) const {
    if (a.is_int) fail(a.pos, "expected an element, got a number");
    return a.value;
  }

  std::size_t count(const Arg& a) const {
    if (!a.is_int || a.integer < 0) fail(a.pos, "expected a non-negative number");
    return static_cast<std::size_t>(a.integer);
  }

  template <class F>
  Value unary(const Arg& a, F f) const {
    return std::visit([&](const auto& x) -> Value { return f(x); }, value(a));
  }

  template <class F>
  Value binary(const Arg& a, const Arg& b, F f) const {
    const Value& x = value(a);
    const Value& y = value(b);
    if (x.index() != y.index()) fail(b.pos, "cannot combine a permutation with a braid");
    if (std::holds_alternative<Perm>(x)) return f(std::get<Perm>(x), std::get<Perm>(y));
    return f(std::get<BraidWord>(x), std::get<BraidWord>(y));
  }

  template <class X>
  using Inst = std::conditional_t<std::is_same_v<X, Perm>, Symmetric, Braid>;

  Value apply(const std::string& name, std::size_t at, const std::vector<Arg>& args) const {
    if (name == "mul") {
      arity(name, at, args, 2);
      return binary(args[0], args[1], [](const auto& g, const auto& h) -> Value {
        using I = Inst<std::decay_t<decltype(g)>>;
        if (I::level(g) != I::level(h)) throw_level_mismatch("mul", I::level(g), I::level(h));
        return I::mul(g, h);
      });
    }
    if (name == "inv") {
      arity(name, at, args, 1);
      return unary(args[0], [](const auto& g) -> Value { return Inst<std::decay_t<decltype(g)>>::inv(g); });
    }
    if (name == "sL" || name == "sR") {
      arity(name, at, args, 1);
      const bool left = name == "sL";
      return unary(args[0], [left](const auto& g) -> Value {
        using I = Inst<std::decay_t<decltype(g)>>;
        return left ? I::s_left(g) : I::s_right(g);
      });
    }
    if (name == "boxplus") {
      arity(name, at, args, 2);
      return binary(args[0], args[1], [](const auto& g, const auto& h) -> Value {
        return boxplus<Inst<std::decay_t<decltype(g)>>>(g, h);
      });
    }
    if (name == "pad") {
      arity(name, at, args, 3);
      const std::size_t l = count(args[1]);
      const std::size_t r = count(args[2]);
      return unary(args[0], [l, r](const auto& g) -> Value { return pad<Inst<std::decay_t<decltype(g)>>>(g, l, r); });
    }
    if (name.rfind("d_", 0) == 0 || name.rfind("s_", 0) == 0) {
      arity(name, at, args, 1);
      const std::size_t i = index_suffix(name, 2, at, *this);
      const bool face = name[0] == 'd';
      return unary(args[0], [i, face](const auto& g) -> Value {
        using I = Inst<std::decay_t<decltype(g)>>;
        if (i > I::level(g)) throw_index_out_of_range(face ? "face" : "degeneracy", i, I::level(g));
        if (face && I::level(g) == 0) throw Error(ErrorKind::IndexOutOfRange, "level 0 has no faces");
        return face ? I::face(i, g) : I::degeneracy(i, g);
      });
    }
    if (name.rfind("circ_", 0) == 0) {
      arity(name, at, args, 2);
      const std::size_t i = index_suffix(name, 5, at, *this);
      return binary(args[0], args[1], [i](const auto& g, const auto& h) -> Value {
        return circ_set<Inst<std::decay_t<decltype(g)>>>(g, i, h);
      });
    }
    fail(at, "unknown operator '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string hex(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

Value evaluate(std::string_view text) { return Parser(text).parse_all(); }

std::string describe(const Value& v) {
  if (const auto* p = std::get_if<Perm>(&v)) return p->to_string() + "\n";
  const auto& g = std::get<BraidWord>(v);
  std::string out = Braid::to_string(g) + "\n";
  out += "perm: " + braid_perm(g).to_string() + "\n";
  out += "artin: " + hex(artin_digest(g)) + "\n";
  out += std::string("identity: ") + (braids_equal(g, braid_one(g.level())) ? "yes" : "no") + "\n";
  return out;
}

std::string describe_json(const Value& v) {
  nlohmann::ordered_json j;
  if (const auto* p = std::get_if<Perm>(&v)) {
    j["type"] = "perm";
    j["level"] = p->level();
    j["value"] = p->to_string();
    j["identity"] = p->is_identity();
  } else {
    const auto& g = std::get<BraidWord>(v);
    j["type"] = "braid";
    j["level"] = g.level();
    j["word"] = g.to_string();
    j["perm"] = braid_perm(g).to_string();
    j["artin"] = hex(artin_digest(g));
    j["identity"] = braids_equal(g, braid_one(g.level()));
  }
  return j.dump(2) + "\n";
}

}  // namespace csg
