#include "parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "error.hpp"

namespace qe {

namespace {

constexpr unsigned kMaxExponent = 4096;

class PolyParser {
 public:
  PolyParser(std::string_view src, RingPtr ring) : src_(src), ring_(std::move(ring)) {}

  Poly parse() {
    skip_ws();
    if (pos_ == src_.size()) throw SyntaxError(pos_, "empty expression");
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) throw SyntaxError(pos_, std::string("unexpected '") + src_[pos_] + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Poly acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (accept('*')) {
        acc = acc * factor();
      } else if (accept('/')) {
        skip_ws();
        const std::size_t at = pos_;
        const Poly d = factor();
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero at offset " + std::to_string(at));
        if (d.size() != 1 || !(d.terms().begin()->first == Monomial{})) {
          throw SyntaxError(at, "divisor must be a constant");
        }
        acc = acc.scaled(d.terms().begin()->second.inv());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    while (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) throw SyntaxError(start, "expected a natural number exponent");
      unsigned e = 0;
      const auto [ptr, ec] = std::from_chars(src_.data() + start, src_.data() + pos_, e);
      (void)ptr;
      if (ec != std::errc() || e > kMaxExponent) throw SyntaxError(start, "exponent too large");
      base = base.pow(e);
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= src_.size()) throw SyntaxError(pos_, "unexpected end of input");
    const char c = src_[pos_];
    const FieldId field = ring_->field();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      const Integer n(std::string(src_.substr(start, pos_ - start)));
      return Poly::constant(ring_, Scalar::from_integer(field, n));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
      const std::string name(src_.substr(start, pos_ - start));
      if (name == "t") {
        if (!field.is_function_field()) {
          throw Error(ErrorKind::UnknownVariable, "'t' is only available over Qt or Fpt:<p> (offset " + std::to_string(start) + ")");
        }
        return Poly::constant(ring_, Scalar::variable_t(field));
      }
      const auto idx = ring_->index_of(name);
      if (!idx) throw Error(ErrorKind::UnknownVariable, "unknown variable '" + name + "' at offset " + std::to_string(start));
      return Poly::variable(ring_, *idx);
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
      return inner;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view src_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Poly parse_poly(std::string_view src, const RingPtr& ring) { return PolyParser(src, ring).parse(); }

Scalar parse_scalar(std::string_view src, FieldId field) {
  // A one-variable ring whose variable name cannot be written in the grammar.
  static const std::vector<std::string> kNames{"#"};
  const Poly p = parse_poly(src, make_ring(field, kNames, {1}));
  if (p.is_zero()) return Scalar::zero(field);
  if (p.size() != 1 || !(p.terms().begin()->first == Monomial{})) {
    fail(ErrorKind::Internal, "scalar expression produced a polynomial");
  }
  return p.terms().begin()->second;
}

FieldId parse_field(std::string_view src) {
  src = trim(src);
  if (src == "Q") return FieldId::rationals();
  if (src == "Qt" || src == "Q(t)") return FieldId::rational_functions();
  const auto prime_after = [&](std::string_view prefix) {
    std::string_view digits = src.substr(prefix.size());
    std::uint32_t p = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      fail(ErrorKind::InvalidArgument, "bad characteristic in field tag '" + std::string(src) + "'");
    }
    return p;
  };
  if (src.starts_with("Fpt:")) return FieldId::rational_functions(FieldId::prime(prime_after("Fpt:")).p);
  if (src.starts_with("Fp:")) return FieldId::prime(prime_after("Fp:"));
  fail(ErrorKind::InvalidArgument, "unknown field '" + std::string(src) + "' (expected Q, Fp:<p>, Qt or Fpt:<p>)");
}

std::vector<std::string> split_list(std::string_view src, char sep) {
  std::vector<std::string> out;
  if (trim(src).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= src.size(); ++i) {
    if (i < src.size()) {
      if (src[i] == '(') ++depth;
      else if (src[i] == ')') --depth;
    }
    if (i == src.size() || (src[i] == sep && depth == 0)) {
      out.emplace_back(trim(src.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> parse_names(std::string_view src) {
  auto names = split_list(src);
  for (const auto& n : names) {
    const bool ok = !n.empty() && (std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_') &&
                    std::all_of(n.begin(), n.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    if (!ok) fail(ErrorKind::InvalidArgument, "bad variable name '" + n + "'");
  }
  return names;
}

std::vector<int> parse_ints(std::string_view src) {
  std::vector<int> out;
  for (const auto& item : split_list(src)) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc() || ptr != item.data() + item.size()) fail(ErrorKind::InvalidArgument, "expected an integer, got '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Scalar>> parse_matrix(std::string_view src, FieldId field) {
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : split_list(src, ';')) {
    std::vector<Scalar> r;
    for (const auto& entry : split_list(row)) r.push_back(parse_scalar(entry, field));
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.size()) fail(ErrorKind::InvalidArgument, "matrix must be square");
  }
  return rows;
}

}  // namespace qe
