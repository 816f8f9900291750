#include "colrec/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace colrec {

RationalPoly::RationalPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

RationalPoly::RationalPoly(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) { trim(); }

RationalPoly::RationalPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

RationalPoly RationalPoly::monomial(const Rational& coefficient, int degree) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
  c.back() = coefficient;
  return RationalPoly(std::move(c));
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational RationalPoly::evaluate(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

RationalPoly RationalPoly::compose_affine(const Rational& a, const Rational& b) const {
  RationalPoly inner(std::vector<Rational>{a, b});
  RationalPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += RationalPoly(*it);
  }
  return acc;
}

RationalPoly RationalPoly::pow(unsigned k) const {
  RationalPoly result(1L);
  RationalPoly base(*this);
  while (k != 0) {
    if (k & 1U) result *= base;
    k >>= 1;
    if (k != 0) base *= base;
  }
  return result;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RationalPoly(std::move(out));
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& rhs) { return *this = *this * rhs; }

RationalPoly RationalPoly::operator-() const {
  RationalPoly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string RationalPoly::to_string(std::string_view var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += colrec::to_string(mag);
      continue;
    }
    if (mag != 1) {
      if (is_integer(mag)) {
        out += colrec::to_string(mag);
      } else {
        out += "(" + colrec::to_string(mag) + ")";
      }
    }
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  RationalPoly run() {
    RationalPoly acc;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      RationalPoly term = parse_term();
      acc += negative ? -term : term;
      skip_ws();
    }
    return acc;
  }

 private:
  RationalPoly parse_term() {
    Rational coeff(1);
    bool have_coeff = false;
    if (peek() == '(') {
      ++pos_;
      auto close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced '('");
      coeff = parse_rational(trim(text_.substr(pos_, close - pos_)));
      pos_ = close + 1;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
      coeff = parse_rational(text_.substr(start, pos_ - start));
      have_coeff = true;
    }
    skip_ws();
    if (!at_end() && peek() == '*') {
      ++pos_;
      skip_ws();
    }
    int degree = 0;
    if (text_.substr(pos_, var_.size()) == var_) {
      pos_ += var_.size();
      degree = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("missing exponent");
        degree = std::stoi(std::string(text_.substr(start, pos_ - start)));
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    return RationalPoly::monomial(coeff, degree);
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial '" + std::string(text_) + "': " + why + " at offset " +
                                std::to_string(pos_));
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPoly RationalPoly::parse(std::string_view text, std::string_view var) { return PolyParser(text, var).run(); }

}  // namespace colrec
