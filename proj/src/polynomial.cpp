// Copyright 2026 The arithdyn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "arithdyn/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace arithdyn {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  std::uint64_t da = total_degree(a);
  std::uint64_t db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

std::uint64_t total_degree(const Exponents& e) {
  std::uint64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t arity, const BigRational& c) {
  Polynomial p(arity);
  p.add_term(Exponents(arity, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw Error(Errc::ArityMismatch, "variable index out of range");
  Polynomial p(arity);
  Exponents e(arity, 0);
  e[index] = 1;
  p.add_term(e, BigRational(1));
  return p;
}

std::uint64_t Polynomial::degree() const {
  // TermMap is ordered by total degree first.
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

void Polynomial::add_term(const Exponents& e, const BigRational& c) {
  if (e.size() != arity_) throw Error(Errc::ArityMismatch, "exponent vector length != arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigRational Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigRational(0) : it->second;
}

std::vector<BigRational> Polynomial::coefficients() const {
  std::vector<BigRational> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(c);
  return out;
}

bool Polynomial::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return is_integer(t.second); });
}

BigRational Polynomial::evaluate(std::span<const BigRational> point) const {
  if (point.size() != arity_) {
    throw Error(Errc::ArityMismatch, "point has " + std::to_string(point.size()) +
                                         " coordinates, polynomial expects " +
                                         std::to_string(arity_));
  }
  // powers[i][k] = point[i]^k, built lazily up to the largest exponent used.
  std::vector<std::vector<BigRational>> powers(arity_);
  for (std::size_t i = 0; i < arity_; ++i) powers[i].push_back(BigRational(1));
  auto power = [&](std::size_t i, std::uint32_t k) -> const BigRational& {
    auto& table = powers[i];
    if (k >= 64 && table.size() <= k) {
      // Sparse high powers: compute directly instead of filling the table.
      static thread_local BigRational scratch;
      mpz_pow_ui(scratch.get_num_mpz_t(), point[i].get_num_mpz_t(), k);
      mpz_pow_ui(scratch.get_den_mpz_t(), point[i].get_den_mpz_t(), k);
      return scratch;
    }
    while (table.size() <= k) table.push_back(table.back() * point[i]);
    return table[k];
  };
  BigRational sum(0);
  BigRational term;
  for (const auto& [e, c] : terms_) {
    term = c;
    for (std::size_t i = 0; i < arity_; ++i) {
      if (e[i] != 0) term *= power(i, e[i]);
    }
    sum += term;
  }
  return sum;
}

void Polynomial::check_arity(const Polynomial& other) const {
  if (other.arity_ != arity_) throw Error(Errc::ArityMismatch, "polynomial arities differ");
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_arity(other);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_arity(other);
  Polynomial out(arity_);
  Exponents e(arity_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : other.terms_) {
      for (std::size_t i = 0; i < arity_; ++i) {
        std::uint64_t s = std::uint64_t{ea[i]} + eb[i];
        if (s > std::numeric_limits<std::uint32_t>::max()) {
          throw Error(Errc::ExponentOverflow, "exponent exceeds 32 bits");
        }
        e[i] = static_cast<std::uint32_t>(s);
      }
      out.add_term(e, ca * cb);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Polynomial& Polynomial::operator*=(const BigRational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
  Polynomial result = constant(arity_, BigRational(1));
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::permute_variables(std::span<const std::size_t> perm) const {
  if (perm.size() != arity_) throw Error(Errc::ArityMismatch, "permutation length != arity");
  Polynomial out(arity_);
  for (const auto& [e, c] : terms_) {
    Exponents moved(arity_, 0);
    for (std::size_t i = 0; i < arity_; ++i) moved[perm[i]] = e[i];
    out.add_term(moved, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formatting

std::string format_polynomial(const Polynomial& p, std::span<const std::string> variables) {
  if (variables.size() != p.arity()) throw Error(Errc::ArityMismatch, "variable list length != arity");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    bool negative = c < 0;
    BigRational mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    bool constant = total_degree(e) == 0;
    bool need_star = false;
    if (constant || mag != 1) {
      out << to_display_string(mag);
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) out << "*";
      out << variables[i];
      if (e[i] > 1) out << "^" << e[i];
      need_star = true;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, "at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      if (peek() == '-') fail_code(Errc::NegativeExponent, "negative exponent");
      std::string d = digits();
      if (d.empty()) fail("expected exponent after '^'");
      BigInt e(d, 10);
      if (e > std::numeric_limits<std::uint32_t>::max()) {
        fail_code(Errc::ExponentOverflow, "exponent exceeds 32 bits");
      }
      b = b.pow(static_cast<std::uint32_t>(e.get_ui()));
    }
    return b;
  }

  [[noreturn]] void fail_code(Errc code, const std::string& msg) const {
    throw Error(code, "at offset " + std::to_string(pos_) + ": " + msg);
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits(), 10);
      BigInt den(1);
      std::size_t save = pos_;
      if (accept('/')) {
        std::string d = digits();
        if (d.empty()) {
          pos_ = save;
          fail("expected positive integer denominator after '/'");
        }
        den = BigInt(d, 10);
        if (den == 0) fail("zero denominator");
      }
      BigRational q(num, den);
      q.canonicalize();
      return Polynomial::constant(vars_.size(), q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) {
        pos_ = start;
        fail_code(Errc::UnknownVariable, "unknown variable '" + name + "'");
      }
      return Polynomial::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> variables) {
  if (variables.empty()) throw Error(Errc::ArityMismatch, "at least one variable required");
  return Parser(text, variables).parse();
}

// ---------------------------------------------------------------------------
// Maps

PolySelfMap::PolySelfMap(std::vector<Polynomial> coordinates) : coordinates_(std::move(coordinates)) {
  if (coordinates_.empty()) throw Error(Errc::ArityMismatch, "self-map needs at least one coordinate");
  for (const auto& c : coordinates_) {
    if (c.arity() != coordinates_.size()) {
      throw Error(Errc::ArityMismatch, "coordinate polynomial arity differs from map dimension");
    }
  }
}

std::vector<BigRational> PolySelfMap::apply(std::span<const BigRational> point) const {
  if (point.size() != arity()) throw Error(Errc::ArityMismatch, "point dimension != map dimension");
  std::vector<BigRational> out;
  out.reserve(arity());
  for (const auto& c : coordinates_) out.push_back(c.evaluate(point));
  return out;
}

PolySelfMap PolySelfMap::identity(std::size_t arity) {
  std::vector<Polynomial> coords;
  for (std::size_t i = 0; i < arity; ++i) coords.push_back(Polynomial::variable(arity, i));
  return PolySelfMap(std::move(coords));
}

// ---------------------------------------------------------------------------
// UPoly

UPoly::UPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

UPoly UPoly::monomial(std::size_t degree, const BigRational& c) {
  std::vector<BigRational> v(degree + 1, BigRational(0));
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational UPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

BigRational UPoly::evaluate(const BigRational& t) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

UPoly UPoly::truncated(std::size_t n) const {
  std::vector<BigRational> v(coeffs_.begin(), coeffs_.begin() + std::min(n, coeffs_.size()));
  return UPoly(std::move(v));
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), BigRational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const BigRational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UPoly(std::move(v));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(Errc::InvalidArgument, "polynomial division by zero");
  std::vector<BigRational> rem = a.coeffs_;
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::size_t db = b.coeffs_.size() - 1;
  std::vector<BigRational> quo(rem.size() - db, BigRational(0));
  const BigRational& lead = b.coeffs_.back();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    BigRational q = rem[k] / lead;
    quo[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs_[j];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly UPoly::gcd(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) a *= BigRational(1) / a.coeffs_.back();
  return a;
}

Polynomial UPoly::to_polynomial() const {
  Polynomial p(1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    p.add_term(Exponents{static_cast<std::uint32_t>(i)}, coeffs_[i]);
  }
  return p;
}

std::string format_upoly(const UPoly& p, std::string_view variable) {
  std::vector<std::string> vars{std::string(variable)};
  return format_polynomial(p.to_polynomial(), vars);
}

}  // namespace arithdyn
