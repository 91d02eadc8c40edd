#include "horotoric/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace horotoric {

namespace {

std::shared_ptr<const TermOrder> order_for(const UniversePtr& u) {
  // One canonical order per (n, r); cheap to rebuild, shared within a value.
  return std::make_shared<const TermOrder>(TermOrder::standard(u));
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(UniversePtr u)
    : u_(std::move(u)),
      storage_order_(order_for(u_)),
      terms_(DescendingExponents{storage_order_}) {
  if (!u_) throw std::invalid_argument("null universe");
}

LaurentPolynomial LaurentPolynomial::monomial(UniversePtr u, const ExponentVector& e,
                                              const Rational& c) {
  LaurentPolynomial f(std::move(u));
  require_same_universe(*f.u_, *e.universe());
  if (c != 0) f.terms_.emplace(e, c);
  return f;
}

LaurentPolynomial LaurentPolynomial::constant(UniversePtr u, const Rational& c) {
  auto e = ExponentVector::zero(u);
  return monomial(std::move(u), e, c);
}

LaurentPolynomial LaurentPolynomial::variable(UniversePtr u, int var_index) {
  auto e = ExponentVector::unit(u, var_index);
  return monomial(std::move(u), e, 1);
}

Rational LaurentPolynomial::coefficient(const ExponentVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(const ExponentVector& e, const Rational& c) {
  require_same_universe(*u_, *e.universe());
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  require_same_universe(*u_, *o.u_);
  LaurentPolynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  require_same_universe(*u_, *o.u_);
  LaurentPolynomial out(*this);
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out(u_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  require_same_universe(*u_, *o.u_);
  LaurentPolynomial out(u_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const Rational& c) const {
  LaurentPolynomial out(u_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool LaurentPolynomial::operator==(const LaurentPolynomial& o) const {
  if (*u_ != *o.u_) return false;
  if (terms_.size() != o.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = o.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt)
    if (!(it->first == jt->first) || it->second != jt->second) return false;
  return true;
}

LaurentPolynomial LaurentPolynomial::extended_to(UniversePtr target) const {
  if (target->n() != u_->n())
    throw std::invalid_argument("cannot extend polynomial across different x-blocks");
  LaurentPolynomial out(target);
  const int xs = u_->x_count();
  for (const auto& [e, c] : terms_) {
    for (int k = 1; k <= u_->r(); ++k)
      if (k > target->r() && e[u_->y_index(k)] != 0)
        throw std::invalid_argument("polynomial uses a y-variable absent from the target universe");
    std::vector<std::int64_t> v(static_cast<size_t>(target->var_count()), 0);
    for (int i = 0; i < xs; ++i) v[static_cast<size_t>(i)] = e[i];
    for (int k = 1; k <= std::min(u_->r(), target->r()); ++k)
      v[static_cast<size_t>(target->y_index(k))] = e[u_->y_index(k)];
    v[static_cast<size_t>(target->t_index())] = e.t_exponent();
    out.add_term(ExponentVector(target, std::move(v)), c);
  }
  return out;
}

int compare(const ExponentVector& a, const ExponentVector& b, const TermOrder& o) {
  return o.compare(a, b);
}

std::pair<Rational, ExponentVector> initial_term(const LaurentPolynomial& f, const TermOrder& o) {
  require_same_universe(*f.universe(), *o.universe());
  if (f.is_zero()) throw std::invalid_argument("initial term of the zero polynomial");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (o.greater(it->first, best->first)) best = it;
  return {best->second, best->first};
}

namespace {

// Eliminates `pivot`'s leading exponent from f wherever it occurs.
void eliminate(LaurentPolynomial& f, const LaurentPolynomial& pivot, const ExponentVector& lead,
               const Rational& lead_coeff) {
  const Rational c = f.coefficient(lead);
  if (c != 0) f = f - pivot * (c / lead_coeff);
}

}  // namespace

std::vector<LaurentPolynomial> row_echelon(const std::vector<LaurentPolynomial>& fs,
                                           const TermOrder& o) {
  auto order_ptr = std::make_shared<const TermOrder>(o);
  // pivot leading exponent -> monic polynomial, kept descending
  std::map<ExponentVector, LaurentPolynomial, DescendingExponents> pivots{
      DescendingExponents{order_ptr}};
  for (const auto& input : fs) {
    require_same_universe(*o.universe(), *input.universe());
    LaurentPolynomial f = input;
    while (!f.is_zero()) {
      auto [c, e] = initial_term(f, o);
      auto it = pivots.find(e);
      if (it == pivots.end()) {
        pivots.emplace(e, f * (Rational(1) / c));
        break;
      }
      f = f - it->second * c;
    }
  }
  // Full reduction: ascending over pivots, each tail only involves smaller
  // leading exponents, which are already reduced.
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    for (auto jt = pivots.rbegin(); jt != it; ++jt)
      eliminate(it->second, jt->second, jt->first, Rational(1));
  }
  std::vector<LaurentPolynomial> out;
  out.reserve(pivots.size());
  for (auto& [e, p] : pivots) out.push_back(std::move(p));
  return out;
}

LaurentPolynomial reduce_against(const LaurentPolynomial& f,
                                 const std::vector<LaurentPolynomial>& echelon_basis,
                                 const TermOrder& o) {
  LaurentPolynomial rem = f;
  for (const auto& b : echelon_basis) {
    if (b.is_zero()) continue;
    auto [c, e] = initial_term(b, o);
    eliminate(rem, b, e, c);
  }
  return rem;
}

std::string to_string(const ExponentVector& e) {
  std::ostringstream os;
  bool any = false;
  for (int i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << " * ";
    os << e.universe()->var_name(i);
    if (e[i] != 1) os << "^" << e[i];
    any = true;
  }
  if (!any) return "1";
  return os.str();
}

std::string to_string(const LaurentPolynomial& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    if (!e.is_zero()) os << " * " << to_string(e);
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& str) : s(str) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << "parse error at offset " << pos << ": " << what;
    throw std::invalid_argument(os.str());
  }
  std::int64_t integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) fail("expected integer");
    return std::stoll(s.substr(start, pos - start));
  }
  Rational rational() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) fail("expected number");
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      size_t d1 = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == d1) fail("expected denominator");
    }
    return rational_from_string(s.substr(start, pos - start));
  }
  bool peek_digit_or_sign() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '+' || c == '-';
  }
};

}  // namespace

LaurentPolynomial parse_polynomial(UniversePtr u, const std::string& text) {
  Parser p(text);
  LaurentPolynomial out(u);
  p.skip_ws();
  if (p.pos == text.size()) throw std::invalid_argument("empty polynomial text");
  bool first = true;
  while (true) {
    Rational sign = 1;
    p.skip_ws();
    if (!first) {
      if (p.eat('+')) {
        // "+ -3" style also accepted below
      } else if (p.eat('-')) {
        sign = -1;
      } else {
        p.fail("expected '+' or '-' between terms");
      }
    }
    first = false;
    // term: [coef] factor ('*' factor)*
    Rational coeff = 1;
    bool saw_factor = false;
    if (p.peek_digit_or_sign()) {
      coeff = p.rational();
      saw_factor = true;
    }
    auto exps = std::vector<std::int64_t>(static_cast<size_t>(u->var_count()), 0);
    while (true) {
      size_t save = p.pos;
      bool star = p.eat('*');
      p.skip_ws();
      if (p.pos >= text.size()) {
        if (star) p.fail("dangling '*'");
        break;
      }
      char c = text[p.pos];
      int var = -1;
      if (c == 'x') {
        ++p.pos;
        if (!p.eat('[')) p.fail("expected '[' after x");
        std::int64_t i = p.integer();
        if (!p.eat(',')) p.fail("expected ',' in x[i,j]");
        std::int64_t j = p.integer();
        if (!p.eat(']')) p.fail("expected ']'");
        var = u->x_index(static_cast<int>(i), static_cast<int>(j));
      } else if (c == 'y') {
        ++p.pos;
        if (!p.eat('[')) p.fail("expected '[' after y");
        std::int64_t k = p.integer();
        if (!p.eat(']')) p.fail("expected ']'");
        var = u->y_index(static_cast<int>(k));
      } else if (c == 't') {
        ++p.pos;
        var = u->t_index();
      } else {
        if (star) p.fail("expected variable after '*'");
        p.pos = save;
        break;
      }
      std::int64_t e = 1;
      if (p.eat('^')) e = p.integer();
      exps[static_cast<size_t>(var)] += e;
      saw_factor = true;
    }
    if (!saw_factor) p.fail("empty term");
    out.add_term(ExponentVector(u, std::move(exps)), sign * coeff);
    p.skip_ws();
    if (p.pos >= text.size()) break;
  }
  return out;
}

}  // namespace horotoric
