#include "horotoric/universe.hpp"

#include <sstream>

namespace horotoric {

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  size_t pos = 0;
  auto digits = [&](bool sign_ok) {
    size_t start = pos;
    if (sign_ok && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t d0 = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == d0) throw std::invalid_argument("bad rational literal: " + s);
    return s.substr(start, pos - start);
  };
  std::string num = digits(true);
  std::string den = "1";
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    den = digits(false);
  }
  if (pos != s.size()) throw std::invalid_argument("bad rational literal: " + s);
  const Int num_i{num};
  const Int den_i{den};
  if (den_i == 0) throw std::invalid_argument("zero denominator: " + s);
  return Rational{num_i} / Rational{den_i};
}

VariableUniverse::VariableUniverse(int n, int r) : n_(n), r_(r) {
  if (n < 1) throw std::invalid_argument("universe rank n must be >= 1");
  if (r < 0) throw std::invalid_argument("universe torus rank r must be >= 0");
  x_index_by_pair_.assign(2 * n + 1, std::vector<int>(2 * n + 2, -1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; i + j <= 2 * n + 1; ++j) {
      x_index_by_pair_[i][j] = static_cast<int>(x_pairs_.size());
      x_pairs_.emplace_back(i, j);
    }
  if (static_cast<int>(x_pairs_.size()) != n * n)
    throw std::logic_error("x-coordinate count is not n^2");
}

std::shared_ptr<const VariableUniverse> VariableUniverse::make(int n, int r) {
  return std::shared_ptr<const VariableUniverse>(new VariableUniverse(n, r));
}

int VariableUniverse::y_index(int k) const {
  if (k < 1 || k > r_) throw std::invalid_argument("y index out of range");
  return x_count() + (k - 1);
}

bool VariableUniverse::has_x(int i, int j) const {
  return i >= 1 && j <= 2 * n_ && i < j && i + j <= 2 * n_ + 1;
}

int VariableUniverse::x_index(int i, int j) const {
  if (!has_x(i, j)) {
    std::ostringstream os;
    os << "x[" << i << "," << j << "] is not a coordinate (need i<j, i+j<=2n+1, n=" << n_ << ")";
    throw std::invalid_argument(os.str());
  }
  return x_index_by_pair_[i][j];
}

std::string VariableUniverse::var_name(int index) const {
  if (index < 0 || index >= var_count()) throw std::invalid_argument("variable index out of range");
  if (index < x_count()) {
    auto [i, j] = x_pairs_[static_cast<size_t>(index)];
    std::ostringstream os;
    os << "x[" << i << "," << j << "]";
    return os.str();
  }
  if (index < x_count() + r_) {
    std::ostringstream os;
    os << "y[" << (index - x_count() + 1) << "]";
    return os.str();
  }
  return "t";
}

void require_same_universe(const VariableUniverse& a, const VariableUniverse& b) {
  if (a != b) {
    std::ostringstream os;
    os << "mismatched universes: (n=" << a.n() << ",r=" << a.r() << ") vs (n=" << b.n()
       << ",r=" << b.r() << ")";
    throw std::invalid_argument(os.str());
  }
}

ExponentVector::ExponentVector(UniversePtr u, std::vector<std::int64_t> exps)
    : u_(std::move(u)), e_(std::move(exps)) {
  if (!u_) throw std::invalid_argument("null universe");
  if (static_cast<int>(e_.size()) != u_->var_count())
    throw std::invalid_argument("exponent vector has wrong length");
  for (int i = 0; i < u_->x_count(); ++i)
    if (e_[static_cast<size_t>(i)] < 0)
      throw std::invalid_argument("negative exponent on " + u_->var_name(i));
  if (e_.back() < 0) throw std::invalid_argument("negative exponent on t");
}

ExponentVector ExponentVector::zero(UniversePtr u) {
  std::vector<std::int64_t> e(static_cast<size_t>(u->var_count()), 0);
  return ExponentVector(std::move(u), std::move(e));
}

ExponentVector ExponentVector::unit(UniversePtr u, int var_index, std::int64_t e) {
  std::vector<std::int64_t> v(static_cast<size_t>(u->var_count()), 0);
  v.at(static_cast<size_t>(var_index)) = e;
  return ExponentVector(std::move(u), std::move(v));
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
  require_same_universe(*u_, *o.u_);
  std::vector<std::int64_t> e(e_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += o.e_[i];
  return ExponentVector(u_, std::move(e));
}

bool ExponentVector::operator==(const ExponentVector& o) const {
  return *u_ == *o.u_ && e_ == o.e_;
}

bool ExponentVector::is_zero() const {
  for (auto v : e_)
    if (v != 0) return false;
  return true;
}

LatticePoint ExponentVector::x_part() const {
  return LatticePoint(e_.begin(), e_.begin() + u_->x_count());
}

TermOrder TermOrder::standard(UniversePtr u) {
  TermOrder o;
  o.u_ = u;
  o.schedule_.push_back({u->t_index(), true});
  for (int k = u->r(); k >= 1; --k) o.schedule_.push_back({u->y_index(k), true});
  // x-chain: within each row the column index descends.
  const int n = u->n();
  for (int i = 1; i <= n; ++i)
    for (int j = 2 * n + 1 - i; j > i; --j) o.schedule_.push_back({u->x_index(i, j), false});
  if (static_cast<int>(o.schedule_.size()) != u->var_count())
    throw std::logic_error("order schedule does not cover the universe");
  return o;
}

int TermOrder::compare(const ExponentVector& a, const ExponentVector& b) const {
  require_same_universe(*u_, *a.universe());
  require_same_universe(*u_, *b.universe());
  return compare_raw(a.raw(), b.raw());
}

int TermOrder::compare_raw(const LatticePoint& a, const LatticePoint& b) const {
  if (static_cast<int>(a.size()) != u_->var_count() ||
      static_cast<int>(b.size()) != u_->var_count())
    throw std::invalid_argument("exponent vector has wrong length for this order");
  for (const Slot& s : schedule_) {
    const std::int64_t ea = a[static_cast<size_t>(s.var)];
    const std::int64_t eb = b[static_cast<size_t>(s.var)];
    if (ea == eb) continue;
    const bool a_wins = s.larger_wins ? (ea > eb) : (ea < eb);
    return a_wins ? 1 : -1;
  }
  return 0;
}

}  // namespace horotoric
