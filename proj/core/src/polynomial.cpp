#include "subshift/polynomial.hpp"

#include <memory>
#include <sstream>

namespace subshift {

namespace {

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Sturm-based bisection keeping exactly one root in (lo, hi].
void shrink(const SturmSequence& s, Rational& lo, Rational& hi,
            const Rational& width) {
  while (hi - lo > width || s.count_roots(lo, hi) > 1) {
    Rational mid = (lo + hi) / 2;
    if (s.count_roots(mid, hi) >= 1)
      lo = mid;
    else
      hi = mid;
  }
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

double Polynomial::operator()(double x) const {
  double v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + to_double(*it);
  return v;
}

int Polynomial::sign_at(const Rational& x) const { return sign((*this)(x)); }

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> m = c_;
  Rational lead = c_.back();
  for (auto& x : m) x /= lead;
  return Polynomial(std::move(m));
}

std::vector<BigInt> Polynomial::integer_coefficients() const {
  BigInt l = 1;
  for (auto& x : c_) {
    BigInt d = boost::multiprecision::denominator(x);
    l = l / big_gcd(l, d) * d;
  }
  std::vector<BigInt> out;
  BigInt g = 0;
  for (auto& x : c_) {
    Rational y = x * Rational(l);
    out.push_back(boost::multiprecision::numerator(y));
    g = big_gcd(g, out.back());
  }
  if (g > 1)
    for (auto& x : out) x /= g;
  if (!out.empty() && out.back() < 0)
    for (auto& x : out) x = -x;
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = a.c_;
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + b.c_.size() - 1] / b.c_.back();
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[k + j] -= f * b.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second.monic();
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  auto c = integer_coefficients();
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    BigInt mag = c[k] < 0 ? BigInt(-c[k]) : c[k];
    if (first)
      os << (c[k] < 0 ? "-" : "");
    else
      os << (c[k] < 0 ? " - " : " + ");
    first = false;
    if (mag != 1 || k == 0) os << mag;
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial characteristic_polynomial(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (!a.square()) throw std::invalid_argument("matrix must be square");
  // Faddeev-LeVerrier over the integers; every division below is exact.
  DenseMatrix<BigInt> A = a.cast<BigInt>();
  DenseMatrix<BigInt> Mk(n, n);
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Mk = A * Mk;
    for (std::size_t i = 0; i < n; ++i) Mk(i, i) += c[n - k + 1];
    DenseMatrix<BigInt> AM = A * Mk;
    BigInt tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += AM(i, i);
    c[n - k] = -tr / BigInt(k);
  }
  std::vector<Rational> rc(c.begin(), c.end());
  return Polynomial(std::move(rc));
}

Polynomial square_free_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  Polynomial g = Polynomial::gcd(p, p.derivative());
  return Polynomial::divmod(p, g).first.monic();
}

SturmSequence::SturmSequence(const Polynomial& p) {
  seq_.push_back(p);
  if (p.degree() <= 0) return;
  seq_.push_back(p.derivative());
  while (seq_.back().degree() > 0) {
    Polynomial r = Polynomial::divmod(seq_[seq_.size() - 2], seq_.back()).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps sign information and limits growth.
    Rational lead = r.leading();
    if (lead < 0) lead = -lead;
    std::vector<Rational> c = r.coefficients();
    for (auto& x : c) x = -x / lead;
    seq_.push_back(Polynomial(std::move(c)));
  }
}

int SturmSequence::sign_changes(const Rational& x) const {
  int changes = 0, last = 0;
  for (const auto& p : seq_) {
    int s = p.sign_at(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rational& lo, const Rational& hi) const {
  if (!(lo < hi)) return 0;
  return sign_changes(lo) - sign_changes(hi);
}

AlgebraicReal::AlgebraicReal(const Rational& r)
    : poly_(Polynomial::x_minus(r)), lo_(r - 1), hi_(r), approx_(to_double(r)) {}

AlgebraicReal AlgebraicReal::largest_root(const Polynomial& p, const Rational& lo,
                                          const Rational& hi) {
  AlgebraicReal a;
  a.poly_ = square_free_part(p);
  SturmSequence s(a.poly_);
  if (s.count_roots(lo, hi) < 1)
    throw std::domain_error("no real root in the given bracket");
  a.lo_ = lo;
  a.hi_ = hi;
  // Narrow to the largest root first, then to the working precision.
  while (s.count_roots(a.lo_, a.hi_) > 1) {
    Rational mid = (a.lo_ + a.hi_) / 2;
    if (s.count_roots(mid, a.hi_) >= 1)
      a.lo_ = mid;
    else
      a.hi_ = mid;
  }
  shrink(s, a.lo_, a.hi_, Rational(1, BigInt(1) << 46));
  a.update_approx();
  return a;
}

void AlgebraicReal::refine(const Rational& width) {
  if (hi_ - lo_ <= width) return;
  SturmSequence s(poly_);
  shrink(s, lo_, hi_, width);
  update_approx();
}

void AlgebraicReal::bisect() {
  SturmSequence s(poly_);
  Rational mid = (lo_ + hi_) / 2;
  if (s.count_roots(mid, hi_) >= 1)
    lo_ = mid;
  else
    hi_ = mid;
}

void AlgebraicReal::update_approx() {
  if (poly_.sign_at(hi_) == 0) {
    approx_ = to_double(hi_);
    return;
  }
  // Secant estimate inside the bracket.
  Rational flo = poly_(lo_), fhi = poly_(hi_);
  Rational x = (flo == fhi) ? (lo_ + hi_) / 2 : lo_ - flo * (hi_ - lo_) / (fhi - flo);
  if (x <= lo_ || x > hi_) x = (lo_ + hi_) / 2;
  approx_ = to_double(x);
}

std::optional<BigInt> AlgebraicReal::as_integer() const {
  if (poly_.degree() < 1) return std::nullopt;
  double r = std::round(approx_);
  for (int d = -1; d <= 1; ++d) {
    BigInt n(static_cast<long long>(r) + d);
    Rational q(n);
    if (q > lo_ && q <= hi_ && poly_.sign_at(q) == 0) return n;
  }
  return std::nullopt;
}

std::strong_ordering compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  Rational lo = std::max(a.lo_, b.lo_), hi = std::min(a.hi_, b.hi_);
  if (lo < hi) {
    Polynomial g = Polynomial::gcd(a.poly_, b.poly_);
    if (g.degree() >= 1 && SturmSequence(g).count_roots(lo, hi) > 0)
      return std::strong_ordering::equal;
  }
  AlgebraicReal x = a, y = b;
  while (true) {
    if (x.hi_ <= y.lo_) return std::strong_ordering::less;
    if (y.hi_ <= x.lo_) return std::strong_ordering::greater;
    x.bisect();
    y.bisect();
  }
}

}  // namespace subshift
