#include "symvar/exact_field.hpp"

#include <sstream>

namespace symvar {

Scalar& Scalar::operator+=(const Scalar& o) {
  a_ += o.a_;
  b_ += o.b_;
  c_ += o.c_;
  d_ += o.d_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  c_ -= o.c_;
  d_ -= o.d_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.is_rational()) {
    if (o.a_ == 0) return *this = Scalar();
    a_ *= o.a_;
    b_ *= o.a_;
    c_ *= o.a_;
    d_ *= o.a_;
    return *this;
  }
  if (is_rational()) {
    Rational s = a_;
    *this = o;
    return *this *= Scalar(s);
  }
  // basis products: i*i=-1, r*r=2, (ir)(ir)=-2, i*r=ir, i*(ir)=-r, r*(ir)=2i
  const Rational& A = o.a_;
  const Rational& B = o.b_;
  const Rational& C = o.c_;
  const Rational& D = o.d_;
  Rational na = a_ * A - b_ * B + 2 * c_ * C - 2 * d_ * D;
  Rational nb = a_ * B + b_ * A + 2 * c_ * D + 2 * d_ * C;
  Rational nc = a_ * C + c_ * A - b_ * D - d_ * B;
  Rational nd = a_ * D + d_ * A + b_ * C + c_ * B;
  a_ = std::move(na);
  b_ = std::move(nb);
  c_ = std::move(nc);
  d_ = std::move(nd);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("Scalar: division by zero");
  if (is_rational()) return Scalar(1 / a_);
  // z = p + i q with p = a + c r, q = b + d r; 1/z = (p - i q)/(p^2 + q^2)
  Rational u = a_ * a_ + 2 * c_ * c_ + b_ * b_ + 2 * d_ * d_;
  Rational v = 2 * a_ * c_ + 2 * b_ * d_;
  Rational n = u * u - 2 * v * v;
  // 1/(u + v r) = (u - v r)/n
  Scalar inv_norm(u / n, 0, -v / n, 0);
  return Scalar(a_, -b_, c_, -d_) * inv_norm;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string Scalar::str() const {
  std::string out;
  auto term = [&](const Rational& q, const char* unit) {
    if (q == 0) return;
    std::string t = to_string(q);
    bool neg = t[0] == '-';
    if (neg) t = t.substr(1);
    if (*unit && t == "1") t.clear();
    if (*unit && !t.empty()) t += "*";
    t += unit;
    if (out.empty())
      out = neg ? "-" + t : t;
    else
      out += (neg ? " - " : " + ") + t;
  };
  term(a_, "");
  term(b_, "i");
  term(c_, "sqrt2");
  term(d_, "i*sqrt2");
  return out.empty() ? "0" : out;
}

std::optional<Rational> sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  Integer n = numerator(q), d = denominator(q);
  Integer rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return std::nullopt;
  return Rational(rn, rd);
}

namespace {

// square root inside Q(sqrt2) of u + v sqrt2
std::optional<std::pair<Rational, Rational>> sqrt_q2(const Rational& u, const Rational& v) {
  if (v == 0) {
    if (auto s = sqrt(u)) return std::make_pair(*s, Rational(0));
    if (auto t = sqrt(u / 2)) return std::make_pair(Rational(0), *t);
    return std::nullopt;
  }
  // (s + t r)^2 = s^2 + 2t^2 + 2 s t r
  auto disc = sqrt(u * u - 2 * v * v);
  if (!disc) return std::nullopt;
  for (int sg : {1, -1}) {
    Rational s2 = (u + sg * *disc) / 2;
    if (s2 == 0) continue;
    if (auto s = sqrt(s2)) {
      Rational t = v / (2 * *s);
      if ((*s) * (*s) + 2 * t * t == u) return std::make_pair(*s, t);
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Scalar> sqrt(const Scalar& z) {
  if (z.is_zero()) return Scalar();
  // z = x + i y over Q(sqrt2); root p + i q with p^2 - q^2 = x, 2 p q = y
  const Rational &xa = z.a(), &xc = z.c(), &ya = z.b(), &yc = z.d();
  auto check = [&](const Scalar& w) -> std::optional<Scalar> {
    if (w * w == z) return w;
    return std::nullopt;
  };
  if (ya == 0 && yc == 0) {
    if (auto p = sqrt_q2(xa, xc)) return check(Scalar(p->first, 0, p->second, 0));
    if (auto q = sqrt_q2(-xa, -xc)) return check(Scalar(0, q->first, 0, q->second));
    return std::nullopt;
  }
  // |z|^2 = x^2 + y^2 in Q(sqrt2)
  Rational nu = xa * xa + 2 * xc * xc + ya * ya + 2 * yc * yc;
  Rational nv = 2 * xa * xc + 2 * ya * yc;
  auto m = sqrt_q2(nu, nv);
  if (!m) return std::nullopt;
  for (int sg : {1, -1}) {
    Rational pu = (xa + sg * m->first) / 2, pv = (xc + sg * m->second) / 2;
    auto p = sqrt_q2(pu, pv);
    if (!p || (p->first == 0 && p->second == 0)) continue;
    Scalar P(p->first, 0, p->second, 0);
    Scalar Y(ya, 0, yc, 0);
    Scalar Q = Y / (Scalar(2) * P);
    if (auto w = check(P + Q * Scalar::i())) return w;
  }
  return std::nullopt;
}

}  // namespace symvar
