#include "csanyon/scalar.hpp"

#include <cmath>
#include <sstream>

namespace csanyon {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  // mpq_class(str) aborts on bad input, so validate by hand.
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits(s)) throw std::invalid_argument("bad rational: " + s);
  } else {
    if (!digits(s.substr(0, slash)) || !digits(s.substr(slash + 1)))
      throw std::invalid_argument("bad rational: " + s);
  }
  Rat q(s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  Rat c(q);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool rat_is_square(const Rat& q, Rat* root) {
  if (q < 0) return false;
  Rat c(q);
  c.canonicalize();
  mpz_class num = c.get_num(), den = c.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
  if (root) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    *root = Rat(rn, rd);
    root->canonicalize();
  }
  return true;
}

Scalar::Scalar(const Rat& a, const Rat& b, const Rat& r)
    : mode_(ScalarMode::Exact), a_(a), b_(b), r_(r) {
  a_.canonicalize();
  b_.canonicalize();
  r_.canonicalize();
  if (b_ != 0) {
    if (r_ <= 0) throw std::invalid_argument("radicand must be positive");
    if (rat_is_square(r_))
      throw std::invalid_argument("square radicand: construct as rational");
  }
  normalize();
}

Scalar Scalar::numeric(std::complex<double> z) {
  Scalar s;
  s.mode_ = ScalarMode::Numeric;
  s.z_ = z;
  return s;
}

Scalar Scalar::sqrt_rational(const Rat& r) {
  if (r < 0) throw std::invalid_argument("negative radicand");
  Rat root;
  if (rat_is_square(r, &root)) return Scalar(root);
  return Scalar(Rat(0), Rat(1), r);
}

void Scalar::normalize() {
  if (mode_ == ScalarMode::Exact && b_ == 0) r_ = 0;
}

bool Scalar::is_zero() const {
  if (mode_ == ScalarMode::Numeric) return z_ == std::complex<double>(0.0, 0.0);
  return a_ == 0 && b_ == 0;
}

Rat Scalar::rational() const {
  require_exact();
  if (b_ != 0) throw std::logic_error("scalar has an irrational part");
  return a_;
}

std::complex<double> Scalar::to_complex() const {
  if (mode_ == ScalarMode::Numeric) return z_;
  double v = a_.get_d();
  if (b_ != 0) v += b_.get_d() * std::sqrt(r_.get_d());
  return {v, 0.0};
}

Rat Scalar::merge_r(const Scalar& x, const Scalar& y) {
  if (x.b_ == 0) return y.r_;
  if (y.b_ == 0) return x.r_;
  if (x.r_ != y.r_) throw std::logic_error("mixed quadratic fields");
  return x.r_;
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (mode_ == ScalarMode::Numeric) {
    s.z_ = -z_;
  } else {
    s.a_ = -a_;
    s.b_ = -b_;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (mode_ != o.mode_) throw std::logic_error("mixed scalar modes");
  if (mode_ == ScalarMode::Numeric) {
    z_ += o.z_;
    return *this;
  }
  r_ = merge_r(*this, o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (mode_ != o.mode_) throw std::logic_error("mixed scalar modes");
  if (mode_ == ScalarMode::Numeric) {
    z_ *= o.z_;
    return *this;
  }
  Rat r = merge_r(*this, o);
  Rat a = a_ * o.a_ + b_ * o.b_ * r;
  Rat b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  r_ = r;
  a_.canonicalize();
  b_.canonicalize();
  normalize();
  return *this;
}

Scalar Scalar::inverse() const {
  if (mode_ == ScalarMode::Numeric) {
    if (z_ == std::complex<double>(0.0, 0.0))
      throw std::domain_error("division by zero");
    return numeric(1.0 / z_);
  }
  if (is_zero()) throw std::domain_error("division by zero");
  if (b_ == 0) return Scalar(Rat(1) / a_);
  // (a + b sqrt r)^(-1) = (a - b sqrt r) / (a^2 - b^2 r); the denominator
  // cannot vanish because r is not a square.
  Rat d = a_ * a_ - b_ * b_ * r_;
  return Scalar(a_ / d, -b_ / d, r_);
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::conj() const {
  if (mode_ == ScalarMode::Numeric) return numeric(std::conj(z_));
  return *this;
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar acc(1), base(*this);
  if (mode_ == ScalarMode::Numeric) acc = numeric({1.0, 0.0});
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode_ != o.mode_) return false;
  if (mode_ == ScalarMode::Numeric) return z_ == o.z_;
  if (a_ != o.a_ || b_ != o.b_) return false;
  return b_ == 0 || r_ == o.r_;
}

std::string Scalar::str() const {
  if (mode_ == ScalarMode::Numeric) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z_.real() << "," << z_.imag() << ")";
    return os.str();
  }
  if (b_ == 0) return rat_to_string(a_);
  std::string root = "sqrt(" + rat_to_string(r_) + ")";
  std::string tail =
      (b_ == 1) ? root
                : (b_ == -1) ? "-" + root : rat_to_string(b_) + "*" + root;
  if (a_ == 0) return tail;
  if (b_ > 0) return rat_to_string(a_) + "+" + tail;
  return rat_to_string(a_) + tail;
}

}  // namespace csanyon
