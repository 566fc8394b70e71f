#include "nlie/field.hpp"

namespace nlie {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d : {2u, 3u}) {
    if (n % d == 0) return n == d;
  }
  for (uint64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::GF(uint32_t p) {
  if (p < 2 || p >= (1u << 31) || !is_prime_u32(p))
    throw FieldError("GF(p) requires a prime 2 <= p < 2^31, got " + std::to_string(p));
  FieldSpec f;
  f.kind_ = Kind::prime_field;
  f.p_ = p;
  return f;
}

std::string FieldSpec::to_string() const {
  if (kind_ == Kind::rationals) return "Q";
  return "GF(" + std::to_string(p_) + ")";
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "QQ" || s == "rationals") return Q();
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    const std::string body = s.substr(3, s.size() - 4);
    if (body.empty() || body.find_first_not_of("0123456789") != std::string::npos)
      throw FieldError("bad field spec: " + s);
    unsigned long p = std::stoul(body);
    return GF(static_cast<uint32_t>(p));
  }
  throw FieldError("bad field spec: " + s);
}

uint64_t gf_inverse(uint64_t a, uint64_t p) {
  // extended Euclid; a nonzero residue mod p
  int64_t t = 0, nt = 1;
  int64_t r = static_cast<int64_t>(p), nr = static_cast<int64_t>(a % p);
  while (nr != 0) {
    int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw FieldError("not invertible mod p");
  if (t < 0) t += static_cast<int64_t>(p);
  return static_cast<uint64_t>(t);
}

namespace {
const mpq_class& zero_mpq() {
  static const mpq_class z(0);
  return z;
}
std::shared_ptr<const mpq_class> wrap(mpq_class q) {
  if (q == 0) return nullptr;  // zero is the null payload
  return std::make_shared<const mpq_class>(std::move(q));
}
}  // namespace

const mpq_class& Scalar::q() const { return q_ ? *q_ : zero_mpq(); }

Scalar Scalar::from_int(const FieldSpec& f, long v) {
  Scalar s(f);
  if (f.is_prime_field()) {
    int64_t m = v % static_cast<int64_t>(f.p());
    if (m < 0) m += f.p();
    s.r_ = static_cast<uint64_t>(m);
  } else if (v != 0) {
    s.q_ = std::make_shared<const mpq_class>(v);
  }
  return s;
}

Scalar Scalar::from_mpq(const mpq_class& q) {
  Scalar s(FieldSpec::Q());
  mpq_class c = q;
  c.canonicalize();
  s.q_ = wrap(std::move(c));
  return s;
}

Scalar Scalar::from_residue(const FieldSpec& f, uint64_t r) {
  if (!f.is_prime_field()) throw FieldError("residue scalar needs a prime field");
  Scalar s(f);
  s.r_ = r % f.p();
  return s;
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? r_ == 0 : q_ == nullptr;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? r_ == 1 : (q_ && *q_ == 1);
}

uint32_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw FieldError("residue() on rational scalar");
  return static_cast<uint32_t>(r_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rationals()) throw FieldError("rational() on prime-field scalar");
  return q();
}

Scalar Scalar::operator-() const {
  Scalar s(field_);
  if (field_.is_prime_field())
    s.r_ = r_ == 0 ? 0 : field_.p() - r_;
  else if (q_)
    s.q_ = std::make_shared<const mpq_class>(-*q_);
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_prime_field())
    s.r_ = (r_ + o.r_) % field_.p();
  else if (!q_)
    s.q_ = o.q_;
  else if (!o.q_)
    s.q_ = q_;
  else
    s.q_ = wrap(*q_ + *o.q_);
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_prime_field())
    s.r_ = (r_ + field_.p() - o.r_) % field_.p();
  else if (!o.q_)
    s.q_ = q_;
  else if (!q_)
    s.q_ = std::make_shared<const mpq_class>(-*o.q_);
  else
    s.q_ = wrap(*q_ - *o.q_);
  return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  Scalar s(field_);
  if (field_.is_prime_field())
    s.r_ = (r_ * o.r_) % field_.p();
  else if (q_ && o.q_)
    s.q_ = wrap(*q_ * *o.q_);
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw FieldError("inverse of zero");
  Scalar s(field_);
  if (field_.is_prime_field())
    s.r_ = gf_inverse(r_, field_.p());
  else
    s.q_ = std::make_shared<const mpq_class>(1 / *q_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  check_same(o);
  return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  if (field_.is_prime_field()) return r_ == o.r_;
  if (q_ == o.q_) return true;  // shared payload or both zero
  return q() == o.q();
}

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(r_);
  const mpq_class& v = q();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Scalar Scalar::parse(const FieldSpec& f, const std::string& s) {
  if (s.empty()) throw FieldError("empty scalar string");
  if (f.is_prime_field()) {
    if (s.find_first_not_of("0123456789") != std::string::npos)
      throw FieldError("bad GF(p) scalar: " + s);
    mpz_class z(s, 10);
    mpz_class m = z % f.p();
    return from_residue(f, m.get_ui());
  }
  // "a" or "a/b" with optional leading '-'
  size_t slash = s.find('/');
  try {
    mpq_class q;
    if (slash == std::string::npos) {
      q = mpq_class(mpz_class(s, 10));
    } else {
      mpz_class num(s.substr(0, slash), 10);
      mpz_class den(s.substr(slash + 1), 10);
      if (den == 0) throw FieldError("zero denominator: " + s);
      q = mpq_class(num, den);
      q.canonicalize();
    }
    return from_mpq(q);
  } catch (const std::invalid_argument&) {
    throw FieldError("bad rational scalar: " + s);
  }
}

bool Scalar::is_integral() const {
  return field_.is_prime_field() || q().get_den() == 1;
}

uint32_t Scalar::reduce_mod(uint32_t p) const {
  if (field_.is_prime_field()) return static_cast<uint32_t>(r_ % p);
  const mpq_class& v = q();
  if (v.get_den() != 1) throw FieldError("reduce_mod on non-integral rational");
  mpz_class m = v.get_num() % p;
  if (m < 0) m += p;
  return static_cast<uint32_t>(m.get_ui());
}

}  // namespace nlie
