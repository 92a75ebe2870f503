#include "lienil/scalar.hpp"

#include <charconv>

namespace lienil {

bool is_prime(uint64_t p) {
  if (p < 2) return false;
  for (uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    if (p % q == 0) return p == q;
  }
  for (uint64_t q = 17; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

uint64_t mod_pow(uint64_t base, uint64_t exp, uint64_t p) {
  unsigned __int128 result = 1;
  unsigned __int128 b = base % p;
  while (exp > 0) {
    if (exp & 1) result = result * b % p;
    b = b * b % p;
    exp >>= 1;
  }
  return static_cast<uint64_t>(result);
}

uint64_t mod_inverse(uint64_t a, uint64_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
  return mod_pow(a, p - 2, p);
}

ScalarMode ScalarMode::mod(uint64_t p) {
  if (p >= (1ULL << 32)) throw std::invalid_argument("prime must be below 2^32");
  if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  ScalarMode m;
  m.prime_ = p;
  return m;
}

std::string ScalarMode::tag() const {
  return is_exact() ? std::string("exact") : "mod" + std::to_string(prime_);
}

ScalarMode ScalarMode::from_tag(std::string_view tag) {
  if (tag == "exact") return exact();
  if (tag.starts_with("mod")) {
    uint64_t p = 0;
    auto body = tag.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec == std::errc() && ptr == body.data() + body.size()) return mod(p);
  }
  throw std::invalid_argument("bad scalar mode tag: " + std::string(tag));
}

namespace {

uint64_t reduce_mpz(const mpz_class& z, uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

}  // namespace

Scalar::Scalar(ScalarMode mode, long value) : mode_(mode) {
  if (mode_.is_exact()) {
    value_ = value;
  } else {
    long p = static_cast<long>(mode_.prime());
    long r = value % p;
    residue_ = static_cast<uint64_t>(r < 0 ? r + p : r);
  }
}

Scalar::Scalar(ScalarMode mode, const mpq_class& value) : mode_(mode) {
  if (mode_.is_exact()) {
    value_ = value;
    value_.canonicalize();
    return;
  }
  uint64_t p = mode_.prime();
  uint64_t den = reduce_mpz(value.get_den(), p);
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  residue_ = static_cast<uint64_t>(static_cast<unsigned __int128>(reduce_mpz(value.get_num(), p)) *
                                   mod_inverse(den, p) % p);
}

namespace {
mpq_class make_fraction(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  mpq_class q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}
}  // namespace

Scalar::Scalar(ScalarMode mode, long num, long den) : Scalar(mode, make_fraction(num, den)) {}

bool Scalar::is_zero() const { return mode_.is_exact() ? value_ == 0 : residue_ == 0; }
bool Scalar::is_one() const { return mode_.is_exact() ? value_ == 1 : residue_ == 1; }

void Scalar::check(const Scalar& o) const {
  if (mode_ != o.mode_) throw ModeMismatch("scalar mode mismatch: " + mode_.tag() + " vs " + o.mode_.tag());
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (mode_.is_exact()) {
    r.value_ = -value_;
  } else if (residue_ != 0) {
    r.residue_ = mode_.prime() - residue_;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (mode_.is_exact()) {
    value_ += o.value_;
  } else {
    residue_ += o.residue_;
    if (residue_ >= mode_.prime()) residue_ -= mode_.prime();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (mode_.is_exact()) {
    value_ *= o.value_;
  } else {
    residue_ = residue_ * o.residue_ % mode_.prime();
  }
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar r = *this;
  if (mode_.is_exact()) {
    r.value_ = 1 / value_;
  } else {
    r.residue_ = mod_inverse(residue_, mode_.prime());
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode_ != o.mode_) return false;
  return mode_.is_exact() ? value_ == o.value_ : residue_ == o.residue_;
}

std::string Scalar::to_string() const {
  return mode_.is_exact() ? value_.get_str() : std::to_string(residue_);
}

Scalar Scalar::parse(std::string_view text, ScalarMode mode) {
  mpq_class q;
  std::string s(text);
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw std::invalid_argument("bad scalar literal: '" + s + "'");
  }
  q.canonicalize();
  return Scalar(mode, q);
}

}  // namespace lienil
