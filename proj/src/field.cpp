#include "bw/field.hpp"

#include <cctype>

namespace bw {

namespace {

bool is_small_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t pow_mod(std::uint32_t b, std::uint32_t e, std::uint32_t p) {
  std::uint64_t acc = 1, base = b % p;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

}  // namespace

Field Field::Fp(std::uint32_t p) {
  require(p >= 2 && p < (1u << 20) && is_small_prime(p), Errc::usage,
          "field characteristic must be a prime below 2^20, got " + std::to_string(p));
  return Field(Kind::prime, p);
}

Field Field::parse(const std::string& spec) {
  if (spec == "Q" || spec == "q") return Q();
  if (spec.size() >= 2 && (spec[0] == 'F' || spec[0] == 'f')) {
    for (std::size_t i = 1; i < spec.size(); ++i)
      require(std::isdigit(static_cast<unsigned char>(spec[i])), Errc::usage,
              "bad field spec '" + spec + "' (expected Q or F<p>)");
    return Fp(static_cast<std::uint32_t>(std::stoul(spec.substr(1))));
  }
  fail(Errc::usage, "bad field spec '" + spec + "' (expected Q or F<p>)");
}

Value Field::from_long(long v) const {
  if (kind_ == Kind::prime) {
    long m = v % static_cast<long>(p_);
    if (m < 0) m += p_;
    return Value(static_cast<std::uint32_t>(m));
  }
  return Value(mpq_class(v));
}

Value Field::parse_scalar(const std::string& s) const {
  require(!s.empty(), Errc::invalid_input, "empty scalar");
  mpq_class v;
  if (v.set_str(s, 10) != 0)
    fail(Errc::invalid_input, "bad scalar '" + s + "'");
  require(v.get_den() != 0, Errc::invalid_input, "zero denominator in '" + s + "'");
  v.canonicalize();
  if (kind_ == Kind::rationals) return Value(v);
  mpz_class num = v.get_num() % p_, den = v.get_den() % p_;
  if (num < 0) num += p_;
  std::uint32_t nr = static_cast<std::uint32_t>(num.get_ui());
  std::uint32_t dr = static_cast<std::uint32_t>(den.get_ui());
  require(dr != 0, Errc::invalid_input,
          "scalar '" + s + "' has denominator divisible by " + std::to_string(p_));
  return mul(Value(nr), inv(Value(dr)));
}

std::string Field::to_string(const Value& a) const {
  if (kind_ == Kind::prime) return std::to_string(r(a));
  return q(a).get_str();
}

Value Field::inv(const Value& a) const {
  require(!is_zero(a), Errc::internal, "division by zero");
  if (kind_ == Kind::prime) return Value(pow_mod(r(a), p_ - 2, p_));
  return Value(mpq_class(1 / q(a)));
}

Value Field::random_unit(std::mt19937_64& rng) const {
  if (kind_ == Kind::prime) {
    std::uniform_int_distribution<std::uint32_t> d(1, p_ - 1);
    return Value(d(rng));
  }
  std::uniform_int_distribution<int> d(1, 7);
  int v = d(rng);
  std::uniform_int_distribution<int> sgn(0, 1);
  return Value(mpq_class(sgn(rng) ? v : -v));
}

Value Field::random_small(std::mt19937_64& rng) const {
  if (kind_ == Kind::prime) {
    std::uniform_int_distribution<std::uint32_t> d(0, p_ - 1);
    return Value(d(rng));
  }
  std::uniform_int_distribution<int> d(-5, 5);
  return Value(mpq_class(d(rng)));
}

std::vector<Value> Field::all_elements() const {
  require(kind_ == Kind::prime, Errc::unsupported, "cannot enumerate an infinite field");
  std::vector<Value> out;
  out.reserve(p_);
  for (std::uint32_t i = 0; i < p_; ++i) out.push_back(Value(i));
  return out;
}

}  // namespace bw
