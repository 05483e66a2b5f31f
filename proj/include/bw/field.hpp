#pragma once
#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "bw/util.hpp"

namespace bw {

class Field;

/* A scalar in whichever field the ambient Field context says.  Prime-field
 * values are canonical residues in [0, p); rationals are canonical mpq.
 * All arithmetic goes through Field so the two modes never mix. */
class Value {
 public:
  Value() : v_(std::uint32_t{0}) {}
  bool operator==(const Value& o) const { return v_ == o.v_; }

 private:
  friend class Field;
  explicit Value(std::uint32_t r) : v_(r) {}
  explicit Value(mpq_class q) : v_(std::move(q)) {}
  std::variant<std::uint32_t, mpq_class> v_;
};

class Field {
 public:
  enum class Kind { rationals, prime };

  static Field Q() { return Field(Kind::rationals, 0); }
  static Field Fp(std::uint32_t p);
  /* "Q" or "F<p>", e.g. "F2", "F5". */
  static Field parse(const std::string& spec);

  Kind kind() const { return kind_; }
  std::uint32_t characteristic() const { return p_; }
  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }
  std::string to_string() const {
    return kind_ == Kind::rationals ? "Q" : "F" + std::to_string(p_);
  }

  Value zero() const { return kind_ == Kind::prime ? Value(std::uint32_t{0}) : Value(mpq_class(0)); }
  Value one() const { return kind_ == Kind::prime ? Value(std::uint32_t{1}) : Value(mpq_class(1)); }
  Value from_long(long v) const;
  Value parse_scalar(const std::string& s) const;
  std::string to_string(const Value& a) const;

  bool is_zero(const Value& a) const {
    if (kind_ == Kind::prime) return r(a) == 0;
    return sgn(q(a)) == 0;
  }
  bool is_one(const Value& a) const { return eq(a, one()); }
  bool eq(const Value& a, const Value& b) const {
    if (kind_ == Kind::prime) return r(a) == r(b);
    return cmp(q(a), q(b)) == 0;
  }
  /* True for rationals strictly below zero; residues are never negative. */
  bool is_negative(const Value& a) const {
    if (kind_ == Kind::prime) return false;
    return sgn(q(a)) < 0;
  }

  Value add(const Value& a, const Value& b) const {
    if (kind_ == Kind::prime) {
      std::uint32_t s = r(a) + r(b);
      if (s >= p_) s -= p_;
      return Value(s);
    }
    return Value(mpq_class(q(a) + q(b)));
  }
  Value sub(const Value& a, const Value& b) const {
    if (kind_ == Kind::prime) {
      std::uint32_t s = r(a) + p_ - r(b);
      if (s >= p_) s -= p_;
      return Value(s);
    }
    return Value(mpq_class(q(a) - q(b)));
  }
  Value mul(const Value& a, const Value& b) const {
    if (kind_ == Kind::prime)
      return Value(static_cast<std::uint32_t>(std::uint64_t(r(a)) * r(b) % p_));
    return Value(mpq_class(q(a) * q(b)));
  }
  Value neg(const Value& a) const {
    if (kind_ == Kind::prime) return r(a) == 0 ? a : Value(p_ - r(a));
    return Value(mpq_class(-q(a)));
  }
  Value inv(const Value& a) const;
  Value div(const Value& a, const Value& b) const { return mul(a, inv(b)); }

  void add_in(Value& a, const Value& b) const {
    if (kind_ == Kind::prime) {
      std::uint32_t s = r(a) + r(b);
      if (s >= p_) s -= p_;
      rm(a) = s;
      return;
    }
    qm(a) += q(b);
  }
  /* a += c*b. */
  void addmul_in(Value& a, const Value& c, const Value& b) const {
    if (kind_ == Kind::prime) {
      std::uint64_t prod = std::uint64_t(r(c)) * r(b) % p_;
      std::uint32_t s = r(a) + static_cast<std::uint32_t>(prod);
      if (s >= p_) s -= p_;
      rm(a) = s;
      return;
    }
    qm(a) += q(c) * q(b);
  }
  /* a -= c*b, the elimination workhorse. */
  void submul_in(Value& a, const Value& c, const Value& b) const {
    if (kind_ == Kind::prime) {
      std::uint64_t prod = std::uint64_t(r(c)) * r(b) % p_;
      std::uint32_t s = r(a) + p_ - static_cast<std::uint32_t>(prod);
      if (s >= p_) s -= p_;
      rm(a) = s;
      return;
    }
    qm(a) -= q(c) * q(b);
  }

  Value random_unit(std::mt19937_64& rng) const;
  /* Small scalar, possibly zero; used for randomized linear combinations. */
  Value random_small(std::mt19937_64& rng) const;
  /* Every field element; prime fields only. */
  std::vector<Value> all_elements() const;

 private:
  Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
  static std::uint32_t r(const Value& v) { return std::get<std::uint32_t>(v.v_); }
  static std::uint32_t& rm(Value& v) { return std::get<std::uint32_t>(v.v_); }
  static const mpq_class& q(const Value& v) { return std::get<mpq_class>(v.v_); }
  static mpq_class& qm(Value& v) { return std::get<mpq_class>(v.v_); }

  Kind kind_;
  std::uint32_t p_;
};

}  // namespace bw
