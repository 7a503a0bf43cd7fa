#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace stvf {

// Nonnegative vote quantity held as an integer number of 1e-5 vote units.
// This is the precision of the Scottish STV rules; all arithmetic is exact
// on raw units.
class FixedVote {
 public:
  static constexpr int kDecimals = 5;
  static constexpr std::int64_t kScale = 100000;

  constexpr FixedVote() = default;

  static constexpr FixedVote from_raw(std::int64_t raw) {
    FixedVote v;
    v.raw_ = raw;
    return v;
  }
  static constexpr FixedVote from_int(std::int64_t whole) { return from_raw(whole * kScale); }

  constexpr std::int64_t raw() const { return raw_; }
  constexpr bool is_integral() const { return raw_ % kScale == 0; }
  constexpr FixedVote to_fixed() const { return *this; }

  constexpr FixedVote& operator+=(FixedVote o) {
    raw_ += o.raw_;
    return *this;
  }
  constexpr FixedVote& operator-=(FixedVote o) {
    raw_ -= o.raw_;
    return *this;
  }
  friend constexpr FixedVote operator+(FixedVote a, FixedVote b) { return a += b; }
  friend constexpr FixedVote operator-(FixedVote a, FixedVote b) { return a -= b; }
  friend constexpr FixedVote operator*(FixedVote a, std::uint64_t count) {
    return from_raw(a.raw_ * static_cast<std::int64_t>(count));
  }
  friend constexpr auto operator<=>(FixedVote, FixedVote) = default;

  // Per-ballot value after a surplus transfer: value * surplus / total,
  // truncated to 5 decimals.
  static FixedVote scaled(FixedVote value, FixedVote surplus, FixedVote total);

  // "123.45678"; trailing zeros kept.
  std::string to_decimal_string() const;

 private:
  std::int64_t raw_ = 0;
};

// Exact rational vote quantity: proportional transfers without rounding.
class ExactVote {
 public:
  using Rational = boost::multiprecision::cpp_rational;

  ExactVote() = default;
  explicit ExactVote(Rational q) : q_(std::move(q)) {}

  static ExactVote from_int(std::int64_t whole) { return ExactVote(Rational(whole)); }

  const Rational& value() const { return q_; }
  bool is_integral() const;
  // Truncation to 5 decimals.
  FixedVote to_fixed() const;

  ExactVote& operator+=(const ExactVote& o) {
    q_ += o.q_;
    return *this;
  }
  ExactVote& operator-=(const ExactVote& o) {
    q_ -= o.q_;
    return *this;
  }
  friend ExactVote operator+(ExactVote a, const ExactVote& b) { return a += b; }
  friend ExactVote operator-(ExactVote a, const ExactVote& b) { return a -= b; }
  friend ExactVote operator*(const ExactVote& a, std::uint64_t count) {
    return ExactVote(a.q_ * Rational(count));
  }
  friend bool operator==(const ExactVote& a, const ExactVote& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const ExactVote& a, const ExactVote& b) {
    if (a.q_ < b.q_) return std::strong_ordering::less;
    if (a.q_ > b.q_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static ExactVote scaled(const ExactVote& value, const ExactVote& surplus, const ExactVote& total);

  // "num/den" (or "num" when integral).
  std::string to_fraction_string() const;

 private:
  Rational q_;
};

template <class V>
concept VoteScalar = requires(V a, const V& b, std::uint64_t n) {
  { V::from_int(std::int64_t{0}) } -> std::same_as<V>;
  { a += b } -> std::same_as<V&>;
  { b + b } -> std::same_as<V>;
  { b - b } -> std::same_as<V>;
  { b * n } -> std::same_as<V>;
  { b < b } -> std::convertible_to<bool>;
  { b == b } -> std::convertible_to<bool>;
  { V::scaled(b, b, b) } -> std::same_as<V>;
  { b.to_fixed() } -> std::same_as<FixedVote>;
  { b.is_integral() } -> std::convertible_to<bool>;
};

static_assert(VoteScalar<FixedVote>);
static_assert(VoteScalar<ExactVote>);

// Which scalar a count runs on.
enum class Arithmetic {
  Exact,     // proportional transfers in exact rationals
  Scottish,  // official 5-decimal truncation
};

// Display rendering: integral values print without decimals, everything
// else with exactly `precision` decimals (0..5), rounded half-up.
std::string format_vote(FixedVote v, int precision);

}  // namespace stvf
