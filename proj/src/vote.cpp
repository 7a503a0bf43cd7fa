#include "stvf/vote.hpp"

#include <cassert>
#include <stdexcept>

namespace stvf {

FixedVote FixedVote::scaled(FixedVote value, FixedVote surplus, FixedVote total) {
  assert(total.raw_ > 0);
  const __int128 num = static_cast<__int128>(value.raw_) * surplus.raw_;
  return from_raw(static_cast<std::int64_t>(num / total.raw_));
}

std::string FixedVote::to_decimal_string() const {
  const std::int64_t whole = raw_ / kScale;
  std::string frac = std::to_string(raw_ % kScale);
  frac.insert(0, static_cast<std::size_t>(kDecimals) - frac.size(), '0');
  return std::to_string(whole) + "." + frac;
}

bool ExactVote::is_integral() const {
  return boost::multiprecision::denominator(q_) == 1;
}

FixedVote ExactVote::to_fixed() const {
  using boost::multiprecision::cpp_int;
  const cpp_int scaled = boost::multiprecision::numerator(q_) * FixedVote::kScale;
  const cpp_int raw = scaled / boost::multiprecision::denominator(q_);
  return FixedVote::from_raw(raw.convert_to<std::int64_t>());
}

ExactVote ExactVote::scaled(const ExactVote& value, const ExactVote& surplus,
                            const ExactVote& total) {
  assert(total.q_ > 0);
  return ExactVote(value.q_ * surplus.q_ / total.q_);
}

std::string ExactVote::to_fraction_string() const {
  if (is_integral()) return boost::multiprecision::numerator(q_).str();
  return boost::multiprecision::numerator(q_).str() + "/" +
         boost::multiprecision::denominator(q_).str();
}

std::string format_vote(FixedVote v, int precision) {
  if (precision < 0 || precision > FixedVote::kDecimals)
    throw std::invalid_argument("display precision must be in 0..5");
  if (v.is_integral()) return std::to_string(v.raw() / FixedVote::kScale);

  std::int64_t step = 1;
  for (int i = precision; i < FixedVote::kDecimals; ++i) step *= 10;
  const std::int64_t units = (v.raw() + step / 2) / step;
  std::int64_t pow = 1;
  for (int i = 0; i < precision; ++i) pow *= 10;
  std::string out = std::to_string(units / pow);
  if (precision > 0) {
    std::string frac = std::to_string(units % pow);
    frac.insert(0, static_cast<std::size_t>(precision) - frac.size(), '0');
    out += "." + frac;
  }
  return out;
}

}  // namespace stvf
