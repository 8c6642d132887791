#include "twred/weight.hpp"

#include "twred/error.hpp"

#include <ostream>

namespace twred {

const BigInt& Weight::value() const {
  if (infinite_) throw InvariantError("value() of an infinite weight");
  return value_;
}

Weight& Weight::operator+=(const Weight& o) {
  if (infinite_) return *this;
  if (o.infinite_) {
    infinite_ = true;
    value_ = 0;
    return *this;
  }
  value_ += o.value_;
  return *this;
}

Weight operator-(Weight a, const BigInt& b) {
  if (!a.infinite_) a.value_ -= b;
  return a;
}

std::strong_ordering operator<=>(const Weight& a, const Weight& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string Weight::to_string() const { return infinite_ ? "inf" : value_.str(); }

Weight Weight::from_string(const std::string& s) {
  if (s == "inf") return infinity();
  try {
    std::size_t i = (s.size() > 1 && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw std::runtime_error("empty");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::runtime_error("digit");
    return Weight(BigInt(s));
  } catch (const std::exception&) {
    throw ParseError("not a weight: '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.to_string(); }

}  // namespace twred
