#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>

namespace twred {

using BigInt = boost::multiprecision::cpp_int;

/// Clause weight: an arbitrary-precision integer or +infinity.
/// Addition saturates at infinity; infinity compares above every finite value.
class Weight {
 public:
  Weight() = default;
  Weight(BigInt v) : value_(std::move(v)) {}  // NOLINT: implicit by design of the domain
  Weight(long long v) : value_(v) {}          // NOLINT
  Weight(int v) : value_(v) {}                // NOLINT

  static Weight infinity() {
    Weight w;
    w.infinite_ = true;
    return w;
  }

  bool is_infinite() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  bool is_zero() const { return !infinite_ && value_ == 0; }

  /// Finite value. Throws InvariantError on infinity.
  const BigInt& value() const;

  Weight& operator+=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  /// Subtracts a finite amount; infinity stays infinite.
  friend Weight operator-(Weight a, const BigInt& b);

  friend bool operator==(const Weight& a, const Weight& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Weight& a, const Weight& b);

  /// "inf" or the decimal value.
  std::string to_string() const;
  /// Accepts "inf" or a decimal integer.
  static Weight from_string(const std::string& s);

 private:
  BigInt value_ = 0;
  bool infinite_ = false;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

}  // namespace twred
