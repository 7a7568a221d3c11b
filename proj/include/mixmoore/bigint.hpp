#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <Eigen/Core>

namespace mixmoore {

/// Arbitrary-precision signed integer.
///
/// A thin value wrapper over boost's cpp_int. The wrapper exists so that the
/// type behaves like a plain arithmetic scalar inside Eigen expressions;
/// cpp_int's own expression templates and constructor overloads do not mix
/// with Eigen's product kernels.
class BigInt {
 public:
  using Backend = boost::multiprecision::cpp_int;

  BigInt() = default;
  BigInt(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(unsigned long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  BigInt(unsigned long long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit BigInt(Backend v) : v_(std::move(v)) {}
  explicit BigInt(const std::string& decimal) : v_(decimal) {}

  BigInt& operator+=(const BigInt& o) {
    v_ += o.v_;
    return *this;
  }
  BigInt& operator-=(const BigInt& o) {
    v_ -= o.v_;
    return *this;
  }
  BigInt& operator*=(const BigInt& o) {
    v_ *= o.v_;
    return *this;
  }
  /// Truncating division, as for built-in integers.
  BigInt& operator/=(const BigInt& o) {
    v_ /= o.v_;
    return *this;
  }
  BigInt& operator%=(const BigInt& o) {
    v_ %= o.v_;
    return *this;
  }

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }
  friend BigInt operator-(BigInt a) {
    a.v_ = -a.v_;
    return a;
  }

  friend bool operator==(const BigInt& a, const BigInt& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    const int c = a.v_.compare(b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
  [[nodiscard]] int sign() const { return v_.sign(); }
  [[nodiscard]] const Backend& backend() const { return v_; }

  /// Value as int64; throws std::overflow_error when it does not fit.
  [[nodiscard]] std::int64_t to_int64() const;
  [[nodiscard]] std::string str() const { return v_.str(); }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& a) { return os << a.v_; }

 private:
  Backend v_;
};

inline BigInt abs(const BigInt& a) { return a.sign() < 0 ? -a : a; }

inline std::int64_t BigInt::to_int64() const {
  if (v_ > std::numeric_limits<std::int64_t>::max() ||
      v_ < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("BigInt value " + v_.str() + " does not fit in int64");
  }
  return v_.convert_to<std::int64_t>();
}

}  // namespace mixmoore

namespace Eigen {

template <>
struct NumTraits<mixmoore::BigInt> : GenericNumTraits<mixmoore::BigInt> {
  using Real = mixmoore::BigInt;
  using NonInteger = mixmoore::BigInt;
  using Literal = mixmoore::BigInt;
  using Nested = mixmoore::BigInt;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 8,
    MulCost = 16
  };
  static inline int digits10() { return 0; }
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline Real highest() { return 0; }
  static inline Real lowest() { return 0; }
};

}  // namespace Eigen
