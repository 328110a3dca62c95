#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toepl {

// Arbitrary-precision signed integer, sign + magnitude in base 2^32.
// Block lengths grow geometrically with the depth of a coding spec, so every
// length computation in the library goes through this type.
class BigInt {
  public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT: implicit by design
    static BigInt from_string(const std::string& dec);

    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncates toward zero
    BigInt operator%(const BigInt& o) const;  // sign follows dividend
    BigInt operator-() const;

    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    bool operator==(const BigInt& o) const { return cmp(o) == 0; }
    bool operator!=(const BigInt& o) const { return cmp(o) != 0; }
    bool operator<(const BigInt& o) const { return cmp(o) < 0; }
    bool operator<=(const BigInt& o) const { return cmp(o) <= 0; }
    bool operator>(const BigInt& o) const { return cmp(o) > 0; }
    bool operator>=(const BigInt& o) const { return cmp(o) >= 0; }

    // Euclidean remainder in [0, m), m > 0.
    BigInt mod_floor(const BigInt& m) const;

    BigInt pow(std::uint64_t e) const;
    BigInt abs() const;

    bool is_zero() const { return mag_.empty(); }
    bool is_negative() const { return neg_; }
    int sign() const { return mag_.empty() ? 0 : (neg_ ? -1 : 1); }
    bool is_even() const { return mag_.empty() || (mag_[0] & 1u) == 0; }

    // Whether the value fits in int64 / size_t; fetch throws RangeError otherwise.
    bool fits_i64() const;
    std::int64_t to_i64() const;
    double to_double() const;

    std::string to_string() const;

  private:
    int cmp(const BigInt& o) const;
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
    void trim();

    bool neg_ = false;
    std::vector<std::uint32_t> mag_;  // little endian limbs, no trailing zeros
};

// Exact rational with normalized representation (gcd 1, positive denominator).
class BigRational {
  public:
    BigRational() : num_(0), den_(1) {}
    BigRational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT
    BigRational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT
    BigRational(BigInt n, BigInt d);

    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;

    bool operator==(const BigRational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    bool operator<(const BigRational& o) const;
    bool operator<=(const BigRational& o) const { return *this < o || *this == o; }
    bool operator>(const BigRational& o) const { return o < *this; }
    bool operator>=(const BigRational& o) const { return o <= *this; }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    int sign() const { return num_.sign(); }
    double to_double() const;
    std::string to_string() const;  // "num/den", or "num" when den == 1

  private:
    BigInt num_;
    BigInt den_;
};

BigInt gcd(BigInt a, BigInt b);

}  // namespace toepl
