#include "toepl/bigint.hpp"

#include <algorithm>
#include <cmath>

#include "toepl/errors.hpp"

namespace toepl {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(std::int64_t v) {
    neg_ = v < 0;
    std::uint64_t m = neg_ ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
    while (m != 0) {
        mag_.push_back(static_cast<std::uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt BigInt::from_string(const std::string& dec) {
    BigInt out;
    std::size_t i = 0;
    bool neg = false;
    if (i < dec.size() && (dec[i] == '+' || dec[i] == '-')) neg = dec[i++] == '-';
    if (i >= dec.size()) throw ArgError("BigInt::from_string: empty numeral");
    for (; i < dec.size(); ++i) {
        if (dec[i] < '0' || dec[i] > '9') throw ArgError("BigInt::from_string: bad digit");
        out = out * BigInt(10) + BigInt(dec[i] - '0');
    }
    out.neg_ = neg && !out.mag_.empty();
    return out;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

int BigInt::cmp(const BigInt& o) const {
    if (neg_ != o.neg_) return neg_ ? -1 : 1;
    int c = cmp_mag(mag_, o.mag_);
    return neg_ ? -c : c;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        std::uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r = a;
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t cur = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        borrow = cur < 0;
        if (cur < 0) cur += static_cast<std::int64_t>(kBase);
        r[i] = static_cast<std::uint32_t>(cur);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size() || carry; ++j) {
            std::uint64_t cur = r[i + j] + carry;
            if (j < b.size()) cur += static_cast<std::uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Schoolbook long division on 32-bit limbs (Knuth D without the fine tuning;
// quotient digit found by binary search on the partial remainder).
void BigInt::divmod_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (b.empty()) throw ArgError("BigInt: division by zero");
    q.assign(a.size(), 0);
    r.clear();
    for (std::size_t i = a.size(); i-- > 0;) {
        r.insert(r.begin(), a[i]);
        while (!r.empty() && r.back() == 0) r.pop_back();
        std::uint32_t lo = 0, hi = 0xffffffffu, digit = 0;
        while (lo <= hi) {
            std::uint32_t mid = lo + (hi - lo) / 2;
            std::vector<std::uint32_t> t = mul_mag(b, {mid});
            if (cmp_mag(t, r) <= 0) {
                digit = mid;
                if (mid == 0xffffffffu) break;
                lo = mid + 1;
            } else {
                if (mid == 0) break;
                hi = mid - 1;
            }
        }
        q[i] = digit;
        if (digit != 0) r = sub_mag(r, mul_mag(b, {digit}));
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (neg_ == o.neg_) {
        r.mag_ = add_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else if (cmp_mag(mag_, o.mag_) >= 0) {
        r.mag_ = sub_mag(mag_, o.mag_);
        r.neg_ = neg_;
    } else {
        r.mag_ = sub_mag(o.mag_, mag_);
        r.neg_ = o.neg_;
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.neg_ = !r.neg_;
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mul_mag(mag_, o.mag_);
    r.neg_ = !r.mag_.empty() && (neg_ != o.neg_);
    return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod_mag(mag_, o.mag_, q.mag_, r.mag_);
    q.neg_ = !q.mag_.empty() && (neg_ != o.neg_);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod_mag(mag_, o.mag_, q.mag_, r.mag_);
    r.neg_ = !r.mag_.empty() && neg_;
    return r;
}

BigInt BigInt::mod_floor(const BigInt& m) const {
    if (m.sign() <= 0) throw ArgError("BigInt::mod_floor: modulus must be positive");
    BigInt r = *this % m;
    if (r.is_negative()) r = r + m;
    return r;
}

BigInt BigInt::pow(std::uint64_t e) const {
    BigInt base = *this, acc = 1;
    while (e != 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.neg_ = false;
    return r;
}

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    std::uint64_t m = 0;
    if (mag_.size() >= 1) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return neg_ ? m <= (1ull << 63) : m < (1ull << 63);
}

std::int64_t BigInt::to_i64() const {
    if (!fits_i64()) throw RangeError("BigInt::to_i64: value does not fit in 64 bits");
    std::uint64_t m = 0;
    if (mag_.size() >= 1) m = mag_[0];
    if (mag_.size() == 2) m |= static_cast<std::uint64_t>(mag_[1]) << 32;
    return neg_ ? -static_cast<std::int64_t>(m) : static_cast<std::int64_t>(m);
}

double BigInt::to_double() const {
    double v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * 4294967296.0 + mag_[i];
    return neg_ ? -v : v;
}

std::string BigInt::to_string() const {
    if (mag_.empty()) return "0";
    std::vector<std::uint32_t> m = mag_;
    std::string digits;
    while (!m.empty()) {
        // divide by 10^9
        std::uint64_t rem = 0;
        for (std::size_t i = m.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<std::uint32_t>(cur / 1000000000ull);
            rem = cur % 1000000000ull;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (neg_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

BigRational::BigRational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw ArgError("BigRational: zero denominator");
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = gcd(num_, den_);
    if (g > BigInt(1)) {
        num_ = num_ / g;
        den_ = den_ / g;
    }
    if (num_.is_zero()) den_ = 1;
}

BigRational BigRational::operator+(const BigRational& o) const {
    return {num_ * o.den_ + o.num_ * den_, den_ * o.den_};
}
BigRational BigRational::operator-(const BigRational& o) const {
    return {num_ * o.den_ - o.num_ * den_, den_ * o.den_};
}
BigRational BigRational::operator*(const BigRational& o) const {
    return {num_ * o.num_, den_ * o.den_};
}
BigRational BigRational::operator/(const BigRational& o) const {
    if (o.num_.is_zero()) throw ArgError("BigRational: division by zero");
    return {num_ * o.den_, den_ * o.num_};
}

bool BigRational::operator<(const BigRational& o) const {
    return num_ * o.den_ < o.num_ * den_;
}

double BigRational::to_double() const { return num_.to_double() / den_.to_double(); }

std::string BigRational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

}  // namespace toepl
