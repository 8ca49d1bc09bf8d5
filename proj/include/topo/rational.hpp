#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

namespace topo {

/// A reduced rational with a single point at infinity (1/0).
///
/// Finite values keep the denominator positive and the sign on the
/// numerator; infinity is uniquely represented as 1/0 (slopes are
/// unoriented, so -1/0 normalizes to 1/0). The pair (0,0) is forbidden.
class ExtendedSlope {
public:
    constexpr ExtendedSlope() : num_(0), den_(1) {}
    constexpr ExtendedSlope(long long n) : num_(n), den_(1) {}

    ExtendedSlope(long long n, long long d) : num_(n), den_(d) { reduce(); }

    static ExtendedSlope infinity() { return ExtendedSlope(1, 0); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    // Largest integer <= value; finite values only.
    long long floor() const {
        if (is_infinite()) throw std::domain_error("floor of infinity");
        long long q = num_ / den_;
        if (num_ % den_ != 0 && num_ < 0) --q;
        return q;
    }

    /// 1/r, projectively: 1/0 = inf, 1/inf = 0.
    ExtendedSlope reciprocal() const { return ExtendedSlope(den_, num_); }

    ExtendedSlope operator-() const {
        return is_infinite() ? *this : ExtendedSlope(-num_, den_);
    }

    friend ExtendedSlope operator+(const ExtendedSlope& a, const ExtendedSlope& b) {
        if (a.is_infinite() || b.is_infinite()) {
            if (a.is_infinite() && b.is_infinite())
                throw std::domain_error("inf + inf is undefined");
            return infinity();
        }
        return ExtendedSlope(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend ExtendedSlope operator-(const ExtendedSlope& a, const ExtendedSlope& b) {
        return a + (-b);
    }
    friend ExtendedSlope operator*(const ExtendedSlope& a, const ExtendedSlope& b) {
        return ExtendedSlope(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend ExtendedSlope operator/(const ExtendedSlope& a, const ExtendedSlope& b) {
        return a * b.reciprocal();
    }

    friend bool operator==(const ExtendedSlope& a, const ExtendedSlope& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExtendedSlope& a, const ExtendedSlope& b) {
        return !(a == b);
    }
    // Finite order; infinity sorts last.
    friend bool operator<(const ExtendedSlope& a, const ExtendedSlope& b) {
        if (a.is_infinite()) return false;
        if (b.is_infinite()) return true;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const {
        if (is_infinite()) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Parses "p", "p/q", or "inf" (also "1/0"). Throws on junk.
    static ExtendedSlope parse(std::string_view s);

private:
    void reduce() {
        if (num_ == 0 && den_ == 0)
            throw std::domain_error("0/0 is not a slope");
        if (den_ == 0) { num_ = 1; return; }
        if (num_ == 0) { den_ = 1; return; }
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        num_ /= g;
        den_ /= g;
    }

    long long num_;
    long long den_;  // >= 0; 0 encodes infinity
};

}  // namespace topo
