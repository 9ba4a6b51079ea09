#ifndef FENSHU_BIGRAT_HPP
#define FENSHU_BIGRAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace fenshu {

using BigInt = boost::multiprecision::cpp_int;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Exact non-negative rational. Results are never reduced implicitly:
/// 20/36 stays 20/36 until reduce() is asked for.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ <= 0) throw DomainError("rational: denominator must be >= 1");
        if (num_ < 0) throw DomainError("rational: negative numerator");
    }
    explicit Rational(const BigInt& whole) : num_(whole), den_(1) {
        if (num_ < 0) throw DomainError("rational: negative value");
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_proper() const { return num_ > 0 && num_ < den_; }
    bool is_reduced() const { return boost::multiprecision::gcd(num_, den_) == 1; }
    bool is_integer() const { return num_ % den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    /// Value equality (cross multiplication); literal shape may differ.
    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    /// True when numerator and denominator match digit for digit.
    bool identical(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }

    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

private:
    BigInt num_;
    BigInt den_;
};

/// Integer part plus remainder over the *original* denominator,
/// e.g. 74000/36 -> (2055, 20/36).
inline std::pair<BigInt, Rational> to_mixed(const Rational& r) {
    BigInt whole = r.num() / r.den();
    return {whole, Rational(r.num() % r.den(), r.den())};
}

} // namespace fenshu

#endif
