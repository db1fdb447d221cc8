#ifndef PERMABOUND_RATIONAL_HPP
#define PERMABOUND_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace permabound {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class ExactRational {
public:
    ExactRational() : q_(0) {}
    ExactRational(long value) : q_(static_cast<signed long>(value)) {} // NOLINT: implicit by design
    ExactRational(long num, long den);
    explicit ExactRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    static ExactRational from_string(const std::string& text); // "p" or "p/q"

    const mpq_class& raw() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    std::string str() const;

    ExactRational operator-() const { return ExactRational(mpq_class(-q_)); }
    ExactRational& operator+=(const ExactRational& o) { q_ += o.q_; return *this; }
    ExactRational& operator-=(const ExactRational& o) { q_ -= o.q_; return *this; }
    ExactRational& operator*=(const ExactRational& o) { q_ *= o.q_; return *this; }
    ExactRational& operator/=(const ExactRational& o);

    friend ExactRational operator+(ExactRational a, const ExactRational& b) { return a += b; }
    friend ExactRational operator-(ExactRational a, const ExactRational& b) { return a -= b; }
    friend ExactRational operator*(ExactRational a, const ExactRational& b) { return a *= b; }
    friend ExactRational operator/(ExactRational a, const ExactRational& b) { return a /= b; }

    friend bool operator==(const ExactRational& a, const ExactRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const ExactRational& a, const ExactRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const ExactRational& a, const ExactRational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const ExactRational& a, const ExactRational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const ExactRational& a, const ExactRational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const ExactRational& a, const ExactRational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

/// k! as an exact integer.
ExactRational factorial_exact(unsigned k);

/// Generalized binomial x(x-1)...(x-k+1)/k! for rational x. binom(x,0) = 1;
/// for integer 0 <= x < k the falling factorial hits zero.
ExactRational binomial_exact(const ExactRational& x, unsigned k);
ExactRational binomial_exact(long n, unsigned k);

} // namespace permabound

#endif
