#include "permabound/rational.hpp"

#include <stdexcept>

namespace permabound {

ExactRational::ExactRational(long num, long den) {
    if (den == 0) throw std::invalid_argument("ExactRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

ExactRational ExactRational::from_string(const std::string& text) {
    try {
        mpq_class q(text);
        q.canonicalize();
        return ExactRational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("ExactRational: cannot parse '" + text + "'");
    }
}

ExactRational& ExactRational::operator/=(const ExactRational& o) {
    if (o.is_zero()) throw std::invalid_argument("ExactRational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string ExactRational::str() const {
    return q_.get_str();
}

ExactRational factorial_exact(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return ExactRational(mpq_class(f));
}

ExactRational binomial_exact(const ExactRational& x, unsigned k) {
    mpq_class prod(1);
    mpq_class term = x.raw();
    for (unsigned i = 0; i < k; ++i) {
        prod *= term;
        term -= 1;
    }
    mpz_class kfac;
    mpz_fac_ui(kfac.get_mpz_t(), k);
    prod /= mpq_class(kfac);
    return ExactRational(std::move(prod));
}

ExactRational binomial_exact(long n, unsigned k) {
    if (n >= 0 && static_cast<unsigned long>(n) >= k) {
        // nonnegative integer case straight from GMP
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), k);
        return ExactRational(mpq_class(b));
    }
    return binomial_exact(ExactRational(n), k);
}

} // namespace permabound
