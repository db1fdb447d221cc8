#include "permabound/linforms.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "permabound/bounds.hpp"
#include "permabound/errors.hpp"
#include "permabound/permanent.hpp"
#include "permabound/sympoly.hpp"

namespace permabound {

namespace {
constexpr std::uint64_t kExpandMonomialBudget = std::uint64_t{1} << 22;
}

ExponentVector::ExponentVector(std::vector<int> exponents) : m_(std::move(exponents)) {
    if (m_.empty()) throw std::invalid_argument("ExponentVector: empty");
    for (int v : m_)
        if (v < 0) throw std::invalid_argument("ExponentVector: negative exponent");
}

int ExponentVector::total_degree() const {
    int t = 0;
    for (int v : m_) t += v;
    return t;
}

ExactRational ExponentVector::multifactorial() const {
    ExactRational prod = 1;
    for (int v : m_) prod *= factorial_exact(static_cast<unsigned>(v));
    return prod;
}

SparsePolynomial::SparsePolynomial(int dims, int pack_width)
    : dims_(dims), pack_width_(pack_width) {
    if (dims <= 0) throw std::invalid_argument("SparsePolynomial: dims must be positive");
    if (pack_width <= 0 || dims * pack_width > 64)
        throw size_error("SparsePolynomial: exponent vector cannot be packed into 64 bits");
}

std::uint64_t SparsePolynomial::pack(const ExponentVector& m) const {
    if (m.dims() != dims_) throw std::invalid_argument("SparsePolynomial: dimension mismatch");
    std::uint64_t key = 0;
    for (int k = 0; k < dims_; ++k) {
        auto v = static_cast<std::uint64_t>(m[k]);
        if (v >= (std::uint64_t{1} << pack_width_))
            throw size_error("SparsePolynomial: exponent exceeds pack width");
        key |= v << (k * pack_width_);
    }
    return key;
}

ExponentVector SparsePolynomial::unpack(std::uint64_t key) const {
    std::vector<int> m(static_cast<std::size_t>(dims_));
    std::uint64_t mask = (std::uint64_t{1} << pack_width_) - 1;
    for (int k = 0; k < dims_; ++k)
        m[static_cast<std::size_t>(k)] = static_cast<int>((key >> (k * pack_width_)) & mask);
    return ExponentVector(std::move(m));
}

Complex SparsePolynomial::coeff(const ExponentVector& m) const {
    auto it = terms_.find(pack(m));
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second;
}

void SparsePolynomial::add_term(const ExponentVector& m, Complex c) {
    terms_[pack(m)] += c;
}

std::vector<std::pair<ExponentVector, Complex>> SparsePolynomial::terms() const {
    std::vector<std::pair<ExponentVector, Complex>> out;
    out.reserve(terms_.size());
    for (const auto& [key, c] : terms_) out.emplace_back(unpack(key), c);
    return out;
}

SparsePolynomial expand_product(const ComplexMatrix& z) {
    int n = z.rows();
    int d = z.cols();
    if (n == 0 || d == 0) throw std::invalid_argument("expand_product: empty matrix");

    // monomial count C(n+d-1, d-1) against the budget, overflow-safe
    double log_count = log_binomial(n + d - 1, d - 1);
    if (log_count > std::log(static_cast<double>(kExpandMonomialBudget)))
        throw size_error("expand_product: monomial budget exceeded");

    int width = std::bit_width(static_cast<unsigned>(n));
    if (d * width > 64) throw size_error("expand_product: exponent packing exceeds 64 bits");

    SparsePolynomial poly(d, width);
    poly.terms_[0] = Complex{1.0, 0.0}; // empty product

    for (int j = 0; j < n; ++j) {
        std::map<std::uint64_t, Complex> next;
        for (const auto& [key, c] : poly.terms_) {
            for (int k = 0; k < d; ++k) {
                Complex zjk = z.at(j, k);
                if (zjk == Complex{0.0, 0.0}) continue;
                std::uint64_t bumped = key + (std::uint64_t{1} << (k * width));
                next[bumped] += c * zjk;
            }
        }
        poly.terms_ = std::move(next);
    }
    return poly;
}

Complex coeff_via_permanent(const ComplexMatrix& z, const ExponentVector& m, int workers, int cap) {
    int n = z.rows();
    if (m.dims() != z.cols())
        throw std::invalid_argument("coeff_via_permanent: exponent dimension mismatch");
    if (m.total_degree() != n)
        throw std::invalid_argument("coeff_via_permanent: total degree must equal the row count");

    // canonical t: column k repeated m_k times, nondecreasing
    ComplexMatrix repeated = ComplexMatrix::zero(n, n);
    int col = 0;
    for (int k = 0; k < m.dims(); ++k)
        for (int rep = 0; rep < m[k]; ++rep) {
            for (int j = 0; j < n; ++j) repeated.mutable_at(j, col) = z.at(j, k);
            ++col;
        }

    Complex per = per_ryser(repeated, workers, cap);
    return per / m.multifactorial().to_double();
}

double coeff_bound(const ComplexMatrix& z, const ExponentVector& m) {
    int n = z.rows();
    if (m.dims() != z.cols())
        throw std::invalid_argument("coeff_bound: exponent dimension mismatch");
    if (m.total_degree() != n)
        throw std::invalid_argument("coeff_bound: total degree must equal the row count");

    double acc = log_factorial(n) - std::log(m.multifactorial().to_double());
    for (int k = 0; k < m.dims(); ++k) {
        if (m[k] == 0) continue; // empty factor contributes 1
        std::vector<double> w(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) w[static_cast<std::size_t>(j)] = std::norm(z.at(j, k));
        double le = log_esym(WeightVector(std::move(w)), m[k]);
        if (le == -std::numeric_limits<double>::infinity()) return 0.0;
        acc += 0.5 * (le - log_binomial(n, m[k]));
    }
    return std::exp(acc);
}

ExactRational weight_count(int n, const ExponentVector& m) {
    if (m.total_degree() != n)
        throw std::invalid_argument("weight_count: total degree must equal n");
    return factorial_exact(static_cast<unsigned>(n)) / m.multifactorial();
}

} // namespace permabound
