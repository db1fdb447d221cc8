#ifndef PERMABOUND_LINFORMS_HPP
#define PERMABOUND_LINFORMS_HPP

#include <complex>
#include <map>
#include <vector>

#include "permabound/matrix.hpp"
#include "permabound/rational.hpp"

namespace permabound {

/// Multi-exponent (m_1,...,m_d) of a monomial x_1^{m_1} ... x_d^{m_d}.
class ExponentVector {
public:
    explicit ExponentVector(std::vector<int> exponents);

    int dims() const { return static_cast<int>(m_.size()); }
    int operator[](int k) const { return m_[static_cast<std::size_t>(k)]; }
    const std::vector<int>& exponents() const { return m_; }
    /// Total degree sum_k m_k.
    int total_degree() const;
    /// prod_k m_k! exactly.
    ExactRational multifactorial() const;

    friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.m_ == b.m_; }
    friend bool operator<(const ExponentVector& a, const ExponentVector& b) { return a.m_ < b.m_; }

private:
    std::vector<int> m_;
};

/// Homogeneous polynomial in d variables with complex coefficients, sparse
/// term map keyed by packed exponent vectors.
class SparsePolynomial {
public:
    SparsePolynomial(int dims, int pack_width);

    int dims() const { return dims_; }
    std::size_t term_count() const { return terms_.size(); }
    Complex coeff(const ExponentVector& m) const;
    void add_term(const ExponentVector& m, Complex c);

    /// Terms in ascending packed-key order (deterministic).
    std::vector<std::pair<ExponentVector, Complex>> terms() const;

private:
    std::uint64_t pack(const ExponentVector& m) const;
    ExponentVector unpack(std::uint64_t key) const;

    int dims_;
    int pack_width_; // bits per component
    std::map<std::uint64_t, Complex> terms_;

    friend SparsePolynomial expand_product(const ComplexMatrix&);
};

/// Full expansion of prod_{j=1}^n (sum_k z_{j,k} x_k) by iterated sparse
/// multiplication. Throws size_error when the monomial count C(n+d-1, d-1)
/// exceeds the expansion budget or the exponents cannot be packed.
SparsePolynomial expand_product(const ComplexMatrix& z);

/// Coefficient of x^m via the repeated-column permanent: builds Z' by taking
/// column k of Z m_k times (nondecreasing column order) and returns
/// per(Z') / (m_1! ... m_d!). Requires total degree == n; the exact-permanent
/// cap applies to the repeated n x n matrix.
Complex coeff_via_permanent(const ComplexMatrix& z, const ExponentVector& m, int workers = 1,
                            int cap = 30);

/// (n!/m!) prod_{k: m_k >= 1} (e_{m_k}(|z_{.,k}|^2) / C(n,m_k))^(1/2);
/// upper-bounds the modulus of the coefficient of x^m.
double coeff_bound(const ComplexMatrix& z, const ExponentVector& m);

/// Number of sequences in {1..d}^n with occurrence vector m: the multinomial
/// n! / (m_1! ... m_d!). Requires total degree == n.
ExactRational weight_count(int n, const ExponentVector& m);

} // namespace permabound

#endif
