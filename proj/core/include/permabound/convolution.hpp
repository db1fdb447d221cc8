#ifndef PERMABOUND_CONVOLUTION_HPP
#define PERMABOUND_CONVOLUTION_HPP

#include <set>
#include <vector>

#include "permabound/rational.hpp"
#include "permabound/subset.hpp"
#include "permabound/sympoly.hpp"

namespace permabound {

/// Nonnegative set function on the k-subsets of {0..n-1}, stored densely by
/// combination rank (ascending-bitmask order).
class SetFunction {
public:
    SetFunction(int universe, int cardinality, std::vector<double> values);
    static SetFunction constant(int universe, int cardinality, double value);

    int universe() const { return n_; }
    int cardinality() const { return k_; }
    const std::vector<double>& values() const { return values_; }

    double at(const IndexSubset& s) const;
    double at_rank(std::uint64_t rank) const { return values_[static_cast<std::size_t>(rank)]; }

private:
    int n_;
    int k_;
    std::vector<double> values_;
};

/// Product-form set function g(I) = prod_{j in I} g_j with nonnegative weights.
class ProductSetFunction {
public:
    explicit ProductSetFunction(WeightVector weights) : weights_(std::move(weights)) {}

    int universe() const { return weights_.size(); }
    const WeightVector& weights() const { return weights_; }
    double at(const IndexSubset& s) const;

private:
    WeightVector weights_;
};

/// (g *_m h)(J) = sum over I subset of J, |I| = m, of g(I) h(J \ I).
/// h must be defined on (|J| - m)-subsets of the same universe.
double conv_m(const ProductSetFunction& g, const SetFunction& h, int m, const IndexSubset& J);

struct InequalityReport {
    double lhs;
    double rhs;
    double slack; // rhs - lhs
    bool holds;   // lhs <= rhs * (1 + 1e-12)
};

/// Mean-square comparison of the normalized m-convolution against the
/// product of the normalized mean squares of g and h, both sides computed
/// exactly as defined. Requires 0 <= m <= l <= n.
InequalityReport master_inequality_check(const ProductSetFunction& g, const SetFunction& h, int n,
                                         int l, int m);

/// Sufficient equality conditions for the master inequality.
enum class EqualityCondition {
    degenerate_order,    // (i)   m == 0 or m == l
    few_positive_weights,// (ii)  #{j : g_j > 0} <= m - 1
    h_vanishes,          // (iii) h identically zero
    complement_proportional, // (iv) l == n and g(I) = x h(complement) for some x >= 0
    both_constant        // (v)   g constant and h constant
};

std::set<EqualityCondition> classify_equality(const ProductSetFunction& g, const SetFunction& h,
                                              int n, int l, int m, double tol = 1e-9);

const char* equality_condition_label(EqualityCondition c); // "i".."v"

/// Exact coefficients of the single-step reduction: the constant
/// C(l,m,n) = C(l,m) C(n-l+m,m) / C(n,m) and the table f(a,b) for a+b <= m.
/// Construction verifies the defining identities (the per-a normalization,
/// the per-b column sum equal to C, and the alternate form of C) in exact
/// rational arithmetic and throws std::logic_error on any mismatch.
class ConvCoefficients {
public:
    ConvCoefficients(int l, int m, int n);

    int l() const { return l_; }
    int m() const { return m_; }
    int n() const { return n_; }
    const ExactRational& constant() const { return c_; }
    /// f(a,b); requires a, b >= 0 and a + b <= m.
    const ExactRational& f(int a, int b) const;
    /// f(a,b) > 0 iff m - a - b <= n - l.
    bool f_positive(int a, int b) const;

private:
    int l_, m_, n_;
    ExactRational c_;
    std::vector<ExactRational> f_; // row a: b = 0..m-a
    std::vector<std::size_t> row_offset_;
};

inline ConvCoefficients conv_coefficients(int l, int m, int n) { return {l, m, n}; }

struct PfaffSaalschutzReport {
    ExactRational lhs;
    ExactRational rhs;
    bool equal;
};

/// Terminating hypergeometric summation identity over generalized binomials:
/// sum_{k=0}^{min(m,n)} C(x,m-k) C(y,n-k) C(x+y+k,k) = C(x+n,m) C(y+m,n),
/// evaluated exactly.
PfaffSaalschutzReport pfaff_saalschutz_check(const ExactRational& x, const ExactRational& y, int m,
                                             int n);

} // namespace permabound

#endif
