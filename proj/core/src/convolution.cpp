#include "permabound/convolution.hpp"

#include <cmath>
#include <stdexcept>

namespace permabound {

SetFunction::SetFunction(int universe, int cardinality, std::vector<double> values)
    : n_(universe), k_(cardinality), values_(std::move(values)) {
    if (universe < 0 || universe > kMaxUniverse)
        throw std::invalid_argument("SetFunction: universe out of range");
    if (cardinality < 0 || cardinality > universe)
        throw std::invalid_argument("SetFunction: cardinality out of range");
    if (values_.size() != binom64(universe, cardinality))
        throw std::invalid_argument("SetFunction: table size must be binom(n,k)");
    for (double v : values_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("SetFunction: values must be finite and nonnegative");
}

SetFunction SetFunction::constant(int universe, int cardinality, double value) {
    return {universe, cardinality,
            std::vector<double>(static_cast<std::size_t>(binom64(universe, cardinality)), value)};
}

double SetFunction::at(const IndexSubset& s) const {
    if (s.size() != k_)
        throw std::invalid_argument("SetFunction: queried subset has wrong cardinality");
    return values_[static_cast<std::size_t>(combination_rank(s))];
}

double ProductSetFunction::at(const IndexSubset& s) const {
    double prod = 1.0;
    for (int j : s.elements()) prod *= weights_[j];
    return prod;
}

double conv_m(const ProductSetFunction& g, const SetFunction& h, int m, const IndexSubset& J) {
    int l = J.size();
    if (m < 0 || m > l) throw std::invalid_argument("conv_m: m out of range");
    if (h.cardinality() != l - m)
        throw std::invalid_argument("conv_m: h cardinality must equal |J| - m");
    double sum = 0.0;
    for (IndexSubset I : subsets_of(J, m)) sum += g.at(I) * h.at(J.difference(I));
    return sum;
}

InequalityReport master_inequality_check(const ProductSetFunction& g, const SetFunction& h, int n,
                                         int l, int m) {
    if (!(0 <= m && m <= l && l <= n))
        throw std::invalid_argument("master_inequality_check: need 0 <= m <= l <= n");
    if (g.universe() != n || h.universe() != n || h.cardinality() != l - m)
        throw std::invalid_argument("master_inequality_check: shape mismatch");

    double binom_lm = static_cast<double>(binom64(l, m));
    double lhs = 0.0;
    for (IndexSubset J : iter_subsets(n, l)) {
        double c = conv_m(g, h, m, J) / binom_lm;
        lhs += c * c;
    }
    lhs /= static_cast<double>(binom64(n, l));

    double g_sq = 0.0;
    for (IndexSubset I : iter_subsets(n, m)) {
        double v = g.at(I);
        g_sq += v * v;
    }
    g_sq /= static_cast<double>(binom64(n, m));

    double h_sq = 0.0;
    for (IndexSubset K : iter_subsets(n, l - m)) {
        double v = h.at(K);
        h_sq += v * v;
    }
    h_sq /= static_cast<double>(binom64(n, l - m));

    double rhs = g_sq * h_sq;
    return {lhs, rhs, rhs - lhs, lhs <= rhs * (1.0 + 1e-12)};
}

std::set<EqualityCondition> classify_equality(const ProductSetFunction& g, const SetFunction& h,
                                              int n, int l, int m, double tol) {
    if (!(0 <= m && m <= l && l <= n))
        throw std::invalid_argument("classify_equality: need 0 <= m <= l <= n");
    std::set<EqualityCondition> out;

    if (m == 0 || m == l) out.insert(EqualityCondition::degenerate_order);

    double gmax = 0.0;
    for (int j = 0; j < n; ++j) gmax = std::max(gmax, g.weights()[j]);
    double g_thresh = tol * (gmax > 0.0 ? gmax : 1.0);
    int positive = 0;
    for (int j = 0; j < n; ++j)
        if (g.weights()[j] > g_thresh) ++positive;
    if (positive <= m - 1) out.insert(EqualityCondition::few_positive_weights);

    double hmax = 0.0;
    for (double v : h.values()) hmax = std::max(hmax, v);
    if (hmax <= tol) out.insert(EqualityCondition::h_vanishes);

    if (l == n) {
        // estimate x at the first pair with h above threshold, verify globally
        double x = 0.0;
        bool found = false;
        for (IndexSubset I : iter_subsets(n, m)) {
            double hv = h.at(I.complement());
            if (hv > tol * (1.0 + hmax)) {
                x = g.at(I) / hv;
                found = true;
                break;
            }
        }
        bool ok = true;
        for (IndexSubset I : iter_subsets(n, m)) {
            double gv = g.at(I);
            double hv = h.at(I.complement());
            if (found) {
                if (std::abs(gv - x * hv) > tol * (1.0 + gv + x * hv)) { ok = false; break; }
            } else {
                // h vanishes on all complements; need g == 0 there as well (x = 0)
                if (gv > tol * (1.0 + gmax)) { ok = false; break; }
            }
        }
        if (ok) out.insert(EqualityCondition::complement_proportional);
    }

    bool g_const = true;
    for (int j = 1; j < n; ++j)
        if (std::abs(g.weights()[j] - g.weights()[0]) > tol * (1.0 + std::abs(g.weights()[0]))) {
            g_const = false;
            break;
        }
    bool h_const = true;
    for (double v : h.values())
        if (std::abs(v - h.values()[0]) > tol * (1.0 + std::abs(h.values()[0]))) {
            h_const = false;
            break;
        }
    if (g_const && h_const) out.insert(EqualityCondition::both_constant);

    return out;
}

const char* equality_condition_label(EqualityCondition c) {
    switch (c) {
        case EqualityCondition::degenerate_order: return "i";
        case EqualityCondition::few_positive_weights: return "ii";
        case EqualityCondition::h_vanishes: return "iii";
        case EqualityCondition::complement_proportional: return "iv";
        case EqualityCondition::both_constant: return "v";
    }
    return "?";
}

ConvCoefficients::ConvCoefficients(int l, int m, int n) : l_(l), m_(m), n_(n) {
    if (!(0 <= m && m <= l && l <= n))
        throw std::invalid_argument("conv_coefficients: need 0 <= m <= l <= n");

    c_ = ExactRational(binomial_exact(static_cast<long>(l), static_cast<unsigned>(m)) *
                       binomial_exact(static_cast<long>(n - l + m), static_cast<unsigned>(m)) /
                       binomial_exact(static_cast<long>(n), static_cast<unsigned>(m)));

    row_offset_.resize(static_cast<std::size_t>(m) + 1);
    for (int a = 0; a <= m; ++a) {
        row_offset_[static_cast<std::size_t>(a)] = f_.size();
        for (int b = 0; b + a <= m; ++b) {
            ExactRational num = binomial_exact(static_cast<long>(n - l), static_cast<unsigned>(m - a - b)) *
                                binomial_exact(static_cast<long>(l), static_cast<unsigned>(b));
            ExactRational mb = binomial_exact(static_cast<long>(m - a), static_cast<unsigned>(b));
            ExactRational den = mb * mb * binomial_exact(static_cast<long>(n), static_cast<unsigned>(m - a));
            f_.push_back(num / den);
        }
    }

    // per-a normalization: sum_b f(a,b) C(m-a,b)^2 = 1
    for (int a = 0; a <= m; ++a) {
        ExactRational sum = 0;
        for (int b = 0; b + a <= m; ++b) {
            ExactRational mb = binomial_exact(static_cast<long>(m - a), static_cast<unsigned>(b));
            sum += f(a, b) * mb * mb;
        }
        if (sum != ExactRational(1))
            throw std::logic_error("conv_coefficients: per-a normalization identity failed");
    }

    // per-b column sum: sum_a f(a,b) C(m-b,a) C(l-m-b, m-a-b) C(n-l+b, b) = C
    int bmax = std::min(m, l - m);
    for (int b = 0; b <= bmax; ++b) {
        ExactRational sum = 0;
        for (int a = std::max(0, 2 * m - l); a <= m - b; ++a) {
            sum += f(a, b) *
                   binomial_exact(static_cast<long>(m - b), static_cast<unsigned>(a)) *
                   binomial_exact(static_cast<long>(l - m - b), static_cast<unsigned>(m - a - b)) *
                   binomial_exact(static_cast<long>(n - l + b), static_cast<unsigned>(b));
        }
        if (sum != c_)
            throw std::logic_error("conv_coefficients: column-sum identity failed");
    }

    // alternate form of the constant
    ExactRational alt = binomial_exact(static_cast<long>(n), static_cast<unsigned>(l)) *
                        binomial_exact(static_cast<long>(l), static_cast<unsigned>(m)) *
                        binomial_exact(static_cast<long>(l), static_cast<unsigned>(m)) /
                        (binomial_exact(static_cast<long>(n), static_cast<unsigned>(m)) *
                         binomial_exact(static_cast<long>(n), static_cast<unsigned>(l - m)));
    if (alt != c_)
        throw std::logic_error("conv_coefficients: alternate constant form failed");

    // positivity pattern
    for (int a = 0; a <= m; ++a)
        for (int b = 0; b + a <= m; ++b) {
            bool expect = (m - a - b) <= (n - l);
            if ((f(a, b) > ExactRational(0)) != expect)
                throw std::logic_error("conv_coefficients: positivity pattern failed");
        }
}

const ExactRational& ConvCoefficients::f(int a, int b) const {
    if (a < 0 || b < 0 || a + b > m_)
        throw std::invalid_argument("ConvCoefficients::f: need a, b >= 0 and a + b <= m");
    return f_[row_offset_[static_cast<std::size_t>(a)] + static_cast<std::size_t>(b)];
}

bool ConvCoefficients::f_positive(int a, int b) const { return f(a, b) > ExactRational(0); }

PfaffSaalschutzReport pfaff_saalschutz_check(const ExactRational& x, const ExactRational& y, int m,
                                             int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("pfaff_saalschutz_check: m, n >= 0");
    ExactRational lhs = 0;
    for (int k = 0; k <= std::min(m, n); ++k) {
        lhs += binomial_exact(x, static_cast<unsigned>(m - k)) *
               binomial_exact(y, static_cast<unsigned>(n - k)) *
               binomial_exact(x + y + ExactRational(k), static_cast<unsigned>(k));
    }
    ExactRational rhs = binomial_exact(x + ExactRational(n), static_cast<unsigned>(m)) *
                        binomial_exact(y + ExactRational(m), static_cast<unsigned>(n));
    bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

} // namespace permabound
