#include "permabound/sympoly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace permabound {

namespace {

constexpr double kOverflowGuard = 1e300;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_sum_exp(double a, double b) {
    if (a == kNegInf) return b;
    if (b == kNegInf) return a;
    return a > b ? a + std::log1p(std::exp(b - a)) : b + std::log1p(std::exp(a - b));
}

// Prefix recurrence; returns false when an intermediate overflows the guard.
bool esym_linear(const std::vector<double>& y, int m, double& out) {
    std::vector<double> e(static_cast<std::size_t>(m) + 1, 0.0);
    e[0] = 1.0;
    for (double v : y) {
        for (int k = m; k >= 1; --k) {
            e[static_cast<std::size_t>(k)] += v * e[static_cast<std::size_t>(k) - 1];
            if (e[static_cast<std::size_t>(k)] > kOverflowGuard) return false;
        }
    }
    out = e[static_cast<std::size_t>(m)];
    return true;
}

} // namespace

WeightVector::WeightVector(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_)
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("WeightVector: entries must be finite and nonnegative");
}

double esym(const WeightVector& y, int m) {
    if (m < 0 || m > y.size()) throw std::invalid_argument("esym: m out of range");
    if (m == 0) return 1.0;
    double out;
    if (esym_linear(y.values(), m, out)) return out;
    return std::exp(log_esym(y, m));
}

double log_esym(const WeightVector& y, int m) {
    if (m < 0 || m > y.size()) throw std::invalid_argument("log_esym: m out of range");
    if (m == 0) return 0.0;
    std::vector<double> le(static_cast<std::size_t>(m) + 1, kNegInf);
    le[0] = 0.0;
    for (double v : y.values()) {
        double lv = v > 0.0 ? std::log(v) : kNegInf;
        for (int k = m; k >= 1; --k)
            le[static_cast<std::size_t>(k)] =
                log_sum_exp(le[static_cast<std::size_t>(k)], lv + le[static_cast<std::size_t>(k) - 1]);
    }
    return le[static_cast<std::size_t>(m)];
}

double maclaurin_mean(const WeightVector& y, int m) {
    if (m < 1 || m > y.size()) throw std::invalid_argument("maclaurin_mean: m out of range");
    return esym(y, m) / static_cast<double>(binom64(y.size(), m));
}

BlockColumnMeans::BlockColumnMeans(std::vector<double> alpha, ColumnPartition partition, int n_rows)
    : alpha_(std::move(alpha)), partition_(std::move(partition)), n_rows_(n_rows) {
    if (alpha_.size() != static_cast<std::size_t>(n_rows) *
                             static_cast<std::size_t>(partition_.block_count()))
        throw std::invalid_argument("BlockColumnMeans: shape mismatch");
}

WeightVector BlockColumnMeans::block_column(int block) const {
    std::vector<double> col(static_cast<std::size_t>(n_rows_));
    for (int j = 0; j < n_rows_; ++j) col[static_cast<std::size_t>(j)] = at(j, block);
    return WeightVector(std::move(col));
}

BlockColumnMeans compute_alpha(const ComplexMatrix& z, const ColumnPartition& partition) {
    if (partition.universe().universe_size() > z.cols())
        throw std::invalid_argument("compute_alpha: partition universe exceeds matrix columns");
    int n = z.rows();
    int d = partition.block_count();
    std::vector<double> alpha(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        const IndexSubset& block = partition.blocks()[static_cast<std::size_t>(k)];
        double inv_m = 1.0 / block.size();
        for (int j = 0; j < n; ++j) {
            double s = 0.0;
            for (int r : block.elements()) s += std::norm(z.at(j, r));
            alpha[static_cast<std::size_t>(j) * static_cast<std::size_t>(d) +
                  static_cast<std::size_t>(k)] = s * inv_m;
        }
    }
    return {std::move(alpha), partition, n};
}

} // namespace permabound
