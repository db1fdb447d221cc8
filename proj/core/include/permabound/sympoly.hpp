#ifndef PERMABOUND_SYMPOLY_HPP
#define PERMABOUND_SYMPOLY_HPP

#include <vector>

#include "permabound/matrix.hpp"
#include "permabound/partition.hpp"

namespace permabound {

/// Vector of nonnegative finite weights.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> values);

    int size() const { return static_cast<int>(values_.size()); }
    double operator[](int i) const { return values_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& values() const { return values_; }

private:
    std::vector<double> values_;
};

/// e_m(y): sum over all m-element subsets of the product of their entries.
/// Evaluated by the one-pass prefix recurrence, O(n m); falls back to the
/// log-domain recurrence when intermediates exceed ~1e300. e_0 = 1.
double esym(const WeightVector& y, int m);

/// ln e_m(y); -inf when e_m = 0. Log-sum-exp recurrence, safe for inputs
/// whose symmetric sums overflow double.
double log_esym(const WeightVector& y, int m);

/// Binomial-normalized mean S_m = e_m(y) / C(n,m), 1 <= m <= n.
/// The sequence (S_m)^(1/m) is nonincreasing for nonnegative inputs.
double maclaurin_mean(const WeightVector& y, int m);

/// Per-row, per-block averages of squared moduli of the matrix columns.
class BlockColumnMeans {
public:
    BlockColumnMeans(std::vector<double> alpha, ColumnPartition partition, int n_rows);

    double at(int row, int block) const {
        return alpha_[static_cast<std::size_t>(row) * static_cast<std::size_t>(partition_.block_count()) +
                      static_cast<std::size_t>(block)];
    }
    /// alpha_{., k} as a weight vector over rows.
    WeightVector block_column(int block) const;
    const ColumnPartition& partition() const { return partition_; }
    int n_rows() const { return n_rows_; }

private:
    std::vector<double> alpha_; // row-major n_rows x d
    ColumnPartition partition_;
    int n_rows_;
};

/// alpha[j][k] = (1/m_k) * sum over r in block k of |z_{j,r}|^2.
BlockColumnMeans compute_alpha(const ComplexMatrix& z, const ColumnPartition& partition);

} // namespace permabound

#endif
