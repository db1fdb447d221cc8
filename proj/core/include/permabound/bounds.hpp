#ifndef PERMABOUND_BOUNDS_HPP
#define PERMABOUND_BOUNDS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "permabound/matrix.hpp"
#include "permabound/partition.hpp"
#include "permabound/sympoly.hpp"

namespace permabound {

/// ln(n!) from the integer definition (summed logs, memoized).
double log_factorial(int n);
/// ln C(n,k); -inf when C(n,k) = 0.
double log_binomial(int n, int k);
/// eta(k) = (k!)^(1/k); eta(0) = 0. Memoized, nondecreasing on k >= 1.
double eta(int k);

/// Q(Z): product of the Euclidean norms of the columns. Log-domain internally.
double column_norm_product(const ComplexMatrix& z);

/// n! * prod_r ((1/n) sum_j |z_{j,r}|^2)^(1/2), the square Hadamard-type
/// permanent bound. Equals (n!/n^(n/2)) Q(Z).
double bound_classic(const ComplexMatrix& z);
double log_bound_classic(const ComplexMatrix& z);

/// n! * prod_k (e_{m_k}(alpha_{.,k}) / C(n,m_k))^(1/2) over a full column
/// partition. Singleton blocks recover bound_classic; a single block
/// recovers bound_classic of the transpose.
double bound_partition(const ComplexMatrix& z, const ColumnPartition& partition);
double log_bound_partition(const ComplexMatrix& z, const ColumnPartition& partition);

/// Right-hand side of the squared-sum bound over row subsets:
/// (l!)^2 C(n,l) prod_k (e_{m_k}(alpha_{.,k}) / C(n,m_k)) for a partition of
/// the column set L; bounds sum_{|J|=l} |per(Z[J,L])|^2.
double bound_subsum(const ComplexMatrix& z, const IndexSubset& col_set,
                    const ColumnPartition& partition);
double log_bound_subsum(const ComplexMatrix& z, const IndexSubset& col_set,
                        const ColumnPartition& partition);

inline constexpr std::uint64_t kDefaultVerifyBudget = std::uint64_t{1} << 26;

/// Exhaustive left-hand side sum_{|J|=l} |per(Z[J,L])|^2, used to verify the
/// subset-sum and step bounds. Throws size_error when C(n,l) 2^l exceeds the
/// budget.
double subsum_lhs(const ComplexMatrix& z, const IndexSubset& col_set,
                  std::uint64_t budget = kDefaultVerifyBudget);

struct StepBoundReport {
    double rhs; // (m!)^2 C e_m(beta) sum h^2
    double c;   // the exact constant C(l,m,n) as a double
};

/// Single-block reduction step: bounds sum_{|J|=l} |per(Z[J,L])|^2 by
/// (m!)^2 C(l,m,n) (sum_{|I|=m} prod beta_j) (sum_{|K|=l-m} |per(Z[K,L\M])|^2)
/// with beta_j the block-averaged squared moduli over M.
StepBoundReport bound_step(const ComplexMatrix& z, const IndexSubset& col_set,
                           const IndexSubset& col_block);

/// Representative-column form: requires |z_{j,r}| = |z_{j,s_k}| for every j
/// and r in block k (within tol, relative); throws std::invalid_argument on
/// violation. representatives[k] is the chosen column of block k.
double bound_corollary(const ComplexMatrix& z, const ColumnPartition& partition,
                       const std::vector<int>& representatives, double tol = 1e-9);

/// Row-sum bound for 0/1 matrices: prod_j eta(lambda_j). Throws
/// std::invalid_argument on non-binary entries.
double bound_bregman_minc(const ComplexMatrix& z);

struct PhaseFactorization {
    bool factorizable;
    std::vector<Complex> row_phases;    // xi, unit modulus
    std::vector<Complex> column_phases; // zeta, unit modulus
};

/// Tests whether z_{j,r} = xi_j zeta_r |z_{j,r}| for unit-modulus phases,
/// i.e. whether |per(Z)| = per(|Z|). Requires min |z_{j,r}| > tol.
PhaseFactorization check_phase_factorizable(const ComplexMatrix& z, double tol = 1e-9);

/// Sufficient conditions for equality of bound_partition with |per|.
enum class PartitionEqualityCondition {
    zero_rows_on_block, // (A) some block has >= n - m_k + 1 all-zero rows
    rank_one_phase      // (B) z_{j,r} = xi_j zeta_r y_k with block-constant modulus
};

std::set<PartitionEqualityCondition> classify_partition_equality(const ComplexMatrix& z,
                                                                 const ColumnPartition& partition,
                                                                 double tol = 1e-9);

const char* partition_equality_label(PartitionEqualityCondition c); // "A" / "B"

struct BoundEntry {
    std::string name;
    double value;
    double log_value;
    std::optional<double> tightness; // per_abs / value, when per_abs known
    std::vector<std::string> equality_flags;
};

struct BoundReport {
    std::optional<double> per_abs;
    std::vector<BoundEntry> bounds;
};

/// Aggregates every applicable bound for Z: classic always; partition and
/// corollary when a partition is given (corollary only when its
/// modulus-pattern precondition holds); the 0/1 row-sum bound when Z is
/// binary. |per| and tightness are filled when n <= exact_cap.
BoundReport make_bound_report(const ComplexMatrix& z, const ColumnPartition* partition,
                              const std::vector<int>* representatives, int exact_cap = 30,
                              double tol = 1e-9, int workers = 1);

std::string bound_report_to_json(const BoundReport& report);

} // namespace permabound

#endif
