#ifndef PERMABOUND_PERMANENT_HPP
#define PERMABOUND_PERMANENT_HPP

#include "permabound/matrix.hpp"
#include "permabound/subset.hpp"

namespace permabound {

inline constexpr int kNaiveCap = 10;
inline constexpr int kDefaultExactCap = 30;

enum class PermanentAlgorithm { naive, ryser };

struct PermanentResult {
    Complex value;
    PermanentAlgorithm algorithm;
    int n;
};

/// Dispatches to the requested algorithm and tags the result.
PermanentResult compute_permanent(const ComplexMatrix& z, PermanentAlgorithm algorithm,
                                  int workers = 1, int cap = kDefaultExactCap);

/// Permutation-sum definition, ascending lexicographic order over
/// permutations for a reproducible oracle. O(n! n); capped at n <= 10.
Complex per_naive(const ComplexMatrix& z);

/// Inclusion-exclusion over column subsets with Gray-code row-sum updates,
/// O(2^n n). The subset range is split into chunks whose boundaries depend
/// only on n, evaluated by up to `workers` threads and reduced in fixed
/// chunk order, so the result is bitwise independent of the worker count.
Complex per_ryser(const ComplexMatrix& z, int workers = 1, int cap = kDefaultExactCap);

/// per(Z[rows, cols]); requires |rows| == |cols|. Empty selection gives 1.
Complex per_sub(const ComplexMatrix& z, const IndexSubset& rows, const IndexSubset& cols);

/// Sum over I subset of J with |I| = |M| of per(Z[I,M]) * per(Z[J\I, L\M]).
/// Equals per(Z[J, L]) whenever M is a subset of L and |J| = |L|.
Complex laplace_expand(const ComplexMatrix& z, const IndexSubset& row_set, const IndexSubset& col_set,
                       const IndexSubset& col_block);

} // namespace permabound

#endif
