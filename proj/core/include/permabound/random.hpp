#ifndef PERMABOUND_RANDOM_HPP
#define PERMABOUND_RANDOM_HPP

#include <cstdint>
#include <string>

#include "permabound/convolution.hpp"
#include "permabound/matrix.hpp"
#include "permabound/partition.hpp"
#include "permabound/sympoly.hpp"

namespace permabound {

/// Deterministic counter-based generator (splitmix64). Each (seed, stream)
/// pair yields an independent stream, so trials can be generated in any
/// order or concurrently with identical results.
class Rng {
public:
    Rng(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double next_double();
    /// Uniform integer in [0, bound).
    std::uint64_t next_below(std::uint64_t bound);
    /// Standard normal (Box-Muller).
    double next_gaussian();
    /// Independent standard normal real and imaginary parts.
    Complex next_complex_gaussian();
    /// Unit-modulus complex number with uniform phase.
    Complex next_phase();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Stream id for trial-level substreams: mixes a trial index and a small tag
/// so distinct draw families inside one trial never overlap.
std::uint64_t trial_stream(std::uint64_t trial, std::uint64_t tag = 0);

enum class Ensemble {
    gaussian_complex,      // independent N(0,1) real and imaginary parts
    bernoulli01,           // fair 0/1 entries
    block_constant_modulus,// |z_{j,r}| constant across each partition block, random phases
    rank_one_phase         // z_{j,r} = xi_j zeta_r y_k, the equality family
};

Ensemble ensemble_from_string(const std::string& name);
std::string ensemble_name(Ensemble e);

/// Sample an n_rows x n_cols matrix from the ensemble. The two structured
/// ensembles need a partition of the columns; pass nullptr for singleton
/// blocks.
ComplexMatrix random_matrix(Ensemble e, int n_rows, int n_cols, const ColumnPartition* partition,
                            std::uint64_t seed, std::uint64_t trial);

/// Uniformly random [0,1) weights.
WeightVector random_weights(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t tag);

/// Set function with independent uniform [0,1) values.
SetFunction random_set_function(int universe, int cardinality, std::uint64_t seed,
                                std::uint64_t trial, std::uint64_t tag);

/// Random set partition of {0..n-1} (blocks ordered by smallest element).
ColumnPartition random_partition(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t tag);

} // namespace permabound

#endif
