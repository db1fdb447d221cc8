#include "permabound/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace permabound {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed, std::uint64_t stream) {
    // decorrelate seed and stream before mixing them together
    std::uint64_t s = seed;
    std::uint64_t a = splitmix64(s);
    s = stream ^ 0xD1B54A32D192ED03ull;
    std::uint64_t b = splitmix64(s);
    state_ = a ^ (b + 0x9E3779B97F4A7C15ull);
}

std::uint64_t Rng::next_u64() { return splitmix64(state_); }

double Rng::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::next_below: zero bound");
    return next_u64() % bound;
}

double Rng::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Complex Rng::next_complex_gaussian() {
    double re = next_gaussian();
    double im = next_gaussian();
    return {re, im};
}

Complex Rng::next_phase() {
    double theta = 2.0 * std::numbers::pi * next_double();
    return {std::cos(theta), std::sin(theta)};
}

std::uint64_t trial_stream(std::uint64_t trial, std::uint64_t tag) {
    return trial * 64 + tag;
}

Ensemble ensemble_from_string(const std::string& name) {
    if (name == "gaussian-complex") return Ensemble::gaussian_complex;
    if (name == "bernoulli01") return Ensemble::bernoulli01;
    if (name == "block-constant-modulus") return Ensemble::block_constant_modulus;
    if (name == "rank-one-phase") return Ensemble::rank_one_phase;
    throw std::invalid_argument("unknown ensemble '" + name + "'");
}

std::string ensemble_name(Ensemble e) {
    switch (e) {
        case Ensemble::gaussian_complex: return "gaussian-complex";
        case Ensemble::bernoulli01: return "bernoulli01";
        case Ensemble::block_constant_modulus: return "block-constant-modulus";
        case Ensemble::rank_one_phase: return "rank-one-phase";
    }
    return "?";
}

ComplexMatrix random_matrix(Ensemble e, int n_rows, int n_cols, const ColumnPartition* partition,
                            std::uint64_t seed, std::uint64_t trial) {
    Rng rng(seed, trial_stream(trial, 0));
    ComplexMatrix z = ComplexMatrix::zero(n_rows, n_cols);

    switch (e) {
        case Ensemble::gaussian_complex:
            for (int j = 0; j < n_rows; ++j)
                for (int r = 0; r < n_cols; ++r) z.mutable_at(j, r) = rng.next_complex_gaussian();
            break;

        case Ensemble::bernoulli01:
            for (int j = 0; j < n_rows; ++j)
                for (int r = 0; r < n_cols; ++r)
                    z.mutable_at(j, r) = (rng.next_u64() & 1u) ? 1.0 : 0.0;
            break;

        case Ensemble::block_constant_modulus: {
            ColumnPartition p = partition != nullptr ? *partition : ColumnPartition::singletons(n_cols);
            std::vector<int> block_of(static_cast<std::size_t>(n_cols), -1);
            for (int k = 0; k < p.block_count(); ++k)
                for (int r : p.blocks()[static_cast<std::size_t>(k)].elements())
                    block_of[static_cast<std::size_t>(r)] = k;
            std::vector<double> rho(static_cast<std::size_t>(n_rows) *
                                    static_cast<std::size_t>(p.block_count()));
            for (double& v : rho) v = std::abs(rng.next_gaussian()) + 0.1;
            for (int j = 0; j < n_rows; ++j)
                for (int r = 0; r < n_cols; ++r) {
                    int k = block_of[static_cast<std::size_t>(r)];
                    double mod = rho[static_cast<std::size_t>(j) *
                                         static_cast<std::size_t>(p.block_count()) +
                                     static_cast<std::size_t>(k)];
                    z.mutable_at(j, r) = mod * rng.next_phase();
                }
            break;
        }

        case Ensemble::rank_one_phase: {
            ColumnPartition p = partition != nullptr ? *partition : ColumnPartition::singletons(n_cols);
            std::vector<int> block_of(static_cast<std::size_t>(n_cols), -1);
            for (int k = 0; k < p.block_count(); ++k)
                for (int r : p.blocks()[static_cast<std::size_t>(k)].elements())
                    block_of[static_cast<std::size_t>(r)] = k;
            std::vector<Complex> xi(static_cast<std::size_t>(n_rows));
            std::vector<Complex> zeta(static_cast<std::size_t>(n_cols));
            std::vector<double> y(static_cast<std::size_t>(p.block_count()));
            for (Complex& v : xi) v = rng.next_phase();
            for (Complex& v : zeta) v = rng.next_phase();
            for (double& v : y) v = std::abs(rng.next_gaussian()) + 0.1;
            for (int j = 0; j < n_rows; ++j)
                for (int r = 0; r < n_cols; ++r)
                    z.mutable_at(j, r) = xi[static_cast<std::size_t>(j)] *
                                         zeta[static_cast<std::size_t>(r)] *
                                         y[static_cast<std::size_t>(block_of[static_cast<std::size_t>(r)])];
            break;
        }
    }
    return z;
}

WeightVector random_weights(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t tag) {
    Rng rng(seed, trial_stream(trial, tag));
    std::vector<double> w(static_cast<std::size_t>(n));
    for (double& v : w) v = rng.next_double();
    return WeightVector(std::move(w));
}

SetFunction random_set_function(int universe, int cardinality, std::uint64_t seed,
                                std::uint64_t trial, std::uint64_t tag) {
    Rng rng(seed, trial_stream(trial, tag));
    std::vector<double> vals(static_cast<std::size_t>(binom64(universe, cardinality)));
    for (double& v : vals) v = rng.next_double();
    return {universe, cardinality, std::move(vals)};
}

ColumnPartition random_partition(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t tag) {
    Rng rng(seed, trial_stream(trial, tag));
    int d = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    std::vector<std::uint64_t> bits(static_cast<std::size_t>(d), 0);
    for (int c = 0; c < n; ++c)
        bits[static_cast<std::size_t>(rng.next_below(static_cast<std::uint64_t>(d)))] |=
            std::uint64_t{1} << c;
    std::vector<IndexSubset> blocks;
    for (std::uint64_t b : bits)
        if (b != 0) blocks.emplace_back(b, n);
    return ColumnPartition{std::move(blocks)};
}

} // namespace permabound
