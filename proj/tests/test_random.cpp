#include <doctest.h>

#include <cmath>

#include "permabound/bounds.hpp"
#include "permabound/random.hpp"

using namespace permabound;

TEST_CASE("identical seed and trial reproduce the matrix exactly") {
    ComplexMatrix a = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 42, 7);
    ComplexMatrix b = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 42, 7);
    CHECK(a.entries() == b.entries());
    ComplexMatrix c = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 42, 8);
    CHECK(a.entries() != c.entries());
}

TEST_CASE("streams with different tags are decorrelated") {
    Rng a(1, trial_stream(0, 0));
    Rng b(1, trial_stream(0, 1));
    CHECK(a.next_u64() != b.next_u64());
}

TEST_CASE("uniform doubles live in [0,1)") {
    Rng rng(3, 0);
    for (int i = 0; i < 10000; ++i) {
        double v = rng.next_double();
        CHECK(v >= 0.0);
        CHECK(v < 1.0);
    }
}

TEST_CASE("gaussian moments are plausible") {
    Rng rng(5, 0);
    double sum = 0.0, sum_sq = 0.0;
    const int trials = 200000;
    for (int i = 0; i < trials; ++i) {
        double v = rng.next_gaussian();
        sum += v;
        sum_sq += v * v;
    }
    CHECK(std::abs(sum / trials) < 0.02);
    CHECK(std::abs(sum_sq / trials - 1.0) < 0.02);
}

TEST_CASE("phases have unit modulus") {
    Rng rng(6, 0);
    for (int i = 0; i < 100; ++i) CHECK(std::abs(rng.next_phase()) == doctest::Approx(1.0));
}

TEST_CASE("bernoulli01 matrices are binary") {
    ComplexMatrix z = random_matrix(Ensemble::bernoulli01, 6, 6, nullptr, 9, 0);
    CHECK(z.is_binary());
}

TEST_CASE("block-constant-modulus matrices satisfy the representative precondition") {
    ColumnPartition p = ColumnPartition::consecutive({2, 3, 1}, 6);
    ComplexMatrix z = random_matrix(Ensemble::block_constant_modulus, 6, 6, &p, 10, 0);
    for (int k = 0; k < p.block_count(); ++k) {
        int s = p.blocks()[static_cast<std::size_t>(k)].min_element();
        for (int j = 0; j < 6; ++j)
            for (int r : p.blocks()[static_cast<std::size_t>(k)].elements())
                CHECK(std::abs(z.at(j, r)) == doctest::Approx(std::abs(z.at(j, s))).epsilon(1e-12));
    }
}

TEST_CASE("rank-one-phase matrices are phase factorizable") {
    ColumnPartition p = ColumnPartition::consecutive({2, 2}, 4);
    ComplexMatrix z = random_matrix(Ensemble::rank_one_phase, 4, 4, &p, 11, 0);
    CHECK(check_phase_factorizable(z, 1e-9).factorizable);
}

TEST_CASE("ensemble names round-trip") {
    for (Ensemble e : {Ensemble::gaussian_complex, Ensemble::bernoulli01,
                       Ensemble::block_constant_modulus, Ensemble::rank_one_phase})
        CHECK(ensemble_from_string(ensemble_name(e)) == e);
    CHECK_THROWS_AS(ensemble_from_string("nope"), std::invalid_argument);
}

TEST_CASE("random partitions cover the universe with disjoint nonempty blocks") {
    for (std::uint64_t trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(trial % 9);
        ColumnPartition p = random_partition(n, 12, trial, 0);
        CHECK(p.universe() == IndexSubset::full_set(n));
        int total = 0;
        for (const IndexSubset& b : p.blocks()) {
            CHECK(!b.empty());
            total += b.size();
        }
        CHECK(total == n);
    }
}
