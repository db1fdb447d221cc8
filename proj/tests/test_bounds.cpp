#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "permabound/bounds.hpp"
#include "permabound/convolution.hpp"
#include "permabound/errors.hpp"
#include "permabound/permanent.hpp"
#include "permabound/random.hpp"

using namespace permabound;

TEST_CASE("eta table basics") {
    CHECK(eta(0) == 0.0);
    CHECK(eta(1) == doctest::Approx(1.0));
    CHECK(eta(2) == doctest::Approx(std::sqrt(2.0)));
    for (int k = 1; k < 40; ++k) CHECK(eta(k) <= eta(k + 1) + 1e-12);
}

TEST_CASE("column norm product") {
    CHECK(column_norm_product(ComplexMatrix::identity(4)) == doctest::Approx(1.0));
    CHECK(column_norm_product(ComplexMatrix::constant(3, 3, 1.0)) ==
          doctest::Approx(3.0 * std::sqrt(3.0)));
    ComplexMatrix with_zero_col{2, 2, {1, 0, 1, 0}};
    CHECK(column_norm_product(with_zero_col) == 0.0);
}

TEST_CASE("classic bound equals (n!/n^(n/2)) Q(Z)") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(trial % 6);
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 321, trial);
        double direct = bound_classic(z);
        double via_q = std::exp(log_factorial(n) - 0.5 * n * std::log(static_cast<double>(n))) *
                       column_norm_product(z);
        CHECK(direct == doctest::Approx(via_q).epsilon(1e-12));
    }
}

TEST_CASE("classic bound equality on the all-ones 2x2") {
    ComplexMatrix z = ComplexMatrix::constant(2, 2, 1.0);
    CHECK(bound_classic(z) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(per_naive(z)) == doctest::Approx(2.0));
}

TEST_CASE("classic bound equality on the antidiagonal 2x2") {
    ComplexMatrix z{2, 2, {0, 1, 1, 0}};
    CHECK(bound_classic(z) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(per_naive(z)) == doctest::Approx(1.0));
}

TEST_CASE("classic bound dominates |per| on random matrices") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 6, 6, nullptr, 17, trial);
        CHECK(std::abs(per_ryser(z)) <= bound_classic(z) * (1.0 + 1e-12));
    }
}

TEST_CASE("partition bound with singleton blocks equals the classic bound") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(trial % 5);
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 55, trial);
        CHECK(bound_partition(z, ColumnPartition::singletons(n)) ==
              doctest::Approx(bound_classic(z)).epsilon(1e-12));
    }
}

TEST_CASE("partition bound with one block equals the classic bound of the transpose") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        int n = 2 + static_cast<int>(trial % 5);
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 56, trial);
        ColumnPartition whole = ColumnPartition::single_block(IndexSubset::full_set(n));
        CHECK(bound_partition(z, whole) ==
              doctest::Approx(bound_classic(z.transpose())).epsilon(1e-12));
    }
}

TEST_CASE("partition bound soundness over random partitions") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(trial % 5);
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 57, trial);
        ColumnPartition p = random_partition(n, 57, trial, 9);
        CHECK(std::abs(per_ryser(z)) <= bound_partition(z, p) * (1.0 + 1e-12));
    }
}

TEST_CASE("partition bound equality on the rank-one phase family") {
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        int n = 3 + static_cast<int>(trial % 4);
        ColumnPartition p = random_partition(n, 58, trial, 2);
        ComplexMatrix z = random_matrix(Ensemble::rank_one_phase, n, n, &p, 58, trial);
        double b = bound_partition(z, p);
        double per = std::abs(per_ryser(z));
        CHECK(per == doctest::Approx(b).epsilon(1e-12));
        CHECK(classify_partition_equality(z, p).count(PartitionEqualityCondition::rank_one_phase) ==
              1);
    }
}

TEST_CASE("3x3 two-block bound squared matches the norm-product expansion") {
    // partition {0,1},{2}: bound^2 = (|e|^2|f|^2 + |e|^2|g|^2 + |f|^2|g|^2) |h|^2
    // with e, f, g the rows of Z[.,{0,1}] and h the last column.
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 3, 3, nullptr, 59, trial);
        auto row_sq = [&](int j) { return std::norm(z.at(j, 0)) + std::norm(z.at(j, 1)); };
        double e = row_sq(0), f = row_sq(1), g = row_sq(2);
        double h = std::norm(z.at(0, 2)) + std::norm(z.at(1, 2)) + std::norm(z.at(2, 2));
        double rhs = (e * f + e * g + f * g) * h;
        double b = bound_partition(z, ColumnPartition::consecutive({2, 1}, 3));
        CHECK(b * b == doctest::Approx(rhs).epsilon(1e-12));
    }
}

TEST_CASE("subset-sum bound: single column reduces to the column norm") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 60, 0);
    IndexSubset l = IndexSubset::of({2}, 5);
    double rhs = bound_subsum(z, l, ColumnPartition::single_block(l));
    double lhs = subsum_lhs(z, l);
    double colnorm = 0.0;
    for (int j = 0; j < 5; ++j) colnorm += std::norm(z.at(j, 2));
    CHECK(rhs == doctest::Approx(colnorm).epsilon(1e-12));
    CHECK(lhs == doctest::Approx(colnorm).epsilon(1e-12));
}

TEST_CASE("subset-sum bound: full column set with singleton blocks squares the classic bound") {
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(trial % 4);
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, n, nullptr, 61, trial);
        IndexSubset full = IndexSubset::full_set(n);
        double rhs = bound_subsum(z, full, ColumnPartition::singletons(n));
        double classic = bound_classic(z);
        CHECK(rhs == doctest::Approx(classic * classic).epsilon(1e-12));
        CHECK(subsum_lhs(z, full) == doctest::Approx(std::norm(per_ryser(z))).epsilon(1e-10));
    }
}

TEST_CASE("subset-sum bound dominates the exhaustive left-hand side") {
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 6, 6, nullptr, 62, trial);
        IndexSubset l = IndexSubset::of({0, 2, 5}, 6);
        ColumnPartition p = ColumnPartition::consecutive({2, 1}, l);
        CHECK(subsum_lhs(z, l) <= bound_subsum(z, l, p) * (1.0 + 1e-12));
    }
}

TEST_CASE("subsum_lhs enforces its verification budget") {
    ComplexMatrix z = ComplexMatrix::zero(24, 24);
    CHECK_THROWS_AS(subsum_lhs(z, IndexSubset::full_set(24), 1000), size_error);
}

TEST_CASE("step bound: |M| = 1 carries the l(n-l+1)/n prefactor") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 6, 6, nullptr, 63, 0);
    IndexSubset l = IndexSubset::of({1, 2, 4, 5}, 6);
    IndexSubset m = IndexSubset::of({2}, 6);
    StepBoundReport rep = bound_step(z, l, m);
    int n = 6, ell = 4;
    CHECK(rep.c == doctest::Approx(static_cast<double>(ell) * (n - ell + 1) / n).epsilon(1e-15));

    // direct form: l(n-l+1) * ((1/n) sum_j |z_{j,s}|^2) * sum_{|J|=l-1} |per(Z[J,L\{s}])|^2
    double colsum = 0.0;
    for (int j = 0; j < n; ++j) colsum += std::norm(z.at(j, 2));
    double tail = 0.0;
    for (IndexSubset rows : iter_subsets(n, ell - 1))
        tail += std::norm(per_sub(z, rows, l.without(2)));
    double direct = ell * (n - ell + 1) * (colsum / n) * tail;
    CHECK(rep.rhs == doctest::Approx(direct).epsilon(1e-12));
    CHECK(subsum_lhs(z, l) <= rep.rhs * (1.0 + 1e-12));
}

TEST_CASE("step bound: M = L collapses to the (l!)^2 g-sum") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 64, 0);
    IndexSubset l = IndexSubset::of({0, 3}, 5);
    StepBoundReport rep = bound_step(z, l, l);
    CHECK(rep.c == doctest::Approx(1.0));
    std::vector<double> beta;
    for (int j = 0; j < 5; ++j)
        beta.push_back((std::norm(z.at(j, 0)) + std::norm(z.at(j, 3))) / 2.0);
    double gsum = esym(WeightVector(beta), 2);
    CHECK(rep.rhs == doctest::Approx(4.0 * gsum).epsilon(1e-12)); // (2!)^2
    CHECK(subsum_lhs(z, l) <= rep.rhs * (1.0 + 1e-12));
}

TEST_CASE("step bound dominates for random L, M") {
    for (std::uint64_t trial = 0; trial < 40; ++trial) {
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 6, 6, nullptr, 65, trial);
        IndexSubset l = IndexSubset::of({0, 1, 3, 4}, 6);
        IndexSubset m = IndexSubset::of({1, 4}, 6);
        CHECK(subsum_lhs(z, l) <= bound_step(z, l, m).rhs * (1.0 + 1e-12));
    }
    CHECK_THROWS_AS(bound_step(ComplexMatrix::identity(4), IndexSubset::of({0}, 4),
                               IndexSubset::of({1}, 4)),
                    std::invalid_argument);
}

TEST_CASE("corollary bound on all-ones gives n!") {
    ComplexMatrix z = ComplexMatrix::constant(4, 4, 1.0);
    ColumnPartition p = ColumnPartition::consecutive({2, 2}, 4);
    CHECK(bound_corollary(z, p, {0, 2}) == doctest::Approx(24.0).epsilon(1e-12));
}

TEST_CASE("corollary bound with singleton blocks equals the classic bound") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 66, 0);
    CHECK(bound_corollary(z, ColumnPartition::singletons(5), {0, 1, 2, 3, 4}) ==
          doctest::Approx(bound_classic(z)).epsilon(1e-12));
}

TEST_CASE("corollary bound sharpens the classic bound on block-constant-modulus matrices") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(trial % 4);
        ColumnPartition p = random_partition(n, 67, trial, 3);
        ComplexMatrix z = random_matrix(Ensemble::block_constant_modulus, n, n, &p, 67, trial);
        std::vector<int> reps;
        for (const IndexSubset& b : p.blocks()) reps.push_back(b.min_element());
        double cor = bound_corollary(z, p, reps);
        CHECK(cor <= bound_classic(z) * (1.0 + 1e-12));
        CHECK(cor == doctest::Approx(bound_partition(z, p)).epsilon(1e-12));
    }
}

TEST_CASE("corollary bound rejects modulus-pattern violations") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 4, 4, nullptr, 68, 0);
    ColumnPartition p = ColumnPartition::consecutive({2, 2}, 4);
    CHECK_THROWS_AS(bound_corollary(z, p, {0, 2}), std::invalid_argument);
}

TEST_CASE("0/1 row-sum bound basics") {
    CHECK(bound_bregman_minc(ComplexMatrix::constant(4, 4, 1.0)) == doctest::Approx(24.0));
    CHECK(bound_bregman_minc(ComplexMatrix::identity(5)) == doctest::Approx(1.0));
    ComplexMatrix zero_row{2, 2, {1, 1, 0, 0}};
    CHECK(bound_bregman_minc(zero_row) == 0.0);
    CHECK_THROWS_AS(bound_bregman_minc(ComplexMatrix::constant(2, 2, 0.5)), std::invalid_argument);
}

TEST_CASE("0/1 row-sum bound dominates the permanent") {
    for (std::uint64_t trial = 0; trial < 100; ++trial) {
        ComplexMatrix z = random_matrix(Ensemble::bernoulli01, 8, 8, nullptr, 69, trial);
        double per = std::abs(per_ryser(z));
        CHECK(per <= bound_bregman_minc(z) * (1.0 + 1e-12));
    }
}

TEST_CASE("phase factorization accepts positive and constructed matrices") {
    ComplexMatrix pos = random_matrix(Ensemble::block_constant_modulus, 4, 4, nullptr, 70, 0).abs();
    PhaseFactorization pf = check_phase_factorizable(pos, 1e-9);
    CHECK(pf.factorizable);
    for (const Complex& x : pf.row_phases) CHECK(std::abs(x - Complex{1, 0}) < 1e-9);

    // z_{j,r} = i^j (-1)^r (j + r), 1-based indices
    ComplexMatrix z = ComplexMatrix::zero(3, 3);
    Complex I{0, 1};
    for (int j = 1; j <= 3; ++j)
        for (int r = 1; r <= 3; ++r)
            z.mutable_at(j - 1, r - 1) =
                std::pow(I, j) * std::pow(-1.0, r) * static_cast<double>(j + r);
    CHECK(check_phase_factorizable(z, 1e-9).factorizable);
}

TEST_CASE("phase factorization rejects an inconsistent 2x2 phase pattern") {
    // args (0, 0, 0, pi/2): consistency needs arg z11 + arg z22 = arg z12 + arg z21
    ComplexMatrix z{2, 2, {1, 1, 1, Complex{0, 1}}};
    CHECK_FALSE(check_phase_factorizable(z, 1e-9).factorizable);
    ComplexMatrix with_zero{2, 2, {1, 0, 1, 1}};
    CHECK_THROWS_AS(check_phase_factorizable(with_zero, 1e-9), std::invalid_argument);
}

TEST_CASE("partition equality classifier: zero-rows condition") {
    // block {0,1} with m_k = 2 and n - m_k + 1 = 2 rows vanishing on it
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 3, 3, nullptr, 71, 0);
    for (int r : {0, 1}) {
        z.mutable_at(0, r) = 0.0;
        z.mutable_at(1, r) = 0.0;
    }
    ColumnPartition p = ColumnPartition::consecutive({2, 1}, 3);
    auto flags = classify_partition_equality(z, p);
    CHECK(flags.count(PartitionEqualityCondition::zero_rows_on_block) == 1);
    CHECK(std::abs(per_ryser(z)) == doctest::Approx(0.0));
    CHECK(bound_partition(z, p) == doctest::Approx(0.0));
}

TEST_CASE("partition equality classifier: generic matrices carry no flag") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 4, 4, nullptr, 72, 0);
    CHECK(classify_partition_equality(z, ColumnPartition::consecutive({2, 2}, 4)).empty());
}

TEST_CASE("bound report invariants and JSON shape") {
    ComplexMatrix z = random_matrix(Ensemble::bernoulli01, 5, 5, nullptr, 73, 1);
    ColumnPartition p = ColumnPartition::consecutive({2, 3}, 5);
    BoundReport rep = make_bound_report(z, &p, nullptr, 30, 1e-9, 1);
    REQUIRE(rep.per_abs.has_value());
    bool saw_bregman = false;
    for (const BoundEntry& e : rep.bounds) {
        if (std::isfinite(e.value) && e.value > 0)
            CHECK(std::abs(e.log_value - std::log(e.value)) <= 1e-9);
        CHECK(e.value >= *rep.per_abs * (1.0 - 1e-12));
        if (e.tightness) CHECK(*e.tightness <= 1.0 + 1e-12);
        if (e.name == "bregman-minc") saw_bregman = true;
    }
    CHECK(saw_bregman);
    std::string json = bound_report_to_json(rep);
    CHECK(json.find("\"per_abs\"") != std::string::npos);
    CHECK(json.find("\"bounds\"") != std::string::npos);
    CHECK(json.find("\"log_value\"") != std::string::npos);
}

TEST_CASE("W comparison golden cases for 3x3 nonnegative matrices") {
    // W = (|e|^2|f|^2 + |e|^2|g|^2 + |f|^2|g|^2) - (4/3) prod_{r<=2} sum_j z_{j,r}^2,
    // the sign of bound_partition^2 - bound_classic^2 whenever the last column
    // is nonzero.
    auto w_of = [](const ComplexMatrix& z) {
        auto row_sq = [&](int j) { return std::norm(z.at(j, 0)) + std::norm(z.at(j, 1)); };
        double e = row_sq(0), f = row_sq(1), g = row_sq(2);
        double c0 = std::norm(z.at(0, 0)) + std::norm(z.at(1, 0)) + std::norm(z.at(2, 0));
        double c1 = std::norm(z.at(0, 1)) + std::norm(z.at(1, 1)) + std::norm(z.at(2, 1));
        return (e * f + e * g + f * g) - (4.0 / 3.0) * c0 * c1;
    };
    ColumnPartition p21 = ColumnPartition::consecutive({2, 1}, 3);

    SUBCASE("equal first two columns make W <= 0 with the stated closed form") {
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            Rng rng(74, trial);
            ComplexMatrix z = ComplexMatrix::zero(3, 3);
            for (int j = 0; j < 3; ++j) {
                double v = std::abs(rng.next_gaussian());
                z.mutable_at(j, 0) = v;
                z.mutable_at(j, 1) = v;
                z.mutable_at(j, 2) = std::abs(rng.next_gaussian()) + 0.1;
            }
            double w = w_of(z);
            double expect = 0.0;
            const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
            for (auto [a, b] : pairs) {
                double diff = std::norm(z.at(a, 0)) - std::norm(z.at(b, 0));
                expect += diff * diff;
            }
            expect *= -2.0 / 3.0;
            CHECK(w == doctest::Approx(expect).epsilon(1e-10));
            CHECK(w <= 1e-12);
            // and the bound comparison agrees in sign
            double bp = bound_partition(z, p21);
            double bc = bound_classic(z);
            CHECK(bp * bp - bc * bc <= 1e-9 * bc * bc);
        }
    }

    SUBCASE("the four-zero pattern gives W = -(1/3) z21^2 z32^2") {
        Rng rng(75, 0);
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            ComplexMatrix z = ComplexMatrix::zero(3, 3);
            // z11 = z12 = z22 = z31 = 0 (1-based)
            z.mutable_at(1, 0) = std::abs(rng.next_gaussian());
            z.mutable_at(2, 1) = std::abs(rng.next_gaussian());
            for (int j = 0; j < 3; ++j) z.mutable_at(j, 2) = std::abs(rng.next_gaussian()) + 0.1;
            double w = w_of(z);
            double z21 = z.at(1, 0).real(), z32 = z.at(2, 1).real();
            CHECK(w == doctest::Approx(-(z21 * z21) * (z32 * z32) / 3.0).epsilon(1e-10));
            CHECK(w <= 1e-12);
        }
    }

    SUBCASE("constant columns give W = 3 (z11^2 - z12^2)^2 >= 0") {
        Rng rng(76, 0);
        for (std::uint64_t trial = 0; trial < 50; ++trial) {
            ComplexMatrix z = ComplexMatrix::zero(3, 3);
            double a = std::abs(rng.next_gaussian());
            double b = std::abs(rng.next_gaussian());
            for (int j = 0; j < 3; ++j) {
                z.mutable_at(j, 0) = a;
                z.mutable_at(j, 1) = b;
                z.mutable_at(j, 2) = std::abs(rng.next_gaussian()) + 0.1;
            }
            double w = w_of(z);
            double diff = a * a - b * b;
            CHECK(w == doctest::Approx(3.0 * diff * diff).epsilon(1e-10));
            CHECK(w >= -1e-12);
            double bp = bound_partition(z, p21);
            double bc = bound_classic(z);
            CHECK(bp * bp - bc * bc >= -1e-9 * bc * bc);
        }
    }
}

TEST_CASE("3x3 equality family for the two-block partition") {
    // z_{j,1} = z_{j,2}, z_{j,3} = x prod_{i != j} z_{i,1}, then phase factors
    // xi_j zeta_r applied; equality must hold in the squared two-block bound.
    Rng rng(77, 0);
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        double x = std::abs(rng.next_gaussian()) + 0.2;
        std::vector<double> base(3);
        for (double& v : base) v = std::abs(rng.next_gaussian()) + 0.2;
        std::vector<Complex> xi(3), zeta(3);
        for (Complex& v : xi) v = rng.next_phase();
        for (Complex& v : zeta) v = rng.next_phase();

        ComplexMatrix z = ComplexMatrix::zero(3, 3);
        for (int j = 0; j < 3; ++j) {
            z.mutable_at(j, 0) = xi[static_cast<std::size_t>(j)] * zeta[0] * base[static_cast<std::size_t>(j)];
            z.mutable_at(j, 1) = xi[static_cast<std::size_t>(j)] * zeta[1] * base[static_cast<std::size_t>(j)];
            double third = x * base[static_cast<std::size_t>((j + 1) % 3)] *
                           base[static_cast<std::size_t>((j + 2) % 3)];
            z.mutable_at(j, 2) = xi[static_cast<std::size_t>(j)] * zeta[2] * third;
        }
        double b = bound_partition(z, ColumnPartition::consecutive({2, 1}, 3));
        double per = std::abs(per_ryser(z));
        CHECK(per == doctest::Approx(b).epsilon(1e-12));
    }
}
