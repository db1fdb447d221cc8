#include <doctest.h>

#include <cmath>
#include <complex>
#include <map>
#include <vector>

#include "permabound/errors.hpp"
#include "permabound/linforms.hpp"
#include "permabound/permanent.hpp"
#include "permabound/random.hpp"

using namespace permabound;

namespace {

bool close(Complex a, Complex b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::abs(b)); }

// All exponent vectors of total degree n in d variables.
void compositions(int n, int d, std::vector<int>& cur, std::vector<ExponentVector>& out) {
    if (static_cast<int>(cur.size()) == d - 1) {
        cur.push_back(n);
        out.emplace_back(cur);
        cur.pop_back();
        return;
    }
    for (int v = 0; v <= n; ++v) {
        cur.push_back(v);
        compositions(n - v, d, cur, out);
        cur.pop_back();
    }
}

std::vector<ExponentVector> all_exponents(int n, int d) {
    std::vector<ExponentVector> out;
    std::vector<int> cur;
    compositions(n, d, cur, out);
    return out;
}

} // namespace

TEST_CASE("single factor expansion lists the row") {
    ComplexMatrix z{1, 3, {Complex{1, 1}, 2, Complex{0, -3}}};
    SparsePolynomial p = expand_product(z);
    CHECK(p.term_count() == 3);
    CHECK(p.coeff(ExponentVector({1, 0, 0})) == Complex{1, 1});
    CHECK(p.coeff(ExponentVector({0, 1, 0})) == Complex{2, 0});
    CHECK(p.coeff(ExponentVector({0, 0, 1})) == Complex{0, -3});
}

TEST_CASE("2x2 expansion: coeff(x1 x2) = ad + bc") {
    Complex a{2, 1}, b{-1, 0}, c{0, 3}, d{4, -2};
    ComplexMatrix z{2, 2, {a, b, c, d}};
    SparsePolynomial p = expand_product(z);
    CHECK(close(p.coeff(ExponentVector({1, 1})), a * d + b * c, 1e-15));
    CHECK(close(p.coeff(ExponentVector({2, 0})), a * c, 1e-15));
    CHECK(close(p.coeff(ExponentVector({0, 2})), b * d, 1e-15));
}

TEST_CASE("all-ones expansion recovers binomial coefficients") {
    int n = 6;
    ComplexMatrix z = ComplexMatrix::constant(n, 2, 1.0);
    SparsePolynomial p = expand_product(z);
    for (int m1 = 0; m1 <= n; ++m1) {
        Complex c = p.coeff(ExponentVector({m1, n - m1}));
        CHECK(c.real() == doctest::Approx(static_cast<double>(binom64(n, m1))).epsilon(1e-12));
    }
}

TEST_CASE("expansion is homogeneous of degree n") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 5, 3, nullptr, 90, 0);
    SparsePolynomial p = expand_product(z);
    for (const auto& [m, c] : p.terms()) CHECK(m.total_degree() == 5);
}

TEST_CASE("expansion rejects oversized instances") {
    CHECK_THROWS_AS(expand_product(ComplexMatrix::constant(40, 20, 1.0)), size_error);
}

TEST_CASE("coefficient via permanent: all-singleton exponent is the permanent") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 5, 5, nullptr, 91, 0);
    ExponentVector ones({1, 1, 1, 1, 1});
    CHECK(close(coeff_via_permanent(z, ones), per_ryser(z), 1e-12));
}

TEST_CASE("coefficient via permanent: hand example (2,0)") {
    Complex a{1.5, -2}, c{3, 0.25};
    ComplexMatrix z{2, 2, {a, 7, c, -4}};
    // coeff of x1^2 in (a x1 + .)(c x1 + .) is a c; permanent route: per([[a,a],[c,c]])/2!
    CHECK(close(coeff_via_permanent(z, ExponentVector({2, 0})), a * c, 1e-14));
}

TEST_CASE("permanent route equals expansion on random instances") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(trial % 5);
        int d = 2 + static_cast<int>(trial % 3);
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, n, d, nullptr, 92, trial);
        SparsePolynomial p = expand_product(z);
        for (const ExponentVector& m : all_exponents(n, d)) {
            Complex via_per = coeff_via_permanent(z, m);
            Complex via_exp = p.coeff(m);
            CAPTURE(n);
            CAPTURE(d);
            CHECK(std::abs(via_per - via_exp) <= 1e-10 * (1.0 + std::abs(via_exp)));
        }
    }
}

TEST_CASE("coefficient is invariant under the repeated-column ordering") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 5, 3, nullptr, 93, 0);
    ExponentVector m({2, 1, 2});
    Complex canonical = coeff_via_permanent(z, m);

    // interleaved ordering t = (3,1,2,1,3) instead of (1,1,2,3,3)
    std::vector<int> t{2, 0, 1, 0, 2};
    ComplexMatrix repeated = ComplexMatrix::zero(5, 5);
    for (int col = 0; col < 5; ++col)
        for (int j = 0; j < 5; ++j)
            repeated.mutable_at(j, col) = z.at(j, t[static_cast<std::size_t>(col)]);
    Complex permuted = per_ryser(repeated) / m.multifactorial().to_double();
    CHECK(close(permuted, canonical, 1e-12));
}

TEST_CASE("coefficient bound dominates on random instances") {
    for (std::uint64_t trial = 0; trial < 30; ++trial) {
        ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 6, 3, nullptr, 94, trial);
        ExponentVector m({2, 2, 2});
        CHECK(std::abs(coeff_via_permanent(z, m)) <= coeff_bound(z, m) * (1.0 + 1e-12));
    }
}

TEST_CASE("coefficient bound equality on the rank-one family z_{j,k} = xi_j y_k") {
    Rng rng(95, 0);
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        int n = 4, d = 3;
        ComplexMatrix z = ComplexMatrix::zero(n, d);
        std::vector<Complex> xi(static_cast<std::size_t>(n));
        std::vector<Complex> y(static_cast<std::size_t>(d));
        for (Complex& v : xi) v = rng.next_phase();
        for (Complex& v : y) v = rng.next_phase() * (std::abs(rng.next_gaussian()) + 0.2);
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < d; ++k)
                z.mutable_at(j, k) = xi[static_cast<std::size_t>(j)] * y[static_cast<std::size_t>(k)];
        ExponentVector m({2, 1, 1});
        double bound = coeff_bound(z, m);
        double coeff = std::abs(coeff_via_permanent(z, m));
        CHECK(coeff == doctest::Approx(bound).epsilon(1e-12));
    }
}

TEST_CASE("zero-heavy column collapses both the coefficient and the bound") {
    // column 0 has >= n - m_0 + 1 zeros: coefficient and bound are both 0
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 4, 2, nullptr, 96, 0);
    ExponentVector m({2, 2});
    for (int j = 0; j < 3; ++j) z.mutable_at(j, 0) = 0.0; // 3 = n - m_0 + 1 zeros
    CHECK(coeff_bound(z, m) == doctest::Approx(0.0));
    CHECK(std::abs(coeff_via_permanent(z, m)) == doctest::Approx(0.0));
}

TEST_CASE("zero exponent blocks contribute empty factors") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 3, 3, nullptr, 97, 0);
    ExponentVector m({0, 3, 0});
    SparsePolynomial p = expand_product(z);
    CHECK(close(coeff_via_permanent(z, m), p.coeff(m), 1e-11));
    CHECK(std::abs(coeff_via_permanent(z, m)) <= coeff_bound(z, m) * (1.0 + 1e-12));
}

TEST_CASE("degree mismatches are rejected") {
    ComplexMatrix z = random_matrix(Ensemble::gaussian_complex, 3, 2, nullptr, 98, 0);
    CHECK_THROWS_AS(coeff_via_permanent(z, ExponentVector({1, 1})), std::invalid_argument);
    CHECK_THROWS_AS(coeff_bound(z, ExponentVector({4, 0})), std::invalid_argument);
    CHECK_THROWS_AS(weight_count(3, ExponentVector({1, 1})), std::invalid_argument);
}

TEST_CASE("weight counts") {
    CHECK(weight_count(3, ExponentVector({2, 1})) == ExactRational(3));
    CHECK(weight_count(4, ExponentVector({4, 0, 0})) == ExactRational(1));
    CHECK(weight_count(8, ExponentVector({3, 3, 2})) == ExactRational(560));
}

TEST_CASE("weight counts match sequence enumeration and sum to d^n") {
    for (int n = 1; n <= 8; ++n) {
        int d = 3;
        // enumerate all d^n sequences, tally by weight
        std::map<std::vector<int>, long> tally;
        std::vector<int> seq(static_cast<std::size_t>(n), 0);
        long total = 0;
        for (;;) {
            std::vector<int> w(static_cast<std::size_t>(d), 0);
            for (int v : seq) ++w[static_cast<std::size_t>(v)];
            ++tally[w];
            ++total;
            int pos = n - 1;
            while (pos >= 0 && seq[static_cast<std::size_t>(pos)] == d - 1)
                seq[static_cast<std::size_t>(pos--)] = 0;
            if (pos < 0) break;
            ++seq[static_cast<std::size_t>(pos)];
        }
        ExactRational sum = 0;
        for (const auto& [w, count] : tally) {
            ExactRational wc = weight_count(n, ExponentVector(w));
            CHECK(wc == ExactRational(count));
            sum += wc;
        }
        CHECK(sum == ExactRational(total));
        CHECK(total == static_cast<long>(std::pow(d, n) + 0.5));
    }
}
