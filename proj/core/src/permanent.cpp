#include "permabound/permanent.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "permabound/errors.hpp"

namespace permabound {

Complex per_naive(const ComplexMatrix& z) {
    if (!z.square()) throw std::invalid_argument("per_naive: matrix must be square");
    int n = z.rows();
    if (n > kNaiveCap) throw size_error("per_naive: n exceeds oracle cap of 10");
    if (n == 0) return {1.0, 0.0};

    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Complex sum = 0.0;
    do {
        Complex prod = 1.0;
        for (int j = 0; j < n; ++j) prod *= z.at(j, perm[static_cast<std::size_t>(j)]);
        sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

namespace {

// Partial Ryser sum over the contiguous counter range [first, last).
// Counter k maps to the column subset gray(k) = k ^ (k >> 1).
Complex ryser_chunk(const ComplexMatrix& z, std::uint64_t first, std::uint64_t last) {
    if (first >= last) return {0.0, 0.0};
    int n = z.rows();
    std::uint64_t gray = first ^ (first >> 1);

    std::vector<Complex> row_sums(static_cast<std::size_t>(n), Complex{0.0, 0.0});
    for (std::uint64_t b = gray; b != 0; b &= b - 1) {
        int c = std::countr_zero(b);
        for (int j = 0; j < n; ++j) row_sums[static_cast<std::size_t>(j)] += z.at(j, c);
    }
    int parity = std::popcount(gray) & 1;

    Complex acc = 0.0;
    for (std::uint64_t k = first;;) {
        Complex prod = 1.0;
        for (int j = 0; j < n; ++j) prod *= row_sums[static_cast<std::size_t>(j)];
        // sign (-1)^(n - |S|)
        if (((n & 1) ^ parity) != 0) acc -= prod;
        else acc += prod;

        if (++k == last) break;
        int c = std::countr_zero(k);
        std::uint64_t bit = std::uint64_t{1} << c;
        gray ^= bit;
        parity ^= 1;
        if (gray & bit)
            for (int j = 0; j < n; ++j) row_sums[static_cast<std::size_t>(j)] += z.at(j, c);
        else
            for (int j = 0; j < n; ++j) row_sums[static_cast<std::size_t>(j)] -= z.at(j, c);
    }
    return acc;
}

} // namespace

Complex per_ryser(const ComplexMatrix& z, int workers, int cap) {
    if (!z.square()) throw std::invalid_argument("per_ryser: matrix must be square");
    int n = z.rows();
    if (n > cap) throw size_error("per_ryser: n exceeds the exact-permanent cap");
    if (n == 0) return {1.0, 0.0};

    std::uint64_t total = (std::uint64_t{1} << n) - 1; // counters 1 .. 2^n - 1

    // Chunk boundaries depend only on n, never on the worker count.
    int n_chunks = n <= 14 ? 1 : 256;
    std::vector<std::uint64_t> starts;
    starts.reserve(static_cast<std::size_t>(n_chunks) + 1);
    for (int c = 0; c <= n_chunks; ++c) {
        auto offset = static_cast<std::uint64_t>(
            static_cast<unsigned __int128>(total) * static_cast<unsigned>(c) / static_cast<unsigned>(n_chunks));
        starts.push_back(1 + offset);
    }

    std::vector<Complex> partial(static_cast<std::size_t>(n_chunks), Complex{0.0, 0.0});
    int used = std::max(1, std::min(workers, n_chunks));
    if (used == 1) {
        for (int c = 0; c < n_chunks; ++c)
            partial[static_cast<std::size_t>(c)] =
                ryser_chunk(z, starts[static_cast<std::size_t>(c)], starts[static_cast<std::size_t>(c) + 1]);
    } else {
        std::atomic<int> next{0};
        auto worker = [&] {
            for (;;) {
                int c = next.fetch_add(1);
                if (c >= n_chunks) return;
                partial[static_cast<std::size_t>(c)] =
                    ryser_chunk(z, starts[static_cast<std::size_t>(c)], starts[static_cast<std::size_t>(c) + 1]);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(used));
        for (int t = 0; t < used; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    Complex sum = 0.0;
    for (const Complex& p : partial) sum += p; // fixed chunk order
    return sum;
}

PermanentResult compute_permanent(const ComplexMatrix& z, PermanentAlgorithm algorithm, int workers,
                                  int cap) {
    Complex value = algorithm == PermanentAlgorithm::naive ? per_naive(z)
                                                           : per_ryser(z, workers, cap);
    return {value, algorithm, z.rows()};
}

Complex per_sub(const ComplexMatrix& z, const IndexSubset& rows, const IndexSubset& cols) {
    if (rows.size() != cols.size())
        throw std::invalid_argument("per_sub: row and column subsets must have equal cardinality");
    if (rows.empty()) return {1.0, 0.0};
    return per_ryser(submatrix(z, rows, cols), 1, kMaxUniverse);
}

Complex laplace_expand(const ComplexMatrix& z, const IndexSubset& row_set, const IndexSubset& col_set,
                       const IndexSubset& col_block) {
    if (!col_block.subset_of(col_set))
        throw std::invalid_argument("laplace_expand: M must be a subset of L");
    if (row_set.size() != col_set.size())
        throw std::invalid_argument("laplace_expand: |J| must equal |L|");
    int m = col_block.size();
    IndexSubset rest_cols = col_set.difference(col_block);
    Complex sum = 0.0;
    for (IndexSubset inner : subsets_of(row_set, m))
        sum += per_sub(z, inner, col_block) * per_sub(z, row_set.difference(inner), rest_cols);
    return sum;
}

} // namespace permabound
