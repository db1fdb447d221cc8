#include "permabound/subset.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace permabound {

namespace {

// Pascal table up to n = 64; C(64,32) < 2^63 so every entry fits.
struct BinomTable {
    std::array<std::array<std::uint64_t, 65>, 65> c{};
    BinomTable() {
        for (int n = 0; n <= 64; ++n) {
            c[n][0] = 1;
            for (int k = 1; k <= n; ++k)
                c[n][k] = c[n - 1][k - 1] + (k <= n - 1 ? c[n - 1][k] : 0);
        }
    }
};

const BinomTable& binom_table() {
    static const BinomTable t;
    return t;
}

} // namespace

std::uint64_t binom64(int n, int k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (n > 64) throw std::invalid_argument("binom64: n > 64 not representable");
    return binom_table().c[n][k];
}

IndexSubset::IndexSubset(std::uint64_t bits, int universe_size)
    : bits_(bits), universe_(universe_size) {
    if (universe_size < 0 || universe_size > kMaxUniverse)
        throw std::invalid_argument("IndexSubset: universe size must be in [0, 63]");
    if (universe_size < 64 && (bits >> universe_size) != 0)
        throw std::invalid_argument("IndexSubset: bit set beyond universe");
}

IndexSubset IndexSubset::full_set(int universe_size) {
    if (universe_size < 0 || universe_size > kMaxUniverse)
        throw std::invalid_argument("IndexSubset: universe size must be in [0, 63]");
    std::uint64_t bits = universe_size == 0 ? 0 : (~std::uint64_t{0} >> (64 - universe_size));
    return {bits, universe_size};
}

IndexSubset IndexSubset::of(std::initializer_list<int> elements, int universe_size) {
    return of(std::vector<int>(elements), universe_size);
}

IndexSubset IndexSubset::of(const std::vector<int>& elements, int universe_size) {
    std::uint64_t bits = 0;
    for (int e : elements) {
        if (e < 0 || e >= universe_size)
            throw std::invalid_argument("IndexSubset: element out of universe");
        bits |= std::uint64_t{1} << e;
    }
    return {bits, universe_size};
}

IndexSubset IndexSubset::complement() const {
    return full_set(universe_).difference(*this);
}

IndexSubset IndexSubset::with(int i) const {
    if (i < 0 || i >= universe_) throw std::invalid_argument("IndexSubset: element out of universe");
    return {bits_ | (std::uint64_t{1} << i), universe_};
}

IndexSubset IndexSubset::without(int i) const {
    return {bits_ & ~(std::uint64_t{1} << i), universe_};
}

std::vector<int> IndexSubset::elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
        out.push_back(std::countr_zero(b));
    return out;
}

std::string IndexSubset::str() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        if (!first) os << ',';
        os << e;
        first = false;
    }
    os << '}';
    return os.str();
}

std::uint64_t combination_rank(const IndexSubset& s) {
    std::uint64_t rank = 0;
    int i = 1;
    for (int pos : s.elements())
        rank += binom64(pos, i++);
    return rank;
}

IndexSubset unrank_combination(std::uint64_t rank, int n, int k) {
    std::uint64_t bits = 0;
    int bound = n;
    for (int i = k; i >= 1; --i) {
        // largest p < bound with C(p, i) <= rank
        int p = i - 1;
        while (p + 1 < bound && binom64(p + 1, i) <= rank) ++p;
        rank -= binom64(p, i);
        bits |= std::uint64_t{1} << p;
        bound = p;
    }
    return {bits, n};
}

CombinationRange::CombinationRange(int n, int k) : n_(n), k_(k) {
    if (n < 0 || n > kMaxUniverse)
        throw std::invalid_argument("iter_subsets: universe size must be in [0, 63]");
    if (k < 0 || k > n)
        throw std::invalid_argument("iter_subsets: cardinality out of range");
    count_ = binom64(n, k);
}

CombinationRange::iterator CombinationRange::begin() const {
    std::uint64_t first = k_ == 0 ? 0 : (~std::uint64_t{0} >> (64 - k_));
    return {first, count_, n_};
}

CombinationRange::iterator& CombinationRange::iterator::operator++() {
    --remaining_;
    if (remaining_ == 0 || bits_ == 0) return *this;
    // Gosper's hack: next higher bitmask with the same popcount.
    std::uint64_t v = bits_;
    std::uint64_t t = v | (v - 1);
    bits_ = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
    return *this;
}

MaskedCombinationRange::MaskedCombinationRange(const IndexSubset& mask, int k)
    : elements_(mask.elements()), k_(k), universe_(mask.universe_size()) {
    if (k < 0 || k > static_cast<int>(elements_.size()))
        throw std::invalid_argument("subsets_of: cardinality out of range");
}

IndexSubset MaskedCombinationRange::iterator::operator*() const {
    IndexSubset positions = *pos_;
    std::uint64_t bits = 0;
    for (std::uint64_t b = positions.bits(); b != 0; b &= b - 1)
        bits |= std::uint64_t{1} << range_->elements_[static_cast<std::size_t>(std::countr_zero(b))];
    return {bits, range_->universe_};
}

} // namespace permabound
