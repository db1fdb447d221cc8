#ifndef PERMABOUND_SUBSET_HPP
#define PERMABOUND_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace permabound {

inline constexpr int kMaxUniverse = 63;

/// Binomial coefficient in a 64-bit word. Valid for n <= 63 (the largest
/// value, C(63,31), still fits). Returns 0 for k < 0 or k > n.
std::uint64_t binom64(int n, int k);

/// Subset of {0,...,universe_size-1} stored as a bitmask. Immutable value type.
class IndexSubset {
public:
    IndexSubset() = default;
    IndexSubset(std::uint64_t bits, int universe_size);

    static IndexSubset empty_set(int universe_size) { return {0, universe_size}; }
    static IndexSubset full_set(int universe_size);
    static IndexSubset of(std::initializer_list<int> elements, int universe_size);
    static IndexSubset of(const std::vector<int>& elements, int universe_size);

    std::uint64_t bits() const { return bits_; }
    int universe_size() const { return universe_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    bool contains(int i) const { return (bits_ >> i) & 1u; }
    bool subset_of(const IndexSubset& other) const { return (bits_ & ~other.bits_) == 0; }
    bool disjoint_with(const IndexSubset& other) const { return (bits_ & other.bits_) == 0; }

    IndexSubset union_with(const IndexSubset& o) const { return {bits_ | o.bits_, universe_}; }
    IndexSubset intersect(const IndexSubset& o) const { return {bits_ & o.bits_, universe_}; }
    IndexSubset difference(const IndexSubset& o) const { return {bits_ & ~o.bits_, universe_}; }
    IndexSubset complement() const;
    IndexSubset with(int i) const;
    IndexSubset without(int i) const;

    /// Elements in ascending order.
    std::vector<int> elements() const;
    /// Smallest element; subset must be nonempty.
    int min_element() const { return std::countr_zero(bits_); }

    /// Human-readable "{a,b,c}" with 0-based elements.
    std::string str() const;

    friend bool operator==(const IndexSubset& a, const IndexSubset& b) {
        return a.bits_ == b.bits_ && a.universe_ == b.universe_;
    }
    friend bool operator<(const IndexSubset& a, const IndexSubset& b) { return a.bits_ < b.bits_; }

private:
    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

/// Position of a k-subset in the ascending-bitmask (equivalently colexicographic)
/// enumeration of all k-subsets of {0..n-1}. Inverse of unrank_combination.
std::uint64_t combination_rank(const IndexSubset& s);
IndexSubset unrank_combination(std::uint64_t rank, int n, int k);

/// All k-subsets of {0..n-1} in ascending bitmask order (Gosper's hack).
/// Yields exactly binom64(n,k) subsets. Throws std::invalid_argument when
/// k > n or n > 63.
class CombinationRange {
public:
    CombinationRange(int n, int k);

    class iterator {
    public:
        using value_type = IndexSubset;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        iterator(std::uint64_t bits, std::uint64_t remaining, int n)
            : bits_(bits), remaining_(remaining), n_(n) {}

        IndexSubset operator*() const { return {bits_, n_}; }
        iterator& operator++();
        iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend bool operator==(const iterator& a, const iterator& b) {
            return a.remaining_ == b.remaining_;
        }

    private:
        std::uint64_t bits_ = 0;
        std::uint64_t remaining_ = 0;
        int n_ = 0;
    };

    iterator begin() const;
    iterator end() const { return {0, 0, n_}; }
    std::uint64_t count() const { return count_; }

private:
    int n_;
    int k_;
    std::uint64_t count_;
};

/// Convenience: all k-subsets of {0..n-1}.
inline CombinationRange iter_subsets(int n, int k) { return {n, k}; }

/// All size-k subsets of an arbitrary mask, in ascending bitmask order.
/// Enumerates combinations of the mask's bit positions.
class MaskedCombinationRange {
public:
    MaskedCombinationRange(const IndexSubset& mask, int k);

    class iterator {
    public:
        using value_type = IndexSubset;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        iterator() = default;
        iterator(const MaskedCombinationRange* range, CombinationRange::iterator pos)
            : range_(range), pos_(pos) {}

        IndexSubset operator*() const;
        iterator& operator++() { ++pos_; return *this; }
        iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.pos_ == b.pos_; }

    private:
        const MaskedCombinationRange* range_ = nullptr;
        CombinationRange::iterator pos_;
    };

    iterator begin() const { return {this, positions_range().begin()}; }
    iterator end() const { return {this, positions_range().end()}; }
    std::uint64_t count() const { return binom64(static_cast<int>(elements_.size()), k_); }

private:
    CombinationRange positions_range() const {
        return {static_cast<int>(elements_.size()), k_};
    }

    std::vector<int> elements_;
    int k_;
    int universe_;

    friend class iterator;
};

inline MaskedCombinationRange subsets_of(const IndexSubset& mask, int k) { return {mask, k}; }

} // namespace permabound

#endif
