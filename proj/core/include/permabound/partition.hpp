#ifndef PERMABOUND_PARTITION_HPP
#define PERMABOUND_PARTITION_HPP

#include <vector>

#include "permabound/subset.hpp"

namespace permabound {

/// Ordered list of pairwise-disjoint nonempty subsets covering a column set.
class ColumnPartition {
public:
    explicit ColumnPartition(std::vector<IndexSubset> blocks);

    /// Blocks of the given sizes over consecutive elements of `universe`
    /// taken in ascending order. sizes must sum to |universe|.
    static ColumnPartition consecutive(const std::vector<int>& sizes, const IndexSubset& universe);
    /// Consecutive blocks over the full universe {0..n-1}.
    static ColumnPartition consecutive(const std::vector<int>& sizes, int n);
    /// n singleton blocks over {0..n-1}.
    static ColumnPartition singletons(int n);
    /// One block equal to `universe`.
    static ColumnPartition single_block(const IndexSubset& universe);

    const std::vector<IndexSubset>& blocks() const { return blocks_; }
    const IndexSubset& universe() const { return universe_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    int block_size(int k) const { return blocks_[static_cast<std::size_t>(k)].size(); }
    std::vector<int> block_sizes() const;

private:
    std::vector<IndexSubset> blocks_;
    IndexSubset universe_;
};

} // namespace permabound

#endif
