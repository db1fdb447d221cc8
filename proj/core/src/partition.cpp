#include "permabound/partition.hpp"

#include <numeric>
#include <stdexcept>

namespace permabound {

ColumnPartition::ColumnPartition(std::vector<IndexSubset> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw std::invalid_argument("ColumnPartition: no blocks");
    std::uint64_t seen = 0;
    int universe_size = blocks_.front().universe_size();
    for (const IndexSubset& b : blocks_) {
        if (b.empty()) throw std::invalid_argument("ColumnPartition: empty block");
        if (b.universe_size() != universe_size)
            throw std::invalid_argument("ColumnPartition: blocks over different universes");
        if ((seen & b.bits()) != 0)
            throw std::invalid_argument("ColumnPartition: blocks overlap");
        seen |= b.bits();
    }
    universe_ = IndexSubset{seen, universe_size};
}

ColumnPartition ColumnPartition::consecutive(const std::vector<int>& sizes,
                                             const IndexSubset& universe) {
    int total = std::accumulate(sizes.begin(), sizes.end(), 0);
    if (total != universe.size())
        throw std::invalid_argument("ColumnPartition: block sizes must sum to |universe|");
    std::vector<int> elems = universe.elements();
    std::vector<IndexSubset> blocks;
    std::size_t pos = 0;
    for (int m : sizes) {
        if (m <= 0) throw std::invalid_argument("ColumnPartition: block size must be positive");
        std::vector<int> block(elems.begin() + static_cast<std::ptrdiff_t>(pos),
                               elems.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(m)));
        blocks.push_back(IndexSubset::of(block, universe.universe_size()));
        pos += static_cast<std::size_t>(m);
    }
    return ColumnPartition{std::move(blocks)};
}

ColumnPartition ColumnPartition::consecutive(const std::vector<int>& sizes, int n) {
    return consecutive(sizes, IndexSubset::full_set(n));
}

ColumnPartition ColumnPartition::singletons(int n) {
    return consecutive(std::vector<int>(static_cast<std::size_t>(n), 1), n);
}

ColumnPartition ColumnPartition::single_block(const IndexSubset& universe) {
    return ColumnPartition{{universe}};
}

std::vector<int> ColumnPartition::block_sizes() const {
    std::vector<int> out;
    out.reserve(blocks_.size());
    for (const IndexSubset& b : blocks_) out.push_back(b.size());
    return out;
}

} // namespace permabound
