#ifndef CIRCDIAM_COMBINATIONS_HPP
#define CIRCDIAM_COMBINATIONS_HPP

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace circdiam {

// Calls fn with every k-subset of {0, ..., n-1} in lexicographic order.
// k == 0 yields the empty subset once; k > n yields nothing.
template <typename Fn>
void for_each_combination(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    while (true) {
        fn(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace circdiam

#endif
