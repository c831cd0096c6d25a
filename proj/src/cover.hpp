#pragma once

// Exact minimum set cover over a universe of at most 31 special gaps.
// Items sharing a coverage mask are interchangeable, so the search runs over
// distinct masks and expands multiplicities at the end.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "kunzsg/error.hpp"

namespace kunzsg::detail {

class MaskCover {
public:
    MaskCover(std::uint32_t full, const std::vector<std::uint32_t>& item_masks)
        : full_(full)
    {
        std::map<std::uint32_t, std::vector<std::size_t>> groups;
        for (std::size_t i = 0; i < item_masks.size(); ++i) {
            if (item_masks[i] != 0) groups[item_masks[i]].push_back(i);
        }
        for (auto& [mask, items] : groups) {
            masks_.push_back(mask);
            members_.push_back(std::move(items));
        }
        solve();
    }

    /// 0 when the universe is empty; -1 when no cover exists.
    int min_size() const noexcept { return min_size_; }

    /// Mask combinations reaching the minimum; each is a list of group ids.
    const std::vector<std::vector<std::size_t>>& mask_covers() const noexcept { return covers_; }

    Int count() const
    {
        Int total = 0;
        for (const auto& cover : covers_) {
            Int prod = 1;
            for (std::size_t g : cover) {
                prod = checked::mul(prod, static_cast<Int>(members_[g].size()));
            }
            total = checked::add(total, prod);
        }
        return total;
    }

    /// Calls `fn` with item indices for every minimum cover.
    void for_each_cover(const std::function<void(const std::vector<std::size_t>&)>& fn) const
    {
        std::vector<std::size_t> chosen;
        for (const auto& cover : covers_) expand(cover, 0, chosen, fn);
    }

private:
    void solve()
    {
        if (full_ == 0) {
            min_size_ = 0;
            covers_.push_back({});
            return;
        }
        std::uint32_t reachable = 0;
        for (auto m : masks_) reachable |= m;
        if ((reachable & full_) != full_) {
            min_size_ = -1;
            return;
        }
        const int limit = __builtin_popcount(full_);
        for (int k = 1; k <= limit && covers_.empty(); ++k) {
            std::vector<std::size_t> chosen;
            search(0, k, 0, chosen);
            if (!covers_.empty()) min_size_ = k;
        }
    }

    void search(std::size_t start, int remaining, std::uint32_t acc,
                std::vector<std::size_t>& chosen)
    {
        if (remaining == 0) {
            if (acc == full_) covers_.push_back(chosen);
            return;
        }
        for (std::size_t g = start; g < masks_.size(); ++g) {
            // each group must add something or the cover is not minimal
            if ((masks_[g] & ~acc) == 0) continue;
            chosen.push_back(g);
            search(g + 1, remaining - 1, acc | masks_[g], chosen);
            chosen.pop_back();
        }
    }

    void expand(const std::vector<std::size_t>& cover, std::size_t pos,
                std::vector<std::size_t>& chosen,
                const std::function<void(const std::vector<std::size_t>&)>& fn) const
    {
        if (pos == cover.size()) {
            fn(chosen);
            return;
        }
        for (std::size_t item : members_[cover[pos]]) {
            chosen.push_back(item);
            expand(cover, pos + 1, chosen, fn);
            chosen.pop_back();
        }
    }

    std::uint32_t full_;
    std::vector<std::uint32_t> masks_;
    std::vector<std::vector<std::size_t>> members_;
    std::vector<std::vector<std::size_t>> covers_;
    int min_size_ = -1;
};

}  // namespace kunzsg::detail
