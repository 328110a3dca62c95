#include "counting.hpp"

namespace toepl::detail {

PalindromeTree::PalindromeTree() {
    nodes_.push_back(Node{-1, 0, {}});  // imaginary root
    nodes_.push_back(Node{0, 0, {}});   // empty-word root
}

void PalindromeTree::add_word(const Word& w) {
    // Suffix-palindrome state is local to the word; the node pool is shared,
    // so palindromes occurring in several words are stored once.
    std::int32_t last = 1;
    auto fall = [&](std::int32_t v, std::size_t i) {
        while (true) {
            std::int64_t len = nodes_[static_cast<std::size_t>(v)].len;
            std::int64_t j = static_cast<std::int64_t>(i) - len - 1;
            if (j >= 0 && w[static_cast<std::size_t>(j)] == w[i]) return v;
            v = nodes_[static_cast<std::size_t>(v)].link;
        }
    };
    for (std::size_t i = 0; i < w.size(); ++i) {
        Letter c = w[i];
        std::int32_t cur = fall(last, i);
        auto it = nodes_[static_cast<std::size_t>(cur)].next.find(c);
        if (it != nodes_[static_cast<std::size_t>(cur)].next.end()) {
            last = it->second;
            continue;
        }
        std::int32_t node = static_cast<std::int32_t>(nodes_.size());
        std::int64_t len = nodes_[static_cast<std::size_t>(cur)].len + 2;
        std::int32_t link;
        if (len == 1) {
            link = 1;
        } else {
            std::int32_t l = fall(nodes_[static_cast<std::size_t>(cur)].link, i);
            link = nodes_[static_cast<std::size_t>(l)].next.at(c);
        }
        nodes_.push_back(Node{len, link, {}});
        nodes_[static_cast<std::size_t>(cur)].next[c] = node;
        last = node;
    }
}

std::vector<std::int64_t> PalindromeTree::palindrome_counts(std::size_t max_len) const {
    std::vector<std::int64_t> counts(max_len + 1, 0);
    counts[0] = 1;
    for (std::size_t v = 2; v < nodes_.size(); ++v) {
        std::int64_t len = nodes_[v].len;
        if (len >= 1 && len <= static_cast<std::int64_t>(max_len))
            counts[static_cast<std::size_t>(len)] += 1;
    }
    return counts;
}

}  // namespace toepl::detail
