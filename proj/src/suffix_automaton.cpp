#include "counting.hpp"

namespace toepl::detail {

SuffixAutomaton::SuffixAutomaton() { states_.push_back(State{0, -1, {}}); }

std::int32_t SuffixAutomaton::clone_state(std::int32_t q, std::int64_t len) {
    State c = states_[static_cast<std::size_t>(q)];
    c.len = len;
    states_.push_back(std::move(c));
    return static_cast<std::int32_t>(states_.size() - 1);
}

std::int32_t SuffixAutomaton::extend(std::int32_t last, Letter c) {
    // Generalized construction: reuse an existing transition when possible.
    auto it = states_[static_cast<std::size_t>(last)].next.find(c);
    if (it != states_[static_cast<std::size_t>(last)].next.end()) {
        std::int32_t q = it->second;
        if (states_[static_cast<std::size_t>(q)].len == states_[static_cast<std::size_t>(last)].len + 1)
            return q;
        std::int32_t clone = clone_state(q, states_[static_cast<std::size_t>(last)].len + 1);
        std::int32_t p = last;
        while (p != -1) {
            auto& nx = states_[static_cast<std::size_t>(p)].next;
            auto pit = nx.find(c);
            if (pit == nx.end() || pit->second != q) break;
            pit->second = clone;
            p = states_[static_cast<std::size_t>(p)].link;
        }
        states_[static_cast<std::size_t>(q)].link = clone;
        return clone;
    }

    std::int32_t cur = static_cast<std::int32_t>(states_.size());
    states_.push_back(State{states_[static_cast<std::size_t>(last)].len + 1, -1, {}});
    std::int32_t p = last;
    while (p != -1 && !states_[static_cast<std::size_t>(p)].next.count(c)) {
        states_[static_cast<std::size_t>(p)].next[c] = cur;
        p = states_[static_cast<std::size_t>(p)].link;
    }
    if (p == -1) {
        states_[static_cast<std::size_t>(cur)].link = 0;
    } else {
        std::int32_t q = states_[static_cast<std::size_t>(p)].next[c];
        if (states_[static_cast<std::size_t>(q)].len == states_[static_cast<std::size_t>(p)].len + 1) {
            states_[static_cast<std::size_t>(cur)].link = q;
        } else {
            std::int32_t clone = clone_state(q, states_[static_cast<std::size_t>(p)].len + 1);
            while (p != -1) {
                auto& nx = states_[static_cast<std::size_t>(p)].next;
                auto pit = nx.find(c);
                if (pit == nx.end() || pit->second != q) break;
                pit->second = clone;
                p = states_[static_cast<std::size_t>(p)].link;
            }
            states_[static_cast<std::size_t>(q)].link = clone;
            states_[static_cast<std::size_t>(cur)].link = clone;
        }
    }
    return cur;
}

void SuffixAutomaton::add_word(const Word& w) {
    std::int32_t last = 0;
    for (Letter c : w) last = extend(last, c);
}

std::vector<std::int64_t> SuffixAutomaton::subword_counts(std::size_t max_len) const {
    // Each state covers the length interval (len(link), len]; one distinct
    // subword per covered length.
    std::vector<std::int64_t> diff(max_len + 2, 0);
    for (std::size_t v = 1; v < states_.size(); ++v) {
        std::int64_t hi = states_[v].len;
        std::int64_t lo = states_[static_cast<std::size_t>(states_[v].link)].len + 1;
        if (lo > static_cast<std::int64_t>(max_len)) continue;
        hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(max_len));
        diff[static_cast<std::size_t>(lo)] += 1;
        diff[static_cast<std::size_t>(hi) + 1] -= 1;
    }
    std::vector<std::int64_t> counts(max_len + 1, 0);
    counts[0] = 1;
    std::int64_t acc = 0;
    for (std::size_t l = 1; l <= max_len; ++l) {
        acc += diff[l];
        counts[l] = acc;
    }
    return counts;
}

}  // namespace toepl::detail
