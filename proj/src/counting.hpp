#pragma once

// Internal counting structures for the language oracle: a generalized suffix
// automaton (distinct subwords per length) and a generalized palindromic tree
// (distinct palindromic subwords per length), both over a set of words.

#include <cstdint>
#include <map>
#include <vector>

#include "toepl/words.hpp"

namespace toepl::detail {

class SuffixAutomaton {
  public:
    SuffixAutomaton();
    void add_word(const Word& w);
    // counts[L] = number of distinct subwords of length L across added words,
    // for 0 <= L <= max_len (counts[0] == 1 for the empty word).
    std::vector<std::int64_t> subword_counts(std::size_t max_len) const;

  private:
    struct State {
        std::int64_t len = 0;
        std::int32_t link = -1;
        std::map<Letter, std::int32_t> next;
    };
    std::int32_t extend(std::int32_t last, Letter c);
    std::int32_t clone_state(std::int32_t q, std::int64_t len);
    std::vector<State> states_;
};

class PalindromeTree {
  public:
    PalindromeTree();
    void add_word(const Word& w);
    // counts[L] = number of distinct palindromic subwords of length L,
    // 0 <= L <= max_len (counts[0] == 1 for the empty word).
    std::vector<std::int64_t> palindrome_counts(std::size_t max_len) const;

  private:
    struct Node {
        std::int64_t len;
        std::int32_t link;
        std::map<Letter, std::int32_t> next;
    };
    std::vector<Node> nodes_;
};

}  // namespace toepl::detail
