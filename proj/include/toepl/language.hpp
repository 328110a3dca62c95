#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toepl/bigint.hpp"
#include "toepl/coding.hpp"
#include "toepl/sturmian.hpp"
#include "toepl/words.hpp"

namespace toepl {

// Ground-truth view of the language at bounded word length, built from
// representative words that provably carry every subword up to max_valid_L.
// Counting queries run on shared automata; explicit word sets are
// materialized per length on demand.
class LanguageIndex {
  public:
    LanguageIndex(std::vector<Word> representatives, BigInt max_valid_L, Alphabet alphabet,
                  std::string source);

    // Representatives p^(k) e p^(k), e in A_{k+1}, for the smallest level k
    // with |p^(k)| + 1 >= L_max.
    static LanguageIndex for_spec(const CodingSpec& spec, const BigInt& L_max);
    // Representatives p^(k) a b p^(k) and p^(k) b a p^(k) around the
    // palindromic trims of the word tower.
    static LanguageIndex for_sturmian(const SturmianSpec& spec, std::size_t L_max);

    const BigInt& max_valid_L() const { return max_valid_big_; }
    std::size_t max_valid_len() const { return max_valid_; }
    const std::vector<Word>& representatives() const { return reps_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& source() const { return source_; }

    std::int64_t complexity(std::size_t L) const;
    std::int64_t growth(std::size_t L) const;      // complexity(L+1) - complexity(L)
    std::int64_t palindromes(std::size_t L) const;

    // Distinct words of length L, sorted; memory-guarded.
    std::vector<Word> words_of(std::size_t L) const;

    struct SpecialWord {
        Word word;
        std::vector<Letter> extensions;  // sorted, size >= 2
    };
    std::vector<SpecialWord> right_special_words(std::size_t L) const;

  private:
    void require(std::size_t L) const;

    std::vector<Word> reps_;
    Alphabet alphabet_;
    std::string source_;
    std::size_t max_valid_;
    BigInt max_valid_big_;
    std::vector<std::int64_t> subword_counts_;
    std::vector<std::int64_t> palindrome_counts_;
};

// Minimal window length that is guaranteed to contain every word of length L.
// Exact when the answer fits below index.max_valid_L(); otherwise throws
// BoundExceeded carrying the proven lower bound in its message.
std::size_t repetitivity_oracle(const LanguageIndex& index, std::size_t L);

struct CopyCount {
    std::int64_t overlapping;
    std::int64_t disjoint;
};

// Occurrences of u in v; the disjoint count is the greedy earliest-match
// packing, which is maximal for a single pattern.
CopyCount count_copies(const Word& u, const Word& v);

// Overlapping copies of u in the length-L prefix of the one-sided limit word,
// divided by L.
BigRational frequency_estimate(const CodingSpec& spec, const Word& u, std::size_t L);

enum class PatternKind { Left2, Right2, Left3, Right3 };
const char* pattern_kind_name(PatternKind k);

struct PowerHit {
    std::size_t l;
    PatternKind kind;
};

// Scans a two-sided window for square and cube patterns anchored at the
// origin. origin_offset is the index within the window holding position 1.
// Reported per l: Left2 (w[-2l+1..-l] == w[-l+1..0]), Right2
// (w[1..l] == w[l+1..2l]) and the cube variants Left3 / Right3.
std::vector<PowerHit> power_scan(const Word& window, std::size_t origin_offset,
                                 std::size_t l_max = 0);

}  // namespace toepl
