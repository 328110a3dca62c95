#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toepl/bigint.hpp"
#include "toepl/coding.hpp"
#include "toepl/words.hpp"

namespace toepl {

// Palindromic building block p^(k); level -1 is the empty word.
struct Block {
    std::int64_t level;
    Word word;
};

// Periodic stage of the hole-filling construction. The period word is the
// block p^(k) followed by one hole; the undetermined positions form the
// arithmetic progression period_length * Z + undetermined_residue.
struct HoleFillingState {
    std::int64_t level;
    Word period_word;
    BigInt period_length;
    BigInt undetermined_residue;
};

struct AperiodicityVerdict {
    bool aperiodic;
    std::vector<Letter> eventual_alphabet;  // certificate: the recurrent letters
};

// Default materialization budget; override via TOEPL_BUDGET_BYTES.
std::size_t word_byte_budget();

// Blocks p^(-1)..p^(k_max) from the recursion
// p^(k+1) = (p^(k) a_{k+1})^{n_{k+1}-1} p^(k).
std::vector<Block> build_blocks(const CodingSpec& spec, std::int64_t k_max,
                                std::optional<std::size_t> byte_budget = std::nullopt);

// Just p^(k_max), without keeping the intermediate levels.
Word build_block(const CodingSpec& spec, std::int64_t k_max,
                 std::optional<std::size_t> byte_budget = std::nullopt);

// Prefix of the one-sided limit word of length len.
Word limit_prefix(const CodingSpec& spec, std::size_t len);

HoleFillingState hole_fill(const CodingSpec& spec, std::int64_t level);

// The two-sided Toeplitz word over positions [lo, hi], evaluated through the
// layered filling. Positions that stay undetermined at the deepest available
// layer raise DepthError, except for the single limit hole of an extended
// word, which takes fill_letter (ExtendedWordError when absent).
Word toeplitz_window(const CodingSpec& spec, std::optional<Letter> fill_letter, std::int64_t lo,
                     std::int64_t hi);

// Window [-radius, radius] of the leading word with letter e at the origin.
Word leading_window(const CodingSpec& spec, Letter e, std::size_t radius,
                    std::optional<std::size_t> byte_budget = std::nullopt);

AperiodicityVerdict is_aperiodic(const CodingSpec& spec);

}  // namespace toepl
