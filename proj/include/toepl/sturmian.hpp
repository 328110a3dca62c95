#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "toepl/bigint.hpp"
#include "toepl/coding.hpp"
#include "toepl/words.hpp"

namespace toepl {

// Standard word tower s_0 = b, s_1 = b^{n_1 - 1} a, s_{k+1} = s_k^{n_{k+1}} s_{k-1},
// plus the palindromic trims p^(k) = s_k without its final two letters (k >= 2).
struct SturmianBlocks {
    std::vector<Word> s;  // s_0..s_k_max
    std::vector<Word> p;  // p[k] meaningful for k >= 2; entries 0 and 1 are empty
};

SturmianBlocks sturmian_blocks(const SturmianSpec& spec, std::size_t k_max,
                               std::optional<std::size_t> byte_budget = std::nullopt);

// Letters 1..L of the coding of the circle rotation by the continued-fraction
// value of the spec, started at the exact rational x0 in [0, 1): position j
// reads 'b' when {x0 + j*alpha} lies in [0, 1-alpha) and 'a' otherwise.
// Membership is decided exactly by refining the convergent bracket of alpha.
Word rotation_word(const SturmianSpec& spec, const BigRational& x0, std::size_t count);

// Convergent p_k/q_k of the continued fraction [0; n_1, n_2, ...].
struct Convergent {
    BigInt p;
    BigInt q;
};
std::vector<Convergent> convergents(const SturmianSpec& spec, std::size_t count);

}  // namespace toepl
