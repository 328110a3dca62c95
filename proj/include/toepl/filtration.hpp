#pragma once

#include <cstddef>
#include <vector>

#include "toepl/coding.hpp"
#include "toepl/words.hpp"

namespace toepl {

// The descending sets A_k = { a_j : j >= k } together with their limit, the
// eventual alphabet. Exact values require a continuation rule on the spec.
struct AlphabetFiltration {
    std::vector<std::vector<Letter>> sets;  // A_0..A_depth, each sorted
    std::vector<Letter> eventual;           // sorted
    std::size_t stabilization = 0;          // minimal N with A_k = eventual for all k >= N
    std::size_t depth = 0;

    const std::vector<Letter>& at(std::size_t k) const;
    bool contains(std::size_t k, Letter l) const;
    std::size_t size_at(std::size_t k) const;
};

AlphabetFiltration filtration(const CodingSpec& spec);

// ell(k) = min{ j > k : {a_{k+1}, ..., a_j} = A_{k+1} } together with the
// indices m_0 = 0 < m_1 < ... at which ell strictly increases.
struct OccurrenceProfile {
    std::vector<std::size_t> ell;  // ell(0)..ell(k_max)
    std::vector<std::size_t> m;    // m_0..m_{i_max}

    std::size_t ell_at(std::size_t k) const;
};

OccurrenceProfile occurrence_profile(const CodingSpec& spec, std::size_t i_max);

}  // namespace toepl
