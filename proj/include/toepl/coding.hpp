#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "toepl/bigint.hpp"
#include "toepl/words.hpp"

namespace toepl {

// Eventually periodic continuation of the (a_k, n_k) pairs. Beyond the
// explicitly listed entries, the pairs repeat with the given period. The
// preperiod counts entries of the explicit list that are not part of the
// repeating pattern.
struct PeriodicTail {
    std::size_t preperiod = 0;
    std::vector<Letter> period_a;
    std::vector<std::int64_t> period_n;
};

// The growing-blocks coding sequence over {a,b,c,d} with n_k == 2: runs of
// alternating a,b of even, increasing lengths, separated by c and d in turns.
// Separators sit at the indices (i+1)^2 - 2, i >= 1. Not eventually periodic,
// but all asymptotic quantities have closed forms, so exact verdicts remain
// possible. Used by the bundled non-Boshernitzan example.
struct GrowingBlocksTail {};

using TailRule = std::variant<std::monostate, PeriodicTail, GrowingBlocksTail>;

// A simple Toeplitz subshift given by its coding sequences, truncated to a
// finite explicit depth with an optional continuation rule.
struct CodingSpec {
    Alphabet alphabet;
    std::vector<Letter> a;        // a_0..a_K, consecutive entries distinct
    std::vector<std::int64_t> n;  // n_0..n_K, each >= 2
    std::optional<std::vector<std::int64_t>> r;  // hole phases, 0 <= r_k < n_k
    TailRule tail;
    std::string name;  // optional display name from the spec file

    void validate() const;

    bool has_tail() const { return !std::holds_alternative<std::monostate>(tail); }
    bool unbounded_depth() const { return has_tail(); }
    // Largest k for which a_k/n_k are defined (SIZE_MAX with a tail).
    std::size_t max_level() const;
    // Largest k for which r_k is defined.
    std::size_t max_hole_level() const;

    Letter letter_at(std::size_t k) const;
    std::int64_t multiplier_at(std::size_t k) const;
    std::int64_t hole_at(std::size_t k) const;

    // |p^(k)| + 1 = n_0 * ... * n_k  (1 for k == -1, passed as level+1 == 0).
    BigInt block_length_plus_one(std::size_t levels) const;
};

// A Sturmian subshift given by the continued fraction of its rotation number,
// optionally continued periodically.
struct SturmianSpec {
    std::vector<std::int64_t> cf;  // n_1..n_K, each >= 1
    std::vector<std::int64_t> tail_period;  // empty = truncated expansion
    std::string name;

    void validate() const;
    bool has_tail() const { return !tail_period.empty(); }
    // n_k for k >= 1; throws DepthError past a truncated expansion.
    std::int64_t coefficient(std::size_t k) const;

    static Alphabet default_alphabet();  // {a, b}
};

}  // namespace toepl
