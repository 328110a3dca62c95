#pragma once

#include <string>
#include <vector>

#include "toepl/bigint.hpp"
#include "toepl/coding.hpp"
#include "toepl/filtration.hpp"

namespace toepl {

struct FormulaValue {
    BigInt value;
    std::string branch;  // which piece of the piecewise form produced the value
};

// Exact subword complexity p(L). Requires a continuation rule (the letter
// sets A_k enter the coefficients).
FormulaValue complexity_formula(const CodingSpec& spec, const BigInt& L);

// Exact growth s(L) = p(L+1) - p(L).
FormulaValue growth_formula(const CodingSpec& spec, const BigInt& L);

// Exact palindrome complexity P(L).
FormulaValue palindrome_formula(const CodingSpec& spec, const BigInt& L);

// Exact repetitivity R(L) on the covered range (L at least
// |p^(m_1)| - |p^(m_1 - 1)| + 1); RangeError below it.
FormulaValue repetitivity_formula(const CodingSpec& spec, const BigInt& L);

struct RepetitivityRange {
    BigInt lo;
    BigInt hi;
};
// The L-range served by segment i >= 1 of the repetitivity formula.
RepetitivityRange repetitivity_segment(const CodingSpec& spec, std::size_t i);

// Maximum of p(L)/L over |p^(k-1)|+2 <= L <= |p^(k)|+1 (valid once
// A_{k-1} equals the eventual alphabet) and where it is attained.
struct QuotientProfile {
    BigRational max_value;
    BigInt argmax;
};
QuotientProfile complexity_quotient_max(const CodingSpec& spec, std::size_t k);

struct ConditionReport {
    std::string condition;
    bool verdict = false;
    std::string witness;
    std::vector<std::string> samples;
};

// Boshernitzan condition: some subsequence of the jump indices keeps the
// gap products bounded. Exact for periodic and growing-blocks tails.
ConditionReport boshernitzan_verdict(const CodingSpec& spec, std::size_t probe = 12);

ConditionReport linear_repetitivity_verdict(const CodingSpec& spec, std::size_t probe = 12);

// alpha-repetitivity for rational alpha >= 1.
ConditionReport alpha_repetitivity_verdict(const CodingSpec& spec, const BigRational& alpha,
                                           std::size_t probe = 12);

}  // namespace toepl
