#include "toepl/coding.hpp"

#include <limits>

#include "toepl/errors.hpp"

namespace toepl {

namespace {

// Letter of the growing-blocks sequence. Separators c (id 2) and d (id 3)
// sit at indices (i+1)^2 - 2 for i >= 1, alternating starting with c; all
// other indices alternate a (id 0) and b (id 1), each run starting with a.
Letter growing_blocks_letter(std::size_t k) {
    // Find i with (i+1)^2 - 2 == k, if any.
    std::size_t i = 1;
    while ((i + 1) * (i + 1) - 2 < k) ++i;
    if (i >= 1 && (i + 1) * (i + 1) - 2 == k) return (i % 2 == 1) ? Letter{2} : Letter{3};
    // Run start: 0 for the initial run, else (i+1)^2 - 1 for the last separator before k.
    std::size_t run_start = 0;
    for (std::size_t j = 1; (j + 1) * (j + 1) - 2 < k; ++j) run_start = (j + 1) * (j + 1) - 1;
    return ((k - run_start) % 2 == 0) ? Letter{0} : Letter{1};
}

}  // namespace

void CodingSpec::validate() const {
    alphabet.validate();
    if (a.empty()) throw SpecError("coding spec: sequence a must be non-empty");
    if (a.size() != n.size()) throw SpecError("coding spec: a and n must have equal length");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (!alphabet.valid(a[k])) throw SpecError("coding spec: a[" + std::to_string(k) + "] not in alphabet");
        if (n[k] < 2) throw SpecError("coding spec: n[" + std::to_string(k) + "] = " +
                                      std::to_string(n[k]) + " violates n_k >= 2");
        if (k + 1 < a.size() && a[k] == a[k + 1])
            throw SpecError("coding spec: a[" + std::to_string(k) + "] equals a[" + std::to_string(k + 1) +
                            "]; consecutive letters must differ");
    }
    if (r) {
        if (r->size() > a.size()) throw SpecError("coding spec: r longer than a");
        for (std::size_t k = 0; k < r->size(); ++k)
            if ((*r)[k] < 0 || (*r)[k] >= n[k])
                throw SpecError("coding spec: r[" + std::to_string(k) + "] outside [0, n_k)");
    }
    if (const auto* t = std::get_if<PeriodicTail>(&tail)) {
        if (t->period_a.empty() || t->period_a.size() != t->period_n.size())
            throw SpecError("coding spec: tail period must be non-empty with matching a/n lengths");
        if (t->preperiod > a.size()) throw SpecError("coding spec: tail preperiod exceeds explicit depth");
        for (std::size_t k = 0; k < t->period_a.size(); ++k) {
            if (!alphabet.valid(t->period_a[k])) throw SpecError("coding spec: tail letter not in alphabet");
            if (t->period_n[k] < 2) throw SpecError("coding spec: tail multiplier violates n_k >= 2");
        }
        // Consecutive-distinct must hold along the infinite expansion as well,
        // including the wrap of the period onto itself.
        for (std::size_t k = 0; k + 1 < t->period_a.size(); ++k)
            if (t->period_a[k] == t->period_a[k + 1])
                throw SpecError("coding spec: tail has equal consecutive letters");
        if (t->period_a.back() == t->period_a.front())
            throw SpecError("coding spec: tail wraps onto equal consecutive letters");
        // Explicit entries at index >= preperiod are the unrolled start of the
        // period and must agree with it.
        for (std::size_t k = t->preperiod; k < a.size(); ++k) {
            std::size_t p = (k - t->preperiod) % t->period_a.size();
            if (a[k] != t->period_a[p] || n[k] != t->period_n[p])
                throw SpecError("coding spec: explicit entries beyond preperiod disagree with tail period");
        }
        // Junction between the explicit part and the first generated tail entry.
        if (t->preperiod == a.size() && a.back() == t->period_a.front())
            throw SpecError("coding spec: tail junction repeats a letter");
    }
    if (std::holds_alternative<GrowingBlocksTail>(tail)) {
        if (alphabet.size() != 4) throw SpecError("growing-blocks tail requires a four-letter alphabet");
        for (std::size_t k = 0; k < a.size(); ++k) {
            if (a[k] != growing_blocks_letter(k) || n[k] != 2)
                throw SpecError("coding spec: explicit entries disagree with growing-blocks tail at k=" +
                                std::to_string(k));
        }
    }
}

std::size_t CodingSpec::max_level() const {
    return has_tail() ? std::numeric_limits<std::size_t>::max() : a.size() - 1;
}

std::size_t CodingSpec::max_hole_level() const { return r ? (r->empty() ? 0 : r->size() - 1) : 0; }

Letter CodingSpec::letter_at(std::size_t k) const {
    if (k < a.size()) return a[k];
    if (const auto* t = std::get_if<PeriodicTail>(&tail)) {
        std::size_t off = (k - t->preperiod) % t->period_a.size();
        return t->period_a[off];
    }
    if (std::holds_alternative<GrowingBlocksTail>(tail)) return growing_blocks_letter(k);
    throw DepthError("coding spec: a_" + std::to_string(k) + " beyond available depth");
}

std::int64_t CodingSpec::multiplier_at(std::size_t k) const {
    if (k < n.size()) return n[k];
    if (const auto* t = std::get_if<PeriodicTail>(&tail)) {
        std::size_t off = (k - t->preperiod) % t->period_n.size();
        return t->period_n[off];
    }
    if (std::holds_alternative<GrowingBlocksTail>(tail)) return 2;
    throw DepthError("coding spec: n_" + std::to_string(k) + " beyond available depth");
}

std::int64_t CodingSpec::hole_at(std::size_t k) const {
    if (!r) throw SpecError("coding spec: hole phases (r) not provided");
    if (k < r->size()) return (*r)[k];
    throw DepthError("coding spec: r_" + std::to_string(k) + " beyond available depth");
}

BigInt CodingSpec::block_length_plus_one(std::size_t levels) const {
    BigInt acc = 1;
    for (std::size_t k = 0; k < levels; ++k) acc *= BigInt(multiplier_at(k));
    return acc;
}

void SturmianSpec::validate() const {
    if (cf.empty() && tail_period.empty()) throw SpecError("sturmian spec: empty continued fraction");
    for (std::size_t k = 0; k < cf.size(); ++k)
        if (cf[k] < 1) throw SpecError("sturmian spec: cf[" + std::to_string(k) + "] must be >= 1");
    for (std::int64_t v : tail_period)
        if (v < 1) throw SpecError("sturmian spec: tail coefficient must be >= 1");
}

std::int64_t SturmianSpec::coefficient(std::size_t k) const {
    if (k == 0) throw ArgError("sturmian spec: coefficients are indexed from 1");
    std::size_t i = k - 1;
    if (i < cf.size()) return cf[i];
    if (!tail_period.empty()) return tail_period[(i - cf.size()) % tail_period.size()];
    throw DepthError("sturmian spec: cf coefficient " + std::to_string(k) + " beyond available depth");
}

Alphabet SturmianSpec::default_alphabet() { return Alphabet{{"a", "b"}}; }

}  // namespace toepl
