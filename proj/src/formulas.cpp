#include "toepl/formulas.hpp"

#include <algorithm>

#include "toepl/errors.hpp"

namespace toepl {

namespace {

// |p^(k)| with |p^(-1)| = 0; k passed as signed level.
BigInt block_len(const CodingSpec& spec, std::int64_t k) {
    if (k < 0) return 0;
    return spec.block_length_plus_one(static_cast<std::size_t>(k) + 1) - BigInt(1);
}

// Smallest k >= 1 with |p^(k-1)| + 2 <= L <= |p^(k)| + 1.
std::int64_t locate_level(const CodingSpec& spec, const BigInt& L) {
    std::int64_t k = 1;
    while (block_len(spec, k) + BigInt(1) < L) {
        ++k;
        if (!spec.unbounded_depth() && static_cast<std::size_t>(k) > spec.max_level())
            throw DepthError("formula: L = " + L.to_string() + " beyond available depth");
    }
    return k;
}

BigInt indicator(bool b) { return b ? 1 : 0; }

}  // namespace

FormulaValue complexity_formula(const CodingSpec& spec, const BigInt& L) {
    spec.validate();
    if (L.is_negative()) throw ArgError("complexity_formula: L must be >= 0");
    if (L.is_zero()) return {1, "empty-word"};
    AlphabetFiltration filt = filtration(spec);

    BigInt len0 = block_len(spec, 0);
    if (L <= len0) return {BigInt(static_cast<std::int64_t>(filt.size_at(0)) - 1) * L + BigInt(1),
                           "initial"};
    if (L == len0 + BigInt(1)) {
        BigInt v = BigInt(static_cast<std::int64_t>(filt.size_at(0)) - 1) * L +
                   indicator(filt.contains(1, spec.letter_at(0)));
        return {v, "initial-top"};
    }

    std::int64_t k = locate_level(spec, L);
    std::size_t uk = static_cast<std::size_t>(k);
    BigInt lk = block_len(spec, k);
    BigInt lk1 = block_len(spec, k - 1);
    BigInt lk2 = block_len(spec, k - 2);
    BigInt Ak(static_cast<std::int64_t>(filt.size_at(uk)));
    BigInt Ak1(static_cast<std::int64_t>(filt.size_at(uk + 1)));
    BigInt Akm1(static_cast<std::int64_t>(filt.size_at(uk - 1)));
    bool chi_prev = filt.contains(uk, spec.letter_at(uk - 1));       // a_{k-1} in A_k
    bool chi_out = !filt.contains(uk + 1, spec.letter_at(uk));      // a_k not in A_{k+1}

    if (spec.multiplier_at(uk) == 2) {
        BigInt v = (Ak1 - 1) * L + (Akm1 - Ak1) * (lk1 + BigInt(1));
        if (chi_prev) {
            if (L <= lk - lk2)
                return {v + (L - lk1 + lk2), "two:slope"};
            return {v + (lk1 + BigInt(1)), "two:flat"};
        }
        return {v, L <= lk - lk2 ? "two:slope" : "two:flat"};
    }

    BigInt v = (lk1 + BigInt(1)) + (Ak - 1) * L;
    if (L <= BigInt(2) * lk1 - lk2 + BigInt(1))
        return {v + indicator(chi_prev) * (L - BigInt(2) * lk1 + lk2 - BigInt(1)), "many:I1"};
    if (L <= lk - lk1) return {v, "many:I2"};
    return {v - indicator(chi_out) * (L - lk + lk1), "many:I3"};
}

FormulaValue growth_formula(const CodingSpec& spec, const BigInt& L) {
    spec.validate();
    if (L.is_negative()) throw ArgError("growth_formula: L must be >= 0");
    AlphabetFiltration filt = filtration(spec);

    BigInt len0 = block_len(spec, 0);
    if (L <= len0 - BigInt(1))
        return {BigInt(static_cast<std::int64_t>(filt.size_at(0)) - 1), "initial"};
    if (L == len0) return {BigInt(static_cast<std::int64_t>(filt.size_at(1)) - 1), "initial-top"};

    // k >= 1 with |p^(k-1)| + 1 <= L <= |p^(k)|.
    std::int64_t k = 1;
    while (block_len(spec, k) < L) {
        ++k;
        if (!spec.unbounded_depth() && static_cast<std::size_t>(k) > spec.max_level())
            throw DepthError("growth_formula: L beyond available depth");
    }
    std::size_t uk = static_cast<std::size_t>(k);
    BigInt lk = block_len(spec, k);
    BigInt lk1 = block_len(spec, k - 1);
    BigInt lk2 = block_len(spec, k - 2);

    BigInt v(static_cast<std::int64_t>(filt.size_at(uk)) - 1);
    std::string branch = "mid";
    if (L >= lk - lk1) {
        v -= BigInt(static_cast<std::int64_t>(filt.size_at(uk)) -
                    static_cast<std::int64_t>(filt.size_at(uk + 1)));
        branch = "tail";
    }
    if (L <= BigInt(2) * lk1 - lk2) {
        v += indicator(filt.contains(uk, spec.letter_at(uk - 1)));
        branch += "+extra";
    }
    return {v, branch};
}

FormulaValue palindrome_formula(const CodingSpec& spec, const BigInt& L) {
    spec.validate();
    if (L.is_negative()) throw ArgError("palindrome_formula: L must be >= 0");
    AlphabetFiltration filt = filtration(spec);

    auto parity = [](const BigInt& x) { return x.is_even() ? BigInt(0) : BigInt(1); };

    BigInt len0 = block_len(spec, 0);
    if (L <= len0)
        return {BigInt(static_cast<std::int64_t>(filt.size_at(0)) - 1) * parity(L) + BigInt(1),
                "initial"};

    // k >= 1 with |p^(k-1)| + 1 <= L <= |p^(k)|.
    std::int64_t k = 1;
    while (block_len(spec, k) < L) {
        ++k;
        if (!spec.unbounded_depth() && static_cast<std::size_t>(k) > spec.max_level())
            throw DepthError("palindrome_formula: L beyond available depth");
    }
    std::size_t uk = static_cast<std::size_t>(k);
    BigInt lk = block_len(spec, k);
    BigInt lk1 = block_len(spec, k - 1);
    BigInt lk2 = block_len(spec, k - 2);
    BigInt r = L.mod_floor(lk1 + BigInt(1));
    BigInt rt = L.mod_floor(lk2 + BigInt(1));

    BigInt v = BigInt(static_cast<std::int64_t>(filt.size_at(uk)) - 1) * parity(L) +
               parity(lk1 + BigInt(1) - r);
    std::string branch = "base";
    if (L <= lk - lk1 - BigInt(1)) {
        v += parity(r);
        branch = "inner";
    } else {
        v += parity(r) * indicator(filt.contains(uk + 1, spec.letter_at(uk)));
        branch = "upper";
    }
    if (filt.contains(uk, spec.letter_at(uk - 1)) && L <= BigInt(2) * lk1 - lk2) {
        v += parity(rt) + parity(lk2 + BigInt(1) - rt) - parity(L);
        branch += "+second";
    }
    return {v, branch};
}

RepetitivityRange repetitivity_segment(const CodingSpec& spec, std::size_t i) {
    if (i == 0) throw ArgError("repetitivity_segment: i must be >= 1");
    OccurrenceProfile prof = occurrence_profile(spec, i + 1);
    auto len = [&](std::size_t m) { return block_len(spec, static_cast<std::int64_t>(m)); };
    RepetitivityRange r;
    r.lo = len(prof.m[i]) - len(prof.m[i] - 1) + BigInt(1);
    r.hi = len(prof.m[i + 1]) - len(prof.m[i + 1] - 1);
    return r;
}

FormulaValue repetitivity_formula(const CodingSpec& spec, const BigInt& L) {
    spec.validate();
    if (L < BigInt(1)) throw ArgError("repetitivity_formula: L must be >= 1");

    std::size_t i = 1;
    while (true) {
        RepetitivityRange seg = repetitivity_segment(spec, i);
        if (i == 1 && L < seg.lo)
            throw RangeError("repetitivity_formula: L = " + L.to_string() +
                             " below the covered range (starts at " + seg.lo.to_string() + ")");
        if (L <= seg.hi) break;
        ++i;
        if (i > 4096) throw DepthError("repetitivity_formula: segment search overflow");
    }

    OccurrenceProfile prof = occurrence_profile(spec, i);
    std::size_t mi = prof.m[i];
    BigInt l_ell = block_len(spec, static_cast<std::int64_t>(prof.ell_at(mi)) - 1);
    BigInt l_mi = block_len(spec, static_cast<std::int64_t>(mi));
    BigInt l_mi1 = block_len(spec, static_cast<std::int64_t>(mi) - 1);

    if (L <= l_mi + BigInt(1))
        return {BigInt(2) * l_ell + BigInt(1) - l_mi + l_mi1 + L, "segment" + std::to_string(i) + ":low"};
    return {BigInt(2) * l_ell + BigInt(1) + L, "segment" + std::to_string(i) + ":high"};
}

QuotientProfile complexity_quotient_max(const CodingSpec& spec, std::size_t k) {
    if (k < 2) throw ArgError("complexity_quotient_max: k must be >= 2");
    BigInt lk1 = block_len(spec, static_cast<std::int64_t>(k) - 1);
    BigInt lk2 = block_len(spec, static_cast<std::int64_t>(k) - 2);
    AlphabetFiltration filt = filtration(spec);
    BigInt n_prev(spec.multiplier_at(k - 1));
    QuotientProfile out;
    out.argmax = BigInt(2) * lk1 - lk2 + BigInt(1);
    out.max_value = BigRational(BigInt(static_cast<std::int64_t>(filt.eventual.size()))) -
                    BigRational(n_prev - BigInt(1), BigInt(2) * n_prev - BigInt(1));
    return out;
}

namespace {

// Product n_{from} * ... * n_{to} (inclusive); callers guard from <= to.
BigInt gap_product(const CodingSpec& spec, std::size_t from, std::size_t to) {
    BigInt acc = 1;
    for (std::size_t j = from; j <= to; ++j) acc *= BigInt(spec.multiplier_at(j));
    return acc;
}

void require_tail(const CodingSpec& spec, const char* who) {
    if (!spec.has_tail())
        throw UndecidableError(std::string(who) + ": verdict needs a continuation rule");
}

}  // namespace

ConditionReport boshernitzan_verdict(const CodingSpec& spec, std::size_t probe) {
    spec.validate();
    require_tail(spec, "boshernitzan_verdict");
    ConditionReport rep;
    rep.condition = "boshernitzan";

    AlphabetFiltration filt = filtration(spec);
    if (filt.eventual.size() == 2) {
        rep.verdict = true;
        rep.witness = "two recurrent letters; the condition always holds";
        return rep;
    }

    OccurrenceProfile prof = occurrence_profile(spec, probe);
    BigInt best;
    std::size_t best_i = 0;
    for (std::size_t i = 1; i <= probe; ++i) {
        std::size_t mi = prof.m[i];
        std::size_t hi = prof.ell_at(mi - 1) - 1;
        BigInt prod = mi + 1 <= hi ? gap_product(spec, mi + 1, hi) : BigInt(1);
        rep.samples.push_back("i=" + std::to_string(i) + " product=" + prod.to_string());
        if (best_i == 0 || prod < best) {
            best = prod;
            best_i = i;
        }
    }

    if (std::holds_alternative<GrowingBlocksTail>(spec.tail)) {
        // Jump indices are (i+1)^2 - 2 and the gap to the previous full
        // recurrence widens linearly, so every product grows without bound.
        rep.verdict = false;
        rep.witness = "gap products grow at least like 2^(2i+2); no bounded subsequence exists";
        return rep;
    }
    // Eventually periodic coding: the products take finitely many values, so
    // the minimizing jump index recurs and witnesses a bounded subsequence.
    rep.verdict = true;
    rep.witness = "bounded along the jump indices congruent to m_" + std::to_string(best_i) +
                  "; product value " + best.to_string();
    return rep;
}

ConditionReport linear_repetitivity_verdict(const CodingSpec& spec, std::size_t probe) {
    spec.validate();
    require_tail(spec, "linear_repetitivity_verdict");
    ConditionReport rep;
    rep.condition = "linearly_repetitive";

    OccurrenceProfile prof = occurrence_profile(spec, probe);
    BigInt worst;
    for (std::size_t i = 1; i <= probe; ++i) {
        std::size_t mi = prof.m[i];
        std::size_t hi = prof.ell_at(mi) - 1;
        BigInt prod = mi + 1 <= hi ? gap_product(spec, mi + 1, hi) : BigInt(1);
        rep.samples.push_back("i=" + std::to_string(i) + " product=" + prod.to_string());
        if (prod > worst) worst = prod;
    }
    if (std::holds_alternative<GrowingBlocksTail>(spec.tail)) {
        rep.verdict = false;
        rep.witness = "recurrence products unbounded along the jump indices";
    } else {
        rep.verdict = true;
        rep.witness = "recurrence products bounded by " + worst.to_string() +
                      " over the tail period";
    }
    return rep;
}

ConditionReport alpha_repetitivity_verdict(const CodingSpec& spec, const BigRational& alpha,
                                           std::size_t probe) {
    spec.validate();
    require_tail(spec, "alpha_repetitivity_verdict");
    if (alpha < BigRational(1)) throw ArgError("alpha_repetitivity_verdict: alpha must be >= 1");
    ConditionReport rep;
    rep.condition = "alpha_repetitive(alpha=" + alpha.to_string() + ")";

    if (alpha == BigRational(1)) {
        ConditionReport lr = linear_repetitivity_verdict(spec, probe);
        rep.verdict = lr.verdict;
        rep.witness = lr.witness;
        rep.samples = lr.samples;
        return rep;
    }

    // Compare (|p^(ell(m_i)-1)| + 1)^q against (|p^(m_i)| + 1)^p for
    // alpha = p/q: the quotient tends to zero for a periodic tail and
    // diverges or vanishes for the growing-blocks tail; in either case the
    // limsup is not a finite positive number.
    OccurrenceProfile prof = occurrence_profile(spec, probe);
    std::uint64_t p_exp = static_cast<std::uint64_t>(alpha.num().to_i64());
    std::uint64_t q_exp = static_cast<std::uint64_t>(alpha.den().to_i64());
    for (std::size_t i = 1; i <= std::min<std::size_t>(probe, 6); ++i) {
        std::size_t mi = prof.m[i];
        BigInt num = spec.block_length_plus_one(prof.ell_at(mi)).pow(q_exp);
        BigInt den = spec.block_length_plus_one(mi + 1).pow(p_exp);
        rep.samples.push_back("i=" + std::to_string(i) + " ratio^q=" +
                              BigRational(num, den).to_string());
    }
    if (std::holds_alternative<GrowingBlocksTail>(spec.tail)) {
        rep.verdict = false;
        rep.witness = "numerator exponent grows quadratically below alpha times the denominator "
                      "exponent; the ratio has no finite positive limsup";
    } else {
        rep.verdict = false;
        rep.witness = "recurrence window is a bounded multiple of the block while alpha > 1 "
                      "inflates the denominator; the ratio tends to zero";
    }
    return rep;
}

}  // namespace toepl
