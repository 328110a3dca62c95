#include "toepl/sturmian.hpp"

#include "toepl/blocks.hpp"
#include "toepl/errors.hpp"

namespace toepl {

namespace {
constexpr Letter kA = 0;
constexpr Letter kB = 1;
}  // namespace

SturmianBlocks sturmian_blocks(const SturmianSpec& spec, std::size_t k_max,
                               std::optional<std::size_t> byte_budget) {
    spec.validate();
    std::size_t budget = byte_budget.value_or(word_byte_budget());

    SturmianBlocks out;
    out.s.push_back(Word{kB});
    if (k_max >= 1) {
        Word s1(static_cast<std::size_t>(spec.coefficient(1)) - 1, kB);
        s1.push_back(kA);
        out.s.push_back(std::move(s1));
    }
    for (std::size_t k = 2; k <= k_max; ++k) {
        std::int64_t mult = spec.coefficient(k);
        const Word& prev = out.s[k - 1];
        const Word& prev2 = out.s[k - 2];
        std::size_t len = static_cast<std::size_t>(mult) * prev.size() + prev2.size();
        if (len > budget) throw BudgetError("sturmian_blocks: s_" + std::to_string(k) + " exceeds budget");
        Word next;
        next.reserve(len);
        for (std::int64_t i = 0; i < mult; ++i) next.insert(next.end(), prev.begin(), prev.end());
        next.insert(next.end(), prev2.begin(), prev2.end());
        out.s.push_back(std::move(next));
    }
    out.p.resize(out.s.size());
    for (std::size_t k = 2; k < out.s.size(); ++k)
        out.p[k] = Word(out.s[k].begin(), out.s[k].end() - 2);
    return out;
}

std::vector<Convergent> convergents(const SturmianSpec& spec, std::size_t count) {
    std::vector<Convergent> out;
    BigInt p_prev(1), q_prev(0);  // virtual index -1
    BigInt p_cur(0), q_cur(1);    // index 0
    out.push_back({p_cur, q_cur});
    for (std::size_t k = 1; k <= count; ++k) {
        BigInt nk(spec.coefficient(k));
        BigInt p_next = nk * p_cur + p_prev;
        BigInt q_next = nk * q_cur + q_prev;
        p_prev = p_cur;
        q_prev = q_cur;
        p_cur = p_next;
        q_cur = q_next;
        out.push_back({p_cur, q_cur});
    }
    return out;
}

namespace {

BigInt rat_floor(const BigRational& x) {
    BigInt r = x.num().mod_floor(x.den());
    return (x.num() - r) / x.den();
}

// Bracket lo < alpha < hi from consecutive convergents at the given depth.
struct AlphaBracket {
    BigRational lo, hi;
};

AlphaBracket bracket_at(const std::vector<Convergent>& cv, std::size_t depth) {
    BigRational c1(cv[depth - 1].p, cv[depth - 1].q);
    BigRational c2(cv[depth].p, cv[depth].q);
    return c1 < c2 ? AlphaBracket{c1, c2} : AlphaBracket{c2, c1};
}

}  // namespace

Word rotation_word(const SturmianSpec& spec, const BigRational& x0, std::size_t count) {
    spec.validate();
    if (x0.sign() < 0 || !(x0 < BigRational(1)))
        throw ArgError("rotation_word: x0 must lie in [0, 1)");

    std::size_t depth = 2;
    std::size_t max_depth = spec.has_tail() ? 8192 : spec.cf.size();
    if (max_depth < 2) throw DepthError("rotation_word: need at least two cf coefficients");
    auto cv = convergents(spec, depth);

    auto deepen = [&]() {
        if (depth >= max_depth)
            throw DepthError("rotation_word: cf depth exhausted before the letter was decided");
        ++depth;
        BigInt nk(spec.coefficient(depth));
        cv.push_back({nk * cv[depth - 1].p + cv[depth - 2].p, nk * cv[depth - 1].q + cv[depth - 2].q});
    };

    Word out;
    out.reserve(count);
    for (std::size_t j = 1; j <= count; ++j) {
        BigRational jj(static_cast<std::int64_t>(j));
        BigRational j1(static_cast<std::int64_t>(j + 1));
        while (true) {
            AlphaBracket br = bracket_at(cv, depth);
            BigInt mlo = rat_floor(x0 + jj * br.lo);
            BigInt mhi = rat_floor(x0 + jj * br.hi);
            if (mlo != mhi) {
                deepen();
                continue;
            }
            // {x0 + j alpha} in [0, 1-alpha)  <=>  x0 + (j+1) alpha < m + 1.
            BigRational bound(mlo + BigInt(1));
            if (x0 + j1 * br.hi < bound) {
                out.push_back(kB);
                break;
            }
            if (!(x0 + j1 * br.lo < bound)) {
                out.push_back(kA);
                break;
            }
            deepen();
        }
    }
    return out;
}

}  // namespace toepl
