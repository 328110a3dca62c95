#include "toepl/blocks.hpp"

#include <cstdlib>
#include <set>

#include "toepl/errors.hpp"
#include "toepl/filtration.hpp"

namespace toepl {

std::size_t word_byte_budget() {
    if (const char* env = std::getenv("TOEPL_BUDGET_BYTES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return std::size_t{1} << 30;
}

namespace {

void check_budget(const BigInt& length, std::size_t budget) {
    if (!length.fits_i64() || static_cast<std::uint64_t>(length.to_i64()) > budget)
        throw BudgetError("block of length " + length.to_string() + " exceeds byte budget " +
                          std::to_string(budget));
}

void ensure_level_available(const CodingSpec& spec, std::int64_t k) {
    if (k < 0) return;
    if (!spec.unbounded_depth() && static_cast<std::size_t>(k) > spec.max_level())
        throw DepthError("level " + std::to_string(k) + " beyond spec depth " +
                         std::to_string(spec.max_level()));
}

}  // namespace

std::vector<Block> build_blocks(const CodingSpec& spec, std::int64_t k_max,
                                std::optional<std::size_t> byte_budget) {
    spec.validate();
    if (k_max < -1) throw ArgError("build_blocks: k_max must be >= -1");
    ensure_level_available(spec, k_max);
    std::size_t budget = byte_budget.value_or(word_byte_budget());
    check_budget(spec.block_length_plus_one(static_cast<std::size_t>(k_max + 1)), budget);

    std::vector<Block> out;
    out.push_back({-1, Word{}});
    Word cur;
    for (std::int64_t k = 0; k <= k_max; ++k) {
        Letter a = spec.letter_at(static_cast<std::size_t>(k));
        std::int64_t mult = spec.multiplier_at(static_cast<std::size_t>(k));
        Word next;
        next.reserve(static_cast<std::size_t>(mult) * (cur.size() + 1) - 1);
        for (std::int64_t rep = 0; rep + 1 < mult; ++rep) {
            next.insert(next.end(), cur.begin(), cur.end());
            next.push_back(a);
        }
        next.insert(next.end(), cur.begin(), cur.end());
        cur = std::move(next);
        out.push_back({k, cur});
    }
    return out;
}

Word build_block(const CodingSpec& spec, std::int64_t k_max, std::optional<std::size_t> byte_budget) {
    auto blocks = build_blocks(spec, k_max, byte_budget);
    return std::move(blocks.back().word);
}

Word limit_prefix(const CodingSpec& spec, std::size_t len) {
    std::int64_t k = -1;
    BigInt need(static_cast<std::int64_t>(len));
    while (spec.block_length_plus_one(static_cast<std::size_t>(k + 1)) < need + BigInt(1)) {
        ++k;
        ensure_level_available(spec, k);
    }
    Word block = build_block(spec, k);
    block.resize(len);
    return block;
}

HoleFillingState hole_fill(const CodingSpec& spec, std::int64_t level) {
    spec.validate();
    if (!spec.r) throw SpecError("hole_fill: spec has no hole phases (r)");
    if (level < 0) throw ArgError("hole_fill: level must be >= 0");
    if (static_cast<std::size_t>(level) > spec.max_hole_level())
        throw DepthError("hole_fill: level " + std::to_string(level) + " beyond depth of r");
    ensure_level_available(spec, level);

    HoleFillingState st;
    st.level = level;
    st.period_length = spec.block_length_plus_one(static_cast<std::size_t>(level + 1));
    // residue = r_0 + sum_{j>=1} r_j * n_0 ... n_{j-1}
    BigInt residue(spec.hole_at(0));
    BigInt scale(1);
    for (std::int64_t j = 1; j <= level; ++j) {
        scale *= BigInt(spec.multiplier_at(static_cast<std::size_t>(j - 1)));
        residue += BigInt(spec.hole_at(static_cast<std::size_t>(j))) * scale;
    }
    st.undetermined_residue = residue.mod_floor(st.period_length);
    st.period_word = build_block(spec, level);
    st.period_word.push_back(kHole);
    return st;
}

namespace {

// Evaluates the fully filled word at one position by descending through the
// layers: position j is filled by letter a_k at the first layer k whose hole
// lattice misses it. Returns the level at which the position was determined,
// or nullopt when the available depth is exhausted.
std::optional<Letter> evaluate_position(const CodingSpec& spec, std::int64_t pos,
                                        std::size_t depth_limit) {
    BigInt j(pos);
    for (std::size_t k = 0; k <= depth_limit; ++k) {
        BigInt nk(spec.multiplier_at(k));
        BigInt rk(spec.hole_at(k));
        BigInt rem = j.mod_floor(nk);
        if (rem != rk) return spec.letter_at(k);
        j = (j - rk) / nk;  // exact by construction
    }
    return std::nullopt;
}

}  // namespace

Word toeplitz_window(const CodingSpec& spec, std::optional<Letter> fill_letter, std::int64_t lo,
                     std::int64_t hi) {
    spec.validate();
    if (!spec.r) throw SpecError("toeplitz_window: spec has no hole phases (r)");
    if (lo > hi) throw ArgError("toeplitz_window: lo > hi");
    if (static_cast<std::uint64_t>(hi - lo) >= word_byte_budget())
        throw BudgetError("toeplitz_window: window wider than the byte budget");
    std::size_t depth_limit = spec.max_hole_level();
    if (!spec.unbounded_depth()) depth_limit = std::min(depth_limit, spec.max_level());

    // An undetermined position can survive to the limit only when the hole
    // phases are eventually extreme (all 0 or all n_k - 1); detectable here
    // only up to the available depth of r.
    bool all_zero = true, all_max = true;
    for (std::size_t k = 0; k <= depth_limit; ++k) {
        if (spec.hole_at(k) != 0) all_zero = false;
        if (spec.hole_at(k) != spec.multiplier_at(k) - 1) all_max = false;
    }
    bool extended_candidate = all_zero || all_max;

    Word out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t p = lo; p <= hi; ++p) {
        auto letter = evaluate_position(spec, p, depth_limit);
        if (letter) {
            out.push_back(*letter);
            continue;
        }
        if (extended_candidate) {
            if (!fill_letter) throw ExtendedWordError("toeplitz_window: undetermined position " +
                                                      std::to_string(p) + " and no fill letter");
            auto ev = is_aperiodic(spec);
            bool ok = false;
            for (Letter l : ev.eventual_alphabet) ok = ok || l == *fill_letter;
            if (!ok) throw SpecError("toeplitz_window: fill letter not in the eventual alphabet");
            out.push_back(*fill_letter);
        } else {
            throw DepthError("toeplitz_window: position " + std::to_string(p) +
                             " undetermined at available depth");
        }
    }
    return out;
}

Word leading_window(const CodingSpec& spec, Letter e, std::size_t radius,
                    std::optional<std::size_t> byte_budget) {
    spec.validate();
    auto verdict = is_aperiodic(spec);
    bool recurrent = false;
    for (Letter l : verdict.eventual_alphabet) recurrent = recurrent || l == e;
    if (!recurrent)
        throw SpecError("leading_window: letter '" + spec.alphabet.name(e) +
                        "' is not in the eventual alphabet");
    if (radius == 0) return Word{e};

    // Smallest k with |p^(k)| >= radius; the window is then independent of k.
    std::int64_t k = -1;
    BigInt need = BigInt(static_cast<std::int64_t>(radius)) + BigInt(1);
    while (spec.block_length_plus_one(static_cast<std::size_t>(k + 1)) < need) {
        ++k;
        if (!spec.unbounded_depth() && static_cast<std::size_t>(k) > spec.max_level())
            throw DepthError("leading_window: radius exceeds available depth");
    }
    Word block = build_block(spec, k, byte_budget);
    Word out;
    out.reserve(2 * radius + 1);
    out.insert(out.end(), block.end() - static_cast<std::ptrdiff_t>(radius), block.end());
    out.push_back(e);
    out.insert(out.end(), block.begin(), block.begin() + static_cast<std::ptrdiff_t>(radius));
    return out;
}

AperiodicityVerdict is_aperiodic(const CodingSpec& spec) {
    spec.validate();
    if (!spec.has_tail())
        throw UndecidableError("is_aperiodic: finite spec without continuation rule");
    AlphabetFiltration f = filtration(spec);
    AperiodicityVerdict v;
    v.eventual_alphabet = f.eventual;
    v.aperiodic = f.eventual.size() >= 2;
    return v;
}

}  // namespace toepl
