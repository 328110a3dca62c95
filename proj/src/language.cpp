#include "toepl/language.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "counting.hpp"
#include "toepl/blocks.hpp"
#include "toepl/errors.hpp"
#include "toepl/filtration.hpp"

namespace toepl {

LanguageIndex::LanguageIndex(std::vector<Word> representatives, BigInt max_valid_L,
                             Alphabet alphabet, std::string source)
    : reps_(std::move(representatives)),
      alphabet_(std::move(alphabet)),
      source_(std::move(source)),
      max_valid_big_(std::move(max_valid_L)) {
    if (!max_valid_big_.fits_i64())
        throw BudgetError("language index: valid range " + max_valid_big_.to_string() + " too large");
    max_valid_ = static_cast<std::size_t>(max_valid_big_.to_i64());
    detail::SuffixAutomaton sa;
    detail::PalindromeTree pt;
    for (const Word& w : reps_) {
        sa.add_word(w);
        pt.add_word(w);
    }
    subword_counts_ = sa.subword_counts(max_valid_);
    palindrome_counts_ = pt.palindrome_counts(max_valid_);
}

LanguageIndex LanguageIndex::for_spec(const CodingSpec& spec, const BigInt& L_max) {
    spec.validate();
    if (L_max < BigInt(1)) throw ArgError("language index: L_max must be >= 1");
    AlphabetFiltration filt = filtration(spec);

    std::int64_t k = -1;
    while (spec.block_length_plus_one(static_cast<std::size_t>(k + 1)) < L_max) {
        ++k;
        if (!spec.unbounded_depth() && static_cast<std::size_t>(k) > spec.max_level())
            throw DepthError("language index: depth insufficient for L_max = " + L_max.to_string());
    }
    if (k < 0) k = 0;
    Word block = build_block(spec, k);
    std::vector<Word> reps;
    for (Letter e : filt.at(static_cast<std::size_t>(k + 1))) {
        Word rep;
        rep.reserve(2 * block.size() + 1);
        rep.insert(rep.end(), block.begin(), block.end());
        rep.push_back(e);
        rep.insert(rep.end(), block.begin(), block.end());
        reps.push_back(std::move(rep));
    }
    BigInt valid = spec.block_length_plus_one(static_cast<std::size_t>(k + 1));
    return LanguageIndex(std::move(reps), valid, spec.alphabet,
                         spec.name.empty() ? "coding-spec" : spec.name);
}

LanguageIndex LanguageIndex::for_sturmian(const SturmianSpec& spec, std::size_t L_max) {
    spec.validate();
    // p^(k) a b p^(k) and p^(k) b a p^(k) carry every subword of length up to
    // |p^(k)| + 1; k >= 8 keeps the short-word regime inside p^(k) itself.
    std::size_t k = 8;
    SturmianBlocks bl = sturmian_blocks(spec, k);
    while (bl.p[k].size() + 1 < L_max) {
        ++k;
        bl = sturmian_blocks(spec, k);
        if (bl.p[k].size() > (std::size_t{1} << 28))
            throw BudgetError("sturmian language index: block growth exceeded budget");
    }
    const Word& p = bl.p[k];
    std::vector<Word> reps;
    for (int variant = 0; variant < 2; ++variant) {
        Word rep;
        rep.reserve(2 * p.size() + 2);
        rep.insert(rep.end(), p.begin(), p.end());
        rep.push_back(variant == 0 ? Letter{0} : Letter{1});
        rep.push_back(variant == 0 ? Letter{1} : Letter{0});
        rep.insert(rep.end(), p.begin(), p.end());
        reps.push_back(std::move(rep));
    }
    BigInt valid(static_cast<std::int64_t>(p.size() + 1));
    return LanguageIndex(std::move(reps), valid, SturmianSpec::default_alphabet(),
                         spec.name.empty() ? "sturmian-spec" : spec.name);
}

void LanguageIndex::require(std::size_t L) const {
    if (L > max_valid_)
        throw RangeError("language index: length " + std::to_string(L) + " beyond valid range " +
                         std::to_string(max_valid_));
}

std::int64_t LanguageIndex::complexity(std::size_t L) const {
    require(L);
    return subword_counts_[L];
}

std::int64_t LanguageIndex::growth(std::size_t L) const {
    require(L + 1);
    return subword_counts_[L + 1] - subword_counts_[L];
}

std::int64_t LanguageIndex::palindromes(std::size_t L) const {
    require(L);
    return palindrome_counts_[L];
}

std::vector<Word> LanguageIndex::words_of(std::size_t L) const {
    require(L);
    if (L == 0) return {Word{}};
    std::size_t expected = static_cast<std::size_t>(subword_counts_[L]);
    if (expected * L > word_byte_budget())
        throw BudgetError("words_of: materializing p(L)*L = " + std::to_string(expected * L) +
                          " bytes exceeds budget");
    std::unordered_set<Word, WordHash> seen;
    seen.reserve(expected * 2);
    for (const Word& rep : reps_) {
        if (rep.size() < L) continue;
        for (std::size_t pos = 0; pos + L <= rep.size(); ++pos)
            seen.insert(Word(rep.begin() + static_cast<std::ptrdiff_t>(pos),
                             rep.begin() + static_cast<std::ptrdiff_t>(pos + L)));
    }
    std::vector<Word> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<LanguageIndex::SpecialWord> LanguageIndex::right_special_words(std::size_t L) const {
    require(L + 1);
    std::unordered_map<Word, std::set<Letter>, WordHash> ext;
    for (const Word& rep : reps_) {
        if (rep.size() < L + 1) continue;
        for (std::size_t pos = 0; pos + L + 1 <= rep.size(); ++pos)
            ext[Word(rep.begin() + static_cast<std::ptrdiff_t>(pos),
                     rep.begin() + static_cast<std::ptrdiff_t>(pos + L))]
                .insert(rep[pos + L]);
    }
    std::vector<SpecialWord> out;
    for (auto& [word, letters] : ext)
        if (letters.size() >= 2) out.push_back({word, {letters.begin(), letters.end()}});
    std::sort(out.begin(), out.end(),
              [](const SpecialWord& a, const SpecialWord& b) { return a.word < b.word; });
    return out;
}

std::size_t repetitivity_oracle(const LanguageIndex& index, std::size_t L) {
    if (L == 0) throw ArgError("repetitivity_oracle: L must be >= 1");
    index.complexity(L);  // range check
    std::vector<Word> words = index.words_of(L);
    std::size_t needed = L;  // R(L) >= L trivially
    for (const Word& rep : index.representatives()) {
        for (const Word& u : words) {
            auto occ = occurrences(rep, u);
            if (occ.empty())
                throw BoundExceeded("repetitivity_oracle: word absent from a representative; answer > " +
                                    std::to_string(index.max_valid_len()));
            // Windows at the left edge, the right edge and across the widest gap
            // between consecutive occurrences force the window length.
            needed = std::max(needed, occ.front() + L);
            needed = std::max(needed, rep.size() - occ.back());
            for (std::size_t i = 0; i + 1 < occ.size(); ++i)
                needed = std::max(needed, occ[i + 1] - occ[i] + L - 1);
        }
    }
    if (needed > index.max_valid_len())
        throw BoundExceeded("repetitivity_oracle: lower bound " + std::to_string(needed) +
                            " exceeds certified range " + std::to_string(index.max_valid_len()));
    return needed;
}

CopyCount count_copies(const Word& u, const Word& v) {
    if (u.empty()) throw ArgError("count_copies: empty pattern");
    auto occ = occurrences(v, u);
    std::int64_t disjoint = 0;
    std::size_t next_free = 0;
    for (std::size_t pos : occ) {
        if (pos >= next_free) {
            ++disjoint;
            next_free = pos + u.size();
        }
    }
    return {static_cast<std::int64_t>(occ.size()), disjoint};
}

BigRational frequency_estimate(const CodingSpec& spec, const Word& u, std::size_t L) {
    if (u.empty()) throw ArgError("frequency_estimate: empty pattern");
    if (L == 0) throw ArgError("frequency_estimate: L must be >= 1");
    Word prefix = limit_prefix(spec, L);
    CopyCount c = count_copies(u, prefix);
    return BigRational(BigInt(c.overlapping), BigInt(static_cast<std::int64_t>(L)));
}

const char* pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::Left2: return "left2";
        case PatternKind::Right2: return "right2";
        case PatternKind::Left3: return "left3";
        case PatternKind::Right3: return "right3";
    }
    return "?";
}

std::vector<PowerHit> power_scan(const Word& window, std::size_t origin_offset,
                                 std::size_t l_max) {
    std::vector<PowerHit> out;
    auto eq = [&](std::size_t i, std::size_t j, std::size_t len) {
        for (std::size_t t = 0; t < len; ++t)
            if (window[i + t] != window[j + t]) return false;
        return true;
    };
    // Window index of position j is origin_offset + j - 1.
    std::size_t left_room = origin_offset;            // letters at positions <= 0
    std::size_t right_room = window.size() - origin_offset;  // letters at positions >= 1
    std::size_t cap = std::max(left_room, right_room) / 2;
    if (l_max != 0) cap = std::min(cap, l_max);
    for (std::size_t l = 1; l <= cap; ++l) {
        bool left_pair = 2 * l <= left_room;    // positions -2l+1..0 available
        bool right_pair = 2 * l <= right_room;  // positions 1..2l available
        bool straddle = l <= left_room && l <= right_room;
        bool ab = false, bc = false, cd = false;
        if (left_pair) ab = eq(origin_offset - 2 * l, origin_offset - l, l);
        if (straddle) bc = eq(origin_offset - l, origin_offset, l);
        if (right_pair) cd = eq(origin_offset, origin_offset + l, l);
        if (left_pair && ab) out.push_back({l, PatternKind::Left2});
        if (right_pair && cd) out.push_back({l, PatternKind::Right2});
        if (left_pair && straddle && ab && bc) out.push_back({l, PatternKind::Left3});
        if (right_pair && straddle && bc && cd) out.push_back({l, PatternKind::Right3});
    }
    return out;
}

}  // namespace toepl
