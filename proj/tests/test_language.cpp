#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>
#include <set>
#include <string>
#include <unordered_set>

#include "specs.hpp"
#include "toepl/blocks.hpp"
#include "toepl/errors.hpp"
#include "toepl/formulas.hpp"
#include "toepl/language.hpp"

using namespace toepl;
using namespace toepl::testspecs;

namespace {

// Brute-force subword and palindrome counters used to validate the automata.
std::vector<std::int64_t> brute_counts(const std::vector<Word>& reps, std::size_t max_len,
                                       bool palindromes_only) {
    std::vector<std::int64_t> counts(max_len + 1, 0);
    counts[0] = 1;
    for (std::size_t L = 1; L <= max_len; ++L) {
        std::set<Word> seen;
        for (const Word& rep : reps)
            for (std::size_t pos = 0; pos + L <= rep.size(); ++pos) {
                Word w(rep.begin() + pos, rep.begin() + pos + L);
                if (!palindromes_only || is_palindrome(w)) seen.insert(w);
            }
        counts[L] = static_cast<std::int64_t>(seen.size());
    }
    return counts;
}

}  // namespace

TEST_CASE("index counts match brute force on random words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<Word> reps;
        std::size_t n_words = 1 + rng() % 3;
        for (std::size_t i = 0; i < n_words; ++i) {
            Word w(4 + rng() % 24);
            for (auto& l : w) l = static_cast<Letter>(rng() % 3);
            reps.push_back(w);
        }
        std::size_t max_len = 10;
        LanguageIndex idx(reps, BigInt(static_cast<std::int64_t>(max_len)),
                          Alphabet{{"a", "b", "c"}}, "random");
        auto subs = brute_counts(reps, max_len, false);
        auto pals = brute_counts(reps, max_len, true);
        for (std::size_t L = 0; L <= max_len; ++L) {
            CHECK(idx.complexity(L) == subs[L]);
            CHECK(idx.palindromes(L) == pals[L]);
        }
    }
}

TEST_CASE("language sizes on the named subshifts") {
    auto grig = LanguageIndex::for_spec(grigorchuk(), BigInt(8));
    CHECK(grig.complexity(0) == 1);
    CHECK(grig.complexity(1) == 4);
    CHECK(grig.complexity(2) == 6);
    CHECK(grig.complexity(3) == 8);
    CHECK(grig.complexity(4) == 10);

    auto nb = LanguageIndex::for_spec(non_b(), BigInt(4));
    CHECK(nb.complexity(2) == 7);

    auto pd = LanguageIndex::for_spec(period_doubling(), BigInt(4));
    CHECK(pd.complexity(2) == 3);
    auto words2 = pd.words_of(2);
    std::vector<std::string> names;
    for (const auto& w : words2) names.push_back(pd.alphabet().render(w));
    CHECK(names == std::vector<std::string>{"aa", "ab", "ba"});
    CHECK(pd.words_of(0) == std::vector<Word>{Word{}});
}

TEST_CASE("growth telescopes the complexity") {
    auto idx = LanguageIndex::for_spec(grigorchuk(), BigInt(64));
    for (std::size_t L = 0; L + 1 <= 63; ++L)
        CHECK(idx.complexity(L + 1) == idx.complexity(L) + idx.growth(L));
    CHECK_THROWS_AS(idx.complexity(65), RangeError);
}

TEST_CASE("right special words") {
    auto grig = LanguageIndex::for_spec(grigorchuk(), BigInt(8));
    auto sp1 = grig.right_special_words(1);
    REQUIRE(sp1.size() == 1);
    CHECK(grig.alphabet().render(sp1[0].word) == "a");
    CHECK(sp1[0].extensions == std::vector<Letter>{1, 2, 3});

    auto pd = LanguageIndex::for_spec(period_doubling(), BigInt(8));
    auto sp2 = pd.right_special_words(2);
    REQUIRE(sp2.size() == 2);
    CHECK(pd.alphabet().render(sp2[0].word) == "aa");
    CHECK(pd.alphabet().render(sp2[1].word) == "ba");

    // Growth equals the number of surplus extensions, and aperiodicity keeps
    // at least one special word at every length.
    for (auto spec : {period_doubling(), grigorchuk(), non_b()}) {
        auto idx = LanguageIndex::for_spec(spec, BigInt(33));
        for (std::size_t L = 1; L <= 32; ++L) {
            auto sp = idx.right_special_words(L);
            CHECK(!sp.empty());
            std::int64_t surplus = 0;
            for (const auto& s : sp) surplus += static_cast<std::int64_t>(s.extensions.size()) - 1;
            CHECK(surplus == idx.growth(L));
        }
    }
}

TEST_CASE("palindrome counts on the period doubling subshift") {
    auto pd = LanguageIndex::for_spec(period_doubling(), BigInt(8));
    CHECK(pd.palindromes(0) == 1);
    CHECK(pd.palindromes(1) == 2);
    CHECK(pd.palindromes(2) == 1);
    CHECK(pd.palindromes(3) == 3);
}

TEST_CASE("morse-hedlund lower bound and leading-word upper bound") {
    for (auto spec : {period_doubling(), grigorchuk(), non_b(), gen_grigorchuk()}) {
        auto idx = LanguageIndex::for_spec(spec, BigInt(64));
        auto ev = is_aperiodic(spec).eventual_alphabet;
        for (std::size_t L = 1; L <= 64; ++L) {
            CHECK(idx.complexity(L) >= static_cast<std::int64_t>(L + 1));
            if (L >= 32)  // deep enough that the letter sets have stabilized
                CHECK(idx.complexity(L) <= static_cast<std::int64_t>(ev.size() * L));
        }
    }
}

TEST_CASE("sturmian language has minimal complexity") {
    auto idx = LanguageIndex::for_sturmian(fibonacci(), 200);
    for (std::size_t L = 0; L <= 200; ++L)
        CHECK(idx.complexity(L) == static_cast<std::int64_t>(L + 1));
    CHECK(idx.palindromes(5) == 1 + (5 % 2));  // sturmian palindromes: 1 even, 2 odd
}

TEST_CASE("repetitivity oracle") {
    auto grig = LanguageIndex::for_spec(grigorchuk(), BigInt(256));
    CHECK(repetitivity_oracle(grig, 5) == 64);
    // strict monotonicity
    std::size_t prev = repetitivity_oracle(grig, 1);
    for (std::size_t L = 2; L <= 12; ++L) {
        std::size_t cur = repetitivity_oracle(grig, L);
        CHECK(cur >= prev + 1);
        prev = cur;
    }
    // Small-L values below the formula range are oracle-only. For L = 2 the
    // longest word avoiding "aa" is "abababa", so R(2) = 8.
    auto pd = LanguageIndex::for_spec(period_doubling(), BigInt(64));
    CHECK(repetitivity_oracle(pd, 2) == 8);
    CHECK_THROWS_AS(repetitivity_oracle(LanguageIndex::for_spec(grigorchuk(), BigInt(4)), 3),
                    BoundExceeded);
}

TEST_CASE("copy counts") {
    Alphabet ab{{"a", "b"}};
    auto cc = count_copies(ab.parse("aa"), ab.parse("aaaa"));
    CHECK(cc.overlapping == 3);
    CHECK(cc.disjoint == 2);

    auto pd = period_doubling();
    auto p1 = build_block(pd, 1);
    auto p3 = build_block(pd, 3);
    CHECK(count_copies(p1, p3).disjoint >= 3);  // floor(|p^3| / (|p^1| + 1))
    CHECK(count_copies(p1, p1).overlapping == 1);
    CHECK(count_copies(p1, p1).disjoint == 1);
    CHECK_THROWS_AS(count_copies(Word{}, p1), ArgError);
}

TEST_CASE("greedy disjoint packing is maximal (exhaustive cross-check)") {
    // All binary patterns/texts with |v| <= 12: compare the greedy count with
    // an exhaustive search over occurrence subsets.
    std::mt19937 rng(11);
    auto exhaustive = [](const Word& u, const Word& v) {
        auto occ = occurrences(v, u);
        std::int64_t best = 0;
        std::function<void(std::size_t, std::size_t, std::int64_t)> go =
            [&](std::size_t i, std::size_t free_from, std::int64_t picked) {
                best = std::max(best, picked);
                for (std::size_t t = i; t < occ.size(); ++t)
                    if (occ[t] >= free_from) go(t + 1, occ[t] + u.size(), picked + 1);
            };
        go(0, 0, 0);
        return best;
    };
    for (int trial = 0; trial < 400; ++trial) {
        Word v(1 + rng() % 12), u(1 + rng() % 4);
        for (auto& l : v) l = static_cast<Letter>(rng() % 2);
        for (auto& l : u) l = static_cast<Letter>(rng() % 2);
        CHECK(count_copies(u, v).disjoint == exhaustive(u, v));
    }
}

TEST_CASE("frequency estimates") {
    auto pd = period_doubling();
    Word p2 = build_block(pd, 2);
    std::size_t L = build_block(pd, 6).size();
    BigRational freq = frequency_estimate(pd, p2, L);
    BigRational bound = BigRational(1, 8) - BigRational(static_cast<std::int64_t>(p2.size()),
                                                        static_cast<std::int64_t>(L));
    CHECK(freq >= bound);

    Word prefix = limit_prefix(pd, 9);
    CHECK(frequency_estimate(pd, prefix, 9) == BigRational(1, 9));
    CHECK(frequency_estimate(pd, pd.alphabet.parse("bb"), 64) == BigRational(0));
}

TEST_CASE("power scan") {
    SUBCASE("periodic window has the square at every center") {
        Alphabet ab{{"a", "b"}};
        Word w = ab.parse("abababababab");
        auto hits = power_scan(w, 6);
        bool found = false;
        for (auto& h : hits) found = found || (h.l == 2 && h.kind == PatternKind::Right2);
        CHECK(found);
    }
    SUBCASE("leading word carries cubes at the block lengths") {
        auto pd = period_doubling();
        std::size_t radius = build_block(pd, 5).size();
        Word w = leading_window(pd, 1, radius);
        auto hits = power_scan(w, radius + 1);
        std::set<std::size_t> left3;
        for (auto& h : hits)
            if (h.kind == PatternKind::Left3) left3.insert(h.l);
        // a_k = b at k = 1, 3, 5: cube length |p^(k-1)| + 1.
        CHECK(left3.count(2));
        CHECK(left3.count(8));
        CHECK(left3.count(32));
    }
    SUBCASE("alternating word shows no squares at the origin") {
        auto spec = grigorchuk(2);
        Word block6 = build_block(spec, 6);
        std::int64_t reach = 2 * static_cast<std::int64_t>(block6.size() + 1);
        Word w = toeplitz_window(spec, std::nullopt, -reach, reach);
        auto hits = power_scan(w, static_cast<std::size_t>(reach) + 1,
                               block6.size());
        CHECK(hits.empty());
    }
}
