#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace toepl {

// Letters are interned ids 0..|alphabet|-1; display names live in Alphabet.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

// Marker for a not-yet-determined position in a partially filled word.
constexpr Letter kHole = 0xff;

struct Alphabet {
    std::vector<std::string> names;

    std::size_t size() const { return names.size(); }
    const std::string& name(Letter l) const;
    // Throws SpecError for unknown names.
    Letter id(const std::string& name) const;
    bool valid(Letter l) const { return l < names.size(); }

    // Validates |A| >= 2 and pairwise distinct non-empty names.
    void validate() const;

    std::string render(const Word& w, const std::string& sep = "") const;
    // Parses "abc" (single-char names) or "a.b.c" style via sep.
    Word parse(const std::string& text) const;
};

Word reversed(const Word& w);
bool is_palindrome(const Word& w);
Word subword(const Word& w, std::size_t pos, std::size_t len);
Word concat(const Word& a, const Word& b);
bool contains(const Word& text, const Word& pattern);

// Start positions (0-based) of all, possibly overlapping, occurrences.
std::vector<std::size_t> occurrences(const Word& text, const Word& pattern);

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (Letter l : w) {
            h ^= l;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace toepl
