#include "toepl/words.hpp"

#include <algorithm>

#include "toepl/errors.hpp"

namespace toepl {

const std::string& Alphabet::name(Letter l) const {
    if (!valid(l)) throw SpecError("alphabet: letter id out of range");
    return names[l];
}

Letter Alphabet::id(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<Letter>(i);
    throw SpecError("alphabet: unknown letter name '" + name + "'");
}

void Alphabet::validate() const {
    if (names.size() < 2) throw SpecError("alphabet: at least two letters required");
    if (names.size() >= kHole) throw SpecError("alphabet: too many letters");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw SpecError("alphabet: empty letter name");
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw SpecError("alphabet: duplicate letter '" + names[i] + "'");
    }
}

std::string Alphabet::render(const Word& w, const std::string& sep) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i && !sep.empty()) out += sep;
        out += w[i] == kHole ? "?" : name(w[i]);
    }
    return out;
}

Word Alphabet::parse(const std::string& text) const {
    bool single = true;
    for (const auto& n : names)
        if (n.size() != 1) single = false;
    Word w;
    if (single) {
        for (char c : text) w.push_back(id(std::string(1, c)));
        return w;
    }
    std::string cur;
    for (char c : text) {
        if (c == '.') {
            w.push_back(id(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) w.push_back(id(cur));
    return w;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

bool is_palindrome(const Word& w) {
    for (std::size_t i = 0, j = w.size(); i < j / 2; ++i)
        if (w[i] != w[j - 1 - i]) return false;
    return true;
}

Word subword(const Word& w, std::size_t pos, std::size_t len) {
    if (pos + len > w.size()) throw RangeError("subword: out of range");
    return Word(w.begin() + static_cast<std::ptrdiff_t>(pos),
                w.begin() + static_cast<std::ptrdiff_t>(pos + len));
}

Word concat(const Word& a, const Word& b) {
    Word r = a;
    r.insert(r.end(), b.begin(), b.end());
    return r;
}

bool contains(const Word& text, const Word& pattern) {
    if (pattern.empty()) return true;
    return std::search(text.begin(), text.end(), pattern.begin(), pattern.end()) != text.end();
}

std::vector<std::size_t> occurrences(const Word& text, const Word& pattern) {
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > text.size()) return out;
    auto it = text.begin();
    while (true) {
        it = std::search(it, text.end(), pattern.begin(), pattern.end());
        if (it == text.end()) break;
        out.push_back(static_cast<std::size_t>(it - text.begin()));
        ++it;
    }
    return out;
}

}  // namespace toepl
