#include "toepl/filtration.hpp"

#include <algorithm>
#include <set>

#include "toepl/errors.hpp"

namespace toepl {

const std::vector<Letter>& AlphabetFiltration::at(std::size_t k) const {
    return k <= depth ? sets[k] : eventual;
}

bool AlphabetFiltration::contains(std::size_t k, Letter l) const {
    const auto& s = at(k);
    return std::binary_search(s.begin(), s.end(), l);
}

std::size_t AlphabetFiltration::size_at(std::size_t k) const { return at(k).size(); }

AlphabetFiltration filtration(const CodingSpec& spec) {
    spec.validate();
    if (!spec.has_tail())
        throw UndecidableError("filtration: finite spec without continuation rule");

    AlphabetFiltration out;
    std::size_t explicit_depth = spec.a.size();

    if (std::holds_alternative<GrowingBlocksTail>(spec.tail)) {
        out.eventual = {0, 1, 2, 3};
        out.stabilization = 0;
        out.depth = explicit_depth;
        out.sets.assign(out.depth + 1, out.eventual);
        return out;
    }

    const auto& t = std::get<PeriodicTail>(spec.tail);
    std::set<Letter> ev(t.period_a.begin(), t.period_a.end());
    out.eventual.assign(ev.begin(), ev.end());

    // A_k for k >= preperiod equals the eventual alphabet; below that the
    // remaining explicit letters accumulate.
    out.depth = std::max(explicit_depth, t.preperiod);
    out.sets.assign(out.depth + 1, out.eventual);
    for (std::size_t k = t.preperiod; k-- > 0;) {
        std::set<Letter> s(out.sets[k + 1].begin(), out.sets[k + 1].end());
        s.insert(spec.a[k]);
        out.sets[k].assign(s.begin(), s.end());
    }
    out.stabilization = 0;
    for (std::size_t k = t.preperiod; k-- > 0;) {
        if (!ev.count(spec.a[k])) {
            out.stabilization = k + 1;
            break;
        }
    }
    return out;
}

std::size_t OccurrenceProfile::ell_at(std::size_t k) const {
    if (k >= ell.size()) throw RangeError("occurrence profile: ell(" + std::to_string(k) + ") not computed");
    return ell[k];
}

OccurrenceProfile occurrence_profile(const CodingSpec& spec, std::size_t i_max) {
    AlphabetFiltration filt = filtration(spec);

    auto ell_of = [&](std::size_t k) {
        const auto& target = filt.at(k + 1);
        std::set<Letter> seen;
        std::size_t j = k;
        while (true) {
            ++j;
            Letter l = spec.letter_at(j);
            if (filt.contains(k + 1, l)) seen.insert(l);
            if (seen.size() == target.size()) return j;
            if (j > k + 1000000)
                throw DepthError("occurrence_profile: ell(" + std::to_string(k) + ") did not close");
        }
    };

    OccurrenceProfile out;
    out.m.push_back(0);
    out.ell.push_back(ell_of(0));
    std::size_t k = 0;
    while (out.m.size() <= i_max) {
        ++k;
        out.ell.push_back(ell_of(k));
        if (out.ell[k] > out.ell[out.m.back()]) out.m.push_back(k);
    }
    return out;
}

}  // namespace toepl
