#include "toepl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "toepl/blocks.hpp"
#include "toepl/errors.hpp"

namespace toepl {

PotentialSpec PotentialSpec::schroedinger(std::vector<double> g_by_letter) {
    std::vector<double> ones(g_by_letter.size(), 1.0);
    return letter_table(std::move(ones), std::move(g_by_letter));
}

PotentialSpec PotentialSpec::letter_table(std::vector<double> f_by_letter,
                                          std::vector<double> g_by_letter) {
    if (f_by_letter.size() != g_by_letter.size() || f_by_letter.empty())
        throw PotentialError("potential: letter tables must be non-empty and of equal size");
    for (double v : f_by_letter)
        if (v == 0) throw PotentialError("potential: off-diagonal weight must never vanish");
    PotentialSpec p;
    p.radius_ = 0;
    p.f_letter_ = std::move(f_by_letter);
    p.g_letter_ = std::move(g_by_letter);
    return p;
}

PotentialSpec PotentialSpec::window_table(int radius,
                                          std::map<Word, std::pair<double, double>> table) {
    if (radius < 0) throw PotentialError("potential: negative window radius");
    if (table.empty()) throw PotentialError("potential: empty window table");
    for (const auto& [w, fg] : table) {
        if (w.size() != 2 * static_cast<std::size_t>(radius) + 1)
            throw PotentialError("potential: window length must be 2J+1");
        if (fg.first == 0) throw PotentialError("potential: off-diagonal weight must never vanish");
    }
    PotentialSpec p;
    p.radius_ = radius;
    p.table_ = std::move(table);
    p.use_table_ = true;
    return p;
}

bool PotentialSpec::constant_offdiag() const {
    if (use_table_) {
        double first = table_.begin()->second.first;
        for (const auto& [w, fg] : table_)
            if (fg.first != first) return false;
        return true;
    }
    for (double v : f_letter_)
        if (v != f_letter_.front()) return false;
    return true;
}

double PotentialSpec::f(const Word& window) const {
    if (use_table_) {
        auto it = table_.find(window);
        if (it == table_.end()) throw PotentialError("potential: window not in table");
        return it->second.first;
    }
    Letter l = window.at(static_cast<std::size_t>(radius_));
    if (l >= f_letter_.size()) throw PotentialError("potential: letter outside table");
    return f_letter_[l];
}

double PotentialSpec::g(const Word& window) const {
    if (use_table_) {
        auto it = table_.find(window);
        if (it == table_.end()) throw PotentialError("potential: window not in table");
        return it->second.second;
    }
    Letter l = window.at(static_cast<std::size_t>(radius_));
    if (l >= g_letter_.size()) throw PotentialError("potential: letter outside table");
    return g_letter_[l];
}

WindowSource WindowSource::leading_word(const CodingSpec& spec, Letter origin_letter,
                                        std::size_t radius) {
    WindowSource s;
    s.bounded_ = true;
    s.letters_ = leading_window(spec, origin_letter, radius);
    s.first_pos_ = -static_cast<std::int64_t>(radius);
    return s;
}

WindowSource WindowSource::periodic(Word period) {
    if (period.empty()) throw ArgError("window source: empty period");
    WindowSource s;
    s.bounded_ = false;
    s.letters_ = std::move(period);
    return s;
}

WindowSource WindowSource::window(Word window, std::int64_t first_pos) {
    if (window.empty()) throw ArgError("window source: empty window");
    WindowSource s;
    s.bounded_ = true;
    s.letters_ = std::move(window);
    s.first_pos_ = first_pos;
    return s;
}

Letter WindowSource::at(std::int64_t pos) const {
    pos += offset_;
    if (!bounded_) {
        std::int64_t p = (pos - 1) % static_cast<std::int64_t>(letters_.size());
        if (p < 0) p += static_cast<std::int64_t>(letters_.size());
        return letters_[static_cast<std::size_t>(p)];
    }
    std::int64_t idx = pos - first_pos_;
    if (idx < 0 || idx >= static_cast<std::int64_t>(letters_.size()))
        throw DepthError("window source: position " + std::to_string(pos) + " outside window");
    return letters_[static_cast<std::size_t>(idx)];
}

std::int64_t WindowSource::min_pos() const {
    return bounded_ ? first_pos_ - offset_ : std::numeric_limits<std::int64_t>::min() / 2;
}
std::int64_t WindowSource::max_pos() const {
    return bounded_ ? first_pos_ - offset_ + static_cast<std::int64_t>(letters_.size()) - 1
                    : std::numeric_limits<std::int64_t>::max() / 2;
}

WindowSource WindowSource::shifted(std::int64_t t) const {
    WindowSource s = *this;
    s.offset_ += t;
    return s;
}

Word TransferContext::window_at(std::int64_t center) const {
    int J = potential.window_radius();
    Word w;
    w.reserve(2 * static_cast<std::size_t>(J) + 1);
    for (std::int64_t p = center - J; p <= center + J; ++p) w.push_back(source.at(p));
    return w;
}

double PotentialSpec::f_of_letter(Letter l) const {
    if (use_table_) throw PotentialError("potential: window table has no letter shortcut");
    if (l >= f_letter_.size()) throw PotentialError("potential: letter outside table");
    return f_letter_[l];
}

double PotentialSpec::g_of_letter(Letter l) const {
    if (use_table_) throw PotentialError("potential: window table has no letter shortcut");
    if (l >= g_letter_.size()) throw PotentialError("potential: letter outside table");
    return g_letter_[l];
}

double TransferContext::f_at(std::int64_t center) const {
    if (potential.is_letter_table()) return potential.f_of_letter(source.at(center));
    return potential.f(window_at(center));
}
double TransferContext::g_at(std::int64_t center) const {
    if (potential.is_letter_table()) return potential.g_of_letter(source.at(center));
    return potential.g(window_at(center));
}

Mat2 elementary_transfer(const TransferContext& ctx, std::int64_t j) {
    double g1 = ctx.g_at(j + 1);
    double f1 = ctx.f_at(j + 1);
    double f2 = ctx.f_at(j + 2);
    return {(ctx.energy - g1) / f2, -f1 / f2, 1, 0};
}

Mat2 elementary_modified(const TransferContext& ctx, std::int64_t j) {
    double g1 = ctx.g_at(j + 1);
    double f2 = ctx.f_at(j + 2);
    return {(ctx.energy - g1) / f2, -1 / f2, f2, 0};
}

namespace {

Mat2 step_matrix(const TransferContext& ctx, std::int64_t j, bool modified) {
    return modified ? elementary_modified(ctx, j) : elementary_transfer(ctx, j);
}

}  // namespace

Mat2 cocycle_product(const TransferContext& ctx, std::int64_t j, bool modified) {
    // Forward steps prepend, backward inverse steps prepend as well: the
    // factor for the most distant position always ends up leftmost.
    Mat2 acc = Mat2::identity();
    if (j > 0) {
        for (std::int64_t m = 0; m < j; ++m) acc = step_matrix(ctx, m, modified) * acc;
    } else if (j < 0) {
        for (std::int64_t m = -1; m >= j; --m) acc = step_matrix(ctx, m, modified).inverse() * acc;
    }
    return acc;
}

ScaledMat cocycle_product_scaled(const TransferContext& ctx, std::int64_t j, bool modified) {
    ScaledMat acc = ScaledMat::identity();
    if (j > 0) {
        for (std::int64_t m = 0; m < j; ++m) {
            acc.m = step_matrix(ctx, m, modified) * acc.m;
            acc.renormalize();
        }
    } else if (j < 0) {
        for (std::int64_t m = -1; m >= j; --m) {
            acc.m = step_matrix(ctx, m, modified).inverse() * acc.m;
            acc.renormalize();
        }
    }
    return acc;
}

Vec2 solve_eigen_iteration(const TransferContext& ctx, Vec2 phi0, std::int64_t j) {
    return cocycle_product(ctx, j, /*modified=*/false) * phi0;
}

Vec2 solve_recurrence(const TransferContext& ctx, Vec2 phi0, std::int64_t j) {
    // phi0 = (phi(1), phi(0)); eigenvalue equation at position m gives
    // phi(m+1) = ((E - g_m) phi(m) - f_m phi(m-1)) / f_{m+1}.
    double hi = phi0.x;  // phi(pos + 1)
    double lo = phi0.y;  // phi(pos)
    if (j >= 0) {
        for (std::int64_t m = 1; m <= j; ++m) {
            double next = ((ctx.energy - ctx.g_at(m)) * hi - ctx.f_at(m) * lo) / ctx.f_at(m + 1);
            lo = hi;
            hi = next;
        }
    } else {
        for (std::int64_t m = 0; m > j; --m) {
            double prev = ((ctx.energy - ctx.g_at(m)) * lo - ctx.f_at(m + 1) * hi) / ctx.f_at(m);
            hi = lo;
            lo = prev;
        }
    }
    return {hi, lo};
}

namespace {

// Extended-precision 2x2 product: partial products inside one period can
// reach norms around 1e6 even at band energies, and double accumulation
// leaves residuals near 1e-8; 80-bit accumulation keeps traces good to
// roughly 1e-11.
struct MatLD {
    long double a11, a12, a21, a22;
};

MatLD mul_ld(const MatLD& x, const MatLD& y) {
    return {x.a11 * y.a11 + x.a12 * y.a21, x.a11 * y.a12 + x.a12 * y.a22,
            x.a21 * y.a11 + x.a22 * y.a21, x.a21 * y.a12 + x.a22 * y.a22};
}

}  // namespace

LogReal periodic_trace_word(const Word& period, const PotentialSpec& pot, double energy) {
    TransferContext ctx{WindowSource::periodic(period), pot, energy};
    MatLD acc{1, 0, 0, 1};
    long double log_scale = 0;
    for (std::int64_t m = 0; m < static_cast<std::int64_t>(period.size()); ++m) {
        Mat2 t = elementary_modified(ctx, m);
        acc = mul_ld({t.a11, t.a12, t.a21, t.a22}, acc);
        long double mx = std::max(std::max(fabsl(acc.a11), fabsl(acc.a12)),
                                  std::max(fabsl(acc.a21), fabsl(acc.a22)));
        if (mx > 1e200L || (mx > 0 && mx < 1e-200L)) {
            acc.a11 /= mx;
            acc.a12 /= mx;
            acc.a21 /= mx;
            acc.a22 /= mx;
            log_scale += logl(mx);
        }
    }
    long double tr = acc.a11 + acc.a22;
    if (tr == 0) return {0, 0};
    return {tr > 0 ? 1 : -1, static_cast<double>(logl(fabsl(tr)) + log_scale)};
}

LogReal periodic_trace(const CodingSpec& spec, const PotentialSpec& pot, double energy,
                       std::size_t k) {
    Word period = build_block(spec, static_cast<std::int64_t>(k));
    period.push_back(spec.letter_at(k + 1));
    return periodic_trace_word(period, pot, energy);
}

double log_rel_diff(const LogReal& a, const LogReal& b) {
    LogReal d = a - b;
    if (d.sign == 0) return 0;
    double scale = std::max({a.sign ? a.log_abs : 0.0, b.sign ? b.log_abs : 0.0, 0.0});
    return std::exp(d.log_abs - scale);
}

namespace {

SpectrumApprox spectrum_from_predicate(const std::function<bool(double)>& inside, double e_lo,
                                       double e_hi, std::size_t grid_n, double refine_tol) {
    if (!(e_lo < e_hi)) throw ArgError("spectrum_approx: empty energy range");
    if (grid_n < 2) throw ArgError("spectrum_approx: grid must have at least two points");
    if (!(refine_tol > 0)) throw ArgError("spectrum_approx: refine_tol must be positive");

    auto grid_point = [&](std::size_t i) {
        return e_lo + (e_hi - e_lo) * static_cast<double>(i) / static_cast<double>(grid_n - 1);
    };
    std::vector<char> in(grid_n);
    for (std::size_t i = 0; i < grid_n; ++i) in[i] = inside(grid_point(i)) ? 1 : 0;

    auto refine = [&](double out_e, double in_e) {
        while (std::fabs(in_e - out_e) > refine_tol) {
            double mid = 0.5 * (out_e + in_e);
            (inside(mid) ? in_e : out_e) = mid;
        }
        return 0.5 * (out_e + in_e);
    };

    SpectrumApprox out;
    std::size_t i = 0;
    while (i < grid_n) {
        if (!in[i]) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i + 1 < grid_n && in[i + 1]) ++i;
        double lo = start == 0 ? e_lo : refine(grid_point(start - 1), grid_point(start));
        double hi = i + 1 == grid_n ? e_hi : refine(grid_point(i + 1), grid_point(i));
        out.intervals.push_back({lo, hi});
        ++i;
    }
    for (const Interval& iv : out.intervals) out.measure += iv.hi - iv.lo;
    return out;
}

}  // namespace

SpectrumApprox spectrum_approx_word(const Word& period, const PotentialSpec& pot, double e_lo,
                                    double e_hi, std::size_t grid_n, double refine_tol) {
    auto inside = [&](double E) {
        LogReal t = periodic_trace_word(period, pot, E);
        return t.abs_le(2.0);
    };
    return spectrum_from_predicate(inside, e_lo, e_hi, grid_n, refine_tol);
}

SpectrumApprox spectrum_approx(const CodingSpec& spec, const PotentialSpec& pot, std::size_t k,
                               double e_lo, double e_hi, std::size_t grid_n, double refine_tol) {
    Word period = build_block(spec, static_cast<std::int64_t>(k));
    period.push_back(spec.letter_at(k + 1));
    return spectrum_approx_word(period, pot, e_lo, e_hi, grid_n, refine_tol);
}

GordonReport gordon_verify_map(const std::function<Mat2(std::int64_t)>& map_at, int radius,
                               std::size_t l, PatternKind kind, Vec2 phi0) {
    if (l == 0) throw ArgError("gordon_verify: l must be >= 1");
    if (radius < 0) throw ArgError("gordon_verify: negative window radius");
    if (phi0.norm() == 0) phi0 = {1, 0};
    std::int64_t ll = static_cast<std::int64_t>(l);
    std::int64_t J = radius;
    GordonReport rep;

    if (J == 0) {
        // Factors repeat exactly along the blocks; the squared repeated-block
        // cocycle is the double-length cocycle with no correction.
        std::int64_t rep_base = kind == PatternKind::Left3 ? -ll : 0;
        auto segment = [&](std::int64_t base, std::int64_t count) {
            Mat2 acc = Mat2::identity();
            for (std::int64_t m = base; m < base + count; ++m) acc = map_at(m) * acc;
            return acc;
        };
        Mat2 a_rep = segment(rep_base, ll);
        Mat2 a_two = segment(kind == PatternKind::Left3 ? -2 * ll : 0, 2 * ll);
        rep.trace = a_rep.trace();
        Mat2 ch = a_two - (a_rep.scaled(rep.trace) - Mat2::identity());
        rep.ch_residual = ch.max_abs() / std::max(1.0, a_two.max_abs());
        rep.b_norm = 1;
        rep.b_norm_bound = 1;

        auto phi = [&](std::int64_t j) {
            Mat2 acc = Mat2::identity();
            if (j > 0)
                for (std::int64_t m = 0; m < j; ++m) acc = map_at(m) * acc;
            else
                for (std::int64_t m = -1; m >= j; --m) acc = map_at(m).inverse() * acc;
            return acc * phi0;
        };
        double probe;
        if (kind == PatternKind::Left3)
            probe = std::max({phi(-2 * ll).norm(), phi(-ll).norm(), phi(ll).norm()});
        else if (kind == PatternKind::Right3)
            probe = std::max({phi(-ll).norm(), phi(ll).norm(), phi(2 * ll).norm()});
        else
            throw PatternError("gordon_verify: pattern kind must be a cube");
        double bound = phi0.norm() / (2 * rep.b_norm);
        rep.max_norm_ratio = probe / bound;
        rep.bound_ok = probe >= bound * (1 - 1e-12);
        return rep;
    }

    if (kind != PatternKind::Left3)
        throw PatternError("gordon_verify: finite-window maps are handled for left cubes only");
    if (2 * J >= ll) throw PatternError("gordon_verify: cube too short for the window radius");

    // Three-minus-epsilon argument on rho = S^J w: the repeated-block cocycle
    // agrees with its shifted copy up to a correction B of 4J factors.
    // step_rho(m) is the map value at S^m rho, i.e. at S^{m+J} w.
    auto step_rho = [&](std::int64_t m) { return map_at(m + J); };
    // A(count, S^base rho): factors at base .. base+count-1, leftmost latest.
    auto cocycle_rho = [&](std::int64_t count, std::int64_t base) {
        Mat2 acc = Mat2::identity();
        for (std::int64_t m = base; m < base + count; ++m) acc = step_rho(m) * acc;
        return acc;
    };

    Mat2 a_rep = cocycle_rho(ll, -ll + 1);          // A(l, S^{-l+1} rho)
    Mat2 a_two = cocycle_rho(2 * ll, -2 * ll + 1);  // A(2l, S^{-2l+1} rho)
    rep.trace = a_rep.trace();
    Mat2 ch = a_two - (a_rep.scaled(rep.trace) - Mat2::identity());
    rep.ch_residual = ch.max_abs() / std::max(1.0, a_two.max_abs());

    // B = A(S^0 rho) ... A(S^{-2J+1} rho) A(S^{l-2J+1} rho)^{-1} ... A(S^l rho)^{-1}.
    Mat2 b = Mat2::identity();
    double s_max = 1;
    for (std::int64_t m = 0; m >= -2 * J + 1; --m) {
        Mat2 e = step_rho(m);
        s_max = std::max(s_max, e.norm());
        b = b * e;
    }
    for (std::int64_t m = ll - 2 * J + 1; m <= ll; ++m) {
        Mat2 e = step_rho(m);
        s_max = std::max(s_max, e.norm());
        b = b * e.inverse();
    }
    rep.b_norm = b.norm();
    rep.b_norm_bound = std::pow(s_max, 4.0 * static_cast<double>(J));
    Mat2 a_right = cocycle_rho(ll, 1);  // A(l, S^1 rho)
    Mat2 ident = a_rep - b * a_right;
    rep.b_identity_residual = ident.max_abs() / std::max(1.0, a_rep.max_abs());

    auto phi = [&](std::int64_t j) {
        // Phi_j = A(j, S^1 rho) phi0.
        Mat2 acc = Mat2::identity();
        if (j > 0)
            for (std::int64_t m = 1; m <= j; ++m) acc = step_rho(m) * acc;
        else
            for (std::int64_t m = 0; m > j; --m) acc = step_rho(m).inverse() * acc;
        return acc * phi0;
    };
    double probe = std::max({phi(-2 * ll).norm(), phi(-ll).norm(), phi(ll).norm()});
    double bound = phi0.norm() / (2 * rep.b_norm);
    rep.max_norm_ratio = probe / bound;
    rep.bound_ok = probe >= bound * (1 - 1e-12);
    return rep;
}

GordonReport gordon_verify(const TransferContext& ctx, std::size_t l, PatternKind kind,
                           Vec2 phi0) {
    auto map_at = [&ctx](std::int64_t m) { return elementary_modified(ctx, m); };
    if (ctx.potential.window_radius() == 0 && ctx.potential.constant_offdiag()) {
        // Every read of the step at base m stays inside the repeated blocks,
        // so the factors repeat exactly.
        return gordon_verify_map(map_at, 0, l, kind, phi0);
    }
    // The step at base m reads windows centered at m+1 and m+2, so its
    // symmetric dependence radius is the potential radius plus two.
    return gordon_verify_map(map_at, ctx.potential.window_radius() + 2, l, kind, phi0);
}

std::vector<LyapunovPoint> lyapunov_sequence(const TransferContext& ctx, std::int64_t j_max,
                                             int direction, std::int64_t stride) {
    auto step = [&](std::int64_t m) { return elementary_modified(ctx, m); };
    return lyapunov_sequence_custom(step, j_max, direction, stride);
}

std::vector<LyapunovPoint> lyapunov_sequence_custom(
    const std::function<Mat2(std::int64_t)>& step, std::int64_t j_max, int direction,
    std::int64_t stride) {
    if (j_max < 1) throw ArgError("lyapunov_sequence: j_max must be >= 1");
    if (stride < 1) throw ArgError("lyapunov_sequence: stride must be >= 1");
    if (direction != 1 && direction != -1) throw ArgError("lyapunov_sequence: direction is +1 or -1");
    std::vector<LyapunovPoint> out;
    ScaledMat acc = ScaledMat::identity();
    for (std::int64_t j = 1; j <= j_max; ++j) {
        if (direction > 0) {
            acc.m = step(j - 1) * acc.m;
        } else {
            acc.m = step(-j).inverse() * acc.m;
        }
        acc.renormalize();
        if (j % stride == 0 || j == j_max)
            out.push_back({j, acc.log_norm() / static_cast<double>(j)});
    }
    return out;
}

namespace {

std::vector<PqPoint> pq_from_prefix(const Word& prefix, const std::vector<std::size_t>& js,
                                    std::size_t L) {
    if (L > prefix.size()) throw DepthError("pq_diagnostic: prefix shorter than L");
    Word full(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(L));
    std::vector<PqPoint> out;
    for (std::size_t j : js) {
        if (j == 0 || j > L) throw ArgError("pq_diagnostic: j must satisfy 1 <= j <= L");
        Word pat(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(j));
        CopyCount c = count_copies(pat, full);
        out.push_back({j, BigRational(BigInt(static_cast<std::int64_t>(j)) * BigInt(c.disjoint),
                                      BigInt(static_cast<std::int64_t>(L)))});
    }
    return out;
}

}  // namespace

std::vector<PqPoint> pq_diagnostic(const CodingSpec& spec, const std::vector<std::size_t>& js,
                                   std::size_t L) {
    return pq_from_prefix(limit_prefix(spec, L), js, L);
}

std::vector<PqPoint> pq_diagnostic(const SturmianSpec& spec, const std::vector<std::size_t>& js,
                                   std::size_t L) {
    std::size_t k = 2;
    SturmianBlocks bl = sturmian_blocks(spec, k);
    while (bl.p[k].size() < L) {
        ++k;
        bl = sturmian_blocks(spec, k);
    }
    return pq_from_prefix(bl.p[k], js, L);
}

}  // namespace toepl
