#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toepl/bigint.hpp"
#include "toepl/coding.hpp"
#include "toepl/language.hpp"
#include "toepl/mat2.hpp"
#include "toepl/sturmian.hpp"
#include "toepl/words.hpp"

namespace toepl {

// Locally constant Jacobi data: an off-diagonal weight f (never zero) and a
// diagonal g, both read from a window of radius J around a position. The
// letter-table constructors cover the common case J = 0.
class PotentialSpec {
  public:
    static PotentialSpec schroedinger(std::vector<double> g_by_letter);
    static PotentialSpec letter_table(std::vector<double> f_by_letter,
                                      std::vector<double> g_by_letter);
    static PotentialSpec window_table(int radius, std::map<Word, std::pair<double, double>> table);

    int window_radius() const { return radius_; }
    bool constant_offdiag() const;  // f takes a single value
    bool is_letter_table() const { return !use_table_; }
    double f(const Word& window) const;
    double g(const Word& window) const;
    double f_of_letter(Letter l) const;
    double g_of_letter(Letter l) const;

  private:
    PotentialSpec() = default;
    int radius_ = 0;
    std::vector<double> f_letter_;
    std::vector<double> g_letter_;
    std::map<Word, std::pair<double, double>> table_;
    bool use_table_ = false;
};

// Supplies the letters of a two-sided word on a range of positions.
class WindowSource {
  public:
    static WindowSource leading_word(const CodingSpec& spec, Letter origin_letter,
                                     std::size_t radius);
    // w(j) = period[(j - 1) mod |period|]; unbounded range.
    static WindowSource periodic(Word period);
    // Explicit letters; first_pos is the position of window[0].
    static WindowSource window(Word window, std::int64_t first_pos);

    Letter at(std::int64_t pos) const;
    bool bounded() const { return bounded_; }
    std::int64_t min_pos() const;
    std::int64_t max_pos() const;

    // View of the same word with the origin moved: shifted(t).at(j) == at(j + t).
    WindowSource shifted(std::int64_t t) const;

  private:
    bool bounded_ = true;
    Word letters_;
    std::int64_t first_pos_ = 0;
    std::int64_t offset_ = 0;
};

struct TransferContext {
    WindowSource source;
    PotentialSpec potential;
    double energy = 0;

    Word window_at(std::int64_t center) const;
    double f_at(std::int64_t center) const;
    double g_at(std::int64_t center) const;
};

// One factor of the transfer matrix product, based at position j: the
// diagonal value is read at j+1, the off-diagonal weights at j+1 and j+2.
Mat2 elementary_transfer(const TransferContext& ctx, std::int64_t j);
// Determinant-one variant of the same step.
Mat2 elementary_modified(const TransferContext& ctx, std::int64_t j);

// Cocycle product: identity at j = 0, forward products for j > 0, inverse
// products for j < 0.
Mat2 cocycle_product(const TransferContext& ctx, std::int64_t j, bool modified = true);
ScaledMat cocycle_product_scaled(const TransferContext& ctx, std::int64_t j, bool modified = true);

// Solution propagation: phi(j) = T(j, w) phi(0) with phi(j) = (phi_{j+1}, phi_j).
Vec2 solve_eigen_iteration(const TransferContext& ctx, Vec2 phi0, std::int64_t j);
// Independent three-term recurrence path used as the cross-check.
Vec2 solve_recurrence(const TransferContext& ctx, Vec2 phi0, std::int64_t j);

// Trace of the determinant-one cocycle over one period of the level-k
// periodic approximant (the block p^(k) followed by a_{k+1}).
LogReal periodic_trace(const CodingSpec& spec, const PotentialSpec& pot, double energy,
                       std::size_t k);
// Trace over an explicit period word.
LogReal periodic_trace_word(const Word& period, const PotentialSpec& pot, double energy);

// Relative difference of two log-space reals, for recursion residuals.
double log_rel_diff(const LogReal& a, const LogReal& b);

struct Interval {
    double lo;
    double hi;
};
struct SpectrumApprox {
    std::vector<Interval> intervals;  // sorted, disjoint
    double measure = 0;
};

// Estimate of { E : |trace_k(E)| <= 2 } by a sign grid plus bisection.
SpectrumApprox spectrum_approx(const CodingSpec& spec, const PotentialSpec& pot, std::size_t k,
                               double e_lo, double e_hi, std::size_t grid_n, double refine_tol);
SpectrumApprox spectrum_approx_word(const Word& period, const PotentialSpec& pot, double e_lo,
                                    double e_hi, std::size_t grid_n, double refine_tol);

struct GordonReport {
    double trace = 0;            // trace of the repeated-block cocycle
    double b_norm = 1;           // norm of the window-radius correction factor
    double b_norm_bound = 1;     // S^(4J) with S the largest elementary norm seen
    double ch_residual = 0;      // relative Cayley/Hamilton residual
    double b_identity_residual = 0;  // residual of the correction identity (J > 0)
    double max_norm_ratio = 0;   // max probe norm / (|phi0| / (2 |B|))
    bool bound_ok = false;
};

// Checks the repetition-based non-decay bound at one detected pattern length.
// The pattern must have been confirmed (power_scan); PatternError otherwise.
GordonReport gordon_verify(const TransferContext& ctx, std::size_t l, PatternKind kind, Vec2 phi0);

// Same bound for an arbitrary determinant-one step map with symmetric window
// radius `radius` over a word with a left cube at l: map_at(m) is the matrix
// attached to the shift by m. radius == 0 assumes the factors repeat exactly.
GordonReport gordon_verify_map(const std::function<Mat2(std::int64_t)>& map_at, int radius,
                               std::size_t l, PatternKind kind, Vec2 phi0);

struct LyapunovPoint {
    std::int64_t j;
    double value;  // log norm of the cocycle over j steps, divided by j
};

// Averages (1/j) log |A(dir * j, w)| sampled every `stride` steps.
std::vector<LyapunovPoint> lyapunov_sequence(const TransferContext& ctx, std::int64_t j_max,
                                             int direction, std::int64_t stride = 1);
// Same on an arbitrary step matrix map (position -> factor).
std::vector<LyapunovPoint> lyapunov_sequence_custom(
    const std::function<Mat2(std::int64_t)>& step, std::int64_t j_max, int direction,
    std::int64_t stride = 1);

struct PqPoint {
    std::size_t j;
    BigRational value;  // (j / L) * disjoint copies of prefix_j in prefix_L
};

std::vector<PqPoint> pq_diagnostic(const CodingSpec& spec, const std::vector<std::size_t>& js,
                                   std::size_t L);
std::vector<PqPoint> pq_diagnostic(const SturmianSpec& spec, const std::vector<std::size_t>& js,
                                   std::size_t L);

}  // namespace toepl
