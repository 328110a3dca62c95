// Command line front end: spec parsing, invariant tables, graph export,
// spectral scans and the formula-vs-oracle verification suite.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toepl/blocks.hpp"
#include "toepl/debruijn.hpp"
#include "toepl/errors.hpp"
#include "toepl/formulas.hpp"
#include "toepl/language.hpp"
#include "toepl/spec_io.hpp"
#include "toepl/spectral.hpp"
#include "toepl/sturmian.hpp"

namespace {

using namespace toepl;

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open output file '" + path + "'");
    return file;
}

CodingSpec require_coding(const AnySpec& spec) {
    if (const auto* c = std::get_if<CodingSpec>(&spec)) return *c;
    throw SpecError("this command needs a coding spec, got a sturmian spec");
}

SturmianSpec require_sturmian(const AnySpec& spec) {
    if (const auto* s = std::get_if<SturmianSpec>(&spec)) return *s;
    throw SpecError("this command needs a sturmian spec, got a coding spec");
}

// "--g a=0,b=1.5" style letter tables; letters absent from the list keep the
// default value.
std::vector<double> parse_letter_values(const Alphabet& alphabet, const std::string& text,
                                        double dflt) {
    std::vector<double> vals(alphabet.size(), dflt);
    if (text.empty()) return vals;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ArgError("letter table entry '" + item + "' needs '='");
        Letter l = alphabet.id(item.substr(0, eq));
        vals[l] = std::stod(item.substr(eq + 1));
    }
    return vals;
}

PotentialSpec potential_from_flags(const Alphabet& alphabet, const std::string& f_text,
                                   const std::string& g_text) {
    std::vector<double> f = parse_letter_values(alphabet, f_text, 1.0);
    std::vector<double> g(alphabet.size(), 0.0);
    if (g_text.empty()) {
        for (std::size_t i = 0; i < g.size(); ++i) g[i] = static_cast<double>(i);
    } else {
        g = parse_letter_values(alphabet, g_text, 0.0);
    }
    return PotentialSpec::letter_table(std::move(f), std::move(g));
}

BigRational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return BigRational(BigInt::from_string(text));
    return BigRational(BigInt::from_string(text.substr(0, slash)),
                       BigInt::from_string(text.substr(slash + 1)));
}

struct CheckList {
    std::ostream& os;
    int failures = 0;
    void check(bool ok, const std::string& name) {
        os << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    }
};

void verify_coding(const CodingSpec& spec, std::size_t depth, std::size_t graph_max_l,
                   CheckList& out) {
    BigInt top = spec.block_length_plus_one(depth + 1);
    if (top > BigInt(1 << 14)) top = BigInt(1 << 14);
    LanguageIndex idx = LanguageIndex::for_spec(spec, top);
    std::int64_t max_l = idx.max_valid_L().to_i64();

    bool complexity_ok = true, palindrome_ok = true;
    for (std::int64_t L = 0; L <= max_l; ++L) {
        complexity_ok = complexity_ok && complexity_formula(spec, BigInt(L)).value ==
                                             BigInt(idx.complexity(static_cast<std::size_t>(L)));
        palindrome_ok = palindrome_ok && palindrome_formula(spec, BigInt(L)).value ==
                                             BigInt(idx.palindromes(static_cast<std::size_t>(L)));
    }
    out.check(complexity_ok, "complexity formula == oracle for L <= " + std::to_string(max_l));
    out.check(palindrome_ok, "palindrome formula == oracle for L <= " + std::to_string(max_l));

    bool growth_ok = true;
    for (std::int64_t L = 0; L < max_l; ++L)
        growth_ok = growth_ok && growth_formula(spec, BigInt(L)).value ==
                                     BigInt(idx.growth(static_cast<std::size_t>(L)));
    out.check(growth_ok, "growth formula == oracle");

    bool rep_ok = true;
    BigInt rep_lo = repetitivity_segment(spec, 1).lo;
    for (BigInt L = rep_lo; L <= BigInt(std::min<std::int64_t>(max_l / 4, 24)); L += 1) {
        try {
            std::size_t oracle = repetitivity_oracle(idx, static_cast<std::size_t>(L.to_i64()));
            rep_ok = rep_ok && repetitivity_formula(spec, L).value ==
                                   BigInt(static_cast<std::int64_t>(oracle));
        } catch (const BoundExceeded&) {
            break;
        }
    }
    out.check(rep_ok, "repetitivity formula == oracle on the covered range");

    bool graph_ok = true;
    for (std::size_t L = 1; L <= graph_max_l && static_cast<std::int64_t>(L + 1) <= max_l; ++L) {
        auto g = build_graph(idx, L);
        auto st = graph_stats(g);
        graph_ok = graph_ok && g.vertices.size() == static_cast<std::size_t>(idx.complexity(L)) &&
                   g.edges.size() == static_cast<std::size_t>(idx.complexity(L + 1)) &&
                   st.reversal_is_isomorphism && st.strongly_connected &&
                   st.branch_vertices.size() == idx.right_special_words(L).size() &&
                   st.palindromes_from_arcs == idx.palindromes(L);
    }
    out.check(graph_ok, "de bruijn sizes, reversal symmetry and palindrome arcs");

    // Spectral identities with the default letter potential.
    std::vector<double> g_vals(spec.alphabet.size());
    for (std::size_t i = 0; i < g_vals.size(); ++i) g_vals[i] = static_cast<double>(i);
    auto pot = PotentialSpec::schroedinger(g_vals);
    std::size_t radius = 4096;
    Letter e = is_aperiodic(spec).eventual_alphabet.front();
    TransferContext ctx{WindowSource::leading_word(spec, e, radius), pot, 0.5};
    std::mt19937 rng(1);
    std::uniform_real_distribution<double> U(-4, 4);
    bool det_ok = true;
    for (int trial = 0; trial < 64; ++trial) {
        ctx.energy = U(rng);
        std::int64_t j = static_cast<std::int64_t>(rng() % 100) - 50;
        det_ok = det_ok && std::fabs(elementary_modified(ctx, j).det() - 1.0) <= 1e-14;
    }
    out.check(det_ok, "modified transfer matrices have determinant one");

    ctx.energy = 0.5;
    bool solve_ok = true;
    for (std::int64_t j : {500, -500}) {
        Vec2 a = solve_eigen_iteration(ctx, {1, 0.5}, j);
        Vec2 b = solve_recurrence(ctx, {1, 0.5}, j);
        double scale = std::max({1.0, a.norm(), b.norm()});
        solve_ok = solve_ok && std::hypot(a.x - b.x, a.y - b.y) / scale <= 1e-10;
    }
    out.check(solve_ok, "cocycle solution equals the three-term recurrence");
}

void verify_sturmian(const SturmianSpec& spec, CheckList& out) {
    auto idx = LanguageIndex::for_sturmian(spec, 200);
    bool compl_ok = true;
    for (std::size_t L = 0; L <= 200; ++L)
        compl_ok = compl_ok && idx.complexity(L) == static_cast<std::int64_t>(L + 1);
    out.check(compl_ok, "complexity is L + 1 for L <= 200");

    auto bl = sturmian_blocks(spec, 10);
    bool pal_ok = true, glue_ok = true;
    for (std::size_t k = 2; k <= 10; ++k) pal_ok = pal_ok && is_palindrome(bl.p[k]);
    for (std::size_t k = 2; k < 10; ++k)
        glue_ok = glue_ok && concat(bl.s[k], bl.p[k + 1]) == concat(bl.s[k + 1], bl.p[k]);
    out.check(pal_ok, "trimmed blocks are palindromes");
    out.check(glue_ok, "block gluing identity");

    if (spec.has_tail()) {
        std::size_t len = bl.s[8].size();
        Word prefix = sturmian_blocks(spec, 14).p[14];
        prefix.resize(len);
        Word rot = rotation_word(spec, BigRational(0), len);
        out.check(rot == prefix, "rotation word equals the block limit prefix");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"simple Toeplitz and Sturmian subshift toolkit"};
    app.require_subcommand(1);

    std::string spec_path, out_path, format = "dot", f_text, g_text, x0_text = "0";
    std::int64_t level = 2, jmax = 1000, stride = 1, lflag = 1, max_l = 64, kflag = 8,
                 trials = 50, seed = 20240901, depth = 5;
    double emin = -3, emax = 3, energy = 0, tol = 1e-9;
    std::size_t grid_n = 2001;
    std::string mode = "both";

    auto add_spec = [&](CLI::App* cmd) {
        cmd->add_option("--spec", spec_path, "spec file (JSON)")->required();
    };

    auto* c_blocks = app.add_subcommand("blocks", "print the palindromic building blocks");
    add_spec(c_blocks);
    c_blocks->add_option("--k", level, "deepest level to print");

    auto* c_compl = app.add_subcommand("complexity", "subword complexity table (CSV)");
    add_spec(c_compl);
    c_compl->add_option("--max-L", max_l);
    c_compl->add_option("--mode", mode, "formula|oracle|both");
    bool full_table = false;
    c_compl->add_flag("--table", full_table, "emit the oracle row (L, p, s, P, R) instead");
    c_compl->add_option("--out", out_path);

    auto* c_pali = app.add_subcommand("palindromes", "palindrome complexity table (CSV)");
    add_spec(c_pali);
    c_pali->add_option("--max-L", max_l);
    c_pali->add_option("--mode", mode);
    c_pali->add_option("--out", out_path);

    auto* c_rep = app.add_subcommand("repetitivity", "repetitivity table (CSV)");
    add_spec(c_rep);
    c_rep->add_option("--max-L", max_l);
    c_rep->add_option("--mode", mode);
    c_rep->add_option("--out", out_path);

    auto* c_graph = app.add_subcommand("debruijn", "export the de Bruijn graph at length L");
    add_spec(c_graph);
    c_graph->add_option("--L", lflag);
    c_graph->add_option("--format", format, "dot|json");
    c_graph->add_option("--out", out_path);

    auto* c_verd = app.add_subcommand("verdicts", "asymptotic condition verdicts (JSON)");
    add_spec(c_verd);
    std::vector<std::string> alphas{"1", "3/2", "2"};
    c_verd->add_option("--alpha", alphas, "rationals for the repetitivity class");

    auto* c_spec = app.add_subcommand("spectrum", "periodic approximant spectrum (JSON)");
    add_spec(c_spec);
    c_spec->add_option("--k", kflag);
    c_spec->add_option("--emin", emin);
    c_spec->add_option("--emax", emax);
    c_spec->add_option("--grid", grid_n);
    c_spec->add_option("--tol", tol);
    c_spec->add_option("--f", f_text, "off-diagonal letter table, e.g. a=1,b=0.5");
    c_spec->add_option("--g", g_text, "diagonal letter table, e.g. a=0,b=1");
    c_spec->add_option("--out", out_path);

    auto* c_trace = app.add_subcommand("tracemap", "trace curve over an energy grid (CSV)");
    add_spec(c_trace);
    c_trace->add_option("--k", kflag);
    c_trace->add_option("--emin", emin);
    c_trace->add_option("--emax", emax);
    c_trace->add_option("--grid", grid_n);
    c_trace->add_option("--f", f_text);
    c_trace->add_option("--g", g_text);
    c_trace->add_option("--out", out_path);

    std::string letter_text;
    auto* c_lyap = app.add_subcommand("lyapunov", "cocycle growth averages (CSV)");
    add_spec(c_lyap);
    c_lyap->add_option("--letter", letter_text, "origin letter of the leading word")->required();
    c_lyap->add_option("--E", energy);
    c_lyap->add_option("--jmax", jmax);
    c_lyap->add_option("--stride", stride);
    c_lyap->add_option("--f", f_text);
    c_lyap->add_option("--g", g_text);
    c_lyap->add_option("--out", out_path);

    auto* c_gordon = app.add_subcommand("gordon", "repetition-based non-decay bounds");
    add_spec(c_gordon);
    c_gordon->add_option("--letter", letter_text)->required();
    c_gordon->add_option("--kmax", kflag);
    c_gordon->add_option("--trials", trials);
    c_gordon->add_option("--seed", seed);
    c_gordon->add_option("--f", f_text);
    c_gordon->add_option("--g", g_text);

    auto* c_pq = app.add_subcommand("pq", "positive quasiweight diagnostics (CSV)");
    add_spec(c_pq);
    c_pq->add_option("--jmax", jmax);
    c_pq->add_option("--L", lflag);
    c_pq->add_option("--out", out_path);

    auto* c_sturm = app.add_subcommand("sturmian", "sturmian blocks and rotation words");
    add_spec(c_sturm);
    std::int64_t sturm_blocks_k = -1, rotation_l = -1;
    c_sturm->add_option("--blocks", sturm_blocks_k, "print s_0..s_k and the trimmed blocks");
    c_sturm->add_option("--rotation", rotation_l, "print the rotation coding of length L");
    c_sturm->add_option("--x0", x0_text, "exact rational start point");

    auto* c_verify = app.add_subcommand("verify", "formula-vs-oracle verification suite");
    add_spec(c_verify);
    c_verify->add_option("--depth", depth, "block depth bounding the verified range");
    c_verify->add_option("--max-graph-L", max_l, "largest graph length checked");

    CLI11_PARSE(app, argc, argv);

    if (c_blocks->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        auto blocks = build_blocks(spec, level);
        for (const auto& b : blocks) {
            std::cout << "k=" << b.level << " len=" << b.word.size();
            if (b.word.size() <= 120) std::cout << " word=" << spec.alphabet.render(b.word);
            std::cout << "\n";
        }
        return 0;
    }

    if (c_compl->parsed() && full_table) {
        auto spec = require_coding(load_spec_file(spec_path));
        // Extra depth so the repetitivity column, which grows like a small
        // multiple of L, stays inside the certified range.
        auto idx = LanguageIndex::for_spec(spec, BigInt(16) * (BigInt(max_l) + BigInt(1)));
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        os << "L,p,s,P,R\n";
        bool rep_alive = true;
        for (std::int64_t L = 0; L <= max_l; ++L) {
            std::size_t Ls = static_cast<std::size_t>(L);
            os << L << "," << idx.complexity(Ls) << ","
               << (L < max_l ? std::to_string(idx.growth(Ls)) : std::string()) << ","
               << idx.palindromes(Ls) << ",";
            if (L >= 1 && rep_alive) {
                try {
                    os << repetitivity_oracle(idx, Ls);
                } catch (const BoundExceeded&) {
                    rep_alive = false;
                }
            }
            os << "\n";
        }
        return 0;
    }

    if (c_compl->parsed() || c_pali->parsed() || c_rep->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        bool want_formula = mode == "formula" || mode == "both";
        bool want_oracle = mode == "oracle" || mode == "both";
        std::optional<LanguageIndex> idx;
        if (want_oracle) {
            // Repetitivity values grow like a small multiple of L, so that
            // table needs a deeper certified range than the other two.
            BigInt cap = BigInt(max_l) + BigInt(1);
            if (c_rep->parsed()) cap = cap * BigInt(16);
            idx.emplace(LanguageIndex::for_spec(spec, cap));
        }

        const char* value_name = c_compl->parsed() ? "p" : (c_pali->parsed() ? "P" : "R");
        os << "L";
        if (want_formula) os << "," << value_name << "_formula,branch";
        if (want_oracle) os << "," << value_name << "_oracle";
        os << "\n";
        for (std::int64_t L = c_rep->parsed() ? 1 : 0; L <= max_l; ++L) {
            os << L;
            if (want_formula) {
                try {
                    FormulaValue fv = c_compl->parsed() ? complexity_formula(spec, BigInt(L))
                                      : c_pali->parsed() ? palindrome_formula(spec, BigInt(L))
                                                         : repetitivity_formula(spec, BigInt(L));
                    os << "," << fv.value.to_string() << "," << fv.branch;
                } catch (const RangeError&) {
                    os << ",,uncovered";
                }
            }
            if (want_oracle) {
                if (c_compl->parsed()) {
                    os << "," << idx->complexity(static_cast<std::size_t>(L));
                } else if (c_pali->parsed()) {
                    os << "," << idx->palindromes(static_cast<std::size_t>(L));
                } else {
                    try {
                        os << "," << repetitivity_oracle(*idx, static_cast<std::size_t>(L));
                    } catch (const BoundExceeded&) {
                        os << ",";
                    }
                }
            }
            os << "\n";
        }
        return 0;
    }

    if (c_graph->parsed()) {
        auto spec = load_spec_file(spec_path);
        std::optional<LanguageIndex> idx;
        if (const auto* c = std::get_if<CodingSpec>(&spec))
            idx.emplace(LanguageIndex::for_spec(*c, BigInt(lflag) + BigInt(1)));
        else
            idx.emplace(LanguageIndex::for_sturmian(std::get<SturmianSpec>(spec),
                                                    static_cast<std::size_t>(lflag) + 1));
        auto g = build_graph(*idx, static_cast<std::size_t>(lflag));
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        if (format == "dot")
            export_dot(g, os);
        else if (format == "json")
            os << export_json(g);
        else
            throw ArgError("debruijn: format must be dot or json");
        return 0;
    }

    if (c_verd->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        nlohmann::json j;
        auto ap = is_aperiodic(spec);
        nlohmann::json ev = nlohmann::json::array();
        for (Letter l : ap.eventual_alphabet) ev.push_back(spec.alphabet.name(l));
        j["aperiodic"] = {{"condition", "aperiodic"},
                          {"verdict", ap.aperiodic},
                          {"witness", "eventual alphabet"},
                          {"eventual_alphabet", ev}};
        auto pack = [](const ConditionReport& r) {
            return nlohmann::json{{"condition", r.condition},
                                  {"verdict", r.verdict},
                                  {"witness", r.witness},
                                  {"samples", r.samples}};
        };
        j["boshernitzan"] = pack(boshernitzan_verdict(spec));
        j["linearly_repetitive"] = pack(linear_repetitivity_verdict(spec));
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& text : alphas)
            arr.push_back(pack(alpha_repetitivity_verdict(spec, parse_rational(text))));
        j["alpha_repetitive"] = arr;
        std::cout << j.dump(2) << "\n";
        return 0;
    }

    if (c_spec->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        auto pot = potential_from_flags(spec.alphabet, f_text, g_text);
        auto sp =
            spectrum_approx(spec, pot, static_cast<std::size_t>(kflag), emin, emax, grid_n, tol);
        nlohmann::json j;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& iv : sp.intervals) arr.push_back({{"lo", iv.lo}, {"hi", iv.hi}});
        j["intervals"] = arr;
        j["measure"] = sp.measure;
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        os << j.dump(2) << "\n";
        return 0;
    }

    if (c_trace->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        auto pot = potential_from_flags(spec.alphabet, f_text, g_text);
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        os << "E,tau\n";
        for (std::size_t i = 0; i < grid_n; ++i) {
            double E =
                emin + (emax - emin) * static_cast<double>(i) / static_cast<double>(grid_n - 1);
            LogReal t = periodic_trace(spec, pot, E, static_cast<std::size_t>(kflag));
            os << fmt_double(E) << "," << fmt_double(t.to_double()) << "\n";
        }
        return 0;
    }

    if (c_lyap->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        auto pot = potential_from_flags(spec.alphabet, f_text, g_text);
        Letter e = spec.alphabet.id(letter_text);
        TransferContext ctx{
            WindowSource::leading_word(spec, e, static_cast<std::size_t>(jmax) + 8), pot, energy};
        auto fwd = lyapunov_sequence(ctx, jmax, +1, stride);
        auto bwd = lyapunov_sequence(ctx, jmax, -1, stride);
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        os << "j,forward,backward\n";
        for (std::size_t i = 0; i < fwd.size(); ++i)
            os << fwd[i].j << "," << fmt_double(fwd[i].value) << "," << fmt_double(bwd[i].value)
               << "\n";
        return 0;
    }

    if (c_gordon->parsed()) {
        auto spec = require_coding(load_spec_file(spec_path));
        auto pot = potential_from_flags(spec.alphabet, f_text, g_text);
        Letter e = spec.alphabet.id(letter_text);
        std::size_t radius =
            static_cast<std::size_t>(
                (spec.block_length_plus_one(static_cast<std::size_t>(kflag)) * BigInt(2))
                    .to_i64()) +
            16;
        Word window = leading_window(spec, e, radius);
        auto hits = power_scan(window, radius + 1);
        TransferContext ctx{WindowSource::leading_word(spec, e, radius), pot, 0};
        std::mt19937 rng(static_cast<unsigned>(seed));
        std::uniform_real_distribution<double> U(-4, 4);
        bool all_ok = true;
        for (std::int64_t k = 0; k <= kflag; ++k) {
            if (spec.letter_at(static_cast<std::size_t>(k)) != e) continue;
            std::size_t l = static_cast<std::size_t>(
                spec.block_length_plus_one(static_cast<std::size_t>(k)).to_i64());
            bool cube = false;
            for (const auto& h : hits) cube = cube || (h.l == l && h.kind == PatternKind::Left3);
            if (!cube) {
                std::cout << "l=" << l << " cube=missing\n";
                all_ok = false;
                continue;
            }
            double worst = 1e99;
            double worst_res = 0;
            bool ok = true;
            for (std::int64_t t = 0; t < trials; ++t) {
                ctx.energy = U(rng);
                auto rep = gordon_verify(ctx, l, PatternKind::Left3, {1, 0});
                ok = ok && rep.bound_ok && rep.ch_residual <= 1e-9;
                worst = std::min(worst, rep.max_norm_ratio);
                worst_res = std::max(worst_res, rep.ch_residual);
            }
            std::cout << "l=" << l << " trials=" << trials << " min_ratio=" << fmt_double(worst)
                      << " max_ch_residual=" << fmt_double(worst_res) << (ok ? " ok" : " FAIL")
                      << "\n";
            all_ok = all_ok && ok;
        }
        if (!all_ok) throw VerifyError("gordon: some bound failed");
        return 0;
    }

    if (c_pq->parsed()) {
        auto any = load_spec_file(spec_path);
        std::vector<std::size_t> js;
        for (std::int64_t j = 1; j <= jmax; ++j) js.push_back(static_cast<std::size_t>(j));
        std::vector<PqPoint> pts;
        if (const auto* c = std::get_if<CodingSpec>(&any))
            pts = pq_diagnostic(*c, js, static_cast<std::size_t>(lflag));
        else
            pts = pq_diagnostic(std::get<SturmianSpec>(any), js, static_cast<std::size_t>(lflag));
        std::ofstream file;
        std::ostream& os = open_output(file, out_path);
        os << "j,value\n";
        for (const auto& p : pts) os << p.j << "," << p.value.to_string() << "\n";
        return 0;
    }

    if (c_sturm->parsed()) {
        auto spec = require_sturmian(load_spec_file(spec_path));
        Alphabet ab = SturmianSpec::default_alphabet();
        if (sturm_blocks_k >= 0) {
            auto bl = sturmian_blocks(spec, static_cast<std::size_t>(sturm_blocks_k));
            for (std::size_t k = 0; k < bl.s.size(); ++k) {
                std::cout << "s_" << k << " len=" << bl.s[k].size();
                if (bl.s[k].size() <= 120) std::cout << " word=" << ab.render(bl.s[k]);
                std::cout << "\n";
            }
        }
        if (rotation_l >= 0) {
            Word w =
                rotation_word(spec, parse_rational(x0_text), static_cast<std::size_t>(rotation_l));
            std::cout << ab.render(w) << "\n";
        }
        return 0;
    }

    if (c_verify->parsed()) {
        auto any = load_spec_file(spec_path);
        CheckList list{std::cout};
        std::cout << describe_spec(any) << "\n";
        if (const auto* c = std::get_if<CodingSpec>(&any))
            verify_coding(*c, static_cast<std::size_t>(depth),
                          static_cast<std::size_t>(std::min<std::int64_t>(max_l, 16)), list);
        else
            verify_sturmian(std::get<SturmianSpec>(any), list);
        if (list.failures > 0) throw VerifyError(std::to_string(list.failures) + " checks failed");
        std::cout << "all checks passed\n";
        return 0;
    }

    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const toepl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
