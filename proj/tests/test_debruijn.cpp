#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "specs.hpp"
#include "toepl/debruijn.hpp"
#include "toepl/errors.hpp"
#include "toepl/formulas.hpp"
#include "toepl/language.hpp"

using namespace toepl;
using namespace toepl::testspecs;

TEST_CASE("small grigorchuk graphs match the published structure") {
    auto idx = LanguageIndex::for_spec(grigorchuk(), BigInt(8));

    auto g1 = build_graph(idx, 1);
    CHECK(g1.vertices.size() == 4);
    CHECK(g1.edges.size() == 6);
    auto st1 = graph_stats(g1);
    REQUIRE(st1.branch_vertices.size() == 1);
    CHECK(g1.alphabet.render(g1.vertices[static_cast<std::size_t>(st1.branch_vertices[0])]) == "a");
    // three two-edge loops through 'a'
    std::size_t two_cycles = 0;
    for (const auto& arc : st1.arcs)
        if (arc.edge_count == 2 && arc.from == arc.to) ++two_cycles;
    CHECK(two_cycles == 3);

    auto g2 = build_graph(idx, 2);
    CHECK(g2.vertices.size() == 6);
    CHECK(g2.edges.size() == 8);
    auto st2 = graph_stats(g2);
    REQUIRE(st2.branch_vertices.size() == 1);
    CHECK(g2.alphabet.render(g2.vertices[static_cast<std::size_t>(st2.branch_vertices[0])]) == "ba");

    // At L = |p^(k)| the prefix and suffix coincide: one branch vertex.
    for (std::size_t k = 1; k <= 2; ++k) {
        std::size_t L = (std::size_t{1} << (k + 1)) - 1;
        auto st = graph_stats(build_graph(idx, L));
        CHECK(st.branch_vertices.size() == 1);
        CHECK(st.merge_vertices == st.branch_vertices);
    }
}

TEST_CASE("pd L=1 has a single branch vertex") {
    auto idx = LanguageIndex::for_spec(period_doubling(), BigInt(4));
    auto st = graph_stats(build_graph(idx, 1));
    REQUIRE(st.branch_vertices.size() == 1);
    CHECK(idx.alphabet().render(
              build_graph(idx, 1).vertices[static_cast<std::size_t>(st.branch_vertices[0])]) == "a");
}

TEST_CASE("sturmian graphs are minimal") {
    auto idx = LanguageIndex::for_sturmian(fibonacci(), 34);
    for (std::size_t L = 1; L <= 32; ++L) {
        auto g = build_graph(idx, L);
        CHECK(g.vertices.size() == L + 1);
        CHECK(g.edges.size() == L + 2);
    }
}

TEST_CASE("graph sizes, special vertices and reversal symmetry") {
    for (auto spec : {period_doubling(), grigorchuk(), non_b(), gen_grigorchuk()}) {
        auto idx = LanguageIndex::for_spec(spec, BigInt(40));
        for (std::size_t L = 1; L <= 32; ++L) {
            auto g = build_graph(idx, L);
            CHECK(g.vertices.size() == static_cast<std::size_t>(idx.complexity(L)));
            CHECK(g.edges.size() == static_cast<std::size_t>(idx.complexity(L + 1)));
            auto st = graph_stats(g);
            CHECK(st.strongly_connected);
            CHECK(st.reversal_is_isomorphism);

            // Branch vertices are exactly the right special words.
            auto special = idx.right_special_words(L);
            REQUIRE(st.branch_vertices.size() == special.size());
            for (std::size_t i = 0; i < special.size(); ++i)
                CHECK(g.vertices[static_cast<std::size_t>(st.branch_vertices[i])] ==
                      special[i].word);

            // Every vertex extends both ways.
            auto outd = g.out_degree();
            auto ind = g.in_degree();
            for (std::size_t v = 0; v < g.vertices.size(); ++v) {
                CHECK(outd[v] >= 1);
                CHECK(ind[v] >= 1);
            }

            // Arc bookkeeping sees exactly the palindromes.
            CHECK(st.palindromes_from_arcs == idx.palindromes(L));
        }
    }
}

TEST_CASE("arc lengths in the two-special-vertex regime") {
    // For |p^(k-1)|+1 <= L <= 2|p^(k-1)| - |p^(k-2)| (k >= 2) the grigorchuk
    // graph has two branch vertices and the arcs decompose, with
    // r = L mod (|p^(k-1)|+1) and rt = L mod (|p^(k-2)|+1), into
    //   one path of |p^(k-1)| - r edges, three arcs of r+1 edges,
    //   one path of |p^(k-2)| - rt edges, one loop of rt+1 edges,
    //   and |A_k| - 2 long arcs of L+1 edges.
    auto spec = grigorchuk();
    auto idx = LanguageIndex::for_spec(spec, BigInt(64));
    for (std::size_t k = 2; k <= 4; ++k) {
        std::size_t lk1 = (std::size_t{1} << k) - 1;      // |p^(k-1)|
        std::size_t lk2 = (std::size_t{1} << (k - 1)) - 1;  // |p^(k-2)|
        for (std::size_t L = lk1 + 1; L <= 2 * lk1 - lk2; ++L) {
            auto st = graph_stats(build_graph(idx, L));
            CHECK(st.branch_vertices.size() == 2);
            CHECK(st.merge_vertices.size() == 2);
            std::size_t r = L % (lk1 + 1);
            std::size_t rt = L % (lk2 + 1);
            std::multiset<std::size_t> expect{lk1 - r, r + 1, r + 1, r + 1, rt + 1};
            // The two inner special vertices coincide when rt hits its
            // maximum; the zero-edge path between them disappears.
            if (lk2 > rt) expect.insert(lk2 - rt);
            expect.insert(L + 1);  // |A_k| - 2 == 1 for the grigorchuk tail
            std::multiset<std::size_t> got;
            for (const auto& arc : st.arcs) got.insert(arc.edge_count);
            CHECK(got == expect);
        }
    }
}

TEST_CASE("dot export is deterministic and counts lines") {
    auto idx = LanguageIndex::for_spec(grigorchuk(), BigInt(4));
    auto g = build_graph(idx, 1);
    std::ostringstream a, b;
    export_dot(g, a);
    export_dot(g, b);
    CHECK(a.str() == b.str());
    std::size_t node_lines = 0, edge_lines = 0;
    std::istringstream in(a.str());
    for (std::string line; std::getline(in, line);) {
        if (line.find("->") != std::string::npos)
            ++edge_lines;
        else if (line.find('"') != std::string::npos)
            ++node_lines;
    }
    CHECK(node_lines == 4);
    CHECK(edge_lines == 6);
}

TEST_CASE("json twin round-trips") {
    auto idx = LanguageIndex::for_spec(period_doubling(), BigInt(8));
    auto g = build_graph(idx, 3);
    auto text = export_json(g);
    auto g2 = import_json(text);
    CHECK(g2.L == g.L);
    CHECK(g2.vertices == g.vertices);
    CHECK(g2.edges.size() == g.edges.size());
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        CHECK(g2.edges[i].from == g.edges[i].from);
        CHECK(g2.edges[i].to == g.edges[i].to);
        CHECK(g2.edges[i].label == g.edges[i].label);
    }
    CHECK(export_json(g2) == text);
}

TEST_CASE("export fails cleanly beyond the valid range") {
    auto idx = LanguageIndex::for_spec(period_doubling(), BigInt(4));
    CHECK_THROWS_AS(build_graph(idx, 64), RangeError);
    auto g = build_graph(idx, 2);
    CHECK_THROWS_AS(export_dot_file(g, "/nonexistent-dir/graph.dot"), IoError);
}
