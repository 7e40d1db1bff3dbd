#include "catch_amalgamated.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "families.hpp"
#include "tubecat/ext_quiver.hpp"

using namespace tubecat;

namespace {
using Arrow3 = std::tuple<int, int, int>;

std::multiset<Arrow3> skeleton(const GentleOneCycleQuiver& g) {
    std::multiset<Arrow3> s;
    for (const auto& a : g.arrows) s.insert({a.src, a.tgt, a.degree});
    return s;
}

Smc heart(int row, int d, int k) { return classified(Smc(3, fixtures::heart_row_instance(row, d, k))); }

GradedQuiver quiver(int n, std::initializer_list<Arrow3> arrows) {
    GradedQuiver q;
    q.n = n;
    for (auto [s, t, d] : arrows) q.add(s, t, d);
    return q;
}
}  // namespace

TEST_CASE("standard collection gives the cyclic quiver of simples") {
    for (int p = 1; p <= 6; ++p) {
        auto x = Smc::standard(p);
        auto q = ext_quiver_of(x);
        REQUIRE(q.arrow_count() == p);
        for (int j = 0; j < p; ++j) CHECK(q.multiplicity((j + 1) % p, j, 1) == 1);
        auto g = gentle_of(x);
        CHECK(g.rank == p);
        CHECK(g.arrows.size() == static_cast<std::size_t>(p));
        CHECK(associated_quiver(g) == q);
    }
}

TEST_CASE("rank one tube has a single degree-one loop") {
    auto q = ext_quiver_of(Smc::standard(1));
    CHECK(q.arrows == quiver(1, {{0, 0, 1}}).arrows);
}

TEST_CASE("arrow count equals the summed graded homs") {
    for (const auto& x : enumerate(3, 2, 3)) {
        int total = 0;
        for (const auto& a : x.objects)
            for (const auto& b : x.objects)
                for (int n = 1; n <= 12; ++n) total += graded_hom(a, b, n);
        CHECK(ext_quiver_of(x).arrow_count() == total);
    }
}

TEST_CASE("no degree-zero arrows between distinct members") {
    for (const auto& x : enumerate(4, 1, 2))
        for (std::size_t a = 0; a < x.objects.size(); ++a)
            for (std::size_t b = 0; b < x.objects.size(); ++b)
                if (a != b) CHECK(graded_hom(x.objects[a], x.objects[b], 0) == 0);
}

TEST_CASE("rank-2 heart row: cycle with one tree vertex") {
    for (int d = 0; d <= 3; ++d) {
        auto x = heart(1, d, 1);  // S2^(2), S0, S1[d+1]
        auto g = gentle_of(x);
        CHECK(g.rank == 2);
        CHECK(skeleton(g) == std::multiset<Arrow3>{{0, 1, 1}, {1, 0, 1}, {2, 0, d + 1}});
        CHECK(associated_quiver(g) == ext_quiver_of(x));
    }
}

TEST_CASE("rank-1 heart rows: loop and tree arrows") {
    for (int d = 0; d <= 3; ++d)
        for (int k = 1; k <= 3; ++k) {
            // S2^(3); S1^(2)[d+1], S1[d+1-k]
            auto g3 = gentle_of(heart(3, d, k));
            CHECK(g3.rank == 1);
            CHECK(skeleton(g3) == std::multiset<Arrow3>{{0, 0, 1}, {1, 0, d + 1}, {1, 2, k}});
            auto q3 = ext_quiver_of(heart(3, d, k));
            CHECK(q3.multiplicity(0, 0, 1) == 1);
            CHECK(q3.multiplicity(1, 0, d + 1) == 1);
            CHECK(q3.multiplicity(1, 2, k) == 1);

            // S2^(3); S0[d+1], S1[d+k]
            auto g5 = gentle_of(heart(5, d, k));
            CHECK(skeleton(g5) == std::multiset<Arrow3>{{0, 0, 1}, {1, 0, d + 1}, {2, 1, k}});
        }
}

TEST_CASE("rank-1 heart row with the straight-through zero relation") {
    for (int k = 1; k <= 4; ++k)
        for (int d = 0; d < k; ++d) {
            auto x = heart(8, d, k);  // S2^(3); S0[d+1], S2[d-k]
            auto g = gentle_of(x);
            CHECK(skeleton(g) == std::multiset<Arrow3>{{0, 0, 1}, {1, 0, d + 1}, {0, 2, k - d}});
            REQUIRE_FALSE(g.forbidden.empty());
            for (auto [a, b] : g.forbidden) CHECK(g.arrows[a].tgt == 0);
            auto q = ext_quiver_of(x);
            // through the loop: (d+1) + (k-d) + 1; straight through vanishes
            CHECK(q.multiplicity(1, 2, k + 2) == 1);
            CHECK(q.multiplicity(1, 2, k + 1) == 0);
            CHECK(associated_quiver(g) == q);
        }
}

TEST_CASE("rank-1 heart row with a chain into the tube member") {
    for (int k = 1; k <= 3; ++k)
        for (int d = k; d <= k + 2; ++d) {
            auto g = gentle_of(heart(7, d, k));  // S2^(3); S0[d+1], S1^(2)[d+1-k]
            CHECK(skeleton(g) == std::multiset<Arrow3>{{0, 0, 1}, {1, 2, k}, {2, 0, d + 1 - k}});
        }
}

TEST_CASE("seven-simple example: rank-3 cycle with four tree vertices") {
    auto x = classified(Smc(7, fixtures::rank7_example()));
    auto g = gentle_of(x);
    CHECK(g.rank == 3);
    std::set<std::string> cyc;
    for (int v : g.cycle) cyc.insert(g.labels[v]);
    CHECK(cyc == std::set<std::string>{"S1^(2)", "S5^(4)", "S6"});
    CHECK(g.n - g.rank == 4);
    CHECK(isomorphic(associated_quiver(g), ext_quiver_of(x)));
}

TEST_CASE("associated quiver composes consecutive same-colored arrows") {
    GentleOneCycleQuiver g;
    g.n = 3;
    g.labels = {"a", "b", "c"};
    g.arrows = {{0, 1, 1}, {1, 0, 1}, {2, 0, 3}};
    g.next = {-1, -1, 0};  // 2 -> 0 -> 1 composes
    detail::finish(g);
    REQUIRE(validate(g).empty());
    auto q = associated_quiver(g);
    CHECK(q.multiplicity(2, 1, 4) == 1);
    CHECK(q.arrow_count() == 4);

    g.next = {-1, -1, -1};
    detail::finish(g);
    CHECK(associated_quiver(g).arrow_count() == 3);
}

TEST_CASE("pure cycle is its own associated quiver") {
    auto g = gentle_of(Smc::standard(4));
    auto q = associated_quiver(g);
    CHECK(q.arrow_count() == 4);
    for (const auto& a : g.arrows) CHECK(q.multiplicity(a.src, a.tgt, a.degree) == 1);
}

TEST_CASE("gentle coloring: consecutive cycle and tree arrows alternate") {
    for (const auto& x : enumerate(3, 2, 3)) {
        auto g = gentle_of(x);
        CHECK(validate(g).empty());
        if (g.rank == 1) {
            for (const auto& a : g.arrows) CHECK(a.color != Color::curly);
        }
        for (std::size_t a = 0; a < g.arrows.size(); ++a)
            if (g.next[a] >= 0) CHECK(g.arrows[a].color == g.arrows[g.next[a]].color);
    }
}

TEST_CASE("associated quiver of gentle_of recovers the Ext-quiver") {
    for (int p = 1; p <= 4; ++p)
        for (const auto& x : enumerate(p, 2, 3)) {
            INFO(to_string(x));
            CHECK(associated_quiver(gentle_of(x)) == ext_quiver_of(x));
        }
}

TEST_CASE("rank-1 vertex with deep tree in-arrow: degrees shift") {
    for (int d = 1; d <= 3; ++d) {
        auto x = heart(3, d, 1);  // tree arrow into the loop vertex has degree d+1 > 1
        auto g = gentle_of(x);
        CHECK(mutation_case(g, 0) == "cycle_vertex_rank1_delta_gt1");
        auto h = quiver_mutate(g, 0, Direction::left);
        CHECK(skeleton(h) == std::multiset<Arrow3>{{0, 0, 1}, {1, 0, d}, {1, 2, 1}});
        CHECK(associated_quiver(h) == ext_quiver_of(mutate_left(x, 0)));
    }
}

TEST_CASE("rank-1 vertex with degree-one tree in-arrow") {
    auto x = heart(3, 0, 1);
    auto g = gentle_of(x);
    CHECK(mutation_case(g, 0) == "cycle_vertex_rank1_delta1");
    CHECK(associated_quiver(quiver_mutate(g, 0, Direction::left)) == ext_quiver_of(mutate_left(x, 0)));
}

TEST_CASE("pure cycle mutation matches SMC mutation") {
    for (int p = 2; p <= 5; ++p) {
        auto x = Smc::standard(p);
        auto g = gentle_of(x);
        for (int i = 0; i < p; ++i) {
            CHECK(mutation_case(g, i) == "cycle_vertex");
            for (auto d : {Direction::left, Direction::right})
                CHECK(associated_quiver(quiver_mutate(g, i, d)) == ext_quiver_of(mutate(x, i, d)));
        }
    }
}

TEST_CASE("tree vertex mutation shifts degrees") {
    // S2^(2), S0, S1[d+1]: the tree vertex has no degree-one in-arrow
    for (int d = 1; d <= 3; ++d) {
        auto x = heart(1, d, 1);
        auto g = gentle_of(x);
        CHECK(mutation_case(g, 2) == "tree_vertex");
        auto h = quiver_mutate(g, 2, Direction::left);
        CHECK(skeleton(h) == std::multiset<Arrow3>{{0, 1, 1}, {1, 0, 1}, {2, 0, d + 2}});
        CHECK(associated_quiver(h) == ext_quiver_of(mutate_left(x, 2)));
    }
}

TEST_CASE("quiver mutation followed by its inverse restores the input") {
    for (int p = 2; p <= 4; ++p)
        for (const auto& x : enumerate(p, 2, 2)) {
            auto g = gentle_of(x);
            for (int i = 0; i < p; ++i)
                for (auto d : {Direction::left, Direction::right}) {
                    auto h = quiver_mutate(quiver_mutate(g, i, d), i, opposite(d));
                    CHECK(skeleton(h) == skeleton(g));
                    CHECK(associated_quiver(h) == associated_quiver(g));
                }
        }
}

TEST_CASE("quiver mutation rejects out-of-range vertices") {
    auto g = gentle_of(Smc::standard(3));
    CHECK_THROWS_AS(quiver_mutate(g, 3, Direction::left), InvalidInput);
    CHECK_THROWS_AS(quiver_mutate(g, -1, Direction::right), InvalidInput);
}

TEST_CASE("quiver mutation reports degenerate configurations with their case") {
    // rank-2 cycle with a degree-one tree arrow into a cycle vertex and no compositions
    GentleOneCycleQuiver g;
    g.n = 3;
    g.labels = {"a", "b", "c"};
    g.arrows = {{0, 1, 1}, {1, 0, 1}, {2, 0, 1}};
    g.next = {-1, -1, -1};
    detail::finish(g);
    REQUIRE(validate(g).empty());
    try {
        quiver_mutate(g, 0, Direction::left);
        FAIL("expected Unsupported");
    } catch (const Unsupported& e) {
        CHECK(e.case_label == "cycle_vertex");
    }
}

TEST_CASE("validate flags broken quivers") {
    GentleOneCycleQuiver g;
    g.n = 2;
    g.arrows = {{0, 1, 1}, {1, 0, 2}};
    g.next = {-1, -1};
    detail::finish(g);
    CHECK_FALSE(validate(g).empty());  // cycle arrow of degree 2

    g.arrows = {{0, 1, 1}};
    g.next = {-1};
    CHECK_FALSE(validate(g).empty());  // arrow count
}

TEST_CASE("isomorphism finds relabellings and rejects degree changes") {
    auto q = quiver(3, {{0, 1, 1}, {1, 0, 1}, {2, 0, 3}});
    auto r = quiver(3, {{2, 1, 1}, {1, 2, 1}, {0, 2, 3}});
    auto perm = isomorphism(q, r);
    REQUIRE(perm);
    CHECK((*perm)[2] == 0);
    CHECK_FALSE(isomorphic(q, quiver(3, {{0, 1, 1}, {1, 0, 1}, {2, 0, 2}})));
    CHECK_FALSE(isomorphic(q, quiver(3, {{0, 1, 1}, {1, 0, 1}, {0, 2, 3}})));
    CHECK_FALSE(isomorphic(q, quiver(4, {{0, 1, 1}, {1, 0, 1}, {2, 0, 3}})));
}

TEST_CASE("compatibility holds on the standard collection") {
    for (int p = 1; p <= 4; ++p)
        for (int i = 0; i < p; ++i) {
            auto v = check_compatibility(Smc::standard(p), i);
            CHECK(v.ok());
            CHECK(v.exact);
        }
}

TEST_CASE("compatibility holds on every heart row instance") {
    for (int row = 0; row < fixtures::kHeartRows; ++row)
        for (int d = -3; d <= 3; ++d)
            for (int k = 1; k <= 3; ++k) {
                auto inst = fixtures::heart_row_instance(row, d, k);
                if (inst.empty()) continue;
                auto x = classified(Smc(3, inst));
                for (int i = 0; i < 3; ++i)
                    for (auto dir : {Direction::left, Direction::right}) {
                        auto v = check_compatibility(x, i, dir);
                        INFO(v.report);
                        CHECK(v.ok());
                    }
            }
}

TEST_CASE("compatibility failure carries a report with both quivers") {
    auto v = check_compatibility(Smc::standard(3), 1);
    CHECK(v.report.empty());
    CHECK(v.smc_side == v.quiver_side);
}

TEST_CASE("local mutation patterns: more-cycles loop shape maps to its image") {
    // S0[-1], S0^(3), S1[a]: tube member with a loop over S, plus B
    int seen = 0;
    for (const auto& x : enumerate(3, 3, 4)) {
        for (int i = 0; i < 3; ++i) {
            auto v = check_compatibility(x, i);
            for (const auto& m : v.patterns) {
                INFO(m.pattern << " " << to_string(m.expected) << " vs " << to_string(m.actual));
                CHECK(m.image_matches);
                if (m.pattern == "more_cycles_2") ++seen;
            }
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("local mutation patterns: every pattern is exercised at p = 4") {
    std::map<std::string, int> hits;
    for (const auto& x : enumerate(4, 2, 3))
        for (int i = 0; i < 4; ++i)
            for (const auto& m : check_compatibility(x, i).patterns) {
                CHECK(m.image_matches);
                ++hits[m.pattern];
            }
    for (const auto& pat : local_patterns()) {
        INFO(pat.name);
        CHECK(hits[pat.name] > 0);
    }
}

TEST_CASE("DOT export of a graded quiver labels arrows with degrees") {
    auto dot = to_dot(ext_quiver_of(Smc::standard(2)));
    CHECK(dot == "digraph Q {\n  v0 [label=\"S0\"];\n  v1 [label=\"S1\"];\n"
                 "  v0 -> v1 [label=\"1\"];\n  v1 -> v0 [label=\"1\"];\n}\n");
}
