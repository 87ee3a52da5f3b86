#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "sl2m/matrix_groups.hpp"
#include "sl2m/parse.hpp"
#include "sl2m/todd_coxeter.hpp"

using namespace sl2m;

namespace {

// Brute-force group order oracle: closure of permutations under composition.
using Perm = std::vector<int>;

Perm compose(const Perm& f, const Perm& g) {  // (f*g)(i) = f(g(i))
    Perm out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = f[static_cast<std::size_t>(g[i])];
    return out;
}

std::size_t perm_group_order(const std::vector<Perm>& gens) {
    std::set<Perm> seen;
    std::vector<Perm> frontier;
    Perm id(gens[0].size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        Perm cur = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            Perm next = compose(g, cur);
            if (seen.insert(next).second) frontier.push_back(next);
        }
    }
    return seen.size();
}

Presentation pres(const std::string& text) { return parse_presentation(text); }

struct Fixture {
    std::string name;
    Presentation p;
    std::size_t order;  // established by a brute-force oracle below
};

std::vector<Fixture> classical_corpus() {
    std::vector<Fixture> out;
    // Cyclic of order 5; oracle: permutation closure of a 5-cycle.
    out.push_back({"cyclic5", pres("gens: x\nrel: x^5\n"),
                   perm_group_order({{1, 2, 3, 4, 0}})});
    // Symmetric group on 3 points; oracle: closure of (01) and (012).
    out.push_back({"sym3", pres("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^2\n"),
                   perm_group_order({{1, 0, 2}, {1, 2, 0}})});
    // Quaternion group; oracle: closure of i, j inside SL2(Z/3).
    out.push_back({"quaternion8",
                   pres("gens: x y\nrel: x^4\nrel: x^2*y^-2\nrel: y^-1*x*y*x\n"),
                   bfs_group_order({residue_make(3, 0, -1, 1, 0), residue_make(3, 1, 1, 1, -1)}, 3)
                       .order()});
    // Alternating group on 4 points; oracle: closure of (01)(23) and (012).
    out.push_back({"alt4", pres("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^3\n"),
                   perm_group_order({{1, 0, 3, 2}, {1, 2, 0, 3}})});
    // Binary tetrahedral group: a^3 = b^3 = (ab)^2; oracle: closure of
    // -(1,1;0,1) and -(1,0;1,1) inside SL2(Z/3), which is all of it.
    out.push_back({"sl2_3",
                   pres("gens: a b\nrel: a^3 = b^3\nrel: b^3 = (a*b)^2\n"),
                   bfs_group_order({residue_make(3, -1, -1, 0, -1), residue_make(3, -1, 0, -1, -1)},
                                   3)
                       .order()});
    return out;
}

// Every relator must act trivially on every coset, and the action must be
// transitive (for the trivial subgroup, a regular action).
void check_action(const CosetTable& t, const Presentation& p) {
    for (std::size_t c = 0; c < t.total(); ++c) {
        for (const auto& r : p.relators)
            CHECK(t.trace_word(static_cast<CosetTable::Coset>(c), r) ==
                  static_cast<CosetTable::Coset>(c));
        for (int x = 0; x < t.ncols(); ++x)
            CHECK(t.get(static_cast<CosetTable::Coset>(c), x) != CosetTable::kUndefined);
    }
    // Transitivity: breadth-first reachability from coset 0.
    std::vector<bool> reached(t.total(), false);
    std::vector<CosetTable::Coset> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        auto c = stack.back();
        stack.pop_back();
        for (int x = 0; x < t.ncols(); ++x) {
            auto d = t.get(c, x);
            if (!reached[static_cast<std::size_t>(d)]) {
                reached[static_cast<std::size_t>(d)] = true;
                ++count;
                stack.push_back(d);
            }
        }
    }
    CHECK(count == t.total());
}

}  // namespace

TEST_CASE("cyclic group over the trivial subgroup") {
    EnumOutcome out = todd_coxeter(pres("gens: x\nrel: x^5\n"), {});
    REQUIRE(out.status == EnumStatus::Completed);
    CHECK(*out.index == 5);
    CHECK(out.table->inverse_consistent());
}

TEST_CASE("alternating group over a cyclic subgroup") {
    Presentation a4 = pres("gens: x y\nrel: x^2\nrel: y^3\nrel: (x*y)^3\n");
    std::size_t group_order = perm_group_order({{1, 0, 3, 2}, {1, 2, 0, 3}});
    CHECK(group_order == 12);
    EnumOutcome out = todd_coxeter(a4, {parse_word("x", a4.generators)});
    REQUIRE(out.status == EnumStatus::Completed);
    CHECK(*out.index == 6);  // order 12 over the 2-element subgroup <x>
    // Subgroup generator fixes coset 0.
    CHECK(out.table->trace_word(0, parse_word("x", a4.generators)) == 0);

    EnumOutcome felsch = todd_coxeter(a4, {parse_word("x", a4.generators)}, {}, Strategy::Felsch);
    REQUIRE(felsch.status == EnumStatus::Completed);
    CHECK(*felsch.index == 6);
}

TEST_CASE("classical corpus: both strategies match the brute-force oracles") {
    for (const auto& f : classical_corpus()) {
        CAPTURE(f.name);
        EnumLimits limits;
        limits.debug_checks = true;
        EnumOutcome hlt = todd_coxeter(f.p, {}, limits, Strategy::HLT);
        EnumOutcome felsch = todd_coxeter(f.p, {}, limits, Strategy::Felsch);
        REQUIRE(hlt.status == EnumStatus::Completed);
        REQUIRE(felsch.status == EnumStatus::Completed);
        CHECK(*hlt.index == f.order);
        CHECK(*felsch.index == f.order);
        check_action(*hlt.table, f.p);
        check_action(*felsch.table, f.p);
    }
}

TEST_CASE("expected corpus orders") {
    auto corpus = classical_corpus();
    CHECK(corpus[0].order == 5);
    CHECK(corpus[1].order == 6);
    CHECK(corpus[2].order == 8);
    CHECK(corpus[3].order == 12);
    CHECK(corpus[4].order == 24);
}

TEST_CASE("odd-modulus presentation of SL2(Z/3Z)") {
    EnumOutcome out = todd_coxeter(make_corollary(3), {});
    REQUIRE(out.status == EnumStatus::Completed);
    std::uint64_t bfs = bfs_group_order(reduce_assignment(phi_assignment(2), 3), 3).order();
    CHECK(*out.index == bfs);
    CHECK(*out.index == 24);
}

TEST_CASE("strategies agree on the odd-modulus family") {
    for (long r : {3L, 5L, 7L}) {
        CAPTURE(r);
        EnumOutcome hlt = todd_coxeter(make_corollary(r), {}, {}, Strategy::HLT);
        EnumOutcome felsch = todd_coxeter(make_corollary(r), {}, {}, Strategy::Felsch);
        REQUIRE(hlt.status == EnumStatus::Completed);
        REQUIRE(felsch.status == EnumStatus::Completed);
        CHECK(*hlt.index == *felsch.index);
    }
}

TEST_CASE("determinism: identical inputs give identical tables") {
    Presentation p = make_corollary(5);
    EnumOutcome a = todd_coxeter(p, {});
    EnumOutcome b = todd_coxeter(p, {});
    REQUIRE(a.status == EnumStatus::Completed);
    REQUIRE(b.status == EnumStatus::Completed);
    REQUIRE(a.table->total() == b.table->total());
    for (std::size_t c = 0; c < a.table->total(); ++c)
        for (int x = 0; x < a.table->ncols(); ++x)
            CHECK(a.table->get(static_cast<CosetTable::Coset>(c), x) ==
                  b.table->get(static_cast<CosetTable::Coset>(c), x));
    CHECK(a.stats.cosets_defined == b.stats.cosets_defined);
    CHECK(a.stats.coincidences == b.stats.coincidences);
}

TEST_CASE("limit exceeded is an outcome, not an index") {
    EnumLimits limits;
    limits.max_total = 5;
    limits.max_live = 5;
    EnumOutcome out = todd_coxeter(make_corollary(3), {}, limits);
    CHECK(out.status == EnumStatus::LimitExceeded);
    CHECK(!out.index.has_value());
    CHECK(out.stats.cosets_defined <= 5);
}

TEST_CASE("infinite enumeration is guarded by limits") {
    // The two-generator group for m = 2 is infinite; the enumeration must hit
    // the limit rather than return.
    EnumLimits limits;
    limits.max_total = 2000;
    limits.max_live = 2000;
    EnumOutcome out = todd_coxeter(make_Hm(2), {}, limits);
    CHECK(out.status == EnumStatus::LimitExceeded);
}

TEST_CASE("coincidence merging keeps the table consistent") {
    // Two generators, no relations: build a few cosets by hand, then merge.
    CosetTable t(2);
    auto c1 = t.define(0, CosetTable::col(0, false));
    auto c2 = t.define(0, CosetTable::col(1, false));
    auto c3 = t.define(c1, CosetTable::col(1, false));
    t.define(c2, CosetTable::col(0, false));
    CHECK(t.live() == 5);
    CHECK(t.inverse_consistent());
    t.coincide(c1, c2);
    CHECK(t.live() < 5);
    CHECK(t.inverse_consistent());
    // The merged coset keeps both outgoing edges.
    auto rep = t.rep(c1);
    CHECK(t.rep(c2) == rep);
    CHECK(t.get(rep, CosetTable::col(1, false)) != CosetTable::kUndefined);
    CHECK(t.get(rep, CosetTable::col(0, false)) != CosetTable::kUndefined);
    CHECK(t.rep(t.get(rep, CosetTable::col(1, false))) == t.rep(c3));
}

TEST_CASE("subgroup words over unknown generators are rejected") {
    Presentation p = pres("gens: x\nrel: x^5\n");
    CHECK_THROWS_AS(todd_coxeter(p, {Word::syllable(3, 1)}), std::invalid_argument);
}

TEST_CASE("relator order affects statistics only, never the index") {
    Presentation p = make_corollary(5);
    EnumOutcome base = todd_coxeter(p, {});
    std::vector<std::size_t> perm_order{3, 1, 0, 2};
    Presentation shuffled = p;
    shuffled.relators.clear();
    for (std::size_t i : perm_order) shuffled.relators.push_back(p.relators[i]);
    EnumOutcome out = todd_coxeter(shuffled, {});
    REQUIRE(base.status == EnumStatus::Completed);
    REQUIRE(out.status == EnumStatus::Completed);
    CHECK(*out.index == *base.index);
}

TEST_CASE("a zero time budget is reported as a limit outcome") {
    EnumLimits limits;
    limits.time_budget_seconds = 0.0;
    EnumOutcome out = todd_coxeter(make_corollary(15), {}, limits);
    CHECK(out.status == EnumStatus::LimitExceeded);
    CHECK(!out.index.has_value());
}
