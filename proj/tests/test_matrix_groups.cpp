#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "sl2m/matrix_groups.hpp"
#include "sl2m/parse.hpp"
#include "sl2m/verify.hpp"

using namespace sl2m;

namespace {

const std::vector<std::string> kXY{"x", "y"};

Word wparse(const std::string& text) { return parse_word(text, kXY); }

// All determinant-1 matrices mod r by brute force, as sorted keys.
std::vector<std::uint64_t> all_det1_keys(std::uint64_t r) {
    std::vector<std::uint64_t> keys;
    for (std::uint64_t a = 0; a < r; ++a)
        for (std::uint64_t b = 0; b < r; ++b)
            for (std::uint64_t c = 0; c < r; ++c)
                for (std::uint64_t d = 0; d < r; ++d)
                    if ((a * d % r + r - b * c % r) % r == 1 % r)
                        keys.push_back(residue_key({a, b, c, d, r}));
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

TEST_CASE("word evaluation under the standard assignment") {
    for (long m : {1L, 2L, 5L, 11L}) {
        std::vector<Mat2M> phi = phi_assignment(m);
        CHECK(evaluate(wparse("x"), phi) == mat_A(m));
        CHECK(evaluate(Word(), phi) == mat2_identity(m));

        Word w1 = Word::syllable(0, m) * wparse("y") * Word::syllable(0, m);
        Mat2M expected1{MFraction(0), MFraction::canonical(Int(-1), 1, m), MFraction(m),
                        MFraction(0), m};
        CHECK(evaluate(w1, phi) == expected1);

        Word w2 = Word::syllable(1, m) * wparse("x") * Word::syllable(1, m);
        Mat2M expected2{MFraction(0), MFraction(-1), MFraction(1), MFraction(0), m};
        CHECK(evaluate(w2, phi) == expected2);
    }
    CHECK_THROWS_AS(evaluate(Word::syllable(2, 1), phi_assignment(2)), std::out_of_range);
}

TEST_CASE("evaluation is a homomorphism on random words") {
    std::mt19937_64 rng(321);
    std::vector<Mat2M> phi = phi_assignment(2);
    for (int i = 0; i < 200; ++i) {
        Word w = random_reduced_word(rng, 15);
        Word v = random_reduced_word(rng, 15);
        CHECK(evaluate(w * v, phi) == mat2_mul(evaluate(w, phi), evaluate(v, phi)));
        CHECK(evaluate(inverse(w), phi) == mat2_inv(evaluate(w, phi)));
    }
}

TEST_CASE("relators hold under the standard assignment for m = 1..200") {
    for (long m = 1; m <= 200; ++m) {
        CAPTURE(m);
        CHECK(check_relations(make_Hm(m), phi_assignment(m)).pass);
    }
}

TEST_CASE("three-generator relators hold under a->A, b->B, u->U_2") {
    RelationReport rep =
        check_relations(make_serre_behr_mennicke(), {mat_A(2), mat_B(2), mat_Um(2)});
    CHECK(rep.pass);
}

TEST_CASE("a failing assignment is reported with the offending image") {
    RelationReport rep = check_relations(make_Hm(2), {mat_A(2), mat_A(2)});
    CHECK(!rep.pass);
    REQUIRE(!rep.failures.empty());
    CHECK(rep.failures[0].relator_index == 0);
    CHECK(rep.failures[0].image == mat2_str(mat_A(2)));
}

TEST_CASE("identity suite passes for sample m") {
    for (long m : {1L, 2L, 50L}) {
        LemmaReport rep = verify_lemma_identities(m);
        CAPTURE(m);
        CHECK(rep.pass);
        CHECK(rep.checks.size() == 5);
    }
    // m = 1 specialization: A^-1 Q^-1 A^-1 = (0, 1; -1, 0) = B.
    Mat2M lhs = mat2_mul(mat2_mul(mat2_inv(mat_A(1)), mat2_inv(mat_Qm(1))), mat2_inv(mat_A(1)));
    CHECK(lhs == mat_B(1));
}

TEST_CASE("breadth-first closure of SL2(Z/3Z)") {
    GroupEnumeration g = bfs_group_order(reduce_assignment(phi_assignment(2), 3), 3);
    CHECK(g.order() == 24);
    CHECK(g.keys == all_det1_keys(3));  // every determinant-1 matrix is reached
    CHECK(g.contains(residue_make(3, 2, 0, 0, 2)));
    CHECK(!g.contains(residue_make(3, 2, 0, 0, 1)));  // det 2
}

TEST_CASE("breadth-first closure mod 4 and mod 2") {
    GroupEnumeration g4 =
        bfs_group_order({residue_make(4, 1, 0, 1, 1), residue_make(4, 1, 1, 0, 1)}, 4);
    CHECK(g4.order() == 48);
    CHECK(g4.keys == all_det1_keys(4));

    GroupEnumeration g2 = bfs_group_order({residue_identity(2)}, 2);
    CHECK(g2.order() == 1);
}

TEST_CASE("closure is generator-order independent") {
    std::vector<ResidueMat2> gens = reduce_assignment(phi_assignment(2), 5);
    GroupEnumeration a = bfs_group_order(gens, 5);
    std::reverse(gens.begin(), gens.end());
    GroupEnumeration b = bfs_group_order(gens, 5);
    CHECK(a.keys == b.keys);
}

TEST_CASE("bfs rejects bad generators and runaway closures") {
    CHECK_THROWS_AS(bfs_group_order({residue_make(5, 2, 0, 0, 1)}, 5), std::domain_error);
    CHECK_THROWS_AS(bfs_group_order(reduce_assignment(phi_assignment(2), 7), 7, 100),
                    std::length_error);
}

TEST_CASE("determinant-1 count: iteration and prime-power factorization") {
    CHECK(sl2_det1_count(2) == 6);
    CHECK(sl2_det1_count(3) == 24);
    CHECK(sl2_det1_count(4) == 48);
    CHECK(sl2_det1_count(9) == 648);
    CHECK(sl2_det1_count(15) == 2880);
    // Against the BFS closure for the odd moduli of the fixture family.
    for (std::uint64_t r : {3ULL, 5ULL, 7ULL, 9ULL, 11ULL, 13ULL, 15ULL}) {
        CAPTURE(r);
        GroupEnumeration g =
            bfs_group_order(reduce_assignment(phi_assignment(2), r), r);
        CHECK(g.order() == sl2_det1_count(r));
    }
}

TEST_CASE("rewriting substitution maps bu to y^-1 x^-2 y^-1") {
    Substitution s = two_generator_rewriting();
    Word b = Word::syllable(1, 1);
    Word u = Word::syllable(2, 1);
    CHECK(substitute(b * u, s) == wparse("y^-1*x^-2*y^-1"));
    // The images evaluate to B and U_2 exactly.
    std::vector<Mat2M> phi = phi_assignment(2);
    CHECK(evaluate(s.image(1), phi) == mat_B(2));
    CHECK(evaluate(s.image(2), phi) == mat_Um(2));
}

TEST_CASE("residue campaign") {
    ResidueCampaignReport rep =
        residue_campaign(make_Hm(2), phi_assignment(2), {3, 5, 7, 11, 13});
    CHECK(rep.pass);
    // Rewritten three-generator relators appear once per modulus plus one
    // exact check each, after the per-modulus relation checks and the exact
    // two-generator check.
    CHECK(rep.checks.size() == 5 + 1 + 5 * 6);

    CHECK_THROWS_AS(residue_campaign(make_Hm(2), phi_assignment(2), {1}), std::domain_error);
    CHECK_THROWS_AS(residue_campaign(make_Hm(2), phi_assignment(2), {4}), std::domain_error);
}

TEST_CASE("rewritten three-generator relators are trivial exactly") {
    Presentation sbm = make_serre_behr_mennicke();
    Substitution s = two_generator_rewriting();
    std::vector<Mat2M> phi = phi_assignment(2);
    for (const auto& rel : sbm.relators) {
        Word image = substitute(rel, s);
        CHECK(evaluate(image, phi) == mat2_identity(2));
    }
}
