#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2m/mat2.hpp"
#include "sl2m/presentation.hpp"
#include "sl2m/word.hpp"

namespace sl2m {

// The matrices of the surjection x -> A, y -> Q_m and the classical
// three-generator set {A, B, U_m} of SL2(Z[1/m]).
Mat2M mat_A(long m);
Mat2M mat_Qm(long m);
Mat2M mat_B(long m);
Mat2M mat_Um(long m);

// Generator images for evaluating words over {x, y}: {A, Q_m}.
std::vector<Mat2M> phi_assignment(long m);

// Homomorphic evaluation; the empty word maps to the identity. Throws
// std::out_of_range when a generator has no image.
Mat2M evaluate(const Word& w, const std::vector<Mat2M>& images);
ResidueMat2 evaluate(const Word& w, const std::vector<ResidueMat2>& images);

std::vector<ResidueMat2> reduce_assignment(const std::vector<Mat2M>& images, std::uint64_t r);

struct RelationFailure {
    int relator_index;
    std::string relator;
    std::string image;
};

struct RelationReport {
    bool pass = true;
    std::vector<RelationFailure> failures;
};

// Evaluates every relator of p; passes iff all are the identity.
RelationReport check_relations(const Presentation& p, const std::vector<Mat2M>& images);
RelationReport check_relations(const Presentation& p, const std::vector<ResidueMat2>& images);

struct IdentityCheck {
    std::string name;
    bool pass;
};

struct LemmaReport {
    long m;
    std::vector<IdentityCheck> checks;
    bool pass = true;
};

// The five identity groups from the surjectivity lemma, in exact arithmetic:
// (1) A^m Q A^m = Q A^m Q = (0, -1/m; m, 0); (2) Q^m A Q^m = A Q^m A =
// (0, -1; 1, 0); (3) A^2 Q^m = (1, -1; 2, -1) of order exactly 4;
// (4) B = A^-1 Q^-m A^-1; (5) U_m = B^-1 Q^-1 A^-m Q^-1.
LemmaReport verify_lemma_identities(long m);

// BFS closure of a generating set inside SL2(Z/rZ).
struct GroupEnumeration {
    std::uint64_t modulus = 0;
    std::vector<ResidueMat2> elements;   // in BFS discovery order
    std::vector<std::uint64_t> keys;     // sorted element keys
    std::vector<ResidueMat2> generators;

    std::size_t order() const { return elements.size(); }
    bool contains(const ResidueMat2& x) const;
};

// Closure under left-multiplication by the generators and their inverses,
// starting from the identity. Generators must be unimodular mod r. The cap
// guards runaway inputs; exceeding it throws std::length_error.
GroupEnumeration bfs_group_order(const std::vector<ResidueMat2>& generators, std::uint64_t r,
                                 std::size_t cap = 10'000'000);

// |SL2(Z/rZ)| by exhaustive determinant counting: direct iteration over all
// 4-tuples for r <= 7, and the product over prime-power factors (each counted
// by iteration) for larger r. Independent of the BFS path.
std::uint64_t sl2_det1_count(std::uint64_t r);

// The substitution of the two-generator rewriting: a -> x, b -> x^-1 y^-2 x^-1,
// u -> x y^2 x y^-1 x^-2 y^-1, mapping words over {a, b, u} to words over {x, y}.
Substitution two_generator_rewriting();

struct ResidueCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct ResidueCampaignReport {
    bool pass = true;
    std::vector<ResidueCheck> checks;
};

// Necessary-condition tester for the two-generator presentation of SL2(Z[1/2]):
// checks p's relators under the given images in every residue quotient, that
// the relators of H_2 hold exactly under {A, Q_2}, and that the three-generator
// presentation's relators, rewritten through two_generator_rewriting(), are
// trivial exactly over Z[1/2] and in every residue quotient. Moduli must be
// >= 2 and coprime to m.
ResidueCampaignReport residue_campaign(const Presentation& p, const std::vector<Mat2M>& images,
                                       const std::vector<std::uint64_t>& moduli);

}  // namespace sl2m
