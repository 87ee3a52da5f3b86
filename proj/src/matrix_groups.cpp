#include "sl2m/matrix_groups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "sl2m/parse.hpp"

namespace sl2m {

Mat2M mat_A(long m) {
    return {MFraction(1), MFraction(0), MFraction(1), MFraction(1), m};
}

Mat2M mat_Qm(long m) {
    return {MFraction(1), MFraction::canonical(Int(-1), 1, m), MFraction(0), MFraction(1), m};
}

Mat2M mat_B(long m) {
    return {MFraction(0), MFraction(1), MFraction(-1), MFraction(0), m};
}

Mat2M mat_Um(long m) {
    return {MFraction(m), MFraction(0), MFraction(0), MFraction::canonical(Int(1), 1, m), m};
}

std::vector<Mat2M> phi_assignment(long m) {
    return {mat_A(m), mat_Qm(m)};
}

namespace {

template <typename M, typename Pow>
M evaluate_with(const Word& w, const std::vector<M>& images, const M& id, Pow pow_fn) {
    M acc = id;
    for (const auto& s : w.syllables()) {
        if (s.gen < 0 || static_cast<std::size_t>(s.gen) >= images.size())
            throw std::out_of_range("no image for generator");
        acc = [&] {
            if constexpr (std::is_same_v<M, Mat2M>)
                return mat2_mul(acc, pow_fn(images[static_cast<std::size_t>(s.gen)], s.exp));
            else
                return residue_mul(acc, pow_fn(images[static_cast<std::size_t>(s.gen)], s.exp));
        }();
    }
    return acc;
}

}  // namespace

Mat2M evaluate(const Word& w, const std::vector<Mat2M>& images) {
    if (images.empty()) throw std::out_of_range("empty assignment");
    return evaluate_with(w, images, mat2_identity(images[0].m), mat2_pow);
}

ResidueMat2 evaluate(const Word& w, const std::vector<ResidueMat2>& images) {
    if (images.empty()) throw std::out_of_range("empty assignment");
    return evaluate_with(w, images, residue_identity(images[0].r), residue_pow);
}

std::vector<ResidueMat2> reduce_assignment(const std::vector<Mat2M>& images, std::uint64_t r) {
    std::vector<ResidueMat2> out;
    out.reserve(images.size());
    for (const auto& m : images) out.push_back(reduce_mod_r(m, r));
    return out;
}

namespace {

template <typename M>
RelationReport check_relations_impl(const Presentation& p, const std::vector<M>& images,
                                    const M& id) {
    RelationReport report;
    for (std::size_t j = 0; j < p.relators.size(); ++j) {
        M value = evaluate(p.relators[j], images);
        if (value == id) continue;
        report.pass = false;
        std::string image_str;
        if constexpr (std::is_same_v<M, Mat2M>)
            image_str = mat2_str(value);
        else
            image_str = residue_str(value);
        report.failures.push_back({static_cast<int>(j),
                                   print_word(p.relators[j], p.generators), image_str});
    }
    return report;
}

}  // namespace

RelationReport check_relations(const Presentation& p, const std::vector<Mat2M>& images) {
    if (images.size() < p.generators.size()) throw std::out_of_range("assignment not total");
    return check_relations_impl(p, images, mat2_identity(images.empty() ? 1 : images[0].m));
}

RelationReport check_relations(const Presentation& p, const std::vector<ResidueMat2>& images) {
    if (images.size() < p.generators.size()) throw std::out_of_range("assignment not total");
    return check_relations_impl(p, images, residue_identity(images[0].r));
}

LemmaReport verify_lemma_identities(long m) {
    if (m < 1) throw std::domain_error("m must be >= 1");
    LemmaReport report;
    report.m = m;
    Mat2M A = mat_A(m), Q = mat_Qm(m), B = mat_B(m), U = mat_Um(m);
    Mat2M Am = mat2_pow(A, m), Qm = mat2_pow(Q, m);
    Mat2M id = mat2_identity(m);

    Mat2M anti_lower{MFraction(0), MFraction::canonical(Int(-1), 1, m), MFraction(m),
                     MFraction(0), m};
    Mat2M anti_unit{MFraction(0), MFraction(-1), MFraction(1), MFraction(0), m};
    Mat2M order4{MFraction(1), MFraction(-1), MFraction(2), MFraction(-1), m};

    auto add = [&](const std::string& name, bool pass) {
        report.checks.push_back({name, pass});
        report.pass = report.pass && pass;
    };

    add("A^m Q A^m = Q A^m Q = (0, -1/m; m, 0)",
        mat2_mul(mat2_mul(Am, Q), Am) == anti_lower &&
            mat2_mul(mat2_mul(Q, Am), Q) == anti_lower);
    add("Q^m A Q^m = A Q^m A = (0, -1; 1, 0)",
        mat2_mul(mat2_mul(Qm, A), Qm) == anti_unit &&
            mat2_mul(mat2_mul(A, Qm), A) == anti_unit);
    Mat2M a2qm = mat2_mul(mat2_pow(A, 2), Qm);
    add("A^2 Q^m = (1, -1; 2, -1) of order exactly 4",
        a2qm == order4 && mat2_pow(a2qm, 4) == id && mat2_pow(a2qm, 2) != id);
    add("B = A^-1 Q^-m A^-1",
        B == mat2_mul(mat2_mul(mat2_inv(A), mat2_pow(Q, -m)), mat2_inv(A)));
    add("U = B^-1 Q^-1 A^-m Q^-1",
        U == mat2_mul(mat2_mul(mat2_mul(mat2_inv(B), mat2_inv(Q)), mat2_pow(A, -m)),
                      mat2_inv(Q)));
    return report;
}

bool GroupEnumeration::contains(const ResidueMat2& x) const {
    return std::binary_search(keys.begin(), keys.end(), residue_key(x));
}

GroupEnumeration bfs_group_order(const std::vector<ResidueMat2>& generators, std::uint64_t r,
                                 std::size_t cap) {
    if (r < 2) throw std::domain_error("modulus must be >= 2");
    GroupEnumeration out;
    out.modulus = r;
    out.generators = generators;

    std::vector<ResidueMat2> steps;
    for (const auto& g : generators) {
        if (g.r != r) throw std::invalid_argument("generator has mismatched modulus");
        if (residue_det(g) != 1 % r) throw std::domain_error("generator not unimodular mod r");
        steps.push_back(g);
        steps.push_back(residue_inv(g));
    }

    std::unordered_set<std::uint64_t> seen;
    std::deque<ResidueMat2> frontier;
    ResidueMat2 id = residue_identity(r);
    seen.insert(residue_key(id));
    out.elements.push_back(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        ResidueMat2 cur = frontier.front();
        frontier.pop_front();
        for (const auto& g : steps) {
            ResidueMat2 next = residue_mul(g, cur);
            if (seen.insert(residue_key(next)).second) {
                if (out.elements.size() >= cap)
                    throw std::length_error("group enumeration exceeded element cap");
                out.elements.push_back(next);
                frontier.push_back(next);
            }
        }
    }
    out.keys.assign(seen.begin(), seen.end());
    std::sort(out.keys.begin(), out.keys.end());
    return out;
}

namespace {

std::uint64_t det1_count_by_iteration(std::uint64_t q) {
    if (q > 128) throw std::domain_error("det-1 iteration oracle limited to moduli <= 128");
    std::uint64_t count = 0;
    for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = 0; b < q; ++b)
            for (std::uint64_t c = 0; c < q; ++c)
                for (std::uint64_t d = 0; d < q; ++d)
                    if ((a * d % q + q - b * c % q) % q == 1 % q) ++count;
    return count;
}

}  // namespace

std::uint64_t sl2_det1_count(std::uint64_t r) {
    if (r < 2) throw std::domain_error("modulus must be >= 2");
    if (r <= 7) return det1_count_by_iteration(r);
    // SL2 over Z/rZ splits over the prime-power factors of r.
    std::uint64_t count = 1;
    std::uint64_t rest = r;
    for (std::uint64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        std::uint64_t q = 1;
        while (rest % p == 0) {
            q *= p;
            rest /= p;
        }
        count *= det1_count_by_iteration(q);
    }
    if (rest > 1) count *= det1_count_by_iteration(rest);
    return count;
}

Substitution two_generator_rewriting() {
    Word x = Word::syllable(0, 1);
    Word y = Word::syllable(1, 1);
    Word b_img = inverse(x) * pow(y, -2) * inverse(x);
    Word u_img = inverse(b_img) * inverse(y) * pow(x, -2) * inverse(y);
    return Substitution({x, b_img, u_img});
}

ResidueCampaignReport residue_campaign(const Presentation& p, const std::vector<Mat2M>& images,
                                       const std::vector<std::uint64_t>& moduli) {
    if (images.size() < p.generators.size()) throw std::out_of_range("assignment not total");
    long m = images.empty() ? 1 : images[0].m;
    for (std::uint64_t r : moduli) {
        if (r < 2) throw std::domain_error("modulus must be >= 2");
        if (std::gcd(static_cast<long long>(r), static_cast<long long>(m)) != 1)
            throw std::domain_error("modulus not coprime to m");
    }

    ResidueCampaignReport report;
    auto add = [&](const std::string& name, bool pass, const std::string& detail) {
        report.checks.push_back({name, pass, detail});
        report.pass = report.pass && pass;
    };

    for (std::uint64_t r : moduli) {
        RelationReport rr = check_relations(p, reduce_assignment(images, r));
        add("relations mod " + std::to_string(r), rr.pass,
            rr.pass ? "all relators trivial"
                    : "relator " + rr.failures[0].relator + " -> " + rr.failures[0].image);
    }

    // The two-generator relators hold exactly over Z[1/2].
    Presentation h2 = make_Hm(2);
    std::vector<Mat2M> phi2 = phi_assignment(2);
    RelationReport exact = check_relations(h2, phi2);
    add("two-generator relators exact over Z[1/2]", exact.pass,
        "x^2yx^2=yx^2y, y^2xy^2=xy^2x, (x^2y^2)^4=1 under x->A, y->Q_2");

    // The three-generator presentation's relators, rewritten over {x, y},
    // are trivial exactly and in every residue quotient.
    Presentation sbm = make_serre_behr_mennicke();
    Substitution rewriting = two_generator_rewriting();
    for (std::size_t j = 0; j < sbm.relators.size(); ++j) {
        Word rewritten = substitute(sbm.relators[j], rewriting);
        std::string name = "rewritten relator " + print_word(sbm.relators[j], sbm.generators);
        bool exact_ok = rewritten.empty() || evaluate(rewritten, phi2) == mat2_identity(2);
        add(name + " exact over Z[1/2]", exact_ok, print_word(rewritten, h2.generators));
        for (std::uint64_t r : moduli) {
            bool mod_ok = rewritten.empty() ||
                          evaluate(rewritten, reduce_assignment(phi2, r)) == residue_identity(r);
            add(name + " mod " + std::to_string(r), mod_ok, "");
        }
    }
    return report;
}

}  // namespace sl2m
