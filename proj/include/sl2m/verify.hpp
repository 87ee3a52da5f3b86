#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sl2m/matrix_groups.hpp"
#include "sl2m/todd_coxeter.hpp"

namespace sl2m {

// Certification data for the presentation of SL2(Z/rZ): coset enumeration of
// the presented group against two independent order oracles (BFS closure and
// exhaustive determinant counting), plus the relator and generation checks
// that make the order equality an isomorphism certificate.
struct CorollaryReport {
    long r = 0;
    EnumStatus status = EnumStatus::LimitExceeded;
    std::size_t tc_index = 0;  // meaningful when status == Completed
    std::size_t bfs_order = 0;
    std::uint64_t det1_count = 0;
    bool relators_hold = false;  // x -> A, y -> Q_2 mod r satisfies all relators
    bool generates = false;      // BFS order equals the exhaustive det-1 count
    bool orders_match = false;   // enumeration index equals the BFS order
    bool pass = false;
    EnumStats stats;
};

CorollaryReport verify_corollary(long r, const EnumLimits& limits = {});

// Uniformly random freely reduced word over {x, y} with at most max_letters
// letters.
Word random_reduced_word(std::mt19937_64& rng, int max_letters);

struct CampaignCheck {
    std::string name;
    bool pass;
    std::string details;
};

struct CampaignReport {
    std::vector<CampaignCheck> checks;
    bool pass = true;
    bool limit_hit = false;
    double seconds = 0.0;
};

struct CampaignConfig {
    long m_lo = 1;
    long m_hi = 50;
    std::vector<long> r_list{3, 5, 7};
    std::vector<std::uint64_t> moduli{3, 5, 7, 11, 13};
    std::uint64_t seed = 1;
    int sample_words = 25;
    int max_word_letters = 40;
    EnumLimits limits{};
    int jobs = 1;
};

// The full verification campaign, in order: Lemma identity suite for each m;
// abelianization against the Theorem's case split for each m (with the
// printed-gcd cross-check reported informationally); rewriting checks over
// the residue moduli; Corollary verification for each r; a seeded
// decomposition round-trip sample. Checks with disjoint state may run
// concurrently (jobs > 1); report order is fixed regardless.
CampaignReport run_verification_campaign(const CampaignConfig& config);

}  // namespace sl2m
