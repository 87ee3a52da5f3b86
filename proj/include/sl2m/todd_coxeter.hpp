#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sl2m/presentation.hpp"

namespace sl2m {

enum class Strategy { HLT, Felsch };
enum class EnumStatus { Completed, LimitExceeded };

struct EnumLimits {
    std::size_t max_live = 2'000'000;
    std::size_t max_total = 2'000'000;
    std::optional<double> time_budget_seconds{};
    // Re-verify inverse consistency after every deduction and coincidence
    // batch. Expensive; for small fixtures and debugging.
    bool debug_checks = false;
};

struct EnumStats {
    std::size_t cosets_defined = 1;  // includes the subgroup coset
    std::size_t coincidences = 0;
    std::size_t peak_live = 1;
};

// Coset action table: one row per coset, one column per generator and per
// generator inverse. Entries are coset indices or kUndefined. Coset 0 is the
// subgroup (reported 1-based as coset 1). Coincidences are merged through a
// union-find whose queue re-scans the dead coset's row, so no derivation is
// lost.
class CosetTable {
public:
    using Coset = std::int32_t;
    static constexpr Coset kUndefined = -1;

    explicit CosetTable(int ngens);

    int ngens() const { return ngens_; }
    int ncols() const { return 2 * ngens_; }
    static int col(int gen, bool inv) { return 2 * gen + (inv ? 1 : 0); }
    static int inv_col(int c) { return c ^ 1; }

    std::size_t total() const { return parent_.size(); }
    std::size_t live() const { return live_; }
    std::size_t merges() const { return merges_; }
    bool is_live(Coset c) const { return parent_[static_cast<std::size_t>(c)] == c; }

    Coset get(Coset c, int column) const {
        return tab_[static_cast<std::size_t>(c) * ncols_ + static_cast<std::size_t>(column)];
    }

    // Union-find representative (path compression).
    Coset rep(Coset c) const;

    // Allocates a new coset as the target of (c, column); c must be live and
    // the slot undefined.
    Coset define(Coset c, int column);

    // Records c --column--> d and the inverse edge. Both slots must be free.
    void set_edge(Coset c, int column, Coset d);

    // Merges the classes of a and b and re-propagates all table entries.
    void coincide(Coset a, Coset b);

    // Edges created by set_edge/define/coincide when recording is on; the
    // Felsch strategy drains this as its deduction stack.
    void record_deductions(bool on) { record_ = on; }
    std::vector<std::pair<Coset, int>>& deductions() { return deductions_; }

    // Follows w from c; kUndefined if the trace hits an undefined entry.
    Coset trace(Coset c, const std::vector<int>& letters) const;
    Coset trace_word(Coset c, const Word& w) const;

    // Renumbers live cosets consecutively (preserving order). After this,
    // total() == live() and every row belongs to a live coset.
    void compact();

    // Invariant: tab[c][x] = d implies tab[d][x^-1] = c, with both ends live.
    bool inverse_consistent() const;

private:
    void merge(Coset a, Coset b, std::vector<Coset>& queue);

    Coset& slot(Coset c, int column) {
        return tab_[static_cast<std::size_t>(c) * ncols_ + static_cast<std::size_t>(column)];
    }

    int ngens_;
    std::size_t ncols_;
    std::vector<Coset> tab_;
    mutable std::vector<Coset> parent_;
    std::size_t live_ = 0;
    std::size_t merges_ = 0;
    bool record_ = false;
    std::vector<std::pair<Coset, int>> deductions_;
};

struct EnumOutcome {
    EnumStatus status = EnumStatus::LimitExceeded;
    // Set on completion: the index [G : H] and the closed, compacted table.
    std::optional<std::size_t> index;
    std::optional<CosetTable> table;
    EnumStats stats;
};

// Coset enumeration for p over the subgroup generated by the given words
// (empty list: the trivial subgroup, so a finite index is the group order).
// HLT scans relators coset by coset with gap filling and falls back to a
// deduction-free lookahead pass when the live limit is hit; Felsch makes the
// lexicographically first undefined entry and propagates deductions through
// relator rotations. Exceeded limits are an outcome, never a wrong index.
EnumOutcome todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                         const EnumLimits& limits = {}, Strategy strategy = Strategy::HLT);

}  // namespace sl2m
