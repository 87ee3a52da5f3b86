#include "sl2m/todd_coxeter.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace sl2m {

CosetTable::CosetTable(int ngens)
    : ngens_(ngens), ncols_(2 * static_cast<std::size_t>(ngens)) {
    if (ngens < 1) throw std::invalid_argument("coset table needs at least one generator");
    tab_.assign(ncols_, kUndefined);
    parent_.assign(1, 0);
    live_ = 1;
}

CosetTable::Coset CosetTable::rep(Coset c) const {
    Coset r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
        Coset next = parent_[static_cast<std::size_t>(c)];
        parent_[static_cast<std::size_t>(c)] = r;
        c = next;
    }
    return r;
}

CosetTable::Coset CosetTable::define(Coset c, int column) {
    Coset d = static_cast<Coset>(parent_.size());
    parent_.push_back(d);
    tab_.resize(tab_.size() + ncols_, kUndefined);
    ++live_;
    set_edge(c, column, d);
    return d;
}

void CosetTable::set_edge(Coset c, int column, Coset d) {
    slot(c, column) = d;
    slot(d, inv_col(column)) = c;
    if (record_) deductions_.emplace_back(c, column);
}

void CosetTable::merge(Coset a, Coset b, std::vector<Coset>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);  // smaller index survives, so coset 0 stays live
    parent_[static_cast<std::size_t>(b)] = a;
    --live_;
    ++merges_;
    queue.push_back(b);
}

void CosetTable::coincide(Coset a, Coset b) {
    std::vector<Coset> queue;
    merge(a, b, queue);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        Coset dead = queue[qi];
        for (int x = 0; x < static_cast<int>(ncols_); ++x) {
            Coset delta = slot(dead, x);
            if (delta == kUndefined) continue;
            // Remove the mirror edge into the dead coset before re-homing it.
            slot(delta, inv_col(x)) = kUndefined;
            Coset mu = rep(dead);
            Coset nu = rep(delta);
            Coset mu_x = slot(mu, x);
            if (mu_x != kUndefined) {
                merge(nu, mu_x, queue);
            } else {
                Coset nu_xi = slot(nu, inv_col(x));
                if (nu_xi != kUndefined) {
                    merge(mu, nu_xi, queue);
                } else {
                    slot(mu, x) = nu;
                    slot(nu, inv_col(x)) = mu;
                    if (record_) deductions_.emplace_back(mu, x);
                }
            }
        }
    }
}

CosetTable::Coset CosetTable::trace(Coset c, const std::vector<int>& letters) const {
    for (int x : letters) {
        c = get(c, x);
        if (c == kUndefined) return kUndefined;
    }
    return c;
}

CosetTable::Coset CosetTable::trace_word(Coset c, const Word& w) const {
    for (const auto& s : w.syllables()) {
        int column = col(s.gen, s.exp < 0);
        Int n = abs(s.exp);
        if (!n.fits_slong_p()) throw std::domain_error("word exponent too large to trace");
        for (long i = 0, e = n.get_si(); i < e; ++i) {
            c = get(c, column);
            if (c == kUndefined) return kUndefined;
        }
    }
    return c;
}

void CosetTable::compact() {
    std::vector<Coset> new_index(parent_.size(), kUndefined);
    Coset next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c)
        if (is_live(static_cast<Coset>(c))) new_index[c] = next++;

    std::vector<Coset> tab(static_cast<std::size_t>(next) * ncols_, kUndefined);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
        if (new_index[c] == kUndefined) continue;
        for (std::size_t x = 0; x < ncols_; ++x) {
            Coset d = tab_[c * ncols_ + x];
            if (d != kUndefined) d = new_index[static_cast<std::size_t>(rep(d))];
            tab[static_cast<std::size_t>(new_index[c]) * ncols_ + x] = d;
        }
    }
    tab_ = std::move(tab);
    parent_.resize(static_cast<std::size_t>(next));
    for (std::size_t c = 0; c < parent_.size(); ++c) parent_[c] = static_cast<Coset>(c);
    live_ = static_cast<std::size_t>(next);
    deductions_.clear();
}

bool CosetTable::inverse_consistent() const {
    for (std::size_t c = 0; c < parent_.size(); ++c) {
        if (!is_live(static_cast<Coset>(c))) continue;
        for (std::size_t x = 0; x < ncols_; ++x) {
            Coset d = tab_[c * ncols_ + x];
            if (d == kUndefined) continue;
            if (!is_live(d)) return false;
            if (get(d, inv_col(static_cast<int>(x))) != static_cast<Coset>(c)) return false;
        }
    }
    return true;
}

namespace {

using Coset = CosetTable::Coset;

std::vector<int> word_letters(const Word& w) {
    std::vector<int> out;
    for (const auto& s : w.syllables()) {
        int column = CosetTable::col(s.gen, s.exp < 0);
        Int n = abs(s.exp);
        if (!n.fits_slong_p() || n.get_si() > 100'000'000)
            throw std::domain_error("word exponent too large to expand into letters");
        for (long i = 0, e = n.get_si(); i < e; ++i) out.push_back(column);
    }
    return out;
}

class Enumerator {
public:
    Enumerator(const Presentation& p, const std::vector<Word>& subgroup_gens,
               const EnumLimits& limits, Strategy strategy)
        : table_(static_cast<int>(p.generators.size())),
          limits_(limits),
          strategy_(strategy),
          start_(std::chrono::steady_clock::now()) {
        for (const auto& r : p.relators) {
            Word cr = cyclic_reduce(r);
            if (cr.empty()) continue;
            relators_.push_back(word_letters(cr));
        }
        // Shortest relators first: cheap deductions early. Affects statistics
        // only, never the resulting index.
        std::stable_sort(relators_.begin(), relators_.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        for (const auto& w : subgroup_gens)
            if (!w.empty()) subgroup_.push_back(word_letters(w));
        if (strategy_ == Strategy::Felsch) {
            table_.record_deductions(true);
            build_rotations();
        }
    }

    EnumOutcome run() {
        return strategy_ == Strategy::HLT ? run_hlt() : run_felsch();
    }

private:
    // --- shared ------------------------------------------------------------

    bool out_of_time() const {
        if (!limits_.time_budget_seconds) return false;
        auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_);
        return elapsed.count() > *limits_.time_budget_seconds;
    }

    EnumOutcome limit_outcome() {
        EnumOutcome out;
        out.status = EnumStatus::LimitExceeded;
        out.stats = stats();
        return out;
    }

    EnumOutcome completed_outcome() {
        EnumOutcome out;
        out.stats = stats();
        table_.compact();
        out.status = EnumStatus::Completed;
        out.index = table_.live();
        out.table = std::move(table_);
        return out;
    }

    EnumStats stats() const {
        EnumStats s;
        s.cosets_defined = table_.total();
        s.coincidences = table_.merges();
        s.peak_live = peak_live_;
        return s;
    }

    // Defines a new coset, or returns kUndefined if the limits forbid it.
    Coset try_define(Coset c, int column) {
        if (table_.total() >= limits_.max_total) {
            blocked_ = true;
            return CosetTable::kUndefined;
        }
        if (table_.live() >= limits_.max_live) {
            if (strategy_ == Strategy::HLT && !lookahead_done_) {
                need_lookahead_ = true;
            } else {
                blocked_ = true;
            }
            return CosetTable::kUndefined;
        }
        Coset d = table_.define(c, column);
        peak_live_ = std::max(peak_live_, table_.live());
        return d;
    }

    // Scans the cycle of w at alpha. With fill, defines cosets across gaps
    // (HLT); without, stops at gaps longer than one (Felsch). Returns false
    // if a definition was refused by the limits.
    bool scan(Coset alpha, const std::vector<int>& w, bool fill) {
        Coset f = alpha;
        std::size_t i = 0;
        Coset b = alpha;
        std::size_t r = w.size();
        for (;;) {
            while (i < r) {
                Coset next = table_.get(f, w[i]);
                if (next == CosetTable::kUndefined) break;
                f = next;
                ++i;
            }
            if (i == r) {
                if (f != b) {
                    table_.coincide(f, b);
                    if (limits_.debug_checks && !table_.inverse_consistent())
                        throw std::logic_error("inverse consistency lost after coincidence");
                }
                return true;
            }
            while (r > i) {
                Coset next = table_.get(b, CosetTable::inv_col(w[r - 1]));
                if (next == CosetTable::kUndefined) break;
                b = next;
                --r;
            }
            if (r == i) {
                if (f != b) {
                    table_.coincide(f, b);
                    if (limits_.debug_checks && !table_.inverse_consistent())
                        throw std::logic_error("inverse consistency lost after coincidence");
                }
                return true;
            }
            if (r == i + 1) {
                table_.set_edge(f, w[i], b);
                if (limits_.debug_checks && !table_.inverse_consistent())
                    throw std::logic_error("inverse consistency lost after deduction");
                return true;
            }
            if (!fill) return true;
            Coset d = try_define(f, w[i]);
            if (d == CosetTable::kUndefined) return false;
            f = d;
            ++i;
        }
    }

    // --- HLT ----------------------------------------------------------------

    // Deduction-free pass over all live cosets, hoping coincidences free
    // enough live slots to continue.
    void lookahead() {
        for (std::size_t c = 0; c < table_.total(); ++c) {
            Coset alpha = static_cast<Coset>(c);
            if (!table_.is_live(alpha)) continue;
            for (const auto& w : relators_) {
                scan(alpha, w, false);
                if (!table_.is_live(alpha)) break;
            }
        }
    }

    EnumOutcome run_hlt() {
        for (const auto& w : subgroup_) {
            if (!scan(0, w, true)) return limit_outcome();
        }
        Coset alpha = 0;
        while (static_cast<std::size_t>(alpha) < table_.total()) {
            if (!table_.is_live(alpha)) {
                ++alpha;
                continue;
            }
            if (out_of_time()) return limit_outcome();

            bool row_done = true;
            for (const auto& w : relators_) {
                if (!scan(alpha, w, true)) {
                    if (!handle_block()) return limit_outcome();
                    row_done = false;
                    break;
                }
                if (!table_.is_live(alpha)) break;
            }
            if (!row_done) continue;  // redo this coset after lookahead

            if (table_.is_live(alpha)) {
                bool filled = true;
                for (int x = 0; x < table_.ncols() && table_.is_live(alpha); ++x) {
                    if (table_.get(alpha, x) != CosetTable::kUndefined) continue;
                    if (try_define(alpha, x) == CosetTable::kUndefined) {
                        if (!handle_block()) return limit_outcome();
                        filled = false;
                        break;
                    }
                }
                if (!filled) continue;
            }
            ++alpha;
        }
        return completed_outcome();
    }

    // After a refused definition under HLT: run the one-shot lookahead if it
    // is still available and check whether space was recovered.
    bool handle_block() {
        if (blocked_) return false;
        if (need_lookahead_) {
            need_lookahead_ = false;
            lookahead_done_ = true;
            lookahead();
            if (table_.live() >= limits_.max_live) {
                blocked_ = true;
                return false;
            }
            return true;
        }
        return false;
    }

    // --- Felsch ---------------------------------------------------------------

    void build_rotations() {
        rotations_.assign(static_cast<std::size_t>(table_.ncols()), {});
        for (const auto& w : relators_) {
            for (std::size_t i = 0; i < w.size(); ++i) {
                std::vector<int> rot;
                rot.reserve(w.size());
                rot.insert(rot.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
                rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                auto& bucket = rotations_[static_cast<std::size_t>(rot[0])];
                if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end())
                    bucket.push_back(std::move(rot));
            }
        }
    }

    void drain_deductions() {
        auto& deds = table_.deductions();
        while (!deds.empty()) {
            auto [c, x] = deds.back();
            deds.pop_back();
            Coset cc = table_.rep(c);
            Coset dd = table_.get(cc, x);
            if (dd == CosetTable::kUndefined) continue;  // edge superseded by a merge
            for (const auto& rot : rotations_[static_cast<std::size_t>(x)]) {
                if (!table_.is_live(cc)) break;
                scan(cc, rot, false);
            }
            cc = table_.rep(cc);
            dd = table_.get(cc, x);
            if (dd == CosetTable::kUndefined) continue;
            for (const auto& rot : rotations_[static_cast<std::size_t>(CosetTable::inv_col(x))]) {
                if (!table_.is_live(dd)) break;
                scan(dd, rot, false);
            }
            if (limits_.debug_checks && !table_.inverse_consistent())
                throw std::logic_error("inverse consistency lost during deduction batch");
        }
    }

    EnumOutcome run_felsch() {
        for (const auto& w : subgroup_) {
            if (!scan(0, w, true)) return limit_outcome();
            drain_deductions();
        }
        for (;;) {
            if (out_of_time()) return limit_outcome();
            // First undefined entry in row-major order over live cosets.
            bool found = false;
            for (std::size_t c = 0; c < table_.total() && !found; ++c) {
                Coset alpha = static_cast<Coset>(c);
                if (!table_.is_live(alpha)) continue;
                for (int x = 0; x < table_.ncols(); ++x) {
                    if (table_.get(alpha, x) != CosetTable::kUndefined) continue;
                    if (try_define(alpha, x) == CosetTable::kUndefined) return limit_outcome();
                    drain_deductions();
                    found = true;
                    break;
                }
            }
            if (!found) return completed_outcome();
        }
    }

    CosetTable table_;
    EnumLimits limits_;
    Strategy strategy_;
    std::chrono::steady_clock::time_point start_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> subgroup_;
    std::vector<std::vector<std::vector<int>>> rotations_;
    std::size_t peak_live_ = 1;
    bool blocked_ = false;
    bool need_lookahead_ = false;
    bool lookahead_done_ = false;
};

}  // namespace

EnumOutcome todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                         const EnumLimits& limits, Strategy strategy) {
    if (limits.max_live == 0 || limits.max_total == 0)
        throw std::invalid_argument("enumeration limits must be positive");
    for (const auto& w : subgroup_gens)
        if (w.max_gen() >= static_cast<int>(p.generators.size()))
            throw std::invalid_argument("subgroup word uses unknown generator");
    return Enumerator(p, subgroup_gens, limits, strategy).run();
}

}  // namespace sl2m
