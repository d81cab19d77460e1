#include "impbase/bases.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "impbase/algorithms.hpp"
#include "impbase/reduction.hpp"

namespace impbase {

namespace {

bool implication_before(const Implication& a, const Implication& b) {
    if (a.premise.count() != b.premise.count()) return a.premise.count() < b.premise.count();
    if (a.premise.mask() != b.premise.mask()) return a.premise.mask() < b.premise.mask();
    return a.conclusion.mask() < b.conclusion.mask();
}

void sort_implications(std::vector<Implication>& imps) {
    std::sort(imps.begin(), imps.end(), implication_before);
}

// Binary part of the D-basis: y -> x for every x in phi(y) \ y.
std::vector<Implication> binary_part_of(const ClosureSystem& system) {
    std::vector<Implication> out;
    for (std::size_t i = 0; i < system.universe_size(); ++i) {
        int y = static_cast<int>(i);
        for (int x : system.singleton_closure(y) - ElementSet::single(y))
            out.emplace_back(ElementSet::single(y), ElementSet::single(x));
    }
    sort_implications(out);
    return out;
}

// Position of each element in the linear extension, for descending orders.
std::vector<int> extension_position(const ElementPoset& poset, std::size_t n) {
    std::vector<int> pos(n, 0);
    for (std::size_t i = 0; i < poset.linear_extension.size(); ++i)
        pos[static_cast<std::size_t>(poset.linear_extension[i])] = static_cast<int>(i);
    return pos;
}

// Descending along the linear extension: all implications whose premise is
// the top element first, then the next element down, and so on.
void sort_binary_descending(std::vector<Implication>& imps, const std::vector<int>& pos) {
    std::sort(imps.begin(), imps.end(), [&](const Implication& a, const Implication& b) {
        int pa = pos[static_cast<std::size_t>(a.premise.first())];
        int pb = pos[static_cast<std::size_t>(b.premise.first())];
        if (pa != pb) return pa > pb;
        return pos[static_cast<std::size_t>(a.conclusion.first())] >
               pos[static_cast<std::size_t>(b.conclusion.first())];
    });
}

} // namespace

Basis build_sigma_delta(const ClosureSystem& system, std::size_t cap) {
    const std::size_t n = system.universe_size();
    if (n > cap) throw CapExceededError(n, cap);

    // For each conclusion y, keep the containment-minimal premises whose
    // closure reaches y. Masks are visited in ascending cardinality so a
    // premise can be discarded as soon as a kept premise sits inside it.
    std::vector<std::uint64_t> masks;
    masks.reserve(std::size_t{1} << n);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t m = 0; m < limit; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });

    std::vector<std::vector<ElementSet>> premises_of(n);
    std::vector<Implication> out;
    for (std::uint64_t mask : masks) {
        ElementSet x = ElementSet::from_mask(mask);
        ElementSet gained = system.closure(x) - x;
        for (int y : gained) {
            bool minimal = true;
            for (ElementSet kept : premises_of[static_cast<std::size_t>(y)]) {
                if (kept.subset_of(x)) { minimal = false; break; }
            }
            if (minimal) {
                premises_of[static_cast<std::size_t>(y)].push_back(x);
                out.emplace_back(x, ElementSet::single(y));
            }
        }
    }
    sort_implications(out);
    return Basis(system.universe(), std::move(out), BasisForm::unit);
}

Basis build_d_basis(const ClosureSystem& system, std::size_t cap) {
    detail::require_reduced(system, "build_d_basis");

    std::vector<Implication> out = binary_part_of(system);
    CoverTable table = build_cover_table(system, cap);
    std::vector<Implication> wide;
    for (std::size_t x = 0; x < table.minimal.size(); ++x) {
        for (ElementSet cover : table.minimal[x])
            wide.emplace_back(cover, ElementSet::single(static_cast<int>(x)));
    }
    sort_implications(wide);
    out.insert(out.end(), wide.begin(), wide.end());
    return Basis(system.universe(), std::move(out), BasisForm::unit);
}

Basis extract_d_basis(const Basis& direct_unit_basis) {
    std::vector<Implication> binary;
    std::vector<Implication> wide;
    for (const Implication& imp : direct_unit_basis.implications) {
        if (imp.premise.count() <= 1) binary.push_back(imp);
        else wide.push_back(imp);
    }

    // Closure under the binary implications alone; one sweep per added layer.
    Basis binary_basis(direct_unit_basis.universe, binary, BasisForm::unit);
    auto binary_closure = [&](ElementSet x) { return ordered_fixpoint(binary_basis, x); };

    std::map<ElementSet, std::vector<ElementSet>, ElementSetLess> premises_of;
    for (const Implication& imp : wide) premises_of[imp.conclusion].push_back(imp.premise);

    std::vector<Implication> kept = binary;
    for (const Implication& imp : wide) {
        ElementSet reach = binary_closure(imp.premise);
        // Not a cover at all: the conclusion follows from the binary part.
        if (imp.conclusion.subset_of(reach)) continue;
        // Some other premise for the same conclusion refines this one: the
        // competitor sits inside the binary closure of our premise without
        // containing it back.
        bool refined = false;
        for (ElementSet other : premises_of[imp.conclusion]) {
            if (other == imp.premise) continue;
            if (other.subset_of(reach) && !imp.premise.subset_of(other)) { refined = true; break; }
        }
        if (!refined) kept.push_back(imp);
    }
    return Basis(direct_unit_basis.universe, std::move(kept), BasisForm::unit);
}

bool order_is_valid_d(const Basis& basis) {
    bool seen_wide = false;
    for (const Implication& imp : basis.implications) {
        if (imp.premise.count() > 1) seen_wide = true;
        else if (seen_wide) return false;
    }
    return true;
}

Basis optimize_binary(const Basis& basis, const ClosureSystem& system) {
    ElementPoset poset = element_poset(system);
    std::vector<int> pos = extension_position(poset, system.universe_size());

    std::vector<Implication> covers;
    std::vector<Implication> rest;
    for (const Implication& imp : basis.implications) {
        if (!imp.binary()) { rest.push_back(imp); continue; }
        int y = imp.premise.first();
        int x = imp.conclusion.first();
        if (std::find(poset.covers.begin(), poset.covers.end(), std::make_pair(y, x)) !=
            poset.covers.end())
            covers.push_back(imp);
    }
    sort_binary_descending(covers, pos);
    covers.insert(covers.end(), rest.begin(), rest.end());
    return Basis(basis.universe, std::move(covers), basis.form);
}

std::pair<Basis, OrderedSequence> build_d_plus(const Basis& d_basis, const ClosureSystem& system) {
    ElementPoset poset = element_poset(system);
    std::vector<int> pos = extension_position(poset, system.universe_size());

    std::vector<Implication> binary;
    std::vector<Implication> wide;
    for (const Implication& imp : d_basis.implications) {
        if (imp.binary()) binary.push_back(imp);
        else wide.push_back(imp);
    }
    auto in_binary = [&](int y, int x) {
        return std::find(binary.begin(), binary.end(),
                         Implication(ElementSet::single(y), ElementSet::single(x))) != binary.end();
    };

    // (b): drop z -> x when z -> y and y -> x are present. What remains of
    // the binary part is exactly the cover pairs.
    std::vector<Implication> binary_kept;
    for (const Implication& imp : binary) {
        int z = imp.premise.first(), x = imp.conclusion.first();
        bool removable = false;
        for (const Implication& via : binary) {
            int y = via.conclusion.first();
            if (via.premise.first() == z && y != x && in_binary(y, x)) { removable = true; break; }
        }
        if (!removable) binary_kept.push_back(imp);
    }

    // (a): drop A -> x when A -> y and y -> x are present, replaying one
    // y -> x after the non-binary block. The witness y is always available
    // at cover level: whenever some conclusion of A sits strictly above x,
    // so does one covering x, because a cover refining A away as a cover of
    // any element between x and y would refine it away as a cover of x too,
    // against A being a minimal cover of x. Replays are sorted descending,
    // so a witness whose own implication was dropped is re-derived first.
    std::map<ElementSet, std::vector<int>, ElementSetLess> conclusions_of;
    for (const Implication& imp : wide) conclusions_of[imp.premise].push_back(imp.conclusion.first());

    auto covers_elem = [&](int y, int x) {
        return std::find(poset.covers.begin(), poset.covers.end(), std::make_pair(y, x)) !=
               poset.covers.end();
    };

    std::vector<Implication> wide_kept;
    std::vector<Implication> replay;
    for (const Implication& imp : wide) {
        int x = imp.conclusion.first();
        int witness = -1;
        for (int y : conclusions_of[imp.premise]) {
            if (y != x && in_binary(y, x) && covers_elem(y, x)) { witness = y; break; }
        }
        if (witness < 0) {
            wide_kept.push_back(imp);
            continue;
        }
        Implication pair(ElementSet::single(witness), ElementSet::single(x));
        if (std::find(replay.begin(), replay.end(), pair) == replay.end()) replay.push_back(pair);
    }

    sort_binary_descending(binary_kept, pos);
    sort_binary_descending(replay, pos);

    std::vector<Implication> plus = binary_kept;
    plus.insert(plus.end(), wide_kept.begin(), wide_kept.end());

    OrderedSequence seq;
    seq.steps = binary_kept;
    seq.steps.insert(seq.steps.end(), wide_kept.begin(), wide_kept.end());
    seq.steps.insert(seq.steps.end(), replay.begin(), replay.end());

    return {Basis(d_basis.universe, std::move(plus), BasisForm::unit), std::move(seq)};
}

namespace {

// Shortest cycle through the lowest-index element that lies on any cycle.
std::optional<std::vector<int>> find_cycle(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> next(n);
    for (auto [a, b] : edges) next[static_cast<std::size_t>(a)].push_back(b);

    for (std::size_t start = 0; start < n; ++start) {
        std::vector<int> pred(n, -1);
        std::vector<bool> seen(n, false);
        std::queue<int> frontier;
        for (int b : next[start]) {
            if (static_cast<std::size_t>(b) == start) return std::vector<int>{static_cast<int>(start)};
            if (!seen[static_cast<std::size_t>(b)]) {
                seen[static_cast<std::size_t>(b)] = true;
                pred[static_cast<std::size_t>(b)] = static_cast<int>(start);
                frontier.push(b);
            }
        }
        while (!frontier.empty()) {
            int at = frontier.front();
            frontier.pop();
            for (int b : next[static_cast<std::size_t>(at)]) {
                if (static_cast<std::size_t>(b) == start) {
                    std::vector<int> cycle;
                    for (int v = at; v != static_cast<int>(start); v = pred[static_cast<std::size_t>(v)])
                        cycle.push_back(v);
                    cycle.push_back(static_cast<int>(start));
                    std::reverse(cycle.begin(), cycle.end());
                    return cycle;
                }
                if (!seen[static_cast<std::size_t>(b)]) {
                    seen[static_cast<std::size_t>(b)] = true;
                    pred[static_cast<std::size_t>(b)] = at;
                    frontier.push(b);
                }
            }
        }
    }
    return std::nullopt;
}

// Minimal covers per element, read off the non-binary part of a D-basis.
std::vector<std::vector<ElementSet>> covers_from_basis(const Basis& d_basis, std::size_t n) {
    std::vector<std::vector<ElementSet>> covers(n);
    for (const Implication& imp : d_basis.implications) {
        if (imp.premise.count() < 2) continue;
        for (int x : imp.conclusion) covers[static_cast<std::size_t>(x)].push_back(imp.premise);
    }
    return covers;
}

std::vector<std::pair<int, int>> d_pairs_from_covers(
    const std::vector<std::vector<ElementSet>>& covers) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t x = 0; x < covers.size(); ++x) {
        ElementSet related;
        for (ElementSet c : covers[x]) related |= c;
        for (int y : related) pairs.emplace_back(static_cast<int>(x), y);
    }
    return pairs;
}

} // namespace

std::optional<std::vector<int>> d_cycles(const CoverTable& table) {
    return find_cycle(table.minimal.size(), table.d_pairs);
}

namespace {

std::string cycle_message(const Universe& universe, const std::vector<int>& cycle) {
    std::string out = "closure system has a D-cycle:";
    for (int v : cycle) out += " " + universe.label(v);
    if (!cycle.empty()) out += " " + universe.label(cycle.front());
    return out;
}

} // namespace

RankTable d_ranks(const ClosureSystem& system, const Basis& d_basis) {
    const std::size_t n = system.universe_size();
    auto covers = covers_from_basis(d_basis, n);

    if (auto cycle = find_cycle(n, d_pairs_from_covers(covers)))
        throw DCycleError(*cycle, cycle_message(system.universe(), *cycle));

    constexpr std::size_t kUnranked = static_cast<std::size_t>(-1);
    RankTable table;
    table.d_rank.assign(n, kUnranked);

    ElementSet ranked;
    for (std::size_t x = 0; x < n; ++x) {
        if (covers[x].empty()) {
            table.d_rank[x] = 0;
            ranked.insert(static_cast<int>(x));
        }
    }

    // An element enters the next stratum once every one of its minimal
    // covers is refined by a minimal cover lying inside the ranked part.
    for (std::size_t k = 1; k <= n; ++k) {
        ElementSet added;
        for (std::size_t x = 0; x < n; ++x) {
            if (table.d_rank[x] != kUnranked) continue;
            bool ready = true;
            for (ElementSet w : covers[x]) {
                bool refined = false;
                for (ElementSet z : covers[x]) {
                    if (z.subset_of(ranked) && ll_refines(system, z, w)) { refined = true; break; }
                }
                if (!refined) { ready = false; break; }
            }
            if (ready) {
                table.d_rank[x] = k;
                added.insert(static_cast<int>(x));
            }
        }
        if (added.empty()) break;
        ranked |= added;
    }

    if (ranked != system.universe().full_set()) {
        // Stalling without a covering cycle cannot happen in a consistent
        // D-basis; surface the strongest witness available.
        auto cycle = find_cycle(n, d_pairs_from_covers(covers));
        throw DCycleError(cycle.value_or(std::vector<int>{}),
                          cycle_message(system.universe(), cycle.value_or(std::vector<int>{})));
    }
    return table;
}

Basis build_e_basis(const ClosureSystem& system, bool enforce_acyclic, std::size_t cap) {
    detail::require_reduced(system, "build_e_basis");

    CoverTable table = build_cover_table(system, cap);
    std::vector<Implication> wide;
    for (std::size_t x = 0; x < table.minimized.size(); ++x) {
        for (ElementSet cover : table.minimized[x])
            wide.emplace_back(cover, ElementSet::single(static_cast<int>(x)));
    }

    std::vector<Implication> out = binary_part_of(system);
    auto cycle = d_cycles(table);
    if (cycle) {
        if (enforce_acyclic) throw DCycleError(*cycle, cycle_message(system.universe(), *cycle));
        sort_implications(wide);
        out.insert(out.end(), wide.begin(), wide.end());
        return Basis(system.universe(), std::move(out), BasisForm::unit);
    }

    // Ascending maximal premise rank; the rank of a conclusion always
    // exceeds every premise rank, so implications feeding a premise come
    // earlier in the list.
    Basis d_like(system.universe(), {}, BasisForm::unit);
    {
        std::vector<Implication> all = binary_part_of(system);
        for (std::size_t x = 0; x < table.minimal.size(); ++x)
            for (ElementSet cover : table.minimal[x])
                all.emplace_back(cover, ElementSet::single(static_cast<int>(x)));
        d_like.implications = std::move(all);
    }
    RankTable ranks = d_ranks(system, d_like);
    auto max_rank = [&](ElementSet premise) {
        std::size_t r = 0;
        for (int e : premise) r = std::max(r, ranks.d_rank[static_cast<std::size_t>(e)]);
        return r;
    };
    std::stable_sort(wide.begin(), wide.end(), [&](const Implication& a, const Implication& b) {
        std::size_t ra = max_rank(a.premise), rb = max_rank(b.premise);
        if (ra != rb) return ra < rb;
        if (a.premise.mask() != b.premise.mask()) return a.premise.mask() < b.premise.mask();
        return a.conclusion.mask() < b.conclusion.mask();
    });

    out.insert(out.end(), wide.begin(), wide.end());
    return Basis(system.universe(), std::move(out), BasisForm::unit);
}

Basis build_dg_canonical(const ClosureSystem& system, std::size_t cap) {
    const std::size_t n = system.universe_size();
    if (n > cap) throw CapExceededError(n, cap);

    // Quasi-closed sets grouped by closure, keeping the containment-minimal
    // ones of each group.
    std::map<ElementSet, std::vector<ElementSet>, ElementSetLess> by_closure;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        ElementSet x = ElementSet::from_mask(mask);
        if (is_quasi_closed(system, x)) by_closure[system.closure(x)].push_back(x);
    }

    std::vector<Implication> out;
    for (auto& [closed, premises] : by_closure) {
        for (ElementSet x : premises) {
            bool minimal = true;
            for (ElementSet w : premises) {
                if (w != x && w.subset_of(x)) { minimal = false; break; }
            }
            if (minimal) out.emplace_back(x, closed - x);
        }
    }
    sort_implications(out);
    return Basis(system.universe(), std::move(out), BasisForm::aggregated);
}

Basis unit_expansion(const Basis& basis) {
    std::vector<Implication> out;
    for (const Implication& imp : basis.implications) {
        for (int y : imp.conclusion) out.emplace_back(imp.premise, ElementSet::single(y));
    }
    return Basis(basis.universe, std::move(out), BasisForm::unit);
}

Basis aggregate(const Basis& basis) {
    std::vector<Implication> out;
    std::map<ElementSet, std::size_t, ElementSetLess> slot;
    for (const Implication& imp : basis.implications) {
        auto it = slot.find(imp.premise);
        if (it == slot.end()) {
            slot.emplace(imp.premise, out.size());
            out.push_back(imp);
        } else {
            out[it->second].conclusion |= imp.conclusion;
        }
    }
    return Basis(basis.universe, std::move(out), BasisForm::aggregated);
}

std::vector<std::size_t> redundant_implications(const Basis& basis) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Basis rest = basis;
        rest.implications.erase(rest.implications.begin() + static_cast<std::ptrdiff_t>(i));
        ElementSet closed = folklore_closure(rest, basis.implications[i].premise).closure;
        if (basis.implications[i].conclusion.subset_of(closed)) out.push_back(i);
    }
    return out;
}

} // namespace impbase
