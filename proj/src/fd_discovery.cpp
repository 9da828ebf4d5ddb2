#include "depfca/fd_discovery.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "depfca/partitions.hpp"

namespace depfca {

namespace {

using Mask = std::uint32_t;

struct Node {
    TuplePartition part;
    Mask holds = 0;     // a ∉ X with X→a
    Mask subsumed = 0;  // a with some proper subset X' ⊂ X where X'→a
    bool all_singletons = false;
};

AttrSet mask_to_attrset(Mask mask) {
    std::vector<std::size_t> idx;
    for (std::size_t a = 0; mask; ++a, mask >>= 1)
        if (mask & 1u) idx.push_back(a);
    return AttrSet(std::move(idx));
}

}  // namespace

std::vector<FunctionalDependency> discover_minimal_fds(const Relation& rel,
                                                       std::size_t max_lhs) {
    std::size_t m = rel.attr_count();
    std::size_t n = rel.tuple_count();
    if (m > fd_attr_cap)
        throw CapacityError("FD discovery capped at " + std::to_string(fd_attr_cap) +
                            " attributes (" + std::to_string(m) + " present)");
    if (m == 0) return {};
    std::size_t bound = std::min(max_lhs, m - 1);
    Mask full = (m == 32) ? ~Mask{0} : (Mask{1} << m) - 1;

    std::vector<TuplePartition> deltas;
    deltas.reserve(m);
    for (std::size_t a = 0; a < m; ++a) deltas.push_back(delta(rel, a));

    std::vector<FunctionalDependency> out;
    std::unordered_map<Mask, Node> level;
    level.emplace(0, Node{TuplePartition::single_block(n), 0, 0, n <= 1});

    for (std::size_t k = 0; k <= bound && !level.empty(); ++k) {
        // Children for the next level, keyed by mask; generated from the
        // prefix parent (child minus its largest attribute). A node whose
        // partition is all singletons determines every attribute, so its
        // supersets cannot carry minimal FDs and are not generated.
        std::unordered_map<Mask, Node> next;
        if (k < bound) {
            for (auto& [mask, node] : level) {
                if (node.all_singletons) continue;
                std::size_t lo = (mask == 0) ? 0 : (31 - std::countl_zero(mask) + 1);
                for (std::size_t a = lo; a < m; ++a) {
                    TuplePartition child = meet(node.part, deltas[a]);
                    bool all_single = child.block_count() == n;
                    next.emplace(mask | (Mask{1} << a),
                                 Node{std::move(child), 0, 0, all_single});
                }
            }
        }
        // FD tests: X→a holds iff part(X∪{a}) has the same block count as part(X).
        for (auto& [mask, node] : level) {
            Mask complement = full & ~mask;
            if (node.all_singletons) {
                node.holds = complement;
            } else {
                for (std::size_t a = 0; a < m; ++a) {
                    Mask bit = Mask{1} << a;
                    if (!(complement & bit)) continue;
                    auto it = next.find(mask | bit);
                    std::size_t blocks = (it != next.end())
                                             ? it->second.part.block_count()
                                             : meet(node.part, deltas[a]).block_count();
                    if (blocks == node.part.block_count()) node.holds |= bit;
                }
            }
            Mask minimal = node.holds & ~node.subsumed;
            AttrSet lhs = mask_to_attrset(mask);
            for (std::size_t a = 0; a < m; ++a)
                if ((minimal >> a) & 1u) out.push_back({lhs, a});
        }
        // Minimality bookkeeping: a child inherits every FD its immediate
        // parents already settle. A missing parent was pruned under an
        // all-singleton ancestor, which settles everything.
        for (auto& [mask, node] : next) {
            for (std::size_t x = 0; x < m; ++x) {
                Mask bit = Mask{1} << x;
                if (!(mask & bit)) continue;
                auto it = level.find(mask & ~bit);
                node.subsumed |= (it != level.end())
                                     ? (it->second.holds | it->second.subsumed)
                                     : full;
            }
            node.subsumed &= ~mask;
        }
        level = std::move(next);
    }

    std::sort(out.begin(), out.end(), [](const auto& f, const auto& g) {
        if (f.lhs.size() != g.lhs.size()) return f.lhs.size() < g.lhs.size();
        if (f.lhs.indices() != g.lhs.indices()) return f.lhs.indices() < g.lhs.indices();
        return f.rhs < g.rhs;
    });
    return out;
}

bool fd_cover_check(const Relation& rel, const std::vector<FunctionalDependency>& fds) {
    for (const auto& fd : fds)
        if (!fd_holds(rel, fd.lhs, AttrSet{fd.rhs})) return false;
    return true;
}

}  // namespace depfca
