#include "depfca/dmvd_lattice.hpp"

#include <algorithm>
#include <functional>

namespace depfca {

bool PartitionLattice::contains(const AttrPartition& p) const {
    return std::binary_search(elements.begin(), elements.end(), p);
}

std::set<AgreementVector> bin_vectors(const Relation& rel) {
    std::size_t n = rel.tuple_count();
    std::size_t m = rel.attr_count();
    std::set<AgreementVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            AgreementVector v(m);
            for (std::size_t a = 0; a < m; ++a) v[a] = rel.agree(i, j, a);
            out.insert(std::move(v));
        }
    }
    return out;
}

AttrPartition vector_to_partition(const AgreementVector& t) {
    std::vector<std::vector<std::size_t>> blocks;
    std::vector<std::size_t> zeros;
    for (std::size_t a = 0; a < t.size(); ++a) {
        if (t[a])
            blocks.push_back({a});
        else
            zeros.push_back(a);
    }
    if (!zeros.empty()) blocks.push_back(std::move(zeros));
    return AttrPartition::from_blocks(t.size(), blocks);
}

PartitionLattice meet_closure(const std::vector<AttrPartition>& parts) {
    std::set<AttrPartition> closed(parts.begin(), parts.end());
    std::vector<AttrPartition> worklist(closed.begin(), closed.end());
    while (!worklist.empty()) {
        AttrPartition p = std::move(worklist.back());
        worklist.pop_back();
        for (const auto& q : std::vector<AttrPartition>(closed.begin(), closed.end())) {
            AttrPartition m = p.meet_with(q);
            if (closed.insert(m).second) worklist.push_back(std::move(m));
        }
    }
    PartitionLattice lat;
    lat.elements.assign(closed.begin(), closed.end());
    return lat;
}

PartitionLattice dmvd_lattice(const Relation& rel) {
    std::vector<AttrPartition> generators;
    for (const auto& v : bin_vectors(rel)) generators.push_back(vector_to_partition(v));
    return meet_closure(generators);
}

std::vector<AttrPartition> all_attr_partitions(std::size_t m) {
    // Restricted growth strings enumerate set partitions exactly once.
    std::vector<AttrPartition> out;
    if (m == 0) {
        out.push_back(AttrPartition::from_labels({}));
        return out;
    }
    std::vector<std::uint32_t> rgs(m, 0);
    auto emit = [&] { out.push_back(AttrPartition::from_labels(rgs)); };
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t pos,
                                                              std::uint32_t max_used) {
        if (pos == m) {
            emit();
            return;
        }
        for (std::uint32_t l = 0; l <= max_used + 1; ++l) {
            rgs[pos] = l;
            rec(pos + 1, std::max(max_used, l));
        }
    };
    rgs[0] = 0;
    rec(1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

PartitionLattice mvd_lattice(const Relation& rel, const MvdLimits& limits) {
    if (rel.attr_count() > max_attrs_for_enumeration)
        throw CapacityError("lattice enumeration capped at " +
                            std::to_string(max_attrs_for_enumeration) + " attributes");
    PartitionLattice lat;
    for (const auto& p : all_attr_partitions(rel.attr_count()))
        if (gamma(rel, p, limits) == p) lat.elements.push_back(p);
    std::sort(lat.elements.begin(), lat.elements.end());
    return lat;
}

bool dmvd_holds(const Relation& rel, const GeneralizedMVD& d) {
    check_mvd_shape(rel, d);
    std::size_t n = rel.tuple_count();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool on_lhs = true;
            for (auto a : d.lhs)
                if (!rel.agree(i, j, a)) {
                    on_lhs = false;
                    break;
                }
            if (!on_lhs) continue;
            std::size_t disagreeing_blocks = 0;
            for (const auto& block : d.rhs_blocks) {
                for (auto a : block)
                    if (!rel.agree(i, j, a)) {
                        ++disagreeing_blocks;
                        break;
                    }
            }
            if (disagreeing_blocks > 1) return false;
        }
    }
    return true;
}

}  // namespace depfca
