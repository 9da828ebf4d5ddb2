#include "depfca/format.hpp"

#include <sstream>

#include <json.hpp>

namespace depfca {

std::string burmeister(const FormalContext& ctx) {
    std::ostringstream out;
    out << "B\n" << ctx.object_count() << "\n" << ctx.attr_count() << "\n";
    for (const auto& [i, j] : ctx.objects()) out << i << "," << j << "\n";
    for (const auto& name : ctx.attributes()) out << name << "\n";
    for (std::size_t o = 0; o < ctx.object_count(); ++o) {
        for (std::size_t a = 0; a < ctx.attr_count(); ++a)
            out << (ctx.incident(o, a) ? 'X' : '.');
        out << "\n";
    }
    return out.str();
}

std::string partition_to_string(const Relation& rel, const AttrPartition& p) {
    std::ostringstream out;
    bool first_block = true;
    for (const auto& block : p.blocks()) {
        if (!first_block) out << "|";
        first_block = false;
        bool first = true;
        for (auto a : block) {
            if (!first) out << ",";
            first = false;
            out << rel.attribute_name(a);
        }
    }
    return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

}  // namespace

AttrPartition parse_attr_partition(const Relation& rel, const std::string& text) {
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& block_text : split(text, '|')) {
        std::vector<std::size_t> block;
        for (const auto& name : split(block_text, ',')) {
            std::size_t a = rel.attr_index(name);
            if (a == Relation::npos)
                throw ContractError("unknown attribute \"" + name + "\"");
            block.push_back(a);
        }
        blocks.push_back(std::move(block));
    }
    return AttrPartition::from_blocks(rel.attr_count(), blocks);
}

std::string format_fds(const Relation& rel, const std::vector<FunctionalDependency>& fds,
                       OutputFormat format) {
    if (format == OutputFormat::text) {
        std::ostringstream out;
        for (const auto& fd : fds) {
            bool first = true;
            for (auto a : fd.lhs) {
                if (!first) out << ",";
                first = false;
                out << rel.attribute_name(a);
            }
            out << " -> " << rel.attribute_name(fd.rhs) << "\n";
        }
        return out.str();
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& fd : fds) {
        nlohmann::json lhs = nlohmann::json::array();
        for (auto a : fd.lhs) lhs.push_back(rel.attribute_name(a));
        arr.push_back({{"lhs", lhs}, {"rhs", rel.attribute_name(fd.rhs)}});
    }
    return arr.dump() + "\n";
}

std::string format_lattice(const Relation& rel, const PartitionLattice& lat,
                           OutputFormat format) {
    if (format == OutputFormat::text) {
        std::ostringstream out;
        for (const auto& p : lat.elements) out << partition_to_string(rel, p) << "\n";
        return out.str();
    }
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& p : lat.elements) {
        nlohmann::json elem = nlohmann::json::array();
        for (const auto& block : p.blocks()) {
            nlohmann::json b = nlohmann::json::array();
            for (auto a : block) b.push_back(rel.attribute_name(a));
            elem.push_back(b);
        }
        arr.push_back(elem);
    }
    return arr.dump() + "\n";
}

}  // namespace depfca
