#pragma once

#include <string>
#include <vector>

#include "depfca/context.hpp"
#include "depfca/dmvd_lattice.hpp"
#include "depfca/fd_discovery.hpp"
#include "depfca/mvd.hpp"
#include "depfca/relation.hpp"

namespace depfca {

enum class OutputFormat { text, json };

/// Burmeister-style plain text: "B", object count, attribute count, object
/// labels ("i,j"), attribute names, then one './X' line per object.
std::string burmeister(const FormalContext& ctx);

/// Canonical partition rendering: blocks '|'-separated, attribute names
/// comma-separated, canonical block order.
std::string partition_to_string(const Relation& rel, const AttrPartition& p);

/// Parses "a,b|c|d" against the relation's header names.
/// Throws ContractError on unknown names or non-partitions.
AttrPartition parse_attr_partition(const Relation& rel, const std::string& text);

std::string format_fds(const Relation& rel, const std::vector<FunctionalDependency>& fds,
                       OutputFormat format);

std::string format_lattice(const Relation& rel, const PartitionLattice& lat,
                           OutputFormat format);

}  // namespace depfca
