#include "depfca.h"

#include <cstring>
#include <string>

#include "depfca/context.hpp"
#include "depfca/dmvd_lattice.hpp"
#include "depfca/errors.hpp"
#include "depfca/fd_discovery.hpp"
#include "depfca/format.hpp"
#include "depfca/mvd.hpp"
#include "depfca/oracle.hpp"
#include "depfca/partitions.hpp"
#include "depfca/relation.hpp"

struct depfca_relation {
    depfca::Relation rel;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const depfca::IngestionError& e) {
        set_error(e.what());
        return DEPFCA_E_INGEST;
    } catch (const depfca::CapacityError& e) {
        set_error(e.what());
        return DEPFCA_E_CAPACITY;
    } catch (const depfca::ContractError& e) {
        set_error(e.what());
        return DEPFCA_E_USAGE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return DEPFCA_E_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

depfca::AttrSet to_attrset(const size_t* idx, size_t len) {
    return depfca::AttrSet(std::vector<std::size_t>(idx, idx + len));
}

depfca::GeneralizedMVD to_mvd(const size_t* lhs, size_t lhs_len, const size_t* rhs_attrs,
                              const size_t* block_sizes, size_t block_count) {
    depfca::GeneralizedMVD d;
    d.lhs = to_attrset(lhs, lhs_len);
    size_t offset = 0;
    for (size_t b = 0; b < block_count; ++b) {
        d.rhs_blocks.push_back(to_attrset(rhs_attrs + offset, block_sizes[b]));
        offset += block_sizes[b];
    }
    return d;
}

depfca::AttrPartition to_partition(const depfca::Relation& rel, const size_t* attrs,
                                   const size_t* block_sizes, size_t block_count) {
    std::vector<std::vector<std::size_t>> blocks;
    size_t offset = 0;
    for (size_t b = 0; b < block_count; ++b) {
        blocks.emplace_back(attrs + offset, attrs + offset + block_sizes[b]);
        offset += block_sizes[b];
    }
    return depfca::AttrPartition::from_blocks(rel.attr_count(), blocks);
}

depfca::MvdLimits to_limits(size_t max_tuples) {
    depfca::MvdLimits limits;
    if (max_tuples > 0) limits.max_tuples = max_tuples;
    return limits;
}

}  // namespace

extern "C" {

void depfca_load_options_init(depfca_load_options* opts) {
    opts->delimiter = ',';
    opts->dedupe_rows = 0;
    opts->null_distinct = 0;
}

int depfca_relation_load_csv(const char* path, const depfca_load_options* opts,
                             depfca_relation** out) {
    return guarded([&] {
        depfca::LoadOptions o;
        if (opts) {
            o.delimiter = opts->delimiter;
            o.dedupe_rows = opts->dedupe_rows != 0;
            o.null_distinct = opts->null_distinct != 0;
        }
        *out = new depfca_relation{depfca::Relation::load_csv(path, o)};
        return DEPFCA_OK;
    });
}

void depfca_relation_free(depfca_relation* rel) { delete rel; }

size_t depfca_relation_attr_count(const depfca_relation* rel) { return rel->rel.attr_count(); }

size_t depfca_relation_tuple_count(const depfca_relation* rel) {
    return rel->rel.tuple_count();
}

const char* depfca_relation_attr_name(const depfca_relation* rel, size_t index) {
    if (index >= rel->rel.attr_count()) return nullptr;
    return rel->rel.attribute_name(index).c_str();
}

int depfca_relation_attr_index(const depfca_relation* rel, const char* name) {
    std::size_t idx = rel->rel.attr_index(name);
    return idx == depfca::Relation::npos ? -1 : static_cast<int>(idx);
}

int depfca_check_fd(const depfca_relation* rel, const size_t* lhs, size_t lhs_len,
                    const size_t* rhs, size_t rhs_len, int method, int* holds) {
    return guarded([&] {
        auto xs = to_attrset(lhs, lhs_len);
        auto ys = to_attrset(rhs, rhs_len);
        rel->rel.check_attrs(xs);
        rel->rel.check_attrs(ys);
        bool result;
        switch (method) {
            case DEPFCA_METHOD_PARTITION:
                result = depfca::fd_holds(rel->rel, xs, ys);
                break;
            case DEPFCA_METHOD_CONTEXT:
                result = depfca::binarize(rel->rel).implication_holds(xs, ys);
                break;
            case DEPFCA_METHOD_ORACLE:
                result = depfca::oracle::oracle_fd(rel->rel, xs, ys);
                break;
            default:
                throw depfca::ContractError("unsupported FD check method");
        }
        *holds = result ? 1 : 0;
        return DEPFCA_OK;
    });
}

int depfca_check_mvd(const depfca_relation* rel, const size_t* lhs, size_t lhs_len,
                     const size_t* rhs_attrs, const size_t* block_sizes, size_t block_count,
                     int method, size_t max_tuples, int* holds) {
    return guarded([&] {
        auto d = to_mvd(lhs, lhs_len, rhs_attrs, block_sizes, block_count);
        bool result;
        switch (method) {
            case DEPFCA_METHOD_GAMMA:
                result = depfca::mvd_holds(rel->rel, d, to_limits(max_tuples));
                break;
            case DEPFCA_METHOD_ORACLE:
                result = depfca::oracle::oracle_mvd(rel->rel, d);
                break;
            default:
                throw depfca::ContractError("unsupported MVD check method");
        }
        *holds = result ? 1 : 0;
        return DEPFCA_OK;
    });
}

int depfca_check_dmvd(const depfca_relation* rel, const size_t* lhs, size_t lhs_len,
                      const size_t* rhs_attrs, const size_t* block_sizes, size_t block_count,
                      int* holds) {
    return guarded([&] {
        auto d = to_mvd(lhs, lhs_len, rhs_attrs, block_sizes, block_count);
        *holds = depfca::dmvd_holds(rel->rel, d) ? 1 : 0;
        return DEPFCA_OK;
    });
}

int depfca_discover_fds(const depfca_relation* rel, size_t max_lhs, int format, char** out) {
    return guarded([&] {
        auto fds = depfca::discover_minimal_fds(rel->rel, max_lhs);
        auto fmt = format == DEPFCA_FORMAT_JSON ? depfca::OutputFormat::json
                                                : depfca::OutputFormat::text;
        *out = dup_string(depfca::format_fds(rel->rel, fds, fmt));
        return DEPFCA_OK;
    });
}

int depfca_binarize_text(const depfca_relation* rel, char** out) {
    return guarded([&] {
        *out = dup_string(depfca::burmeister(depfca::binarize(rel->rel)));
        return DEPFCA_OK;
    });
}

int depfca_gamma_closure(const depfca_relation* rel, const size_t* attrs,
                         const size_t* block_sizes, size_t block_count, size_t max_tuples,
                         char** out) {
    return guarded([&] {
        auto p = to_partition(rel->rel, attrs, block_sizes, block_count);
        auto closed = depfca::gamma(rel->rel, p, to_limits(max_tuples));
        *out = dup_string(depfca::partition_to_string(rel->rel, closed));
        return DEPFCA_OK;
    });
}

int depfca_lattice(const depfca_relation* rel, int kind, size_t max_tuples, int format,
                   char** out) {
    return guarded([&] {
        depfca::PartitionLattice lat;
        if (kind == DEPFCA_LATTICE_DMVD)
            lat = depfca::dmvd_lattice(rel->rel);
        else if (kind == DEPFCA_LATTICE_MVD)
            lat = depfca::mvd_lattice(rel->rel, to_limits(max_tuples));
        else
            throw depfca::ContractError("unknown lattice kind");
        auto fmt = format == DEPFCA_FORMAT_JSON ? depfca::OutputFormat::json
                                                : depfca::OutputFormat::text;
        *out = dup_string(depfca::format_lattice(rel->rel, lat, fmt));
        return DEPFCA_OK;
    });
}

void depfca_string_free(char* s) { delete[] s; }

const char* depfca_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
