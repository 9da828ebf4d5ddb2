// depfca command-line front end. Talks to the core exclusively through the
// C API in depfca.h.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "depfca.h"

namespace {

constexpr int exit_holds = 0;
constexpr int exit_fails = 1;
constexpr int exit_usage = 2;

struct GlobalFlags {
    std::string delimiter = ",";
    bool dedupe_rows = false;
    bool null_distinct = false;
    std::size_t max_tuples = 0;  // 0 = library default
    std::string format = "text";
};

struct RelationDeleter {
    void operator()(depfca_relation* r) const { depfca_relation_free(r); }
};
using RelationPtr = std::unique_ptr<depfca_relation, RelationDeleter>;

struct StringDeleter {
    void operator()(char* s) const { depfca_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void fail(int code, const std::string& msg) {
    std::cerr << "depfca: " << msg << "\n";
    std::exit(code);
}

RelationPtr load(const std::string& path, const GlobalFlags& flags) {
    if (flags.delimiter.size() != 1) fail(exit_usage, "--delimiter must be a single character");
    depfca_load_options opts;
    depfca_load_options_init(&opts);
    opts.delimiter = flags.delimiter[0];
    opts.dedupe_rows = flags.dedupe_rows;
    opts.null_distinct = flags.null_distinct;
    depfca_relation* rel = nullptr;
    int rc = depfca_relation_load_csv(path.c_str(), &opts, &rel);
    if (rc != DEPFCA_OK) fail(rc, depfca_last_error());
    return RelationPtr(rel);
}

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

std::string available_attrs(const depfca_relation* rel) {
    std::string out;
    for (std::size_t a = 0; a < depfca_relation_attr_count(rel); ++a) {
        if (!out.empty()) out += ", ";
        out += depfca_relation_attr_name(rel, a);
    }
    return out;
}

// Comma-separated attribute names; the empty string denotes the empty set.
std::vector<std::size_t> parse_attr_list(const depfca_relation* rel, const std::string& text) {
    std::vector<std::size_t> out;
    if (text.empty()) return out;
    for (const auto& name : split(text, ',')) {
        int idx = depfca_relation_attr_index(rel, name.c_str());
        if (idx < 0)
            fail(exit_usage, "unknown attribute \"" + name + "\" (available: " +
                                 available_attrs(rel) + ")");
        out.push_back(static_cast<std::size_t>(idx));
    }
    return out;
}

// "Y1|Y2|..." with comma-separated names inside blocks, flattened for the API.
void parse_blocks(const depfca_relation* rel, const std::string& text,
                  std::vector<std::size_t>& attrs, std::vector<std::size_t>& sizes) {
    for (const auto& block_text : split(text, '|')) {
        auto block = parse_attr_list(rel, block_text);
        attrs.insert(attrs.end(), block.begin(), block.end());
        sizes.push_back(block.size());
    }
}

int parse_check_method(const std::string& method, bool for_mvd) {
    if (method == "oracle") return DEPFCA_METHOD_ORACLE;
    if (!for_mvd && method == "partition") return DEPFCA_METHOD_PARTITION;
    if (!for_mvd && method == "context") return DEPFCA_METHOD_CONTEXT;
    if (for_mvd && method == "gamma") return DEPFCA_METHOD_GAMMA;
    fail(exit_usage, "unknown method \"" + method + "\"");
}

int parse_format(const std::string& format) {
    if (format == "text") return DEPFCA_FORMAT_TEXT;
    if (format == "json") return DEPFCA_FORMAT_JSON;
    fail(exit_usage, "unknown format \"" + format + "\" (use text or json)");
}

void check_rc(int rc) {
    if (rc != DEPFCA_OK) fail(rc, depfca_last_error());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"FD/MVD/DMVD checking and discovery over CSV relations"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    GlobalFlags flags;
    app.add_option("--delimiter", flags.delimiter, "CSV field separator (default ',')")
        ->expected(1);
    app.add_flag("--dedupe-rows", flags.dedupe_rows, "Drop exact duplicate rows");
    app.add_flag("--null-distinct", flags.null_distinct,
                 "Treat empty cells as unequal to everything");
    app.add_option("--max-tuples", flags.max_tuples,
                   "Raise the tuple cap for class enumeration (costly: the search "
                   "is exponential in the tuple count)");
    app.add_option("--format", flags.format, "Output format: text or json");

    std::string path, lhs_text, rhs_text, partition_text, kind_text;
    std::string fd_method = "partition", mvd_method = "gamma";
    std::size_t max_lhs = static_cast<std::size_t>(-1);

    auto* cmd_binarize = app.add_subcommand("binarize", "Emit the pairwise-agreement context");
    cmd_binarize->add_option("csv", path)->required();

    auto* cmd_check_fd = app.add_subcommand("check-fd", "Check a functional dependency");
    cmd_check_fd->add_option("csv", path)->required();
    cmd_check_fd->add_option("--lhs", lhs_text, "Comma-separated attribute names");
    cmd_check_fd->add_option("--rhs", rhs_text, "Comma-separated attribute names")->required();
    cmd_check_fd->add_option("--method", fd_method, "partition | context | oracle");

    auto* cmd_discover = app.add_subcommand("discover-fd", "List all minimal FDs");
    cmd_discover->add_option("csv", path)->required();
    cmd_discover->add_option("--max-lhs", max_lhs, "Largest lhs size to consider");

    auto* cmd_check_mvd = app.add_subcommand("check-mvd", "Check a generalized MVD");
    cmd_check_mvd->add_option("csv", path)->required();
    cmd_check_mvd->add_option("--lhs", lhs_text, "Comma-separated attribute names");
    cmd_check_mvd->add_option("--rhs", rhs_text, "Blocks 'Y1|Y2|...' (names comma-separated)")
        ->required();
    cmd_check_mvd->add_option("--method", mvd_method, "gamma | oracle");

    auto* cmd_gamma = app.add_subcommand("gamma", "Close an attribute partition");
    cmd_gamma->add_option("csv", path)->required();
    cmd_gamma->add_option("--partition", partition_text, "Partition 'a|b,c|d'")->required();

    auto* cmd_lattice = app.add_subcommand("lattice", "Emit a dependency-characterizing lattice");
    cmd_lattice->add_option("csv", path)->required();
    cmd_lattice->add_option("--kind", kind_text, "dmvd | mvd")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    if (cmd_binarize->parsed()) {
        auto rel = load(path, flags);
        char* out = nullptr;
        check_rc(depfca_binarize_text(rel.get(), &out));
        ApiString guard(out);
        std::cout << out;
        return 0;
    }

    if (cmd_check_fd->parsed()) {
        auto rel = load(path, flags);
        auto lhs = parse_attr_list(rel.get(), lhs_text);
        auto rhs = parse_attr_list(rel.get(), rhs_text);
        int method = parse_check_method(fd_method, false);
        int holds = 0;
        check_rc(depfca_check_fd(rel.get(), lhs.data(), lhs.size(), rhs.data(), rhs.size(),
                                 method, &holds));
        std::cout << (holds ? "HOLDS" : "FAILS") << "\n";
        return holds ? exit_holds : exit_fails;
    }

    if (cmd_discover->parsed()) {
        auto rel = load(path, flags);
        char* out = nullptr;
        check_rc(depfca_discover_fds(rel.get(), max_lhs, parse_format(flags.format), &out));
        ApiString guard(out);
        std::cout << out;
        return 0;
    }

    if (cmd_check_mvd->parsed()) {
        auto rel = load(path, flags);
        auto lhs = parse_attr_list(rel.get(), lhs_text);
        std::vector<std::size_t> rhs_attrs, block_sizes;
        parse_blocks(rel.get(), rhs_text, rhs_attrs, block_sizes);
        int method = parse_check_method(mvd_method, true);
        int holds = 0;
        check_rc(depfca_check_mvd(rel.get(), lhs.data(), lhs.size(), rhs_attrs.data(),
                                  block_sizes.data(), block_sizes.size(), method,
                                  flags.max_tuples, &holds));
        std::cout << (holds ? "HOLDS" : "FAILS") << "\n";
        return holds ? exit_holds : exit_fails;
    }

    if (cmd_gamma->parsed()) {
        auto rel = load(path, flags);
        std::vector<std::size_t> attrs, block_sizes;
        parse_blocks(rel.get(), partition_text, attrs, block_sizes);
        char* out = nullptr;
        check_rc(depfca_gamma_closure(rel.get(), attrs.data(), block_sizes.data(),
                                      block_sizes.size(), flags.max_tuples, &out));
        ApiString guard(out);
        std::cout << out << "\n";
        return 0;
    }

    if (cmd_lattice->parsed()) {
        auto rel = load(path, flags);
        int kind;
        if (kind_text == "dmvd")
            kind = DEPFCA_LATTICE_DMVD;
        else if (kind_text == "mvd")
            kind = DEPFCA_LATTICE_MVD;
        else
            fail(exit_usage, "unknown lattice kind \"" + kind_text + "\" (use dmvd or mvd)");
        char* out = nullptr;
        check_rc(depfca_lattice(rel.get(), kind, flags.max_tuples,
                                parse_format(flags.format), &out));
        ApiString guard(out);
        std::cout << out;
        return 0;
    }

    return exit_usage;
}
