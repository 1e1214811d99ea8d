#pragma once

// Embedded fixture corpus: every configuration shipped with the repository,
// stored as plain-text files with a small header of expected properties.
//
// File format (one file per source location, UTF-8, '#'-prefixed header):
//   # id: bsfree-22
//   # anchor: section-2.3
//   # v: 22
//   # bsfree: true
//   <blank line>
//   012 034 056 ...          <- one configuration per non-comment line
//
// A `# key: value` line sets a group-level expectation inherited by every
// configuration in the file; an `@ key: value` line sets an expectation for
// the next configuration line only.  Group keys `count` and
// `pairwise_nonisomorphic` constrain the file as a whole.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocking.hpp"
#include "canonical.hpp"
#include "colouring.hpp"
#include "core.hpp"
#include "graph.hpp"

namespace symcfg {

struct CorpusEntry {
    std::string id;     // "<group id>#<index>"
    std::string anchor; // source location of the printed block list
    std::string blocks_text;
    Configuration config;
    std::map<std::string, std::string> expect;
};

struct CorpusGroup {
    std::string id;
    std::string anchor;
    std::string file;
    std::map<std::string, std::string> group_expect; // includes count etc.
    std::vector<CorpusEntry> entries;
};

inline std::string default_corpus_dir() {
    if (const char* env = std::getenv("SYMCFG_CORPUS_DIR")) return env;
#ifdef SYMCFG_CORPUS_DIR
    return SYMCFG_CORPUS_DIR;
#else
    return "corpus";
#endif
}

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline std::pair<std::string, std::string> split_kv(const std::string& body, const std::string& where) {
    std::size_t colon = body.find(':');
    if (colon == std::string::npos)
        throw ParseError("corpus: malformed key/value line in " + where + ": " + body);
    return {trim(body.substr(0, colon)), trim(body.substr(colon + 1))};
}

} // namespace detail

inline CorpusGroup corpus_load_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("corpus: cannot open " + path.string());
    CorpusGroup group;
    group.file = path.string();
    group.id = path.stem().string();
    std::map<std::string, std::string> pending; // `@` expectations for the next entry
    std::string line;
    while (std::getline(in, line)) {
        std::string t = detail::trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            auto kv = detail::split_kv(detail::trim(t.substr(1)), path.string());
            if (kv.first == "id")
                group.id = kv.second;
            else if (kv.first == "anchor")
                group.anchor = kv.second;
            else
                group.group_expect[kv.first] = kv.second;
            continue;
        }
        if (t[0] == '@') {
            auto kv = detail::split_kv(detail::trim(t.substr(1)), path.string());
            pending[kv.first] = kv.second;
            continue;
        }
        CorpusEntry entry;
        entry.anchor = group.anchor;
        entry.blocks_text = t;
        entry.config = parse_config(t);
        entry.expect = group.group_expect;
        entry.expect.erase("count");
        entry.expect.erase("pairwise_nonisomorphic");
        for (const auto& kv : pending) entry.expect[kv.first] = kv.second;
        pending.clear();
        entry.id = group.id + "#" + std::to_string(group.entries.size() + 1);
        group.entries.push_back(std::move(entry));
    }
    if (!pending.empty())
        throw ParseError("corpus: trailing @-expectations without a configuration in " +
                         path.string());
    return group;
}

inline std::vector<CorpusGroup> corpus_load(const std::string& dir = "") {
    std::string d = dir.empty() ? default_corpus_dir() : dir;
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(d))
        if (e.is_regular_file() && e.path().extension() == ".txt") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<CorpusGroup> groups;
    groups.reserve(files.size());
    for (const auto& f : files) groups.push_back(corpus_load_file(f));
    return groups;
}

inline std::vector<CorpusEntry> corpus_entries(const std::vector<CorpusGroup>& groups) {
    std::vector<CorpusEntry> out;
    for (const auto& g : groups)
        for (const auto& e : g.entries) out.push_back(e);
    return out;
}

struct MismatchReport {
    std::vector<std::string> mismatches;
    long long entries_checked = 0;
    long long checks_performed = 0;
    bool ok() const { return mismatches.empty(); }
};

namespace detail {

inline bool parse_bool(const std::string& s, const std::string& where) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw ParseError("corpus: expected true/false for " + where + ", got: " + s);
}

} // namespace detail

// Recomputes every stated expectation of every entry.  Unknown keys are
// reported as mismatches so that a typo in a fixture cannot silently pass.
inline MismatchReport corpus_verify(const std::vector<CorpusGroup>& groups) {
    MismatchReport report;
    auto fail = [&](const std::string& id, const std::string& key, const std::string& expected,
                    const std::string& got) {
        report.mismatches.push_back(id + ": " + key + ": expected " + expected + ", got " + got);
    };

    for (const auto& group : groups) {
        for (const auto& entry : group.entries) {
            ++report.entries_checked;
            const Configuration& c = entry.config;
            std::optional<BlockingProfile> bp;
            auto blocking = [&]() -> const BlockingProfile& {
                if (!bp) bp = blocking_profile(c);
                return *bp;
            };
            std::optional<SymmetryProfile> sym;
            auto symmetry = [&]() -> const SymmetryProfile& {
                if (!sym) sym = symmetry_profile(c);
                return *sym;
            };

            ValidationReport val = validate(c.v, c.blocks);
            if (!val.ok) {
                fail(entry.id, "valid", "true", "violations present");
                continue;
            }

            for (const auto& kv : entry.expect) {
                ++report.checks_performed;
                const std::string& key = kv.first;
                const std::string& want = kv.second;
                try {
                    if (key == "v") {
                        if (c.v != std::stoi(want)) fail(entry.id, key, want, std::to_string(c.v));
                    } else if (key == "bsfree") {
                        bool expect = detail::parse_bool(want, entry.id + "/" + key);
                        bool got = !blocking().has;
                        if (got != expect) fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "min_blocking") {
                        int expect = (want == "half-floor") ? c.v / 2 : std::stoi(want);
                        if (!blocking().has)
                            fail(entry.id, key, want, "no blocking set");
                        else if (blocking().min_size != expect)
                            fail(entry.id, key, std::to_string(expect),
                                 std::to_string(*blocking().min_size));
                    } else if (key == "chi_w") {
                        int got = blocking().chi_w;
                        if (got != std::stoi(want)) fail(entry.id, key, want, std::to_string(got));
                    } else if (key == "chi_s") {
                        int got = strong_chromatic_number(c).first;
                        if (got != std::stoi(want)) fail(entry.id, key, want, std::to_string(got));
                    } else if (key == "connectivity") {
                        int got = config_connectivity(c).connectivity;
                        if (got != std::stoi(want)) fail(entry.id, key, want, std::to_string(got));
                    } else if (key == "self_dual") {
                        bool got = symmetry().self_dual;
                        if (got != detail::parse_bool(want, entry.id))
                            fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "self_polar") {
                        bool got = symmetry().self_polar;
                        if (got != detail::parse_bool(want, entry.id))
                            fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "point_transitive") {
                        bool got = symmetry().point_transitive;
                        if (got != detail::parse_bool(want, entry.id))
                            fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "flag_transitive") {
                        bool got = symmetry().flag_transitive;
                        if (got != detail::parse_bool(want, entry.id))
                            fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "weakly_flag_transitive") {
                        bool got = symmetry().weakly_flag_transitive;
                        if (got != detail::parse_bool(want, entry.id))
                            fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "cyclic") {
                        bool got = symmetry().cyclic;
                        if (got != detail::parse_bool(want, entry.id))
                            fail(entry.id, key, want, got ? "true" : "false");
                    } else if (key == "full_group_order") {
                        long long got = symmetry().full_order;
                        if (got != std::stoll(want)) fail(entry.id, key, want, std::to_string(got));
                    } else if (key == "levi_nonhamiltonian") {
                        bool expect = detail::parse_bool(want, entry.id + "/" + key);
                        bool got = !is_hamiltonian(levi_graph(c), 2 * c.v).hamiltonian;
                        if (got != expect) fail(entry.id, key, want, got ? "true" : "false");
                    } else {
                        fail(entry.id, key, "a known expectation key", "unknown key");
                    }
                } catch (const BoundExceeded& e) {
                    fail(entry.id, key, want, std::string("bound exceeded: ") + e.what());
                }
            }
        }

        // Group-level constraints.
        auto cit = group.group_expect.find("count");
        if (cit != group.group_expect.end()) {
            ++report.checks_performed;
            long long expect = std::stoll(cit->second);
            if (static_cast<long long>(group.entries.size()) != expect)
                fail(group.id, "count", cit->second, std::to_string(group.entries.size()));
        }
        auto pit = group.group_expect.find("pairwise_nonisomorphic");
        if (pit != group.group_expect.end() && detail::parse_bool(pit->second, group.id)) {
            ++report.checks_performed;
            std::set<std::string> forms;
            for (const auto& entry : group.entries)
                forms.insert(canonical_form(entry.config).bytes);
            if (forms.size() != group.entries.size())
                fail(group.id, "pairwise_nonisomorphic", "all distinct",
                     std::to_string(forms.size()) + " distinct of " +
                         std::to_string(group.entries.size()));
        }
    }
    return report;
}

inline MismatchReport corpus_verify(const std::string& dir = "") {
    return corpus_verify(corpus_load(dir));
}

} // namespace symcfg
