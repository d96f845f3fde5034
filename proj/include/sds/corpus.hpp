#pragma once

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sds/canonical.hpp"
#include "sds/difference.hpp"
#include "sds/format.hpp"

namespace sds {

enum class RecordStatus { family, none, open, external };

// One table row: a parameter set with either explicit base blocks, a
// non-existence marker ("None"), an unresolved marker ("?"), or a pointer to
// families catalogued elsewhere ("external"). The tag is the provenance
// column, kept opaque.
struct CorpusRecord {
    ParameterSet params;
    RecordStatus status;
    std::optional<Family> family;
    std::string tag;
    int source_table = 0;
};

inline CorpusRecord parse_record(const std::string& line) {
    const auto bar1 = line.find('|');
    if (bar1 == std::string::npos) throw ParseError("expected '|' after parameters", line.size() + 1);
    const auto bar2 = line.find('|', bar1 + 1);
    if (bar2 == std::string::npos) throw ParseError("expected '|' before tag", line.size() + 1);

    auto trim = [](std::string s) {
        const auto from = s.find_first_not_of(" \t");
        if (from == std::string::npos) return std::string();
        const auto to = s.find_last_not_of(" \t");
        return s.substr(from, to - from + 1);
    };

    const std::string params_text = trim(line.substr(0, bar1));
    const std::string status_text = trim(line.substr(bar1 + 1, bar2 - bar1 - 1));
    const std::string tag = trim(line.substr(bar2 + 1));
    if (tag.empty()) throw ParseError("empty tag", bar2 + 2);

    ParameterSet params = parse_params(params_text);

    CorpusRecord record{params, RecordStatus::none, std::nullopt, tag, 0};
    if (status_text == "None") {
        record.status = RecordStatus::none;
    } else if (status_text == "?") {
        record.status = RecordStatus::open;
    } else if (status_text == "external") {
        record.status = RecordStatus::external;
    } else {
        record.status = RecordStatus::family;
        Family family = parse_family(status_text, params.v());
        if (family.block_count() != params.block_count())
            throw ParseError("block count does not match parameters", bar1 + 2);
        std::vector<int> sizes;
        for (const Block& b : family.blocks()) sizes.push_back(b.size());
        std::vector<int> expected = params.sizes();
        std::sort(sizes.begin(), sizes.end());
        std::sort(expected.begin(), expected.end());
        if (sizes != expected)
            throw ParseError("block sizes do not match parameters", bar1 + 2);
        record.family = std::move(family);
    }
    return record;
}

inline std::string render_record(const CorpusRecord& record) {
    std::string status;
    switch (record.status) {
        case RecordStatus::family: status = render_family(*record.family); break;
        case RecordStatus::none: status = "None"; break;
        case RecordStatus::open: status = "?"; break;
        case RecordStatus::external: status = "external"; break;
    }
    return render_params(record.params) + " | " + status + " | " + record.tag;
}

inline std::vector<CorpusRecord> load_corpus_file(const std::string& path, int source_table) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path);
    std::vector<CorpusRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') blank = false;
        if (blank) continue;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        try {
            CorpusRecord record = parse_record(line);
            record.source_table = source_table;
            records.push_back(std::move(record));
        } catch (const ParseError& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

// The shipped dataset: table1.txt plus table3.txt through table6.txt.
inline std::vector<CorpusRecord> load_corpus_dir(const std::string& dir) {
    std::vector<CorpusRecord> all;
    for (int table : {1, 3, 4, 5, 6}) {
        const std::string path = dir + "/table" + std::to_string(table) + ".txt";
        std::vector<CorpusRecord> records = load_corpus_file(path, table);
        all.insert(all.end(), std::make_move_iterator(records.begin()),
                   std::make_move_iterator(records.end()));
    }
    return all;
}

struct CorpusFailure {
    std::size_t record_index = 0;
    std::string reason;
    std::optional<std::pair<int, int>> witness;  // (shift, observed count)
};

struct CorpusReport {
    int total_records = 0;
    int family_records = 0;
    int none_records = 0;
    int open_records = 0;
    int external_records = 0;
    int verified = 0;
    int normal_form_fixpoints = 0;
    std::vector<std::pair<std::size_t, std::size_t>> equivalence_duplicates;
    std::vector<CorpusFailure> failures;
};

struct VerifyOptions {
    bool check_fixpoint = true;
    bool check_equivalence = true;
};

// Checks every family record against its printed parameters, optionally that
// the printed blocks are literally the normal form, and optionally that no
// two records of one parameter set are equivalent. Findings are report data,
// never exceptions.
inline CorpusReport verify_corpus(const std::vector<CorpusRecord>& records,
                                  VerifyOptions options = {}) {
    CorpusReport report;
    report.total_records = static_cast<int>(records.size());
    std::map<std::vector<int>, std::vector<std::size_t>> by_params;

    for (std::size_t idx = 0; idx < records.size(); ++idx) {
        const CorpusRecord& record = records[idx];
        switch (record.status) {
            case RecordStatus::none: ++report.none_records; continue;
            case RecordStatus::open: ++report.open_records; continue;
            case RecordStatus::external: ++report.external_records; continue;
            case RecordStatus::family: break;
        }
        ++report.family_records;
        const Family& family = *record.family;
        VerificationReport ver = verify_sds(family);
        if (!ver.is_sds) {
            report.failures.push_back(
                {idx, "difference table not constant", ver.witness});
            continue;
        }
        if (*ver.lambda != record.params.lambda()) {
            report.failures.push_back(
                {idx,
                 "index mismatch: computed " + std::to_string(*ver.lambda) + ", recorded " +
                     std::to_string(record.params.lambda()),
                 std::nullopt});
            continue;
        }
        ++report.verified;

        if (options.check_fixpoint) {
            if (is_normal_form(family))
                ++report.normal_form_fixpoints;
            else
                report.failures.push_back(
                    {idx, "not a normal-form fixpoint: canonical form is " +
                              render_family(normal_form(family).representative),
                     std::nullopt});
        }

        std::vector<int> key{record.params.v(), record.params.lambda()};
        for (int k : record.params.sizes()) key.push_back(k);
        by_params[key].push_back(idx);
    }

    if (options.check_equivalence) {
        for (const auto& [key, indices] : by_params) {
            if (indices.size() < 2) continue;
            std::vector<detail::MinimalOrbit> orbits;
            orbits.reserve(indices.size());
            for (std::size_t idx : indices)
                orbits.push_back(detail::minimal_orbit_set(*records[idx].family));
            for (std::size_t i = 0; i < indices.size(); ++i) {
                for (std::size_t j = i + 1; j < indices.size(); ++j) {
                    bool same = false;
                    for (const auto& [enc, fam] : orbits[i].minimizers)
                        if (orbits[j].minimizers.count(enc) != 0) {
                            same = true;
                            break;
                        }
                    if (same)
                        report.equivalence_duplicates.emplace_back(indices[i], indices[j]);
                }
            }
        }
    }
    return report;
}

// Expected equivalence-class counts per parameter set; nullopt for unknown.
struct CensusEntry {
    ParameterSet params;
    std::optional<int> classes;
};

inline std::vector<CensusEntry> load_census_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open census file: " + path);
    std::vector<CensusEntry> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string params_text, count_text;
        if (!(ss >> params_text)) continue;
        if (!(ss >> count_text))
            throw std::runtime_error(path + ":" + std::to_string(line_no) + ": missing count");
        CensusEntry entry{parse_params(params_text), std::nullopt};
        if (count_text != "?") entry.classes = std::stoi(count_text);
        entries.push_back(std::move(entry));
    }
    return entries;
}

}  // namespace sds
