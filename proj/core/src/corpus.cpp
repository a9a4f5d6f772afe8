#include "segmatch/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

#include "segmatch/error.hpp"
#include "segmatch/binio.hpp"

namespace segmatch::corpus {

using nlohmann::json;

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n\f\v");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n\f\v");
    return std::string(s.substr(first, last - first + 1));
}

[[noreturn]] void fail_at(const std::filesystem::path& path, std::size_t line,
                          const std::string& message) {
    throw ValidationError(path.string() + ":" + std::to_string(line) + ": " + message);
}

/// Calls `fn(line_number, parsed_object)` for every non-blank line.
template <typename Fn>
void for_each_record(const std::filesystem::path& path, Fn&& fn) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open file: " + path.string());
    }
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) {
            continue;
        }
        json record = json::parse(line, nullptr, false);
        if (record.is_discarded()) {
            fail_at(path, lineno, "malformed line: not valid JSON");
        }
        if (!record.is_object()) {
            fail_at(path, lineno, "malformed line: expected a JSON object");
        }
        fn(lineno, record);
    }
}

std::string require_string(const json& record, const char* key,
                           const std::filesystem::path& path, std::size_t lineno) {
    if (!record.contains(key) || !record[key].is_string()) {
        fail_at(path, lineno, std::string("missing or non-string field \"") + key + "\"");
    }
    return record[key].get<std::string>();
}

} // namespace

bool AnnotationSet::has(std::string_view requirement_id) const {
    return entries_.find(std::string(requirement_id)) != entries_.end();
}

const std::set<std::string>* AnnotationSet::find(std::string_view requirement_id) const {
    const auto it = entries_.find(std::string(requirement_id));
    return it == entries_.end() ? nullptr : &it->second;
}

void AnnotationSet::set(std::string requirement_id, std::set<std::string> segment_ids) {
    entries_[std::move(requirement_id)] = std::move(segment_ids);
}

std::size_t AnnotationSet::link_count() const {
    std::size_t n = 0;
    for (const auto& [req, segs] : entries_) {
        n += segs.size();
    }
    return n;
}

const Segment* Corpus::find_segment(std::string_view id) const {
    for (const auto& s : segments) {
        if (s.id == id) {
            return &s;
        }
    }
    return nullptr;
}

const Requirement* Corpus::find_requirement(std::string_view id) const {
    for (const auto& r : requirements) {
        if (r.id == id) {
            return &r;
        }
    }
    return nullptr;
}

std::vector<Report> Corpus::reports() const {
    std::vector<Report> out;
    std::unordered_map<std::string, std::size_t> index;
    for (const auto& s : segments) {
        const auto it = index.find(s.report_id);
        if (it == index.end()) {
            index.emplace(s.report_id, out.size());
            out.push_back(Report{s.report_id, s.report_id, 1});
        } else {
            ++out[it->second].segment_count;
        }
    }
    return out;
}

std::vector<std::string> Corpus::segment_ids_of_report(std::string_view report_id) const {
    std::vector<std::string> out;
    for (const auto& s : segments) {
        if (s.report_id == report_id) {
            out.push_back(s.id);
        }
    }
    return out;
}

std::unordered_map<std::string, std::string> Corpus::segment_report_map() const {
    std::unordered_map<std::string, std::string> out;
    out.reserve(segments.size());
    for (const auto& s : segments) {
        out.emplace(s.id, s.report_id);
    }
    return out;
}

std::vector<Segment> load_segments(const std::filesystem::path& path) {
    std::vector<Segment> out;
    std::unordered_set<std::string> seen_ids;
    // (report_id, position) pairs must be unique
    std::unordered_map<std::string, std::unordered_set<std::int64_t>> positions;

    for_each_record(path, [&](std::size_t lineno, const json& record) {
        Segment s;
        s.id = require_string(record, "id", path, lineno);
        s.report_id = require_string(record, "report_id", path, lineno);
        if (!record.contains("position") || !record["position"].is_number_integer()) {
            fail_at(path, lineno, "missing or non-integer field \"position\"");
        }
        s.position = record["position"].get<std::int64_t>();
        s.text = require_string(record, "text", path, lineno);

        if (s.id.empty()) {
            fail_at(path, lineno, "empty segment id");
        }
        if (s.report_id.empty()) {
            fail_at(path, lineno, "empty report_id");
        }
        if (s.position < 0) {
            fail_at(path, lineno, "negative position for segment \"" + s.id + "\"");
        }
        if (trim(s.text).empty()) {
            fail_at(path, lineno, "empty text for segment \"" + s.id + "\"");
        }
        if (!seen_ids.insert(s.id).second) {
            fail_at(path, lineno, "duplicate segment id \"" + s.id + "\"");
        }
        if (!positions[s.report_id].insert(s.position).second) {
            fail_at(path, lineno, "duplicate position " + std::to_string(s.position) +
                                      " in report \"" + s.report_id + "\"");
        }
        out.push_back(std::move(s));
    });
    return out;
}

std::vector<Requirement> load_requirements(const std::filesystem::path& path) {
    std::vector<Requirement> out;
    std::unordered_set<std::string> seen_ids;

    for_each_record(path, [&](std::size_t lineno, const json& record) {
        Requirement r;
        r.id = require_string(record, "id", path, lineno);
        r.standard_ref = require_string(record, "standard_ref", path, lineno);
        r.text = require_string(record, "text", path, lineno);

        if (r.id.empty()) {
            fail_at(path, lineno, "empty requirement id");
        }
        if (trim(r.text).empty()) {
            fail_at(path, lineno, "empty text for requirement \"" + r.id + "\"");
        }
        if (!seen_ids.insert(r.id).second) {
            fail_at(path, lineno, "duplicate requirement id \"" + r.id + "\"");
        }
        out.push_back(std::move(r));
    });
    return out;
}

AnnotationSet load_annotations(const std::filesystem::path& path,
                               const std::vector<Segment>& segments,
                               const std::vector<Requirement>& requirements,
                               std::vector<std::string>* warnings) {
    std::unordered_set<std::string> segment_ids;
    segment_ids.reserve(segments.size());
    for (const auto& s : segments) {
        segment_ids.insert(s.id);
    }
    std::unordered_set<std::string> requirement_ids;
    requirement_ids.reserve(requirements.size());
    for (const auto& r : requirements) {
        requirement_ids.insert(r.id);
    }

    const auto warn = [&](std::size_t lineno, const std::string& message) {
        if (warnings != nullptr) {
            warnings->push_back(path.string() + ":" + std::to_string(lineno) + ": " + message);
        }
    };

    AnnotationSet::Map entries;
    for_each_record(path, [&](std::size_t lineno, const json& record) {
        const std::string req_id = require_string(record, "requirement_id", path, lineno);
        if (!record.contains("segment_ids") || !record["segment_ids"].is_array()) {
            fail_at(path, lineno, "missing or non-array field \"segment_ids\"");
        }
        if (!requirement_ids.contains(req_id)) {
            fail_at(path, lineno, "dangling requirement_id \"" + req_id + "\"");
        }
        if (entries.contains(req_id)) {
            fail_at(path, lineno, "duplicate annotation record for requirement \"" + req_id + "\"");
        }

        std::set<std::string> segs;
        for (const auto& element : record["segment_ids"]) {
            if (!element.is_string()) {
                fail_at(path, lineno, "non-string segment id for requirement \"" + req_id + "\"");
            }
            const std::string seg_id = element.get<std::string>();
            if (!segment_ids.contains(seg_id)) {
                fail_at(path, lineno, "dangling segment_id \"" + seg_id +
                                          "\" for requirement \"" + req_id + "\"");
            }
            if (!segs.insert(seg_id).second) {
                warn(lineno, "duplicate segment id \"" + seg_id + "\" for requirement \"" +
                                 req_id + "\" (deduplicated)");
            }
        }
        if (segs.empty()) {
            warn(lineno, "requirement \"" + req_id + "\" has an empty gold set");
        }
        entries.emplace(req_id, std::move(segs));
    });
    return AnnotationSet(std::move(entries));
}

Corpus load_corpus(const std::filesystem::path& segments_path,
                   const std::filesystem::path& requirements_path,
                   const std::filesystem::path& annotations_path,
                   std::vector<std::string>* warnings) {
    Corpus c;
    c.segments = load_segments(segments_path);
    c.requirements = load_requirements(requirements_path);
    if (!annotations_path.empty()) {
        c.annotations = load_annotations(annotations_path, c.segments, c.requirements, warnings);
    }
    return c;
}

void save_segments(const std::filesystem::path& path, const std::vector<Segment>& segments) {
    std::ostringstream out;
    for (const auto& s : segments) {
        json record;
        record["id"] = s.id;
        record["report_id"] = s.report_id;
        record["position"] = s.position;
        record["text"] = s.text;
        out << record.dump() << '\n';
    }
    io::write_file_atomic(path, out.str());
}

void save_requirements(const std::filesystem::path& path,
                       const std::vector<Requirement>& requirements) {
    std::ostringstream out;
    for (const auto& r : requirements) {
        json record;
        record["id"] = r.id;
        record["standard_ref"] = r.standard_ref;
        record["text"] = r.text;
        out << record.dump() << '\n';
    }
    io::write_file_atomic(path, out.str());
}

void save_annotations(const std::filesystem::path& path, const AnnotationSet& annotations) {
    std::ostringstream out;
    for (const auto& [req_id, segs] : annotations.entries()) {
        json record;
        record["requirement_id"] = req_id;
        record["segment_ids"] = segs;
        out << record.dump() << '\n';
    }
    io::write_file_atomic(path, out.str());
}

} // namespace segmatch::corpus
