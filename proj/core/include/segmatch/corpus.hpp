#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace segmatch::corpus {

/// One retrievable text unit of a financial report.
struct Segment {
    std::string id;
    std::string report_id;
    std::int64_t position = 0; // order within the report, non-negative
    std::string text;

    bool operator==(const Segment&) const = default;
};

/// One checklist item of an accounting standard; the query side.
struct Requirement {
    std::string id;
    std::string standard_ref;
    std::string text;

    bool operator==(const Requirement&) const = default;
};

/// Derived per-report summary. Reports are not loaded from a separate file;
/// they are the distinct report_ids of the segments file, in file order.
struct Report {
    std::string id;
    std::string name; // equals id unless renamed by the caller
    std::size_t segment_count = 0;

    bool operator==(const Report&) const = default;
};

/// Gold segment sets per requirement. A requirement absent from the map is
/// distinct from one mapped to an empty set.
class AnnotationSet {
public:
    using Map = std::map<std::string, std::set<std::string>>;

    AnnotationSet() = default;
    explicit AnnotationSet(Map entries) : entries_(std::move(entries)) {}

    bool has(std::string_view requirement_id) const;
    /// nullptr when the requirement has no entry.
    const std::set<std::string>* find(std::string_view requirement_id) const;
    void set(std::string requirement_id, std::set<std::string> segment_ids);

    const Map& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    /// Total number of (requirement, segment) links.
    std::size_t link_count() const;

    bool operator==(const AnnotationSet&) const = default;

private:
    Map entries_;
};

/// Immutable after loading; safe to share across threads.
struct Corpus {
    std::vector<Segment> segments;
    std::vector<Requirement> requirements;
    AnnotationSet annotations;

    const Segment* find_segment(std::string_view id) const;
    const Requirement* find_requirement(std::string_view id) const;
    /// Distinct report ids in segment file order.
    std::vector<Report> reports() const;
    /// Segment ids of one report, in file order.
    std::vector<std::string> segment_ids_of_report(std::string_view report_id) const;
    /// Maps every segment id to its report id.
    std::unordered_map<std::string, std::string> segment_report_map() const;
};

// Loaders for the line-delimited record formats (one JSON object per line,
// UTF-8). Validation failures raise ValidationError with file:line context.

std::vector<Segment> load_segments(const std::filesystem::path& path);

std::vector<Requirement> load_requirements(const std::filesystem::path& path);

/// Requires the corpus to be loaded already; every referenced id must
/// resolve. Duplicate segment ids inside one record are deduplicated with a
/// warning appended to `warnings` (when given).
AnnotationSet load_annotations(const std::filesystem::path& path,
                               const std::vector<Segment>& segments,
                               const std::vector<Requirement>& requirements,
                               std::vector<std::string>* warnings = nullptr);

/// Convenience: loads all three files into one corpus. The annotations path
/// may be empty, leaving the annotation set empty.
Corpus load_corpus(const std::filesystem::path& segments_path,
                   const std::filesystem::path& requirements_path,
                   const std::filesystem::path& annotations_path = {},
                   std::vector<std::string>* warnings = nullptr);

// Serializers; load(save(x)) round-trips field for field.

void save_segments(const std::filesystem::path& path, const std::vector<Segment>& segments);
void save_requirements(const std::filesystem::path& path,
                       const std::vector<Requirement>& requirements);
void save_annotations(const std::filesystem::path& path, const AnnotationSet& annotations);

} // namespace segmatch::corpus
