#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tsclust/errors.hpp"

namespace tsclust {

/// One line of a label-first delimited text file: an integer class label
/// followed by the observations of a single series.
struct LabeledRecord {
    int label = 0;
    std::vector<double> values;

    bool operator==(const LabeledRecord&) const = default;
};

/// An ordered collection of equal-length records, in file order.
/// Record i corresponds to series number i+1 (1-based numbering).
struct Dataset {
    std::vector<LabeledRecord> records;
    std::size_t series_length = 0;

    std::size_t size() const { return records.size(); }

    /// Values only, file order, one row per record.
    std::vector<std::vector<double>> series_matrix() const;
};

/// Parse a single non-blank line. The first token is the class label
/// (real-valued tokens such as "2.0" are truncated toward zero), the
/// remaining tokens are the observations. Commas and whitespace both act
/// as delimiters, and may be mixed within one line.
///
/// Throws MalformedLine on a non-numeric token, a non-finite value, or
/// fewer than two tokens.
LabeledRecord parse_record(const std::string& line);

/// Render a record back to text, comma-delimited, with enough digits to
/// round-trip every value exactly through parse_record.
std::string render_record(const LabeledRecord& record);

/// Load a file of records, keeping only those whose label matches
/// class_filter (all records when absent). Blank lines are skipped.
///
/// Throws MalformedLine (with the 1-based line number), RaggedLengths if
/// two surviving records differ in length, and EmptySelection if nothing
/// survives the filter.
Dataset load_dataset(const std::string& path,
                     std::optional<int> class_filter = std::nullopt);

} // namespace tsclust
