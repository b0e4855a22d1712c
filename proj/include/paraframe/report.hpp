#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "paraframe/geometry.hpp"

/// Machine-readable reports. Documents are assembled as ordered JSON values
/// and serialized by our own writers so that every double is printed with 17
/// significant digits and key order is fixed.
namespace paraframe {

using Record = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(const std::string& name);

/// Sections a point report may carry.
struct ReportSections {
  bool classification = false;
  bool tensors = false;    // F, Lee forms, N, N^
  bool curvature = false;
  bool residuals = false;  // axiom and identity residuals
};

/// Nested form: sparse tensors (entries with |v| > tol * max(1, |T|)).
Record point_record(const PointGeometry& pg, const ReportSections& sections, double tol);

/// Flat form with one dense column per tensor component (`R_0101` style keys).
Record flat_point_record(const PointGeometry& pg, const ReportSections& sections);

/// Parameter names of the model's chart: u0,u1,u2 for S1 and u1,u2,u3 for S2.
std::array<std::string, 3> parameter_names(ModelId model);

Record verify_record(const VerifyReport& rep);

/// Serializes `doc` as indented JSON with %.17g numbers.
void write_json(std::ostream& os, const Record& doc);

/// Header line from the keys of `header`, then one line per flat record. Keys
/// missing from a row leave the cell empty.
void write_csv(std::ostream& os, const Record& header, const std::vector<Record>& rows);

/// "key: value" lines, nested objects indented.
void write_text(std::ostream& os, const Record& doc);

std::string format_number(double v);

}  // namespace paraframe
