#include "perispec/io/report.hpp"

#include "perispec/conventions.hpp"
#include "perispec/error.hpp"

namespace perispec {

Json convention_block() {
  namespace cv = conventions;
  Json c;
  c["clifford_sign"] = cv::kCliffordSign;
  c["clifford"] = cv::kCliffordText;
  c["index_sign"] = cv::kIndexSign;
  c["index"] = cv::kIndexText;
  c["log_branch"] = cv::kDefaultLogBranch;
  c["branch"] = cv::kBranchText;
  return c;
}

Json make_report(const std::string& command, Json args, Json results, Json tolerances,
                 double elapsed_ms) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = {{"name", command}, {"args", std::move(args)}};
  r["conventions"] = convention_block();
  r["results"] = std::move(results);
  r["tolerances"] = std::move(tolerances);
  r["timing"] = {{"elapsed_ms", elapsed_ms}};
  return r;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

Json parse_report(const std::string& text) {
  Json r;
  try {
    r = Json::parse(text);
  } catch (const Json::parse_error& e) {
    // Byte offset → line/column.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(e.what(), line, col);
  }
  if (!r.is_object() || !r.contains("schema") || r["schema"] != kReportSchema) {
    throw ParseError("not a perispec report (schema tag missing or unknown)", 1, 1);
  }
  for (const char* key : {"command", "conventions", "results", "tolerances", "timing"}) {
    if (!r.contains(key)) throw ParseError(std::string("report lacks '") + key + "'", 1, 1);
  }
  return r;
}

}  // namespace perispec
