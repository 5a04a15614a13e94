#include "vseval/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace vseval {

namespace {

// Minimal JSON string escaping; labels and ids pass through as UTF-8.
std::string json_escape(const std::string& text) {
  std::string out;
  out.reserve(text.size() + 2);
  out.push_back('"');
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out.push_back(c);
        }
    }
  }
  out.push_back('"');
  return out;
}

std::string csv_escape(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string format_report_float(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", value);
  return buf;
}

std::string report_to_json(const EvaluationReport& report) {
  std::ostringstream out;
  // keys at every level are emitted in sorted order
  out << "{\n";
  out << "  \"config\": {\n";
  out << "    \"aggregation\": " << json_escape(aggregation_mode_name(report.aggregation))
      << ",\n";
  out << "    \"color_threshold\": " << format_report_float(report.config_echo.color_threshold)
      << ",\n";
  out << "    \"match_mode\": " << json_escape(match_mode_name(report.config_echo.match_mode))
      << ",\n";
  out << "    \"texture_threshold\": "
      << format_report_float(report.config_echo.texture_threshold) << "\n";
  out << "  },\n";
  out << "  \"overall_mean_f\": " << format_report_float(report.overall_mean_f) << ",\n";
  out << "  \"pairs\": [";
  for (std::size_t i = 0; i < report.pairs.size(); ++i) {
    const PairScores& pair = report.pairs[i];
    out << (i == 0 ? "\n" : ",\n");
    out << "    {\"auto\": " << json_escape(pair.auto_label)
        << ", \"f\": " << format_report_float(pair.f_measure)
        << ", \"n_auto\": " << pair.n_auto
        << ", \"n_matched\": " << pair.n_matched
        << ", \"n_user\": " << pair.n_user
        << ", \"precision\": " << format_report_float(pair.precision)
        << ", \"recall\": " << format_report_float(pair.recall)
        << ", \"user\": " << json_escape(pair.user_label)
        << ", \"video\": " << json_escape(pair.video_id) << "}";
  }
  out << "\n  ],\n";
  out << "  \"per_video_mean_f\": {";
  bool first = true;
  for (const auto& [video_id, mean_f] : report.per_video_mean_f) {
    out << (first ? "\n" : ",\n");
    first = false;
    out << "    " << json_escape(video_id) << ": " << format_report_float(mean_f);
  }
  out << "\n  }\n";
  out << "}\n";
  return out.str();
}

std::string report_to_csv(const EvaluationReport& report) {
  std::ostringstream out;
  out << "row,video,auto,user,n_auto,n_user,n_matched,precision,recall,f\n";
  for (const PairScores& pair : report.pairs) {
    out << "pair," << csv_escape(pair.video_id) << "," << csv_escape(pair.auto_label) << ","
        << csv_escape(pair.user_label) << "," << pair.n_auto << "," << pair.n_user << ","
        << pair.n_matched << "," << format_report_float(pair.precision) << ","
        << format_report_float(pair.recall) << "," << format_report_float(pair.f_measure)
        << "\n";
  }
  for (const auto& [video_id, mean_f] : report.per_video_mean_f) {
    out << "video_mean," << csv_escape(video_id) << ",,,,,,,," << format_report_float(mean_f)
        << "\n";
  }
  out << "overall,,,,,,,,," << format_report_float(report.overall_mean_f) << "\n";
  return out.str();
}

}  // namespace vseval
