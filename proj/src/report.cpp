#include "pistego/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace pistego {
namespace {

const char* channel_key(Channel c) {
  switch (c) {
    case Channel::Red: return "red";
    case Channel::Green: return "green";
    case Channel::Blue: break;
  }
  return "blue";
}

nlohmann::json machine_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace

std::string format_machine(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, res.ptr);
}

std::string format_human(double value) {
  if (std::isinf(value)) return value > 0 ? "∞" : "-∞";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", value);
  return buf;
}

std::string report_to_json(const StegoReport& report) {
  nlohmann::json j;
  j["width"] = report.width;
  j["height"] = report.height;
  j["bits_embedded"] = report.bits_embedded;
  j["bpp"] = report.bpp;
  j["channels"] = nlohmann::json::array();
  for (const ChannelReport& c : report.per_channel) {
    j["channels"].push_back({{"channel", channel_key(c.channel)},
                             {"mse", c.mse},
                             {"psnr_db", machine_number(c.psnr_db)}});
  }
  return j.dump(2) + "\n";
}

std::string report_to_csv(const StegoReport& report) {
  std::ostringstream out;
  out << "channel,mse,psnr_db,bpp,bits_embedded,width,height\n";
  for (const ChannelReport& c : report.per_channel) {
    out << channel_key(c.channel) << ',' << format_machine(c.mse) << ',' << format_machine(c.psnr_db)
        << ',' << format_machine(report.bpp) << ',' << report.bits_embedded << ',' << report.width << ','
        << report.height << '\n';
  }
  return out.str();
}

std::string report_to_text(const StegoReport& report, const std::string& row_label) {
  std::vector<std::vector<std::string>> table;
  table.push_back({"Cover Image", "Red MSE", "Red PSNR", "Green MSE", "Green PSNR", "Blue MSE",
                   "Blue PSNR", "BPP"});
  std::vector<std::string> row{row_label};
  for (const ChannelReport& c : report.per_channel) {
    row.push_back(format_human(c.mse));
    row.push_back(format_human(c.psnr_db));
  }
  row.push_back(format_human(report.bpp));
  table.push_back(std::move(row));
  return detail::align_table(table);
}

namespace detail {

namespace {

// Columns are measured in code points so "∞" counts as one cell.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s) w += (c & 0xC0u) != 0x80u;
  return w;
}

}  // namespace

std::string align_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], display_width(row[i]));
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string pad(widths[i] - display_width(row[i]), ' ');
      if (i == 0) {
        line += row[i] + pad;
      } else {
        line += "  " + pad + row[i];
      }
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace detail
}  // namespace pistego
