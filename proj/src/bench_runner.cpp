#include "pistego/bench_runner.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pistego/error.hpp"
#include "pistego/image_io.hpp"
#include "pistego/report.hpp"

namespace pistego {
namespace {

// FNV-1a; keeps per-file payload streams stable when the corpus changes.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string method_title(MethodId m) {
  switch (m.tag()) {
    case MethodId::Tag::Method1: return "Method 1 (indicator Red)";
    case MethodId::Tag::Method3: return "Method 3 (cyclic indicator)";
    case MethodId::Tag::Method2: break;
  }
  return std::string("Method 2 (indicator ") + channel_name(*m.indicator()) + ")";
}

const char* channel_key(Channel c) {
  switch (c) {
    case Channel::Red: return "red";
    case Channel::Green: return "green";
    case Channel::Blue: break;
  }
  return "blue";
}

}  // namespace

std::optional<PayloadMode> parse_payload_mode(const std::string& s) {
  if (s == "random") return PayloadMode::Random;
  if (s == "zeros") return PayloadMode::Zeros;
  if (s == "ones") return PayloadMode::Ones;
  return std::nullopt;
}

std::vector<std::uint8_t> make_payload(PayloadMode mode, std::uint64_t bytes, std::uint64_t seed,
                                       std::uint64_t stream) {
  switch (mode) {
    case PayloadMode::Zeros: return std::vector<std::uint8_t>(bytes, 0x00);
    case PayloadMode::Ones: return std::vector<std::uint8_t>(bytes, 0xFF);
    case PayloadMode::Random: break;
  }
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(stream),
                    std::uint32_t(stream >> 32)};
  std::mt19937_64 rng(seq);
  std::vector<std::uint8_t> out(bytes);
  for (std::uint64_t i = 0; i < bytes; i += 8) {
    std::uint64_t word = rng();
    for (std::uint64_t j = i; j < std::min(bytes, i + 8); ++j, word >>= 8) out[j] = std::uint8_t(word);
  }
  return out;
}

std::vector<std::filesystem::path> list_covers(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const ImageFormat f = format_from_extension(entry.path());
    if (f == ImageFormat::Png || f == ImageFormat::Bmp) out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return out;
}

std::vector<BenchRow> run_bench(std::vector<std::filesystem::path> covers, const BenchConfig& config) {
  std::sort(covers.begin(), covers.end(), [](const auto& a, const auto& b) {
    return a.filename() == b.filename() ? a < b : a.filename() < b.filename();
  });

  std::vector<BenchRow> rows;
  for (const auto& path : covers) {
    const std::string name = path.filename().string();
    std::optional<RgbImage> cover;
    std::string load_error;
    try {
      cover = read_image(path);
    } catch (const std::exception& e) {
      load_error = e.what();
    }

    for (MethodId method : config.methods) {
      BenchRow row{name, method, std::nullopt, load_error};
      if (cover) {
        try {
          const auto bytes = max_secret_bytes(*cover, method);
          if (!bytes) throw StegoError(ErrorKind::InsufficientCapacity, "cover too small for a length header");
          const auto secret = make_payload(config.payload, *bytes, config.seed, fnv1a(name + "/" + method.label()));
          const EmbedResult result = embed(*cover, secret, method);
          row.report = full_report(*cover, result);
        } catch (const std::exception& e) {
          row.error = e.what();
        }
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_to_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "file,method,channel,mse,psnr_db,bpp\n";
  for (const BenchRow& row : rows) {
    if (!row.report) continue;
    for (const ChannelReport& c : row.report->per_channel) {
      out << row.file << ',' << row.method.label() << ',' << channel_key(c.channel) << ','
          << format_machine(c.mse) << ',' << format_machine(c.psnr_db) << ','
          << format_machine(row.report->bpp) << '\n';
    }
  }
  return out.str();
}

std::string bench_to_json(const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    nlohmann::json j{{"file", row.file}, {"method", row.method.label()}};
    if (row.report) {
      j["report"] = nlohmann::json::parse(report_to_json(*row.report));
    } else {
      j["error"] = row.error;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::string bench_to_text(const std::vector<BenchRow>& rows) {
  std::vector<MethodId> order;
  for (const BenchRow& row : rows) {
    if (std::find(order.begin(), order.end(), row.method) == order.end()) order.push_back(row.method);
  }

  std::string out;
  for (MethodId method : order) {
    if (!out.empty()) out += '\n';
    out += method_title(method) + '\n';
    std::vector<std::vector<std::string>> table;
    table.push_back({"Cover Image", "Red MSE", "Red PSNR", "Green MSE", "Green PSNR", "Blue MSE",
                     "Blue PSNR", "BPP"});
    std::vector<std::string> failures;
    for (const BenchRow& row : rows) {
      if (row.method != method) continue;
      if (!row.report) {
        failures.push_back(row.file + ": " + row.error);
        continue;
      }
      std::vector<std::string> cells{row.file};
      for (const ChannelReport& c : row.report->per_channel) {
        cells.push_back(format_human(c.mse));
        cells.push_back(format_human(c.psnr_db));
      }
      cells.push_back(format_human(row.report->bpp));
      table.push_back(std::move(cells));
    }
    out += detail::align_table(table);
    for (const auto& f : failures) out += "  error: " + f + '\n';
  }
  return out;
}

}  // namespace pistego
