#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pistego/methods.hpp"
#include "pistego/metrics.hpp"

namespace pistego {

enum class PayloadMode { Random, Zeros, Ones };

std::optional<PayloadMode> parse_payload_mode(const std::string& s);

/// Secret of exactly `bytes` bytes. Random mode draws raw mt19937_64 output
/// seeded from (seed, stream) so results are platform independent.
std::vector<std::uint8_t> make_payload(PayloadMode mode, std::uint64_t bytes,
                                       std::uint64_t seed, std::uint64_t stream);

struct BenchConfig {
  std::vector<MethodId> methods;
  PayloadMode payload = PayloadMode::Random;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::string file;  // file name, no directory
  MethodId method;
  std::optional<StegoReport> report;
  std::string error;  // set when report is empty
};

/// Full-capacity embed of every cover under every method. Covers are sorted
/// by file name; rows come out in (file, method) order regardless of how the
/// work is scheduled. Per-file failures become rows with `error` set.
std::vector<BenchRow> run_bench(std::vector<std::filesystem::path> covers, const BenchConfig& config);

/// Lossless image files (.png/.bmp) directly inside dir.
std::vector<std::filesystem::path> list_covers(const std::filesystem::path& dir);

/// CSV columns: file,method,channel,mse,psnr_db,bpp (three rows per cover x method).
std::string bench_to_csv(const std::vector<BenchRow>& rows);
std::string bench_to_json(const std::vector<BenchRow>& rows);
/// One table per method, shaped like a per-method results table.
std::string bench_to_text(const std::vector<BenchRow>& rows);

}  // namespace pistego
