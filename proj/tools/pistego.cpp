// pistego: command-line front end for the pixel-indicator steganography library.
//
// Exit codes: 0 ok, 1 I/O or decode failure, 2 insufficient capacity,
// 3 unsupported image format, 4 truncated stream (not a stego image or wrong
// method), 64 usage error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pistego/bench_runner.hpp"
#include "pistego/bitstream.hpp"
#include "pistego/error.hpp"
#include "pistego/image_io.hpp"
#include "pistego/methods.hpp"
#include "pistego/metrics.hpp"
#include "pistego/report.hpp"

namespace {

using namespace pistego;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitCapacity = 2;
constexpr int kExitFormat = 3;
constexpr int kExitTruncated = 4;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MethodFlags {
  int method = 0;
  std::string indicator;

  MethodId resolve() const {
    if (method == 2) {
      if (indicator.empty()) throw UsageError("--method 2 requires --indicator {R,G,B}");
      return *MethodId::parse("2" + indicator);
    }
    if (!indicator.empty()) throw UsageError("--indicator is only valid with --method 2");
    return method == 1 ? MethodId::method1() : MethodId::method3();
  }
};

void add_method_flags(CLI::App* cmd, MethodFlags& flags) {
  cmd->add_option("-m,--method", flags.method, "Embedding method")->required()->check(CLI::IsMember({1, 2, 3}));
  cmd->add_option("-i,--indicator", flags.indicator, "Indicator channel for method 2")
      ->check(CLI::IsMember({"R", "G", "B"}, CLI::ignore_case))
      ->transform([](std::string s) {
        for (auto& c : s) c = char(std::toupper(static_cast<unsigned char>(c)));
        return s;
      });
}

std::string render(const StegoReport& report, const std::string& format, const std::string& label) {
  if (format == "json") return report_to_json(report);
  if (format == "csv") return report_to_csv(report);
  return report_to_text(report, label);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InsufficientCapacity: return kExitCapacity;
    case ErrorKind::UnsupportedFormat: return kExitFormat;
    case ErrorKind::TruncatedStream: return kExitTruncated;
    default: return kExitFailure;
  }
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PISTEGO_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("PISTEGO_SEED must be an unsigned integer");
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pixel-indicator LSB steganography for lossless RGB images"};
  app.require_subcommand(1);

  MethodFlags method_flags;
  std::string cover_path, secret_path, message, out_path, stego_path, format = "text";
  bool no_opap = false;

  auto* embed_cmd = app.add_subcommand("embed", "Hide a secret in a cover image");
  embed_cmd->add_option("-c,--cover", cover_path, "Cover image (.png/.bmp)")->required();
  auto* secret_opt = embed_cmd->add_option("-s,--secret", secret_path, "File holding the secret bytes");
  auto* message_opt = embed_cmd->add_option("--message", message, "Inline secret text");
  secret_opt->excludes(message_opt);
  embed_cmd->add_option("-o,--out", out_path, "Stego image to write (.png/.bmp)")->required();
  embed_cmd->add_option("-f,--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
  embed_cmd->add_flag("--no-opap", no_opap, "Skip the optimal pixel adjustment step");
  add_method_flags(embed_cmd, method_flags);

  auto* extract_cmd = app.add_subcommand("extract", "Recover a secret from a stego image");
  extract_cmd->add_option("-s,--stego", stego_path, "Stego image")->required();
  extract_cmd->add_option("-o,--out", out_path, "Where to write the secret ('-' for stdout)")->required();
  add_method_flags(extract_cmd, method_flags);

  auto* capacity_cmd = app.add_subcommand("capacity", "Report how many bits a cover can carry");
  capacity_cmd->add_option("-c,--cover", cover_path, "Cover image")->required();
  capacity_cmd->add_option("-f,--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  add_method_flags(capacity_cmd, method_flags);

  auto* report_cmd = app.add_subcommand("report", "Per-channel MSE/PSNR and BPP of a cover/stego pair");
  report_cmd->add_option("-c,--cover", cover_path, "Cover image")->required();
  report_cmd->add_option("-s,--stego", stego_path, "Stego image")->required();
  report_cmd->add_option("-f,--format", format, "Report format")->check(CLI::IsMember({"text", "json", "csv"}));
  add_method_flags(report_cmd, method_flags);

  std::string corpus_dir, methods_list = "1,2G,3", payload_mode = "random", csv_path, json_path;
  std::optional<std::uint64_t> seed;
  auto* bench_cmd = app.add_subcommand("bench", "Full-capacity embedding over a directory of covers");
  bench_cmd->add_option("-d,--corpus", corpus_dir, "Directory of .png/.bmp covers")->required();
  bench_cmd->add_option("--methods", methods_list, "Comma-separated methods: 1, 2R, 2G, 2B, 3");
  bench_cmd->add_option("--payload", payload_mode, "Payload mode")
      ->check(CLI::IsMember({"random", "zeros", "ones"}));
  bench_cmd->add_option("--seed", seed, "Random payload seed (default: $PISTEGO_SEED or 0)");
  bench_cmd->add_option("--csv", csv_path, "Also write CSV rows here");
  bench_cmd->add_option("--json", json_path, "Also write JSON here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*embed_cmd) {
      const MethodId method = method_flags.resolve();
      if (secret_path.empty() && message_opt->count() == 0) throw UsageError("embed needs --secret or --message");
      const ImageFormat out_format = format_from_extension(out_path);
      if (out_format != ImageFormat::Png && out_format != ImageFormat::Bmp) {
        throw StegoError(ErrorKind::UnsupportedFormat, "output must be .png or .bmp: " + out_path);
      }
      const RgbImage cover = read_image(cover_path);
      const std::vector<std::uint8_t> secret =
          secret_path.empty() ? std::vector<std::uint8_t>(message.begin(), message.end()) : read_file(secret_path);
      const EmbedResult result = embed(cover, secret, method, EmbedOptions{!no_opap});
      write_image(out_path, result.stego);
      std::cout << render(full_report(cover, result), format, std::filesystem::path(cover_path).filename().string());
      return kExitOk;
    }

    if (*extract_cmd) {
      const MethodId method = method_flags.resolve();
      const std::vector<std::uint8_t> secret = extract(read_image(stego_path), method);
      if (out_path == "-") {
        std::cout.write(reinterpret_cast<const char*>(secret.data()), std::streamsize(secret.size()));
      } else {
        write_file(out_path, secret);
        std::cerr << "recovered " << secret.size() << " bytes\n";
      }
      return kExitOk;
    }

    if (*capacity_cmd) {
      const MethodId method = method_flags.resolve();
      const RgbImage cover = read_image(cover_path);
      const std::uint64_t bits = capacity(cover, method);
      const std::uint64_t max_bytes = max_secret_bytes(cover, method).value_or(0);
      if (format == "json") {
        std::cout << "{\"capacity_bits\": " << bits << ", \"max_secret_bytes\": " << max_bytes
                  << ", \"bpp\": " << format_machine(bpp(bits, cover.width(), cover.height())) << "}\n";
      } else {
        std::cout << "capacity_bits " << bits << "\nmax_secret_bytes " << max_bytes << "\nbpp "
                  << format_human(bpp(bits, cover.width(), cover.height())) << '\n';
      }
      return kExitOk;
    }

    if (*report_cmd) {
      const MethodId method = method_flags.resolve();
      const RgbImage cover = read_image(cover_path);
      const RgbImage stego = read_image(stego_path);
      const std::uint64_t bits = kLengthHeaderBits + 8 * std::uint64_t(extract(stego, method).size());
      std::cout << render(full_report(cover, stego, bits), format,
                          std::filesystem::path(stego_path).filename().string());
      return kExitOk;
    }

    if (*bench_cmd) {
      BenchConfig config;
      config.seed = seed ? *seed : default_seed();
      config.payload = *parse_payload_mode(payload_mode);
      std::stringstream list(methods_list);
      for (std::string token; std::getline(list, token, ',');) {
        const auto m = MethodId::parse(token);
        if (!m) throw UsageError("unknown method '" + token + "' (use 1, 2R, 2G, 2B or 3)");
        config.methods.push_back(*m);
      }
      if (config.methods.empty()) throw UsageError("--methods is empty");

      const auto rows = run_bench(list_covers(corpus_dir), config);
      std::cout << bench_to_text(rows);
      if (!csv_path.empty()) {
        const std::string csv = bench_to_csv(rows);
        write_file(csv_path, std::span(reinterpret_cast<const std::uint8_t*>(csv.data()), csv.size()));
      }
      if (!json_path.empty()) {
        const std::string json = bench_to_json(rows);
        write_file(json_path, std::span(reinterpret_cast<const std::uint8_t*>(json.data()), json.size()));
      }
      std::size_t ok = 0;
      for (const auto& row : rows) {
        if (row.report) ++ok;
        else std::cerr << row.file << " [" << row.method.label() << "]: " << row.error << '\n';
      }
      if (ok == 0) {
        std::cerr << "no cover could be processed\n";
        return kExitFailure;
      }
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: " << e.what() << " (required " << e.required_bits() << ", available "
              << e.available_bits() << ")\n";
    return kExitCapacity;
  } catch (const StegoError& e) {
    std::cerr << "error [" << to_string(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}
