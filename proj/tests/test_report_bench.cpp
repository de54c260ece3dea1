#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include <json.hpp>

#include "pistego/bench_runner.hpp"
#include "pistego/image_io.hpp"
#include "pistego/report.hpp"
#include "test_support.hpp"

using namespace pistego;
using pistego::testing::random_image;
using pistego::testing::TempDir;

namespace {

StegoReport sample_report() {
  StegoReport r{};
  r.per_channel = {ChannelReport{Channel::Red, 0.0, std::numeric_limits<double>::infinity()},
                   ChannelReport{Channel::Green, 0.75, psnr(0.75)},
                   ChannelReport{Channel::Blue, 1.17, psnr(1.17)}};
  r.bits_embedded = 294912;
  r.width = 256;
  r.height = 256;
  r.bpp = 4.5;
  return r;
}

}  // namespace

TEST_CASE("number formatting") {
  CHECK(format_machine(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(format_machine(4.5) == "4.5");
  CHECK(format_human(std::numeric_limits<double>::infinity()) == "∞");
  CHECK(format_human(psnr(1.17)) == "47.45");
  CHECK(format_human(psnr(0.75)) == "49.38");
  CHECK(format_human(0.0) == "0.00");
}

TEST_CASE("report JSON has the fixed field names") {
  const auto j = nlohmann::json::parse(report_to_json(sample_report()));
  CHECK(j["width"] == 256);
  CHECK(j["height"] == 256);
  CHECK(j["bits_embedded"] == 294912);
  CHECK(j["bpp"] == 4.5);
  REQUIRE(j["channels"].size() == 3);
  CHECK(j["channels"][0]["channel"] == "red");
  CHECK(j["channels"][0]["mse"] == 0.0);
  CHECK(j["channels"][0]["psnr_db"] == "inf");
  CHECK(j["channels"][1]["mse"] == 0.75);
}

TEST_CASE("report CSV") {
  const std::string csv = report_to_csv(sample_report());
  CHECK(csv.rfind("channel,mse,psnr_db,bpp,bits_embedded,width,height\n", 0) == 0);
  CHECK(csv.find("red,0,inf,4.5,294912,256,256\n") != std::string::npos);
  CHECK(csv.find("green,0.75,") != std::string::npos);
}

TEST_CASE("report text uses two decimals and the infinity sign") {
  const std::string text = report_to_text(sample_report(), "Lena");
  CHECK(text.find("Lena") != std::string::npos);
  CHECK(text.find("∞") != std::string::npos);
  CHECK(text.find("49.38") != std::string::npos);
  CHECK(text.find("47.45") != std::string::npos);
  CHECK(text.find("4.50") != std::string::npos);
}

TEST_CASE("payload generator") {
  CHECK(make_payload(PayloadMode::Zeros, 5, 0, 0) == std::vector<std::uint8_t>(5, 0));
  CHECK(make_payload(PayloadMode::Ones, 3, 0, 0) == std::vector<std::uint8_t>(3, 0xFF));
  CHECK(make_payload(PayloadMode::Random, 37, 9, 1) == make_payload(PayloadMode::Random, 37, 9, 1));
  CHECK(make_payload(PayloadMode::Random, 37, 9, 1) != make_payload(PayloadMode::Random, 37, 10, 1));
  CHECK(make_payload(PayloadMode::Random, 0, 9, 1).empty());
  CHECK(parse_payload_mode("random") == PayloadMode::Random);
  CHECK_FALSE(parse_payload_mode("noise"));
}

TEST_CASE("bench runs every cover under every method in file order") {
  TempDir dir("bench");
  std::mt19937_64 rng(1);
  write_image(dir / "b.png", random_image(48, 48, rng));
  write_image(dir / "a.bmp", random_image(48, 48, rng));
  write_file(dir / "c.png", std::vector<std::uint8_t>{1, 2, 3});  // broken
  write_file(dir / "notes.txt", std::vector<std::uint8_t>{'x'});

  const auto covers = list_covers(dir.path());
  REQUIRE(covers.size() == 3);
  CHECK(covers[0].filename() == "a.bmp");

  BenchConfig config{{MethodId::method1(), MethodId::method3()}, PayloadMode::Random, 42};
  const auto rows = run_bench(covers, config);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].file == "a.bmp");
  CHECK(rows[0].method == MethodId::method1());
  CHECK(rows[1].method == MethodId::method3());
  CHECK(rows[2].file == "b.png");
  CHECK_FALSE(rows[4].report);
  CHECK_FALSE(rows[4].error.empty());
  for (int i = 0; i < 4; ++i) {
    REQUIRE(rows[std::size_t(i)].report);
    CHECK(rows[std::size_t(i)].report->bpp > 4.0);
  }
  CHECK(rows[0].report->per_channel[0].mse == 0.0);

  const auto again = run_bench(covers, config);
  CHECK(bench_to_csv(again) == bench_to_csv(rows));
  CHECK(bench_to_json(again) == bench_to_json(rows));
  CHECK(bench_to_text(again) == bench_to_text(rows));

  const std::string csv = bench_to_csv(rows);
  CHECK(csv.rfind("file,method,channel,mse,psnr_db,bpp\n", 0) == 0);
  CHECK(csv.find("a.bmp,1,red,0,inf,") != std::string::npos);

  const std::string text = bench_to_text(rows);
  CHECK(text.find("Method 1") != std::string::npos);
  CHECK(text.find("Method 3") != std::string::npos);
  CHECK(text.find("error: c.png") != std::string::npos);
}
