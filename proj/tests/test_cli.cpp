#include <doctest.h>

#include <random>

#include <json.hpp>

#include "cli_runner.hpp"
#include "pistego/image_io.hpp"
#include "test_support.hpp"

using namespace pistego;
using pistego::testing::random_bytes;
using pistego::testing::random_image;
using pistego::testing::run_cli;
using pistego::testing::shell_quote;
using pistego::testing::slurp;
using pistego::testing::TempDir;

namespace {

std::string q(const std::filesystem::path& p) { return shell_quote(p.string()); }

}  // namespace

TEST_CASE("embed then extract reproduces the secret for every method") {
  TempDir dir("cli");
  std::mt19937_64 rng(3);
  write_image(dir / "cover.png", random_image(64, 48, rng));
  const auto secret = random_bytes(700, rng);
  write_file(dir / "secret.bin", secret);

  for (const std::string flags : {"--method 1", "--method 2 --indicator R", "--method 2 --indicator g",
                                  "--method 2 --indicator B", "--method 3"}) {
    CAPTURE(flags);
    auto r = run_cli("embed --cover " + q(dir / "cover.png") + " --secret " + q(dir / "secret.bin") +
                         " --out " + q(dir / "stego.png") + " " + flags,
                     dir.path());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("BPP") != std::string::npos);

    r = run_cli("extract --stego " + q(dir / "stego.png") + " --out " + q(dir / "got.bin") + " " + flags,
                dir.path());
    REQUIRE(r.exit_code == 0);
    CHECK(read_file(dir / "got.bin") == secret);
  }
}

TEST_CASE("inline message and stdout extraction") {
  TempDir dir("cli");
  std::mt19937_64 rng(4);
  write_image(dir / "cover.bmp", random_image(32, 32, rng));
  REQUIRE(run_cli("embed -c " + q(dir / "cover.bmp") + " --message 'hello there' -o " + q(dir / "s.bmp") +
                      " -m 3",
                  dir.path())
              .exit_code == 0);
  const auto r = run_cli("extract -s " + q(dir / "s.bmp") + " -o - -m 3", dir.path());
  CHECK(r.exit_code == 0);
  CHECK(r.out == "hello there");
}

TEST_CASE("oversized secret exits 2 and writes nothing") {
  TempDir dir("cli");
  std::mt19937_64 rng(5);
  write_image(dir / "cover.png", random_image(8, 8, rng));
  write_file(dir / "big.bin", random_bytes(1000, rng));
  const auto r = run_cli("embed --cover " + q(dir / "cover.png") + " --secret " + q(dir / "big.bin") +
                             " --out " + q(dir / "stego.png") + " --method 1",
                         dir.path());
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("required") != std::string::npos);
  CHECK_FALSE(std::filesystem::exists(dir / "stego.png"));
}

TEST_CASE("usage errors exit 64") {
  TempDir dir("cli");
  std::mt19937_64 rng(6);
  write_image(dir / "cover.png", random_image(8, 8, rng));
  const std::string base = "embed --cover " + q(dir / "cover.png") + " --message hi --out " + q(dir / "s.png");
  CHECK(run_cli(base + " --method 2", dir.path()).exit_code == 64);
  CHECK(run_cli(base + " --method 1 --indicator G", dir.path()).exit_code == 64);
  CHECK(run_cli(base + " --method 4", dir.path()).exit_code == 64);
  CHECK(run_cli("frobnicate", dir.path()).exit_code == 64);
  CHECK(run_cli("--help", dir.path()).exit_code == 0);
  CHECK_FALSE(std::filesystem::exists(dir / "s.png"));
}

TEST_CASE("unsupported formats exit 3") {
  TempDir dir("cli");
  write_file(dir / "photo.jpg", std::vector<std::uint8_t>{0xFF, 0xD8, 0xFF, 0xE0, 0, 0});
  auto r = run_cli("capacity --cover " + q(dir / "photo.jpg") + " --method 1", dir.path());
  CHECK(r.exit_code == 3);

  std::mt19937_64 rng(7);
  write_image(dir / "cover.png", random_image(8, 8, rng));
  r = run_cli("embed --cover " + q(dir / "cover.png") + " --message hi --out " + q(dir / "s.jpg") + " -m 1",
              dir.path());
  CHECK(r.exit_code == 3);
  CHECK_FALSE(std::filesystem::exists(dir / "s.jpg"));
}

TEST_CASE("extract on a pristine image exits 4 or yields bytes, never crashes") {
  TempDir dir("cli");
  std::mt19937_64 rng(8);
  for (int t = 0; t < 5; ++t) {
    write_image(dir / "plain.png", random_image(16, 16, rng));
    const auto r = run_cli("extract --stego " + q(dir / "plain.png") + " --out " + q(dir / "x.bin") + " -m 1",
                           dir.path());
    CHECK((r.exit_code == 0 || r.exit_code == 4));
  }
  write_image(dir / "white.png", RgbImage(Plane(4, 4, 255), Plane(4, 4, 255), Plane(4, 4, 255)));
  const auto r = run_cli("extract --stego " + q(dir / "white.png") + " --out " + q(dir / "x.bin") + " -m 1",
                         dir.path());
  CHECK(r.exit_code == 4);
}

TEST_CASE("wrong method 2 indicator gives wrong bytes or exit 4") {
  TempDir dir("cli");
  std::mt19937_64 rng(9);
  write_image(dir / "cover.png", random_image(40, 40, rng));
  const auto secret = random_bytes(300, rng);
  write_file(dir / "secret.bin", secret);
  REQUIRE(run_cli("embed -c " + q(dir / "cover.png") + " -s " + q(dir / "secret.bin") + " -o " +
                      q(dir / "s.png") + " -m 2 -i B",
                  dir.path())
              .exit_code == 0);
  const auto r = run_cli("extract -s " + q(dir / "s.png") + " -o " + q(dir / "got.bin") + " -m 2 -i G", dir.path());
  if (r.exit_code == 0) {
    CHECK(read_file(dir / "got.bin") != secret);
  } else {
    CHECK(r.exit_code == 4);
  }
}

TEST_CASE("capacity and report commands") {
  TempDir dir("cli");
  std::mt19937_64 rng(10);
  write_image(dir / "cover.png", random_image(32, 32, rng));
  auto r = run_cli("capacity -c " + q(dir / "cover.png") + " -m 3 -f json", dir.path());
  REQUIRE(r.exit_code == 0);
  const auto cap = nlohmann::json::parse(r.out);
  CHECK(cap["capacity_bits"].get<std::uint64_t>() > 32 * 32 * 3);

  r = run_cli("embed -c " + q(dir / "cover.png") + " --message abcdef -o " + q(dir / "s.png") + " -m 1 -f json",
              dir.path());
  REQUIRE(r.exit_code == 0);
  const auto embed_report = nlohmann::json::parse(r.out);
  CHECK(embed_report["bits_embedded"] == 32 + 48);
  CHECK(embed_report["channels"][0]["psnr_db"] == "inf");

  r = run_cli("report -c " + q(dir / "cover.png") + " -s " + q(dir / "s.png") + " -m 1 -f json", dir.path());
  REQUIRE(r.exit_code == 0);
  CHECK(nlohmann::json::parse(r.out) == embed_report);

  r = run_cli("report -c " + q(dir / "cover.png") + " -s " + q(dir / "s.png") + " -m 1 -f csv", dir.path());
  CHECK(r.out.rfind("channel,mse,psnr_db,bpp,bits_embedded,width,height", 0) == 0);
}

TEST_CASE("bench output is deterministic under a seed") {
  TempDir dir("cli");
  std::mt19937_64 rng(11);
  std::filesystem::create_directories(dir / "corpus");
  for (int i = 0; i < 3; ++i) write_image(dir / "corpus" / ("c" + std::to_string(i) + ".png"), random_image(40, 40, rng));

  const std::string args = "bench --corpus " + q(dir / "corpus") + " --methods 1,2G,3 --seed 7 --csv ";
  auto a = run_cli(args + q(dir / "a.csv") + " --json " + q(dir / "a.json"), dir.path());
  auto b = run_cli(args + q(dir / "b.csv"), dir.path());
  REQUIRE(a.exit_code == 0);
  REQUIRE(b.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(slurp(dir / "a.csv") == slurp(dir / "b.csv"));
  CHECK(nlohmann::json::parse(slurp(dir / "a.json")).size() == 9);

  // Seed from the environment matches the flag.
  auto c = run_cli("bench --corpus " + q(dir / "corpus") + " --methods 1,2G,3 --csv " + q(dir / "c.csv"),
                   dir.path(), "PISTEGO_SEED=7");
  REQUIRE(c.exit_code == 0);
  CHECK(slurp(dir / "c.csv") == slurp(dir / "a.csv"));

  CHECK(run_cli("bench --corpus " + q(dir / "corpus") + " --methods 2", dir.path()).exit_code == 64);

  std::filesystem::create_directories(dir / "bad");
  write_file(dir / "bad" / "x.png", std::vector<std::uint8_t>{1, 2, 3});
  CHECK(run_cli("bench --corpus " + q(dir / "bad"), dir.path()).exit_code == 1);
}
