#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bcb::cli {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 usage/parse error, 2 verification failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFail = 2;

struct Options {
  std::string channel = "bssc:0.5";
  std::uint64_t seed = 0;
  std::size_t restarts = 64;
  std::size_t grid = 4097;    // 1-D grids
  std::size_t grid3 = 201;    // per-axis resolution of the 3-D scan
  std::size_t lambdas = 21;
  std::size_t iterations = 2000;
  std::string out;            // output file path; empty = no file
  std::string format = "csv";
  std::size_t trials = 1000;
  std::size_t max_card = 4;
  std::vector<std::size_t> w_cards = {1, 2, 3, 4};
};

int run_info(const Options& opts, std::ostream& out);
int run_outer(const Options& opts, std::ostream& out);
int run_inner(const Options& opts, std::ostream& out);
int run_bssc_suite(const Options& opts, std::ostream& out);
int run_verify_constructions(const Options& opts, std::ostream& out);

// Full argv-level entry point used by the binary and by tests.
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace bcb::cli
