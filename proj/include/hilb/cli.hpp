#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilb/coefficient.hpp"

namespace hilb::cli {

using Json = nlohmann::ordered_json;

struct Options {
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t budget = 1'000'000;
  Domain field = Domain::rationals();
  bool timings = false;
};

/// Exit codes.
inline constexpr int kPass = 0;
inline constexpr int kFail = 1;
inline constexpr int kBudget = 2;
inline constexpr int kUsage = 64;

/// One command's output: the command echo, its inputs and one entry per
/// check. Each result carries at least "check" and "pass".
class Report {
 public:
  Report(std::string command, Json params) : command_(std::move(command)), params_(std::move(params)) {}

  void add(Json result) { results_.push_back(std::move(result)); }

  const std::string& command() const { return command_; }
  const Json& params() const { return params_; }
  const std::vector<Json>& results() const { return results_; }
  bool pass() const;
  /// First failing result, or nullptr.
  const Json* first_failure() const;

  Json to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  Json params_;
  std::vector<Json> results_;
};

Report cmd_hnm(std::size_t n, std::size_t m, const Options& opt);
Report cmd_minexp(std::size_t n, std::size_t m, const Options& opt);
/// `ideal` gives the generators of A = k[vars]/ideal and `coeffs` the
/// u_1..u_n of F; variables are inferred from the text when `vars` is empty.
Report cmd_cofactor(const std::vector<std::string>& ideal, const std::vector<std::string>& coeffs,
                    std::vector<std::string> vars, const Options& opt);
Report cmd_witness(std::size_t n, std::size_t N, const Options& opt);
/// suite is one of all, sym, groebner, hilb, prorep.
Report cmd_check(const std::string& suite, const Options& opt);
Report cmd_enumerate(std::size_t n, const std::vector<std::string>& ideal, std::vector<std::string> vars,
                     const Options& opt);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hilb::cli
