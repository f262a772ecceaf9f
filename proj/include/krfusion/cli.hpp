#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "krfusion/fermionic.hpp"
#include "krfusion/lie_data.hpp"
#include "krfusion/qpoly.hpp"

namespace krfusion::cli {

/// Malformed user input; `position` is a 0-based character offset into the input.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class Command { compute, table, verify, dims, selfcheck };
enum class Variant { kr1, kr2, both };
enum class Format { text, json, csv };

struct Request {
  Command command = Command::compute;
  AlgebraType algebra;
  KRWeightSpec R;
  std::optional<DominantWeight> lambda;
  Variant variant = Variant::kr1;
  Format format = Format::text;
  bool strict_vacancy = false;
  std::optional<std::string> cache_dir;
  int threads = 1;
  std::uint64_t seed = 1;  // selfcheck
  int cases = 20;          // selfcheck, per property
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// "A3", "d4" (case-insensitive family letter).
AlgebraType parse_algebra(const std::string& token);

/// "2*w1, w1,1*w3" -> {(2,1),(1,1),(1,3)}. `rank` > 0 enables the node range check.
KRWeightSpec parse_weight_spec(const std::string& s, int rank = 0);

/// "0" or "c1*w1+c2*w2+...", "wI" meaning "1*wI".
DominantWeight parse_lambda(const std::string& s, int rank);

std::string command_name(Command c);
std::string variant_name(Variant v);

/// Canonical request string used as the cache key.
std::string canonical_key(const Request& req);
/// 16 hex digits of FNV-1a over canonical_key.
std::string cache_file_name(const Request& req);

/// Executes a validated request. Returns the process exit status.
int run(const Request& req, std::ostream& out, std::ostream& err);

/// Full command line front end: flags, environment overrides, run().
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fields recovered from a `compute` json document.
struct ComputeDocument {
  AlgebraType algebra;
  KRWeightSpec R;
  DominantWeight lambda;
  Variant variant = Variant::kr1;
  std::optional<LaurentPoly> polynomial;
  BigInt q1_value;
  std::optional<BigInt> kr2_value;
};

ComputeDocument parse_compute_json(const std::string& text);

}  // namespace krfusion::cli
