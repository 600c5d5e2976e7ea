#pragma once

// The on-disk caches: tau.csv as written by modform, and characters.csv
// with columns q,ell,index,generator,conductor.

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace symsq::cache {

using i64 = std::int64_t;

enum class Kind { Tau, Characters };

struct Status {
  bool ok = true;
  std::string message;
  i64 entries = 0;  ///< rows in the file
  i64 checked = 0;  ///< rows recomputed by verify
  std::filesystem::path quarantined;  ///< where a corrupt file was moved, if anywhere
};

std::filesystem::path file_for(Kind kind, const std::filesystem::path& dir);

/// Moduli q^ell written by build(Kind::Characters).
const std::vector<std::pair<i64, int>>& default_character_moduli();

/// Writes the file and a sidecar <file>.digest with its byte count and hash.
Status build(Kind kind, const std::filesystem::path& dir, i64 tau_limit = 10000);
/// Checks the digest written by build, when present, then recomputes `samples` entries chosen
/// with mt19937_64(seed). A mismatch or a malformed file moves the file into dir/quarantine.
Status verify(Kind kind, const std::filesystem::path& dir, int samples = 100, std::uint64_t seed = 42);
Status clear(Kind kind, const std::filesystem::path& dir);

}  // namespace symsq::cache
