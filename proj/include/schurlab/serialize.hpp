#pragma once

#include "schurlab/groups.hpp"
#include "schurlab/spectra.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace schurlab {

using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "schurlab 0.1.0";

std::string rat_string(const Rat& r);
/// 12 significant digits.
std::string rat_decimal(const Rat& r);

/// Parameters of one run, embedded in every artifact.  Timestamps are opt-in
/// so reruns are byte-identical by default.
struct RunManifest {
  std::string command;
  Json params = Json::object();
  std::optional<unsigned long long> seed;
  bool with_timestamp = false;

  Json to_json() const;
};

Json bound_report_json(const BoundReport& r);

/// RFC-4180 style quoting; joins a row and appends CRLF-free newline.
std::string csv_row(const std::vector<std::string>& fields);

/// Writes via a sibling temp file and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

/// Cache directory: $SCHURLAB_CACHE, or a per-user default.
std::filesystem::path cache_dir();
/// Worker cap: $SCHURLAB_THREADS, or the logical core count.
int worker_count();

/// Character table round-trip for the on-disk cache.
Json character_table_to_json(const CharacterTable& t);
CharacterTable character_table_from_json(const Json& j);

/// Loads the table for `spec` ("family:param") from the cache, computing and
/// storing it on a miss.
CharacterTable cached_character_table(const std::string& spec, const FiniteGroup& G);

/// Exit code policy: 2 invalid arguments, 3 cap exceeded, 4 broken invariant.
int exit_code_for(const std::exception& e);

}  // namespace schurlab
