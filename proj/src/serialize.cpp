#include "schurlab/serialize.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schurlab {

std::string rat_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r) << "/" << denominator(r);
  return os.str();
}

std::string rat_decimal(const Rat& r) {
  std::ostringstream os;
  os << std::setprecision(12) << to_real(r);
  return os.str();
}

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["params"] = params;
  j["tool_version"] = kToolVersion;
  if (seed) j["seed"] = *seed;
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    j["timestamp"] =
        std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  }
  return j;
}

Json bound_report_json(const BoundReport& r) {
  Json j;
  j["name"] = r.name;
  j["k"] = r.k;
  j["d"] = r.d;
  if (r.d2) j["d2"] = *r.d2;
  if (r.r) j["r"] = *r.r;
  j["lhs"] = static_cast<double>(r.lhs);
  j["rhs"] = static_cast<double>(r.rhs);
  j["satisfied"] = r.satisfied;
  return j;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) row += ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      row += '"';
      for (char c : f) {
        if (c == '"') row += '"';
        row += c;
      }
      row += '"';
    } else {
      row += f;
    }
  }
  row += '\n';
  return row;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  const auto tmp = path.parent_path() / (path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << contents;
  }
  std::filesystem::rename(tmp, path);
}

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("SCHURLAB_CACHE"); env && *env)
    return std::filesystem::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "schurlab";
  return std::filesystem::temp_directory_path() / "schurlab-cache";
}

int worker_count() {
  if (const char* env = std::getenv("SCHURLAB_THREADS"); env && *env) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

Json character_table_to_json(const CharacterTable& t) {
  Json j;
  j["labels"] = t.labels;
  j["dims"] = t.dims;
  j["d_max"] = t.d_max;
  Json chars = Json::array();
  for (const auto& row : t.chars) {
    Json jr = Json::array();
    for (const Complex& c : row) jr.push_back(Json::array({c.real(), c.imag()}));
    chars.push_back(std::move(jr));
  }
  j["chars"] = std::move(chars);
  return j;
}

CharacterTable character_table_from_json(const Json& j) {
  CharacterTable t;
  t.labels = j.at("labels").get<std::vector<std::string>>();
  t.dims = j.at("dims").get<std::vector<int>>();
  t.d_max = j.at("d_max").get<int>();
  for (const Json& jr : j.at("chars")) {
    std::vector<Complex> row;
    for (const Json& c : jr) row.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
    t.chars.push_back(std::move(row));
  }
  return t;
}

CharacterTable cached_character_table(const std::string& spec, const FiniteGroup& G) {
  std::string key = spec;
  for (char& c : key)
    if (c == ':' || c == '/') c = '_';
  const auto dir = cache_dir();
  const auto file = dir / ("chartable_" + key + ".json");

  std::error_code ec;
  if (std::filesystem::exists(file, ec)) {
    std::ifstream in(file);
    Json j;
    in >> j;
    return character_table_from_json(j);
  }
  CharacterTable t = character_table(G);
  std::filesystem::create_directories(dir, ec);
  if (!ec) write_file_atomic(file, character_table_to_json(t).dump(2) + "\n");
  return t;
}

int exit_code_for(const std::exception& e) {
  const std::string msg = e.what();
  if (msg.find("cap") != std::string::npos) return 3;
  if (dynamic_cast<const std::logic_error*>(&e) &&
      !dynamic_cast<const std::invalid_argument*>(&e))
    return 4;
  return 2;
}

}  // namespace schurlab
