#include "tridist/cache.hpp"

#include <fstream>
#include <json.hpp>

#include "tridist/errors.hpp"
#include "tridist/util.hpp"

namespace tridist {

using nlohmann::json;

namespace {

json payload(const SearchReport& r) {
  json points = json::array();
  for (const auto& p : r.construction) points.push_back({p.a, p.b});
  return json{
      {"schema_version", kCacheSchemaVersion},
      {"m", r.m},
      {"method", method_name(r.method)},
      {"menu", r.menu.values()},
      {"menu_hash", to_hex(r.menu.hash())},
      {"points", std::move(points)},
      {"size", r.size},
      {"multiplicities", r.multiplicities.counts},
      {"optimal", r.optimal},
      {"overshoot", r.overshoot},
      {"nodes_explored", r.nodes_explored},
      {"elapsed_seconds", r.elapsed.count()},
      {"remark", r.remark},
  };
}

std::string checksum_of(const json& body) { return to_hex(fnv1a(kFnvOffset, body.dump())); }

}  // namespace

std::string encode_report(const SearchReport& report) {
  auto body = payload(report);
  body["checksum"] = checksum_of(body);
  return body.dump();
}

SearchReport decode_report(const std::string& line) {
  json body;
  try {
    body = json::parse(line);
  } catch (const json::exception& e) {
    throw FormatError(std::string("cache entry is not valid JSON: ") + e.what());
  }
  if (!body.is_object() || !body.contains("checksum")) throw FormatError("cache entry has no checksum");
  const auto stored = body["checksum"].get<std::string>();
  body.erase("checksum");
  if (checksum_of(body) != stored) throw ChecksumError("cache entry checksum mismatch");

  try {
    if (body.at("schema_version").get<int>() != kCacheSchemaVersion)
      throw FormatError("unsupported cache schema version");
    SearchReport r;
    r.m = body.at("m").get<std::size_t>();
    r.method = parse_method(body.at("method").get<std::string>());
    r.menu = DistanceMenu(body.at("menu").get<std::vector<SquaredDistance>>());
    std::vector<LatticePoint> pts;
    for (const auto& p : body.at("points")) pts.push_back({p.at(0).get<Coord>(), p.at(1).get<Coord>()});
    r.construction = PointConfig(std::move(pts));
    r.size = body.at("size").get<std::size_t>();
    r.multiplicities.counts = body.at("multiplicities").get<std::vector<std::int64_t>>();
    r.optimal = body.at("optimal").get<bool>();
    r.overshoot = body.at("overshoot").get<bool>();
    r.nodes_explored = body.at("nodes_explored").get<std::uint64_t>();
    r.elapsed = std::chrono::duration<double>(body.at("elapsed_seconds").get<double>());
    r.remark = body.at("remark").get<std::string>();
    if (r.size != r.construction.size()) throw FormatError("cache entry size does not match its points");
    return r;
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed cache entry: ") + e.what());
  } catch (const InvalidMenuError& e) {
    throw FormatError(std::string("malformed cache entry: ") + e.what());
  }
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path ResultCache::entry_path(std::size_t m, Method method) const {
  return dir_ / ("m" + std::to_string(m) + "-" + std::string(method_name(method)) + ".jsonl");
}

void ResultCache::store(const SearchReport& report) {
  const auto line = encode_report(report);
  std::lock_guard lock(mutex_);
  const auto path = entry_path(report.m, report.method);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write cache entry " + tmp.string());
    out << line << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<SearchReport> ResultCache::load(std::size_t m, Method method) const {
  std::string line;
  {
    std::lock_guard lock(mutex_);
    std::ifstream in(entry_path(m, method), std::ios::binary);
    if (!in || !std::getline(in, line)) return std::nullopt;
  }
  auto report = decode_report(line);
  if (report.m != m || report.method != method) return std::nullopt;
  if (method == Method::SmallestMenuClique && report.menu != loeschian_sequence(m)) return std::nullopt;
  return report;
}

}  // namespace tridist
