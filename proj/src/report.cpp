#include "andre/report.hpp"

#include <sstream>

#include <json.hpp>

namespace andre {
namespace {

constexpr std::uint64_t kMaxJsonInt = 9007199254740991ull;  // 2^53 - 1

std::string reps_cell(const std::vector<std::vector<std::string>>& reps,
                      const char* set_sep) {
  std::string out;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (i) out += set_sep;
    out += '{';
    for (std::size_t j = 0; j < reps[i].size(); ++j) {
      if (j) out += ',';
      out += reps[i][j];
    }
    out += '}';
  }
  return out;
}

}  // namespace

std::optional<Format> parse_format(const std::string& s) {
  if (s == "table") return Format::table;
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  return std::nullopt;
}

std::string render_table(const std::vector<ClassReport>& reports) {
  const std::vector<std::string> header = {"kind",  "q",      "n",     "index",
                                           "group", "orbits", "count", "representatives"};
  std::vector<std::vector<std::string>> rows{header};
  for (auto& r : reports) {
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string("-"); };
    rows.push_back({r.kind, std::to_string(r.q), opt(r.n), opt(r.index),
                    opt(r.group_order), opt(r.total_orbits), r.count.str(),
                    r.representatives ? reps_cell(*r.representatives, " ") : "-"});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line.append(width[c] - row[c].size() + 2, ' ');
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_json(const std::vector<ClassReport>& reports) {
  nlohmann::json root;
  root["schema"] = 1;
  auto& arr = root["reports"] = nlohmann::json::array();
  for (auto& r : reports) {
    nlohmann::json j;
    j["kind"] = r.kind;
    j["q"] = r.q;
    if (r.n) j["n"] = *r.n;
    if (r.index) j["index"] = *r.index;
    if (r.group_order) j["group_order"] = *r.group_order;
    if (r.total_orbits) j["total_orbits"] = *r.total_orbits;
    if (r.count <= kMaxJsonInt)
      j["count"] = static_cast<std::uint64_t>(r.count);
    else
      j["count"] = r.count.str();
    if (r.representatives) j["representatives"] = *r.representatives;
    j["elapsed_ms"] = r.elapsed_ms;
    arr.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::string render_csv(const std::vector<ClassReport>& reports) {
  std::string out = "kind,q,n,index,group_order,total_orbits,count,representatives,elapsed_ms\n";
  for (auto& r : reports) {
    auto opt = [](const auto& o) { return o ? std::to_string(*o) : std::string(); };
    std::ostringstream line;
    line << r.kind << ',' << r.q << ',' << opt(r.n) << ',' << opt(r.index) << ','
         << opt(r.group_order) << ',' << opt(r.total_orbits) << ',' << r.count.str() << ',';
    if (r.representatives) line << '"' << reps_cell(*r.representatives, ";") << '"';
    line << ',' << r.elapsed_ms << '\n';
    out += line.str();
  }
  return out;
}

std::vector<ClassReport> parse_json(const std::string& text) {
  const auto root = nlohmann::json::parse(text);
  if (root.value("schema", 0) != 1) throw Error("parse_json: unsupported schema");
  std::vector<ClassReport> reports;
  for (auto& j : root.at("reports")) {
    ClassReport r;
    r.kind = j.at("kind").get<std::string>();
    r.q = j.at("q").get<std::uint64_t>();
    if (j.contains("n")) r.n = j["n"].get<std::uint32_t>();
    if (j.contains("index")) r.index = j["index"].get<std::uint32_t>();
    if (j.contains("group_order")) r.group_order = j["group_order"].get<std::uint64_t>();
    if (j.contains("total_orbits")) r.total_orbits = j["total_orbits"].get<std::uint64_t>();
    const auto& c = j.at("count");
    r.count = c.is_string() ? Big(c.get<std::string>()) : Big(c.get<std::uint64_t>());
    if (j.contains("representatives"))
      r.representatives = j["representatives"].get<std::vector<std::vector<std::string>>>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace andre
