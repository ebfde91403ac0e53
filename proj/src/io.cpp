#include "rotlabel/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "rotlabel/conflicts.hpp"

namespace rotlabel {

namespace {

using nlohmann::json;

std::string at(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string at(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "invalid JSON");
  }
}

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ParseError(at(where, key), "unknown field");
  }
}

const json& need(const json& obj, const std::string& where, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(at(where, key), "missing field");
  return *it;
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ParseError(where, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(where, "expected a finite number");
  return x;
}

std::string string(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

std::vector<double> numbers(const json& v, const std::string& where, std::size_t n) {
  if (!v.is_array() || v.size() != n) throw ParseError(where, "expected an array of " + std::to_string(n) + " numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(number(v[i], at(where, i)));
  return out;
}

void check_schema(const json& doc) {
  const json& s = need(doc, "", "schema");
  if (!s.is_number_integer() || s.get<int>() != kSchemaVersion) {
    throw ParseError("/schema", "unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  }
}

}  // namespace

Instance parse_instance(const std::string& text) {
  const json doc = parse_json(text);
  only_keys(doc, "", {"schema", "labels"});
  check_schema(doc);
  const json& labels = need(doc, "", "labels");
  if (!labels.is_array()) throw ParseError("/labels", "expected an array");

  Instance inst;
  std::set<std::string> ids;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const std::string where = at("/labels", i);
    const json& l = labels[i];
    only_keys(l, where, {"id", "anchor", "extents"});
    Label label;
    label.id = string(need(l, where, "id"), at(where, "id"));
    if (!ids.insert(label.id).second) throw ParseError(at(where, "id"), "duplicate id '" + label.id + "'");
    const auto p = numbers(need(l, where, "anchor"), at(where, "anchor"), 2);
    label.anchor = Point(p[0], p[1]);
    const auto e = numbers(need(l, where, "extents"), at(where, "extents"), 4);
    label.extents = Extents{e[0], e[1], e[2], e[3]};
    if (!label.well_formed()) throw ParseError(at(where, "extents"), "extents must be non-negative with positive width and height");
    inst.labels.push_back(std::move(label));
  }
  return inst;
}

std::string dump_instance(const Instance& inst) {
  json labels = json::array();
  for (const auto& l : inst.labels) {
    labels.push_back({{"id", l.id},
                      {"anchor", {l.anchor.x(), l.anchor.y()}},
                      {"extents", {l.extents.left, l.extents.right, l.extents.bottom, l.extents.top}}});
  }
  json doc = {{"schema", kSchemaVersion}, {"labels", std::move(labels)}};
  return doc.dump(2) + "\n";
}

RunReport make_report(const Instance& inst, const ActiveRangeAssignment& phi, double wall_time_s,
                      std::size_t violations) {
  RunReport r;
  r.algorithm = phi.algorithm;
  r.parameters = phi.parameters;
  r.max_total = max_total(phi);
  r.max_min = max_min(phi);
  r.wall_time_s = wall_time_s;
  r.ranges = assignment_to_records(inst, phi);
  r.violations = violations;
  return r;
}

std::string dump_report(const RunReport& report) {
  json ranges = json::array();
  for (const auto& r : report.ranges) {
    json e = {{"id", r.id}, {"start", r.start}};
    e["extent"] = r.extent ? json(*r.extent) : json(nullptr);
    ranges.push_back(std::move(e));
  }
  json params = json::object();
  for (const auto& [k, v] : report.parameters) params[k] = v;
  json doc = {{"schema", kSchemaVersion},
              {"algorithm", report.algorithm},
              {"parameters", std::move(params)},
              {"max_total", report.max_total},
              {"max_min", report.max_min},
              {"wall_time_s", report.wall_time_s},
              {"violations", report.violations},
              {"ranges", std::move(ranges)}};
  return doc.dump(2) + "\n";
}

RunReport parse_report(const std::string& text, const Instance& inst, ActiveRangeAssignment& phi) {
  const json doc = parse_json(text);
  only_keys(doc, "", {"schema", "algorithm", "parameters", "max_total", "max_min", "wall_time_s", "violations", "ranges"});
  check_schema(doc);

  RunReport r;
  if (doc.contains("algorithm")) r.algorithm = string(doc["algorithm"], "/algorithm");
  if (doc.contains("parameters")) {
    const json& p = doc["parameters"];
    if (!p.is_object()) throw ParseError("/parameters", "expected an object");
    for (const auto& [k, v] : p.items()) r.parameters[k] = number(v, at("/parameters", k));
  }
  if (doc.contains("wall_time_s")) r.wall_time_s = number(doc["wall_time_s"], "/wall_time_s");
  for (const char* key : {"max_total", "max_min", "violations"}) {
    if (doc.contains(key) && !doc[key].is_number()) throw ParseError(at("", key), "expected a number");
  }

  const json& ranges = need(doc, "", "ranges");
  if (!ranges.is_array()) throw ParseError("/ranges", "expected an array");
  for (std::size_t i = 0; i < ranges.size(); ++i) {
    const std::string where = at("/ranges", i);
    const json& e = ranges[i];
    only_keys(e, where, {"id", "start", "extent"});
    RangeRecord rec;
    rec.id = string(need(e, where, "id"), at(where, "id"));
    rec.start = number(need(e, where, "start"), at(where, "start"));
    const json& ext = need(e, where, "extent");
    if (!ext.is_null()) rec.extent = number(ext, at(where, "extent"));
    r.ranges.push_back(std::move(rec));
  }

  std::vector<Violation> problems;
  phi = assignment_from_records(inst, r.ranges, problems);
  phi.algorithm = r.algorithm;
  phi.parameters = r.parameters;
  const auto found = validate_assignment(inst, build_conflict_graph(inst), phi);
  r.violations = problems.size() + found.size();
  r.max_total = max_total(phi);
  r.max_min = max_min(phi);
  return r;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path);
}

}  // namespace rotlabel
