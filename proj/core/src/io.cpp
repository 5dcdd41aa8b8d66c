#include "kcausal/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kcausal/errors.hpp"

namespace kcausal::io {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    if (const auto pos = what.find("syntax error"); pos != std::string::npos) what = what.substr(pos);
    throw ParseError(what, line, column);
  }
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object at top level");
  const auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field \"") + name + "\"");
  return *it;
}

std::size_t read_size(const Json& doc) {
  const Json& n = field(doc, "n");
  if (!n.is_number_integer() || n.get<long long>() < 1) {
    throw ParseError("field \"n\" must be a positive integer");
  }
  return n.get<std::size_t>();
}

Rational read_rational(const Json& value, const std::string& where) {
  try {
    if (value.is_number_integer()) return Rational(Integer(value.dump()));
    if (value.is_string()) return parse_rational(value.get<std::string>());
  } catch (const ValidationError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": expected a rational string or an integer");
}

std::vector<Rational> read_rationals(const Json& array, std::size_t n, const std::string& where) {
  if (!array.is_array()) throw ParseError(where + " must be an array");
  if (array.size() != n) {
    throw ParseError(where + " has " + std::to_string(array.size()) + " entries, expected " +
                     std::to_string(n));
  }
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(read_rational(array[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::size_t read_event(const Json& value, std::size_t n, const std::string& where) {
  if (!value.is_number_integer() || value.get<long long>() < 0 ||
      value.get<unsigned long long>() >= n) {
    throw ParseError(where + " must be an event index in 0.." + std::to_string(n - 1));
  }
  return value.get<std::size_t>();
}

Json rational_array(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(format_rational(v));
  return out;
}

std::string finish(const Json& doc) { return doc.dump() + "\n"; }

template <class F>
auto rethrow_validation(F&& f) {
  try {
    return f();
  } catch (const ValidationError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Relation parse_relation(std::string_view text) {
  const Json doc = parse_document(text);
  const std::size_t n = read_size(doc);
  const Json& pairs = field(doc, "pairs");
  if (!pairs.is_array()) throw ParseError("field \"pairs\" must be an array");
  std::vector<EventPair> out;
  std::set<EventPair> seen;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "pairs[" + std::to_string(i) + "]";
    const Json& pair = pairs[i];
    if (!pair.is_array() || pair.size() != 2) throw ParseError(where + " must be [p, q]");
    const EventPair pq{read_event(pair[0], n, where), read_event(pair[1], n, where)};
    if (!seen.insert(pq).second) {
      throw ParseError(where + " duplicates (" + std::to_string(pq.first) + "," +
                       std::to_string(pq.second) + ")");
    }
    out.push_back(pq);
  }
  return Relation::from_pairs(n, out);
}

std::string write_relation(const Relation& r) {
  Json doc;
  doc["n"] = r.ground_size();
  Json pairs = Json::array();
  for (const auto& [p, q] : r.pairs()) pairs.push_back({p, q});
  doc["pairs"] = std::move(pairs);
  return finish(doc);
}

CausalGround parse_ground(std::string_view text) { return CausalGround(parse_relation(text)); }

Measure parse_measure(std::string_view text) {
  const Json doc = parse_document(text);
  const std::size_t n = read_size(doc);
  auto weights = read_rationals(field(doc, "weights"), n, "weights");
  return rethrow_validation([&] { return Measure::from_weights(std::move(weights)); });
}

std::string write_measure(const Measure& m) {
  Json doc;
  doc["n"] = m.size();
  doc["weights"] = rational_array(m.weights());
  return finish(doc);
}

TimeFunction parse_time_function(std::string_view text, const CausalGround& ground) {
  const Json doc = parse_document(text);
  const std::size_t n = read_size(doc);
  if (n != ground.size()) throw ParseError("time function size differs from the ground");
  auto values = read_rationals(field(doc, "values"), n, "values");
  return rethrow_validation([&] { return TimeFunction::on(ground, std::move(values)); });
}

std::string write_time_function(const TimeFunction& t) {
  Json doc;
  doc["n"] = t.size();
  doc["values"] = rational_array(t.values());
  return finish(doc);
}

std::vector<TimeFunction> parse_family(std::string_view text, const CausalGround& ground) {
  const Json doc = parse_document(text);
  const std::size_t n = read_size(doc);
  if (n != ground.size()) throw ParseError("family size differs from the ground");
  std::vector<TimeFunction> out;
  if (doc.contains("values") && !doc.contains("functions")) {
    auto values = read_rationals(doc["values"], n, "values");
    out.push_back(rethrow_validation([&] { return TimeFunction::on(ground, std::move(values)); }));
    return out;
  }
  const Json& fns = field(doc, "functions");
  if (!fns.is_array() || fns.empty()) throw ParseError("field \"functions\" must be a nonempty array");
  for (std::size_t i = 0; i < fns.size(); ++i) {
    auto values = read_rationals(fns[i], n, "functions[" + std::to_string(i) + "]");
    out.push_back(rethrow_validation([&] { return TimeFunction::on(ground, std::move(values)); }));
  }
  return out;
}

std::string write_family(std::span<const TimeFunction> fns) {
  Json doc;
  doc["n"] = fns.empty() ? 0 : fns.front().size();
  Json arr = Json::array();
  for (const auto& t : fns) arr.push_back(rational_array(t.values()));
  doc["functions"] = std::move(arr);
  return finish(doc);
}

Coupling parse_coupling(std::string_view text, std::size_t n) {
  const Json doc = parse_document(text);
  if (!doc.is_array()) throw ParseError("coupling must be an array of [p, q, mass]");
  std::vector<CouplingEntry> entries;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const std::string where = "[" + std::to_string(i) + "]";
    const Json& e = doc[i];
    if (!e.is_array() || e.size() != 3) throw ParseError(where + " must be [p, q, mass]");
    entries.push_back({read_event(e[0], n, where), read_event(e[1], n, where),
                       read_rational(e[2], where)});
  }
  return rethrow_validation([&] { return Coupling::from_entries(n, entries); });
}

std::string write_coupling(const Coupling& w) {
  Json arr = Json::array();
  for (const auto& e : w.entries()) arr.push_back({e.from, e.to, format_rational(e.mass)});
  return finish(arr);
}

MinkowskiSample parse_minkowski_points(std::string_view text) {
  const Json doc = parse_document(text);
  const std::size_t n = read_size(doc);
  const Json& pts = field(doc, "points");
  if (!pts.is_array() || pts.size() != n) throw ParseError("field \"points\" must hold n entries");
  std::vector<MinkowskiPoint> points;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string where = "points[" + std::to_string(i) + "]";
    auto coords = read_rationals(pts[i], 2, where);
    points.push_back({coords[0], coords[1]});
  }
  return minkowski_from_points(std::move(points));
}

std::string write_minkowski_points(const MinkowskiSample& sample) {
  Json doc;
  doc["n"] = sample.points.size();
  Json pts = Json::array();
  for (const auto& p : sample.points) pts.push_back({format_rational(p.t), format_rational(p.x)});
  doc["points"] = std::move(pts);
  return finish(doc);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << contents;
}

}  // namespace kcausal::io
