#include "qaffine/network_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace qaffine {

using nlohmann::json;

namespace {

std::string vertex_id(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw ParseError("vertex identifiers must be strings or integers");
}

Point point(const json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("points must be [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Network parse_network(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Network net;
  try {
    const int n = doc.at("generators").get<int>();
    const auto e2 = doc.at("epsilon2").get<std::vector<std::vector<int>>>();
    if (static_cast<int>(e2.size()) != n) throw ParseError("epsilon2 must be generators x generators");
    try {
      net.form = SkewForm::make(e2);
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
    for (const auto& v : doc.at("vertices")) net.vertices.push_back(vertex_id(v));
    for (const auto& e : doc.at("edges")) {
      Edge edge{vertex_id(e.at("from")), vertex_id(e.at("to")), std::nullopt};
      if (e.contains("exponent")) edge.exponent = e.at("exponent").get<Exponent>();
      net.edges.push_back(std::move(edge));
    }
    for (const auto& v : doc.at("sources")) net.sources.push_back(vertex_id(v));
    for (const auto& v : doc.at("sinks")) net.sinks.push_back(vertex_id(v));
    if (doc.contains("geometry")) {
      Geometry g;
      const auto& jg = doc.at("geometry");
      const auto& coords = jg.at("coords");
      if (coords.is_object()) {
        for (const auto& [k, v] : coords.items()) g.coords[k] = point(v);
      } else {
        if (coords.size() != net.vertices.size()) throw ParseError("coords list must match vertices");
        for (size_t i = 0; i < coords.size(); ++i) g.coords[net.vertices[i]] = point(coords[i]);
      }
      for (const auto& m : jg.at("face_markers")) g.face_markers.push_back(point(m));
      net.geometry = std::move(g);
    }
    if (doc.contains("max_cycle_uses")) net.max_cycle_uses = doc.at("max_cycle_uses").get<int>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed network: ") + e.what());
  }
  net.validate();
  return net;
}

Network load_network(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str());
}

std::string network_to_json(const Network& net) {
  nlohmann::ordered_json doc;
  const int n = net.form->rank();
  doc["generators"] = n;
  std::vector<std::vector<int>> e2(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) e2[static_cast<size_t>(i)][static_cast<size_t>(j)] = net.form->at(i, j);
  }
  doc["epsilon2"] = e2;
  doc["vertices"] = net.vertices;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : net.edges) {
    nlohmann::ordered_json je{{"from", e.from}, {"to", e.to}};
    if (e.exponent) je["exponent"] = *e.exponent;
    doc["edges"].push_back(je);
  }
  doc["sources"] = net.sources;
  doc["sinks"] = net.sinks;
  if (net.geometry) {
    nlohmann::ordered_json coords = nlohmann::ordered_json::object();
    for (const auto& [k, p] : net.geometry->coords) coords[k] = {p.x, p.y};
    nlohmann::ordered_json markers = nlohmann::ordered_json::array();
    for (const auto& p : net.geometry->face_markers) markers.push_back({p.x, p.y});
    doc["geometry"] = {{"coords", coords}, {"face_markers", markers}};
  }
  if (net.max_cycle_uses) doc["max_cycle_uses"] = *net.max_cycle_uses;

  // One top-level key per line; list-valued keys one item per line.
  std::string out = "{\n";
  size_t k = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  \"" + key + "\": ";
    if (value.is_array() && !value.empty()) {
      out += "[\n";
      for (size_t i = 0; i < value.size(); ++i) {
        out += "    " + value[i].dump() + (i + 1 < value.size() ? ",\n" : "\n");
      }
      out += "  ]";
    } else {
      out += value.dump();
    }
    out += ++k < doc.size() ? ",\n" : "\n";
  }
  return out + "}";
}

void save_network(const Network& net, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << network_to_json(net) << "\n";
}

}  // namespace qaffine
