#include "sgqft/json_io.hpp"

#include <stdexcept>

namespace sgqft {

namespace {

Json half_edge_json(HalfEdge h) { return Json::array({h.vertex, h.slot}); }

HalfEdge half_edge_from(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw std::invalid_argument("half-edge must be [vertex, slot]");
  return {j[0].get<int>(), j[1].get<int>()};
}

std::vector<int> int_list(const std::string& s, char sep) {
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    std::size_t p = s.find(sep, start);
    std::string part = s.substr(start, p == std::string::npos ? std::string::npos : p - start);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad theory key '" + s + "'");
    out.push_back(std::stoi(part));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

}  // namespace

Json graph_to_json(const StableGraph& g) {
  Json edges = Json::array(), legs = Json::array(), labels = Json::array();
  bool labelled = false;
  for (const Edge& e : g.edges) {
    edges.push_back(Json::array({half_edge_json(e.a), half_edge_json(e.b)}));
    labels.push_back(Json::array({e.label_a, e.label_b}));
    labelled = labelled || e.label_a || e.label_b;
  }
  for (const Leg& l : g.legs)
    legs.push_back(Json::array({half_edge_json(l.at), l.label ? Json(l.label) : Json(nullptr)}));
  Json out = {{"vertices", g.genus}, {"edges", edges}, {"legs", legs}};
  if (labelled) out["edge_labels"] = labels;
  return out;
}

StableGraph graph_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("graph must be a JSON object");
  for (const char* k : {"vertices", "edges", "legs"})
    if (!j.contains(k) || !j[k].is_array()) throw std::invalid_argument(std::string("graph needs array '") + k + "'");
  StableGraph g;
  for (const Json& v : j["vertices"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("vertex genus must be an integer");
    g.genus.push_back(v.get<int>());
  }
  for (const Json& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [half-edge, half-edge]");
    g.edges.push_back({half_edge_from(e[0]), half_edge_from(e[1]), 0, 0});
  }
  if (j.contains("edge_labels")) {
    const Json& labels = j["edge_labels"];
    if (!labels.is_array() || labels.size() != g.edges.size())
      throw std::invalid_argument("edge_labels must match edges");
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const Json& p = labels[i];
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
        throw std::invalid_argument("edge label must be [a, b]");
      g.edges[i].label_a = p[0].get<int>();
      g.edges[i].label_b = p[1].get<int>();
    }
  }
  for (const Json& l : j["legs"]) {
    if (!l.is_array() || l.size() != 2) throw std::invalid_argument("leg must be [half-edge, label|null]");
    int label = 0;
    if (!l[1].is_null()) {
      if (!l[1].is_number_integer() || l[1].get<int>() < 1)
        throw std::invalid_argument("leg label must be a positive integer or null");
      label = l[1].get<int>();
    }
    g.legs.push_back({half_edge_from(l[0]), label});
  }
  if (auto err = validate(g)) throw std::invalid_argument(*err);
  return g;
}

std::string coefficient_text(const Rational& c) { return to_pq(c); }

std::string coefficient_text(const Poly& c) {
  if (c.is_constant()) return to_pq(c.constant_term());
  return c.to_string();
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [c, syms] : display_terms(p)) {
    Json mono = Json::array();
    for (Symbol s : syms) mono.push_back(s.json_name());
    out.push_back({{"coeff", to_pq(c)}, {"monomial", mono}});
  }
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be an array of terms");
  Poly out;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t["coeff"].is_string() || !t.contains("monomial") ||
        !t["monomial"].is_array())
      throw std::invalid_argument("term must be {coeff: \"p/q\", monomial: [...]}");
    Poly term(parse_rational(t["coeff"].get<std::string>()));
    for (const Json& s : t["monomial"]) {
      if (!s.is_string()) throw std::invalid_argument("monomial entries must be symbol strings");
      term *= Poly(Symbol::parse(s.get<std::string>()));
    }
    out += term;
  }
  return out;
}

std::string index_key(const TheoryIndex& idx) {
  std::string s = std::to_string(idx.genus);
  s += idx.legs.size() == 1 ? "," : ";";
  for (std::size_t i = 0; i < idx.legs.size(); ++i) s += (i ? "," : "") + std::to_string(idx.legs[i]);
  return s;
}

TheoryIndex index_from_key(const std::string& key) {
  auto semi = key.find(';');
  if (semi != std::string::npos) return {int_list(key.substr(0, semi), ',')[0], int_list(key.substr(semi + 1), ',')};
  auto gn = int_list(key, ',');
  if (gn.size() != 2) throw std::invalid_argument("bad theory key '" + key + "'");
  return {gn[0], {gn[1]}};
}

Json theory_to_json(const Theory& t) {
  Json out = Json::object();
  for (const auto& [idx, p] : t) out[index_key(idx)] = poly_to_json(p);
  return out;
}

Theory theory_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("theory must be a JSON object");
  Theory t;
  std::size_t dim = 0;
  for (const auto& [k, v] : j.items()) {
    TheoryIndex idx = index_from_key(k);
    if (!is_stable(idx)) throw std::invalid_argument("theory entry '" + k + "' is unstable");
    if (dim && idx.legs.size() != dim) throw std::invalid_argument("theory mixes dimensions");
    dim = idx.legs.size();
    t[idx] = poly_from_json(v);
  }
  return t;
}

}  // namespace sgqft
