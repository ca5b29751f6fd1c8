// JSON forms of diamonds, matchings, heights and shuffle traces.
// Objects use nlohmann::json's default sorted keys.
#pragma once

#include <json.hpp>

#include "genfun.hpp"
#include "shuffle.hpp"

namespace dp3 {

using json = nlohmann::json;

inline json point_json(LatticePoint x) { return json::array({x.p, x.q}); }

inline LatticePoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
    throw DomainError("expected [p, q]");
  return {j[0].get<int>(), j[1].get<int>()};
}

inline json diamond_to_json(const Diamond& d) {
  json vs = json::array(), es = json::array(), ss = json::array();
  for (auto& v : d.vertices) vs.push_back(point_json(v));
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    es.push_back(json::array({*d.vertex_index(d.edges[i].u), *d.vertex_index(d.edges[i].v), to_string(d.edge_kinds[i])}));
  for (auto& f : d.faces)
    ss.push_back({{"center", point_json(f.square.center)},
                  {"orientation", to_string(f.square.orientation)},
                  {"cell", json::array({f.cell.i, f.cell.j})}});
  return {{"order", d.order.str()}, {"vertices", vs}, {"edges", es}, {"squares", ss}};
}

// Rebuilds from the square list and checks vertices and edges agree.
inline Diamond diamond_from_json(const json& j) {
  Order m = Order::parse(j.at("order").get<std::string>());
  std::vector<Face> fs;
  for (auto& s : j.at("squares")) {
    auto cell = s.at("cell");
    fs.push_back({square_at(point_from_json(s.at("center")), orientation_from_string(s.at("orientation").get<std::string>())),
                  {cell.at(0).get<int>(), cell.at(1).get<int>()}});
  }
  Diamond d = Diamond::from_faces(m, std::move(fs));
  if (j.at("vertices").size() != d.vertices.size() || j.at("edges").size() != d.edges.size())
    throw DomainError("vertex or edge list disagrees with the squares");
  for (std::size_t i = 0; i < d.vertices.size(); ++i)
    if (point_from_json(j["vertices"][i]) != d.vertices[i]) throw DomainError("vertex list disagrees with the squares");
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    auto& e = j["edges"][i];
    Edge x(d.vertices.at(e.at(0).get<std::size_t>()), d.vertices.at(e.at(1).get<std::size_t>()));
    if (!(x == d.edges[i]) || e.at(2).get<std::string>() != to_string(d.edge_kinds[i]))
      throw DomainError("edge list disagrees with the squares");
  }
  return d;
}

// {order, edges: [[v1, v2], ...]} with vertex indices into the sorted list.
inline json matching_to_json(const Matching& m) {
  const Diamond& d = m.diamond();
  json es = json::array();
  for (auto& e : m.edge_list()) es.push_back(json::array({*d.vertex_index(e.u), *d.vertex_index(e.v)}));
  return {{"order", d.order.str()}, {"edges", es}};
}

inline Matching matching_from_json(const json& j, std::shared_ptr<const Diamond> d = nullptr) {
  Order m = Order::parse(j.at("order").get<std::string>());
  if (!d) d = make_diamond(m);
  if (!(d->order == m)) throw DomainError("matching order does not match the diamond");
  std::vector<Edge> es;
  for (auto& e : j.at("edges")) {
    auto a = e.at(0).get<std::size_t>(), b = e.at(1).get<std::size_t>();
    if (a >= d->vertices.size() || b >= d->vertices.size()) throw DomainError("vertex index out of range");
    es.emplace_back(d->vertices[a], d->vertices[b]);
  }
  return Matching::from_edges(d, es);
}

inline json heights_to_json(const Matching& m) {
  const Diamond& d = m.diamond();
  auto h = height_function(m);
  json out = json::array();
  for (std::size_t f = 0; f < d.num_faces(); ++f)
    out.push_back({{"face_center", point_json(d.faces[f].square.center)},
                   {"orientation", to_string(d.faces[f].square.orientation)},
                   {"h", h.at(static_cast<FaceId>(f))}});
  return out;
}

inline json trace_to_json(const ShuffleTrace& t) {
  return {{"order", t.order_before.str()},
          {"creations", t.creations},
          {"annihilations", t.annihilations},
          {"tails_added", t.tails_added}};
}

inline std::string big_str(const BigInt& x) { return x.str(); }

}  // namespace dp3
