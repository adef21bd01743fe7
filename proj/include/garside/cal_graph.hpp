#pragma once

// Local pieces of the additional length graph: vertices are the classes
// g<Delta>, edges come from proper simples and from a declared pool of
// certified absorbable elements.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "absorbable.hpp"
#include "detail/parallel.hpp"
#include "io.hpp"

namespace garside {

/// Class g<Delta>, stored through its representative of infimum 0.
struct CalVertex {
  GroupElement rep;
  friend bool operator==(const CalVertex&, const CalVertex&) = default;
  friend auto operator<=>(const CalVertex& a, const CalVertex& b) { return a.rep <=> b.rep; }
};

inline CalVertex vertex_of(const Garside& g, const GroupElement& x) {
  // x Delta^{-k} = tau^k(s_1 ... s_r)
  GroupElement rep = g.tau(x, x.inf);
  rep.inf = 0;
  return CalVertex{std::move(rep)};
}

inline CalVertex base_vertex(const Garside& g) { return CalVertex{g.identity()}; }

/// Left action of the group on vertices.
inline CalVertex act(const Garside& g, const GroupElement& h, const CalVertex& v) {
  return vertex_of(g, g.multiply(h, v.rep));
}

enum class EdgeKind { simple, absorbable };

inline const char* edge_kind_name(EdgeKind k) { return k == EdgeKind::simple ? "simple" : "absorbable"; }

struct CalEdge {
  CalVertex from;
  CalVertex to;
  EdgeKind kind = EdgeKind::simple;
  GroupElement label;
  std::optional<AbsorptionCertificate> certificate;
};

/// Absorbable elements admitted as edges, each with a certificate or (rank 2)
/// approval by the exact classifier. make_pool closes the set under tau so
/// that pool edges are symmetric.
struct AbsorbablePool {
  std::vector<GroupElement> elements;
  std::vector<std::optional<AbsorptionCertificate>> certificates;
};

inline AbsorbablePool make_pool(const Garside& g, const std::vector<GroupElement>& elements, int search_radius = 2) {
  AbsorbablePool pool;
  std::vector<GroupElement> closed;
  for (const auto& y : elements)
    for (const GroupElement& z : {y, g.tau(y)})
      if (std::find(closed.begin(), closed.end(), z) == closed.end()) closed.push_back(z);
  for (const auto& y : closed) {
    if (y.is_identity()) continue;
    if (y.inf != 0 && y.sup() != 0) throw Error("unverified_pool", "pool element is not absorbable: " + g.to_text(y));
    std::optional<AbsorptionCertificate> cert = bounded_search(g, y, search_radius);
    if (!cert && !(g.system().rank() <= 2 && classify_absorbable_small(g, y)))
      throw Error("unverified_pool", "no absorption certificate found for " + g.to_text(y));
    pool.elements.push_back(y);
    pool.certificates.push_back(cert);
  }
  return pool;
}

/// Simple edges (right multiplication by each proper simple) followed by pool
/// edges for y and y^{-1}; deduplicated per (kind, target).
inline std::vector<CalEdge> neighbors(const Garside& g, const CalVertex& v, const AbsorbablePool& pool,
                                      const std::vector<Simple>& simples) {
  std::vector<CalEdge> out;
  std::map<std::pair<int, CalVertex>, std::size_t> seen;
  auto add = [&](EdgeKind kind, const GroupElement& label, std::optional<AbsorptionCertificate> cert) {
    CalVertex w = vertex_of(g, g.multiply(v.rep, label));
    if (w == v) return;
    if (!seen.emplace(std::make_pair(static_cast<int>(kind), w), out.size()).second) return;
    out.push_back(CalEdge{v, std::move(w), kind, label, std::move(cert)});
  };
  for (const auto& s : simples) add(EdgeKind::simple, g.from_simple(s), std::nullopt);
  for (std::size_t i = 0; i < pool.elements.size(); ++i) {
    const auto& y = pool.elements[i];
    const auto& c = pool.certificates[i];
    add(EdgeKind::absorbable, y, c);
    add(EdgeKind::absorbable, g.inverse(y), c ? std::optional(inverse_certificate(g, *c)) : std::nullopt);
  }
  return out;
}

inline std::vector<CalEdge> neighbors(const Garside& g, const CalVertex& v, const AbsorbablePool& pool) {
  return neighbors(g, v, pool, g.proper_simples());
}

struct BallEdge {
  int from = 0;
  int to = 0;
  EdgeKind kind = EdgeKind::simple;
  GroupElement label;
};

struct CalBall {
  CalVertex center;
  int radius = 0;
  std::vector<CalVertex> vertices;  // sorted by (distance, rep); center first
  std::vector<int> distance;
  std::vector<BallEdge> edges;      // from < to, sorted
  AbsorbablePool pool;
  bool complete = true;
};

/// Breadth-first ball; stops at `vertex_budget` vertices and flags the result
/// as incomplete instead of truncating silently.
inline CalBall ball(const Garside& g, const CalVertex& center, int radius, const AbsorbablePool& pool,
                    std::size_t vertex_budget = detail::budget(200'000)) {
  if (radius < 0) throw Error("bad_radius", "radius must be >= 0");
  const std::vector<Simple> simples = g.proper_simples();
  CalBall b;
  b.center = center;
  b.radius = radius;
  b.pool = pool;
  std::map<CalVertex, int> dist{{center, 0}};
  std::vector<CalVertex> frontier{center};
  for (int r = 1; r <= radius && !frontier.empty() && b.complete; ++r) {
    std::vector<std::vector<CalEdge>> found(frontier.size());
    detail::parallel_for(frontier.size(), [&](std::size_t i) { found[i] = neighbors(g, frontier[i], pool, simples); });
    std::vector<CalVertex> next;
    for (const auto& batch : found)
      for (const auto& e : batch) {
        if (dist.count(e.to)) continue;
        if (dist.size() >= vertex_budget) {
          b.complete = false;
          break;
        }
        dist.emplace(e.to, r);
        next.push_back(e.to);
      }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }
  std::vector<std::pair<int, CalVertex>> order;
  for (const auto& [v, d] : dist) order.emplace_back(d, v);
  std::sort(order.begin(), order.end());
  std::map<CalVertex, int> index;
  for (const auto& [d, v] : order) {
    index.emplace(v, static_cast<int>(b.vertices.size()));
    b.vertices.push_back(v);
    b.distance.push_back(d);
  }
  // Edges between members, each undirected edge once per kind.
  std::vector<std::vector<CalEdge>> all(b.vertices.size());
  detail::parallel_for(b.vertices.size(), [&](std::size_t i) { all[i] = neighbors(g, b.vertices[i], pool, simples); });
  std::map<std::tuple<int, int, int>, GroupElement> edges;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (const auto& e : all[i]) {
      const auto it = index.find(e.to);
      if (it == index.end()) continue;
      const int a = static_cast<int>(i), c = it->second;
      if (a < c) {
        edges.emplace(std::make_tuple(a, c, static_cast<int>(e.kind)), e.label);
      } else if (e.kind == EdgeKind::absorbable) {
        // rep(a) y = rep(c) Delta^p, so rep(c) tau^p(y^{-1}) lies in the class of a.
        const int p = g.multiply(b.vertices[a].rep, e.label).inf;
        edges.emplace(std::make_tuple(c, a, static_cast<int>(e.kind)), g.tau(g.inverse(e.label), p));
      }
    }
  for (const auto& [key, label] : edges)
    b.edges.push_back(BallEdge{std::get<0>(key), std::get<1>(key), static_cast<EdgeKind>(std::get<2>(key)), label});
  return b;
}

/// Length of a certified chain from u to v: each factor is a proper simple or
/// an absorbable element with a certificate, and rep(u) * product lies in v.
inline int distance_upper_bound(const Garside& g, const CalVertex& u, const CalVertex& v,
                                const std::vector<GroupElement>& chain,
                                const std::vector<std::optional<AbsorptionCertificate>>& certificates) {
  GroupElement acc = u.rep;
  int edges = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    const GroupElement& f = chain[i];
    if (f.is_identity()) continue;
    const bool simple = f.inf == 0 && f.canonical_length() == 1;
    const auto* cert = i < certificates.size() && certificates[i] ? &*certificates[i] : nullptr;
    const bool certified = cert && cert->absorbed == f && verify_certificate(g, *cert);
    if (!simple && !certified && f.factors.empty()) {
      acc = g.multiply(acc, f);  // a Delta power stays in the same class
      continue;
    }
    if (!simple && !certified) throw Error("bad_chain", "chain factor is neither a proper simple nor certified");
    acc = g.multiply(acc, f);
    ++edges;
  }
  if (vertex_of(g, acc) != v) throw Error("bad_chain", "chain does not connect the two vertices");
  return edges;
}

inline int distance_upper_bound(const Garside& g, const CalVertex& u, const CalVertex& v,
                                const AbsorbableDecomposition& d) {
  if (!check_decomposition(g, d)) throw Error("bad_chain", "decomposition does not verify");
  std::vector<std::optional<AbsorptionCertificate>> certs(d.certificates.begin(), d.certificates.end());
  return distance_upper_bound(g, u, v, d.factors, certs);
}

inline int distance_upper_bound(const Garside& g, const CalVertex& u, const CalVertex& v,
                                const std::vector<Simple>& simple_path) {
  std::vector<GroupElement> chain;
  for (const auto& s : simple_path) {
    if (!g.is_proper(s)) throw Error("bad_chain", "path step is not a proper simple");
    chain.push_back(g.from_simple(s));
  }
  return distance_upper_bound(g, u, v, chain, {});
}

// ---- serialization ------------------------------------------------------

inline Json ball_to_json(const Garside& g, const CalBall& b) {
  Json vertices = Json::array(), edges = Json::array(), pool = Json::array(), dist = Json::array();
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    vertices.push_back(to_json(g, b.vertices[i].rep));
    dist.push_back(b.distance[i]);
  }
  for (const auto& e : b.edges)
    edges.push_back(Json{{"from", e.from}, {"to", e.to}, {"kind", edge_kind_name(e.kind)}, {"label", to_json(g, e.label)}});
  for (std::size_t i = 0; i < b.pool.elements.size(); ++i) {
    Json entry{{"element", to_json(g, b.pool.elements[i])}};
    entry["certificate"] = b.pool.certificates[i] ? to_json(g, *b.pool.certificates[i]) : Json(nullptr);
    pool.push_back(entry);
  }
  return Json{{"system", g.system().name()},
              {"center", to_json(g, b.center.rep)},
              {"radius", b.radius},
              {"complete", b.complete},
              {"pool", pool},
              {"vertices", vertices},
              {"distance", dist},
              {"edges", edges}};
}

inline CalBall ball_from_json(const Garside& g, const Json& j) {
  CalBall b;
  try {
    if (j.at("system").get<std::string>() != g.system().name()) throw Error("bad_json", "ball belongs to another system");
    b.center = CalVertex{element_from_json(g, j.at("center"))};
    b.radius = j.at("radius").get<int>();
    b.complete = j.at("complete").get<bool>();
    for (const auto& v : j.at("vertices")) b.vertices.push_back(CalVertex{element_from_json(g, v)});
    b.distance = j.at("distance").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) {
      const std::string kind = e.at("kind").get<std::string>();
      if (kind != "simple" && kind != "absorbable") throw Error("bad_json", "unknown edge kind " + kind);
      b.edges.push_back(BallEdge{e.at("from").get<int>(), e.at("to").get<int>(),
                                 kind == "simple" ? EdgeKind::simple : EdgeKind::absorbable,
                                 element_from_json(g, e.at("label"))});
    }
    std::vector<GroupElement> elems;
    for (const auto& p : j.at("pool")) {
      b.pool.elements.push_back(element_from_json(g, p.at("element")));
      const Json& c = p.at("certificate");
      if (c.is_null()) {
        b.pool.certificates.emplace_back();
      } else {
        b.pool.certificates.push_back(certify(g, element_from_json(g, c.at("absorbed")), element_from_json(g, c.at("absorber"))));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error("bad_json", e.what());
  }
  const int n = static_cast<int>(b.vertices.size());
  if (static_cast<int>(b.distance.size()) != n) throw Error("bad_json", "distance list length mismatch");
  for (const auto& e : b.edges)
    if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n) throw Error("bad_json", "edge endpoint out of range");
  return b;
}

inline std::string ball_to_dot(const Garside& g, const CalBall& b) {
  std::ostringstream out;
  out << "graph cal {\n";
  out << "  // " << g.system().name() << ", radius " << b.radius << (b.complete ? "" : ", incomplete") << "\n";
  for (std::size_t i = 0; i < b.vertices.size(); ++i)
    out << "  n" << i << " [label=\"" << g.to_text(b.vertices[i].rep) << "\"];\n";
  for (const auto& e : b.edges)
    out << "  n" << e.from << " -- n" << e.to << " [kind=" << edge_kind_name(e.kind)
        << (e.kind == EdgeKind::absorbable ? ", style=dashed" : "") << ", label=\"" << g.to_text(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace garside
