#include "stc/report.hpp"

#include <sstream>

namespace stc {

std::string to_decimal(const Rational& r, int digits) {
  __extension__ using i128 = __int128;
  i128 num = r.numerator();
  const i128 den = r.denominator();
  const bool negative = num < 0;
  if (negative) num = -num;
  i128 scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half away from zero.
  const i128 scaled = (num * scale * 2 + den) / (den * 2);
  const auto whole = static_cast<long long>(scaled / scale);
  std::string frac = std::to_string(static_cast<long long>(scaled % scale));
  std::string out = (negative && scaled != 0 ? "-" : "") + std::to_string(whole);
  if (digits > 0) out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  return out;
}

namespace report {

Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Json to_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

Json to_json(const CongestionReport& c) {
  Json per_edge = Json::array();
  for (const auto& [e, load] : c.per_edge) per_edge.push_back(Json{{"edge", to_json(e)}, {"congestion", load}});
  Json out{{"max_congestion", c.max_congestion}};
  out["argmax_edge"] = c.argmax_edge ? to_json(*c.argmax_edge) : Json(nullptr);
  out["per_edge"] = std::move(per_edge);
  return out;
}

Json to_json(const DecompositionTree& d) {
  Json nodes = Json::array();
  for (std::size_t t = 0; t < d.nodes.size(); ++t) {
    const auto& node = d.nodes[t];
    nodes.push_back(Json{{"id", t},
                         {"depth", node.depth},
                         {"height", node.height},
                         {"congestion", node.congestion},
                         {"vertex_set", to_json(node.vertex_set)},
                         {"cut_edges", to_json(node.cut_edges)},
                         {"connector_edges", to_json(node.connector_edges)},
                         {"children", node.children}});
  }
  return Json{{"oracle", std::string(oracle_name(d.oracle))},
              {"root", 0},
              {"root_height", d.root_height()},
              {"node_count", d.nodes.size()},
              {"nodes", std::move(nodes)}};
}

Json to_json(const std::vector<RecurrenceCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks)
    out.push_back(Json{{"node", c.node},
                       {"congestion", c.congestion},
                       {"max_child_congestion", c.max_child_congestion},
                       {"cut_size", c.cut_size},
                       {"slack", c.slack}});
  return out;
}

Json to_json(const GlobalBoundCheck& check) {
  return Json{{"congestion", check.congestion},
              {"height", check.height},
              {"hereditary_bisection", check.hereditary_bisection},
              {"height_cap", check.height_cap}};
}

Json to_json(const BoundCertificate& cert) {
  Json out{{"kind", std::string(certificate_name(cert.kind))},
           {"value", to_json(cert.value)},
           {"max_degree", cert.max_degree}};
  switch (cert.kind) {
    case CertificateKind::LemmaLb1:
      out["subgraph"] = to_json(cert.subgraph);
      if (cert.expansion)
        out["expansion"] = Json{{"value", to_json(cert.expansion->value)},
                                {"witness", to_json(cert.expansion->witness)}};
      break;
    case CertificateKind::CorollaryLb2:
      out["subgraph"] = to_json(cert.subgraph);
      out["hereditary_bisection"] = cert.hereditary_bisection;
      if (cert.bisection)
        out["bisection"] = Json{{"side", to_json(cert.bisection->side_s)},
                                {"crossing_edges", to_json(cert.bisection->crossing_edges)}};
      break;
    case CertificateKind::Averaging:
      break;
  }
  return out;
}

Json to_json(const ApproximationRecord& rec) {
  Json out{{"n", rec.n},
           {"m", rec.m},
           {"max_degree", rec.max_degree},
           {"congestion", rec.congestion},
           {"denominator", to_json(rec.denominator)},
           {"denominator_kind", rec.denominator_kind},
           {"exact_denominator", rec.exact_denominator},
           {"ratio", to_json(rec.ratio)},
           {"height", rec.height}};
  out["hereditary_bisection"] = rec.hereditary_bisection ? Json(*rec.hereditary_bisection) : Json(nullptr);
  return out;
}

std::string to_dot(const DecompositionTree& d) {
  std::ostringstream out;
  out << "digraph decomposition {\n  node [shape=box];\n";
  for (std::size_t t = 0; t < d.nodes.size(); ++t) {
    const auto& node = d.nodes[t];
    out << "  n" << t << " [label=\"";
    if (node.vertex_set.size() == 1)
      out << "v" << node.vertex_set[0];
    else
      out << "|V|=" << node.vertex_set.size() << "\\n|F|=" << node.cut_edges.size() << "\\nh=" << node.height
          << " c=" << node.congestion;
    out << "\"];\n";
  }
  for (std::size_t t = 0; t < d.nodes.size(); ++t)
    for (std::size_t c : d.nodes[t].children) out << "  n" << t << " -> n" << c << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace report
}  // namespace stc
