#include "serialize.hpp"

namespace qhb::io {

json to_json(const Rational& r) { return r.str(); }

json to_json(const DInvariantTable& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.values.size(); ++i) rows.push_back({{"i", i}, {"d", t.values[i].str()}});
  return rows;
}

json to_json(const PlumbingGraph& g) {
  json v = json::array(), e = json::array();
  for (const auto& x : g.vertices) v.push_back({{"id", x.id}, {"weight", x.weight}});
  for (const auto& [a, b] : g.edges) e.push_back({a, b});
  return {{"vertices", v}, {"edges", e}};
}

json to_json(const SeifertData& s) {
  json f = json::array();
  for (const auto& x : s.fibres) f.push_back({std::to_string(x.alpha), std::to_string(x.beta)});
  return {{"b", s.b}, {"fibres", f}};
}

json to_json(const EmbedResult& r) {
  json out{{"embeddable", r.embeddable()}, {"witness", nullptr}, {"nodes_explored", r.nodes_explored}};
  if (r.witness) out["witness"] = r.witness->vectors;
  if (r.status == EmbedStatus::BudgetExceeded) out["status"] = to_string(r.status);
  return out;
}

json to_json(const ObstructionReport& r) {
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"name", v.name}, {"result", to_string(v.result)}, {"certificate", v.certificate},
                        {"binding", v.binding}});
  json out{{"knot", r.knot}, {"slope", r.slope.str()}, {"overall", to_string(r.overall)}, {"reason", r.reason},
           {"verdicts", verdicts}};
  if (r.overall == Overall::KnownBounds) out["citation"] = r.citation;
  return out;
}

json to_json(const SweepEntry& e) {
  json out{{"p", e.pair.p}, {"q", e.pair.q}, {"n", e.slope.str()}, {"k", e.pair.k}, {"sign", e.pair.sign},
           {"overall", to_string(e.report.overall)}, {"reason", e.report.reason}};
  if (e.certificate) out["certificate"] = {{"method", e.certificate->method}, {"detail", e.certificate->detail}};
  return out;
}

namespace {

Int parse_int_field(const json& j) {
  if (j.is_number_integer()) return j.get<Int>();
  if (j.is_string()) {
    auto r = Rational::parse(j.get<std::string>());
    return r.to_int();
  }
  throw DomainError("expected an integer, got " + j.dump());
}

}  // namespace

PlumbingGraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw DomainError("graph JSON needs a \"vertices\" array");
  PlumbingGraph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back({parse_int_field(v.at("id")), parse_int_field(v.at("weight"))});
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw DomainError("edge must be a pair of vertex ids");
      g.edges.emplace_back(parse_int_field(e[0]), parse_int_field(e[1]));
    }
  g.validate();
  return g;
}

SeifertData seifert_from_json(const json& j) {
  SeifertData s;
  s.b = parse_int_field(j.at("b"));
  for (const auto& f : j.at("fibres")) {
    if (!f.is_array() || f.size() != 2) throw DomainError("fibre must be [alpha, beta]");
    s.fibres.push_back({parse_int_field(f[0]), parse_int_field(f[1])});
  }
  return s;
}

std::string csv_header() { return "p,q,n,overall,reason"; }

std::string csv_row(const SweepEntry& e) {
  std::string reason = e.report.reason;
  if (e.certificate) reason += " [certified: " + e.certificate->method + "]";
  std::string quoted = "\"";
  for (char c : reason) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return std::to_string(e.pair.p) + "," + std::to_string(e.pair.q) + "," + e.slope.str() + "," +
         to_string(e.report.overall) + "," + quoted;
}

}  // namespace qhb::io
