#include "clawpath/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace clawpath {

namespace {

std::string strip_comment(std::string line) {
  if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
  return line;
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r\n") == std::string::npos; }

template <typename T>
T read_number(std::istringstream& ss, std::size_t lineno, const char* what) {
  long long x;
  if (!(ss >> x) || x < 0)
    throw InputError("line " + std::to_string(lineno) + ": expected " + what);
  return static_cast<T>(x);
}

}  // namespace

Instance read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0, m = 0;
  bool header = false;
  std::vector<Edge> edges;
  std::vector<VertexId> terminals;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_comment(line);
    if (blank(line)) continue;
    std::istringstream ss(line);
    if (!header) {
      n = read_number<std::size_t>(ss, lineno, "\"n m\" header");
      m = read_number<std::size_t>(ss, lineno, "\"n m\" header");
      header = true;
      continue;
    }
    if (line[line.find_first_not_of(" \t")] == 't') {
      char tag;
      ss >> tag;
      VertexId v;
      while (ss >> v) terminals.push_back(v);
      if (!ss.eof()) throw InputError("line " + std::to_string(lineno) + ": bad terminal list");
      continue;
    }
    auto u = read_number<VertexId>(ss, lineno, "edge \"u v\"");
    auto v = read_number<VertexId>(ss, lineno, "edge \"u v\"");
    edges.emplace_back(u, v);
  }
  if (!header) throw InputError("empty edge list");
  if (edges.size() != m)
    throw InputError("header promises " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  return Instance{build_graph(n, edges), terminals, Variant::OrderedPath};
}

void write_edge_list(std::ostream& out, const Instance& inst) {
  auto edges = inst.graph.edges();
  out << inst.graph.capacity() << ' ' << edges.size() << '\n';
  for (auto [u, v] : edges) out << u << ' ' << v << '\n';
  if (!inst.terminals.empty()) {
    out << 't';
    for (VertexId t : inst.terminals) out << ' ' << t;
    out << '\n';
  }
}

Instance instance_from_json(const Json& j) {
  try {
    auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.value("edges", Json::array())) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair [u, v]");
      edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
    }
    Graph g = build_graph(n, edges);
    if (j.contains("vertices")) {
      VertexSet keep(n);
      for (VertexId v : j["vertices"].get<std::vector<VertexId>>()) {
        if (v >= n) throw InputError("vertex " + std::to_string(v) + " out of range");
        keep.insert(v);
      }
      for (auto [u, v] : edges)
        if (!keep.contains(u) || !keep.contains(v)) throw InputError("edge endpoint outside the vertex list");
      g = g.induced(keep);
    }
    Instance inst{std::move(g), j.value("terminals", std::vector<VertexId>{}), Variant::OrderedPath};
    if (j.contains("variant")) {
      auto v = parse_variant(j["variant"].get<std::string>());
      if (!v) throw InputError("unknown variant " + j["variant"].get<std::string>());
      inst.variant = *v;
    }
    return inst;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed instance JSON: ") + e.what());
  }
}

Json to_json(const Graph& g) {
  Json j;
  j["n"] = g.capacity();
  if (g.order() != g.capacity()) j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const Instance& inst) {
  Json j = to_json(inst.graph);
  j["terminals"] = inst.terminals;
  j["variant"] = to_string(inst.variant);
  return j;
}

Json to_json(const PathCertificate& c) { return c.sequence; }

Json to_json(const Stats& s) {
  Json j;
  j["dispatch"] = s.dispatch;
  j["fallbacks"] = s.fallbacks;
  j["fallback_count"] = s.fallback_count();
  j["reductions"] = s.reductions;
  j["seconds"] = s.seconds;
  j["branches"] = s.branches;
  j["discarded_branches"] = s.discarded;
  j["audits"] = s.audits;
  j["audit_failures"] = s.audit_failures;
  j["warnings"] = s.warnings;
  return j;
}

Json to_json(const Answer& a) {
  Json j;
  j["verdict"] = to_string(a.verdict);
  if (a.certificate) {
    j["certificate"] = a.certificate->sequence;
    j["oriented"] = a.certificate->oriented;
  }
  if (!a.paths.empty()) {
    Json p = Json::array();
    for (const auto& c : a.paths) p.push_back(c.sequence);
    j["paths"] = std::move(p);
  }
  if (!a.cycle.empty()) j["cycle"] = a.cycle;
  j["stats"] = to_json(a.stats);
  return j;
}

Verdict parse_verdict(const std::string& s) {
  if (s == "yes") return Verdict::Yes;
  if (s == "no") return Verdict::No;
  if (s == "exhausted") return Verdict::Exhausted;
  throw InputError("unknown verdict " + s);
}

Answer answer_from_json(const Json& j) {
  try {
    Answer a;
    a.verdict = parse_verdict(j.at("verdict").get<std::string>());
    if (j.contains("certificate"))
      a.certificate = PathCertificate{j["certificate"].get<std::vector<VertexId>>(), j.value("oriented", true)};
    if (j.contains("paths"))
      for (const auto& p : j["paths"]) a.paths.push_back({p.get<std::vector<VertexId>>(), true});
    if (j.contains("cycle")) a.cycle = j["cycle"].get<std::vector<VertexId>>();
    return a;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed answer JSON: ") + e.what());
  }
}

Json to_json(const ReductionTrace& t) {
  Json j;
  j["origin"] = to_json(t.origin);
  Json steps = Json::array();
  for (const auto& s : t.steps) {
    Json js;
    js["kind"] = to_string(s.kind);
    js["removed"] = s.removed;
    if (!s.added_vertices.empty()) js["added_vertices"] = s.added_vertices;
    if (!s.added_edges.empty()) {
      Json e = Json::array();
      for (auto [u, v] : s.added_edges) e.push_back({u, v});
      js["added_edges"] = std::move(e);
    }
    js["terminals"] = s.terminals;
    if (s.variant) js["variant"] = to_string(*s.variant);
    if (!s.lift_prefix.empty()) js["lift_prefix"] = s.lift_prefix;
    if (!s.lift_suffix.empty()) js["lift_suffix"] = s.lift_suffix;
    if (!s.note.empty()) js["note"] = s.note;
    steps.push_back(std::move(js));
  }
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const IntervalRepresentation& r) {
  Json j;
  j["flavor"] = r.flavor == Flavor::Linear ? "linear" : "circular";
  Json pos = Json::object();
  for (auto& [v, p] : r.positions) pos[std::to_string(v)] = p.to_string();
  j["positions"] = std::move(pos);
  Json iv = Json::array();
  for (const auto& i : r.intervals) iv.push_back({i.lo.to_string(), i.hi.to_string()});
  j["intervals"] = std::move(iv);
  if (r.flavor == Flavor::Circular) j["circumference"] = r.circumference.to_string();
  return j;
}

IntervalRepresentation interval_representation_from_json(const Json& j) {
  try {
    IntervalRepresentation r;
    auto flavor = j.at("flavor").get<std::string>();
    if (flavor != "linear" && flavor != "circular") throw InputError("unknown flavor " + flavor);
    r.flavor = flavor == "linear" ? Flavor::Linear : Flavor::Circular;
    for (auto& [k, v] : j.at("positions").items())
      r.positions.emplace_back(static_cast<VertexId>(std::stoul(k)), Rational::parse(v.get<std::string>()));
    std::sort(r.positions.begin(), r.positions.end());
    for (const auto& iv : j.at("intervals"))
      r.intervals.push_back({Rational::parse(iv.at(0).get<std::string>()), Rational::parse(iv.at(1).get<std::string>())});
    if (r.flavor == Flavor::Circular) r.circumference = Rational::parse(j.at("circumference").get<std::string>());
    return r;
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed representation JSON: ") + e.what());
  }
}

Json to_json(const StripComposition& c) {
  Json j;
  Json strips = Json::array();
  for (const auto& s : c.strips) {
    Json js;
    js["graph"] = to_json(s.graph);
    js["end_a"] = s.end_a;
    js["end_b"] = s.end_b;
    js["representation"] = to_json(s.rep);
    strips.push_back(std::move(js));
  }
  j["strips"] = std::move(strips);
  j["base_cliques"] = c.base_cliques;
  return j;
}

}  // namespace clawpath
