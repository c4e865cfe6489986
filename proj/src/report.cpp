#include "zetaglue/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace zg {

Json to_json(const Term& t) {
  return Json{{"label", t.label}, {"value", t.value}, {"phase", t.phase}, {"citation", t.formula}};
}

namespace {

Json terms_json(const std::vector<Term>& terms) {
  Json a = Json::array();
  for (const auto& t : terms) a.push_back(to_json(t));
  return a;
}

Json citations(const std::vector<Term>& terms, const std::string& head) {
  Json a = Json::array();
  if (!head.empty()) a.push_back(head);
  for (const auto& t : terms) a.push_back(t.formula);
  return a;
}

void dump_string(std::ostringstream& os, const std::string& s) {
  os << Json(s).dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

void dump_number(std::ostringstream& os, double v) {
  if (!std::isfinite(v)) {
    os << "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
  os << buf;
}

void dump(std::ostringstream& os, const Json& j, int indent, int depth) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    os << '\n' << std::string(std::size_t(indent * d), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        dump_string(os, k);
        os << (pretty ? ": " : ":");
        dump(os, v, indent, depth + 1);
      }
      newline(depth);
      os << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      os << '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) os << ',';
        first = false;
        newline(depth + 1);
        dump(os, v, indent, depth + 1);
      }
      newline(depth);
      os << ']';
      return;
    }
    case Json::value_t::number_float:
      dump_number(os, j.get<double>());
      return;
    case Json::value_t::string:
      dump_string(os, j.get<std::string>());
      return;
    default:
      os << j.dump();
  }
}

}  // namespace

Json to_json(const DetReport& r) {
  Json j;
  j["value"] = r.log_det;
  j["log_det"] = r.log_det;
  j["phase"] = r.phase_multiple;
  j["kernel_dim"] = r.kernel_dim;
  j["terms"] = terms_json(r.terms);
  j["tolerance_achieved"] = r.truncation;
  j["formula"] = r.formula;
  j["citations"] = citations(r.terms, r.formula);
  return j;
}

Json to_json(const GluingReport& g) {
  Json j;
  j["kind"] = g.kind == GluingKind::Robin ? "robin" : "neumann";
  j["value"] = g.residual;
  j["residual"] = g.residual;
  j["lhs"] = g.lhs;
  j["rhs"] = g.rhs;
  j["phase"] = g.lhs_phase - g.rhs_phase;
  j["lhs_phase"] = g.lhs_phase;
  j["rhs_phase"] = g.rhs_phase;
  j["phase_match"] = g.phase_match;
  j["lhs_terms"] = terms_json(g.lhs_terms);
  j["rhs_terms"] = terms_json(g.rhs_terms);
  j["tolerance_achieved"] = g.truncation;
  j["tolerance"] = g.tolerance;
  j["passed"] = g.passed();
  Json c = citations(g.lhs_terms, "");
  for (const auto& t : g.rhs_terms) c.push_back(t.formula);
  j["citations"] = c;
  return j;
}

Json to_json(const InterfaceSpectrum& s) {
  Json j;
  Json e = Json::array();
  for (const auto& x : s.entries) e.push_back(Json::array({x.eigenvalue, x.multiplicity}));
  j["entries"] = e;
  j["zero_modes"] = s.zero_modes;
  j["cutoff"] = s.cutoff;
  j["provenance"] = s.provenance;
  return j;
}

Json to_json(const ZetaPoint& z) {
  Json j;
  j["s"] = z.s;
  j["value"] = z.value;
  j["residue"] = z.residue;
  return j;
}

std::string dump_json(const Json& j, int indent) {
  std::ostringstream os;
  dump(os, j, indent, 0);
  if (indent >= 0) os << '\n';
  return os.str();
}

std::string format_table(const Json& report) {
  std::ostringstream os;
  char buf[256];
  auto rows = [&](const Json& terms, const char* title) {
    if (!terms.is_array()) return;
    os << title << '\n';
    for (const auto& t : terms) {
      std::snprintf(buf, sizeof buf, "  %-40s %24.17g  %+d\n", t.value("label", "").c_str(), t.value("value", 0.0),
                    t.value("phase", 0));
      os << buf;
    }
  };
  if (report.contains("command")) os << "command: " << report["command"].get<std::string>() << '\n';
  const Json& body = report.contains("result") ? report["result"] : report;
  if (body.contains("terms")) rows(body["terms"], "terms");
  if (body.contains("lhs_terms")) rows(body["lhs_terms"], "left side");
  if (body.contains("rhs_terms")) rows(body["rhs_terms"], "right side");
  if (body.contains("entries") && body["entries"].is_array()) {
    os << "eigenvalues (multiplicity)\n";
    for (const auto& e : body["entries"]) {
      std::snprintf(buf, sizeof buf, "  %24.17g  (%lld)\n", e[0].get<double>(), e[1].get<long long>());
      os << buf;
    }
  }
  for (const char* k : {"value", "residual", "lhs", "rhs", "phase", "tolerance_achieved"}) {
    if (!body.contains(k)) continue;
    if (body[k].is_number_float())
      std::snprintf(buf, sizeof buf, "%-20s %.17g\n", k, body[k].get<double>());
    else
      std::snprintf(buf, sizeof buf, "%-20s %s\n", k, body[k].dump().c_str());
    os << buf;
  }
  return os.str();
}

}  // namespace zg
