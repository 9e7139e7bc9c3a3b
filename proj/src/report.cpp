#include "dglift/report.hpp"

#include <json.hpp>

#include "dglift/error.hpp"

namespace dglift {

using Json = nlohmann::ordered_json;

ModuleResult describe_obstruction(const std::string& name, const SemifreeModule& n) {
  ModuleResult r;
  r.module = name;
  const auto delta = delta_N(n);
  for (std::size_t l = 0; l < n.rank(); ++l)
    r.obstruction.push_back({n.basis()[l].label, n.to_string(delta[l]), n.to_string(iota_N(n, delta[l]))});
  return r;
}

ModuleResult describe_report(const std::string& name, const SemifreeModule& n, const ObstructionReport& rep,
                             bool include_witness) {
  ModuleResult r = describe_obstruction(name, n);
  r.decision = to_string(rep.decision);
  r.method = to_string(rep.method);
  if (rep.witness && include_witness) {
    std::vector<LabelledValue> w;
    for (std::size_t l = 0; l < n.rank(); ++l)
      w.push_back({n.basis()[l].label, n.to_string(rep.witness->gamma[l]), n.to_string(iota_N(n, rep.witness->gamma[l]))});
    r.witness = std::move(w);
    r.witness_verified = verify_witness(n, *rep.witness);
  }
  if (rep.certificate) {
    const Certificate& c = *rep.certificate;
    CertificateDoc d;
    d.method = to_string(c.method);
    for (const auto& b : c.source_blocks) d.source_blocks.push_back(b.to_string());
    for (const auto& b : c.target_blocks) d.target_blocks.push_back(b.to_string());
    d.columns = c.columns;
    d.rows = c.rows;
    d.rank = static_cast<long>(c.rank);
    d.augmented_rank = static_cast<long>(c.augmented_rank);
    for (const auto& e : c.functional)
      d.functional.push_back({n.basis()[e.equation].label, n.key_to_string(e.key), e.value.to_string()});
    d.pairing = c.pairing.to_string();
    d.verified = verify_certificate(n, c);
    r.certificate = std::move(d);
  }
  return r;
}

HomologyDoc describe_homology(const std::string& algebra, const DiagonalHomology& h) {
  return {algebra,
          h.bidegree.to_string(),
          static_cast<long>(h.dimension),
          static_cast<long>(h.cycles),
          static_cast<long>(h.boundaries),
          static_cast<long>(h.homology)};
}

DeltaDoc describe_delta(const std::string& algebra, const AlgebraElement& b) {
  const DiagonalElement d = universal_delta(b);
  return {algebra, b.to_string(), d.to_string(), d.to_envelope().to_string()};
}

SuiteDoc describe_suite(const SuiteResult& s) {
  return {s.name,
          static_cast<long>(s.cases),
          static_cast<long>(s.checks),
          static_cast<long>(s.failures),
          s.passed(),
          s.first_failure};
}

namespace {

Json labelled(const std::vector<LabelledValue>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back({{"basis", e.basis}, {"value", e.value}, {"pairs", e.pairs}});
  return a;
}

std::vector<LabelledValue> labelled(const Json& a) {
  std::vector<LabelledValue> out;
  for (const auto& e : a) out.push_back({e.at("basis"), e.at("value"), e.at("pairs")});
  return out;
}

Json to_json(const CertificateDoc& c) {
  Json f = Json::array();
  for (const auto& e : c.functional) f.push_back({{"equation", e.equation}, {"basis", e.basis}, {"value", e.value}});
  return {{"method", c.method},
          {"source_blocks", c.source_blocks},
          {"target_blocks", c.target_blocks},
          {"columns", c.columns},
          {"rows", c.rows},
          {"rank", c.rank},
          {"augmented_rank", c.augmented_rank},
          {"functional", f},
          {"pairing", c.pairing},
          {"verified", c.verified}};
}

CertificateDoc certificate_from(const Json& j) {
  CertificateDoc c;
  c.method = j.at("method");
  c.source_blocks = j.at("source_blocks").get<std::vector<std::string>>();
  c.target_blocks = j.at("target_blocks").get<std::vector<std::string>>();
  c.columns = j.at("columns").get<std::vector<std::string>>();
  c.rows = j.at("rows").get<std::vector<std::string>>();
  c.rank = j.at("rank");
  c.augmented_rank = j.at("augmented_rank");
  for (const auto& e : j.at("functional")) c.functional.push_back({e.at("equation"), e.at("basis"), e.at("value")});
  c.pairing = j.at("pairing");
  c.verified = j.at("verified");
  return c;
}

Json to_json(const ReportDocument& doc) {
  Json j;
  j["version"] = doc.version;
  j["command"] = doc.command;
  j["problem"] = doc.problem;
  if (doc.valid) j["valid"] = *doc.valid;
  Json results = Json::array();
  for (const auto& r : doc.results) {
    Json m;
    m["module"] = r.module;
    if (r.decision) m["decision"] = *r.decision;
    if (r.method) m["method"] = *r.method;
    m["obstruction"] = labelled(r.obstruction);
    if (r.witness) m["witness"] = labelled(*r.witness);
    if (r.witness_verified) m["witness_verified"] = *r.witness_verified;
    if (r.certificate) m["certificate"] = to_json(*r.certificate);
    results.push_back(std::move(m));
  }
  j["results"] = std::move(results);
  if (doc.delta)
    j["delta"] = {{"algebra", doc.delta->algebra},
                  {"element", doc.delta->element},
                  {"value", doc.delta->value},
                  {"pairs", doc.delta->pairs}};
  if (doc.homology)
    j["homology"] = {{"algebra", doc.homology->algebra},     {"bidegree", doc.homology->bidegree},
                     {"dimension", doc.homology->dimension}, {"cycles", doc.homology->cycles},
                     {"boundaries", doc.homology->boundaries}, {"homology", doc.homology->homology}};
  if (doc.selftest) {
    Json suites = Json::array();
    for (const auto& s : *doc.selftest)
      suites.push_back({{"name", s.name},
                        {"cases", s.cases},
                        {"checks", s.checks},
                        {"failures", s.failures},
                        {"passed", s.passed},
                        {"first_failure", s.first_failure}});
    j["selftest"] = std::move(suites);
  }
  if (doc.timing_ms) j["timing_ms"] = *doc.timing_ms;
  return j;
}

std::string text_report(const ReportDocument& doc) {
  std::string out = "dglift " + doc.version + " " + doc.command + "\n";
  if (!doc.problem.empty()) {
    out += "problem:\n";
    std::size_t start = 0;
    while (start < doc.problem.size()) {
      const std::size_t end = doc.problem.find('\n', start);
      out += "  " + doc.problem.substr(start, end - start) + "\n";
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  if (doc.valid) out += std::string("valid: ") + (*doc.valid ? "yes" : "no") + "\n";
  for (const auto& r : doc.results) {
    out += "module " + r.module;
    if (r.decision) out += ": " + *r.decision;
    if (r.method) out += " (" + *r.method + ")";
    out += "\n";
    for (const auto& o : r.obstruction) {
      out += "  Δ_N(" + o.basis + ") = " + o.value + "\n";
      if (o.pairs != o.value) out += "      = " + o.pairs + "\n";
    }
    if (r.witness) {
      for (const auto& w : *r.witness) out += "  γ(" + w.basis + ") = " + w.value + "\n";
      if (r.witness_verified) out += std::string("  witness verified: ") + (*r.witness_verified ? "yes" : "no") + "\n";
    }
    if (r.certificate) {
      const CertificateDoc& c = *r.certificate;
      auto blocks = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + v[i];
        return s;
      };
      out += "  certificate (" + c.method + "): unknowns " + blocks(c.source_blocks) + ", equations " +
             blocks(c.target_blocks) + ", " + std::to_string(c.rows.size()) + "x" + std::to_string(c.columns.size()) +
             ", rank " + std::to_string(c.rank) + ", augmented rank " + std::to_string(c.augmented_rank) + "\n";
      for (const auto& f : c.functional) out += "    y[" + f.equation + "] " + f.basis + " = " + f.value + "\n";
      out += "    pairing with Δ_N: " + c.pairing + "\n";
      out += std::string("  certificate verified: ") + (c.verified ? "yes" : "no") + "\n";
    }
  }
  if (doc.delta) {
    out += "δ(" + doc.delta->element + ") = " + doc.delta->value + "\n";
    out += "  = " + doc.delta->pairs + "\n";
  }
  if (doc.homology) {
    const HomologyDoc& h = *doc.homology;
    out += "J" + h.bidegree + " of " + h.algebra + ": dim " + std::to_string(h.dimension) + ", cycles " +
           std::to_string(h.cycles) + ", boundaries " + std::to_string(h.boundaries) + ", homology " +
           std::to_string(h.homology) + "\n";
  }
  if (doc.selftest)
    for (const auto& s : *doc.selftest) {
      out += (s.passed ? "PASS " : "FAIL ") + s.name + ": " + std::to_string(s.cases) + " cases, " +
             std::to_string(s.checks) + " checks, " + std::to_string(s.failures) + " failures";
      if (!s.first_failure.empty()) out += " (" + s.first_failure + ")";
      out += "\n";
    }
  if (doc.timing_ms) out += "timing: " + std::to_string(*doc.timing_ms) + " ms\n";
  return out;
}

}  // namespace

std::string emit_report(const ReportDocument& doc, Format format) {
  if (format == Format::Text) return text_report(doc);
  return to_json(doc).dump(2) + "\n";
}

ReportDocument parse_report(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    ReportDocument doc;
    doc.version = j.at("version");
    doc.command = j.at("command");
    doc.problem = j.at("problem");
    if (j.contains("valid")) doc.valid = j["valid"].get<bool>();
    for (const auto& m : j.at("results")) {
      ModuleResult r;
      r.module = m.at("module");
      if (m.contains("decision")) r.decision = m["decision"].get<std::string>();
      if (m.contains("method")) r.method = m["method"].get<std::string>();
      r.obstruction = labelled(m.at("obstruction"));
      if (m.contains("witness")) r.witness = labelled(m["witness"]);
      if (m.contains("witness_verified")) r.witness_verified = m["witness_verified"].get<bool>();
      if (m.contains("certificate")) r.certificate = certificate_from(m["certificate"]);
      doc.results.push_back(std::move(r));
    }
    if (j.contains("delta")) {
      const Json& d = j["delta"];
      doc.delta = DeltaDoc{d.at("algebra"), d.at("element"), d.at("value"), d.at("pairs")};
    }
    if (j.contains("homology")) {
      const Json& h = j["homology"];
      doc.homology = HomologyDoc{h.at("algebra"), h.at("bidegree"), h.at("dimension"),
                                 h.at("cycles"),  h.at("boundaries"), h.at("homology")};
    }
    if (j.contains("selftest")) {
      std::vector<SuiteDoc> suites;
      for (const auto& s : j["selftest"])
        suites.push_back({s.at("name"), s.at("cases"), s.at("checks"), s.at("failures"), s.at("passed"),
                          s.at("first_failure")});
      doc.selftest = std::move(suites);
    }
    if (j.contains("timing_ms")) doc.timing_ms = j["timing_ms"].get<long>();
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::SyntaxError, std::string("malformed report: ") + e.what());
  }
}

}  // namespace dglift
