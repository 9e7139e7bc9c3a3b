#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dglift/dsl.hpp"
#include "dglift/obstruction.hpp"
#include "dglift/selftest.hpp"

namespace dglift {

inline constexpr const char* kVersion = "0.1.0";

// The report is plain data (strings and integers) so that it can be
// serialized, parsed back and compared without the algebra objects.

struct LabelledValue {
  std::string basis;
  std::string value;  // σ-coordinates
  std::string pairs;  // raw m1^o⊗m2·r form
  friend bool operator==(const LabelledValue&, const LabelledValue&) = default;
};

struct FunctionalDoc {
  std::string equation;
  std::string basis;
  std::string value;
  friend bool operator==(const FunctionalDoc&, const FunctionalDoc&) = default;
};

struct CertificateDoc {
  std::string method;
  std::vector<std::string> source_blocks;
  std::vector<std::string> target_blocks;
  std::vector<std::string> columns;
  std::vector<std::string> rows;
  long rank = 0;
  long augmented_rank = 0;
  std::vector<FunctionalDoc> functional;
  std::string pairing;
  bool verified = false;
  friend bool operator==(const CertificateDoc&, const CertificateDoc&) = default;
};

struct ModuleResult {
  std::string module;
  std::optional<std::string> decision;
  std::optional<std::string> method;
  std::vector<LabelledValue> obstruction;
  std::optional<std::vector<LabelledValue>> witness;
  std::optional<bool> witness_verified;
  std::optional<CertificateDoc> certificate;
  friend bool operator==(const ModuleResult&, const ModuleResult&) = default;
};

struct HomologyDoc {
  std::string algebra;
  std::string bidegree;
  long dimension = 0;
  long cycles = 0;
  long boundaries = 0;
  long homology = 0;
  friend bool operator==(const HomologyDoc&, const HomologyDoc&) = default;
};

struct DeltaDoc {
  std::string algebra;
  std::string element;
  std::string value;
  std::string pairs;
  friend bool operator==(const DeltaDoc&, const DeltaDoc&) = default;
};

struct SuiteDoc {
  std::string name;
  long cases = 0;
  long checks = 0;
  long failures = 0;
  bool passed = false;
  std::string first_failure;
  friend bool operator==(const SuiteDoc&, const SuiteDoc&) = default;
};

struct ReportDocument {
  std::string version = kVersion;
  std::string command;
  std::string problem;  // canonical problem text
  std::optional<bool> valid;
  std::vector<ModuleResult> results;
  std::optional<DeltaDoc> delta;
  std::optional<HomologyDoc> homology;
  std::optional<std::vector<SuiteDoc>> selftest;
  std::optional<long> timing_ms;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ModuleResult describe_obstruction(const std::string& name, const SemifreeModule& n);
ModuleResult describe_report(const std::string& name, const SemifreeModule& n, const ObstructionReport& r,
                             bool include_witness);
HomologyDoc describe_homology(const std::string& algebra, const DiagonalHomology& h);
DeltaDoc describe_delta(const std::string& algebra, const AlgebraElement& b);
SuiteDoc describe_suite(const SuiteResult& s);

enum class Format { Json, Text };

std::string emit_report(const ReportDocument& doc, Format format);
/// Inverse of emit_report(doc, Format::Json). Throws Error(SyntaxError) on
/// malformed input.
ReportDocument parse_report(const std::string& json);

}  // namespace dglift
