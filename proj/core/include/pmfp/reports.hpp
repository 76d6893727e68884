#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pmfp/axiom_check.hpp"
#include "pmfp/contraction.hpp"
#include "pmfp/solver.hpp"

namespace pmfp::reports {

// JSON serialization of the auditable outputs. Layouts mirror the structs
// field for field; doubles are written with full round-trip precision and
// the output is byte-deterministic for equal inputs. Every writer has a
// matching reader.

std::string to_json(const AxiomReport& report);
AxiomReport axiom_report_from_json(std::string_view text);

std::string to_json(const ConvergenceCertificate& certificate);
ConvergenceCertificate certificate_from_json(std::string_view text);

std::string to_json(const IterationTrace& trace);
IterationTrace trace_from_json(std::string_view text);

std::string to_json(const ProbeReport& report);
ProbeReport probe_report_from_json(std::string_view text);

std::string violations_to_json(std::span<const ContractionViolation> violations);
std::vector<ContractionViolation> violations_from_json(std::string_view text);

}  // namespace pmfp::reports
