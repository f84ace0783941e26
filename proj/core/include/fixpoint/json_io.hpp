#pragma once

#include <string>

#include "fixpoint/contraction.hpp"
#include "fixpoint/falsify.hpp"
#include "fixpoint/instances.hpp"
#include "fixpoint/iteration.hpp"
#include "fixpoint/maia.hpp"
#include "fixpoint/oracle.hpp"
#include "fixpoint/space.hpp"

namespace fixpoint {

/// Instance document: { "n", "dist" (full matrix), "order" (0/1 matrix or a
/// list of [i,j] pairs), optional "selfmap", optional "meta" with name, alpha,
/// lambda, slack, gauge, family, exponents, provenance }.  Parse failures carry
/// the JSON pointer of the offending element.
InstanceSpec parse_instance(const std::string& text);
std::string export_instance(const InstanceSpec& spec, int indent = 2);

/// Gauge descriptors: {"family":"linear","alpha":a}, {"family":"rational","c":c},
/// {"family":"zero"}, {"family":"identity"}; point families
/// {"family":"scaled-max","c":c,"n":[...]}.
ScalarGauge parse_scalar_gauge(const std::string& text);
PointGaugeFamily parse_point_family(const std::string& text);

std::string export_axiom_report(const AxiomReport& report, int indent = 2);
std::string export_contraction_report(const ContractionReport& report, int indent = 2);
std::string export_suite_verdict(const SuiteVerdict& verdict, int indent = 2);
std::string export_picard_report(const PicardReport& report, int indent = 2);
std::string export_fixed_point_result(const FixedPointResult& result, int indent = 2);
std::string export_derived_metric(const DerivedMetric& dm,
                                  const MaiaPropertyReport* props = nullptr,
                                  int indent = 2);
std::string export_falsify_result(const FalsifyResult& result, int indent = 2);

/// CSV columns: step, point, step_distance, bound.
std::string export_trace_csv(const OrbitTrace& trace);

}  // namespace fixpoint
