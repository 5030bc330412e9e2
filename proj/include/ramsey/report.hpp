#pragma once

#include <iosfwd>
#include <span>

#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/cycles.hpp"
#include "ramsey/geometry.hpp"
#include "ramsey/verify.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

/// Non-finite doubles become null.
Json number(double x);
/// kInfinite girth/diameter becomes null.
Json length_or_null(std::uint32_t x);

Json to_json(const PolygonCertificate& cert);
Json to_json(const CycleSearchResult& result);
Json to_json(const CliqueResult& result);
Json to_json(const ColorClassCheck& check);
/// Wall time goes under "timing"; everything else is a function of the
/// inputs and seed.
Json to_json(const VerificationReport& report);
Json to_json(const ProportionEstimate& est);
Json to_json(const IndependenceEstimate& est);
Json to_json(const FeasibilityReport& rep);
Json to_json(const SolveResult& result);
Json to_json(const MarginScan& scan);
Json to_json(unsigned k, unsigned cycle, std::span<const ScalingRow> rows);

/// Removes every "timing" member, recursively.
void strip_timing(Json& doc);

inline constexpr const char* kFeasibilityCsvHeader =
    "q,k,c,d,rho,t,t_a,r,m,N,log_E_indep,log_indep_count_blowup,log_E_cliques,margin_nats,feasible";
inline constexpr const char* kScalingCsvHeader =
    "m,exponent,log_value,value,prior_exponent,prior_log_value,prior_value";

void write_feasibility_csv_row(std::ostream& out, const FeasibilityReport& rep);
void write_scaling_csv(std::ostream& out, std::span<const ScalingRow> rows);

}  // namespace ramsey
