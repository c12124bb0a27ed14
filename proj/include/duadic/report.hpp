#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "duadic/bounds.hpp"
#include "duadic/code.hpp"
#include "duadic/cyclotomic.hpp"
#include "duadic/duadic.hpp"
#include "duadic/mindist.hpp"

namespace duadic {

// Reports keep keys in insertion order so output is stable and readable.
using Json = nlohmann::ordered_json;

Json spec_json(const WeightClassSpec& spec);
Json certificate_json(const BchCertificate& cert);
Json verdict_json(const TheoremVerdict& verdict);
Json bound_json(const CertifiedBound& bound);

// Summary of one cyclic code: {n, k, generator_hex, defining_set_leaders}.
Json code_json(const CyclicCode& code);

struct ReportOptions {
    std::vector<std::uint64_t> v_candidates;  // empty: default_v_candidates(m)
    std::uint64_t effort = 10;
    std::uint64_t seed = 1;
};

// kind "construct": code, duadic verdict, theorem classification, BCH
// certificate, dual and extended summaries. Non-duadic specs get
// duadic = false and a null verdict.
Json construct_report(const WeightClassSpec& spec, const ReportOptions& options = {});

// kind "catalog": every duadic S for (r, t) with verdict offsets for both
// residues of m modulo 2r. For r = 8 also records whether the published sets
// are contained.
Json catalog_report(unsigned r, unsigned t);

// kind "table": one row per m (per m and catalog S when residues is nullopt).
// Exact distances only where k <= 24. A row that fails carries an "error"
// string instead of results.
Json table_report(unsigned r, const std::optional<std::vector<unsigned>>& residues, const std::vector<unsigned>& ms,
                  const ReportOptions& options = {}, bool unchecked = false);

// kind "verify-lemmas": one cell per (m, catalog S, lemma, side), status
// pass | fail | skipped.
Json verify_lemmas_report(unsigned r, const std::vector<unsigned>& ms);

// kind "mindist": bounds for the code and its extension. method "auto"
// enumerates when k <= 24 and searches otherwise; "exact" and "bounded" force
// one route ("exact" propagates BudgetExceeded).
Json mindist_report(const WeightClassSpec& spec, const std::string& method, const ReportOptions& options = {});

// Re-derives the invariants a report asserts. Returns one message per
// violation; empty when the report is consistent.
std::vector<std::string> validate_report(const Json& report);

}  // namespace duadic
