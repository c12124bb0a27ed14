#include "duadic/report.hpp"

#include <algorithm>
#include <memory>
#include <set>
#include <stdexcept>

namespace duadic {

namespace {

std::uint64_t half_power(unsigned m) { return std::uint64_t{1} << ((m - 1) / 2); }

std::shared_ptr<const FieldGF2m> field_for(unsigned m) { return std::make_shared<const FieldGF2m>(m); }

std::vector<std::uint64_t> candidates_for(const ReportOptions& options, unsigned m) {
    return options.v_candidates.empty() ? default_v_candidates(m) : options.v_candidates;
}

Json nullable(const std::optional<std::uint64_t>& v) { return v ? Json(*v) : Json(nullptr); }

WeightClassSpec spec_from_json(const Json& j) {
    const auto r = j.at("r").get<unsigned>();
    const auto m = j.at("m").get<unsigned>();
    auto S = j.at("S").get<std::vector<unsigned>>();
    return j.value("checked", true) ? WeightClassSpec::make(r, m, std::move(S))
                                    : WeightClassSpec::unchecked(r, m, std::move(S));
}

// Smallest odd m in [3, 20] with m = target (mod 2r), if any.
std::optional<unsigned> representative_m(unsigned r, unsigned target) {
    for (unsigned m = target; m <= 20; m += 2 * r)
        if (m >= 3 && m % 2 == 1) return m;
    return std::nullopt;
}

}  // namespace

Json spec_json(const WeightClassSpec& spec) {
    return Json{{"r", spec.r()}, {"m", spec.m()}, {"t", spec.t()}, {"S", spec.residues()}, {"checked", spec.checked()}};
}

Json certificate_json(const BchCertificate& cert) {
    return Json{{"v", cert.v},
                {"l", cert.start},
                {"run_length", cert.run_length},
                {"d_lower", cert.d_lower},
                {"gamma_exponent", cert.gamma_exponent}};
}

Json verdict_json(const TheoremVerdict& verdict) {
    const bool matched = verdict.theorem != Theorem::none;
    Json j;
    j["theorem"] = theorem_name(verdict.theorem);
    j["hypothesis_side"] = matched ? Json(side_name(verdict.hypothesis_side)) : Json(nullptr);
    j["residue_case"] = matched ? Json(residue_case_name(verdict.residue_case)) : Json(nullptr);
    j["d_lower"] = matched ? Json(verdict.d_lower) : Json(nullptr);
    j["d_dual_lower"] = matched ? Json(verdict.d_dual_lower) : Json(nullptr);
    j["d_ext_lower"] = matched ? Json(verdict.d_ext_lower) : Json(nullptr);
    j["v"] = matched ? Json(verdict.v) : Json(nullptr);
    j["run_length"] = matched ? Json(verdict.run_length) : Json(nullptr);
    j["best_d_lower"] = matched ? Json(verdict.best_d_lower) : Json(nullptr);
    j["best_theorem"] = theorem_name(verdict.best_theorem);
    Json matches = Json::array();
    for (const auto& m : verdict.matches)
        matches.push_back(Json{{"theorem", theorem_name(m.theorem)},
                               {"hypothesis_side", side_name(m.hypothesis_side)},
                               {"residue_case", residue_case_name(m.residue_case)},
                               {"d_offset", m.d_offset},
                               {"dual_offset", m.dual_offset},
                               {"ext_offset", m.ext_offset},
                               {"v", m.window.v},
                               {"window", m.window.window}});
    j["matches"] = std::move(matches);
    j["notes"] = verdict.notes;
    return j;
}

Json bound_json(const CertifiedBound& bound) {
    Json j;
    j["method"] = bound.method;
    j["lower"] = bound.lower;
    j["upper"] = bound.upper;
    j["exact"] = bound.exact;
    j["witness_hex"] = bound.witness.to_hex();
    j["witness_weight"] = bound.witness.count();
    j["min_odd_weight"] = nullable(bound.min_odd_weight);
    j["certificate"] = bound.certificate ? certificate_json(*bound.certificate) : Json(nullptr);
    j["seed"] = bound.seed;
    j["effort"] = bound.effort;
    return j;
}

Json code_json(const CyclicCode& code) {
    return Json{{"n", code.length()},
                {"k", code.dimension()},
                {"generator_hex", code.generator().to_hex()},
                {"generator_weight", code.generator().weight()},
                {"defining_set_leaders", code.defining_set().leaders()}};
}

Json construct_report(const WeightClassSpec& spec, const ReportOptions& options) {
    const auto field = field_for(spec.m());
    const CyclicCode code = CyclicCode::from_defining_set(field, defining_set(spec));

    Json out;
    out["kind"] = "construct";
    out["spec"] = spec_json(spec);
    const Json summary = code_json(code);
    for (const auto& [key, value] : summary.items()) out[key] = value;

    const std::string why = duadic_failure(spec);
    const bool duadic = why.empty();
    out["duadic"] = duadic;
    if (!duadic) out["duadic_failure"] = why;

    std::optional<TheoremVerdict> verdict;
    if (duadic && spec.checked()) verdict = classify(spec);
    out["verdict"] = verdict ? verdict_json(*verdict) : Json(nullptr);

    const auto candidates = candidates_for(options, spec.m());
    const BchCertificate cert = best_certificate(code.defining_set(), candidates);
    out["certificate"] = certificate_json(cert);
    out["certificate_confirms_verdict"] =
        verdict && verdict->theorem != Theorem::none ? Json(cert.d_lower >= verdict->d_lower) : Json(nullptr);

    const CyclicCode d = dual(code);
    Json dual_j = code_json(d);
    dual_j["even_weight_subcode"] = is_even_weight_subcode(d, code);
    dual_j["defining_set_is_zero_union_T"] = d.defining_set() == code.defining_set().with_zero();
    out["dual"] = std::move(dual_j);

    const ExtendedCode e = extend(code);
    const bool self_orthogonal = e.is_self_orthogonal();
    out["extended"] = Json{{"n", e.length()},
                           {"k", e.dimension()},
                           {"self_orthogonal", self_orthogonal},
                           {"self_dual", is_self_dual(e)},
                           {"doubly_even", is_doubly_even(e)}};
    return out;
}

Json catalog_report(unsigned r, unsigned t) {
    const auto sets = enumerate_catalog(r, t);
    Json out;
    out["kind"] = "catalog";
    out["r"] = r;
    out["t"] = t;
    out["count"] = sets.size();

    Json entries = Json::array();
    for (const auto& S : sets) {
        Json entry;
        entry["S"] = S;
        Json verdicts;
        for (auto [name, target] : {std::pair{"m_equiv_t", t}, std::pair{"m_equiv_t_plus_r", t + r}}) {
            const auto m = representative_m(r, target);
            if (!m) {
                verdicts[name] = nullptr;
                continue;
            }
            const TheoremVerdict v = classify(WeightClassSpec::make(r, *m, S));
            const std::uint64_t base = half_power(*m);
            const bool matched = v.theorem != Theorem::none;
            verdicts[name] = Json{{"representative_m", *m},
                                  {"theorem", theorem_name(v.theorem)},
                                  {"hypothesis_side", matched ? Json(side_name(v.hypothesis_side)) : Json(nullptr)},
                                  {"d_offset", matched ? Json(v.d_lower - base) : Json(nullptr)},
                                  {"dual_offset", matched ? Json(v.d_dual_lower - base) : Json(nullptr)},
                                  {"ext_offset", matched ? Json(v.d_ext_lower - base) : Json(nullptr)},
                                  {"best_theorem", theorem_name(v.best_theorem)},
                                  {"best_offset", matched ? Json(v.best_d_lower - base) : Json(nullptr)}};
        }
        entry["verdicts"] = std::move(verdicts);
        entries.push_back(std::move(entry));
    }
    out["sets"] = std::move(entries);

    if (r == 8) {
        const auto published = published_r8_families(t);
        const bool contained = std::all_of(published.begin(), published.end(), [&](const auto& S) {
            return std::find(sets.begin(), sets.end(), S) != sets.end();
        });
        out["published"] = published;
        out["published_contained"] = contained;
    }
    return out;
}

namespace {

Json table_row(unsigned r, unsigned m, const std::vector<unsigned>& residues, const ReportOptions& options,
               bool unchecked) {
    Json row;
    row["m"] = m;
    row["S"] = residues;
    try {
        const WeightClassSpec spec =
            unchecked ? WeightClassSpec::unchecked(r, m, residues) : WeightClassSpec::make(r, m, residues);
        row["S"] = spec.residues();
        const auto field = field_for(m);
        const CyclicCode code = CyclicCode::from_defining_set(field, defining_set(spec));
        const CyclicCode d = dual(code);
        const ExtendedCode e = extend(code);
        const bool duadic = duadic_failure(spec).empty();
        std::optional<TheoremVerdict> verdict;
        if (duadic && spec.checked()) verdict = classify(spec);
        const bool matched = verdict && verdict->theorem != Theorem::none;
        const auto candidates = candidates_for(options, m);

        const auto exact = [](auto const& c) -> Json {
            if (c.dimension() == 0 || c.dimension() > kEnumerationBudget) return nullptr;
            return exact_min_distance(c).upper;
        };
        const std::uint64_t certified = best_certificate(code.defining_set(), candidates).d_lower;
        const std::uint64_t dual_certified = best_certificate(d.defining_set(), candidates).d_lower;
        SearchOptions ext_options;
        ext_options.effort = 0;
        ext_options.v_candidates = candidates;
        const std::uint64_t ext_certified = e.dimension() ? bounded_min_distance(e, ext_options).lower : 0;

        row["n"] = code.length();
        row["k"] = code.dimension();
        row["duadic"] = duadic;
        row["theorem"] = verdict ? Json(theorem_name(verdict->theorem)) : Json(nullptr);
        row["predicted_d_lower"] = matched ? Json(verdict->d_lower) : Json(nullptr);
        row["certified_d_lower"] = certified;
        row["exact_d"] = exact(code);
        row["dual"] = Json{{"n", d.length()},
                           {"k", d.dimension()},
                           {"predicted_d_lower", matched ? Json(verdict->d_dual_lower) : Json(nullptr)},
                           {"certified_d_lower", dual_certified},
                           {"exact_d", exact(d)}};
        row["extended"] = Json{{"n", e.length()},
                               {"k", e.dimension()},
                               {"predicted_d_lower", matched ? Json(verdict->d_ext_lower) : Json(nullptr)},
                               {"certified_d_lower", ext_certified},
                               {"exact_d", exact(e)},
                               {"self_dual", is_self_dual(e)},
                               {"doubly_even", is_doubly_even(e)}};
        row["consistent"] = !matched || certified >= verdict->d_lower;
    } catch (const std::exception& ex) {
        row["error"] = ex.what();
    }
    return row;
}

}  // namespace

Json table_report(unsigned r, const std::optional<std::vector<unsigned>>& residues, const std::vector<unsigned>& ms,
                  const ReportOptions& options, bool unchecked) {
    Json out;
    out["kind"] = "table";
    out["r"] = r;
    out["S"] = residues ? Json(*residues) : Json("all");
    Json rows = Json::array();
    for (unsigned m : ms) {
        if (residues) {
            rows.push_back(table_row(r, m, *residues, options, unchecked));
            continue;
        }
        std::vector<std::vector<unsigned>> sets;
        try {
            sets = enumerate_catalog(r, m % r);
        } catch (const std::exception& ex) {
            rows.push_back(Json{{"m", m}, {"S", "all"}, {"error", ex.what()}});
            continue;
        }
        for (const auto& S : sets) rows.push_back(table_row(r, m, S, options, unchecked));
    }
    out["rows"] = std::move(rows);
    return out;
}

Json verify_lemmas_report(unsigned r, const std::vector<unsigned>& ms) {
    Json out;
    out["kind"] = "verify-lemmas";
    out["r"] = r;
    Json cells = Json::array();
    std::uint64_t passed = 0, failed = 0, skipped = 0;
    for (unsigned m : ms) {
        if (m % 2 == 0) throw std::invalid_argument("verify-lemmas needs odd m, got " + std::to_string(m));
        const unsigned t = m % r;
        for (const auto& S : enumerate_catalog(r, t)) {
            const WeightClassSpec spec = WeightClassSpec::make(r, m, S);
            for (Lemma lemma : {Lemma::L3, Lemma::L4, Lemma::L5, Lemma::L6}) {
                const std::string why = lemma_hypothesis_failure(spec, lemma);
                for (Side side : {Side::S, Side::S_prime}) {
                    Json cell{{"m", m}, {"S", S}, {"lemma", lemma_name(lemma)}, {"side", side_name(side)}};
                    if (!why.empty()) {
                        cell["status"] = "skipped";
                        cell["reason"] = why;
                        ++skipped;
                    } else {
                        const LemmaCheck check = verify_lemma_membership(spec, lemma, side);
                        cell["status"] = check.holds ? "pass" : "fail";
                        cell["v"] = check.window.v;
                        cell["window"] = check.window.window;
                        cell["branch"] = residue_case_name(check.window.branch);
                        cell["first_missing"] = nullable(check.first_missing);
                        ++(check.holds ? passed : failed);
                    }
                    cells.push_back(std::move(cell));
                }
            }
        }
    }
    out["summary"] = Json{{"pass", passed}, {"fail", failed}, {"skipped", skipped}};
    out["cells"] = std::move(cells);
    return out;
}

Json mindist_report(const WeightClassSpec& spec, const std::string& method, const ReportOptions& options) {
    if (method != "auto" && method != "exact" && method != "bounded")
        throw std::invalid_argument("method must be auto, exact or bounded");
    const auto field = field_for(spec.m());
    const CyclicCode code = CyclicCode::from_defining_set(field, defining_set(spec));
    SearchOptions search;
    search.effort = options.effort;
    search.seed = options.seed;
    search.v_candidates = options.v_candidates;

    const auto bound_for = [&](const auto& c) -> Json {
        if (c.dimension() == 0) return nullptr;
        const bool enumerate = method == "exact" || (method == "auto" && c.dimension() <= kEnumerationBudget);
        Json j = bound_json(enumerate ? exact_min_distance(c) : bounded_min_distance(c, search));
        j["n"] = c.length();
        j["k"] = c.dimension();
        return j;
    };

    Json out;
    out["kind"] = "mindist";
    out["spec"] = spec_json(spec);
    out["method"] = method;
    out["code"] = bound_for(code);
    out["dual"] = bound_for(dual(code));
    out["extended"] = bound_for(extend(code));
    return out;
}

namespace {

void expect(std::vector<std::string>& problems, bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
}

void validate_construct(const Json& j, std::vector<std::string>& p) {
    const WeightClassSpec spec = spec_from_json(j.at("spec"));
    const DefiningSet T = defining_set(spec);
    const std::uint64_t n = spec.n();
    const auto k = j.at("k").get<std::uint64_t>();
    expect(p, j.at("n").get<std::uint64_t>() == n, "n != 2^m - 1");
    expect(p, k + T.size() == n, "k != n - |T|");
    expect(p, j.at("defining_set_leaders").get<std::vector<std::uint32_t>>() == T.leaders(),
           "defining set leaders do not match (r, m, S)");
    const BinaryPoly g = BinaryPoly::from_hex(j.at("generator_hex").get<std::string>());
    expect(p, g.degree() == n - k, "deg g != n - k");
    try {
        check_poly(g, n);
    } catch (const std::invalid_argument&) {
        p.push_back("g does not divide x^n + 1");
    }
    expect(p, j.at("duadic").get<bool>() == duadic_failure(spec).empty(), "duadic flag disagrees with S");

    const Json& c = j.at("certificate");
    BchCertificate cert;
    cert.v = c.at("v");
    cert.start = c.at("l");
    cert.run_length = c.at("run_length");
    cert.d_lower = c.at("d_lower");
    cert.gamma_exponent = c.at("gamma_exponent");
    expect(p, cert.d_lower == cert.run_length + 1, "certificate d_lower != run_length + 1");
    expect(p, certificate_holds(T, cert), "certificate run is not inside T");
    if (!j.at("verdict").is_null() && !j.at("verdict").at("d_lower").is_null())
        expect(p, j.at("verdict").at("d_lower").get<std::uint64_t>() <= cert.d_lower,
               "certificate does not confirm the theorem bound");

    const Json& d = j.at("dual");
    expect(p, d.at("k").get<std::uint64_t>() == n - k, "dual dimension != n - k");
    expect(p, d.at("defining_set_leaders").get<std::vector<std::uint32_t>>() == T.negated().complement().leaders(),
           "dual defining set != Z_n \\ (-T)");
    const Json& e = j.at("extended");
    expect(p, e.at("n").get<std::uint64_t>() == n + 1, "extended length != n + 1");
    expect(p, e.at("k").get<std::uint64_t>() == k, "extended dimension != k");
    if (e.at("self_dual").get<bool>()) expect(p, 2 * k == n + 1, "self-dual flag with 2k != n + 1");
    if (e.at("doubly_even").get<bool>()) expect(p, e.at("self_orthogonal").get<bool>(), "doubly even but not self-orthogonal");
}

void validate_mindist(const Json& j, std::vector<std::string>& p) {
    const WeightClassSpec spec = spec_from_json(j.at("spec"));
    const auto field = field_for(spec.m());
    const CyclicCode code = CyclicCode::from_defining_set(field, defining_set(spec));
    const auto check = [&](const char* name, const auto& c) {
        const Json& b = j.at(name);
        if (b.is_null()) return;
        const std::string tag = std::string(name) + ": ";
        const auto lower = b.at("lower").get<std::uint64_t>();
        const auto upper = b.at("upper").get<std::uint64_t>();
        expect(p, 1 <= lower && lower <= upper && upper <= c.length(), tag + "bounds out of order");
        expect(p, b.at("exact").get<bool>() == (lower == upper), tag + "exact flag disagrees with bounds");
        const BitVec w = BitVec::from_hex(b.at("witness_hex").get<std::string>(), c.length());
        expect(p, w.count() == upper, tag + "witness weight != upper");
        expect(p, c.contains(w), tag + "witness is not a codeword");
    };
    check("code", code);
    check("dual", dual(code));
    check("extended", extend(code));
}

void validate_catalog(const Json& j, std::vector<std::string>& p) {
    const auto r = j.at("r").get<unsigned>();
    const auto t = j.at("t").get<unsigned>();
    const auto& sets = j.at("sets");
    expect(p, j.at("count").get<std::size_t>() == sets.size(), "count != number of sets");
    expect(p, sets.size() == enumerate_catalog(r, t).size(), "catalog size differs from enumeration");
    const auto m = representative_m(r, t);
    std::vector<std::vector<unsigned>> seen;
    for (const auto& entry : sets) {
        const auto S = entry.at("S").get<std::vector<unsigned>>();
        expect(p, std::is_sorted(S.begin(), S.end()), "S not canonical");
        if (m) expect(p, is_duadic_zr(WeightClassSpec::make(r, *m, S)), "listed S is not duadic");
        seen.push_back(S);
    }
    expect(p, std::is_sorted(seen.begin(), seen.end()) && std::adjacent_find(seen.begin(), seen.end()) == seen.end(),
           "sets not strictly ascending");
    if (j.contains("published_contained"))
        expect(p, j.at("published_contained").get<bool>(), "published sets missing from the catalog");
}

void validate_table(const Json& j, std::vector<std::string>& p) {
    for (const auto& row : j.at("rows")) {
        if (row.contains("error")) continue;
        const auto m = row.at("m").get<unsigned>();
        const std::string tag = "m=" + std::to_string(m) + ": ";
        const auto n = row.at("n").get<std::uint64_t>();
        expect(p, n == (std::uint64_t{1} << m) - 1, tag + "n != 2^m - 1");
        for (const Json* part : {&row, &row.at("dual"), &row.at("extended")}) {
            const auto certified = part->at("certified_d_lower").get<std::uint64_t>();
            if (!part->at("exact_d").is_null())
                expect(p, part->at("exact_d").get<std::uint64_t>() >= certified, tag + "exact d below certified bound");
            if (!part->at("predicted_d_lower").is_null() && !part->at("exact_d").is_null())
                expect(p, part->at("exact_d").get<std::uint64_t>() >= part->at("predicted_d_lower").get<std::uint64_t>(),
                       tag + "exact d below predicted bound");
        }
        expect(p, row.at("extended").at("n").get<std::uint64_t>() == n + 1, tag + "extended length != n + 1");
        expect(p, row.at("consistent").get<bool>(), tag + "certified bound below prediction");
    }
}

void validate_verify_lemmas(const Json& j, std::vector<std::string>& p) {
    std::uint64_t pass = 0, fail = 0, skipped = 0;
    for (const auto& cell : j.at("cells")) {
        const auto status = cell.at("status").get<std::string>();
        if (status == "pass") ++pass;
        else if (status == "fail") ++fail;
        else if (status == "skipped") ++skipped;
        else p.push_back("unknown cell status " + status);
    }
    const Json& s = j.at("summary");
    expect(p, s.at("pass") == pass && s.at("fail") == fail && s.at("skipped") == skipped, "summary counts disagree");
    expect(p, fail == 0, std::to_string(fail) + " lemma cells failed");
}

}  // namespace

std::vector<std::string> validate_report(const Json& report) {
    std::vector<std::string> problems;
    try {
        const auto kind = report.at("kind").get<std::string>();
        if (kind == "construct") validate_construct(report, problems);
        else if (kind == "mindist") validate_mindist(report, problems);
        else if (kind == "catalog") validate_catalog(report, problems);
        else if (kind == "table") validate_table(report, problems);
        else if (kind == "verify-lemmas") validate_verify_lemmas(report, problems);
        else problems.push_back("unknown report kind " + kind);
    } catch (const std::exception& ex) {
        problems.push_back(std::string("malformed report: ") + ex.what());
    }
    return problems;
}

}  // namespace duadic
