#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "duadic/report.hpp"

namespace duadic::cli {

namespace {

constexpr const char* kFooter = R"(Output formats:
  json  the full report (default)
  csv   a flattened projection of the JSON report, one record per line:
          construct      one record; nested keys joined with '.', e.g. dual.k,
                         extended.self_dual, certificate.run_length
          catalog        one record per S: S, verdicts.<case>.theorem,
                         verdicts.<case>.d_offset, ... with <case> in
                         m_equiv_t, m_equiv_t_plus_r
          table          one record per row: m, S, n, k, theorem,
                         predicted_d_lower, certified_d_lower, exact_d,
                         dual.*, extended.*, consistent, error
          verify-lemmas  one record per cell: m, S, lemma, side, status, v,
                         window, branch, first_missing, reason
          mindist        one record per code (part = code | dual | extended)
                         with the bound fields
        list values are joined with ';', empty cells are null
  text  a human-readable summary

Exit codes: 0 success (a non-duadic spec is a finding, not a failure),
1 verification failure, 2 usage error.
DUADIC_THREADS caps worker threads; DUADIC_SIMD=scalar|avx2|neon pins kernels.)";

unsigned parse_unsigned(std::string_view text, const char* what) {
    unsigned value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end)
        throw std::invalid_argument(std::string("malformed ") + what + " '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t begin = 0;
    while (true) {
        const std::size_t pos = text.find(sep, begin);
        parts.push_back(text.substr(begin, pos == std::string_view::npos ? std::string_view::npos : pos - begin));
        if (pos == std::string_view::npos) break;
        begin = pos + 1;
    }
    return parts;
}

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

// ---- flattening -----------------------------------------------------------

using Record = std::vector<std::pair<std::string, std::string>>;

std::string scalar_text(const Json& v) {
    if (v.is_null()) return {};
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        const bool scalars = std::none_of(v.begin(), v.end(), [](const Json& e) { return e.is_structured(); });
        if (!scalars) return v.dump();
        std::string s;
        for (const auto& e : v) s += (s.empty() ? "" : ";") + scalar_text(e);
        return s;
    }
    return v.dump();
}

void flatten(const Json& j, const std::string& prefix, Record& rec) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) flatten(value, name, rec);
        else rec.emplace_back(name, scalar_text(value));
    }
}

Record flat(const Json& j, Record head = {}) {
    flatten(j, "", head);
    return head;
}

std::vector<Record> records(const Json& report) {
    const auto kind = report.at("kind").get<std::string>();
    std::vector<Record> out;
    if (kind == "catalog") {
        for (const auto& s : report.at("sets"))
            out.push_back(flat(s, {{"r", report.at("r").dump()}, {"t", report.at("t").dump()}}));
    } else if (kind == "table") {
        for (const auto& row : report.at("rows")) out.push_back(flat(row, {{"r", report.at("r").dump()}}));
    } else if (kind == "verify-lemmas") {
        for (const auto& cell : report.at("cells")) out.push_back(flat(cell, {{"r", report.at("r").dump()}}));
    } else if (kind == "mindist") {
        for (const char* part : {"code", "dual", "extended"}) {
            if (report.at(part).is_null()) continue;
            Record head = flat(report.at("spec"), {{"part", part}});
            out.push_back(flat(report.at(part), std::move(head)));
        }
    } else {
        out.push_back(flat(report));
    }
    return out;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

std::string render_csv(const Json& report) {
    const auto recs = records(report);
    std::vector<std::string> columns;
    for (const auto& rec : recs)
        for (const auto& [key, _] : rec)
            if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    std::ostringstream os;
    for (std::size_t c = 0; c < columns.size(); ++c) os << (c ? "," : "") << csv_field(columns[c]);
    os << '\n';
    for (const auto& rec : recs) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            auto it = std::find_if(rec.begin(), rec.end(), [&](const auto& kv) { return kv.first == columns[c]; });
            os << (c ? "," : "") << (it == rec.end() ? "" : csv_field(it->second));
        }
        os << '\n';
    }
    return os.str();
}

// ---- text -----------------------------------------------------------------

std::string lookup(const Record& rec, const std::string& key) {
    auto it = std::find_if(rec.begin(), rec.end(), [&](const auto& kv) { return kv.first == key; });
    return it == rec.end() ? "" : it->second;
}

std::string aligned(const std::vector<Record>& recs, const std::vector<std::pair<std::string, std::string>>& cols) {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width;
    for (const auto& [_, title] : cols) width.push_back(title.size());
    for (const auto& rec : recs) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            std::string v = lookup(rec, cols[c].first);
            if (v.empty()) v = "-";
            width[c] = std::max(width[c], v.size());
            line.push_back(std::move(v));
        }
        cells.push_back(std::move(line));
    }
    std::ostringstream os;
    const auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c)
            os << (c ? "  " : "") << std::left << std::setw(static_cast<int>(width[c])) << line[c];
        os << '\n';
    };
    std::vector<std::string> header;
    for (const auto& [_, title] : cols) header.push_back(title);
    emit(header);
    for (const auto& line : cells) emit(line);
    return os.str();
}

std::string join_commas(const Json& list) {
    std::string s;
    for (const auto& e : list) s += (s.empty() ? "" : ",") + e.dump();
    return s;
}

std::string spec_text(const Json& spec) {
    return "C[r=" + spec.at("r").dump() + ", m=" + spec.at("m").dump() + ", S={" + join_commas(spec.at("S")) + "}]";
}

std::string render_construct_text(const Json& j) {
    std::ostringstream os;
    os << spec_text(j.at("spec")) << ": [" << j.at("n") << "," << j.at("k") << "]"
       << (j.at("duadic").get<bool>() ? " duadic" : " not duadic") << '\n';
    if (j.contains("duadic_failure")) os << "  reason: " << j.at("duadic_failure").get<std::string>() << '\n';
    os << "  generator: " << j.at("generator_hex").get<std::string>() << " (weight " << j.at("generator_weight")
       << ")\n";
    if (const Json& v = j.at("verdict"); !v.is_null()) {
        if (v.at("d_lower").is_null()) {
            os << "  theorem: none\n";
        } else {
            os << "  theorem: " << v.at("theorem").get<std::string>() << " (hypothesis on "
               << v.at("hypothesis_side").get<std::string>() << ", " << v.at("residue_case").get<std::string>()
               << "): d >= " << v.at("d_lower") << ", dual d >= " << v.at("d_dual_lower") << ", extended d >= "
               << v.at("d_ext_lower") << '\n';
            if (v.at("best_theorem") != v.at("theorem"))
                os << "  best: " << v.at("best_theorem").get<std::string>() << " d >= " << v.at("best_d_lower") << '\n';
        }
        for (const auto& note : v.at("notes")) os << "  note: " << note.get<std::string>() << '\n';
    }
    const Json& c = j.at("certificate");
    os << "  BCH certificate: v=" << c.at("v") << " l=" << c.at("l") << " run=" << c.at("run_length")
       << " -> d >= " << c.at("d_lower") << '\n';
    const Json& d = j.at("dual");
    os << "  dual: [" << d.at("n") << "," << d.at("k") << "] generator " << d.at("generator_hex").get<std::string>()
       << ", even-weight subcode: " << (d.at("even_weight_subcode").get<bool>() ? "yes" : "no") << '\n';
    const Json& e = j.at("extended");
    os << "  extended: [" << e.at("n") << "," << e.at("k") << "] self-dual: "
       << (e.at("self_dual").get<bool>() ? "yes" : "no")
       << ", doubly-even: " << (e.at("doubly_even").get<bool>() ? "yes" : "no") << '\n';
    return os.str();
}

std::string render_text(const Json& report) {
    const auto kind = report.at("kind").get<std::string>();
    if (kind == "construct") return render_construct_text(report);
    const auto recs = records(report);
    if (kind == "catalog") {
        std::string head = "r=" + report.at("r").dump() + " t=" + report.at("t").dump() + ": " +
                           report.at("count").dump() + " duadic sets";
        if (report.contains("published_contained"))
            head += report.at("published_contained").get<bool>() ? ", published sets contained"
                                                                   : ", PUBLISHED SETS MISSING";
        return head + "\n" +
               aligned(recs, {{"S", "S"},
                              {"verdicts.m_equiv_t.theorem", "m=t"},
                              {"verdicts.m_equiv_t.d_offset", "d-2^h"},
                              {"verdicts.m_equiv_t.ext_offset", "ext-2^h"},
                              {"verdicts.m_equiv_t_plus_r.theorem", "m=t+r"},
                              {"verdicts.m_equiv_t_plus_r.d_offset", "d-2^h"},
                              {"verdicts.m_equiv_t_plus_r.ext_offset", "ext-2^h"}});
    }
    if (kind == "table")
        return aligned(recs, {{"m", "m"},
                              {"S", "S"},
                              {"n", "n"},
                              {"k", "k"},
                              {"theorem", "thm"},
                              {"predicted_d_lower", "d>=(thm)"},
                              {"certified_d_lower", "d>=(bch)"},
                              {"exact_d", "d"},
                              {"dual.k", "dual k"},
                              {"dual.exact_d", "dual d"},
                              {"extended.n", "ext n"},
                              {"extended.exact_d", "ext d"},
                              {"extended.self_dual", "self-dual"},
                              {"extended.doubly_even", "doubly-even"},
                              {"error", "error"}});
    if (kind == "verify-lemmas") {
        const Json& s = report.at("summary");
        return aligned(recs, {{"m", "m"},
                              {"S", "S"},
                              {"lemma", "lemma"},
                              {"side", "side"},
                              {"status", "status"},
                              {"v", "v"},
                              {"window", "B"},
                              {"branch", "branch"},
                              {"first_missing", "first missing"},
                              {"reason", "reason"}}) +
               "pass " + s.at("pass").dump() + ", fail " + s.at("fail").dump() + ", skipped " +
               s.at("skipped").dump() + "\n";
    }
    return spec_text(report.at("spec")) + "\n" +
           aligned(recs, {{"part", "code"},
                          {"n", "n"},
                          {"k", "k"},
                          {"method", "method"},
                          {"lower", "lower"},
                          {"upper", "upper"},
                          {"exact", "exact"},
                          {"min_odd_weight", "min odd"},
                          {"seed", "seed"},
                          {"effort", "effort"}});
}

std::string render(const Json& report, const std::string& format) {
    if (format == "csv") return render_csv(report);
    if (format == "text") return render_text(report);
    return report.dump(2) + "\n";
}

// Failures a report records about itself beyond validate_report.
std::vector<std::string> report_failures(const Json& report) {
    std::vector<std::string> failures = validate_report(Json::parse(report.dump()));
    if (report.at("kind") == "table")
        for (const auto& row : report.at("rows"))
            if (row.contains("error"))
                failures.push_back("m=" + row.at("m").dump() + ": " + row.at("error").get<std::string>());
    return failures;
}

struct Config {
    unsigned r = 0;
    std::string m;
    std::string S;
    unsigned t = 0;
    std::vector<std::uint64_t> v;
    std::uint64_t effort = 10;
    std::uint64_t seed = 1;
    std::string method = "auto";
    std::string format = "json";
    std::string out_path;
    bool unchecked = false;
};

WeightClassSpec spec_of(const Config& cfg) {
    const unsigned m = parse_unsigned(trim(cfg.m), "m");
    auto S = parse_residues(cfg.S);
    return cfg.unchecked ? WeightClassSpec::unchecked(cfg.r, m, std::move(S))
                         : WeightClassSpec::make(cfg.r, m, std::move(S));
}

}  // namespace

std::vector<unsigned> parse_residues(const std::string& text) {
    std::vector<unsigned> out;
    if (trim(text).empty()) return out;
    for (auto part : split(text, ',')) out.push_back(parse_unsigned(trim(part), "residue"));
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("duplicate residue in S '" + text + "'");
    return out;
}

std::vector<unsigned> parse_m_list(const std::string& text) {
    std::vector<unsigned> out;
    if (trim(text).empty()) return out;
    for (auto part : split(text, ',')) {
        const std::string item = trim(part);
        if (auto dots = item.find(".."); dots != std::string::npos) {
            const unsigned lo = parse_unsigned(item.substr(0, dots), "m range");
            const unsigned hi = parse_unsigned(item.substr(dots + 2), "m range");
            if (lo > hi) throw std::invalid_argument("empty m range '" + item + "'");
            for (unsigned m = lo; m <= hi; ++m)
                if (m % 2 == 1) out.push_back(m);
        } else {
            out.push_back(parse_unsigned(item, "m"));
        }
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Binary duadic codes of length 2^m - 1 defined by 2-weight classes", "duadic-cli"};
    app.footer(kFooter);
    app.require_subcommand(1, 1);
    Config cfg;

    const auto common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "json | csv | text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", cfg.out_path, "write the report to this file");
    };
    const auto search = [&](CLI::App* sub) {
        sub->add_option("--v", cfg.v, "BCH common differences to try (comma list)")->delimiter(',');
        sub->add_option("--effort", cfg.effort, "information sets tried by the bounded search")
            ->capture_default_str();
        sub->add_option("--seed", cfg.seed, "seed of the bounded search")->capture_default_str();
    };

    auto* construct = app.add_subcommand("construct", "build C[r,m,S] with its verdict, certificate, dual, extension");
    construct->add_option("-r", cfg.r, "even modulus r")->required();
    construct->add_option("-m", cfg.m, "field degree m (odd)")->required();
    construct->add_option("-S", cfg.S, "residues, e.g. 0,2,3,4")->required();
    construct->add_flag("--unchecked", cfg.unchecked, "allow any r >= 1, m in [2, 20], any |S|");
    search(construct);
    common(construct);

    auto* catalog = app.add_subcommand("catalog", "all duadic S for (r, t) with theorem verdicts");
    catalog->add_option("-r", cfg.r, "even modulus r <= 16")->required();
    catalog->add_option("-t", cfg.t, "odd residue t < r")->required();
    common(catalog);

    auto* table = app.add_subcommand("table", "parameter table over a list of m");
    table->add_option("-r", cfg.r, "even modulus r")->required();
    table->add_option("-m", cfg.m, "m list, e.g. 3,5,9 or 3..17")->required();
    table->add_option("-S", cfg.S, "residues, or 'all' for every catalog S")->required();
    table->add_flag("--unchecked", cfg.unchecked, "allow specs outside the validated range");
    search(table);
    common(table);

    auto* lemmas = app.add_subcommand("verify-lemmas", "check lemma progressions for every catalog S");
    lemmas->add_option("-r", cfg.r, "even modulus r")->required();
    lemmas->add_option("-m", cfg.m, "odd m list, e.g. 9,11 or 3..17")->required();
    common(lemmas);

    auto* mindist = app.add_subcommand("mindist", "minimum distance of C[r,m,S], its dual and extension");
    mindist->add_option("-r", cfg.r, "even modulus r")->required();
    mindist->add_option("-m", cfg.m, "field degree m")->required();
    mindist->add_option("-S", cfg.S, "residues")->required();
    mindist->add_option("--method", cfg.method, "auto (enumerate when k <= 24) | exact | bounded")
        ->check(CLI::IsMember({"auto", "exact", "bounded"}))
        ->capture_default_str();
    mindist->add_flag("--unchecked", cfg.unchecked, "allow specs outside the validated range");
    search(mindist);
    common(mindist);

    std::vector<std::string> store{"duadic-cli"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kOk : kUsageError;
    }

    Json report;
    try {
        ReportOptions options;
        options.v_candidates = cfg.v;
        options.effort = cfg.effort;
        options.seed = cfg.seed;
        if (construct->parsed()) {
            report = construct_report(spec_of(cfg), options);
        } else if (catalog->parsed()) {
            report = catalog_report(cfg.r, cfg.t);
        } else if (table->parsed()) {
            std::optional<std::vector<unsigned>> S;
            if (trim(cfg.S) != "all") S = parse_residues(cfg.S);
            report = table_report(cfg.r, S, parse_m_list(cfg.m), options, cfg.unchecked);
        } else if (lemmas->parsed()) {
            report = verify_lemmas_report(cfg.r, parse_m_list(cfg.m));
        } else {
            report = mindist_report(spec_of(cfg), cfg.method, options);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "failure: " << e.what() << '\n';
        return kVerificationFailed;
    }

    const std::string text = render(report, cfg.format);
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << cfg.out_path << '\n';
            return kUsageError;
        }
        file << text;
    }

    const auto failures = report_failures(report);
    for (const auto& f : failures) err << "verification failed: " << f << '\n';
    return failures.empty() ? kOk : kVerificationFailed;
}

}  // namespace duadic::cli
