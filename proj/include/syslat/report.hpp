#pragma once

// End-to-end verification run and report emission (JSON, CSV, markdown).

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "syslat/congruence.hpp"
#include "syslat/systole.hpp"

namespace syslat {

enum class ReportFormat { Json, Csv, Markdown };

inline ReportFormat parse_report_format(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "markdown" || s == "md") return ReportFormat::Markdown;
    fail(ErrorCode::InvalidArgument, "unknown format " + s);
}

inline const std::vector<std::string>& all_suites() {
    static const std::vector<std::string> s{"transcription", "forms", "conjugacy", "image", "left-regular",
                                            "pell", "primes", "su", "congruence", "systole"};
    return s;
}

struct RunConfig {
    std::int64_t d = 3;
    unsigned depth = 5;
    PrimeRule rule = PrimeRule::LargestPrimitive;
    std::set<std::string> suites{all_suites().begin(), all_suites().end()};
    ReportFormat format = ReportFormat::Json;
    std::uint64_t seed = 42;
    std::size_t cap = 1000000;
    int m = 8;
    bool timing = false;

    void validate() const {
        if (d < 2 || !is_squarefree(d)) fail(ErrorCode::InvalidD, "d must be square-free and >= 2");
        for (const auto& s : suites)
            if (std::find(all_suites().begin(), all_suites().end(), s) == all_suites().end())
                fail(ErrorCode::InvalidArgument, "unknown suite " + s);
    }
    bool has(const std::string& suite) const { return suites.count(suite) != 0; }
};

enum class ClaimStatus { Pass, Fail, Recorded };

inline std::string to_string(ClaimStatus s) {
    switch (s) {
    case ClaimStatus::Pass: return "pass";
    case ClaimStatus::Fail: return "fail";
    case ClaimStatus::Recorded: return "recorded";
    }
    return "unknown";
}

inline ClaimStatus parse_claim_status(const std::string& s) {
    if (s == "pass") return ClaimStatus::Pass;
    if (s == "fail") return ClaimStatus::Fail;
    if (s == "recorded") return ClaimStatus::Recorded;
    fail(ErrorCode::ParseError, "unknown claim status " + s);
}

struct Claim {
    std::string id;
    std::string anchor;
    ClaimStatus status = ClaimStatus::Recorded;
    std::string details;

    friend bool operator==(const Claim&, const Claim&) = default;
};

struct TableRow {
    unsigned n = 0;
    std::string t;
    std::string y;
    std::string p;
    std::vector<std::string> primitive_set;
    bool diagram_ok = false;
    bool kernel_ok = false;
    double bound = 0.0;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct VerificationReport {
    RunConfig config;
    std::vector<Claim> claims;
    std::vector<TableRow> table;
    std::vector<SkippedIndex> skipped;
    std::map<std::string, double> timing_seconds;

    bool all_required_pass() const {
        for (const auto& c : claims)
            if (c.status == ClaimStatus::Fail) return false;
        return true;
    }
};

inline constexpr const char* kReportSchema = "syslat-report/1";

inline std::string format_bound(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

namespace detail {

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
    return out;
}

class ReportBuilder {
public:
    explicit ReportBuilder(VerificationReport& r) : r_(r) {}

    void check(const std::string& id, const std::string& anchor, bool ok, const std::string& details) {
        add(id, anchor, ok ? ClaimStatus::Pass : ClaimStatus::Fail, details);
    }
    void record(const std::string& id, const std::string& anchor, const std::string& details) {
        add(id, anchor, ClaimStatus::Recorded, details);
    }

    /// Runs body; an exception becomes a failed claim under `id`.
    void guarded(const std::string& id, const std::string& anchor, const std::function<void()>& body) {
        const auto start = std::chrono::steady_clock::now();
        try {
            body();
        } catch (const std::exception& e) {
            check(id + ".error", anchor, false, std::string("exception: ") + e.what());
        }
        if (r_.config.timing)
            r_.timing_seconds[id] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

private:
    void add(const std::string& id, const std::string& anchor, ClaimStatus s, const std::string& details) {
        for (const auto& c : r_.claims)
            if (c.id == id) fail(ErrorCode::InvalidArgument, "claim registered twice: " + id);
        r_.claims.push_back({id, anchor, s, details});
    }

    VerificationReport& r_;
};

inline std::string relation_summary(const std::vector<RelationCheck>& checks) {
    std::vector<std::string> parts;
    for (const auto& c : checks) parts.push_back(c.relation + (c.pass ? "=I" : "!=I"));
    return join(parts, ", ");
}

} // namespace detail

/// Runs the selected suites in dependency order and collects claims.
inline VerificationReport run_suite(const RunConfig& config) {
    config.validate();
    VerificationReport report;
    report.config = config;
    detail::ReportBuilder b(report);
    using detail::relation_summary;

    if (config.has("transcription")) {
        b.guarded("transcription.omega", "appendix 8-dimensional representation", [&] {
            const auto checks = verify_presentation(omega_generators());
            b.check("transcription.omega", "appendix 8-dimensional representation", all_pass(checks),
                    relation_summary(checks));
        });
        b.guarded("transcription.rho", "appendix 4-dimensional representation", [&] {
            const auto checks = verify_presentation(rho_generators());
            b.check("transcription.rho", "appendix 4-dimensional representation", all_pass(checks),
                    relation_summary(checks));
        });
        b.guarded("transcription.determinants", "generator images lie in SL", [&] {
            bool ok = true;
            for (const auto* rep : {&omega_generators(), &rho_generators()})
                for (const auto& [g, m] : rep->images) ok = ok && det(m) == one_like(m(0, 0));
            b.check("transcription.determinants", "generator images lie in SL", ok, "det = 1 for rho(u), rho(c), omega(u), omega(c)");
        });
        b.guarded("transcription.m_form", "form preserved by rho", [&] {
            const auto form = m_form();
            const bool ok = form.preserved_by(rho_generators().images.at('u')) &&
                            form.preserved_by(rho_generators().images.at('c'));
            b.check("transcription.m_form", "form preserved by rho", ok, "rho(g)* M_t rho(g) = M_t for g = u, c");
        });
        b.guarded("transcription.signature_t1", "signature (3,1) at t = 1", [&] {
            const Specialization at_one(1, 3, QuadElem(0), QuadElem(0, 1, 3));
            const Signature sig = signature_of_diagonal(specialize_matrix(m_form().matrix, at_one));
            b.check("transcription.signature_t1", "signature (3,1) at t = 1", sig == Signature{3, 1},
                    "(" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")");
        });
    }

    if (config.has("forms")) {
        b.guarded("forms.rho", "one invariant form for rho, proportional to M_t", [&] {
            const auto& rho = rho_generators();
            const auto space = solve_invariant_forms(std::vector{rho.images.at('u'), rho.images.at('c')},
                                                     Involution::Galois);
            const bool prop = space.dimension() == 1 &&
                              proportionality(m_form().matrix, space.hermitian.front().matrix).has_value();
            b.check("forms.rho", "one invariant form for rho, proportional to M_t", prop,
                    "dimension " + std::to_string(space.dimension()));
        });
        b.guarded("forms.omega_dimension", "invariant forms of omega span a 4-dimensional space", [&] {
            const auto& jf = canonical_form();
            b.check("forms.omega_dimension", "invariant forms of omega span a 4-dimensional space", jf.dimension == 4,
                    "dimension " + std::to_string(jf.dimension));
            const bool invariant = jf.form.is_sesquisymmetric() &&
                                   jf.form.preserved_by(omega_generators().images.at('u')) &&
                                   jf.form.preserved_by(omega_generators().images.at('c'));
            b.check("forms.j_invariant", "J* = J and omega(g)* J omega(g) = J", invariant, "canonical J");
            b.check("forms.det_square", "det J is a square in Q(t)", true,
                    "sqrt(det J) = " + to_string(jf.determinant_sqrt));
            b.record("forms.det_ratio_to_reference", "ratio of det J to 16(3-4t^2)^4/(1-4t^2)^2",
                     jf.ratio_to_reference_is_square ? "ratio is a square in Q(t)" : "ratio is not a square in Q(t)");
        });
    }

    if (config.has("conjugacy")) {
        b.guarded("conjugacy.rho_rho", "omega conjugate to rho + rho", [&] {
            const auto c = verify_double_conjugacy(config.seed);
            b.check("conjugacy.rho_rho", "omega conjugate to rho + rho", c.traces_match && !c.determinant.is_zero(),
                    "det P = " + to_string(c.determinant));
        });
    }

    std::vector<GroupWord> kernel_words;
    if (config.has("image") || config.has("congruence")) {
        b.guarded("image.order", "|omega_0(vol3)| = 320", [&] {
            const auto z = omega_at_zero();
            const auto img = enumerate_image(derive_ab(z), "ab", config.cap);
            kernel_words = schreier_kernel_generators(img);
            if (!config.has("image")) return;
            b.check("image.order", "|omega_0(vol3)| = 320", img.order() == 320, "order " + std::to_string(img.order()));
            const auto ab = derive_ab(z);
            bool trivial = true;
            for (const auto& w : kernel_words) trivial = trivial && evaluate_word(w, ab).is_identity();
            b.check("image.schreier", "Schreier generators lie in the kernel of omega_0",
                    trivial && kernel_words.size() <= 4 * img.order(),
                    std::to_string(kernel_words.size()) + " generators");
            const auto orb = enumerate_image(z, "uc", config.cap);
            b.record("image.orbifold_order", "order of omega_0 on the orbifold group",
                     "order " + std::to_string(orb.order()) +
                         (orb.order() % 320 == 0 ? ", divisible by 320" : ", not divisible by 320"));
        });
    }

    if (config.has("left-regular")) {
        b.guarded("left_regular.homomorphism", "16-dimensional left-regular representation", [&] {
            const auto words = search_spanning_words();
            std::vector<std::string> ws;
            for (const auto& w : words.words) ws.push_back(w.empty() ? "1" : w.str());
            const auto lr = build_left_regular(words.words);
            b.check("left_regular.homomorphism", "16-dimensional left-regular representation",
                    all_pass(lr.relations) && lr.eta.dim == 16, relation_summary(lr.relations));
            b.record("left_regular.words", "spanning words", detail::join(ws, " ") +
                                                                 "; certificate det = " + to_string(words.certificate));
            b.record("left_regular.integrality", "entries of eta in Z[t, s]", lr.integral ? "integral" : "not integral");
            b.record("left_regular.traces", "traces of eta(u), eta(c)",
                     "tr eta(u) = " + to_string(lr.trace_u) + ", tr eta(c) = " + to_string(lr.trace_c));
        });
    }

    std::optional<PrimeSequence> primes;
    const std::int64_t d = config.d;
    if (config.depth > 0 && (config.has("pell") || config.has("primes") || config.has("su") ||
                             config.has("congruence") || config.has("systole"))) {
        b.guarded("primes.selection", "prime selection", [&] { primes = select_prime_sequence(d, config.depth, config.rule); });
    }

    if (config.has("pell") && config.depth > 0) {
        b.guarded("pell.identity", "t_n^2 - d y_n^2 = 1", [&] {
            bool ok = true;
            std::vector<std::string> sols;
            for (const auto& s : pell_sequence(d, config.depth)) {
                ok = ok && satisfies_pell(s.t, s.y, d) && pell_solution(d, s.n) == s;
                sols.push_back("(" + s.t.get_str() + "," + s.y.get_str() + ")");
            }
            b.check("pell.identity", "t_n^2 - d y_n^2 = 1", ok, detail::join(sols, " "));
        });
    }

    if (config.has("primes") && primes) {
        b.guarded("primes.lucas_pair", "(u, 1/u) is a Lucas pair", [&] {
            const auto lp = verify_lucas_pair(d);
            b.check("primes.lucas_pair", "(u, 1/u) is a Lucas pair", lp.holds(),
                    "u + 1/u = " + lp.sum.get_str() + ", u * 1/u = " + lp.product.get_str());
            bool member = true;
            bool any_table = false;
            std::vector<std::string> sel;
            for (const auto& rec : primes->records) {
                auto tp = table_prime(d, rec.n);
                if (!tp) continue;
                any_table = true;
                member = member && rec.primitive_primes.count(*tp) != 0;
            }
            if (any_table)
                b.check("primes.table_membership", "table primes are primitive divisors of 2 t_n", member,
                        "membership in the computed primitive sets");
            bool matches_table = any_table;
            for (const auto& row : primes->rows) {
                sel.push_back(std::to_string(row.n) + ":" + row.p.get_str());
                auto tp = table_prime(d, row.n);
                matches_table = matches_table && tp && *tp == row.p;
            }
            b.record("primes.selected", "selected primes (" + to_string(config.rule) + ")",
                     detail::join(sel, " ") + (any_table ? (matches_table ? "; equals table" : "; differs from table") : ""));
        });
    }

    std::map<unsigned, std::pair<bool, bool>> level_results;
    if (config.has("su") && primes) {
        b.guarded("su.membership", "omega_{t_n} lies in SU(J_{t_n}; O_d)", [&] {
            bool ok = true;
            for (const auto& s : pell_sequence(d, config.depth)) {
                const SUContext ctx = make_su_context(s);
                const auto rep = specialize_rep(omega_generators(), Specialization::pell(s.t, s.y, d));
                for (const auto& [g, m] : rep.images) ok = ok && su_membership(m, ctx);
            }
            b.check("su.membership", "omega_{t_n} lies in SU(J_{t_n}; O_d)", ok,
                    "n = 1.." + std::to_string(config.depth));
            const auto first = pell_solution(d, 1);
            const SUContext ctx = make_su_context(first);
            const auto cls = commensurability_class(ctx.form.matrix);
            const auto w = isotropic_witness(cls.determinant, ctx.m);
            b.check("su.nonuniform_witness", "x = (1,1,0,...,0) is isotropic for diag(1,-1,-det J,1,...,1)",
                    w.isotropic(), "det J_{t_1} = " + to_string(cls.determinant));
            b.record("su.det_square_class", "det J_{t_1} is a rational square",
                     cls.square_witness ? "witness " + cls.square_witness->get_str() : "no rational square root");
        });
    }

    if (config.has("congruence") && primes) {
        b.guarded("congruence.diagram", "diagram commutes and omega_{t_n}(Pi) lies in the level-p_n kernel", [&] {
            bool diagram = true;
            bool kernel = true;
            std::vector<std::string> parts;
            for (const auto& row : primes->rows) {
                const LevelContext lvl(d, row.n, row.p);
                bool k_ok = lvl.commutes();
                if (k_ok)
                    for (const auto& w : kernel_words) k_ok = k_ok && lvl.kernel_membership(w);
                level_results[row.n] = {lvl.commutes(), k_ok};
                diagram = diagram && lvl.commutes();
                kernel = kernel && k_ok;
                parts.push_back("(n=" + std::to_string(row.n) + ", p=" + row.p.get_str() + ")");
            }
            b.check("congruence.diagram", "f_* pi_p omega_0 = pi_p omega_{t_n} on u, c", diagram, detail::join(parts, " "));
            b.check("congruence.kernel", "Schreier generators of Pi reduce to I mod p_n", kernel,
                    std::to_string(kernel_words.size()) + " words per level");
        });
    }

    if (primes) {
        for (const auto& row : primes->rows) {
            TableRow tr;
            tr.n = row.n;
            tr.t = row.t.get_str();
            tr.y = row.y.get_str();
            tr.p = row.p.get_str();
            for (const auto& q : row.primitive_primes) tr.primitive_set.push_back(q.get_str());
            auto it = level_results.find(row.n);
            if (it != level_results.end()) {
                tr.diagram_ok = it->second.first;
                tr.kernel_ok = it->second.second;
            }
            tr.bound = congruence_systole_lower_bound(row.p, config.m).value;
            report.table.push_back(std::move(tr));
        }
        report.skipped = primes->skipped;
    }

    if (config.has("systole") && primes) {
        b.guarded("systole.monotone", "bounds increase along the selected primes", [&] {
            bool ok = true;
            for (std::size_t i = 1; i < report.table.size(); ++i)
                ok = ok && report.table[i].bound >= report.table[i - 1].bound;
            std::vector<std::string> vals;
            for (const auto& r : report.table) vals.push_back(r.p + ":" + format_bound(r.bound));
            b.check("systole.monotone", "bounds increase along the selected primes", ok, detail::join(vals, " "));
        });
    }
    return report;
}

inline nlohmann::json to_json(const VerificationReport& r) {
    using nlohmann::json;
    json cfg = {{"d", r.config.d},
                {"depth", r.config.depth},
                {"rule", to_string(r.config.rule)},
                {"seed", r.config.seed},
                {"cap", r.config.cap},
                {"m", r.config.m},
                {"suites", std::vector<std::string>(r.config.suites.begin(), r.config.suites.end())}};
    json claims = json::array();
    for (const auto& c : r.claims)
        claims.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", to_string(c.status)}, {"details", c.details}});
    json table = json::array();
    for (const auto& row : r.table)
        table.push_back({{"n", row.n},
                         {"t_n", row.t},
                         {"y_n", row.y},
                         {"p_n", row.p},
                         {"primitive_set", row.primitive_set},
                         {"diagram_ok", row.diagram_ok},
                         {"kernel_ok", row.kernel_ok},
                         {"systole_bound", format_bound(row.bound)}});
    json skipped = json::array();
    for (const auto& s : r.skipped) skipped.push_back({{"n", s.n}, {"reason", s.reason}});
    json out = {{"schema", kReportSchema}, {"config", cfg},        {"claims", claims},
                {"table", table},          {"skipped", skipped},   {"all_required_pass", r.all_required_pass()}};
    if (r.config.timing) out["timing_seconds"] = r.timing_seconds;
    return out;
}

inline VerificationReport report_from_json(const nlohmann::json& j) {
    if (j.at("schema").get<std::string>() != kReportSchema) fail(ErrorCode::ParseError, "unknown report schema");
    VerificationReport r;
    const auto& c = j.at("config");
    r.config.d = c.at("d").get<std::int64_t>();
    r.config.depth = c.at("depth").get<unsigned>();
    r.config.rule = parse_prime_rule(c.at("rule").get<std::string>());
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.cap = c.at("cap").get<std::size_t>();
    r.config.m = c.at("m").get<int>();
    const auto suites = c.at("suites").get<std::vector<std::string>>();
    r.config.suites = {suites.begin(), suites.end()};
    for (const auto& x : j.at("claims"))
        r.claims.push_back({x.at("id").get<std::string>(), x.at("anchor").get<std::string>(),
                            parse_claim_status(x.at("status").get<std::string>()), x.at("details").get<std::string>()});
    for (const auto& x : j.at("table")) {
        TableRow row;
        row.n = x.at("n").get<unsigned>();
        row.t = x.at("t_n").get<std::string>();
        row.y = x.at("y_n").get<std::string>();
        row.p = x.at("p_n").get<std::string>();
        row.primitive_set = x.at("primitive_set").get<std::vector<std::string>>();
        row.diagram_ok = x.at("diagram_ok").get<bool>();
        row.kernel_ok = x.at("kernel_ok").get<bool>();
        row.bound = std::stod(x.at("systole_bound").get<std::string>());
        r.table.push_back(std::move(row));
    }
    for (const auto& x : j.at("skipped")) r.skipped.push_back({x.at("n").get<unsigned>(), x.at("reason").get<std::string>()});
    if (j.contains("timing_seconds")) {
        r.config.timing = true;
        r.timing_seconds = j.at("timing_seconds").get<std::map<std::string, double>>();
    }
    return r;
}

namespace detail {
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}
} // namespace detail

inline std::string emit_report(const VerificationReport& r, ReportFormat format) {
    std::ostringstream os;
    switch (format) {
    case ReportFormat::Json: os << to_json(r).dump(2) << "\n"; break;
    case ReportFormat::Csv:
        os << "n,t_n,y_n,p_n,primitive_set,diagram_ok,kernel_ok,systole_bound\n";
        for (const auto& row : r.table)
            os << row.n << "," << row.t << "," << row.y << "," << row.p << ","
               << detail::csv_field(detail::join(row.primitive_set, " ")) << "," << (row.diagram_ok ? "true" : "false")
               << "," << (row.kernel_ok ? "true" : "false") << "," << format_bound(row.bound) << "\n";
        break;
    case ReportFormat::Markdown: {
        os << "# Verification report\n\n";
        os << "d = " << r.config.d << ", depth = " << r.config.depth << ", rule = " << to_string(r.config.rule)
           << ", seed = " << r.config.seed << "\n\n";
        if (!r.table.empty()) {
            os << "| n | u^n | t_n | p_n | primitive primes | diagram | kernel | systole bound |\n";
            os << "|---|---|---|---|---|---|---|---|\n";
            for (const auto& row : r.table)
                os << "| " << row.n << " | " << row.t << " + " << row.y << " sqrt(" << r.config.d << ") | " << row.t
                   << " | " << row.p << " | " << detail::join(row.primitive_set, ", ") << " | "
                   << (row.diagram_ok ? "yes" : "no") << " | " << (row.kernel_ok ? "yes" : "no") << " | "
                   << format_bound(row.bound) << " |\n";
            os << "\n";
        }
        for (const auto& s : r.skipped) os << "Skipped n = " << s.n << ": " << s.reason << "\n";
        if (!r.skipped.empty()) os << "\n";
        if (!r.claims.empty()) {
            os << "| claim | status | anchor | details |\n|---|---|---|---|\n";
            for (const auto& c : r.claims)
                os << "| " << c.id << " | " << to_string(c.status) << " | " << c.anchor << " | " << c.details << " |\n";
        }
        if (r.config.timing) {
            os << "\n| step | seconds |\n|---|---|\n";
            for (const auto& [k, v] : r.timing_seconds) os << "| " << k << " | " << v << " |\n";
        }
        break;
    }
    }
    return os.str();
}

} // namespace syslat
