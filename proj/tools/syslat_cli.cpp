// Command-line front end: verify, pell, primes, congruence, systole, report.
//
// Exit codes: 0 success, 1 a required claim failed, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "syslat/syslat.hpp"

namespace {

struct Options {
    std::int64_t d = 3;
    unsigned depth = 5;
    std::string rule = "largest-primitive";
    std::string format;
    std::uint64_t seed = 42;
    std::size_t cap = 1000000;
    std::string out;
    std::vector<std::string> suites;
    bool timing = false;
};

std::filesystem::path output_path(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("SYSLAT_OUTPUT_DIR"); dir != nullptr && *dir != '\0') p = std::filesystem::path(dir) / p;
    }
    return p;
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    const auto path = output_path(o.out);
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << text;
}

syslat::RunConfig make_config(const Options& o, const std::string& default_format) {
    syslat::RunConfig c;
    c.d = o.d;
    c.depth = o.depth;
    c.rule = syslat::parse_prime_rule(o.rule);
    c.format = syslat::parse_report_format(o.format.empty() ? default_format : o.format);
    c.seed = o.seed;
    c.cap = o.cap;
    c.timing = o.timing;
    if (!o.suites.empty()) c.suites = {o.suites.begin(), o.suites.end()};
    c.validate();
    return c;
}

int run_report(const Options& o, const std::string& default_format) {
    const syslat::RunConfig config = make_config(o, default_format);
    const syslat::VerificationReport r = syslat::run_suite(config);
    write_output(o, syslat::emit_report(r, config.format));
    return r.all_required_pass() ? 0 : 1;
}

int run_pell(const Options& o) {
    std::ostringstream os;
    os << "n,t_n,y_n\n";
    for (const auto& s : syslat::pell_sequence(o.d, o.depth)) os << s.n << "," << s.t << "," << s.y << "\n";
    write_output(o, os.str());
    return 0;
}

int run_primes(const Options& o) {
    const auto seq = syslat::select_prime_sequence(o.d, o.depth, syslat::parse_prime_rule(o.rule));
    std::ostringstream os;
    os << "n,S_n,factorization,primitive_set,selected\n";
    for (const auto& rec : seq.records) {
        std::vector<std::string> fac, prim;
        for (const auto& [p, e] : rec.factorization) fac.push_back(p.get_str() + (e > 1 ? "^" + std::to_string(e) : ""));
        for (const auto& p : rec.primitive_primes) prim.push_back(p.get_str());
        os << rec.n << "," << rec.s_n << "," << syslat::detail::join(fac, "*") << "," << syslat::detail::join(prim, " ")
           << "," << (rec.selected ? rec.selected->get_str() : "-") << "\n";
    }
    write_output(o, os.str());
    return 0;
}

int run_congruence(const Options& o) {
    const auto format = o.format.empty() ? syslat::ReportFormat::Csv : syslat::parse_report_format(o.format);
    if (format == syslat::ReportFormat::Markdown) throw syslat::Error(syslat::ErrorCode::InvalidArgument, "congruence supports csv or json");
    const auto seq = syslat::select_prime_sequence(o.d, o.depth, syslat::parse_prime_rule(o.rule));
    const auto img = syslat::enumerate_image(syslat::derive_ab(syslat::omega_at_zero()), "ab", o.cap);
    const auto words = syslat::schreier_kernel_generators(img);
    std::ostringstream os;
    nlohmann::json levels = nlohmann::json::array();
    if (format == syslat::ReportFormat::Csv) {
        os << "image order " << img.order() << ", " << words.size() << " Schreier generators\n";
        os << "n,t_n,p_n,hom_condition,diagram_ok,kernel_ok\n";
    }
    bool ok = true;
    for (const auto& row : seq.rows) {
        const syslat::LevelContext lvl(o.d, row.n, row.p);
        bool kernel = lvl.commutes();
        for (const auto& w : words)
            if (kernel) kernel = lvl.kernel_membership(w);
        ok = ok && lvl.commutes() && kernel;
        if (format == syslat::ReportFormat::Csv)
            os << std::boolalpha << row.n << "," << row.t << "," << row.p << "," << lvl.hom_condition() << "," << lvl.commutes() << ","
               << kernel << "\n";
        else
            levels.push_back({{"n", row.n}, {"t_n", row.t.get_str()}, {"p_n", row.p.get_str()},
                              {"hom_condition", lvl.hom_condition()}, {"diagram_ok", lvl.commutes()},
                              {"kernel_ok", kernel}});
    }
    if (format == syslat::ReportFormat::Json) {
        std::vector<std::string> ws;
        for (const auto& w : words) ws.push_back(w.str());
        const nlohmann::json out = {{"image", syslat::to_json(img)}, {"schreier_generators", ws}, {"levels", levels}};
        os << out.dump(2) << "\n";
    }
    write_output(o, os.str());
    return ok ? 0 : 1;
}

int run_systole(const Options& o) {
    std::ostringstream os;
    os << "n,t_n,p_n,bound,abs_error\n";
    for (const auto& r : syslat::systole_report(o.d, o.depth, syslat::parse_prime_rule(o.rule)))
        os << r.n << "," << r.t << "," << r.p << "," << syslat::format_bound(r.bound.value) << ","
           << r.bound.abs_error << "\n";
    write_output(o, os.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the systole construction for vol3"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--d", o.d, "square-free d >= 2")->capture_default_str();
        sub->add_option("--depth", o.depth, "number of Pell solutions")->capture_default_str();
        sub->add_option("--rule", o.rule, "largest-primitive | smallest-odd-primitive | paper-table")
            ->capture_default_str();
        sub->add_option("--format", o.format, "json | csv | markdown");
        sub->add_option("--seed", o.seed, "seed for the conjugator search")->capture_default_str();
        sub->add_option("--cap", o.cap, "element cap for image enumeration")->capture_default_str();
        sub->add_option("--out", o.out, "output file (relative to $SYSLAT_OUTPUT_DIR when set)");
    };

    auto* verify = app.add_subcommand("verify", "run the verification suites and print the report");
    auto* report = app.add_subcommand("report", "run the suites and print the report (markdown by default)");
    for (auto* sub : {verify, report}) {
        add_common(sub);
        sub->add_option("--suites", o.suites, "subset of suites to run")->delimiter(',');
        sub->add_flag("--timing", o.timing, "include wall-clock timings (breaks byte-identical output)");
    }
    auto* pell = app.add_subcommand("pell", "list Pell solutions");
    auto* primes = app.add_subcommand("primes", "primitive prime divisors and the selected primes");
    auto* congruence = app.add_subcommand("congruence", "diagram and kernel checks at the selected levels");
    auto* systole = app.add_subcommand("systole", "congruence systole bounds along the selected primes");
    for (auto* sub : {pell, primes, congruence, systole}) add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_report(o, "json");
        if (report->parsed()) return run_report(o, "markdown");
        if (o.d < 2 || !syslat::is_squarefree(o.d)) throw syslat::Error(syslat::ErrorCode::InvalidD, "d must be square-free and >= 2");
        syslat::parse_prime_rule(o.rule);
        if (pell->parsed()) return run_pell(o);
        if (primes->parsed()) return run_primes(o);
        if (congruence->parsed()) return run_congruence(o);
        if (systole->parsed()) return run_systole(o);
    } catch (const syslat::Error& e) {
        std::cerr << "syslat: " << e.what() << "\n";
        const auto c = e.code();
        return c == syslat::ErrorCode::InvalidD || c == syslat::ErrorCode::InvalidArgument ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "syslat: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
