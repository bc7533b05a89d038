#include "modcov/cli.hpp"

#include "modcov/properties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace modcov {

using nlohmann::json;

namespace {

class UsageError : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

double ms_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

json certificate_object(const Certificate& cert)
{
    const std::uint32_t k = group_exponent(cert.spec.kind);
    json per_degree = json::array();
    for (const auto& r : cert.per_degree)
        per_degree.push_back({{"d", r.d},
                              {"dim_Md", r.dim_Md},
                              {"dim_AplusMd", r.dim_AplusMd},
                              {"n_cands", r.candidates_at_d},
                              {"residual_rank", r.residual_rank},
                              {"ok", r.ok}});
    json freetest = {{"r", cert.freetest.expected_r},
                     {"count", cert.freetest.count},
                     {"s", cert.freetest.expected_s},
                     {"degree_sum", cert.freetest.degree_sum},
                     {"independent", cert.freetest.independent}};
    if (!cert.freetest.error.empty())
        freetest["error"] = cert.freetest.error;
    return {{"version", kVersion},
            {"case",
             {{"kind", kind_name(cert.spec.kind)},
              {"p", cert.spec.p},
              {"k", k},
              {"q", Prime(cert.spec.p, k).q()},
              {"n", cert.spec.n}}},
            {"hsop", cert.hsop},
            {"secondary", cert.secondary},
            {"candidates", cert.candidates},
            {"per_degree", per_degree},
            {"freetest", freetest},
            {"verdict", cert.verdict.verified ? "verified" : "failed"},
            {"reason", cert.verdict.reason},
            {"elapsed_ms", cert.elapsed_ms}};
}

void write_json(const std::string& path, const json& doc, std::ostream& out)
{
    if (path == "-") {
        out << doc.dump(2) << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file)
        throw std::runtime_error("cannot open " + path + " for writing");
    file << doc.dump(2) << "\n";
}

void print_certificate(const Certificate& cert, std::ostream& out)
{
    out << "case " << describe(cert.spec) << "\n";
    out << "hsop:";
    for (const auto& h : cert.hsop)
        out << "  " << h;
    out << "\ncandidates (" << cert.candidates.size() << "):\n";
    for (const auto& c : cert.candidates)
        out << "  " << c << "\n";
    out << "   d  dim M_d  dim A+M_d  cands  residual  ok\n";
    for (const auto& r : cert.per_degree)
        out << std::setw(4) << r.d << std::setw(9) << r.dim_Md << std::setw(11) << r.dim_AplusMd << std::setw(7)
            << r.candidates_at_d << std::setw(10) << r.residual_rank << "  " << (r.ok ? "yes" : "NO") << "\n";
    const auto& f = cert.freetest;
    out << "freetest: count " << f.count << " (r = " << f.expected_r << "), degree sum " << f.degree_sum
        << " (s = " << f.expected_s << ")";
    if (!f.error.empty())
        out << "  error: " << f.error;
    out << "\nverdict: " << (cert.verdict.verified ? "verified" : "failed: " + cert.verdict.reason) << " ("
        << std::fixed << std::setprecision(1) << cert.elapsed_ms << " ms)\n";
    out.unsetf(std::ios::fixed);
}

struct CaseOptions {
    std::string kind;
    std::optional<std::uint32_t> p;
    std::optional<std::uint32_t> n;
};

void add_case_options(CLI::App& cmd, CaseOptions& opts, bool need_n)
{
    cmd.add_option("--case", opts.kind, "v2, v3, v2v2 or v3c4")->required();
    cmd.add_option("--p", opts.p, "characteristic (defaults to 2 for v3c4)");
    auto* n = cmd.add_option("--n", opts.n, "dimension of the target module V_n");
    if (need_n)
        n->required();
}

CaseSpec to_spec(const CaseOptions& opts)
{
    const auto kind = parse_kind(opts.kind);
    if (!kind)
        throw UsageError("unknown case '" + opts.kind + "' (expected v2, v3, v2v2 or v3c4)");
    if (!opts.p && *kind != CaseKind::v3c4)
        throw UsageError("--p is required for case " + opts.kind);
    CaseSpec spec{*kind, opts.p.value_or(2), opts.n.value_or(1)};
    try {
        validate(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return spec;
}

std::optional<MonomialOrder> parse_order(const std::string& text)
{
    if (text.empty())
        return std::nullopt;
    if (text == "grevlex")
        return MonomialOrder::graded_revlex;
    if (text == "glex")
        return MonomialOrder::graded_lex;
    throw UsageError("unknown order '" + text + "' (expected grevlex or glex)");
}

CertifyOptions env_options()
{
    try {
        return CertifyOptions{degree_cap_from_env()};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::size_t parse_index(const std::string& text, const std::string& what)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9)
        throw UsageError("malformed " + what + " '" + text + "'");
    return std::stoul(text);
}

struct VerifyOptions {
    CaseOptions c;
    std::string json_path;
    std::optional<std::string> drop;
    std::optional<std::string> scale;
    bool secondary = false;
};

int cmd_verify(const VerifyOptions& opts, std::ostream& out)
{
    const CaseSpec spec = to_spec(opts.c);
    Certifier certifier(build_case(spec), env_options());
    std::vector<Polynomial> candidates = certifier.data().candidates;
    try {
        if (opts.drop)
            candidates = drop_candidate(candidates, parse_index(*opts.drop, "--drop index"));
        if (opts.scale) {
            const auto colon = opts.scale->find(':');
            if (colon == std::string::npos)
                throw UsageError("--scale expects INDEX:HSOP");
            candidates = scale_candidate(certifier.data(), candidates,
                                         parse_index(opts.scale->substr(0, colon), "--scale index"),
                                         parse_index(opts.scale->substr(colon + 1), "--scale hsop index"));
        }
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }

    // JSON on stdout replaces the text report
    std::ostringstream sink;
    std::ostream& text = opts.json_path == "-" ? static_cast<std::ostream&>(sink) : out;
    const Certificate cert = certifier.certify(spec.n, candidates);
    print_certificate(cert, text);
    std::optional<Certificate> secondary;
    if (opts.secondary || spec.n == 1) {
        secondary = certifier.certify(1, certifier.data().secondary);
        text << "secondary invariants:\n";
        print_certificate(*secondary, text);
    }
    if (!opts.json_path.empty())
        write_json(opts.json_path, json::parse(certificate_json(cert, secondary ? &*secondary : nullptr)), out);
    const bool ok = cert.verdict.verified && (!secondary || secondary->verdict.verified);
    return ok ? 0 : 1;
}

int cmd_kernel(const CaseOptions& c, std::uint32_t degree, const std::string& order_text, std::ostream& out)
{
    const CaseSpec spec = to_spec(c);
    const MonomialOrder order = parse_order(order_text).value_or(MonomialOrder::graded_revlex);
    SliceEngine engine(make_action(spec.kind, spec.p));
    auto basis = engine.basis(degree);
    auto kernel = engine.kernel(spec.n, degree);
    for (const auto& row : kernel->rows())
        out << format(basis->to_poly(row, engine.action().prime()), order) << "\n";
    return 0;
}

int cmd_series(const CaseOptions& c, std::optional<std::uint32_t> max_degree, std::ostream& out)
{
    const CaseSpec spec = to_spec(c);
    Certifier certifier(build_case(spec), env_options());
    const std::uint32_t bound = max_degree.value_or(certifier.series_bound(spec.n));
    const TruncatedSeries series = certifier.kernel_series(spec.n, bound);
    out << "H(K_" << spec.n << ", t) =";
    for (std::size_t d = 0; d < series.coeffs.size(); ++d)
        out << (d == 0 ? " " : " + ") << series.coeffs[d] << (d == 0 ? "" : d == 1 ? "t" : "t^" + std::to_string(d));
    out << " + O(t^" << bound + 1 << ")\n";
    out << "hsop degrees:";
    for (auto d : certifier.data().hsop_degrees())
        out << " " << d;
    out << "\n";
    try {
        const HilbertNumerator f = certifier.kernel_numerator(spec.n, bound);
        const RankS rs = rank_s(f);
        out << "numerator: " << f.to_string() << "\n";
        out << "r = " << rs.r << "\n";
        out << "s = " << rs.s << "\n";
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    } catch (const NotPolynomialError& e) {
        out << "numerator: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

int cmd_lemmas(std::optional<std::uint32_t> p, const std::string& only, const std::string& order_text,
               std::ostream& out)
{
    const auto order = parse_order(order_text);
    const std::vector<Lemma> all{Lemma::x1_power, Lemma::x1_power_x2, Lemma::v2v2_lead, Lemma::obs};
    bool ok = true, any = false;
    for (Lemma lemma : all) {
        if (!only.empty() && only != lemma_name(lemma))
            continue;
        std::vector<std::uint32_t> primes = lemma == Lemma::v2v2_lead ? std::vector<std::uint32_t>{3, 5}
                                                                       : std::vector<std::uint32_t>{3, 5, 7};
        if (p)
            primes = {*p};
        for (auto prime : primes) {
            LemmaReport rep;
            try {
                rep = lead_term_lemma_check(prime, lemma, order.value_or(lemma_order(lemma)));
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            any = true;
            ok = ok && rep.ok();
            out << lemma_name(rep.lemma) << " p=" << prime << " order=" << to_string(rep.order) << ": "
                << rep.checked << " checked, " << rep.failures.size() << " failures\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(rep.failures.size(), 5); ++i)
                out << "  " << rep.failures[i] << "\n";
            for (const auto& o : rep.observations)
                out << "  observed: " << o << "\n";
        }
    }
    if (!any)
        throw UsageError("no lemma named '" + only + "'");
    return ok ? 0 : 1;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty())
            out.push_back(item);
    return out;
}

int cmd_suite(std::uint32_t max_p, const std::optional<std::string>& only, const std::string& json_path,
              std::ostream& out)
{
    if (max_p < 2 || max_p > Prime::kMaxP)
        throw UsageError("--max-p must lie in [2, 97]");
    std::vector<std::string> sections = suite_sections();
    if (only) {
        sections = split_list(*only);
        if (sections.empty())
            throw UsageError("--only selects nothing");
        for (const auto& s : sections)
            if (std::find(suite_sections().begin(), suite_sections().end(), s) == suite_sections().end())
                throw UsageError("unknown suite section '" + s + "'");
    }
    std::ostringstream sink;
    std::ostream& text = json_path == "-" ? static_cast<std::ostream&>(sink) : out;
    json doc = {{"version", kVersion}, {"max_p", max_p}, {"sections", json::object()}};
    bool ok = true;
    for (const auto& section : sections) {
        json rows = json::array();
        for (const auto& row : run_suite_section(section, max_p)) {
            ok = ok && row.ok;
            text << (row.ok ? "[PASS] " : "[FAIL] ") << section << " " << row.item;
            if (!row.detail.empty())
                text << "  " << row.detail;
            text << "\n";
            rows.push_back(
                {{"item", row.item}, {"ok", row.ok}, {"detail", row.detail}, {"elapsed_ms", row.elapsed_ms}});
        }
        doc["sections"][section] = rows;
    }
    doc["ok"] = ok;
    if (!json_path.empty())
        write_json(json_path, doc, out);
    text << (ok ? "suite passed" : "suite FAILED") << "\n";
    return ok ? 0 : 1;
}

std::string label(const CaseSpec& spec)
{
    return describe(spec);
}

std::vector<SuiteRow> certificate_rows(std::uint32_t max_p)
{
    std::vector<SuiteRow> rows;
    for (const auto& spec : acceptance_instances(max_p)) {
        const auto start = std::chrono::steady_clock::now();
        Certifier certifier(build_case(spec));
        const CaseData& data = certifier.data();
        const Certificate cert = certifier.certify(spec.n, data.candidates);
        std::ostringstream detail;
        bool ok = cert.verdict.verified;
        detail << "count " << cert.freetest.count << " degree sum " << cert.freetest.degree_sum;
        if (!ok)
            detail << "; " << cert.verdict.reason;
        if (cert.freetest.count != data.expected.r || cert.freetest.degree_sum != data.expected.s) {
            ok = false;
            detail << "; closed form (" << data.expected.r << ", " << data.expected.s << ")";
        }
        const SubalgebraReport sub = check_subalgebra_identities(certifier.kernel_numerator(spec.n),
                                                                 certifier.kernel_numerator(1));
        if (!(sub.module_over_b == data.expected) || !sub.ok()) {
            ok = false;
            detail << "; subalgebra " << sub.to_string();
        }
        if (spec.kind != CaseKind::v3c4 && spec.kind != CaseKind::v2 && sub.module_over_a.s != 0) {
            ok = false;
            detail << "; s(K_n, k[V]^G) = " << sub.module_over_a.s;
        }
        if (cert.verdict.verified) {
            if (auto d = soundness_mismatch(certifier, spec.n, data.candidates)) {
                ok = false;
                detail << "; generated series differs in degree " << *d;
            }
        }
        rows.push_back({"certificates", label(spec), ok, detail.str(), ms_since(start)});
    }
    return rows;
}

std::vector<SuiteRow> secondary_rows(std::uint32_t max_p)
{
    std::vector<SuiteRow> rows;
    for (const auto& spec : acceptance_instances(max_p)) {
        if (spec.n != 1)
            continue;
        const auto start = std::chrono::steady_clock::now();
        Certifier certifier(build_case(spec));
        const Certificate cert = certifier.certify(1, certifier.data().secondary);
        const RankS want = certifier.data().expected_invariants;
        bool ok = cert.verdict.verified && cert.freetest.degree_sum == want.s;
        std::string detail = "s = " + std::to_string(cert.freetest.degree_sum);
        if (!cert.verdict.verified)
            detail += "; " + cert.verdict.reason;
        if (spec.kind == CaseKind::v3c4) {
            const std::size_t quadratic = certifier.engine().kernel(1, 2)->rank();
            ok = ok && quadratic == 2;
            detail += "; dim k[V]^G_2 = " + std::to_string(quadratic);
        }
        rows.push_back({"secondary", describe(CaseSpec{spec.kind, spec.p, 1}), ok, detail, ms_since(start)});
    }
    return rows;
}

std::vector<SuiteRow> property_rows(std::uint32_t max_p)
{
    std::vector<SuiteRow> rows;
    std::uint64_t seed = 20240601;
    for (const auto& c : property_cases(std::min<std::uint32_t>(max_p, 7))) {
        const auto start = std::chrono::steady_clock::now();
        for (const auto& rep : run_property_suite(c, 500, seed++)) {
            std::string detail = std::to_string(rep.applicable) + "/" + std::to_string(rep.samples) + " applicable, " +
                                 std::to_string(rep.failures) + " failures";
            if (!rep.examples.empty())
                detail += "; e.g. " + rep.examples.front();
            rows.push_back({"properties", c.label + " " + rep.property, rep.ok(), detail, ms_since(start)});
        }
    }
    return rows;
}

std::vector<SuiteRow> lemma_rows(std::uint32_t max_p)
{
    std::vector<SuiteRow> rows;
    const std::vector<std::pair<Lemma, std::vector<std::uint32_t>>> plan{{Lemma::x1_power, {3, 5, 7}},
                                                                         {Lemma::x1_power_x2, {3, 5, 7}},
                                                                         {Lemma::v2v2_lead, {3, 5}},
                                                                         {Lemma::obs, {3, 5, 7}}};
    for (const auto& [lemma, primes] : plan)
        for (auto p : primes) {
            if (p > max_p)
                continue;
            const auto start = std::chrono::steady_clock::now();
            const LemmaReport rep = lead_term_lemma_check(p, lemma, lemma_order(lemma));
            std::string detail = std::to_string(rep.checked) + " checked";
            if (!rep.failures.empty())
                detail += "; " + rep.failures.front();
            for (const auto& o : rep.observations)
                detail += "; " + o;
            rows.push_back({"lemmas", std::string(lemma_name(lemma)) + " p=" + std::to_string(p), rep.ok(), detail,
                            ms_since(start)});
        }
    return rows;
}

std::vector<SuiteRow> xi_rows(std::uint32_t max_p)
{
    std::vector<SuiteRow> rows;
    for (const auto& spec : acceptance_instances(max_p)) {
        const auto start = std::chrono::steady_clock::now();
        Certifier certifier(build_case(spec));
        const std::uint32_t bound = std::max(max_degree(certifier.data().candidates), certifier.canonical_top(spec.n));
        const XiReport rep = check_xi(certifier.engine(), spec.n, bound);
        rows.push_back({"xi", label(spec), rep.ok(),
                        "degrees 0.." + std::to_string(bound) + (rep.failures.empty() ? "" : "; " + rep.failures[0]),
                        ms_since(start)});
    }
    return rows;
}

std::vector<SuiteRow> mutation_rows(std::uint32_t max_p)
{
    std::vector<SuiteRow> rows;
    for (const auto& spec : acceptance_instances(max_p)) {
        const auto start = std::chrono::steady_clock::now();
        Certifier certifier(build_case(spec));
        const CaseData& data = certifier.data();
        std::size_t tried = 0, caught = 0;
        std::string escaped;
        for (std::size_t i = 0; i < data.candidates.size(); ++i) {
            std::vector<std::vector<Polynomial>> mutants{drop_candidate(data.candidates, i)};
            for (std::size_t h = 0; h < data.hsop.size(); ++h)
                mutants.push_back(scale_candidate(data, data.candidates, i, h));
            for (std::size_t m = 0; m < mutants.size(); ++m) {
                ++tried;
                if (!certifier.certify(spec.n, mutants[m]).verdict.verified)
                    ++caught;
                else if (escaped.empty())
                    escaped = m == 0 ? "drop " + std::to_string(i)
                                     : "scale " + std::to_string(i) + ":" + std::to_string(m - 1);
            }
        }
        rows.push_back({"mutation", label(spec), tried > 0 && caught == tried,
                        std::to_string(caught) + "/" + std::to_string(tried) + " mutants rejected" +
                            (escaped.empty() ? "" : "; survived: " + escaped),
                        ms_since(start)});
    }
    return rows;
}

std::vector<SuiteRow> transfer_rows(std::uint32_t)
{
    const auto start = std::chrono::steady_clock::now();
    SliceEngine engine(make_action(CaseKind::v3c4, 2));
    bool ok = true;
    std::string detail = "ranks";
    for (std::uint32_t d = 0; d <= 12; ++d) {
        const std::size_t t = transfer_kernel_slice(engine.action(), Subgroup{1}, d).rank();
        const std::size_t k = engine.kernel(1, d)->rank();
        detail += " " + std::to_string(t);
        if (t != k) {
            ok = false;
            detail += "(!=" + std::to_string(k) + ")";
        }
    }
    return {{"transfer", "v3c4 H=<sigma^2> d<=12", ok, detail, ms_since(start)}};
}

} // namespace

std::string certificate_json(const Certificate& cert, const Certificate* secondary)
{
    json doc = certificate_object(cert);
    doc["secondary_certificate"] = secondary ? certificate_object(*secondary) : json(nullptr);
    return doc.dump(2);
}

std::vector<CaseSpec> acceptance_instances(std::uint32_t max_p)
{
    std::vector<CaseSpec> out;
    auto add_all = [&](CaseKind kind, std::initializer_list<std::uint32_t> primes) {
        for (auto p : primes)
            if (p <= max_p)
                for (std::uint32_t n = 1; n <= p; ++n)
                    out.push_back({kind, p, n});
    };
    add_all(CaseKind::v2, {2, 3, 5, 7});
    add_all(CaseKind::v3odd, {3, 5, 7});
    add_all(CaseKind::v2v2, {2, 3, 5});
    for (std::uint32_t n = 1; n <= 4; ++n)
        out.push_back({CaseKind::v3c4, 2, n});
    return out;
}

std::vector<SuiteRow> run_suite_section(const std::string& section, std::uint32_t max_p)
{
    if (section == "certificates")
        return certificate_rows(max_p);
    if (section == "secondary")
        return secondary_rows(max_p);
    if (section == "properties")
        return property_rows(max_p);
    if (section == "lemmas")
        return lemma_rows(max_p);
    if (section == "xi")
        return xi_rows(max_p);
    if (section == "mutation")
        return mutation_rows(max_p);
    if (section == "transfer")
        return transfer_rows(max_p);
    throw std::invalid_argument("unknown suite section '" + section + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Modules of covariants for cyclic p-groups: certification workbench", "modcov"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "certify the candidate generators of K_n");
    add_case_options(*verify_cmd, verify.c, true);
    verify_cmd->add_option("--json", verify.json_path, "write the certificate as JSON ('-' for stdout)");
    verify_cmd->add_option("--drop", verify.drop, "remove candidate INDEX before certifying");
    verify_cmd->add_option("--scale", verify.scale, "multiply candidate INDEX by hsop element HSOP (INDEX:HSOP)");
    verify_cmd->add_flag("--secondary", verify.secondary, "also certify the secondary invariants");

    CaseOptions kernel_case;
    std::uint32_t kernel_degree = 0;
    std::string kernel_order;
    auto* kernel_cmd = app.add_subcommand("kernel", "print the reduced basis of K_n in one degree");
    add_case_options(*kernel_cmd, kernel_case, true);
    kernel_cmd->add_option("--degree", kernel_degree, "degree of the slice")->required();
    kernel_cmd->add_option("--order", kernel_order, "term order for printing (grevlex or glex)");

    CaseOptions series_case;
    std::optional<std::uint32_t> series_max;
    auto* series_cmd = app.add_subcommand("series", "print the Hilbert series, numerator and (r, s) of K_n");
    add_case_options(*series_cmd, series_case, true);
    series_cmd->add_option("--max-degree", series_max, "truncation bound");

    std::optional<std::uint32_t> lemma_p;
    std::string lemma_only, lemma_order_text;
    auto* lemmas_cmd = app.add_subcommand("lemmas", "check the lead-term lemmas");
    lemmas_cmd->add_option("--p", lemma_p, "a single prime <= 7");
    lemmas_cmd->add_option("--lemma", lemma_only, "x1-power, x1-power-x2, v2v2-lead or obs");
    lemmas_cmd->add_option("--order", lemma_order_text, "override the term order (grevlex or glex)");

    std::uint32_t max_p = 7;
    std::optional<std::string> only;
    std::string suite_json;
    auto* suite_cmd = app.add_subcommand("suite", "run every acceptance case and property suite");
    suite_cmd->add_option("--max-p", max_p, "largest prime to include");
    suite_cmd->add_option("--only", only, "comma-separated sections: " + [] {
        std::string s;
        for (const auto& n : suite_sections())
            s += (s.empty() ? "" : ",") + n;
        return s;
    }());
    suite_cmd->add_option("--json", suite_json, "write the pass/fail matrix as JSON ('-' for stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForVersion&) {
        out << kVersion << "\n";
        return 0;
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*verify_cmd)
            return cmd_verify(verify, out);
        if (*kernel_cmd)
            return cmd_kernel(kernel_case, kernel_degree, kernel_order, out);
        if (*series_cmd)
            return cmd_series(series_case, series_max, out);
        if (*lemmas_cmd)
            return cmd_lemmas(lemma_p, lemma_only, lemma_order_text, out);
        return cmd_suite(max_p, only, suite_json, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace modcov
