#include "bosonorder/cli.hpp"

#include "bosonorder/bell.hpp"
#include "bosonorder/boson.hpp"
#include "bosonorder/errors.hpp"
#include "bosonorder/expr.hpp"
#include "bosonorder/genfun.hpp"
#include "bosonorder/stirling.hpp"
#include "bosonorder/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

namespace bosonorder::cli {

namespace {

using nlohmann::json;

enum class Format { text, json, csv };

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Thrown after a command already wrote its report and must exit with code 1.
struct VerificationFailed {};

// {command, parameters, results, provenance}; keys are sorted and big
// integers are decimal strings, so parse + dump reproduces the bytes.
json envelope(const std::string& command, json parameters, json results, json provenance) {
    json env = json::object();
    env["command"] = command;
    env["parameters"] = std::move(parameters);
    env["results"] = std::move(results);
    env["provenance"] = std::move(provenance);
    return env;
}

void emit_json(std::ostream& out, const json& env) { out << env.dump(2) << '\n'; }

std::string format_double(double v) {
    std::ostringstream s;
    s.precision(15);
    s << v;
    return s.str();
}

json approx_json(const Approx& a) { return json{{"value", a.value}, {"tol", a.tol}}; }

std::size_t word_cap_from_env() {
    const char* raw = std::getenv("BOSONORDER_WORD_CAP");
    if (raw == nullptr || *raw == '\0') return kDefaultWordCap;
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(raw, &used);
        if (used != std::string(raw).size()) throw std::invalid_argument("trailing characters");
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw UsageError(std::string("BOSONORDER_WORD_CAP must be a non-negative integer, got '") + raw + "'");
    }
}

// ---- triangle ----

StirlingTriangle checked_triangle(const OrderSignature& sig, unsigned n_max, const std::string& algorithm,
                                  std::vector<std::string>& used) {
    if (algorithm == "sum") {
        used = {"finite_sum"};
        return stirling_triangle(sig, n_max, StirlingAlgorithm::finite_sum);
    }
    if (algorithm == "operator") {
        used = {"operator_form"};
        return stirling_triangle(sig, n_max, StirlingAlgorithm::operator_form);
    }
    if (algorithm == "recurrence") {
        if (!sig.is_diagonal()) throw UsageError("--algorithm recurrence requires r == s");
        used = {"diagonal_recurrence"};
        return stirling_diag_recurrence(sig.r, n_max);
    }
    // all
    used = {"finite_sum", "operator_form"};
    const StirlingTriangle base = stirling_triangle(sig, n_max, StirlingAlgorithm::finite_sum);
    std::vector<std::pair<std::string, StirlingTriangle>> others;
    others.emplace_back("operator_form", stirling_triangle(sig, n_max, StirlingAlgorithm::operator_form));
    if (sig.is_diagonal()) {
        used.push_back("diagonal_recurrence");
        used.push_back("diagonal_sum");
        others.emplace_back("diagonal_recurrence", stirling_diag_recurrence(sig.canonical().r, n_max));
        others.emplace_back("diagonal_sum", stirling_triangle(sig, n_max, StirlingAlgorithm::diagonal_sum));
    }
    for (const auto& [name, tri] : others)
        if (!(tri == base)) throw ConsistencyError("algorithm " + name + " disagrees with finite_sum");
    return base;
}

void cmd_triangle(unsigned r, unsigned s, unsigned n_max, const std::string& algorithm, Format format,
                  std::ostream& out) {
    const OrderSignature sig(r, s);
    std::vector<std::string> used;
    const StirlingTriangle tri = checked_triangle(sig, n_max, algorithm, used);
    switch (format) {
        case Format::text: {
            const unsigned lo = tri.k_min();
            const std::string top = lo == 1 ? "n" : std::to_string(lo) + "n";
            out << "n\tS(" << r << "," << s << ")(n,k), k = " << lo << ".." << top << "\tB(" << r << "," << s
                << ")(n)\n";
            for (unsigned n = 1; n <= n_max; ++n) {
                out << "n = " << n << "\t";
                const auto& row = tri.row(n);
                for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i].get_str();
                out << "\t" << tri.row_sum(n).get_str() << "\n";
            }
            break;
        }
        case Format::csv: {
            out << "n,k,value\n";
            for (unsigned n = 1; n <= n_max; ++n)
                for (unsigned k = tri.k_min(); k <= tri.k_max(n); ++k)
                    out << n << "," << k << "," << tri.at(n, k).get_str() << "\n";
            break;
        }
        case Format::json: {
            json rows = json::array();
            for (unsigned n = 1; n <= n_max; ++n) {
                json entries = json::array();
                for (const auto& v : tri.row(n)) entries.push_back(v.get_str());
                rows.push_back({{"n", n},
                                {"k_min", tri.k_min()},
                                {"k_max", tri.k_max(n)},
                                {"entries", entries},
                                {"row_sum", tri.row_sum(n).get_str()}});
            }
            json prov = json::object();
            for (const auto& u : used) prov[u] = "generalized Stirling numbers";
            prov["row_sum"] = "generalized Bell numbers as row sums";
            emit_json(out, envelope("triangle", {{"r", r}, {"s", s}, {"nmax", n_max}, {"algorithm", algorithm}},
                                    {{"rows", rows}}, prov));
            break;
        }
    }
}

// ---- bell ----

void cmd_bell(unsigned r, unsigned s, std::optional<unsigned> n, std::optional<unsigned> n_max, Format format,
              std::ostream& out) {
    const OrderSignature sig(r, s);
    std::vector<std::pair<unsigned, ExactInt>> values;
    if (n) {
        values.emplace_back(*n, bell(sig, *n));
    } else {
        const unsigned top = n_max.value_or(6);
        const auto seq = bell_sequence(sig, top);
        for (unsigned i = 0; i <= top; ++i) values.emplace_back(i, seq[i]);
    }
    switch (format) {
        case Format::text:
            if (n) {
                out << values.front().second.get_str() << "\n";
            } else {
                for (const auto& [i, v] : values) out << i << "\t" << v.get_str() << "\n";
            }
            break;
        case Format::csv:
            out << "n,value\n";
            for (const auto& [i, v] : values) out << i << "," << v.get_str() << "\n";
            break;
        case Format::json: {
            json arr = json::array();
            for (const auto& [i, v] : values) arr.push_back({{"n", i}, {"value", v.get_str()}});
            json params = {{"r", r}, {"s", s}};
            if (n) params["n"] = *n;
            else params["nmax"] = n_max.value_or(6);
            emit_json(out, envelope("bell", params, {{"values", arr}},
                                    {{n ? "row_sum" : "collapsed_row_sum", "generalized Bell numbers"}}));
            break;
        }
    }
}

// ---- normal-order / expect ----

struct Ordered {
    NormalPolynomial poly;
    std::string method;
};

// A single unit-coefficient word that is [(ad)^r a^s]^n takes the Stirling path.
std::optional<std::pair<OrderSignature, unsigned>> match_power(const std::vector<WeightedWord>& terms) {
    if (terms.size() != 1 || terms.front().coefficient != 1) return std::nullopt;
    const auto& letters = terms.front().word.letters;
    if (letters.empty() || letters.front() != Generator::create) return std::nullopt;
    std::size_t i = 0;
    unsigned r = 0, s = 0;
    while (i < letters.size() && letters[i] == Generator::create) ++r, ++i;
    while (i < letters.size() && letters[i] == Generator::annihilate) ++s, ++i;
    if (s == 0 || letters.size() % (r + s) != 0) return std::nullopt;
    const OrderSignature sig(r, s);
    const auto n = static_cast<unsigned>(letters.size() / (r + s));
    if (word_from_power(sig, n, kNoWordCap) != terms.front().word) return std::nullopt;
    return std::make_pair(sig, n);
}

Ordered order_expression(const std::string& text) {
    const std::size_t cap = word_cap_from_env();
    const auto terms = expr::lower(expr::parse(text), cap);
    if (auto m = match_power(terms)) return {normal_order_power(m->first, m->second), "stirling"};
    return {normal_order_terms(terms, cap), "rewrite"};
}

json poly_terms_json(const NormalPolynomial& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms())
        arr.push_back({{"i", m.creations}, {"j", m.annihilations}, {"coefficient", c.get_str()}});
    return arr;
}

void cmd_normal_order(const std::string& text, Format format, std::ostream& out) {
    const Ordered ordered = order_expression(text);
    switch (format) {
        case Format::text: out << ordered.poly.to_string() << "\n"; break;
        case Format::csv:
            out << "i,j,coefficient\n";
            for (const auto& [m, c] : ordered.poly.terms())
                out << m.creations << "," << m.annihilations << "," << c.get_str() << "\n";
            break;
        case Format::json:
            emit_json(out, envelope("normal-order", {{"expr", text}},
                                    {{"terms", poly_terms_json(ordered.poly)},
                                     {"method", ordered.method},
                                     {"text", ordered.poly.to_string()}},
                                    {{ordered.method, ordered.method == "stirling"
                                                          ? "expansion through generalized Stirling numbers"
                                                          : "commutator rewriting a a^dag -> a^dag a + 1"}}));
            break;
    }
}

struct ParsedPoint {
    std::complex<double> z;
    std::optional<ExactRat> exact_real;
};

// Accepts "x", "x+yi", "yi", "i", with x, y decimals, exponents or p/q.
ParsedPoint parse_point(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c))) text += c;
    const auto fail = [&]() { return UsageError("cannot parse --z value '" + raw + "'"); };
    if (text.empty()) throw fail();

    std::string re_text = text, im_text;
    bool has_im = false;
    if (text.back() == 'i') {
        has_im = true;
        std::size_t split = std::string::npos;
        for (std::size_t i = text.size() - 1; i-- > 1;)
            if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' && text[i - 1] != 'E') {
                split = i;
                break;
            }
        if (split == std::string::npos) split = 0;
        re_text = text.substr(0, split);
        im_text = text.substr(split, text.size() - 1 - split);
    }

    const auto real_number = [&](const std::string& s) -> std::pair<double, std::optional<ExactRat>> {
        try {
            const ExactRat q = parse_rat(s);
            return {q.get_d(), q};
        } catch (const DomainError&) {
        }
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used == s.size() && std::isfinite(v)) return {v, std::nullopt};
        } catch (const std::exception&) {
        }
        throw fail();
    };

    ParsedPoint p;
    double re = 0, im = 0;
    std::optional<ExactRat> exact_re = ExactRat(0);
    if (!re_text.empty()) std::tie(re, exact_re) = real_number(re_text);
    if (has_im) {
        if (im_text.empty() || im_text == "+") im = 1;
        else if (im_text == "-") im = -1;
        else im = real_number(im_text).first;
    }
    p.z = {re, im};
    if (im == 0.0) p.exact_real = exact_re;
    return p;
}

void cmd_expect(const std::string& text, const std::string& z_text, Format format, std::ostream& out) {
    const Ordered ordered = order_expression(text);
    const ParsedPoint pt = parse_point(z_text);
    json result;
    std::string line;
    if (pt.exact_real) {
        const ExactRat v = coherent_expectation(ordered.poly, *pt.exact_real);
        line = v.get_str();
        result = {{"value", v.get_str()}, {"exact", true}};
    } else {
        const std::complex<double> v = coherent_expectation(ordered.poly, CoherentPoint{pt.z});
        std::ostringstream s;
        s.precision(15);
        s << v.real();
        if (v.imag() != 0.0) s << (v.imag() < 0 ? "-" : "+") << std::fabs(v.imag()) << "i";
        line = s.str();
        result = {{"re", v.real()}, {"im", v.imag()}, {"tol", 1e-10}, {"exact", false}};
    }
    result["method"] = ordered.method;
    switch (format) {
        case Format::text: out << line << "\n"; break;
        case Format::csv: out << "expr,z,value\n\"" << text << "\"," << z_text << "," << line << "\n"; break;
        case Format::json:
            emit_json(out, envelope("expect", {{"expr", text}, {"z", z_text}}, result,
                                    {{"coherent_state", "<z|(ad)^i a^j|z> = conj(z)^i z^j"}}));
            break;
    }
}

// ---- egf / hgf32 ----

void cmd_egf(std::optional<unsigned> diag, std::optional<unsigned> r1, long k, unsigned order, Format format,
             std::ostream& out) {
    if (diag.has_value() == r1.has_value()) throw UsageError("egf needs exactly one of --diag R or --r1 R");
    const EgfExtraction e = diag ? egf_diag(*diag, k, order) : egf_r1(*r1, k, order);
    const auto scaled = e.scaled();
    const std::string family = diag ? "diag" : "r1";
    const unsigned r = diag ? *diag : *r1;
    switch (format) {
        case Format::text:
            out << "n\tcoefficient\tn!*coefficient\n";
            for (unsigned n = 0; n <= order; ++n)
                out << n << "\t" << e.coefficients[n].get_str() << "\t" << scaled[n].get_str() << "\n";
            break;
        case Format::csv:
            out << "n,coefficient,scaled\n";
            for (unsigned n = 0; n <= order; ++n)
                out << n << "," << e.coefficients[n].get_str() << "," << scaled[n].get_str() << "\n";
            break;
        case Format::json: {
            json arr = json::array();
            for (unsigned n = 0; n <= order; ++n)
                arr.push_back({{"n", n}, {"coefficient", e.coefficients[n].get_str()}, {"scaled", scaled[n].get_str()}});
            emit_json(out, envelope("egf", {{"family", family}, {"r", r}, {"k", k}, {"order", order}},
                                    {{"coefficients", arr}},
                                    {{diag ? "egf_diagonal" : "egf_r1",
                                      diag ? "sum of exponentials over p^(r)" : "binomial series bracket to the power k"}}));
            break;
        }
    }
}

void cmd_hgf32(double lambda, double tol, Format format, std::ostream& out) {
    const Hgf32Readings h = hgf_32(lambda, tol);
    const double diff = std::fabs(h.series.value.value - h.bell_sum_dobinski.value);
    switch (format) {
        case Format::text:
            out << "lambda                          " << format_double(lambda) << "\n"
                << "hypergeometric series           " << format_double(h.series.value.value) << "\n"
                << "Bell ratios, B(0) = 1           " << format_double(h.bell_sum_convention.value) << "\n"
                << "Bell ratios, n=0 term (e-2)/e   " << format_double(h.bell_sum_dobinski.value) << "\n"
                << "normalization offset (2/e)      " << format_double(h.normalization_offset) << "\n"
                << "Bell terms used                 " << h.bell_terms << "\n";
            break;
        case Format::csv:
            out << "lambda,series,bell_convention,bell_dobinski,offset,tol\n"
                << format_double(lambda) << "," << format_double(h.series.value.value) << ","
                << format_double(h.bell_sum_convention.value) << "," << format_double(h.bell_sum_dobinski.value) << ","
                << format_double(h.normalization_offset) << "," << tol << "\n";
            break;
        case Format::json:
            emit_json(out, envelope("hgf32", {{"lambda", lambda}, {"tol", tol}},
                                    {{"series", approx_json(h.series.value)},
                                     {"bell_sum_convention", approx_json(h.bell_sum_convention)},
                                     {"bell_sum_dobinski", approx_json(h.bell_sum_dobinski)},
                                     {"normalization_offset", h.normalization_offset},
                                     {"bell_terms", h.bell_terms},
                                     {"series_vs_dobinski_abs_diff", diff}},
                                    {{"hypergeometric_series", "sum_k 2F1(k+2,k+1;1;lambda)/(k+2)! / e"},
                                     {"bell_ratio_sum", "sum_n B(3,2)(n)/(n!)^2 lambda^n"}}));
            break;
    }
}

// ---- verify ----

void cmd_verify(const std::string& suite, Format format, std::ostream& out) {
    const auto checks = run_suite(suite);
    const auto passed = static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.passed; }));
    switch (format) {
        case Format::text:
            for (const auto& c : checks)
                out << (c.passed ? "PASS " : "FAIL ") << c.tag << ": " << c.identity
                    << (c.passed || c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
            out << passed << "/" << checks.size() << " checks passed\n";
            break;
        case Format::csv:
            out << "tag,identity,passed\n";
            for (const auto& c : checks) out << c.tag << ",\"" << c.identity << "\"," << (c.passed ? 1 : 0) << "\n";
            break;
        case Format::json: {
            json arr = json::array();
            for (const auto& c : checks)
                arr.push_back({{"identity", c.identity}, {"tag", c.tag}, {"passed", c.passed}, {"detail", c.detail}});
            emit_json(out, envelope("verify", {{"suite", suite}},
                                    {{"checks", arr}, {"passed", passed}, {"failed", checks.size() - passed}},
                                    {{"suite", suite}}));
            break;
        }
    }
    if (passed != checks.size()) throw VerificationFailed{};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact normal ordering of boson operators and generalized Stirling/Bell numbers", "bosonorder"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.fallthrough();

    unsigned r = 1, s = 1, n_max = 6;
    std::string algorithm = "sum";
    auto* triangle = app.add_subcommand("triangle", "Print S(r,s)(n,k) rows with their row sums");
    triangle->add_option("r", r)->required();
    triangle->add_option("s", s)->required();
    triangle->add_option("--nmax", n_max, "Last row")->capture_default_str();
    triangle->add_option("--algorithm", algorithm)
        ->check(CLI::IsMember({"sum", "operator", "recurrence", "all"}))
        ->capture_default_str();

    std::optional<unsigned> bell_n, bell_nmax;
    unsigned br = 1, bs = 1;
    auto* bellcmd = app.add_subcommand("bell", "Generalized Bell numbers B(r,s)(n)");
    bellcmd->add_option("r", br)->required();
    bellcmd->add_option("s", bs)->required();
    auto* bell_n_opt = bellcmd->add_option("--n", bell_n, "Single index");
    bellcmd->add_option("--nmax", bell_nmax, "Sequence 0..nmax")->excludes(bell_n_opt);

    std::string expression;
    auto* normal = app.add_subcommand("normal-order", "Normal-order an operator expression");
    normal->add_option("expr", expression)->required();

    std::string z_text = "1";
    auto* expect = app.add_subcommand("expect", "Coherent-state expectation <z|expr|z>");
    expect->add_option("expr", expression)->required();
    expect->add_option("--z", z_text, "Complex point, e.g. 1, 0.3+0.4i")->capture_default_str();

    std::optional<unsigned> diag, r1;
    long egf_k = 1;
    unsigned egf_order = 8;
    auto* egf = app.add_subcommand("egf", "Exact egf coefficients of one Stirling column");
    egf->add_option("--diag", diag, "Diagonal family (r,r)");
    egf->add_option("--r1", r1, "Family (r,1)");
    egf->add_option("--k", egf_k)->required();
    egf->add_option("--order", egf_order)->capture_default_str();

    double lambda = 0, hgf_tol = 1e-10;
    auto* hgf = app.add_subcommand("hgf32", "Hypergeometric generating function of B(3,2)");
    hgf->add_option("--lambda", lambda)->required();
    hgf->add_option("--tol", hgf_tol)->capture_default_str();

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite)->check(CLI::IsMember(suite_names()))->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    const Format format = format_name == "json" ? Format::json : format_name == "csv" ? Format::csv : Format::text;
    try {
        if (*triangle) cmd_triangle(r, s, n_max, algorithm, format, out);
        else if (*bellcmd) cmd_bell(br, bs, bell_n, bell_nmax, format, out);
        else if (*normal) cmd_normal_order(expression, format, out);
        else if (*expect) cmd_expect(expression, z_text, format, out);
        else if (*egf) cmd_egf(diag, r1, egf_k, egf_order, format, out);
        else if (*hgf) cmd_hgf32(lambda, hgf_tol, format, out);
        else if (*verify) cmd_verify(suite, format, out);
    } catch (const VerificationFailed&) {
        return kExitVerificationFailed;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << "\n";
        return kExitResource;
    } catch (const ConsistencyError& e) {
        err << "verification failure: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    return kExitOk;
}

}  // namespace bosonorder::cli
