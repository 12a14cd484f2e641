#include "bosonorder/verify.hpp"

#include "bosonorder/bell.hpp"
#include "bosonorder/boson.hpp"
#include "bosonorder/errors.hpp"
#include "bosonorder/genfun.hpp"
#include "bosonorder/stirling.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace bosonorder {

const std::vector<ReferenceTriangle>& reference_triangles() {
    static const std::vector<ReferenceTriangle> tables = {
        {1, 1,
         {{1}, {1, 1}, {1, 3, 1}, {1, 7, 6, 1}, {1, 15, 25, 10, 1}, {1, 31, 90, 65, 15, 1}},
         {1, 2, 5, 15, 52, 203}},
        {2, 1,
         {{1}, {2, 1}, {6, 6, 1}, {24, 36, 12, 1}, {120, 240, 120, 20, 1}, {720, 1800, 1200, 300, 30, 1}},
         {1, 3, 13, 73, 501, 4051}},
        {2, 2,
         {{1},
          {2, 4, 1},
          {4, 32, 38, 12, 1},
          {8, 208, 652, 576, 188, 24, 1},
          {16, 1280, 9080, 16944, 12052, 3840, 580, 40, 1},
          {32, 7744, 116656, 412800, 540080, 322848, 98292, 16000, 1390, 60, 1}},
         {1, 7, 87, 1657, 43833, 1515903}},
        {3, 2,
         {{1},
          {6, 6, 1},
          {72, 168, 96, 18, 1},
          {1440, 5760, 6120, 2520, 456, 36, 1},
          {43200, 259200, 424800, 285120, 92520, 15600, 1380, 60, 1},
          {1814400, 15120000, 34776000, 33566400, 16304400, 4379760, 682200, 62400, 3270, 90, 1}},
         {1, 13, 355, 16333, 1121881, 106708921}},
    };
    return tables;
}

namespace {

std::string sig_label(unsigned r, unsigned s) { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

void add(std::vector<CheckResult>& out, std::string identity, std::string tag, bool passed, std::string detail = {}) {
    out.push_back({std::move(identity), std::move(tag), passed, std::move(detail)});
}

// Runs a check that may throw; a throw counts as a failure.
void guarded(std::vector<CheckResult>& out, const std::string& identity, const std::string& tag,
             const std::function<std::pair<bool, std::string>()>& body) {
    try {
        auto [ok, detail] = body();
        add(out, identity, tag, ok, std::move(detail));
    } catch (const std::exception& e) {
        add(out, identity, tag, false, std::string("exception: ") + e.what());
    }
}

std::pair<bool, std::string> relative(double value, double reference, double tol) {
    const double err = std::fabs(value - reference) / std::fabs(reference);
    std::ostringstream d;
    d.precision(17);
    d << "value " << value << ", reference " << reference << ", relative error " << err;
    return {err <= tol, d.str()};
}

void suite_table1(std::vector<CheckResult>& out) {
    for (const auto& t : reference_triangles()) {
        const OrderSignature sig(t.r, t.s);
        const StirlingTriangle tri = stirling_triangle(sig, 6);
        for (unsigned n = 1; n <= 6; ++n) {
            guarded(out, "S" + sig_label(t.r, t.s) + " row n=" + std::to_string(n), "reference-triangle", [&] {
                const auto& row = tri.row(n);
                bool ok = row.size() == t.rows[n - 1].size();
                for (std::size_t i = 0; ok && i < row.size(); ++i) ok = row[i] == ExactInt(static_cast<long>(t.rows[n - 1][i]));
                return std::make_pair(ok, std::string());
            });
            guarded(out, "B" + sig_label(t.r, t.s) + "(" + std::to_string(n) + ")", "reference-triangle", [&] {
                const ExactInt b = bell(sig, n);
                return std::make_pair(b == ExactInt(static_cast<long>(t.sums[n - 1])), to_string(b));
            });
        }
    }
}

void suite_oracle(std::vector<CheckResult>& out) {
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned s = 1; s <= 3; ++s) {
            const OrderSignature sig(r, s);
            for (unsigned n = 1; n <= 4; ++n) {
                const std::string suffix = sig_label(r, s) + " n=" + std::to_string(n);
                guarded(out, "rewrite [(ad)^r a^s]^n " + suffix, "rewrite-oracle", [&] {
                    return std::make_pair(normal_order_word(word_from_power(sig, n)) == normal_order_power(sig, n),
                                          std::string());
                });
                guarded(out, "rewrite [a^s (ad)^r]^n " + suffix, "rewrite-oracle", [&] {
                    return std::make_pair(normal_order_word(antinormal_word(sig, n)) == antinormal_power(sig, n),
                                          std::string());
                });
            }
        }
    }
}

void suite_dobinski(std::vector<CheckResult>& out) {
    for (unsigned r = 1; r <= 3; ++r) {
        for (unsigned s = 1; s <= r; ++s) {
            const OrderSignature sig(r, s);
            for (unsigned n = 1; n <= 5; ++n) {
                guarded(out, "Dobinski series " + sig_label(r, s) + " n=" + std::to_string(n), "dobinski-series", [&] {
                    const IdentityReport rep = dobinski_series_identity(sig, n, n * s + 8);
                    return std::make_pair(rep.holds, rep.detail);
                });
            }
            for (unsigned n = 1; n <= 6; ++n) {
                guarded(out, "Dobinski sum " + sig_label(r, s) + " n=" + std::to_string(n), "dobinski-numeric", [&] {
                    return relative(dobinski_bell_numeric(sig, n, 1e-12).value, bell(sig, n).get_d(), 1e-9);
                });
                if (r > s)
                    guarded(out, "gamma form " + sig_label(r, s) + " n=" + std::to_string(n), "dobinski-gamma", [&] {
                        return relative(gamma_form_bell_numeric(sig, n, 1e-12).value, bell(sig, n).get_d(), 1e-8);
                    });
            }
        }
    }
}

void suite_genfun(std::vector<CheckResult>& out) {
    for (unsigned r = 1; r <= 2; ++r) {
        for (long k = r; k <= 6; ++k) {
            guarded(out, "diagonal egf r=" + std::to_string(r) + " k=" + std::to_string(k), "egf-diagonal", [&] {
                const auto scaled = egf_diag(r, k, 8).scaled();
                bool ok = true;
                for (unsigned n = 0; n <= 8; ++n) ok = ok && scaled[n] == stirling(OrderSignature(r, r), n, k);
                return std::make_pair(ok, std::string());
            });
        }
    }
    for (unsigned r = 2; r <= 3; ++r) {
        for (long k = 1; k <= 4; ++k) {
            guarded(out, "(r,1) egf r=" + std::to_string(r) + " k=" + std::to_string(k), "egf-r1", [&] {
                const auto scaled = egf_r1(r, k, 8).scaled();
                bool ok = true;
                for (unsigned n = 0; n <= 8; ++n) ok = ok && scaled[n] == stirling(OrderSignature(r, 1), n, k);
                return std::make_pair(ok, std::string());
            });
        }
    }
    for (double lambda : {-0.5, -0.25, 0.0, 0.25, 0.5}) {
        guarded(out, "coherent double sum vs exp(e^l - 1), l=" + std::to_string(lambda), "egf-classical", [&] {
            return relative(egf_bell_diag_numeric(1, lambda, 1e-13).value, egf_classical_numeric(lambda).value, 1e-9);
        });
    }
    guarded(out, "coherent double sum vs Bell egf, r=2 l=0.05", "egf-diagonal-bell", [&] {
        return relative(egf_bell_diag_numeric(2, 0.05, 1e-10).value, bell_egf_partial_sum(2, 2, 0.05, 20), 1e-8);
    });
    for (unsigned n = 1; n <= 8; ++n) {
        guarded(out, "Laguerre form n=" + std::to_string(n), "hypergeometric", [&] {
            const LaguerreBellCheck c = laguerre_bell_check(n);
            return std::make_pair(c.laguerre_matches && c.kummer_matches, to_string(c.laguerre));
        });
    }
    for (unsigned r = 1; r <= 2; ++r)
        for (unsigned n = 1; n <= 4; ++n)
            guarded(out, "Kummer form r=" + std::to_string(r) + " n=" + std::to_string(n), "hypergeometric", [&] {
                return relative(kummer_bell_check(r, n, 1e-12).value, bell(OrderSignature(2 * r, r), n).get_d(), 1e-8);
            });
    for (unsigned n = 1; n <= 4; ++n)
        guarded(out, "1F2 pair for B(3,1) n=" + std::to_string(n), "hypergeometric", [&] {
            return relative(b31_check(n, 1e-12).value, bell(OrderSignature(3, 1), n).get_d(), 1e-6);
        });
    for (double lambda : {0.1, 0.25}) {
        guarded(out, "hgf of B(3,2) dual evaluation l=" + std::to_string(lambda), "hypergeometric-gf", [&] {
            const Hgf32Readings h = hgf_32(lambda, 1e-10);
            return relative(h.series.value.value, h.bell_sum_dobinski.value, 1e-6);
        });
    }
}

void suite_identities(std::vector<CheckResult>& out) {
    for (unsigned r = 1; r <= 4; ++r) {
        for (unsigned s = 1; s <= r; ++s) {
            const OrderSignature sig(r, s);
            guarded(out, "finite sum = operator form " + sig_label(r, s), "algorithms", [&] {
                return std::make_pair(stirling_triangle(sig, 6, StirlingAlgorithm::finite_sum) ==
                                          stirling_triangle(sig, 6, StirlingAlgorithm::operator_form),
                                      std::string());
            });
            guarded(out, "symmetry and shift " + sig_label(r, s), "symmetry", [&] {
                const OrderSignature flipped(s, r);
                bool ok = true;
                for (unsigned n = 1; n <= 6 && ok; ++n) {
                    for (long k = 0; k <= static_cast<long>((n + 1) * s) && ok; ++k) {
                        ok = stirling(sig, n, k) == stirling(flipped, n, k) &&
                             anti_stirling(sig, n, k) == stirling(sig, n + 1, k + s) &&
                             anti_stirling(sig, n, k) == anti_stirling(flipped, n, k);
                    }
                    ok = ok && anti_bell(sig, n) == bell(sig, n + 1);
                }
                return std::make_pair(ok, std::string());
            });
        }
    }
    for (unsigned r = 1; r <= 3; ++r) {
        guarded(out, "diagonal recurrence = diagonal sum = finite sum r=" + std::to_string(r), "algorithms", [&] {
            const OrderSignature sig(r, r);
            const auto a = stirling_diag_recurrence(r, 6);
            return std::make_pair(a == stirling_triangle(sig, 6, StirlingAlgorithm::diagonal_sum) &&
                                      a == stirling_triangle(sig, 6, StirlingAlgorithm::finite_sum),
                                  std::string());
        });
        for (unsigned s = 1; s <= r; ++s)
            for (unsigned n = 1; n <= 5; ++n)
                guarded(out, "falling-factorial connection " + sig_label(r, s) + " n=" + std::to_string(n),
                        "connection", [&] {
                            const IdentityReport rep = connection_identity_check(OrderSignature(r, s), n);
                            return std::make_pair(rep.holds, rep.detail);
                        });
    }
    guarded(out, "classical alternating sum n<=10", "classical", [&] {
        bool ok = true;
        for (unsigned n = 1; n <= 10; ++n)
            for (long k = 0; k <= static_cast<long>(n); ++k)
                ok = ok && stirling(OrderSignature(1, 1), n, k) == stirling_classical(n, k);
        return std::make_pair(ok, std::string());
    });
    guarded(out, "Lah numbers n<=20", "lah", [&] {
        bool ok = true;
        for (unsigned n = 1; n <= 20; ++n)
            for (unsigned k = 1; k <= n; ++k) ok = ok && lah(n, k) == stirling(OrderSignature(2, 1), n, k);
        return std::make_pair(ok, std::string());
    });
    guarded(out, "B(2,2) from classical Bell numbers n<=12", "bell-binomial", [&] {
        bool ok = true;
        for (unsigned n = 1; n <= 12; ++n) ok = ok && bell22_from_classical(n) == bell(OrderSignature(2, 2), n);
        return std::make_pair(ok, std::string());
    });
    guarded(out, "coherent expectation at z=1 equals B(r,s)(n)", "coherent", [&] {
        bool ok = true;
        for (unsigned r = 1; r <= 3; ++r)
            for (unsigned s = 1; s <= 3; ++s)
                for (unsigned n = 1; n <= 5; ++n) {
                    const OrderSignature sig(r, s);
                    ok = ok && coherent_expectation(normal_order_power(sig, n), ExactRat(1)) == ExactRat(bell(sig, n));
                }
        return std::make_pair(ok, std::string());
    });
}

}  // namespace

std::vector<std::string> suite_names() { return {"table1", "dobinski", "genfun", "oracle", "identities", "all"}; }

std::vector<CheckResult> run_suite(std::string_view name) {
    std::vector<CheckResult> out;
    const bool all = name == "all";
    bool known = all;
    if (all || name == "table1") known = true, suite_table1(out);
    if (all || name == "oracle") known = true, suite_oracle(out);
    if (all || name == "dobinski") known = true, suite_dobinski(out);
    if (all || name == "genfun") known = true, suite_genfun(out);
    if (all || name == "identities") known = true, suite_identities(out);
    if (!known) throw std::invalid_argument("unknown verification suite '" + std::string(name) + "'");
    return out;
}

}  // namespace bosonorder
