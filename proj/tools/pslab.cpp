#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pslab/lab/emit.hpp"
#include "pslab/lab/experiments.hpp"
#include "pslab/pslab.hpp"

using json = nlohmann::ordered_json;
using namespace pslab;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    if (out.empty()) throw UsageError("empty list: '" + text + "'");
    return out;
}

std::vector<std::uint64_t> parse_ns(const std::string& text) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_list(text)) {
        if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 19)
            throw UsageError("not a decimal integer: '" + item + "'");
        out.push_back(std::stoull(item));
    }
    return out;
}

unsigned resolve_jobs(unsigned requested) {
    if (const char* env = std::getenv("PSLAB_JOBS")) {
        const std::string s(env);
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos || s.size() > 6 || std::stoul(s) == 0)
            throw UsageError("PSLAB_JOBS must be a positive integer");
        return static_cast<unsigned>(std::stoul(s));
    }
    return requested == 0 ? default_jobs() : requested;
}

json record_json(const CountRecord& r, const char* parameter_name) {
    json j;
    j[parameter_name] = r.parameter;
    j["alpha1"] = r.alpha1.to_string();
    j["alpha2"] = r.alpha2.to_string();
    j["count"] = r.count;
    j["leading"] = r.leading;
    j["ratio"] = r.ratio;
    return j;
}

json report_json(const BoundReport& r) {
    json j;
    j["sum_abs"] = r.sum_abs;
    j["bound"] = r.bound;
    j["ratio"] = r.ratio;
    j["params"] = json(r.params);
    return j;
}

json rep_json(const Representation& r) {
    return {{"n1", r.n1}, {"n2", r.n2}, {"verified", r.verified}, {"via_lemma", r.via_lemma}};
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

struct FigureOptions {
    std::string panel = "left";
    std::string alphas;
    std::string ns;
    std::string out;
    std::string svg;
    unsigned jobs = 0;
    bool strict_upper = false;
};

void add_figure_options(CLI::App* cmd, FigureOptions& o) {
    cmd->add_option("--panel", o.panel, "left or right")->check(CLI::IsMember({"left", "right"}));
    cmd->add_option("--alphas", o.alphas, "comma-separated decimal exponents (default: the panel grid)");
    cmd->add_option("--ns", o.ns, "comma-separated N values (default: the panel grid)");
    cmd->add_option("--out", o.out, "CSV output path (default: stdout)");
    cmd->add_option("--svg", o.svg, "optional SVG scatter output path");
    cmd->add_option("--jobs", o.jobs, "worker threads (default: available parallelism)");
    cmd->add_flag("--strict-upper", o.strict_upper, "count n < N instead of n <= N");
}

void emit_rows(const std::vector<lab::ExperimentRow>& rows, const FigureOptions& o, const std::string& title) {
    if (o.out.empty())
        std::cout << lab::to_csv(rows);
    else
        lab::emit_csv(rows, o.out);
    if (!o.svg.empty()) lab::emit_svg(rows, o.svg, title);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pslab: additive problems over floor-power sequences"};
    app.require_subcommand(1);

    std::string alpha1 = "1.5", alpha2, alpha = "1.5";
    std::uint64_t N = 0, x = 0;
    bool strict_upper = false;

    auto* count = app.add_subcommand("count", "R(N): representations N = [n1^a1] + [n2^a2]");
    count->add_option("--N", N, "target integer")->required();
    count->add_option("--alpha1", alpha1, "first exponent (decimal)")->required();
    count->add_option("--alpha2", alpha2, "second exponent (default: alpha1)");
    bool brute = false;
    count->add_flag("--brute", brute, "also run the pairwise oracle");

    auto add_triple = [&](const char* name, const char* help, bool has_strict) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("--x", x, "upper bound")->required();
        c->add_option("--alpha", alpha, "exponent (decimal)")->required();
        if (has_strict) c->add_flag("--strict-upper", strict_upper, "count n < x instead of n <= x");
        return c;
    };
    auto* count3 = add_triple("count3", "triples [l]+[m]=[n] with n <= x", true);
    auto* count12 = add_triple("count12", "triples [l]+[m]=[n] with l, m <= x", false);
    auto* count_ap = add_triple("count-ap", "progressions [l]+[n]=2[m] with l < m < n <= x", true);

    auto* constants = app.add_subcommand("constants", "closed-form constants at alpha");
    constants->add_option("--alpha", alpha, "exponent (decimal)")->required();
    constants->add_option("--alpha2", alpha2, "second exponent for the two-exponent constant (default: alpha)");

    std::string kind = "n3";
    auto* conjecture = app.add_subcommand("conjecture", "predicted limit of count / x^(3-alpha)");
    conjecture->add_option("--kind", kind, "n12, n3 or ap")->check(CLI::IsMember({"n12", "n3", "ap"}));
    conjecture->add_option("--alpha", alpha, "exponent (decimal)")->required();

    bool all_reps = false;
    auto* find_rep = app.add_subcommand("find-rep", "find (n1, n2) with [n1^a1] + [n2^a2] = N");
    find_rep->add_option("--N", N, "target integer")->required();
    find_rep->add_option("--alpha1", alpha1, "first exponent (decimal)")->required();
    find_rep->add_option("--alpha2", alpha2, "second exponent (default: alpha1)");
    find_rep->add_flag("--all", all_reps, "list every representation");

    std::string checker = "vdc", family = "model";
    long h1 = 1, h2 = 1;
    double scale = 0.0, y = 1.0, s = 0.5, a = 0.0, b = 0.0, pair_k = 0.5, pair_l = 0.5;
    bool grid = false;
    auto* expsum = app.add_subcommand("expsum-check", "compare an exponential sum with a classical bound");
    expsum->add_flag("--grid", grid, "run the built-in parameter grid");
    expsum->add_option("--checker", checker, "kl, vdc, third or pair")
        ->check(CLI::IsMember({"kl", "vdc", "third", "pair"}));
    expsum->add_option("--family", family, "sum, inverse or model")
        ->check(CLI::IsMember({"sum", "inverse", "model"}));
    expsum->add_option("--h1", h1);
    expsum->add_option("--h2", h2);
    expsum->add_option("--alpha1", alpha1);
    expsum->add_option("--alpha2", alpha2);
    expsum->add_option("--scale", scale, "N (sum family) or X (inverse family)");
    expsum->add_option("--y", y);
    expsum->add_option("--s", s);
    expsum->add_option("--a", a, "interval start");
    expsum->add_option("--b", b, "interval end");
    expsum->add_option("--N", scale, "dyadic scale for exponent pairs");
    expsum->add_option("--pair-k", pair_k);
    expsum->add_option("--pair-l", pair_l);

    double x1 = 0.0, x2 = 0.0;
    auto* params = app.add_subcommand("params-witness", "feasible (beta1, beta2, gamma_hat0) with slacks");
    params->add_option("--x1", x1, "1/alpha1")->required();
    params->add_option("--x2", x2, "1/alpha2")->required();

    FigureOptions fig1, fig2;
    auto* figure1 = app.add_subcommand("figure1", "normalized triple counts near alpha = 2");
    add_figure_options(figure1, fig1);
    auto* figure2 = app.add_subcommand("figure2", "normalized 3-AP counts");
    add_figure_options(figure2, fig2);

    std::string probe_xs, probe_out;
    unsigned probe_jobs = 0;
    auto* probe = app.add_subcommand("pythagoras-probe", "alpha = 2 counts against x log x main terms");
    probe->add_option("--xs", probe_xs, "comma-separated x values");
    probe->add_option("--out", probe_out, "CSV output path (default: stdout)");
    probe->add_option("--jobs", probe_jobs, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (count->parsed()) {
            const auto e1 = parse_alpha(alpha1);
            const auto e2 = alpha2.empty() ? e1 : parse_alpha(alpha2);
            auto j = record_json(count_R(N, e1, e2), "N");
            if (brute) j["bruteforce"] = count_R_bruteforce(N, e1, e2);
            print(j);
        } else if (count3->parsed()) {
            print(record_json(count_N3(x, parse_alpha(alpha), strict_upper), "x"));
        } else if (count12->parsed()) {
            print(record_json(count_N12(x, parse_alpha(alpha)), "x"));
        } else if (count_ap->parsed()) {
            print(record_json(count_NAP(x, parse_alpha(alpha), strict_upper), "x"));
        } else if (constants->parsed()) {
            const auto e = parse_alpha(alpha);
            const auto e2 = alpha2.empty() ? e : parse_alpha(alpha2);
            json arr = json::array();
            for (const auto& c : constants_for(e.value(), e2.value()))
                arr.push_back({{"formula", c.formula_id}, {"alpha1", c.alpha1}, {"alpha2", c.alpha2}, {"value", c.value}});
            print(arr);
        } else if (conjecture->parsed()) {
            const auto e = parse_alpha(alpha);
            const auto k = kind == "n12" ? ConjectureKind::N12 : kind == "n3" ? ConjectureKind::N3 : ConjectureKind::AP;
            print({{"kind", kind}, {"alpha", e.to_string()}, {"rhs", conjecture_rhs(k, e.value())}});
        } else if (find_rep->parsed()) {
            const auto e1 = parse_alpha(alpha1);
            const auto e2 = alpha2.empty() ? e1 : parse_alpha(alpha2);
            json j{{"N", N}, {"alpha1", e1.to_string()}, {"alpha2", e2.to_string()}};
            if (all_reps) {
                json arr = json::array();
                for (const auto& r : enumerate_representations(N, e1, e2)) arr.push_back(rep_json(r));
                j["representations"] = arr;
                print(j);
                return 0;
            }
            const auto rep = find_representation(N, e1, e2);
            j["found"] = rep.has_value();
            if (rep) j["representation"] = rep_json(*rep);
            print(j);
            return rep ? 0 : kExitDomain;
        } else if (expsum->parsed()) {
            if (grid) {
                json arr = json::array();
                double worst = 0.0;
                std::size_t skipped = 0;
                for (const auto& g : run_bound_grid()) {
                    json item{{"checker", g.checker}, {"instance", g.label}};
                    if (g.skipped) {
                        ++skipped;
                        item["skipped"] = g.reason;
                    } else {
                        item["report"] = report_json(g.report);
                        worst = std::max(worst, g.report.ratio);
                    }
                    arr.push_back(item);
                }
                print({{"checks", arr}, {"skipped", skipped}, {"max_ratio", worst}});
                return 0;
            }
            if (checker == "pair") {
                print(report_json(check_exponent_pair({pair_k, pair_l}, y, s, a, b, scale)));
                return 0;
            }
            PhaseSpec phase;
            if (family == "model") {
                phase = PhaseSpec::model(y, s);
            } else {
                const auto e1 = parse_alpha(alpha1);
                const auto e2 = alpha2.empty() ? e1 : parse_alpha(alpha2);
                phase = family == "sum" ? PhaseSpec::section_three(h1, h2, e1, e2, scale)
                                        : PhaseSpec::appendix(h1, h2, e1, e2, scale);
            }
            BoundReport r;
            if (checker == "kl")
                r = check_kusmin_landau(phase, a, b);
            else if (checker == "vdc")
                r = check_van_der_corput(phase, a, b);
            else
                r = check_third_derivative(phase, a, b);
            print(report_json(r));
        } else if (params->parsed()) {
            const auto w = build_param_witness(x1, x2);
            json slacks = json::array();
            for (const auto& sl : w.slacks) slacks.push_back({{"name", sl.name}, {"slack", sl.value}});
            print({{"x1", w.x1},
                   {"x2", w.x2},
                   {"X1", w.X1},
                   {"X2", w.X2},
                   {"beta1", w.beta1},
                   {"beta2", w.beta2},
                   {"gamma_hat0", w.gamma_hat0},
                   {"slacks", slacks}});
        } else if (figure1->parsed()) {
            const bool left = fig1.panel == "left";
            const auto alphas = fig1.alphas.empty() ? lab::figure1_alphas() : split_list(fig1.alphas);
            const auto ns = fig1.ns.empty() ? lab::figure1_ns() : parse_ns(fig1.ns);
            for (const auto& t : alphas) parse_alpha(t);
            const auto rows = lab::figure1(left ? lab::Panel::Left : lab::Panel::Right, alphas, ns,
                                           resolve_jobs(fig1.jobs), fig1.strict_upper);
            emit_rows(rows, fig1, left ? "l, m <= N" : "n <= N");
        } else if (figure2->parsed()) {
            const bool left = fig2.panel == "left";
            auto alphas = left ? lab::figure2_left_alphas() : lab::figure2_right_alphas();
            auto ns = left ? lab::figure2_left_ns() : lab::figure2_right_ns();
            if (!fig2.alphas.empty()) alphas = split_list(fig2.alphas);
            if (!fig2.ns.empty()) ns = parse_ns(fig2.ns);
            for (const auto& t : alphas) parse_alpha(t);
            emit_rows(lab::figure2(alphas, ns, resolve_jobs(fig2.jobs), fig2.strict_upper), fig2,
                      "3-term progressions");
        } else if (probe->parsed()) {
            const auto xs = probe_xs.empty() ? lab::probe_xs() : parse_ns(probe_xs);
            const auto rows = lab::pythagoras_probe(xs, resolve_jobs(probe_jobs));
            if (probe_out.empty())
                std::cout << lab::to_csv(rows);
            else
                lab::emit_csv(rows, probe_out);
        }
    } catch (const MalformedDecimal& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return 0;
}
