#include "cyclo/cli.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "cyclo/cyclotomy.hpp"
#include "cyclo/hilbert.hpp"
#include "cyclo/intpoly.hpp"
#include "cyclo/numsgp.hpp"
#include "cyclo/survey.hpp"

namespace cyclo::cli {

namespace {

using nlohmann::ordered_json;

ordered_json json_int(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();  // decimal string once past 64 bits
}

ordered_json json_ints(const std::vector<Int>& values) {
    ordered_json arr = ordered_json::array();
    for (const Int& v : values) arr.push_back(json_int(v));
    return arr;
}

ordered_json json_poly(const IntPoly& p) { return json_ints(p.coeffs()); }

ordered_json json_factors(const std::vector<std::pair<long, long>>& factors) {
    ordered_json arr = ordered_json::array();
    for (const auto& [n, mult] : factors) arr.push_back(ordered_json::array({n, mult}));
    return arr;
}

std::string factors_text(const std::vector<std::pair<long, long>>& factors) {
    if (factors.empty()) return "(none)";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " * ";
        os << "Phi_" << factors[i].first;
        if (factors[i].second > 1) os << "^" << factors[i].second;
    }
    return os.str();
}

ordered_json witness_to_json(const CIWitness::NodePtr& node) {
    ordered_json j;
    j["gens"] = node->gens;
    if (!node->is_leaf()) {
        j["mu"] = node->mu;
        j["lambda"] = node->lambda;
        j["left"] = witness_to_json(node->left);
        j["right"] = witness_to_json(node->right);
    }
    return j;
}

std::vector<std::pair<long, long>> parse_pair_list(const std::string& text) {
    std::vector<std::pair<long, long>> out;
    std::size_t pos = 0;
    auto read_number = [&]() -> long {
        std::size_t start = pos;
        std::size_t digits = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            ++digits;
        }
        if (digits == 0 || digits > 9) throw ParseError("expected a number", start);
        return std::stol(text.substr(start, digits));
    };
    while (true) {
        long a = read_number();
        if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':'", pos);
        ++pos;
        long b = read_number();
        out.emplace_back(a, b);
        if (pos == text.size()) break;
        if (text[pos] != ',') throw ParseError("expected ','", pos);
        ++pos;
    }
    return out;
}

struct Options {
    bool json = false;
    CommandResult result;
};

void add_poly_commands(CLI::App& app, Options& opt) {
    auto* poly = app.add_subcommand("poly", "polynomial and cyclotomic operations");
    poly->require_subcommand(1);
    poly->fallthrough();

    {
        auto* cmd = poly->add_subcommand("cyclotomic", "print the n-th cyclotomic polynomial");
        cmd->fallthrough();
        auto n = std::make_shared<long>(0);
        cmd->add_option("n", *n, "index")->required()->check(CLI::PositiveNumber);
        cmd->callback([&opt, n]() {
            IntPoly phi = cyclotomic(*n);
            opt.result.payload = {{"n", *n},
                                  {"degree", phi.degree()},
                                  {"coeffs", json_poly(phi)},
                                  {"pretty", pretty(phi)}};
            opt.result.text = pretty(phi) + "\n";
        });
    }

    auto add_kronecker = [&opt](CLI::App* cmd, bool factor_view) {
        cmd->fallthrough();
        auto coeffs = std::make_shared<std::string>();
        cmd->add_option("--coeffs", *coeffs, "comma-separated coefficients, low degree first")
            ->required();
        cmd->callback([&opt, coeffs, factor_view]() {
            IntPoly f = parse_coeff_list(*coeffs);
            CyclotomicFactorization fact = kronecker_factor(f);
            opt.result.payload = {{"kronecker", fact.is_kronecker()},
                                  {"factors", json_factors(fact.factors)},
                                  {"remainder", json_poly(fact.remainder)},
                                  {"unit_sign", fact.unit_sign}};
            std::ostringstream os;
            os << "kronecker: " << (fact.is_kronecker() ? "true" : "false") << "\n";
            if (factor_view || !fact.factors.empty())
                os << "factors: " << factors_text(fact.factors) << "\n";
            if (!fact.remainder.is_one() || fact.unit_sign != 1)
                os << "remainder: " << (fact.unit_sign < 0 ? "-" : "")
                   << "(" << pretty(fact.remainder) << ")\n";
            opt.result.text = os.str();
            if (fact.has_phi1())
                opt.result.diagnostics.push_back(
                    "factorization contains Phi_1 = x - 1; the polynomial vanishes at 1");
        });
    };
    add_kronecker(poly->add_subcommand("is-kronecker", "test for roots on the unit circle"),
                  false);
    add_kronecker(poly->add_subcommand("factor", "extract all cyclotomic factors"), true);

    {
        auto* cmd = poly->add_subcommand("exponents", "cyclotomic exponent sequence");
        cmd->fallthrough();
        auto coeffs = std::make_shared<std::string>();
        auto bound = std::make_shared<long>(0);
        cmd->add_option("--coeffs", *coeffs, "comma-separated coefficients")->required();
        cmd->add_option("--bound", *bound, "truncation order (default 2 deg^2)");
        cmd->callback([&opt, coeffs, bound]() {
            IntPoly f = parse_coeff_list(*coeffs);
            long b = *bound > 0 ? *bound : std::max(1L, 2 * f.degree() * f.degree());
            ExponentSequence seq = exponent_sequence(f, b);
            opt.result.payload = {{"bound", seq.bound},
                                  {"exponents", json_ints(seq.values)},
                                  {"residual_is_trivial", seq.residual_is_trivial}};
            std::ostringstream os;
            os << "e_1..e_" << seq.bound << ":";
            for (const Int& e : seq.values) os << " " << e.str();
            os << "\n";
            opt.result.text = os.str();
        });
    }
}

void add_sgp_commands(CLI::App& app, Options& opt) {
    auto* sgp = app.add_subcommand("sgp", "numerical semigroup operations");
    sgp->require_subcommand(1);
    sgp->fallthrough();

    auto add_with_gens = [&](const std::string& name, const std::string& desc, auto handler) {
        auto* cmd = sgp->add_subcommand(name, desc);
        cmd->fallthrough();
        auto gens = std::make_shared<std::string>();
        cmd->add_option("generators", *gens, "comma-separated generators, e.g. 4,6,9")
            ->required();
        cmd->callback([&opt, gens, handler]() {
            handler(NumericalSemigroup::from_generators(parse_generator_list(*gens)), opt);
        });
    };

    add_with_gens("info", "invariants of the semigroup", [](const NumericalSemigroup& s,
                                                            Options& o) {
        o.result.payload = {{"min_gens", s.min_gens()},   {"multiplicity", s.multiplicity()},
                            {"frobenius", s.frobenius()}, {"genus", s.genus()},
                            {"gaps", s.gaps()},           {"symmetric", s.is_symmetric()}};
        std::ostringstream os;
        os << "min_gens:";
        for (long g : s.min_gens()) os << " " << g;
        os << "\nmultiplicity: " << s.multiplicity() << "\nfrobenius: " << s.frobenius()
           << "\ngenus: " << s.genus() << "\ngaps:";
        for (long g : s.gaps()) os << " " << g;
        os << "\nsymmetric: " << (s.is_symmetric() ? "true" : "false") << "\n";
        o.result.text = os.str();
    });

    add_with_gens("poly", "semigroup polynomial P_S", [](const NumericalSemigroup& s, Options& o) {
        IntPoly p = s.semigroup_polynomial();
        o.result.payload = {{"min_gens", s.min_gens()},
                            {"coeffs", json_poly(p)},
                            {"pretty", pretty(p)}};
        o.result.text = pretty(p) + "\n";
    });

    add_with_gens("is-ci", "complete intersection decision with gluing witness",
                  [](const NumericalSemigroup& s, Options& o) {
                      auto witness = is_complete_intersection(s);
                      o.result.payload["ci"] = witness.has_value();
                      if (witness) {
                          o.result.payload["witness"] = witness_to_json(witness->root);
                          o.result.payload["relation_degrees"] = witness->relation_degrees();
                          std::ostringstream os;
                          os << "complete intersection: true\nrelation degrees:";
                          for (long m : witness->relation_degrees()) os << " " << m;
                          os << "\n";
                          o.result.text = os.str();
                      } else {
                          o.result.text = "complete intersection: false\n";
                      }
                  });

    add_with_gens("is-cyclotomic", "Kronecker test on the semigroup polynomial",
                  [](const NumericalSemigroup& s, Options& o) {
                      CyclotomicFactorization fact = kronecker_factor(s.semigroup_polynomial());
                      o.result.payload = {{"cyclotomic", fact.is_kronecker()},
                                          {"factors", json_factors(fact.factors)},
                                          {"remainder", json_poly(fact.remainder)}};
                      std::ostringstream os;
                      os << "cyclotomic: " << (fact.is_kronecker() ? "true" : "false") << "\n";
                      if (!fact.factors.empty())
                          os << "factors: " << factors_text(fact.factors) << "\n";
                      if (!fact.remainder.is_one())
                          os << "remainder: " << pretty(fact.remainder) << "\n";
                      o.result.text = os.str();
                  });
}

void add_hilbert_commands(CLI::App& app, Options& opt) {
    auto* hil = app.add_subcommand("hilbert", "Hilbert series and deviation operations");
    hil->require_subcommand(1);
    hil->fallthrough();

    {
        auto* cmd = hil->add_subcommand("ci", "Hilbert series of a graded complete intersection");
        cmd->fallthrough();
        auto vars = std::make_shared<std::string>();
        auto rels = std::make_shared<std::string>("");
        cmd->add_option("--vars", *vars, "variable degrees, e.g. 2,3")->required();
        cmd->add_option("--rels", *rels, "relation degrees, e.g. 6");
        cmd->callback([&opt, vars, rels]() {
            std::vector<long> rel_degrees;
            if (!rels->empty()) rel_degrees = parse_generator_list(*rels);
            HilbertSeries series = ci_series(parse_generator_list(*vars), rel_degrees);
            HilbertSeries reduced = series.reduce();
            opt.result.payload = {
                {"numerator", json_poly(series.numerator())},
                {"den_orders", series.den_orders()},
                {"reduced",
                 {{"numerator", json_poly(reduced.numerator())},
                  {"den_orders", reduced.den_orders()},
                  {"fully_reduced", reduced.reduced()}}},
                {"dimension", reduced.krull_dimension()}};
            std::ostringstream os;
            os << "reduced numerator: " << pretty(reduced.numerator()) << "\ndenominator:";
            for (long d : reduced.den_orders()) os << " (1 - x^" << d << ")";
            os << "\ndimension: " << reduced.krull_dimension() << "\n";
            opt.result.text = os.str();
        });
    }

    {
        auto* cmd = hil->add_subcommand("deviations", "Koszul deviations from an h-polynomial");
        cmd->fallthrough();
        auto h = std::make_shared<std::string>();
        auto dim = std::make_shared<long>(0);
        auto bound = std::make_shared<long>(20);
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--h", *h, "h-polynomial coefficients")->required();
        cmd->add_option("--dim", *dim, "Krull dimension")->required();
        cmd->add_option("--bound", *bound, "how many deviations to report");
        cmd->callback([&opt, h, dim, bound]() {
            DeviationSequence dev = koszul_deviations(parse_coeff_list(*h), *dim, *bound);
            opt.result.payload = {{"dim", *dim},
                                  {"bound", dev.bound},
                                  {"deviations", json_ints(dev.values)}};
            std::ostringstream os;
            os << "epsilon_1..epsilon_" << dev.bound << ":";
            for (const Int& e : dev.values) os << " " << e.str();
            os << "\n";
            opt.result.text = os.str();
            opt.result.diagnostics.push_back(
                "Koszulness of the algebra is assumed, not verified");
        });
    }

    {
        auto* cmd = hil->add_subcommand("h2f", "h-vector to f-vector transform");
        cmd->fallthrough();
        auto h = std::make_shared<std::string>();
        auto dim = std::make_shared<long>(0);
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--h", *h, "h-vector entries")->required();
        cmd->add_option("--dim", *dim, "simplicial dimension D")->required();
        cmd->callback([&opt, h, dim]() {
            HVector hv = parse_coeff_list(*h).coeffs();
            if (hv.empty()) hv.push_back(0);
            FVector f = h_to_f(hv, *dim);
            opt.result.payload = {{"dim", *dim}, {"f", json_ints(f)}};
            std::ostringstream os;
            os << "f_-1..f_" << *dim - 1 << ":";
            for (const Int& v : f) os << " " << v.str();
            os << "\n";
            opt.result.text = os.str();
        });
    }

    {
        auto* cmd = hil->add_subcommand("detect", "match h against a cyclotomic polynomial");
        cmd->fallthrough();
        auto h = std::make_shared<std::string>();
        cmd->set_help_flag("--help", "print help");
        cmd->add_option("--h", *h, "h-polynomial coefficients")->required();
        cmd->callback([&opt, h]() {
            auto hit = detect_irreducible_cyclotomic_h(parse_coeff_list(*h));
            if (!hit) {
                opt.result.payload = {{"match", false}};
                opt.result.text = "not a cyclotomic polynomial\n";
                return;
            }
            bool admissible = hit->second == CyclotomicHVerdict::AdmissibleHypersurface;
            opt.result.payload = {
                {"match", true},
                {"m", hit->first},
                {"verdict", admissible ? "admissible-hypersurface" : "inadmissible"}};
            std::ostringstream os;
            os << "h = Phi_" << hit->first << ": "
               << (admissible ? "admissible-hypersurface" : "inadmissible") << "\n";
            opt.result.text = os.str();
            if (!admissible) {
                opt.result.status = CommandResult::Status::Violation;
                opt.result.diagnostics.push_back(
                    "no standard graded algebra has this h-polynomial");
            }
        });
    }

    {
        auto* cmd = hil->add_subcommand("plane-monoid",
                                        "Hilbert function of a plane monoid algebra");
        cmd->fallthrough();
        auto gens = std::make_shared<std::string>();
        auto bound = std::make_shared<long>(12);
        cmd->add_option("--gens", *gens, "generators a:b,... sharing one coordinate sum")
            ->required();
        cmd->add_option("--bound", *bound, "truncation order");
        cmd->callback([&opt, gens, bound]() {
            auto pairs = parse_pair_list(*gens);
            PlaneMonoidResult res = plane_monoid_hilbert(pairs, *bound);
            ordered_json jgens = ordered_json::array();
            for (const auto& [a, b] : pairs) jgens.push_back(ordered_json::array({a, b}));
            opt.result.payload = {{"generators", jgens},
                                  {"bound", *bound},
                                  {"values", res.values},
                                  {"h_coeffs", json_poly(res.h)},
                                  {"h_pretty", pretty(res.h)}};
            std::ostringstream os;
            os << "values:";
            for (long v : res.values) os << " " << v;
            os << "\nh-polynomial: " << pretty(res.h) << "\n";
            opt.result.text = os.str();
        });
    }
}

void add_survey_command(CLI::App& app, Options& opt) {
    auto* cmd = app.add_subcommand("survey",
                                   "classify all semigroups up to a Frobenius bound");
    cmd->fallthrough();
    auto cfg = std::make_shared<SurveyConfig>();
    cmd->add_option("--max-frobenius", cfg->max_frobenius, "Frobenius bound")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--workers", cfg->workers, "worker threads")
        ->envname("CYCLO_WORKERS")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", cfg->out_path, "output directory for records.jsonl and summary.json");
    cmd->add_option("--checkpoint-every", cfg->checkpoint_every,
                    "write a checkpoint every N visited nodes (0 disables)");
    cmd->add_flag("--no-symmetric-prefilter{false}", cfg->symmetric_prefilter,
                  "run the Kronecker test on every semigroup, not only symmetric ones");
    cmd->add_flag("--emit-all", cfg->emit_all, "persist records for every semigroup");
    cmd->add_flag("--resume", cfg->resume, "continue from the checkpoint in the output directory");
    cmd->callback([&opt, cfg]() {
        SurveyReport report = run_survey(*cfg);
        opt.result.payload = summary_to_json(report);
        std::ostringstream os;
        os << "semigroups: " << report.totals.semigroups
           << "\nsymmetric: " << report.totals.symmetric
           << "\ncyclotomic: " << report.totals.cyclotomic << "\nci: " << report.totals.ci
           << "\ncounterexamples: " << report.counterexamples.size() << "\n";
        opt.result.text = os.str();
        if (!report.counterexamples.empty()) {
            opt.result.status = CommandResult::Status::Violation;
            for (const auto& r : report.counterexamples) {
                std::ostringstream d;
                d << "counterexample: cyclotomic non complete intersection, min_gens =";
                for (long g : r.min_gens) d << " " << g;
                opt.result.diagnostics.push_back(d.str());
            }
            if (!cfg->out_path.empty())
                opt.result.diagnostics.push_back("records: " + cfg->out_path + "/records.jsonl");
        }
    });
}

}  // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact computations around numerical semigroups, Kronecker polynomials,\n"
                 "Hilbert series and complete intersections"};
    app.name("cyclo");
    app.require_subcommand(1);
    app.set_version_flag("--version", "cyclo 1.0.0");
    app.add_flag("--json", opt.json, "machine-readable output");

    add_poly_commands(app, opt);
    add_sgp_commands(app, opt);
    add_hilbert_commands(app, opt);
    add_survey_command(app, opt);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion& e) {
        out << app.version() << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (opt.json)
        out << opt.result.payload.dump(2) << "\n";
    else
        out << opt.result.text;
    for (const auto& d : opt.result.diagnostics) err << d << "\n";
    return opt.result.status == CommandResult::Status::Violation ? 2 : 0;
}

}  // namespace cyclo::cli
