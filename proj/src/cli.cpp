#include "monoirr/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "monoirr/closed_forms.hpp"
#include "monoirr/errors.hpp"
#include "monoirr/monomial.hpp"
#include "monoirr/primes.hpp"
#include "monoirr/screening.hpp"
#include "monoirr/serialize.hpp"
#include "monoirr/solutions.hpp"

namespace monoirr::cli {

namespace {

enum class Format { text, json, csv };

struct RunConfig {
    Format format = Format::text;
    unsigned jobs = 1;
    std::uint64_t budget = WorkBudget::kDefault;
    std::uint64_t seed = 0;
};

const char* kCsvColumns = R"(CSV columns:
  solve               tuple,sign
  monomial            N,k,h,sign,irreducible,part_size,junction_a
  classify            N,monomially_irreducible,k,part_size,junction_a   (first reducible k; gaps as N,gap,,,)
  screen              p,rule,n,eps,s,x
  omega               p
  density             x,primes,class_5,class_8,class_40,favorable,numerator,denominator,value
  verify-closed-forms kind,k,m,l,case,n,period,expected,got
  family              N,k,m,l,case,point,predicted_h,predicted_part_size,junction_a,valid
Exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget exceeded.
The environment variable MONOIRR_BUDGET replaces the default work budget.)";

std::string joined(const std::vector<std::uint64_t>& v, const char* sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

std::string sign_text(int s) { return s > 0 ? "+1" : "-1"; }

Modulus modulus_arg(std::uint64_t N) {
    if (N > Modulus::kMax) throw InvalidArgument("modulus above 2^31-1");
    return Modulus(static_cast<std::int64_t>(N));
}

void print_json(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

int cmd_solve(const RunConfig& cfg, std::uint64_t N, unsigned n, std::ostream& out) {
    const auto sols = enumerate_solutions(modulus_arg(N), n, WorkBudget{cfg.budget});
    if (cfg.format == Format::json) {
        Json arr = Json::array();
        for (const auto& t : sols) arr.push_back(Json{{"tuple", to_json(t)}, {"sign", to_string(solution_sign(t))}});
        print_json(out, arr);
    } else if (cfg.format == Format::csv) {
        out << "tuple,sign\n";
        for (const auto& t : sols) out << joined(t.values(), " ") << "," << to_string(solution_sign(t)) << "\n";
    } else {
        for (const auto& t : sols) out << t << " sign " << to_string(solution_sign(t)) << "\n";
        out << sols.size() << " solutions of size " << n << " mod " << N << "\n";
    }
    return kOk;
}

void monomial_line(const RunConfig& cfg, const MonomialReport& r, std::ostream& out) {
    if (cfg.format == Format::csv) {
        out << r.N << "," << r.k << "," << r.h << "," << sign_text(r.sign) << "," << (r.irreducible ? "true" : "false")
            << ",";
        if (r.certificate) out << r.certificate->part_size << "," << r.certificate->junction_a;
        else out << ",";
        out << "\n";
        return;
    }
    out << "N=" << r.N << " k=" << r.k << " size=" << r.h << " sign=" << sign_text(r.sign)
        << " irreducible=" << (r.irreducible ? "true" : "false");
    if (r.certificate) {
        out << " part=" << r.certificate->left() << " complement=" << r.certificate->right();
    }
    out << "\n";
}

int cmd_monomial(const RunConfig& cfg, std::uint64_t N, const std::optional<std::uint64_t>& k, std::ostream& out) {
    const Modulus mod = modulus_arg(N);
    std::vector<MonomialReport> reports;
    if (k) {
        if (*k == 0 || *k >= N) throw InvalidArgument("--k must lie in [1, N-1]");
        reports.push_back(monomial_report(mod, *k));
    } else {
        WorkBudget{cfg.budget}.require(classification_cost(N), "monomial reports for N = " + std::to_string(N));
        for (std::uint64_t kk = 1; kk < N; ++kk) reports.push_back(monomial_report(mod, kk));
    }
    if (cfg.format == Format::json) {
        if (k) {
            print_json(out, to_json(reports.front()));
        } else {
            Json arr = Json::array();
            for (const auto& r : reports) arr.push_back(to_json(r));
            print_json(out, arr);
        }
        return kOk;
    }
    if (cfg.format == Format::csv) out << "N,k,h,sign,irreducible,part_size,junction_a\n";
    for (const auto& r : reports) monomial_line(cfg, r, out);
    return kOk;
}

int cmd_classify(const RunConfig& cfg, std::uint64_t lo, std::uint64_t hi, bool witnesses, std::ostream& out) {
    ClassifyOptions opt;
    opt.jobs = cfg.jobs;
    opt.budget = WorkBudget{cfg.budget};
    opt.keep_witnesses = true;
    std::vector<std::uint64_t> irreducible, gaps;
    Json verdicts = Json::array();
    if (cfg.format == Format::csv) out << "N,monomially_irreducible,k,part_size,junction_a\n";
    classify_range(lo, hi, opt, [&](RangeEntry&& e) {
        if (!e.verdict) {
            gaps.push_back(e.N);
            if (cfg.format == Format::json) verdicts.push_back(Json{{"N", e.N}, {"gap", e.gap}});
            else if (cfg.format == Format::csv) out << e.N << ",gap,,,\n";
            else out << "N=" << e.N << " gap: " << e.gap << "\n";
            return;
        }
        const ClassificationVerdict& v = *e.verdict;
        if (v.monomially_irreducible) irreducible.push_back(v.N);
        const MonomialReport* first = nullptr;
        for (const auto& r : v.witnesses) {
            if (!r.irreducible) {
                first = &r;
                break;
            }
        }
        if (cfg.format == Format::json) {
            Json j = to_json(v, witnesses);
            if (first && !witnesses) j["certificate"] = to_json(*first->certificate);
            verdicts.push_back(std::move(j));
        } else if (cfg.format == Format::csv) {
            out << v.N << "," << (v.monomially_irreducible ? "true" : "false") << ",";
            if (first) out << first->k << "," << first->certificate->part_size << "," << first->certificate->junction_a;
            else out << ",,";
            out << "\n";
        } else {
            out << "N=" << v.N << (v.monomially_irreducible ? " irreducible" : " reducible");
            if (first) {
                out << " k=" << first->k << " size=" << first->h << " part_size=" << first->certificate->part_size
                    << " a=" << first->certificate->junction_a;
            }
            out << "\n";
        }
    });
    if (cfg.format == Format::json) {
        print_json(out, Json{{"verdicts", verdicts}, {"irreducible", irreducible}, {"gaps", gaps}});
    } else if (cfg.format == Format::text) {
        out << "irreducible: " << joined(irreducible, " ") << "\n";
        if (!gaps.empty()) out << "gaps: " << joined(gaps, " ") << "\n";
    }
    return gaps.empty() ? kOk : kBudgetExceeded;
}

int cmd_screen(const RunConfig& cfg, std::uint64_t lo, std::uint64_t hi, bool generic, unsigned n_max,
               std::ostream& out) {
    const auto reports = screen_range(std::max<std::uint64_t>(lo, 5), hi, ScreenOptions{generic, n_max}, cfg.jobs);
    if (cfg.format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        print_json(out, arr);
        return kOk;
    }
    if (cfg.format == Format::csv) out << "p,rule,n,eps,s,x\n";
    for (const auto& r : reports) {
        if (cfg.format == Format::csv) {
            out << r.p << "," << to_string(r.rule) << ",";
            if (r.witness) out << r.witness->n << "," << r.witness->eps << "," << r.witness->s << "," << r.witness->x;
            else out << ",,,";
            out << "\n";
        } else {
            out << r.p << " " << to_string(r.rule);
            if (r.witness) {
                out << " n=" << r.witness->n << " eps=" << r.witness->eps << " s=" << r.witness->s
                    << " x=" << r.witness->x;
            }
            out << "\n";
        }
    }
    return kOk;
}

int cmd_omega(const RunConfig& cfg, std::uint64_t bound, std::ostream& out) {
    const auto omega = omega_unscreened(bound);
    if (cfg.format == Format::json) {
        print_json(out, Json(omega));
    } else if (cfg.format == Format::csv) {
        out << "p\n";
        for (auto p : omega) out << p << "\n";
    } else {
        out << joined(omega, " ") << "\n";
    }
    return kOk;
}

int cmd_density(const RunConfig& cfg, std::uint64_t x, std::ostream& out) {
    const auto d = density_D(x);
    if (cfg.format == Format::json) {
        print_json(out, to_json(d));
    } else if (cfg.format == Format::csv) {
        out << "x,primes,class_5,class_8,class_40,favorable,numerator,denominator,value\n"
            << d.x << "," << d.primes << "," << d.class5 << "," << d.class8 << "," << d.class40 << "," << d.favorable
            << "," << d.numerator << "," << d.denominator << "," << d.decimal() << "\n";
    } else {
        out << "D(" << d.x << ") = " << d.favorable << "/" << d.primes << " = " << d.numerator << "/" << d.denominator
            << " ~ " << d.decimal() << "\n";
    }
    return kOk;
}

int cmd_verify_closed_forms(const RunConfig& cfg, std::uint64_t k_max, std::uint64_t m_max, std::ostream& out) {
    const auto audit = verify_closed_forms(k_max, m_max, cfg.jobs);
    if (cfg.format == Format::json) {
        Json arr = Json::array();
        for (const auto& m : audit.mismatches) arr.push_back(to_json(m));
        print_json(out, Json{{"value_checks", audit.value_checks},
                             {"size_checks", audit.size_checks},
                             {"mismatches", arr}});
    } else if (cfg.format == Format::csv) {
        out << "kind,k,m,l,case,n,period,expected,got\n";
        for (const auto& m : audit.mismatches) {
            out << m.kind << "," << m.params.k << "," << m.params.m << "," << m.params.l << ","
                << to_string(m.params.sign_case) << "," << m.n << "," << m.period << "," << m.expected << "," << m.got
                << "\n";
        }
    } else {
        for (const auto& m : audit.mismatches) {
            out << m.kind << " mismatch k=" << m.params.k << " m=" << m.params.m << " l=" << m.params.l << " "
                << to_string(m.params.sign_case) << " n=" << m.n << " period=" << m.period << " expected "
                << m.expected << " got " << m.got << "\n";
        }
        out << audit.value_checks << " value checks, " << audit.size_checks << " size checks, "
            << audit.mismatches.size() << " mismatches\n";
    }
    return audit.mismatches.empty() ? kOk : kVerificationFailed;
}

int cmd_family(const RunConfig& cfg, std::uint64_t N, std::ostream& out) {
    const auto r = family_certificate(N);
    if (cfg.format == Format::json) {
        print_json(out, to_json(r));
    } else if (cfg.format == Format::csv) {
        out << "N,k,m,l,case,point,predicted_h,predicted_part_size,junction_a,valid\n"
            << r.N << "," << r.params.k << "," << r.params.m << "," << r.params.l << ","
            << to_string(r.params.sign_case) << "," << r.point << "," << r.predicted_h << ","
            << r.predicted_part_size << "," << r.certificate.junction_a << "," << (r.defect.empty() ? "true" : "false")
            << "\n";
    } else {
        out << "N=" << r.N << " k=" << r.params.k << " m=" << r.params.m << " l=" << r.params.l << " "
            << to_string(r.params.sign_case) << " point=" << r.point << " size=" << r.predicted_h
            << " part_size=" << r.predicted_part_size << " a=" << r.certificate.junction_a << " "
            << (r.defect.empty() ? "valid" : "invalid: " + r.defect) << "\n";
    }
    return r.defect.empty() ? kOk : kVerificationFailed;
}

int cmd_check_certificate(const RunConfig& cfg, const std::string& path, std::ostream& out) {
    Json doc;
    {
        std::ifstream in;
        std::istream* src = &std::cin;
        if (path != "-") {
            in.open(path);
            if (!in) throw InvalidArgument("cannot open " + path);
            src = &in;
        }
        try {
            doc = Json::parse(*src);
        } catch (const Json::parse_error& e) {
            throw InvalidArgument(std::string("malformed JSON: ") + e.what());
        }
    }
    std::vector<Json> items;
    if (doc.is_array()) items.assign(doc.begin(), doc.end());
    else items.push_back(doc);

    bool all_valid = true;
    Json results = Json::array();
    for (const auto& item : items) {
        std::string defect;
        try {
            defect = certificate_defect(certificate_from_json(item));
        } catch (const InvalidArgument& e) {
            defect = e.what();
        }
        all_valid = all_valid && defect.empty();
        results.push_back(Json{{"certificate", item}, {"valid", defect.empty()}, {"defect", defect}});
        if (cfg.format == Format::text) out << (defect.empty() ? "valid" : "invalid: " + defect) << "\n";
        else if (cfg.format == Format::csv) out << (defect.empty() ? "valid" : "invalid") << "\n";
    }
    if (cfg.format == Format::json) print_json(out, results);
    return all_valid ? kOk : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("MONOIRR_BUDGET")) {
        try {
            cfg.budget = std::stoull(env);
        } catch (const std::exception&) {
            err << "MONOIRR_BUDGET must be a positive integer\n";
            return kUsage;
        }
    }

    CLI::App app{"Monomial irreducibility of moduli for M_n(a_1..a_n) = +-Id over Z/NZ", "monoirr"};
    app.footer(kCsvColumns);
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    app.add_option("--budget", cfg.budget, "Work budget (elementary steps per operation)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "Seed for sampled checks");

    std::uint64_t N = 0, lo = 2, hi = 0, k_max = 24, m_max = 60;
    unsigned size = 0, n_max = 30;
    std::optional<std::uint64_t> k;
    bool generic = false, witnesses = false;
    std::string file;

    auto* solve = app.add_subcommand("solve", "All solutions of a given size");
    solve->add_option("--modulus", N)->required()->check(CLI::Range(2ull, 0x7fffffffull));
    solve->add_option("--size", size)->required()->check(CLI::Range(1u, 64u));

    auto* monomial = app.add_subcommand("monomial", "Minimal monomial solutions and their reductions");
    monomial->add_option("--modulus", N)->required()->check(CLI::Range(2ull, 0x7fffffffull));
    monomial->add_option("--k", k);

    auto* classify = app.add_subcommand("classify", "Monomial irreducibility for every N in a range");
    classify->add_option("--from", lo)->check(CLI::Range(2ull, 0x7fffffffull));
    classify->add_option("--to", hi)->required()->check(CLI::Range(2ull, 0x7fffffffull));
    classify->add_flag("--witnesses", witnesses, "Include every per-k report in JSON output");

    auto* screen = app.add_subcommand("screen", "Screening rule for every prime in a range");
    std::uint64_t screen_lo = 5;
    screen->add_option("--from", screen_lo);
    screen->add_option("--to", hi)->required()->check(CLI::Range(5ull, 100'000'000ull));
    screen->add_flag("--generic", generic, "Fall back to the generic witness search");
    screen->add_option("--nmax", n_max, "Largest witness size n for the generic search")
        ->check(CLI::Range(3u, 200u));

    auto* omega = app.add_subcommand("omega", "Primes no fixed screening rule covers");
    omega->add_option("--to", hi)->required()->check(CLI::Range(5ull, 100'000'000ull));

    auto* density = app.add_subcommand("density", "Share of primes = +-1 mod 5 or +-1 mod 8");
    density->add_option("--to", hi)->required()->check(CLI::Range(std::uint64_t{10}, kDensitySieveLimit));

    auto* closed = app.add_subcommand("verify-closed-forms", "Check the K_n(lm +- 2) closed forms");
    closed->add_option("--kmax", k_max)->check(CLI::Range(2ull, 200ull));
    closed->add_option("--mmax", m_max)->check(CLI::Range(2ull, 2000ull));

    auto* family = app.add_subcommand("family", "Explicit reduction for N = 2m or N = km");
    family->add_option("--modulus", N)->required()->check(CLI::Range(2ull, 0x7fffffffull));

    auto* check = app.add_subcommand("check-certificate", "Replay a reduction certificate");
    check->add_option("--file", file, "JSON certificate (object or array), '-' for stdin")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        if (*solve) return cmd_solve(cfg, N, size, out);
        if (*monomial) return cmd_monomial(cfg, N, k, out);
        if (*classify) return cmd_classify(cfg, lo, hi, witnesses, out);
        if (*screen) return cmd_screen(cfg, screen_lo, hi, generic, n_max, out);
        if (*omega) return cmd_omega(cfg, hi, out);
        if (*density) return cmd_density(cfg, hi, out);
        if (*closed) return cmd_verify_closed_forms(cfg, k_max, m_max, out);
        if (*family) return cmd_family(cfg, N, out);
        if (*check) return cmd_check_certificate(cfg, file, out);
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnsupportedSize& e) {
        err << "budget exceeded: " << e.what() << "\n";
        return kBudgetExceeded;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kUsage;
}

}  // namespace monoirr::cli
