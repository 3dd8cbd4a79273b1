#include "conic/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <sstream>

#include "conic/approximation.hpp"
#include "conic/checks.hpp"
#include "conic/errors.hpp"
#include "conic/group.hpp"
#include "conic/point_power.hpp"

namespace conic::cli {

namespace {

int exit_code_for(errc code) {
    switch (code) {
        case errc::invalid_argument: return kExitUsage;
        case errc::precision_exhausted: return kExitPrecision;
        default: return kExitDomain;
    }
}

const std::string& require_flag(const std::optional<std::string>& v, const char* name) {
    if (!v) raise(errc::invalid_argument, std::string("missing required flag --") + name);
    return *v;
}

unsigned target_precision(const FieldSpec& spec) {
    return spec.kind() == FieldKind::real ? spec.working_precision() : 48;
}

// Decimal column for a coordinate ratio; exact fields divide exactly,
// prime fields have no decimal form.
std::string ratio_decimal(const FieldValue& x, const FieldValue& y, unsigned digits) {
    if (x.kind() == FieldKind::prime) return "-";
    if (x.is_zero()) return "-";
    return (y / x).decimal(digits);
}

// ---------------------------------------------------------------------------
// power

int cmd_power(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const FieldSpec& spec = req.field;
    ConicParams params(parse_scalar(require_flag(req.h, "h"), spec),
                       parse_scalar(require_flag(req.d, "d"), spec));
    ConicPoint base(parse_scalar(require_flag(req.x, "x"), spec),
                    parse_scalar(require_flag(req.y, "y"), spec), params);

    Table t;
    t.header = {"n", "x", "y", "q", "ratio_decimal"};
    t.integral = {true, false, false, false, false};

    std::int64_t n = req.steps;
    std::uint64_t mag = static_cast<std::uint64_t>(n >= 0 ? n : -n);
    ConicPoint cur = ConicPoint::identity(params);
    ConicPoint step = n >= 0 ? base : inverse(base);
    for (std::uint64_t k = 0; k <= mag; ++k) {
        std::int64_t idx = n >= 0 ? static_cast<std::int64_t>(k) : -static_cast<std::int64_t>(k);
        t.add_row({std::to_string(idx), cur.x().str(), cur.y().str(), tau(cur).str(),
                   ratio_decimal(cur.x(), cur.y(), req.digits)});
        if (k < mag) cur = mul(cur, step);
    }

    // Trailing closed-form limit of y_n/x_n (ordered fields with exactly
    // rational data; prime fields have no limit notion).
    std::string limit_error;
    std::optional<LimitValue> limit;
    bool limit_applicable = spec.kind() != FieldKind::prime;
    if (limit_applicable) {
        try {
            ConicPoint rational_base = [&]() {
                if (spec.kind() == FieldKind::rational) return base;
                const RatInterval &hx = params.h().interval(), &dx = params.d().interval();
                const RatInterval &xx = base.x().interval(), &yx = base.y().interval();
                if (!hx.is_point() || !dx.is_point() || !xx.is_point() || !yx.is_point())
                    raise(errc::invalid_argument, "coordinates are not exactly rational");
                ConicParams rp(FieldValue::rational(hx.lo), FieldValue::rational(dx.lo));
                return ConicPoint(FieldValue::rational(xx.lo), FieldValue::rational(yx.lo), rp);
            }();
            limit = point_ratio_limit(rational_base);
        } catch (const error& e) {
            limit_error = e.what();
        }
    }

    auto limit_fields = [&]() -> std::array<std::string, 3> {
        if (std::holds_alternative<Rat>(*limit)) {
            const Rat& r = std::get<Rat>(*limit);
            return {rat_str(r), rat_str(r), to_decimal_trunc(r, req.digits)};
        }
        const auto& qi = std::get<QuadraticIrrational>(*limit);
        return {qi.reciprocal_str(), qi.str(),
                iv_decimal(qi.to_interval(req.digits + 8), req.digits)};
    };

    if (req.format == OutputFormat::tsv) {
        out << render_tsv(t);
        if (limit) {
            auto f = limit_fields();
            out << "ratio_limit\t" << f[0] << "\t" << f[1] << "\t" << f[2] << "\n";
        } else if (limit_applicable) {
            out << "ratio_limit\terror: " << limit_error << "\n";
        }
    } else {
        nlohmann::ordered_json doc;
        doc["rows"] = nlohmann::ordered_json::parse(render_json(t));
        if (limit) {
            auto f = limit_fields();
            doc["ratio_limit"] = {{"closed_form", f[0]}, {"canonical", f[1]}, {"decimal", f[2]}};
        } else if (limit_applicable) {
            doc["ratio_limit"] = {{"error", limit_error}};
        } else {
            doc["ratio_limit"] = nullptr;
        }
        out << doc.dump(2) << "\n";
    }

    if (limit_applicable && !limit) {
        err << "error: " << limit_error << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// redei

int cmd_redei(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    const FieldSpec& spec = req.field;
    if (req.steps < 0) raise(errc::invalid_argument, "redei needs -n >= 0");
    std::uint64_t n = static_cast<std::uint64_t>(req.steps);
    RedeiContext ctx{parse_scalar(require_flag(req.h, "h"), spec),
                     parse_scalar(require_flag(req.d, "d"), spec),
                     parse_scalar(require_flag(req.z, "z"), spec)};

    Table t;
    t.header = {"n", "N", "D", "Q"};
    t.integral = {true, false, false, false};

    auto add = [&](const RedeiPair& pair) {
        t.add_row({std::to_string(pair.n), pair.num.str(), pair.den.str(),
                   redei_q_of_pair(pair).str()});
    };

    switch (req.strategy) {
        case RedeiStrategy::matrix:
            for (std::uint64_t k = 0; k <= n; ++k) add(nd_pair(ctx, k, RedeiStrategy::matrix));
            break;
        case RedeiStrategy::recurrence:
            for (const RedeiPair& p : nd_prefix(ctx, static_cast<std::size_t>(n) + 1)) add(p);
            break;
        case RedeiStrategy::addition: {
            RedeiPair acc = nd_pair(ctx, 0, RedeiStrategy::addition);
            RedeiPair one{1, ctx.z, FieldValue::one(spec), ctx};
            for (std::uint64_t k = 0; k <= n; ++k) {
                add(acc);
                if (k < n) acc = nd_add(acc, one);
            }
            break;
        }
    }

    out << render(t, req.format);

    // Informational wall-clock comparison at the requested index.
    using clock = std::chrono::steady_clock;
    auto t0 = clock::now();
    RedeiPair fast = nd_pair(ctx, n, RedeiStrategy::matrix);
    auto t1 = clock::now();
    RedeiPair slow = nd_pair(ctx, n, RedeiStrategy::addition);
    auto t2 = clock::now();
    if (fast.num != slow.num || fast.den != slow.den)
        raise(errc::invalid_argument, "strategies disagree at n = " + std::to_string(n));
    auto us = [](auto d) {
        return std::chrono::duration_cast<std::chrono::microseconds>(d).count();
    };
    err << "timing n=" << n << ": matrix=" << us(t1 - t0) << "us naive=" << us(t2 - t1) << "us\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// approximate / pythagorean

RealNumber parse_beta_for(const CommandRequest& req) {
    const std::string& text = require_flag(req.beta, "beta");
    RealNumber beta = parse_real_target(text, target_precision(req.field));
    if (beta.kind() == RealNumber::Kind::interval && req.field.kind() != FieldKind::real)
        raise(errc::invalid_argument,
              "--beta " + text + " needs --field real:<digits> for a working precision");
    return beta;
}

int cmd_approximate(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    if (req.field.kind() == FieldKind::prime)
        raise(errc::invalid_argument, "approximate works over rational or real fields");
    if (req.steps < 1) raise(errc::invalid_argument, "approximate needs -n >= 1");
    Rat h = parse_rat(require_flag(req.h, "h"));
    Rat d = parse_rat(require_flag(req.d, "d"));
    RealNumber beta = parse_beta_for(req);

    ApproxResult result =
        approx_over_conic(h, d, beta, static_cast<std::size_t>(req.steps), req.field);

    Table t;
    t.header = {"n", "p", "q", "x", "y", "ratio", "ratio_decimal", "abs_error", "note"};
    t.integral = {true, false, false, false, false, false, false, false, false};
    for (const ApproxStep& s : result.steps) {
        std::string ratio = s.ratio ? rat_str(*s.ratio) : "";
        std::string dec = s.ratio ? to_decimal_trunc(*s.ratio, req.digits) : "";
        std::string errv = s.ratio ? iv_decimal(s.abs_error, req.digits) : "";
        t.add_row({std::to_string(s.index), s.p.str(), s.q.str(), rat_str(s.x), rat_str(s.y),
                   ratio, dec, errv, s.note});
    }
    out << render(t, req.format);

    err << "auxiliary alpha (" << rationality_name(result.root.rationality)
        << "): " << result.root.value.str() << "\n";
    if (result.error_increases > 0)
        err << "note: |ratio - beta| increased " << result.error_increases
            << " time(s) along the tail\n";
    if (!result.complete) {
        err << "warning: precision exhausted after " << result.expansion.reliable_count
            << " certified digits; emitted " << result.steps.size() << " rows\n";
        return kExitPrecision;
    }
    return kExitOk;
}

int cmd_pythagorean(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    if (req.field.kind() == FieldKind::prime)
        raise(errc::invalid_argument, "pythagorean works over rational or real fields");
    if (req.steps < 1) raise(errc::invalid_argument, "pythagorean needs -n >= 1");
    RealNumber beta = parse_beta_for(req);

    PythResult result = pythagorean_stream(beta, static_cast<std::size_t>(req.steps), req.field);

    Table t;
    t.header = {"n", "p", "q", "A", "B", "C", "ratio", "ratio_decimal", "abs_error", "note"};
    t.integral = {true, false, false, false, false, false, false, false, false, false};
    for (const PythStep& s : result.steps) {
        std::string a = s.ratio ? s.a.str() : "";
        std::string b = s.ratio ? s.b.str() : "";
        std::string c = s.ratio ? s.c.str() : "";
        std::string ratio = s.ratio ? rat_str(*s.ratio) : "";
        std::string dec = s.ratio ? to_decimal_trunc(*s.ratio, req.digits) : "";
        std::string errv = s.ratio ? iv_decimal(s.abs_error, req.digits) : "";
        t.add_row({std::to_string(s.index), s.p.str(), s.q.str(), a, b, c, ratio, dec, errv,
                   s.note});
    }
    out << render(t, req.format);

    err << "auxiliary alpha (" << rationality_name(result.root.rationality)
        << "): " << result.root.value.str() << "\n";
    if (!result.complete) {
        err << "warning: precision exhausted after " << result.expansion.reliable_count
            << " certified digits\n";
        return kExitPrecision;
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// check

int cmd_check(const CommandRequest& req, std::ostream& out, std::ostream&) {
    std::vector<SuiteReport> reports = run_suites(req.suite, req.seed, req.samples);
    bool all_ok = true;
    for (const SuiteReport& suite : reports) {
        for (const PropertyResult& r : suite.results) {
            if (r.passed()) {
                out << "PASS " << suite.suite << "." << r.name << " samples=" << r.samples << "\n";
            } else {
                all_ok = false;
                out << "FAIL " << suite.suite << "." << r.name << " failures=" << r.failures << "/"
                    << r.samples << ": " << r.detail << "\n";
            }
        }
    }
    return all_ok ? kExitOk : kExitDomain;
}

}  // namespace

std::optional<CommandRequest> parse_args(const std::vector<std::string>& args,
                                         std::string* help_text) {
    CLI::App app{"exact arithmetic on the conics x^2 + hxy - dy^2 = 1"};
    app.name("conic");
    app.set_help_flag("--help", "print usage");
    app.require_subcommand(1);

    CommandRequest req;
    std::string field_text = "rational", format_text = "tsv", strategy_text = "matrix";
    std::string h, d, x, y, z, beta;

    auto add_common = [&](CLI::App* sub) {
        sub->set_help_flag("--help", "print usage");
        sub->add_option("--field", field_text, "rational | fp:<p> | real:<digits>");
        sub->add_option("--format", format_text, "tsv | json");
        sub->add_option("--digits", req.digits, "decimal digits in rendered output");
        return sub;
    };

    CLI::App* power = add_common(app.add_subcommand("power", "table of point powers (x,y)^n"));
    power->add_option("--h", h)->required();
    power->add_option("--d", d)->required();
    power->add_option("--x", x)->required();
    power->add_option("--y", y)->required();
    power->add_option("-n,--steps", req.steps, "largest exponent")->required();

    CLI::App* redei = add_common(app.add_subcommand("redei", "table of N_n, D_n, Q_n"));
    redei->add_option("--h", h)->required();
    redei->add_option("--d", d)->required();
    redei->add_option("--z", z)->required();
    redei->add_option("-n,--steps", req.steps, "largest index")->required();
    redei->add_option("--strategy", strategy_text, "matrix | recurrence | naive");

    CLI::App* approx =
        add_common(app.add_subcommand("approximate", "rational approximations of beta on E(h,d)"));
    approx->add_option("--h", h)->required();
    approx->add_option("--d", d)->required();
    approx->add_option("--beta", beta, "pi | sqrt:<k> | rat:<p>/<q> | <decimal>")->required();
    approx->add_option("-n,--steps", req.steps, "ratio-bearing steps to emit")->required();

    CLI::App* pyth = add_common(
        app.add_subcommand("pythagorean", "approximations of beta by Pythagorean triples"));
    pyth->add_option("--beta", beta, "pi | sqrt:<k> | rat:<p>/<q> | <decimal>")->required();
    pyth->add_option("-n,--steps", req.steps, "triples to emit")->required();

    CLI::App* check = add_common(app.add_subcommand("check", "run the property suites"));
    check->add_option("suite", req.suite, "group | redei | power | approx | all");
    check->add_option("--seed", req.seed, "RNG seed");
    check->add_option("--samples", req.samples, "samples per property");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        if (help_text) *help_text = app.help();
        return std::nullopt;
    } catch (const CLI::ParseError& e) {
        raise(errc::invalid_argument, e.what());
    }

    if (power->parsed()) req.cmd = Command::power;
    else if (redei->parsed()) req.cmd = Command::redei;
    else if (approx->parsed()) req.cmd = Command::approximate;
    else if (pyth->parsed()) req.cmd = Command::pythagorean;
    else req.cmd = Command::check;

    req.field = FieldSpec::parse(field_text);
    req.format = parse_format(format_text);
    req.strategy = parse_strategy(strategy_text);
    auto opt = [](const std::string& s) {
        return s.empty() ? std::optional<std::string>() : std::optional<std::string>(s);
    };
    req.h = opt(h);
    req.d = opt(d);
    req.x = opt(x);
    req.y = opt(y);
    req.z = opt(z);
    req.beta = opt(beta);
    return req;
}

RunResult run(const CommandRequest& request) {
    RunResult res;
    std::ostringstream out, err;
    try {
        switch (request.cmd) {
            case Command::power: res.exit_code = cmd_power(request, out, err); break;
            case Command::redei: res.exit_code = cmd_redei(request, out, err); break;
            case Command::approximate: res.exit_code = cmd_approximate(request, out, err); break;
            case Command::pythagorean: res.exit_code = cmd_pythagorean(request, out, err); break;
            case Command::check: res.exit_code = cmd_check(request, out, err); break;
        }
    } catch (const error& e) {
        err << "error: " << e.what() << " [" << errc_name(e.code()) << "]\n";
        res.exit_code = exit_code_for(e.code());
    }
    res.out = out.str();
    res.err = err.str();
    return res;
}

}  // namespace conic::cli
