#include "cli.hpp"

#include "ptm/errors.hpp"
#include "ptm/fixtures.hpp"
#include "ptm/halting.hpp"
#include "ptm/machine_file.hpp"
#include "ptm/restrictions.hpp"
#include "ptm/t1.hpp"
#include "ptm/t2.hpp"
#include "ptm/trace.hpp"

#include <CLI11.hpp>

#include <optional>
#include <stdexcept>

namespace ptm::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string file;
    std::string input;
    std::string construction;
    std::string restrictions;
    std::string fixture;
    std::size_t max_steps = 10'000;
    bool trace = false;
    bool exhaustive = false;
    std::size_t samples = 10'000;
    std::uint64_t seed = 1;
    bool full_domain = false;
    std::int64_t bound = 16;
    std::uint64_t cap = 0;
    bool override_preconditions = false;

    CLI::Option* input_opt = nullptr;
    CLI::Option* samples_opt = nullptr;
    CLI::Option* cap_opt = nullptr;
    CLI::Option* bound_opt = nullptr;
};

TuringMachine read_machine(const std::string& arg) {
    constexpr std::string_view prefix = "fixture:";
    if (arg.rfind(prefix, 0) == 0) {
        try {
            return fixtures::load(arg.substr(prefix.size()));
        } catch (const std::out_of_range& e) {
            throw UsageError(e.what());
        }
    }
    try {
        return load_machine(arg);
    } catch (const ParseError& e) {
        throw UsageError(arg + ": " + e.what());
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

int tm_validate(const Options& o, std::ostream& out) {
    auto tm = read_machine(o.file);
    auto report = validate(tm);
    if (report.ok()) {
        out << "ok\n";
        return kOk;
    }
    for (const auto& v : report.violations) out << "violation: " << v << "\n";
    return kFail;
}

int tm_run_cmd(const Options& o, std::ostream& out) {
    auto tm = read_machine(o.file);
    auto run = tm_run(tm, o.input, o.max_steps);
    if (o.trace) out << render_tm_trace(tm, run.trace);
    out << "result=" << to_string(run.verdict) << " t=" << run.trace.size() << "\n";
    return kOk;
}

template <class F>
int with_construction(const Options& o, const TuringMachine& tm, F&& f) {
    if (o.construction == "t1") return f(t1::compile(tm), [](const Configuration& c) { return t1::psi(c); });
    return f(t2::compile(tm), [](const Configuration& c) { return t2::psi(c); });
}

int pm_compile(const Options& o, std::ostream& out) {
    auto tm = read_machine(o.file);
    return with_construction(o, tm, [&](const auto& alg, auto psi) {
        out << pm::render_state(alg, psi(start_config(tm, o.input))) << "\n";
        return kOk;
    });
}

int pm_cosim(const Options& o, std::ostream& out) {
    auto tm = read_machine(o.file);
    CosimReport r = o.construction == "t1" ? t1::cosim(tm, o.input, o.max_steps) : t2::cosim(tm, o.input, o.max_steps);
    out << render_cosim(tm, r, o.trace);
    return r.ok() ? kOk : kFail;
}

template <class G, class P>
int run_checks(const Options& o, const pm::Algorithm<G, P>& alg, const check::DomainSampler<G, P>& s,
               std::ostream& out) {
    const std::string family = o.restrictions.empty() ? o.construction : o.restrictions;
    check::RestrictionReport<G, P> rep;
    if (family == "t1")
        rep = check::check_t1(alg, s);
    else if (family == "t2")
        rep = check::check_t2(alg, s);
    else
        rep = check::check_t3(alg, s);
    out << rep.render();
    return rep.passed() ? kOk : kFail;
}

int pm_check(const Options& o, std::ostream& out) {
    auto tm = read_machine(o.file);
    const bool randomized = o.samples_opt->count() > 0;
    if (o.construction == "t1") {
        auto alg = t1::compile(tm);
        check::DomainSampler<t1::Global, t1::Particle> s;
        if (o.exhaustive) {
            const auto bound = o.bound_opt->count() ? o.bound : 4;
            s = check::exhaustive(t1::bounded_globals(tm, bound), t1::bounded_particles(tm, bound),
                                  "exhaustive, indices 1.." + std::to_string(bound));
        } else {
            const auto bound = o.bound;
            s = check::randomized<t1::Global, t1::Particle>(
                o.seed, o.samples, [&tm, bound](std::mt19937_64& rng) { return t1::random_global(tm, bound, rng); },
                [&tm, bound](std::mt19937_64& rng) { return t1::random_particle(tm, bound, rng); },
                "randomized, indices 1.." + std::to_string(bound));
        }
        if (o.input_opt->count()) {
            s.probe = t1::psi(start_config(tm, o.input));
            s.probe_steps = o.max_steps;
        }
        return run_checks(o, alg, s, out);
    }
    auto alg = t2::compile(tm);
    check::DomainSampler<t2::Global, t2::Particle> s;
    s.globals = o.full_domain ? *alg.domains.globals : t2::boundary_globals(tm);
    s.particles = *alg.domains.particles;
    const std::string scope = o.full_domain ? "full declared domain" : "reachable sub-domain (dq = start)";
    if (randomized) {
        s.mode = check::SamplerMode::Randomized;
        s.seed = o.seed;
        s.samples = o.samples;
        s.scope = scope + ", randomized";
    } else {
        s.scope = scope + ", exhaustive";
    }
    if (o.input_opt->count()) {
        s.probe = t2::psi(start_config(tm, o.input));
        s.probe_steps = o.max_steps;
    }
    return run_checks(o, alg, s, out);
}

int pm_decide(const Options& o, std::ostream& out) {
    const fixtures::PmFixture* f = nullptr;
    try {
        f = &fixtures::particle_method(o.fixture);
    } catch (const std::out_of_range& e) {
        throw UsageError(e.what());
    }
    halting::DecideOptions opts;
    if (o.cap_opt->count()) opts.cap = o.cap;
    opts.override_preconditions = o.override_preconditions;
    auto v = halting::decide(f->alg, f->instance, opts);
    out << v.line() << "\n";
    return kOk;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Turing machines compiled to particle methods", "ptm"};
    app.require_subcommand(1);
    Options o;
    int (*action)(const Options&, std::ostream&) = nullptr;

    auto* tm = app.add_subcommand("tm", "Turing machine commands")->require_subcommand(1);
    auto* validate_cmd = tm->add_subcommand("validate", "check the structural rules of a machine");
    validate_cmd->add_option("file", o.file, "machine file or fixture:<name>")->required();
    validate_cmd->callback([&] { action = tm_validate; });

    auto* run_cmd = tm->add_subcommand("run", "run a machine on an input");
    run_cmd->add_option("file", o.file, "machine file or fixture:<name>")->required();
    run_cmd->add_option("--input", o.input, "input string")->required();
    run_cmd->add_option("--max-steps", o.max_steps, "step cap");
    run_cmd->add_flag("--trace", o.trace, "print every configuration");
    run_cmd->callback([&] { action = tm_run_cmd; });

    auto* pm = app.add_subcommand("pm", "particle method commands")->require_subcommand(1);
    auto constructions = CLI::IsMember({"t1", "t2"});

    auto* compile_cmd = pm->add_subcommand("compile", "print the instance for an input");
    compile_cmd->add_option("file", o.file, "machine file or fixture:<name>")->required();
    compile_cmd->add_option("--construction", o.construction, "t1 or t2")->required()->check(constructions);
    compile_cmd->add_option("--input", o.input, "input string")->required();
    compile_cmd->callback([&] { action = pm_compile; });

    auto* cosim_cmd = pm->add_subcommand("cosim", "run machine and particle method in lock step");
    cosim_cmd->add_option("file", o.file, "machine file or fixture:<name>")->required();
    cosim_cmd->add_option("--construction", o.construction, "t1 or t2")->required()->check(constructions);
    cosim_cmd->add_option("--input", o.input, "input string")->required();
    cosim_cmd->add_option("--max-steps", o.max_steps, "step cap");
    cosim_cmd->add_flag("--trace", o.trace, "print both traces");
    cosim_cmd->callback([&] { action = pm_cosim; });

    auto* check_cmd = pm->add_subcommand("check", "check the restriction equations");
    check_cmd->add_option("file", o.file, "machine file or fixture:<name>")->required();
    check_cmd->add_option("--construction", o.construction, "t1 or t2")->required()->check(constructions);
    check_cmd->add_option("--restrictions", o.restrictions, "restriction set t1, t2 or t3 (default: construction)")
        ->check(CLI::IsMember({"t1", "t2", "t3"}));
    auto* exhaustive_opt = check_cmd->add_flag("--exhaustive", o.exhaustive, "enumerate all tuples");
    o.samples_opt = check_cmd->add_option("--samples", o.samples, "random tuples per restriction");
    check_cmd->add_option("--seed", o.seed, "random seed");
    o.bound_opt = check_cmd->add_option("--bound", o.bound, "t1: largest index (default 16 sampled, 4 exhaustive)")
                      ->check(CLI::PositiveNumber);
    check_cmd->add_flag("--full-domain", o.full_domain, "t2: use the whole declared global domain");
    o.input_opt = check_cmd->add_option("--input", o.input, "measure resources on this input");
    check_cmd->add_option("--max-steps", o.max_steps, "step cap for the resource run");
    exhaustive_opt->excludes(o.samples_opt);
    check_cmd->callback([&] { action = pm_check; });

    auto* decide_cmd = pm->add_subcommand("decide-halt", "decide halting of a finite fixture");
    decide_cmd->add_option("--fixture", o.fixture, "counter3, counter3-stop, drain or rotate")->required();
    o.cap_opt = decide_cmd->add_option("--cap", o.cap, "visited-state cap (default: the state bound)");
    decide_cmd->add_flag("--override", o.override_preconditions, "run even if the restrictions fail");
    decide_cmd->callback([&] { action = pm_decide; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        return action(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SymbolNotInInputAlphabet& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace ptm::cli
