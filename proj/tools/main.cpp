#include "commands.hpp"

#include "cuspidal/errors.hpp"

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <optional>

namespace {

using cuspidal::cli::Args;
using cuspidal::cli::Json;
using cuspidal::cli::Report;

constexpr int kExitUsage = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitInternal = 3;

int emit_error(bool json, const std::string& command, const char* kind, const std::string& message, int code) {
    if (json) {
        Json j;
        j["schema"] = 1;
        j["command"] = command;
        j["error"] = {{"kind", kind}, {"message", message}};
        std::cout << j.dump(2) << "\n";
    }
    std::cerr << "cuspidal: " << kind << ": " << message << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ideal classes, SL_2 orbits of generating pairs and cusp counts for quadratic orders"};
    app.require_subcommand(1);
    app.fallthrough();

    Args args;
    bool json = false;
    std::optional<long long> bound;
    app.add_flag("--json", json, "Print a JSON report");
    app.add_option("--bound", bound, "Largest |disc| for ideal class enumeration (overrides CUSPIDAL_BOUND)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", args.seed, "Seed for randomized checks");

    std::string command;
    std::function<Report(const cuspidal::SearchConfig&)> run;

    auto order_opts = [&](CLI::App* s) {
        s->add_option("--m", args.m, "Squarefree m, the field is Q(sqrt m)")->required();
        s->add_option("--f", args.f, "Conductor of the order")->check(CLI::PositiveNumber);
    };
    auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, auto fn) {
        CLI::App* s = parent->add_subcommand(name, help);
        s->callback([&, s, fn] {
            command = s->get_parent() == &app ? s->get_name() : s->get_parent()->get_name() + " " + s->get_name();
            run = [&, fn](const cuspidal::SearchConfig& cfg) { return fn(args, cfg); };
        });
        return s;
    };

    order_opts(leaf(&app, "cusps", "Count cusps of the order", cuspidal::cli::cmd_cusps));
    order_opts(leaf(&app, "pic", "Picard group size", cuspidal::cli::cmd_pic));
    order_opts(leaf(&app, "unit", "Unit group of the order", cuspidal::cli::cmd_unit));

    CLI::App* ideal = app.add_subcommand("ideal", "Ideal operations");
    ideal->require_subcommand(1);
    for (const char* op : {"std-basis", "fitt1", "inverse", "mult-ring", "norm"}) {
        const std::string name = op;
        CLI::App* s = leaf(ideal, name, "ideal " + name,
                           [name](const Args& a, const cuspidal::SearchConfig& c) {
                               return cuspidal::cli::cmd_ideal(name, a, c);
                           });
        order_opts(s);
        s->add_option("--gens", args.gens, "Generators separated by ';', e.g. \"2; 1+w\"")->required();
    }

    CLI::App* pair = app.add_subcommand("pair", "Generating pairs up to SL_2(R)");
    pair->require_subcommand(1);
    for (const char* op : {"det", "equiv", "witness"}) {
        const std::string name = op;
        CLI::App* s = leaf(pair, name, "pair " + name,
                           [name](const Args& a, const cuspidal::SearchConfig& c) {
                               return cuspidal::cli::cmd_pair(name, a, c);
                           });
        order_opts(s);
        s->add_option("--gens", args.gens, "First pair \"g1; g2\"")->required();
        s->add_option("--gens2", args.gens2, "Second pair \"h1; h2\" of the same ideal")->required();
    }

    CLI::App* vec = app.add_subcommand("vec", "Generating vectors");
    vec->require_subcommand(1);
    {
        CLI::App* s = leaf(vec, "reduce", "Reduce a generating vector to a pair", cuspidal::cli::cmd_vec_reduce);
        order_opts(s);
        s->add_option("--gens", args.gens, "Entries separated by ';'")->required();
    }

    CLI::App* curve = app.add_subcommand("curve", "Ideals of K[x^2, x^n]");
    curve->require_subcommand(1);
    for (const char* op : {"reduce", "fitt1", "mult-ring", "units"}) {
        const std::string name = op;
        CLI::App* s = leaf(curve, name, "curve " + name,
                           [name](const Args& a, const cuspidal::SearchConfig& c) {
                               return cuspidal::cli::cmd_curve(name, a, c);
                           });
        s->add_option("--field", args.field, "rational or f<q>");
        s->add_option("--n", args.n, "Odd n >= 3")->required();
        s->add_option("--gens", args.gens, "Polynomials in x separated by ';'")->required();
    }

    {
        CLI::App* s = leaf(&app, "selftest", "Run the acceptance checks", cuspidal::cli::cmd_selftest);
        s->add_option("--only", args.only, "Criterion ids to run")->delimiter(',')->check(CLI::Range(1, 9));
        s->add_flag("--inject-wrong-pic", args.inject_wrong_pic, "Add one to every Picard size");
        s->add_option("--jobs", args.jobs, "Criteria run in parallel")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        cuspidal::SearchConfig cfg = cuspidal::SearchConfig::from_env();
        if (bound) cfg.disc_bound = cuspidal::Int(static_cast<long>(*bound));
        const Report r = run(cfg);
        if (json) {
            std::cout << to_json(r).dump(2) << "\n";
        } else {
            std::cout << r.text;
            for (const auto& a : r.assertions)
                if (a.status != "pass") std::cout << "check " << a.name << ": " << a.status << "\n";
        }
        return r.exit_code;
    } catch (const cuspidal::UsageError& e) {
        return emit_error(json, command, "usage", e.what(), kExitUsage);
    } catch (const cuspidal::Inconclusive& e) {
        return emit_error(json, command, "inconclusive", e.what(), kExitInconclusive);
    } catch (const cuspidal::InternalError& e) {
        return emit_error(json, command, "internal", e.what(), kExitInternal);
    } catch (const std::exception& e) {
        return emit_error(json, command, "internal", e.what(), kExitInternal);
    }
}
