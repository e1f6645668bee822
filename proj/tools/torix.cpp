#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "torix/cohomology.hpp"
#include "torix/corpus.hpp"
#include "torix/divisors.hpp"
#include "torix/errors.hpp"
#include "torix/intersection.hpp"
#include "torix/io.hpp"
#include "torix/positivity.hpp"
#include "torix/workflows.hpp"

using namespace torix;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, BadInput = 1, Violation = 2 };

struct Output {
    std::ostringstream text;
    Json json = Json::object();
    bool violation = false;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string q(const Rational& r) { return to_string(r); }

Json cone_json(const Cone& c) {
    Json a = Json::array();
    for (std::size_t r : c.rays())
        a.push_back(r);
    return a;
}

Json hvec_json(const std::vector<std::size_t>& h) {
    Json a = Json::array();
    for (std::size_t x : h)
        a.push_back(x);
    return a;
}

// Positional arguments shared by most commands.
struct Inputs {
    std::string fan_path;
    std::string divisor;

    Fan fan() const { return read_fan_file(fan_path); }
};

// A divisor argument is either literal "a1,...,ad" or a file containing it.
std::string divisor_text(const std::string& arg, std::string& source) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) {
        source = arg;
        return read_text_file(arg);
    }
    source = "divisor";
    return arg;
}

QDivisor load_q(const Fan& fan, const std::string& arg) {
    std::string source;
    std::string text = divisor_text(arg, source);
    return parse_divisor(text, fan.ray_count(), source);
}

WeilDivisor load_weil(const Fan& fan, const std::string& arg) {
    std::string source;
    std::string text = divisor_text(arg, source);
    return parse_weil_divisor(text, fan.ray_count(), source);
}

void warn_projectivity(const Fan& fan) {
    if (auto w = projectivity_warning(fan))
        std::cerr << "warning: " << *w << "\n";
}

void print_table(Output& out, const CohomologyTable& t) {
    for (std::size_t i = 0; i < t.h.size(); ++i)
        out.text << "h^" << i << " = " << t.h[i] << "\n";
    out.json["h"] = hvec_json(t.h);
    if (!t.per_degree.empty()) {
        Json pd = Json::array();
        for (const auto& [u, dims] : t.per_degree) {
            out.text << "  u = (" << to_string(u) << "):";
            for (std::size_t i = 0; i < dims.size(); ++i)
                if (dims[i] != 0)
                    out.text << " h^" << i << " = " << dims[i];
            out.text << "\n";
            Json item;
            item["u"] = u;
            item["h"] = hvec_json(dims);
            pd.push_back(item);
        }
        out.json["per_degree"] = pd;
    }
}

// ---- commands ---------------------------------------------------------------

void cmd_classify(const Inputs& in, Output& out) {
    Fan fan = in.fan();
    bool complete = is_complete(fan);
    out.text << "rank: " << fan.rank() << "\n"
             << "rays: " << fan.ray_count() << "\n"
             << "maximal cones: " << fan.max_cones().size() << "\n"
             << "simplicial: " << yes_no(is_simplicial(fan)) << "\n"
             << "smooth: " << yes_no(is_smooth(fan)) << "\n"
             << "complete: " << yes_no(complete) << "\n"
             << "projective space: " << yes_no(is_projective_space(fan)) << "\n";
    out.json["rank"] = fan.rank();
    out.json["rays"] = fan.ray_count();
    out.json["max_cones"] = fan.max_cones().size();
    out.json["simplicial"] = is_simplicial(fan);
    out.json["smooth"] = is_smooth(fan);
    out.json["complete"] = complete;
    out.json["projective_space"] = is_projective_space(fan);
    if (complete) {
        out.text << "walls: " << walls(fan).size() << "\n";
        out.json["walls"] = walls(fan).size();
        warn_projectivity(fan);
    }
}

void cmd_clgroup(const Inputs& in, Output& out) {
    Fan fan = in.fan();
    ClassGroup cl = class_group(fan);
    out.text << "class group: " << cl.str() << "\n";
    out.json["class_group"] = cl.str();
    out.json["free_rank"] = cl.free_rank();
    out.json["torsion"] = cl.torsion_moduli();
    if (!in.divisor.empty()) {
        WeilDivisor d = load_weil(fan, in.divisor);
        DivisorClass c = cl.project(d);
        out.text << "class: " << c.str() << "\n"
                 << "principal: " << yes_no(is_principal(fan, d)) << "\n";
        out.json["class"] = {{"free", c.free_part}, {"torsion", c.torsion_part}};
        out.json["principal"] = is_principal(fan, d);
    }
}

void cmd_cartier(const Inputs& in, Output& out) {
    Fan fan = in.fan();
    QDivisor d = load_q(fan, in.divisor);
    auto data = cartier_data(fan, d);
    if (auto* cd = std::get_if<CartierData>(&data)) {
        out.text << "cartier: yes\n";
        out.json["cartier"] = true;
        Json us = Json::array();
        for (std::size_t i = 0; i < fan.max_cones().size(); ++i) {
            out.text << "u" << fan.max_cones()[i].str() << " = (" << to_string(cd->u[i]) << ")\n";
            us.push_back({{"cone", cone_json(fan.max_cones()[i])}, {"u", cd->u[i]}});
        }
        out.json["local_data"] = us;
        return;
    }
    const auto& nc = std::get<NotCartier>(data);
    out.text << "cartier: no\n"
             << "witness: " << nc.witness.str() << "\n"
             << "q-cartier: " << yes_no(nc.q_cartier) << "\n";
    out.json["cartier"] = false;
    out.json["witness"] = cone_json(nc.witness);
    out.json["q_cartier"] = nc.q_cartier;
    if (auto m = q_cartier_index(fan, d)) {
        out.text << "index: " << *m << "\n";
        out.json["index"] = *m;
    }
}

void cmd_intersect(const Inputs& in, Output& out) {
    Fan fan = in.fan();
    QDivisor d = load_q(fan, in.divisor);
    Json rows = Json::array();
    for (const auto& w : wall_degrees(fan, d)) {
        out.text << w.wall.tau.str() << ": " << q(w.value) << "\n";
        rows.push_back({{"wall", cone_json(w.wall.tau)}, {"degree", q(w.value)}});
    }
    out.json["walls"] = rows;
}

void cmd_positivity(const Inputs& in, Output& out) {
    Fan fan = in.fan();
    WeilDivisor l = load_weil(fan, in.divisor);
    warn_projectivity(fan);
    PositivityProfile p = positivity_profile(fan, l);
    out.text << "nef: " << yes_no(p.nef) << "\n"
             << "globally generated: " << yes_no(p.globally_generated) << "\n"
             << "ample: " << yes_no(p.ample) << "\n"
             << "very ample: " << (p.very_ample ? yes_no(*p.very_ample) : "n/a (fan not smooth)") << "\n"
             << "big: " << (p.big ? yes_no(*p.big) : "n/a (not nef)") << "\n"
             << "min degree: " << q(p.min_degree) << "\n";
    if (p.witness)
        out.text << "witness wall: " << p.witness->tau.str() << "\n";
    out.json["nef"] = p.nef;
    out.json["globally_generated"] = p.globally_generated;
    out.json["ample"] = p.ample;
    out.json["very_ample"] = p.very_ample ? Json(*p.very_ample) : Json(nullptr);
    out.json["big"] = p.big ? Json(*p.big) : Json(nullptr);
    out.json["min_degree"] = q(p.min_degree);
    out.json["witness"] = p.witness ? cone_json(p.witness->tau) : Json(nullptr);
}

void cmd_factorize(const Inputs& in, Output& out) {
    Fan fan = in.fan();
    WeilDivisor l = load_weil(fan, in.divisor);
    warn_projectivity(fan);
    Factorization f = nef_big_factorization(fan, l);
    out.text << "coarse fan:\n" << emit_fan(f.coarse) << "divisor: " << f.divisor.str() << "\n"
             << "ray map:";
    for (std::size_t i = 0; i < f.ray_map.size(); ++i)
        out.text << " " << i << "->" << f.ray_map[i];
    out.text << "\ncone map:";
    for (std::size_t i = 0; i < f.cone_map.size(); ++i)
        out.text << " " << fan.max_cones()[i].str() << "->" << f.coarse.max_cones()[f.cone_map[i]].str();
    out.text << "\n";
    out.json["coarse"] = Json::parse(emit_fan(f.coarse));
    out.json["divisor"] = f.divisor.coeffs;
    out.json["ray_map"] = f.ray_map;
    out.json["cone_map"] = f.cone_map;
}

struct CohomologyArgs {
    bool per_degree = false;
    int omega = -1;
};

void cmd_cohomology(const Inputs& in, const CohomologyArgs& args, Output& out) {
    Fan fan = in.fan();
    WeilDivisor d = load_weil(fan, in.divisor);
    CohomologyOptions opts;
    opts.per_degree = args.per_degree;
    if (args.omega >= 0) {
        if (static_cast<std::size_t>(args.omega) > fan.rank())
            throw InputError("--omega must be in 0.." + std::to_string(fan.rank()));
        out.json["omega"] = args.omega;
        print_table(out, omega_cohomology_table(fan, static_cast<std::size_t>(args.omega), d, opts));
    } else {
        print_table(out, cohomology_table(fan, d, opts));
    }
}

void cmd_frobenius(const Inputs& in, Int p, Output& out) {
    Fan fan = in.fan();
    auto [one, many] = frobenius_split_dims(fan, p);
    std::size_t top = fan.rank() + 1;
    out.text << "H^" << top << "_B(S) at (-1,...,-1): " << one << "\n"
             << "H^" << top << "_B(S) at (-" << p << ",...,-" << p << "): " << many << "\n";
    out.json["p"] = p;
    out.json["level"] = top;
    out.json["dims"] = {one, many};
}

struct AuditArgs {
    std::string e;
    Int m = 1;
};

void cmd_audit(const Inputs& in, const AuditArgs& args, Output& out) {
    Fan fan = in.fan();
    WeilDivisor d = load_weil(fan, in.divisor);
    QDivisor e = load_q(fan, args.e);
    VanishingAudit a = vanishing_audit(fan, d, e, args.m);
    Json hyp = Json::array();
    for (const auto& [name, ok] : a.hypotheses) {
        out.text << "  " << name << ": " << yes_no(ok) << "\n";
        hyp.push_back({{"hypothesis", name}, {"holds", ok}});
    }
    out.json["hypotheses"] = hyp;
    if (a.table)
        print_table(out, *a.table);
    std::string verdict = !a.hypotheses_hold ? "hypotheses not met"
                          : a.violation      ? "THEOREM VIOLATION"
                                             : "vanishing holds";
    out.text << "verdict: " << verdict << "\n";
    out.json["verdict"] = verdict;
    out.violation = a.violation;
}

struct FujitaArgs {
    std::vector<std::size_t> primes;
    bool very_ample = false;
};

void cmd_fujita(const Inputs& in, const FujitaArgs& args, Output& out) {
    Fan fan = in.fan();
    WeilDivisor l = load_weil(fan, in.divisor);
    warn_projectivity(fan);
    for (std::size_t j : args.primes)
        if (j >= fan.ray_count())
            throw InputError("--primes: ray index " + std::to_string(j) + " out of range 0.." +
                             std::to_string(fan.ray_count() - 1));
    FujitaVerdict v = args.very_ample ? fujita_very_ample(fan, l, args.primes)
                                      : fujita_global_generation(fan, l, args.primes);
    out.text << "outcome: " << to_string(v.outcome) << "\n"
             << "min degree: " << q(v.min_degree) << "\n"
             << "residual: " << v.residual.str() << "\n";
    if (v.failing_wall)
        out.text << "failing wall: " << v.failing_wall->tau.str() << "\n";
    if (!v.detail.empty())
        out.text << "detail: " << v.detail << "\n";
    out.json["outcome"] = to_string(v.outcome);
    out.json["min_degree"] = q(v.min_degree);
    out.json["residual"] = v.residual.coeffs;
    out.json["failing_wall"] = v.failing_wall ? cone_json(v.failing_wall->tau) : Json(nullptr);
    out.json["detail"] = v.detail;
}

void cmd_blowup(const Inputs& in, const std::string& cone, Output& out) {
    Fan fan = in.fan();
    Subdivision s = star_subdivision(fan, parse_cone(cone, fan.ray_count()));
    out.text << emit_fan(s.fan);
    out.json["fan"] = Json::parse(emit_fan(s.fan));
    out.json["new_ray"] = s.new_ray;
}

void cmd_surjectivity(const Inputs& in, const std::vector<std::string>& target_args, Output& out) {
    Fan fan = in.fan();
    WeilDivisor l = load_weil(fan, in.divisor);
    std::vector<Cone> targets;
    for (const auto& t : target_args)
        targets.push_back(parse_cone(t, fan.ray_count()));
    SurjectivityReport r = run_surjectivity(fan, l, targets);
    out.text << "blow-up rays: " << r.blowup.ray_count() << "\n"
             << "exceptional rays: " << to_string(IntVector(r.exceptional.begin(), r.exceptional.end())) << "\n"
             << "pullback: " << r.pulled_back.str() << "\n"
             << "pullback minus exceptional: " << r.twisted.str() << "\n";
    print_table(out, r.table);
    out.text << "h^0(L) = " << r.h0_l << "\n";
    Json restr = Json::array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        out.text << "h^0(L|V(" << targets[i].str() << ")) = " << r.h0_targets[i] << "\n";
        restr.push_back({{"target", cone_json(targets[i])}, {"h0", r.h0_targets[i]}});
    }
    out.text << "surjective: " << (r.surjective ? "yes" : "no (THEOREM VIOLATION)") << "\n";
    out.json["blowup"] = Json::parse(emit_fan(r.blowup));
    out.json["exceptional"] = r.exceptional;
    out.json["pullback"] = r.pulled_back.coeffs;
    out.json["twisted"] = r.twisted.coeffs;
    out.json["h0_L"] = r.h0_l;
    out.json["restrictions"] = restr;
    out.json["surjective"] = r.surjective;
    out.violation = !r.surjective;
}

struct CorpusArgs {
    std::uint64_t seed = 0;
    std::size_t count = 1, dim = 2, steps = 0;
    std::string out_dir = ".";
};

void cmd_corpus(const CorpusArgs& args, Output& out) {
    auto files = run_corpus(args.seed, args.count, args.dim, args.steps);
    std::filesystem::path dir(args.out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw InputError(args.out_dir + ": " + ec.message());
    Json written = Json::array();
    for (const auto& f : files) {
        std::ofstream os(dir / f.path, std::ios::binary);
        if (!os)
            throw InputError((dir / f.path).string() + ": cannot write");
        os << f.content;
        out.text << f.path << "\n";
        written.push_back(f.path);
    }
    out.json["files"] = written;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Positivity and cohomology of torus-invariant divisors on toric varieties"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Machine-readable JSON output");

    Output out;
    std::function<void()> run;

    auto fan_arg = [](CLI::App* c, Inputs& in) { c->add_option("fan", in.fan_path, "Fan file")->required(); };
    auto div_arg = [](CLI::App* c, Inputs& in) {
        c->add_option("divisor", in.divisor, "Coefficients a1,...,ad or a file containing them")->required();
    };

    Inputs in;
    CohomologyArgs coh;
    AuditArgs audit;
    FujitaArgs fuj;
    CorpusArgs corpus;
    Int prime = 2;
    std::string cone;
    std::vector<std::string> targets;

    auto* c = app.add_subcommand("classify", "Simplicial, smooth and complete tests");
    fan_arg(c, in);
    c->callback([&] { run = [&] { cmd_classify(in, out); }; });

    c = app.add_subcommand("clgroup", "Class group, and the class of a divisor");
    fan_arg(c, in);
    c->add_option("divisor", in.divisor, "Optional divisor");
    c->callback([&] { run = [&] { cmd_clgroup(in, out); }; });

    c = app.add_subcommand("cartier", "Cartier data or a witness cone");
    fan_arg(c, in);
    div_arg(c, in);
    c->callback([&] { run = [&] { cmd_cartier(in, out); }; });

    c = app.add_subcommand("intersect", "Degree on every invariant curve");
    fan_arg(c, in);
    div_arg(c, in);
    c->callback([&] { run = [&] { cmd_intersect(in, out); }; });

    c = app.add_subcommand("positivity", "Nef, globally generated, ample, very ample, big");
    fan_arg(c, in);
    div_arg(c, in);
    c->callback([&] { run = [&] { cmd_positivity(in, out); }; });

    c = app.add_subcommand("factorize", "Normal fan of the polytope of a nef and big divisor");
    fan_arg(c, in);
    div_arg(c, in);
    c->callback([&] { run = [&] { cmd_factorize(in, out); }; });

    c = app.add_subcommand("cohomology", "Dimensions h^i(O(D)) or h^i(Omega^j(D))");
    fan_arg(c, in);
    div_arg(c, in);
    c->add_flag("--per-degree", coh.per_degree, "List nonzero degree pieces");
    c->add_option("--omega", coh.omega, "Twist of the sheaf of j-forms")->check(CLI::NonNegativeNumber);
    c->callback([&] { run = [&] { cmd_cohomology(in, coh, out); }; });

    c = app.add_subcommand("frobenius", "Top local cohomology of the Cox ring at -1 and -p");
    fan_arg(c, in);
    c->add_option("-p", prime, "Prime")->required();
    c->callback([&] { run = [&] { cmd_frobenius(in, prime, out); }; });

    c = app.add_subcommand("audit", "Vanishing for D with a fractional boundary E");
    fan_arg(c, in);
    div_arg(c, in);
    c->add_option("E", audit.e, "Boundary divisor")->required();
    c->add_option("m", audit.m, "Multiplier making m(D+E) integral")->required();
    c->callback([&] { run = [&] { cmd_audit(in, audit, out); }; });

    c = app.add_subcommand("fujita", "Global generation or very ampleness of L minus prime divisors");
    fan_arg(c, in);
    div_arg(c, in);
    c->add_option("--primes", fuj.primes, "Ray indices of the subtracted prime divisors")->delimiter(',');
    c->add_flag("--very-ample", fuj.very_ample, "Check very ampleness instead");
    c->callback([&] { run = [&] { cmd_fujita(in, fuj, out); }; });

    c = app.add_subcommand("blowup", "Star subdivision at a smooth cone");
    fan_arg(c, in);
    c->add_option("cone", cone, "Ray indices, e.g. 0,1")->required();
    c->callback([&] { run = [&] { cmd_blowup(in, cone, out); }; });

    c = app.add_subcommand("surjectivity", "h^1 of pi^*L minus exceptional divisors");
    fan_arg(c, in);
    div_arg(c, in);
    c->add_option("--target", targets, "Cone to blow up, e.g. 0,1 (repeatable)")->required();
    c->callback([&] { run = [&] { cmd_surjectivity(in, targets, out); }; });

    c = app.add_subcommand("corpus", "Write a deterministic corpus of smooth complete fans");
    c->add_option("--seed", corpus.seed, "Seed");
    c->add_option("--count", corpus.count, "Number of fans");
    c->add_option("--dim", corpus.dim, "Dimension 1..4");
    c->add_option("--steps", corpus.steps, "Blow-ups per fan");
    c->add_option("--out", corpus.out_dir, "Output directory");
    c->callback([&] { run = [&] { cmd_corpus(corpus, out); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return BadInput;
    }

    try {
        run();
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    } catch (const TheoremViolation& e) {
        std::cerr << "THEOREM VIOLATION: " << e.what() << "\n";
        return Violation;
    } catch (const InternalInconsistency& e) {
        std::cerr << "THEOREM VIOLATION: internal inconsistency: " << e.what() << "\n";
        return Violation;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    }

    if (json)
        std::cout << out.json.dump(2) << "\n";
    else
        std::cout << out.text.str();
    return out.violation ? Violation : Ok;
}
