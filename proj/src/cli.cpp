#include "crossprod/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "crossprod/certificate.hpp"
#include "crossprod/parse.hpp"
#include "crossprod/properties.hpp"
#include "crossprod/semigroup.hpp"

namespace crossprod {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInputError = 2;
constexpr int kExitInconclusive = 3;

OrderRule rule_of(const std::string& name) {
    if (name == "deglex") return OrderRule::Deglex;
    if (name == "paper") return OrderRule::PaperLiteral;
    throw CLI::ValidationError("--order", "expected deglex or paper");
}

int report_exit(PropertyReport::Verdict v) {
    switch (v) {
        case PropertyReport::Verdict::Pass: return kExitPass;
        case PropertyReport::Verdict::Fail: return kExitViolation;
        default: return kExitInconclusive;
    }
}

struct Invocation {
    std::string pres_path;
    std::vector<std::string> elements;
    std::string order_name = "deglex";
    std::string sample_spec;
    std::string sub_kind = "a1";
    std::vector<std::string> sub_gens;
    std::string gen_name;
    std::vector<std::string> ideal_gens;
    std::string cert_path;
    int degree_cap = 10;
    int cofactor_bound = 6;
    int syzygy_bound = 6;
    int degree_bound = 4;
    int subset_bound = 4;
    int expansion_bound = 6;
    int freeness_bound = 6;
    int sphere_n = 3;
    long trials = 10000;
    long consistency_trials = 200;
    std::uint64_t seed = 1;
    bool strict = true;
    bool machine = false;
};

SubalgebraSpec make_sub(const Invocation& inv, const AlgebraPresentation& pres) {
    if (inv.sub_kind == "a1") {
        if (pres.num_generators() == 0)
            throw CLI::ValidationError("--sub", "a1 needs at least one generator");
        return SubalgebraSpec::a1();
    }
    if (inv.sub_kind == "zero") return SubalgebraSpec::zero_part();
    if (inv.sub_kind == "user") {
        if (inv.sub_gens.empty())
            throw CLI::ValidationError("--sub", "user subalgebra needs --gen elements");
        std::vector<CrossedElement> gens;
        for (const auto& g : inv.sub_gens) gens.push_back(parse_element(g, pres));
        return SubalgebraSpec::user(std::move(gens), inv.expansion_bound);
    }
    throw CLI::ValidationError("--sub", "expected a1, zero, or user");
}

int cmd_nf(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto e = parse_element(inv.elements.at(0), pres);
    out << element_str(e, pres, rule_of(inv.order_name)) << "\n";
    return kExitPass;
}

int cmd_mul(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto e1 = parse_element(inv.elements.at(0), pres);
    auto e2 = parse_element(inv.elements.at(1), pres);
    out << element_str(multiply(pres, e1, e2), pres, rule_of(inv.order_name)) << "\n";
    return kExitPass;
}

int cmd_type(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto e = parse_element(inv.elements.at(0), pres);
    out << tuple_str(type_of(e, rule_of(inv.order_name))) << "\n";
    return kExitPass;
}

int cmd_check_consistency(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto rep = consistency_check(pres, inv.consistency_trials, inv.seed);
    out << rep.str();
    return rep.pass ? kExitPass : kExitViolation;
}

int cmd_check_primality(const Invocation& inv, std::ostream& out, bool scp) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    SubalgebraSpec sub = make_sub(inv, pres);
    PropertyReport rep =
        scp ? check_scp(sub, pres, inv.trials, inv.seed, inv.degree_bound)
            : check_completely_prime(sub, pres, inv.trials, inv.seed, inv.degree_bound);
    out << rep.str(pres);
    return report_exit(rep.verdict);
}

int cmd_check_ordered_like(const Invocation& inv, std::ostream& out) {
    FiniteSemigroupSample sample;
    std::ifstream f(inv.sample_spec);
    if (f.good()) {
        sample = FiniteSemigroupSample::load(f);
    } else {
        sample = FiniteSemigroupSample::builtin(inv.sample_spec);
    }
    auto rep = check_ordered_like(sample, inv.subset_bound, inv.strict);
    out << rep.str(sample);
    switch (rep.verdict) {
        case OrderedLikeReport::Verdict::Pass: return kExitPass;
        case OrderedLikeReport::Verdict::Fail: return kExitViolation;
        default: return kExitInconclusive;
    }
}

int cmd_check_freeness(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto rep = check_A1_freeness(pres, inv.freeness_bound);
    out << rep.str();
    return rep.pass ? kExitPass : kExitViolation;
}

int cmd_check_filtration(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto rep = check_filtration_multiplicative(pres, inv.trials, inv.seed, inv.degree_bound);
    out << rep.str(pres);
    return report_exit(rep.verdict);
}

int cmd_unimodular(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto a = parse_element(inv.elements.at(0), pres);
    auto b = parse_element(inv.elements.at(1), pres);
    auto row = find_cofactors(a, b, inv.cofactor_bound, pres);
    if (!row) {
        out << "INCONCLUSIVE at cofactor bound " << inv.cofactor_bound << "\n";
        return kExitInconclusive;
    }
    if (inv.machine) {
        out << certificate_unimodular_row(*row, pres);
    } else {
        out << "cofactor.1 = " << element_str(row->u(), pres) << "\n";
        out << "cofactor.2 = " << element_str(row->v(), pres) << "\n";
        out << "VERIFIED\n";
    }
    return kExitPass;
}

int cmd_ideal(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto a = parse_element(inv.elements.at(0), pres);
    auto b = parse_element(inv.elements.at(1), pres);
    auto row = find_cofactors(a, b, inv.cofactor_bound, pres);
    if (!row) {
        out << "INCONCLUSIVE: row not unimodular at cofactor bound " << inv.cofactor_bound
            << "\n";
        return kExitInconclusive;
    }
    auto ideal = build_intersection_ideal(*row, inv.syzygy_bound, pres);
    if (!ideal) {
        out << "INCONCLUSIVE: empty syzygy space at bound " << inv.syzygy_bound << "\n";
        return kExitInconclusive;
    }
    if (inv.machine) {
        out << certificate_intersection_ideal(*ideal, pres);
    } else {
        out << "generators = " << ideal->generators.size() << "\n";
        for (size_t i = 0; i < ideal->generators.size(); ++i)
            out << "generator." << i + 1 << " = " << element_str(ideal->generators[i], pres)
                << "\n";
    }
    return kExitPass;
}

int run_noncyclic(const IdealSpec& ideal, const AlgebraPresentation& pres, const Invocation& inv,
                  std::ostream& out) {
    auto outcome = certify_noncyclic(ideal, inv.degree_cap, inv.cofactor_bound, pres);
    switch (outcome.status) {
        case NonCyclicityOutcome::Status::Certified:
            if (inv.machine) {
                out << certificate_noncyclicity(ideal, *outcome.cert, pres);
            } else {
                out << "CERTIFIED non-cyclic\n";
                out << "d0 = " << outcome.cert->d0 << "\n";
                out << "d-witness = " << outcome.cert->d_witness << "\n";
                out << "dim-ideal-at-witness = " << outcome.cert->dim_ideal_at_witness << "\n";
                out << "dim-full-at-witness = " << outcome.cert->dim_full_at_witness << "\n";
            }
            return kExitPass;
        case NonCyclicityOutcome::Status::Inconclusive: {
            out << "INCONCLUSIVE: " << outcome.reason << "\n";
            for (const auto& [d, v] : outcome.dim_ideal) {
                long full = outcome.d0 >= 0 && d >= outcome.d0
                                ? pbw_count(pres, d - outcome.d0)
                                : 0;
                out << "dim." << d << " = " << v << " " << full << "\n";
            }
            return kExitInconclusive;
        }
        default:
            out << "REFUSED: " << outcome.reason << "\n";
            return kExitInputError;
    }
}

int cmd_certify_noncyclic(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    auto a = parse_element(inv.elements.at(0), pres);
    auto b = parse_element(inv.elements.at(1), pres);
    auto row = find_cofactors(a, b, inv.cofactor_bound, pres);
    if (!row) {
        out << "INCONCLUSIVE: row not unimodular at cofactor bound " << inv.cofactor_bound
            << "\n";
        return kExitInconclusive;
    }
    auto ideal = build_intersection_ideal(*row, inv.syzygy_bound, pres);
    if (!ideal) {
        out << "INCONCLUSIVE: empty syzygy space at bound " << inv.syzygy_bound << "\n";
        return kExitInconclusive;
    }
    return run_noncyclic(*ideal, pres, inv, out);
}

int cmd_lift(const Invocation& inv, std::ostream& out) {
    auto pres_b = AlgebraPresentation::load(inv.pres_path);
    if (pres_b.num_generators() < 2)
        throw CLI::ValidationError("--pres", "lift target needs at least two generators");
    auto pres_sub = pres_b.restrict_to_first_generator();
    auto a = parse_element(inv.elements.at(0), pres_sub);
    auto b = parse_element(inv.elements.at(1), pres_sub);
    auto row = find_cofactors(a, b, inv.cofactor_bound, pres_sub);
    if (!row) {
        out << "INCONCLUSIVE: row not unimodular in the subalgebra at cofactor bound "
            << inv.cofactor_bound << "\n";
        return kExitInconclusive;
    }
    auto ideal = build_intersection_ideal(*row, inv.syzygy_bound, pres_sub);
    if (!ideal) {
        out << "INCONCLUSIVE: empty syzygy space at bound " << inv.syzygy_bound << "\n";
        return kExitInconclusive;
    }
    IdealSpec lifted = lift_ideal(*ideal, pres_sub, pres_b);
    return run_noncyclic(lifted, pres_b, inv, out);
}

int cmd_stafford(const Invocation& inv, std::ostream& out) {
    auto pres = AlgebraPresentation::load(inv.pres_path);
    if (inv.ideal_gens.empty())
        throw CLI::ValidationError("ideal", "needs at least one ideal generator");
    std::vector<CommPoly> gens;
    for (const auto& g : inv.ideal_gens) gens.push_back(parse_poly(g, pres.base));
    int gi = 0;
    if (!inv.gen_name.empty()) {
        gi = -1;
        for (int g = 0; g < pres.num_generators(); ++g) {
            if (pres.lie.generator_names[static_cast<size_t>(g)] == inv.gen_name ||
                AlgebraPresentation::canonical_gen_name(g) == inv.gen_name)
                gi = g;
        }
        if (gi < 0) throw CLI::ValidationError("--gen", "unknown generator " + inv.gen_name);
    }
    if (pres.num_generators() == 0)
        throw CLI::ValidationError("--pres", "stafford needs a presentation with a generator");
    const DerivationSpec& delta = pres.derivations.deltas.at(static_cast<size_t>(gi));
    auto rep = derivation_stability(gens, delta, inv.cofactor_bound, pres.base);
    out << rep.str(pres.base.var_names);
    return rep.verdict == StabilityVerdict::Stable
               ? kExitPass
               : rep.verdict == StabilityVerdict::Unstable ? kExitViolation : kExitInconclusive;
}

int cmd_sphere(const Invocation& inv, std::ostream& out) {
    SphereInstance inst = sphere_column(inv.sphere_n);
    StableFreenessWitness w = cokernel_presentation(inst);
    if (inv.machine) {
        out << certificate_stable_freeness(w, inst.pres);
    } else {
        out << "sum-of-squares = 1 VERIFIED\n";
        out << "idempotent = VERIFIED\n";
        out << "trace = " << element_str(w.trace, inst.pres) << "\n";
        if (w.rank) out << "rank = " << *w.rank << "\n";
    }
    return kExitPass;
}

int cmd_verify(const Invocation& inv, std::ostream& out, std::ostream& err) {
    std::ifstream in(inv.cert_path);
    if (!in) {
        err << "error: cannot open certificate '" << inv.cert_path << "'\n";
        return kExitInputError;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    VerifyResult res = verify_certificate(buf.str());
    if (res.ok) {
        out << "VALID " << res.kind << "\n";
        return kExitPass;
    }
    out << "INVALID: " << res.reason << "\n";
    return kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{
        "crossprod: exact kernel for crossed products of polynomial algebras with\n"
        "universal enveloping algebras: PBW normal forms, structural property\n"
        "checks, unimodular rows, stably free right ideals, and certificates."};
    app.require_subcommand(1);
    Invocation inv;

    auto add_pres = [&](CLI::App* sub) {
        sub->add_option("--pres", inv.pres_path, "presentation file or preset name")->required();
    };
    auto add_order = [&](CLI::App* sub) {
        sub->add_option("--order", inv.order_name, "term order: deglex or paper");
    };
    auto add_machine = [&](CLI::App* sub) {
        sub->add_flag("--machine", inv.machine, "emit the machine certificate format");
    };

    auto* nf = app.add_subcommand("nf", "normal form of an element expression");
    add_pres(nf);
    add_order(nf);
    nf->add_option("expr", inv.elements, "element expression")->required()->expected(1);

    auto* mul = app.add_subcommand("mul", "product of two elements");
    add_pres(mul);
    add_order(mul);
    mul->add_option("expr", inv.elements, "two element expressions")->required()->expected(2);

    auto* type = app.add_subcommand("type", "type of the order-maximal monomial");
    add_pres(type);
    add_order(type);
    type->add_option("expr", inv.elements, "element expression")->required()->expected(1);

    auto* cons = app.add_subcommand("check-consistency", "Jacobi and associativity validation");
    add_pres(cons);
    cons->add_option("--trials", inv.consistency_trials, "random word trials");
    cons->add_option("--seed", inv.seed, "sampler seed");

    auto add_primality_opts = [&](CLI::App* sub) {
        add_pres(sub);
        sub->add_option("--sub", inv.sub_kind, "subalgebra: a1, zero, or user");
        sub->add_option("--gen", inv.sub_gens, "user subalgebra generator (repeatable)");
        sub->add_option("--trials", inv.trials, "sample pairs");
        sub->add_option("--seed", inv.seed, "sampler seed");
        sub->add_option("--degree-bound", inv.degree_bound, "sample degree bound");
        sub->add_option("--expansion-bound", inv.expansion_bound,
                        "membership expansion bound for user subalgebras");
    };
    auto* prime = app.add_subcommand("check-prime", "completely prime subalgebra sampler");
    add_primality_opts(prime);
    auto* scp = app.add_subcommand("check-scp", "strongly completely prime subalgebra sampler");
    add_primality_opts(scp);

    auto* ol = app.add_subcommand("check-ordered-like", "ordered-like semigroup check");
    ol->add_option("sample", inv.sample_spec,
                   "built-in (nat-plus:<b>, nat-max:<b>, natk-plus:<k>:<b>) or table file")
        ->required();
    ol->add_option("--subset-bound", inv.subset_bound, "max subset size");
    ol->add_flag("--strict,!--non-strict", inv.strict,
                 "require the unique-decomposition witness to be nonzero");

    auto* fr = app.add_subcommand("check-freeness", "module dimension count over the g1 subalgebra");
    add_pres(fr);
    fr->add_option("--degree-bound", inv.freeness_bound, "max degree checked");

    auto* filt = app.add_subcommand("check-filtration", "filtration submultiplicativity sampler");
    add_pres(filt);
    filt->add_option("--trials", inv.trials, "sample pairs");
    filt->add_option("--seed", inv.seed, "sampler seed");
    filt->add_option("--degree-bound", inv.degree_bound, "sample degree bound");

    auto* uni = app.add_subcommand("unimodular", "find and verify right cofactors for (a, b)");
    add_pres(uni);
    add_machine(uni);
    uni->add_option("expr", inv.elements, "row entries a b")->required()->expected(2);
    uni->add_option("--cofactor-bound", inv.cofactor_bound, "cofactor degree bound");

    auto* ideal = app.add_subcommand("ideal", "generators of aB intersect bB from syzygies");
    add_pres(ideal);
    add_machine(ideal);
    ideal->add_option("expr", inv.elements, "row entries a b")->required()->expected(2);
    ideal->add_option("--cofactor-bound", inv.cofactor_bound, "cofactor degree bound");
    ideal->add_option("--syzygy-bound", inv.syzygy_bound, "syzygy degree bound");

    auto add_cert_opts = [&](CLI::App* sub) {
        add_pres(sub);
        add_machine(sub);
        sub->add_option("expr", inv.elements, "row entries a b")->required()->expected(2);
        sub->add_option("--degree-cap", inv.degree_cap, "max slice degree compared");
        sub->add_option("--cofactor-bound", inv.cofactor_bound, "cofactor degree bound");
        sub->add_option("--syzygy-bound", inv.syzygy_bound, "syzygy degree bound");
    };
    auto* cert = app.add_subcommand("certify-noncyclic",
                                    "non-cyclicity certificate for aB intersect bB");
    add_cert_opts(cert);

    auto* lift = app.add_subcommand(
        "lift", "build the ideal in the g1 subalgebra and certify its lift in B");
    add_cert_opts(lift);

    auto* staf = app.add_subcommand("stafford", "derivation stability of a commutative ideal");
    add_pres(staf);
    staf->add_option("ideal", inv.ideal_gens, "ideal generators (polynomials)")->required();
    staf->add_option("--gen", inv.gen_name, "generator whose derivation acts (default: first)");
    staf->add_option("--cofactor-bound", inv.cofactor_bound, "membership bound floor");

    auto* sph = app.add_subcommand("sphere", "quotient-ring column and cokernel idempotent");
    add_machine(sph);
    sph->add_option("n", inv.sphere_n, "number of variables (>= 3)")->required();

    auto* ver = app.add_subcommand("verify", "re-check a serialized certificate");
    ver->add_option("certificate", inv.cert_path, "certificate file")->required();

    std::vector<const char*> argv;
    argv.push_back("crossprod");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    try {
        if (nf->parsed()) return cmd_nf(inv, out);
        if (mul->parsed()) return cmd_mul(inv, out);
        if (type->parsed()) return cmd_type(inv, out);
        if (cons->parsed()) return cmd_check_consistency(inv, out);
        if (prime->parsed()) return cmd_check_primality(inv, out, false);
        if (scp->parsed()) return cmd_check_primality(inv, out, true);
        if (ol->parsed()) return cmd_check_ordered_like(inv, out);
        if (fr->parsed()) return cmd_check_freeness(inv, out);
        if (filt->parsed()) return cmd_check_filtration(inv, out);
        if (uni->parsed()) return cmd_unimodular(inv, out);
        if (ideal->parsed()) return cmd_ideal(inv, out);
        if (cert->parsed()) return cmd_certify_noncyclic(inv, out);
        if (lift->parsed()) return cmd_lift(inv, out);
        if (staf->parsed()) return cmd_stafford(inv, out);
        if (sph->parsed()) return cmd_sphere(inv, out);
        if (ver->parsed()) return cmd_verify(inv, out, err);
    } catch (const ParseError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const CLI::ValidationError& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& ex) {
        err << "error: " << ex.what() << "\n";
        return kExitInputError;
    }
    err << "error: no subcommand\n";
    return kExitInputError;
}

}  // namespace crossprod
