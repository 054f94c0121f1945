// skewx: calculator and structural probes for free skew extensions
// R<x1..xn; sigma, delta> with exact coefficient arithmetic.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "skewx/analysis.hpp"
#include "skewx/io.hpp"
#include "skewx/linalg.hpp"
#include "skewx/oracle.hpp"
#include "skewx/series.hpp"
#include "skewx/transforms.hpp"

namespace {

using namespace skewx;

std::string read_expr_arg(const std::string& arg) {
    if (arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

std::string render_vector(const std::vector<RingElem>& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += v[i].str();
    }
    return out + ")";
}

// rendering with a generator letter other than x (for target presentations)
std::string render_word_as(const Word& w, const std::string& letter) {
    if (w.empty()) return "1";
    std::string s;
    for (size_t i = 0; i < w.length(); ++i) {
        if (i) s += "*";
        s += letter + std::to_string(w.letter(i));
    }
    return s;
}

std::string render_poly_as(const SkewPoly& p, const std::string& letter) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        if (!out.empty()) out += " + ";
        if (w.empty())
            out += "[" + c.str() + "]";
        else if (c.is_one())
            out += render_word_as(w, letter);
        else
            out += render_word_as(w, letter) + "*[" + c.str() + "]";
    }
    return out;
}

struct CommonOpts {
    std::string ring_file;
    uint64_t seed = 0;
    std::string format = "text";
};

Ext load_ext(const CommonOpts& c) {
    if (c.ring_file.empty()) throw SpecError("this command needs --ring FILE");
    LoadOptions opts;
    opts.validation_seed = c.seed;
    return load_ring_spec_file(c.ring_file, opts);
}

void cmd_probe_megainjective(const CommonOpts& c, unsigned rmax) {
    Ext ext = load_ext(c);
    Rng rng(c.seed);
    MegaVerdict v = megainjective_probe(ext, rmax, SampleSpec{}, rng);
    if (c.format == "records") {
        if (v.witness)
            std::cout << "verdict=witness a=" << v.witness->a.str() << " r=" << v.witness->r
                      << " b=" << render_vector(v.witness->b) << "\n";
        else
            std::cout << "verdict=none rmax=" << v.r_max << "\n";
        return;
    }
    if (v.witness) {
        std::cout << "verdict: dependence witness found\n";
        std::cout << "a = " << v.witness->a.str() << "\n";
        std::cout << "r = " << v.witness->r << "\n";
        std::cout << "b = " << render_vector(v.witness->b) << "\n";
    } else {
        std::cout << "verdict: no dependence found\n";
        std::cout << "r_max = " << v.r_max << "\n";
        std::cout << "samples = " << v.sample_desc << "\n";
    }
}

void cmd_probe_prime(const CommonOpts& c, size_t degree_bound) {
    Ext ext = load_ext(c);
    Rng rng(c.seed);
    PrimeVerdict v = prime_probe(ext, degree_bound, SampleSpec{}, rng);
    if (c.format == "records") {
        switch (v.kind) {
            case PrimeVerdict::Kind::Certified: std::cout << "verdict=certified\n"; break;
            case PrimeVerdict::Kind::NotPrime:
                std::cout << "verdict=not_prime a=" << v.pair->first.str()
                          << " b=" << v.pair->second.str() << "\n";
                break;
            case PrimeVerdict::Kind::Inconclusive: std::cout << "verdict=inconclusive\n"; break;
        }
        return;
    }
    switch (v.kind) {
        case PrimeVerdict::Kind::Certified:
            std::cout << "verdict: prime certified\n";
            std::cout << "method: " << v.detail << "\n";
            break;
        case PrimeVerdict::Kind::NotPrime:
            std::cout << "verdict: not prime\n";
            std::cout << "witness: a = " << v.pair->first.str()
                      << ", b = " << v.pair->second.str() << "\n";
            std::cout << "method: " << v.detail << "\n";
            break;
        case PrimeVerdict::Kind::Inconclusive:
            std::cout << "verdict: inconclusive\n";
            std::cout << "reason: " << v.detail << "\n";
            break;
    }
}

void cmd_check_laws(const CommonOpts& c, size_t budget) {
    Ext ext = load_ext(c);  // construction already validates with the load seed
    Rng rng(c.seed);
    ValidationReport hom = validate_hom(*ext->sigma, rng, budget);
    ValidationReport lei = validate_leibniz(*ext->delta, rng, budget);
    std::cout << "sigma homomorphism law: " << (hom.passed ? "pass" : "FAIL") << " ("
              << hom.samples << " samples)\n";
    std::cout << "delta Leibniz law: " << (lei.passed ? "pass" : "FAIL") << " (" << lei.samples
              << " samples)\n";
    if (!hom.passed || !lei.passed) throw DomainError("law check failed");
}

void cmd_selftest(uint64_t seed) {
    // quick built-in confidence suite over two in-memory configs
    Rng rng(seed);
    size_t checks = 0;

    Ring qt = RingDescriptor::poly(RingDescriptor::rationals(), {"t"});
    auto sig = std::make_shared<SigmaHom>(SigmaHom::scalar(qt, 1));
    std::map<std::string, std::vector<RingElem>> ddt;
    ddt.emplace("t", std::vector<RingElem>{RingElem::one(qt)});
    auto del = std::make_shared<SigmaDerivation>(SigmaDerivation::from_images(sig, ddt));
    Ext ore = make_extension(sig, del, seed);

    Ring z6 = RingDescriptor::integers_mod(6);
    auto sig6 = std::make_shared<SigmaHom>(SigmaHom::scalar(z6, 2));
    auto del6 = std::make_shared<SigmaDerivation>(SigmaDerivation::zero(sig6));
    Ext zext = make_extension(sig6, del6, seed);

    for (const Ext& ext : {ore, zext}) {
        for (size_t s = 0; s < 40; ++s) {
            SkewPoly f = random_skew_poly(ext, rng, 2);
            SkewPoly g = random_skew_poly(ext, rng, 2);
            SkewPoly h = random_skew_poly(ext, rng, 2);
            if (!((f * g) * h == f * (g * h))) throw DomainError("selftest: associativity failed");
            if (!(f * (g + h) == f * g + f * h))
                throw DomainError("selftest: distributivity failed");
            if (!(oracle_mul(f, g) == f * g)) throw DomainError("selftest: oracle mismatch");
            checks += 3;
        }
    }
    std::cout << "selftest: " << checks << " checks passed\n";
}

void run_eval(const CommonOpts& c, const std::string& targets_file, const std::string& expr) {
    Ext ext = load_ext(c);
    std::ifstream in(targets_file);
    if (!in) throw SpecError("cannot open targets file '" + targets_file + "'");
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecError(std::string("targets file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("targets") || !doc.at("targets").is_array())
        throw SpecError("targets file needs a 'targets' array");
    std::vector<EvalTarget> targets;
    for (const auto& t : doc.at("targets")) {
        if (t.is_string()) {
            targets.emplace_back(parse_skew_poly(ext, t.get<std::string>()));
        } else if (t.is_array()) {
            size_t k = t.size();
            RingMatrix m(ext->ring, k, k);
            for (size_t i = 0; i < k; ++i) {
                if (!t.at(i).is_array() || t.at(i).size() != k)
                    throw SpecError("matrix targets must be square");
                for (size_t j = 0; j < k; ++j)
                    m.at(i, j) = parse_ring_literal(ext->ring, t.at(i).at(j).get<std::string>());
            }
            targets.emplace_back(std::move(m));
        } else {
            throw SpecError("targets must be expression strings or matrices");
        }
    }
    SkewPoly f = parse_skew_poly(ext, read_expr_arg(expr));
    EvalTarget out = eval_hom(ext, targets, f, c.seed);
    std::cout << render_eval_target(out) << "\n";
}

int dispatch(int argc, char** argv) {
    CLI::App app{"free skew extension calculator"};
    app.require_subcommand(1);

    CommonOpts common;
    uint64_t seed = 0;
    unsigned rmax = 3;
    size_t degree_bound = 4;
    size_t trunc = 0;
    bool use_oracle = false;

    auto add_common = [&](CLI::App* cmd, bool needs_ring = true) {
        if (needs_ring)
            cmd->add_option("--ring", common.ring_file, "ring spec file (JSON)")->required();
        cmd->add_option("--seed", seed, "deterministic seed");
        cmd->add_option("--format", common.format, "output format: text or records")
            ->check(CLI::IsMember({"text", "records"}));
    };

    std::string expr_a, expr_b, targets_file, c_expr, cs_list, map_expr, direction = "to-target";
    long f_trunc = -1, g_trunc = -1;

    CLI::App* normalize = app.add_subcommand("normalize", "normal form of an expression");
    add_common(normalize);
    normalize->add_option("expr", expr_a)->required();

    CLI::App* add = app.add_subcommand("add", "sum of two expressions");
    add_common(add);
    add->add_option("lhs", expr_a)->required();
    add->add_option("rhs", expr_b)->required();

    CLI::App* mul = app.add_subcommand("mul", "product of two expressions");
    add_common(mul);
    mul->add_flag("--oracle", use_oracle, "cross-check with the operator-model oracle");
    mul->add_option("lhs", expr_a)->required();
    mul->add_option("rhs", expr_b)->required();

    CLI::App* deg = app.add_subcommand("deg", "degree (max word length; -inf for 0)");
    add_common(deg);
    deg->add_option("expr", expr_a)->required();

    CLI::App* ord = app.add_subcommand("ord", "order (min word length); rejects 0");
    add_common(ord);
    ord->add_option("expr", expr_a)->required();

    CLI::App* leading = app.add_subcommand("leading", "deglex-leading term");
    add_common(leading);
    leading->add_option("expr", expr_a)->required();

    CLI::App* probe = app.add_subcommand("probe", "structural probes");
    probe->require_subcommand(1);
    CLI::App* mega = probe->add_subcommand("megainjective", "search dependence witnesses");
    add_common(mega);
    mega->add_option("--rmax", rmax, "maximal block power r");
    CLI::App* prime = probe->add_subcommand("prime", "primeness probe (triangular sigma)");
    add_common(prime);
    prime->add_option("--degree-bound", degree_bound, "word search depth");

    CLI::App* series = app.add_subcommand("series", "truncated series operations");
    series->require_subcommand(1);
    CLI::App* series_mul = series->add_subcommand("mul", "truncated product");
    add_common(series_mul);
    series_mul->add_option("--trunc", trunc, "output truncation order q")->required();
    series_mul->add_option("--f-trunc", f_trunc, "declared truncation of the left factor");
    series_mul->add_option("--g-trunc", g_trunc, "declared truncation of the right factor");
    series_mul->add_option("lhs", expr_a)->required();
    series_mul->add_option("rhs", expr_b)->required();

    CLI::App* transform = app.add_subcommand("transform", "changes of variables");
    transform->require_subcommand(1);
    CLI::App* killd = transform->add_subcommand("kill-delta", "remove the derivation");
    add_common(killd);
    killd->add_option("--c", c_expr, "central element with cI - sigma(c) invertible")->required();
    killd->add_option("--map", map_expr, "also map this expression");
    killd->add_option("--direction", direction, "to-target or to-source")
        ->check(CLI::IsMember({"to-target", "to-source"}));
    CLI::App* scal = transform->add_subcommand("scalarize", "make sigma scalar");
    add_common(scal);
    scal->add_option("--cs", cs_list, "comma-separated c_j with delta_j(c_j) invertible")
        ->required();
    scal->add_option("--map", map_expr, "also map this expression");
    scal->add_option("--direction", direction, "to-target or to-source")
        ->check(CLI::IsMember({"to-target", "to-source"}));

    CLI::App* eval = app.add_subcommand("eval", "evaluation homomorphism");
    add_common(eval);
    eval->add_option("--targets", targets_file, "JSON file with target elements")->required();
    eval->add_option("expr", expr_a)->required();

    CLI::App* check = app.add_subcommand("check", "validation");
    check->require_subcommand(1);
    CLI::App* laws = check->add_subcommand("laws", "sampled homomorphism/Leibniz laws");
    add_common(laws);
    size_t budget = 64;
    laws->add_option("--budget", budget, "sample budget");

    CLI::App* selftest = app.add_subcommand("selftest", "built-in confidence suite");
    add_common(selftest, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }
    common.seed = seed;

    if (*normalize) {
        Ext ext = load_ext(common);
        std::cout << parse_skew_poly(ext, read_expr_arg(expr_a)).str() << "\n";
    } else if (*add) {
        Ext ext = load_ext(common);
        std::cout << (parse_skew_poly(ext, read_expr_arg(expr_a)) +
                      parse_skew_poly(ext, read_expr_arg(expr_b)))
                         .str()
                  << "\n";
    } else if (*mul) {
        Ext ext = load_ext(common);
        SkewPoly f = parse_skew_poly(ext, read_expr_arg(expr_a));
        SkewPoly g = parse_skew_poly(ext, read_expr_arg(expr_b));
        SkewPoly prod = f * g;
        std::cout << prod.str() << "\n";
        if (use_oracle) {
            if (!(oracle_mul(f, g) == prod))
                throw DomainError("oracle mismatch: rewrite engine and operator model disagree");
            std::cout << "oracle: match\n";
        }
    } else if (*deg) {
        Ext ext = load_ext(common);
        std::cout << render_degree(parse_skew_poly(ext, read_expr_arg(expr_a)).deg()) << "\n";
    } else if (*ord) {
        Ext ext = load_ext(common);
        std::cout << parse_skew_poly(ext, read_expr_arg(expr_a)).ord() << "\n";
    } else if (*leading) {
        Ext ext = load_ext(common);
        auto [w, c] = parse_skew_poly(ext, read_expr_arg(expr_a)).leading();
        if (common.format == "records")
            std::cout << "word=" << w.str() << " coeff=" << c.str() << "\n";
        else
            std::cout << w.str() << " * [" << c.str() << "]\n";
    } else if (*mega) {
        cmd_probe_megainjective(common, rmax);
    } else if (*prime) {
        cmd_probe_prime(common, degree_bound);
    } else if (*series_mul) {
        Ext ext = load_ext(common);
        SkewPoly f = parse_skew_poly(ext, read_expr_arg(expr_a));
        SkewPoly g = parse_skew_poly(ext, read_expr_arg(expr_b));
        // undeclared truncations treat the inputs as exact polynomials
        size_t ft = f_trunc >= 0 ? static_cast<size_t>(f_trunc)
                                 : std::max(trunc, f.deg().value_or(0));
        TruncSeries fs = series_from_poly(f, ft);
        size_t st = trunc;
        for (const auto& [v, b] : fs.terms) {
            if (v.length() > trunc) continue;
            auto nq = nq_bound(ext, b, trunc);
            if (!nq) throw UnknownNilpotence();
            st = std::max(st, *nq);
        }
        size_t gt = g_trunc >= 0 ? static_cast<size_t>(g_trunc)
                                 : std::max(st, g.deg().value_or(0));
        TruncSeries gs = series_from_poly(g, gt);
        TruncSeries prod = series_mul_trunc(fs, gs, trunc);
        std::cout << render_series(prod) << "\n";
    } else if (*killd) {
        Ext ext = load_ext(common);
        BasisChange bc = kill_delta(ext, parse_ring_literal(ext->ring, c_expr), common.seed);
        std::cout << "target: sigma unchanged, delta = 0\n";
        for (unsigned j = 0; j < ext->n; ++j)
            std::cout << "y" << (j + 1) << " = " << bc.forward[j].str() << "\n";
        for (unsigned j = 0; j < ext->n; ++j)
            std::cout << "x" << (j + 1) << " = " << render_poly_as(bc.backward[j], "y") << "\n";
        if (!map_expr.empty()) {
            if (direction == "to-target") {
                SkewPoly f = parse_skew_poly(bc.source, read_expr_arg(map_expr));
                std::cout << "mapped: "
                          << render_poly_as(map_through(bc, f, MapDirection::ToTarget), "y")
                          << "\n";
            } else {
                SkewPoly f = parse_skew_poly(bc.target, read_expr_arg(map_expr));
                std::cout << "mapped: " << map_through(bc, f, MapDirection::ToSource).str()
                          << "\n";
            }
        }
    } else if (*scal) {
        Ext ext = load_ext(common);
        std::vector<RingElem> cs;
        std::stringstream ss(cs_list);
        std::string piece;
        while (std::getline(ss, piece, ','))
            cs.push_back(parse_ring_literal(ext->ring, piece));
        BasisChange bc = scalarize_sigma(ext, cs, common.seed);
        std::cout << "target: scalar sigma\n";
        for (const auto& [name, row] : bc.target->delta->gen_images())
            std::cout << "delta'(" << name << ") = " << render_vector(row) << "\n";
        for (unsigned j = 0; j < ext->n; ++j)
            std::cout << "y" << (j + 1) << " = " << bc.forward[j].str() << "\n";
        for (unsigned j = 0; j < ext->n; ++j)
            std::cout << "x" << (j + 1) << " = " << render_poly_as(bc.backward[j], "y") << "\n";
        if (!map_expr.empty()) {
            if (direction == "to-target") {
                SkewPoly f = parse_skew_poly(bc.source, read_expr_arg(map_expr));
                std::cout << "mapped: "
                          << render_poly_as(map_through(bc, f, MapDirection::ToTarget), "y")
                          << "\n";
            } else {
                SkewPoly f = parse_skew_poly(bc.target, read_expr_arg(map_expr));
                std::cout << "mapped: " << map_through(bc, f, MapDirection::ToSource).str()
                          << "\n";
            }
        }
    } else if (*eval) {
        run_eval(common, targets_file, expr_a);
    } else if (*laws) {
        cmd_check_laws(common, budget);
    } else if (*selftest) {
        cmd_selftest(seed);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
