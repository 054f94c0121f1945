// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Usage: skewx_acceptance CLI_PATH FIXTURES_DIR GOLDEN_DIR

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "skewx/analysis.hpp"
#include "skewx/io.hpp"
#include "skewx/oracle.hpp"
#include "skewx/series.hpp"
#include "skewx/transforms.hpp"

using namespace skewx;

namespace {

std::string g_cli, g_fixtures, g_golden;

struct CheckFail : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw CheckFail(what);
}

Ext fixture(const std::string& name) {
    return load_ring_spec_file(g_fixtures + "/" + name + ".json");
}

struct CliResult {
    std::string output;
    int exit_code = -1;
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'')
            out += "'\\''";
        else
            out += c;
    }
    return out + "'";
}

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_data = "") {
    std::string cmd = shell_quote(g_cli);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>&1";
    if (!stdin_data.empty()) cmd = "printf %s " + shell_quote(stdin_data) + " | " + cmd;
    std::array<char, 4096> buf{};
    CliResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    require(pipe != nullptr, "popen failed for: " + cmd);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.output.append(buf.data(), n);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

// -------------------------------------------------------------------------
// criteria
// -------------------------------------------------------------------------

void criterion_01_zero_divisor_example() {
    CliResult out = run_cli({"normalize", "--ring", g_fixtures + "/diag_t0.json", "t*x2"});
    require(out.exit_code == 0, "normalize exited with " + std::to_string(out.exit_code));
    require(out.output == "0\n", "normalize printed '" + out.output + "', wanted '0\\n'");

    Ext diag = fixture("diag_t0");
    Rng rng(0);
    MegaVerdict v = megainjective_probe(diag, 3, {}, rng);
    require(v.witness.has_value(), "no dependence witness found");
    require(v.witness->a == parse_ring_literal(diag->ring, "t"), "witness a != t");
    require(v.witness->r == 1, "witness r != 1");
    require(v.witness->b.size() == 2 && v.witness->b[0].is_zero() && v.witness->b[1].is_one(),
            "witness b != (0, 1)");
}

void criterion_02_oracle_equivalence() {
    Rng rng(20240001);
    size_t pairs = 0;
    for (const char* name : {"ore_ddt", "diag_t0", "triangular_t1", "zmod6"}) {
        Ext ext = fixture(name);
        for (int i = 0; i < 128; ++i) {
            SkewPoly f = random_skew_poly(ext, rng, 3, 3);
            SkewPoly g = random_skew_poly(ext, rng, 3, 3);
            require(oracle_mul(f, g) == f * g,
                    std::string("oracle mismatch on ") + name + ": f = " + f.str() +
                        ", g = " + g.str());
            ++pairs;
        }
    }
    require(pairs >= 500, "only " + std::to_string(pairs) + " pairs sampled");
}

void criterion_03_ring_axioms() {
    Rng rng(20240002);
    for (const char* name : {"ore_ddt", "diag_t0", "triangular_t1", "zmod6"}) {
        Ext ext = fixture(name);
        for (int i = 0; i < 300; ++i) {
            SkewPoly f = random_skew_poly(ext, rng, 3);
            SkewPoly g = random_skew_poly(ext, rng, 3);
            SkewPoly h = random_skew_poly(ext, rng, 3);
            require((f * g) * h == f * (g * h), std::string("associativity failed on ") + name);
            require(f * (g + h) == f * g + f * h,
                    std::string("left distributivity failed on ") + name);
            require((f + g) * h == f * h + g * h,
                    std::string("right distributivity failed on ") + name);
        }
    }
}

void criterion_04_degree_function() {
    // (a) certified megainjective configuration: no drops anywhere
    Rng rng(20240003);
    AdditivityReport tri = degree_additivity_check(fixture("triangular_t1"), {}, rng, 128);
    require(tri.pseudo_valuation_ok, "pseudo-valuation violated on triangular config");
    require(tri.drops == 0, "unexpected degree drop on the megainjective config");

    // (b) diag(t,0): a drop occurs, is witnessed, and yields a zero-divisor pair
    Ext diag = fixture("diag_t0");
    AdditivityReport dg = degree_additivity_check(diag, {}, rng, 128);
    require(dg.pseudo_valuation_ok, "pseudo-valuation violated on diag config");
    require(dg.drops > 0, "no degree drop recorded on diag(t,0)");
    require(dg.all_drops_witnessed, "a degree drop lacked a dependence witness");

    Rng rng2(0);
    MegaVerdict v = megainjective_probe(diag, 3, {}, rng2);
    require(v.witness.has_value(), "no witness for zero-divisor construction");
    ZeroDivisorResult zd = zero_divisor_from_witness(diag, *v.witness);
    require(!zd.f.is_zero() && !zd.g.is_zero(), "degenerate zero-divisor pair");
    require(zd.product_zero && (zd.f * zd.g).is_zero(), "witness product is not zero");
}

void criterion_05_scalar_times_word() {
    Rng rng(20240004);
    for (const char* name : {"ore_ddt", "diag_t0", "triangular_t1"}) {
        Ext ext = fixture(name);
        std::vector<RingElem> samples = analysis_samples(ext, {8, 3, 5}, rng);
        for (unsigned r = 1; r <= 3; ++r) {
            auto words = enumerate_words(r, ext->n);
            for (const RingElem& a : samples) {
                RingMatrix sp = ext->sigma->power_eval(a, r);
                for (size_t j = 0; j < words.size(); ++j) {
                    SkewPoly rem = push_left_coefficient(ext, a, words[j]);
                    for (size_t i = 0; i < words.size(); ++i)
                        rem = rem - SkewPoly::monomial(ext, words[i], sp.at(i, j));
                    auto d = rem.deg();
                    require(!d || *d < r,
                            std::string("congruence failed on ") + name + " at r = " +
                                std::to_string(r));
                }
            }
        }
    }
}

void criterion_06_triangular_leading_term() {
    Rng rng(20240005);
    for (const char* name : {"diag_t0", "triangular_t1", "diag_auto"}) {
        Ext ext = fixture(name);
        std::vector<RingElem> samples = analysis_samples(ext, {6, 3, 5}, rng);
        for (size_t len = 0; len <= 4; ++len) {
            for (const Word& w : enumerate_words(len, ext->n)) {
                for (const RingElem& a : samples) {
                    SkewPoly rem = push_left_coefficient(ext, a, w) -
                                   SkewPoly::monomial(ext, w, ext->sigma->word_map(w, a));
                    require(rem.below_word(w), std::string("leading-term law failed on ") +
                                                   name + " at w = " + w.str());
                }
            }
        }
    }
}

void criterion_07_constant_term_law() {
    Rng rng(20240006);
    for (const char* name : {"ore_ddt", "partials2"}) {
        Ext ext = fixture(name);
        std::vector<RingElem> samples = analysis_samples(ext, {6, 3, 5}, rng);
        for (size_t k = 1; k <= 4; ++k) {
            for (const Word& w : enumerate_words(k, ext->n)) {
                for (const RingElem& a : samples) {
                    SkewPoly p = push_left_coefficient(ext, a, w);
                    RingElem expect = a;
                    for (unsigned j : w.letters()) expect = ext->delta->component(expect, j);
                    require(p.coeff(Word(ext->n)) == expect,
                            std::string("constant-term law failed on ") + name);
                }
            }
        }
    }
}

void criterion_08_series() {
    Ext ore = fixture("ore_ddt");
    Ring r = ore->ring;

    // t * sum_k x^k = sum_k x^k (t + k + 1) up to q = 4
    size_t q = 4;
    TermMap ft;
    ft.emplace(Word(1), parse_ring_literal(r, "t"));
    TruncSeries f = make_series(ore, q, std::move(ft));
    size_t need = *nq_bound(ore, parse_ring_literal(r, "t"), q);
    TermMap gt;
    for (size_t k = 0; k <= need; ++k)
        gt.emplace(Word(1, std::vector<unsigned>(k, 1)), RingElem::one(r));
    TruncSeries g = make_series(ore, need, std::move(gt));
    TruncSeries prod = series_mul_trunc(f, g, q);
    for (size_t k = 0; k <= q; ++k) {
        RingElem expect = parse_ring_literal(r, "t + " + std::to_string(k + 1));
        auto it = prod.terms.find(Word(1, std::vector<unsigned>(k, 1)));
        require(it != prod.terms.end() && it->second == expect,
                "series coefficient at x^" + std::to_string(k) + " is wrong");
    }

    // truncation consistency on 100 random truncated-series pairs
    Rng rng(20240007);
    for (int i = 0; i < 100; ++i) {
        SkewPoly fp = random_skew_poly(ore, rng, 2);
        SkewPoly gp = random_skew_poly(ore, rng, 3);
        size_t qq = 1 + rng.below(2);
        TruncSeries fs = series_from_poly(fp, 8);
        TruncSeries gs = series_from_poly(gp, 64);
        TruncSeries big = series_mul_trunc(fs, gs, qq);
        for (size_t q2 = 0; q2 <= qq; ++q2) {
            TruncSeries small = series_mul_trunc(fs, gs, q2);
            require(truncate(big, q2).terms == small.terms, "truncation consistency failed");
        }
    }
}

void criterion_09_nq_soundness() {
    Rng rng(20240008);
    for (const char* name : {"ore_ddt", "nilpotent_inner"}) {
        Ext ext = fixture(name);
        std::vector<RingElem> samples = analysis_samples(ext, {6, 3, 5}, rng);
        for (size_t q = 0; q <= 2; ++q) {
            for (const RingElem& a : samples) {
                auto nq = nq_bound(ext, a, q);
                require(nq.has_value(), std::string("nq_bound unknown on ") + name);
                for (const Word& w : enumerate_words(*nq, ext->n)) {
                    SkewPoly aw = push_left_coefficient(ext, a, w);
                    require(aw.is_zero() || aw.ord() > q,
                            std::string("N_q unsound on ") + name + " at q = " +
                                std::to_string(q));
                }
            }
        }
    }
}

void criterion_10_transforms() {
    // kill_delta on the shift/derivation configuration
    Ext shift = fixture("shift_inner");
    Ring r = shift->ring;
    BasisChange bc = kill_delta(shift, parse_ring_literal(r, "t"));
    Rng rng(20240009);
    for (int i = 0; i < 32; ++i) {
        RingElem a = random_element(r, rng, 3);
        SkewPoly lhs = SkewPoly::constant(shift, a) * bc.forward[0];
        SkewPoly rhs = bc.forward[0].right_scale(shift->sigma->entry(a, 1, 1));
        require(lhs == rhs, "kill_delta relation r*y = y*sigma(r) failed");
    }

    // scalarize_sigma turns 2 d/dt into d/dt
    Ext scale = fixture("scale2_ddt");
    BasisChange sc = scalarize_sigma(scale, {parse_ring_literal(scale->ring, "t")});
    require(sc.target->delta->component(parse_ring_literal(scale->ring, "t"), 1) ==
                RingElem::one(scale->ring),
            "delta' is not d/dt on the generator");
    for (int i = 0; i < 32; ++i) {
        RingElem a = random_element(scale->ring, rng, 3);
        RingElem b = random_element(scale->ring, rng, 3);
        require(sc.target->delta->component(a * b, 1) ==
                    sc.target->delta->component(a, 1) * b +
                        a * sc.target->delta->component(b, 1),
                "delta' violates the ordinary Leibniz rule");
    }

    // round trips are the identity on all terms of degree <= 3
    for (const BasisChange* b : {&bc, &sc}) {
        for (size_t len = 0; len <= 3; ++len) {
            for (const Word& w : enumerate_words(len, b->source->n)) {
                RingElem c = random_element(b->source->ring, rng, 2);
                SkewPoly mono = SkewPoly::monomial(b->source, w, c);
                SkewPoly back =
                    map_through(*b, map_through(*b, mono, MapDirection::ToTarget),
                                MapDirection::ToSource);
                require(back == mono, "map_through round trip failed at " + w.str());
            }
        }
    }
}

void criterion_11_primeness() {
    Rng rng(0);
    PrimeVerdict ok = prime_probe(fixture("diag_auto"), 4, {}, rng);
    require(ok.kind == PrimeVerdict::Kind::Certified,
            "diag_auto not certified: " + ok.detail);

    Ext trunc = fixture("trunc2_scalar");
    Rng rng2(0);
    PrimeVerdict bad = prime_probe(trunc, 4, {}, rng2);
    require(bad.kind == PrimeVerdict::Kind::NotPrime, "trunc2_scalar not refuted");
    RingElem t = parse_ring_literal(trunc->ring, "t");
    require(bad.pair->first == t && bad.pair->second == t, "witness pair is not (t, t)");

    for (const char* name : {"diag_auto", "trunc2_scalar"}) {
        Rng rng3(0);
        GradedTransferReport rep = graded_transfer_check(fixture(name), 4, {}, rng3);
        require(rep.implication_ok,
                std::string("graded transfer implication failed on ") + name);
    }
}

void criterion_12_universal_property() {
    Rng rng(20240010);
    // identity at the canonical generators on 100 random polynomials
    for (const char* name : {"ore_ddt", "diag_t0"}) {
        Ext ext = fixture(name);
        std::vector<EvalTarget> gens;
        for (unsigned j = 1; j <= ext->n; ++j) gens.emplace_back(SkewPoly::generator(ext, j));
        for (int i = 0; i < 50; ++i) {
            SkewPoly f = random_skew_poly(ext, rng, 3);
            require(std::get<SkewPoly>(eval_hom(ext, gens, f)) == f,
                    "eval_hom at the generators is not the identity");
        }
    }
    // zero targets on delta = 0 configurations return the constant term
    for (const char* name : {"diag_t0", "zmod6", "scalar2_qt"}) {
        Ext ext = fixture(name);
        std::vector<EvalTarget> zeros(ext->n, EvalTarget(RingElem::zero(ext->ring)));
        for (int i = 0; i < 34; ++i) {
            SkewPoly f = random_skew_poly(ext, rng, 3);
            require(std::get<RingElem>(eval_hom(ext, zeros, f)) == f.coeff(Word(ext->n)),
                    "zero-target evaluation is not the constant term");
        }
    }
    // multiplicativity on 200 random pairs
    Ext sc = fixture("scalar2_qt");
    std::vector<EvalTarget> cs(sc->n, EvalTarget(parse_ring_literal(sc->ring, "2")));
    for (int i = 0; i < 100; ++i) {
        SkewPoly f = random_skew_poly(sc, rng, 2);
        SkewPoly g = random_skew_poly(sc, rng, 2);
        require(std::get<RingElem>(eval_hom(sc, cs, f * g)) ==
                    std::get<RingElem>(eval_hom(sc, cs, f)) *
                        std::get<RingElem>(eval_hom(sc, cs, g)),
                "eval_hom not multiplicative (ring targets)");
    }
    Ext diag = fixture("diag_t0");
    std::vector<EvalTarget> gens;
    for (unsigned j = 1; j <= diag->n; ++j) gens.emplace_back(SkewPoly::generator(diag, j));
    for (int i = 0; i < 100; ++i) {
        SkewPoly f = random_skew_poly(diag, rng, 2);
        SkewPoly g = random_skew_poly(diag, rng, 2);
        require(std::get<SkewPoly>(eval_hom(diag, gens, f * g)) ==
                    std::get<SkewPoly>(eval_hom(diag, gens, f)) *
                        std::get<SkewPoly>(eval_hom(diag, gens, g)),
                "eval_hom not multiplicative (polynomial targets)");
    }
}

void criterion_13_cli_golden() {
    std::ifstream manifest(g_golden + "/cases.json");
    require(manifest.good(), "cannot open golden manifest");
    nlohmann::json cases;
    manifest >> cases;
    require(cases.is_array() && cases.size() >= 20,
            "golden manifest needs at least 20 cases, has " + std::to_string(cases.size()));
    for (const auto& c : cases) {
        std::string name = c.at("name").get<std::string>();
        std::vector<std::string> args;
        for (const auto& a : c.at("args")) {
            std::string s = a.get<std::string>();
            const std::string key = "{F}";
            size_t pos;
            while ((pos = s.find(key)) != std::string::npos) s.replace(pos, key.size(), g_fixtures);
            args.push_back(s);
        }
        std::ifstream exp(g_golden + "/expected/" + name + ".out", std::ios::binary);
        require(exp.good(), "missing expected output for " + name);
        std::ostringstream buf;
        buf << exp.rdbuf();
        std::string stdin_data = c.value("stdin", "");

        CliResult first = run_cli(args, stdin_data);
        require(first.exit_code == c.at("exit").get<int>(),
                name + ": exit " + std::to_string(first.exit_code) + ", wanted " +
                    std::to_string(c.at("exit").get<int>()));
        require(first.output == buf.str(), name + ": output differs from the committed bytes");
        CliResult second = run_cli(args, stdin_data);
        require(second.output == first.output && second.exit_code == first.exit_code,
                name + ": rerun was not byte-identical");
    }
}

struct Criterion {
    int id;
    std::string name;
    std::function<void()> run;
    double limit_sec;  // 0 = no stated budget
};

}  // namespace

int main(int argc, char** argv) {
    if (argc != 4) {
        std::cerr << "usage: skewx_acceptance CLI_PATH FIXTURES_DIR GOLDEN_DIR\n";
        return 2;
    }
    g_cli = argv[1];
    g_fixtures = argv[2];
    g_golden = argv[3];

    std::vector<Criterion> criteria = {
        {1, "zero-divisor example: normalize t*x2 = 0 and witness (t, 1, (0,1))",
         criterion_01_zero_divisor_example, 1.0},
        {2, "oracle equivalence on >= 500 pairs across 4 configs",
         criterion_02_oracle_equivalence, 60.0},
        {3, "ring axioms on 300 triples per config", criterion_03_ring_axioms, 60.0},
        {4, "degree function iff megainjective, both directions", criterion_04_degree_function,
         0.0},
        {5, "scalar-times-word congruence for r <= 3", criterion_05_scalar_times_word, 0.0},
        {6, "triangular leading-term law for |w| <= 4", criterion_06_triangular_leading_term,
         0.0},
        {7, "constant-term law for k <= 4", criterion_07_constant_term_law, 0.0},
        {8, "series well-definedness and truncation consistency", criterion_08_series, 30.0},
        {9, "N_q soundness for q <= 2", criterion_09_nq_soundness, 0.0},
        {10, "transforms: kill_delta, scalarize_sigma, round trips", criterion_10_transforms,
         0.0},
        {11, "primeness: certify, refute with (t,t), graded transfer",
         criterion_11_primeness, 30.0},
        {12, "universal property of evaluation homomorphisms",
         criterion_12_universal_property, 0.0},
        {13, "CLI golden suite, byte-exact and rerun-stable", criterion_13_cli_golden, 0.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        std::string failure;
        try {
            c.run();
        } catch (const std::exception& e) {
            failure = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (failure.empty() && c.limit_sec > 0 && secs > c.limit_sec)
            failure = "exceeded the stated time budget of " + std::to_string(c.limit_sec) + " s";
        char line[32];
        std::snprintf(line, sizeof(line), "criterion %02d", c.id);
        if (failure.empty()) {
            std::printf("%s [pass] %6.2fs  %s\n", line, secs, c.name.c_str());
        } else {
            std::printf("%s [FAIL] %6.2fs  %s\n    %s\n", line, secs, c.name.c_str(),
                        failure.c_str());
            ++failures;
        }
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
