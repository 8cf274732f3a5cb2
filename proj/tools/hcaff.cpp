// hcaff: build modules, run checks, print JSON reports.
#include <charconv>
#include <chrono>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hcaff/ahca.hpp"
#include "hcaff/characters.hpp"
#include "hcaff/constructions.hpp"
#include "hcaff/sergeev.hpp"
#include "hcaff/shuffle.hpp"
#include "hcaff/suite.hpp"

using json = nlohmann::json;
using namespace hcaff;

namespace {

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Accumulates checks; status is pass iff every check is ok.
struct Report {
    json body = json::object();
    json checks = json::array();
    bool ok = true;
    bool inconclusive = false;

    void check(const std::string& name, bool pass, json expected = nullptr, json got = nullptr)
    {
        json c{{"name", name}, {"ok", pass}};
        if (!expected.is_null()) c["expected"] = std::move(expected);
        if (!got.is_null()) c["got"] = std::move(got);
        checks.push_back(std::move(c));
        ok = ok && pass;
    }
    void absorb(const CheckReport& r, const std::string& prefix = {})
    {
        for (const auto& c : r.checks) {
            json j{{"name", prefix + c.name}, {"ok", c.ok}};
            if (!c.detail.empty()) j["detail"] = c.detail;
            checks.push_back(std::move(j));
            ok = ok && c.ok;
        }
    }
    std::string status() const { return !ok ? "fail" : inconclusive ? "inconclusive" : "pass"; }
};

json shuffle_json(const ShuffleElement& x)
{
    json terms = json::array();
    for (const auto& [w, c] : x.terms()) terms.push_back({{"word", w}, {"coeff", c.str()}});
    return {{"terms", terms}, {"text", x.str()}};
}

std::pair<int, int> parse_segment(const std::string& s)
{
    auto dots = s.find("..");
    if (dots == std::string::npos) throw UsageError("segment must look like a..b: " + s);
    auto number = [&](std::string_view t) {
        int v = 0;
        auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
        if (ec != std::errc() || end != t.data() + t.size() || t.empty()) throw UsageError("segment must look like a..b: " + s);
        return v;
    };
    std::string_view sv(s);
    int a = number(sv.substr(0, dots)), b = number(sv.substr(dots + 2));
    if (b < a) throw UsageError("empty segment " + s);
    return {a, b};
}

Word parse_word(const std::string& s)
{
    Word w = parse_int_list(s);
    for (int a : w)
        if (a < 0) throw UsageError("letters must be nonnegative: " + s);
    return w;
}

Multisegment parse_multisegment(const std::string& lambda, const std::string& mu)
{
    if (lambda.empty() || mu.empty()) throw UsageError("need both --lambda and --mu");
    Multisegment m{parse_int_list(lambda), parse_int_list(mu)};
    m.validate();
    return m;
}

void describe_module(Report& r, const SuperModule& m, bool analyse)
{
    r.body["dim"] = m.dim;
    r.body["rank"] = m.rank;
    r.absorb(verify_module(m), "module: ");
    WeightTable t = weight_table(m);
    r.body["character"] = to_json(character(t, m.rank));
    json weights = json::array();
    for (const auto& [w, s] : t.entries) weights.push_back({{"weight", w}, {"generalized", s.gen_dim}, {"plain", s.plain_dim}});
    r.body["weights"] = weights;
    if (analyse) {
        Analysis an = analyze(m, t);
        r.body["irreducible"] = to_string(an.irreducible);
        r.body["type"] = to_string(an.type);
        if (!an.note.empty()) r.body["note"] = an.note;
        if (an.irreducible == Irreducibility::Inconclusive) r.inconclusive = true;
    }
}

struct Bounds {
    int max_d = 6;
    int max_rank = 6;
    void d(int v) const
    {
        if (v < 1 || v > max_d) throw UsageError("d = " + std::to_string(v) + " outside 1.." + std::to_string(max_d));
    }
    void rank(int v) const
    {
        if (v < 1 || v > max_rank) throw UsageError("rank = " + std::to_string(v) + " outside 1.." + std::to_string(max_rank));
    }
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with the degenerate affine Hecke-Clifford algebra"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value file with default bounds (max_d, max_rank)");

    bool pretty = false, as_json = true;
    std::uint64_t seed = 1;
    Bounds bounds;
    app.add_flag("--pretty", pretty, "indented JSON");
    app.add_flag("--json", as_json, "compact JSON (default)");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_option("--max_d,--max-d", bounds.max_d, "largest accepted d");
    app.add_option("--max_rank,--max-rank", bounds.max_rank, "largest accepted rank");

    int d = 0, a = 0, n = 0, rank = 0;
    std::string seg, shape, lambda, mu, word, x, y, module = "natural", level = "smoke";
    bool corrupt = false, big = false, list = false;

    auto* verify = app.add_subcommand("verify-algebra", "defining relations and structure maps in the PBW basis");
    verify->add_option("--d", d, "rank")->required();
    verify->add_flag("--corrupt", corrupt, "negative control: c_i^2 = +1");

    auto* segment_cmd = app.add_subcommand("segment", "segment module for [a,b]");
    segment_cmd->add_option("--segment", seg, "a..b")->required();
    segment_cmd->add_flag("--big", big, "the big module Phi_a (x) Cl_d instead of the simple piece");

    auto* standard = app.add_subcommand("standard", "standard module M(lambda, mu)");
    standard->add_option("--lambda", lambda)->required();
    standard->add_option("--mu", mu)->required();

    auto* kato = app.add_subcommand("kato", "Kato module K(a,...,a)");
    kato->add_option("--a", a)->required();
    kato->add_option("--d", d)->required();

    auto* calibrated = app.add_subcommand("calibrated", "calibrated module of a shifted skew shape");
    calibrated->add_option("--shape", shape, "lambda/mu, e.g. 3,1/0,0")->required();

    auto* simple = app.add_subcommand("simple", "simple quotient L(lambda, mu)");
    simple->add_option("--lambda", lambda)->required();
    simple->add_option("--mu", mu)->required();

    auto* chr = app.add_subcommand("char", "formal character");
    auto* chr_seg = chr->add_option("--segment", seg, "big segment module a..b");
    auto* chr_shape = chr->add_option("--shape", shape, "calibrated module");
    auto* chr_lambda = chr->add_option("--lambda", lambda, "standard module");
    chr->add_option("--mu", mu);
    chr_seg->excludes(chr_shape)->excludes(chr_lambda);
    chr_shape->excludes(chr_lambda);

    auto* shuffle = app.add_subcommand("shuffle", "quantum shuffle product of two words");
    shuffle->add_option("--rank", rank)->required();
    shuffle->add_option("--x", x)->required();
    shuffle->add_option("--y", y)->required();

    auto* lyndon = app.add_subcommand("lyndon", "good Lyndon words of type B_r");
    lyndon->add_option("--rank", rank)->required();

    auto* rg = app.add_subcommand("rg", "r_g: shuffle image of the bracketing of g");
    rg->add_option("--word", word)->required();
    rg->add_option("--rank", rank);

    auto* dual = app.add_subcommand("dual-canonical", "dual canonical element of a good Lyndon word");
    dual->add_option("--word", word)->required();
    dual->add_option("--rank", rank);

    auto* bd = app.add_subcommand("bd", "multisegments of degree d against good words");
    bd->add_option("--d", d)->required();
    bd->add_option("--rank", rank, "alphabet size, default d+1");
    bd->add_flag("--list", list, "print the words");

    auto* duality = app.add_subcommand("duality", "affine action on M (x) V^d");
    duality->add_option("--n", n)->required();
    duality->add_option("--d", d)->required();
    duality->add_option("--module", module, "trivial or natural")->check(CLI::IsMember({"trivial", "natural"}));

    auto* suite = app.add_subcommand("suite", "acceptance battery");
    suite->add_option("--level", level)->check(CLI::IsMember({"smoke", "desk"}));
    suite->add_flag("--corrupt", corrupt, "negative control: c_i^2 = +1 in the algebra checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Report r;
    json command = json::array();
    for (int k = 1; k < argc; ++k) command.push_back(argv[k]);
    auto start = std::chrono::steady_clock::now();

    try {
        if (*verify) {
            bounds.d(d);
            AlgebraRules rules;
            if (corrupt) rules.clifford_square = 1;
            r.absorb(verify_algebra(d, seed, rules));
        } else if (*segment_cmd) {
            auto [lo, hi] = parse_segment(seg);
            bounds.d(hi - lo + 1);
            describe_module(r, big ? big_segment(lo, hi) : segment(lo, hi), true);
        } else if (*standard) {
            Multisegment m = parse_multisegment(lambda, mu);
            bounds.d(m.degree());
            StandardModule sm = standard_module_with_generator(m);
            describe_module(r, sm.module, false);
            r.check("dimension formula", sm.module.dim == standard_dimension(m), standard_dimension(m), sm.module.dim);
            r.body["cyclic_weight"] = cyclic_weight(m);
        } else if (*kato) {
            bounds.d(d);
            describe_module(r, kato_module(a, d), true);
        } else if (*calibrated) {
            ShiftedSkewShape sh = ShiftedSkewShape::parse(shape);
            bounds.d(sh.size());
            SuperModule m = calibrated_module(sh);
            describe_module(r, m, true);
            Character want = calibrated_character(sh);
            r.check("character from standard fillings", character(m) == want, to_json(want), r.body["character"]);
            r.check("irreducible", r.body["irreducible"] == "irreducible");
        } else if (*simple) {
            Multisegment m = parse_multisegment(lambda, mu);
            bounds.d(m.degree());
            SuperModule sm = standard_module(m);
            Quotient q = simple_quotient(sm, cyclic_weight(m));
            r.body["standard_dim"] = sm.dim;
            r.body["radical_dim"] = q.radical_dim;
            describe_module(r, q.module, false);
        } else if (*chr) {
            Character c;
            if (!seg.empty()) {
                auto [lo, hi] = parse_segment(seg);
                bounds.d(hi - lo + 1);
                c = character(big_segment(lo, hi));
            } else if (!shape.empty()) {
                ShiftedSkewShape sh = ShiftedSkewShape::parse(shape);
                bounds.d(sh.size());
                c = character(calibrated_module(sh));
            } else if (!lambda.empty()) {
                Multisegment m = parse_multisegment(lambda, mu);
                bounds.d(m.degree());
                c = character(standard_module(m));
            } else {
                throw UsageError("char needs --segment, --shape or --lambda/--mu");
            }
            json j = to_json(c);
            r.body["d"] = j["d"];
            r.body["terms"] = j["terms"];
        } else if (*shuffle) {
            bounds.rank(rank);
            Word u = parse_word(x), v = parse_word(y);
            for (int l : u) if (l >= rank) throw UsageError("letter out of range");
            for (int l : v) if (l >= rank) throw UsageError("letter out of range");
            r.body["product"] = shuffle_json(qshuffle(u, v, CartanB(rank)));
        } else if (*lyndon) {
            bounds.rank(rank);
            auto words = good_lyndon_words(rank);
            json ws = json::array();
            bool all = true;
            for (const auto& l : words) {
                ws.push_back({{"word", l}, {"root", root_of(l, rank)}});
                all = all && is_lyndon(l);
            }
            r.body["words"] = ws;
            r.body["count"] = words.size();
            r.check("count is rank^2", static_cast<int>(words.size()) == rank * rank, rank * rank, words.size());
            r.check("every word is Lyndon", all);
        } else if (*rg) {
            Word g = parse_word(word);
            int rk = rank ? rank : (g.empty() ? 1 : *std::max_element(g.begin(), g.end()) + 1);
            bounds.rank(rk);
            CartanB cartan(rk);
            ShuffleElement e = bracket_rg(g, cartan);
            r.body["rg"] = shuffle_json(e);
            json factors = json::array();
            for (const auto& l : lyndon_factorize(g)) factors.push_back(l);
            r.body["lyndon_factors"] = factors;
            if (!e.is_zero()) {
                Word mm = min_monomial(e);
                r.body["min_monomial"] = mm;
                if (is_lyndon(g)) r.check("min monomial is g", mm == g, g, mm);
            }
        } else if (*dual) {
            Word g = parse_word(word);
            int rk = rank ? rank : (g.empty() ? 1 : *std::max_element(g.begin(), g.end()) + 1);
            bounds.rank(rk);
            ShuffleElement e = dual_canonical_lyndon(g, rk);
            r.body["dual_canonical"] = shuffle_json(e);
            json spec = json::array();
            for (const auto& [w, c] : specialize_to_char(e)) spec.push_back({{"word", w}, {"mult", c.str()}});
            r.body["at_q_1"] = spec;
        } else if (*bd) {
            bounds.d(d);
            int rk = rank ? rank : d + 1;
            bounds.rank(rk);
            std::set<Word> image;
            std::vector<Multisegment> all;
            for (int parts = 1; parts <= d; ++parts) {
                auto more = enumerate_Bd(d, parts, rk);
                all.insert(all.end(), more.begin(), more.end());
            }
            json pairs = json::array();
            for (const auto& m : all) {
                Word w = fold(multisegment_to_word(m));
                image.insert(w);
                if (list) pairs.push_back({{"multisegment", m.str()}, {"word", w}});
            }
            auto good = good_words(d, rk);
            std::set<Word> gs(good.begin(), good.end());
            r.body["multisegments"] = all.size();
            r.body["good_words"] = good.size();
            if (list) r.body["pairs"] = pairs;
            r.check("injective", image.size() == all.size(), all.size(), image.size());
            r.check("image is the set of good words", image == gs, good.size(), image.size());
        } else if (*duality) {
            if (n < 1 || n > 4) throw UsageError("n outside 1..4");
            bounds.d(d);
            QModule m = module == "trivial" ? trivial_qmodule(n) : natural_qmodule(n);
            SuperModule op = duality_operators(n, d, m);
            r.body["dim"] = op.dim;
            r.absorb(verify_module(op), "module: ");
            r.absorb(check_qn_commutation(op, TensorSpace(m, d), static_cast<int>(qn_generators(n).size())), "commutation: ");
            r.absorb(check_tau_compatibility(op), "transpose: ");
            r.absorb(check_omega(n), "Omega: ");
            if (module == "trivial") {
                SergeevReport s = verify_sergeev(n, d);
                r.absorb(s.checks, "Sergeev: ");
                if (s.injectivity_tested) r.body["sergeev_rank"] = s.image_rank;
            }
        } else if (*suite) {
            SuiteOptions opt;
            opt.level = level == "desk" ? SuiteLevel::Desk : SuiteLevel::Smoke;
            opt.seed = seed;
            opt.corrupt = corrupt;
            json crits = json::array();
            for (const auto& c : criteria()) {
                CriterionResult res = run_criterion(c, opt);
                json failed = json::array();
                for (const auto& k : res.report.checks)
                    if (!k.ok) failed.push_back({{"name", k.name}, {"detail", k.detail}});
                json j{{"id", res.id}, {"title", res.title}, {"ok", res.ok}, {"seconds", res.seconds},
                       {"budget_seconds", res.budget_seconds}, {"within_budget", res.within_budget}, {"checks", res.report.checks.size()}, {"failed", failed}};
                if (!res.error.empty()) j["error"] = res.error;
                crits.push_back(j);
                r.check("criterion " + std::to_string(res.id) + ": " + res.title, res.ok && res.within_budget);
            }
            r.body["criteria"] = crits;
        }
    } catch (const UsageError& e) {
        std::cerr << "hcaff: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "hcaff: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        r.check("no error", false, nullptr, e.what());
    }

    json out{{"schema", 1}, {"command", command}, {"status", r.status()}, {"checks", r.checks}, {"seed", seed}};
    out["seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (auto& [k, v] : r.body.items()) out[k] = v;
    std::cout << out.dump(pretty ? 2 : -1) << "\n";
    return r.status() == "pass" ? 0 : 1;
}
