#include "entrolab/cli.hpp"

#include "entrolab/categories.hpp"
#include "entrolab/conditional.hpp"
#include "entrolab/config.hpp"
#include "entrolab/dist_json.hpp"
#include "entrolab/entropy.hpp"
#include "entrolab/error.hpp"
#include "entrolab/finab.hpp"
#include "entrolab/lprob.hpp"
#include "entrolab/majorization.hpp"
#include "entrolab/ordmon.hpp"
#include "entrolab/suites.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace entrolab {

using nlohmann::json;

std::vector<MPMap> tower_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dist") || !j.contains("tower") || !j["tower"].is_array()) {
        throw Error(ErrorCode::ParseError, "tower file needs \"dist\" and a \"tower\" array");
    }
    Dist cur = dist_from_json(j["dist"]);
    std::vector<MPMap> maps;
    for (const auto& level : j["tower"]) {
        if (!level.is_object()) throw Error(ErrorCode::ParseError, "tower levels are label maps");
        std::map<Label, Label> table;
        for (const auto& [k, v] : level.items()) {
            if (!v.is_string()) throw Error(ErrorCode::ParseError, "tower images must be strings");
            table.emplace(Label::parse(k), Label::parse(v.get<std::string>()));
        }
        for (const auto& l : cur.labels()) {
            if (!table.count(l)) throw Error(ErrorCode::ParseError, "tower level misses label " + l.to_string());
        }
        maps.push_back(pushforward(cur, [&table](const Label& l) { return table.at(l); }));
        cur = maps.back().target();
    }
    return maps;
}

namespace {

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json read_json(const std::string& path) {
    try {
        return json::parse(read_text(path));
    } catch (const json::exception& e) {
        throw Error(ErrorCode::ParseError, "bad JSON in '" + path + "': " + e.what());
    }
}

std::string decimal(const EntropyValue& v, unsigned digits) {
    if (const auto* x = std::get_if<LogReal>(&v)) return x->to_decimal(digits);
    const auto& p = std::get<EntropyPair>(v);
    return "(" + p.h0.to_decimal(digits) + ", " + p.h1.to_decimal(digits) + ")";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

int exit_code_for(ErrorCode c) {
    switch (c) {
        case ErrorCode::ParseError:
        case ErrorCode::InvalidArgument:
        case ErrorCode::UnknownFunctor:
            return 2;
        default:
            return 1;
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact entropy, majorization and ordered-monoid toolkit", "entrolab"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key=value settings file");

    // entropy
    auto* entropy_cmd = app.add_subcommand("entropy", "Entropy of a distribution");
    std::string dist_path, functional = "shannon";
    unsigned digits = 12;
    entropy_cmd->add_option("--dist", dist_path, "distribution JSON")->required();
    entropy_cmd->add_option("--functional", functional, "shannon|hartley|pair|renyi:N");
    entropy_cmd->add_option("--digits", digits, "decimal digits");

    // order
    auto* order_cmd = app.add_subcommand("order", "Compare two distributions");
    std::string lhs_path, rhs_path, relation = "majorize", catalyst_path;
    order_cmd->add_option("--lhs", lhs_path, "P")->required();
    order_cmd->add_option("--rhs", rhs_path, "Q")->required();
    order_cmd->add_option("--relation", relation, "majorize|order01|tensorpow:n");
    order_cmd->add_option("--catalyst", catalyst_path, "R for tensorpow (default uniform(2))");
    bool with_certificate = false;
    order_cmd->add_flag("--certificate", with_certificate, "print Robin Hood transfers for majorize");

    // witness-search
    auto* witness_cmd = app.add_subcommand("witness-search", "Bounded catalytic witness search");
    std::string budget_text;
    witness_cmd->add_option("--lhs", lhs_path, "P")->required();
    witness_cmd->add_option("--rhs", rhs_path, "Q")->required();
    witness_cmd->add_option("--budget", budget_text, "depth=3,support=4,den=16[,candidates=N]");

    // monoid
    auto* monoid_cmd = app.add_subcommand("monoid", "Presented ordered monoids");
    monoid_cmd->require_subcommand(1);
    auto* leq_cmd = monoid_cmd->add_subcommand("leq", "Semi-decide x >= y");
    std::string presentation_path, query;
    std::size_t depth = 6;
    std::vector<std::string> separators;
    leq_cmd->add_option("--presentation", presentation_path, "relations file")->required();
    leq_cmd->add_option("--query", query, "\"x >= y\"")->required();
    leq_cmd->add_option("--depth", depth, "rewrite depth");
    leq_cmd->add_option("--separator", separators, "monotone functional weights, comma-separated");

    // ab
    auto* ab_cmd = app.add_subcommand("ab", "Finite abelian groups");
    ab_cmd->require_subcommand(1);
    std::string ab_lhs, ab_rhs;
    auto* dom_cmd = ab_cmd->add_subcommand("dominates", "M-matrix domination");
    dom_cmd->add_option("--lhs", ab_lhs, "cyclic orders of A")->required();
    dom_cmd->add_option("--rhs", ab_rhs, "cyclic orders of B")->required();
    auto* epi_cmd = ab_cmd->add_subcommand("epi", "Brute-force epimorphism search");
    epi_cmd->add_option("--lhs", ab_lhs, "cyclic orders of A")->required();
    epi_cmd->add_option("--rhs", ab_rhs, "cyclic orders of B")->required();

    // naturality
    auto* nat_cmd = app.add_subcommand("naturality", "Check a naturality square");
    std::string functor_id, object;
    nat_cmd->add_option("--functor", functor_id, "functor id")->required();
    nat_cmd->add_option("--object", object, "object description")->required();

    // cond
    auto* cond_cmd = app.add_subcommand("cond", "Conditional entropy");
    cond_cmd->require_subcommand(1);
    auto* cent_cmd = cond_cmd->add_subcommand("entropy", "Conditional entropies along a tower");
    std::string base_path, eps_text;
    cent_cmd->add_option("--base", base_path, "tower JSON")->required();
    auto* sub_cmd = cond_cmd->add_subcommand("submod", "Submodularity on the epsilon family");
    sub_cmd->add_option("--eps", eps_text, "0 < eps < 1/4")->required();

    // lprob
    auto* lprob_cmd = app.add_subcommand("lprob", "Geometric truncations");
    lprob_cmd->require_subcommand(1);
    auto* trunc_cmd = lprob_cmd->add_subcommand("truncation", "Y_n = min(X, n) for X ~ Geom(p)");
    std::string p_text = "1/2";
    std::size_t cutoff = 10;
    bool report = false;
    trunc_cmd->add_option("--p", p_text, "success probability");
    trunc_cmd->add_option("--n", cutoff, "cutoff");
    trunc_cmd->add_flag("--report", report, "entropy, limit and gap");

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
    std::string suite = "all", out_path;
    std::uint64_t seed = 42;
    std::size_t cases = 0;
    unsigned jobs = 1;
    verify_cmd->add_option("--suite", suite, "suite name or all");
    verify_cmd->add_option("--seed", seed, "random seed");
    verify_cmd->add_option("--cases", cases, "case count override");
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--out", out_path, "also write the report here");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        Config config = config_path.empty() ? Config{} : Config::load(config_path);

        if (*entropy_cmd) {
            Dist p = read_dist_file(dist_path);
            auto v = evaluate(Functional::parse(functional), p);
            out << to_string(v) << "\n" << "~ " << decimal(v, digits) << "\n";
            return 0;
        }
        if (*order_cmd) {
            Dist p = read_dist_file(lhs_path), q = read_dist_file(rhs_path);
            if (relation == "majorize") {
                const bool holds = majorizes(q, p);
                out << "Q majorizes P: " << bool_text(holds) << "\n";
                if (with_certificate && holds) {
                    json ts = json::array();
                    for (const auto& t : robin_hood_decompose(q, p)) ts.push_back({{"from", t.from}, {"to", t.to}, {"amount", to_string(t.amount)}});
                    out << json{{"transfers", ts}}.dump(2) << "\n";
                }
            } else if (relation == "order01") {
                out << "P >=01 Q: " << bool_text(order01(p, q)) << "\n";
            } else if (relation.rfind("tensorpow:", 0) == 0) {
                std::size_t n = 0;
                try {
                    n = std::stoul(relation.substr(10));
                } catch (const std::exception&) {
                    throw Error(ErrorCode::ParseError, "bad tensor power in '" + relation + "'");
                }
                Dist r = catalyst_path.empty() ? Dist::uniform(2) : read_dist_file(catalyst_path);
                out << "P^" << n << " (x) R >=01 Q^" << n << ": " << bool_text(tensor_power_dominates(p, q, n, r)) << "\n";
            } else {
                throw Error(ErrorCode::InvalidArgument, "unknown relation '" + relation + "'");
            }
            return 0;
        }
        if (*witness_cmd) {
            Dist p = read_dist_file(lhs_path), q = read_dist_file(rhs_path);
            WitnessBudget b;
            b.depth = config.get_uint("witness.depth", b.depth);
            b.support = config.get_uint("witness.support", b.support);
            b.den = config.get_uint("witness.den", b.den);
            b.max_candidates = config.get_uint("witness.candidates", b.max_candidates);
            if (!budget_text.empty()) {
                // Flags override the config key by key.
                auto flag = WitnessBudget::parse(budget_text);
                for (const char* key : {"depth", "support", "den", "candidates"}) {
                    if (budget_text.find(std::string(key) + "=") == std::string::npos) continue;
                    if (std::string(key) == "depth") b.depth = flag.depth;
                    if (std::string(key) == "support") b.support = flag.support;
                    if (std::string(key) == "den") b.den = flag.den;
                    if (std::string(key) == "candidates") b.max_candidates = flag.max_candidates;
                }
            }
            auto res = catalytic_witness_search(p, q, b);
            json j = {{"status", res.witness ? "found" : "budget-exhausted"}, {"candidates", res.candidates_tried}};
            if (res.witness) j["certificate"] = witness_certificate(p, q, *res.witness);
            out << j.dump(2) << "\n";
            return 0;
        }
        if (*leq_cmd) {
            auto m = PresentedMonoid::parse(read_text(presentation_path));
            auto op = query.find(">=");
            if (op == std::string::npos) throw Error(ErrorCode::ParseError, "query must read \"x >= y\"");
            auto x = m.element(query.substr(0, op)), y = m.element(query.substr(op + 2));
            std::vector<LinearFunctional> fs;
            for (const auto& s : separators) {
                LinearFunctional f;
                std::stringstream ss(s);
                std::string w;
                while (std::getline(ss, w, ',')) f.weights.push_back(parse_rational(w));
                fs.push_back(std::move(f));
            }
            auto res = presented_leq(m, x, y, depth, fs);
            out << to_string(res.status);
            if (res.status == LeqResult::Status::Proven) {
                out << " (depth " << res.depth << "):";
                for (std::size_t i = 0; i < res.chain.size(); ++i) out << (i ? " -> " : " ") << m.format(res.chain[i]);
            } else if (res.status == LeqResult::Status::Refuted) {
                out << " by separator " << *res.separator;
            } else {
                out << " (searched " << res.states_visited << " states to depth " << depth << ")";
            }
            out << "\n";
            return 0;
        }
        if (*dom_cmd) {
            out << to_string(m_compare(parse_finab(ab_lhs), parse_finab(ab_rhs))) << "\n";
            return 0;
        }
        if (*epi_cmd) {
            auto res = brute_epi_exists(parse_finab(ab_lhs), parse_finab(ab_rhs));
            out << to_string(res.status) << "\n";
            if (res.status == EpiSearch::Status::Yes) {
                out << json{{"source", res.source_factors}, {"target", res.target_factors}, {"generator_images", res.generator_images}}.dump()
                    << "\n";
            }
            return 0;
        }
        if (*nat_cmd) {
            NaturalityConfig nc;
            nc.field = config.get_uint("naturality.field", nc.field);
            nc.group = config.get_uint("naturality.group", nc.group);
            if (config.has("naturality.setop_dist")) {
                std::vector<Rational> masses;
                std::stringstream ss(config.get("naturality.setop_dist", ""));
                std::string item;
                while (std::getline(ss, item, ',')) masses.push_back(parse_rational(item));
                nc.setop_dist = Dist::from_masses(std::move(masses));
            }
            auto rep = naturality_square(functor_id, object, nc);
            out << "via codomain: " << to_string(rep.via_codomain) << "\n"
                << "via FinProb:  " << to_string(rep.via_prob) << "\n"
                << (rep.commutes ? "commutes" : "DOES NOT COMMUTE") << "\n";
            return rep.commutes ? 0 : 1;
        }
        if (*cent_cmd) {
            auto maps = tower_from_json(read_json(base_path));
            if (maps.empty()) throw Error(ErrorCode::ParseError, "tower has no levels");
            bool ok = true;
            for (std::size_t i = 0; i < maps.size(); ++i) {
                CondRV x = CondRV::identity(CondObj(maps[i]));
                out << "H(L" << i << " | L" << i + 1 << ") = " << cond_entropy(x).to_string() << "\n";
            }
            for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
                auto c = chain_rule_check(maps[i], maps[i + 1]);
                ok = ok && c.holds;
                out << "chain L" << i << " -> L" << i + 2 << ": " << (c.holds ? "ok" : "FAILED") << " (" << c.composite.to_string() << ")\n";
            }
            return ok ? 0 : 1;
        }
        if (*sub_cmd) {
            Dist p = epsilon_family(parse_rational(eps_text));
            auto rep = submodularity_check(p);
            out << "H(P) = " << shannon(p).to_string() << "\n"
                << "H(A) = " << shannon(rep.a).to_string() << "\n"
                << "H(B) = " << shannon(rep.b).to_string() << "\n"
                << "H(Q) = " << shannon(rep.q).to_string() << "\n"
                << "H(A)+H(B)-H(P)-H(Q) = " << rep.deficit.to_string() << " ~ " << rep.deficit.to_decimal(12) << "\n"
                << (rep.sign > 0 ? "holds (strict)" : rep.sign == 0 ? "holds (equality)" : "VIOLATED") << "\n";
            return rep.holds ? 0 : 1;
        }
        if (*trunc_cmd) {
            const Rational p = parse_rational(p_text);
            Dist y = geometric_truncated(p, cutoff);
            out << dist_to_json(y).dump() << "\n";
            if (report) {
                const LogReal h = shannon(y), limit = geometric_entropy_limit(p);
                const Interval gap = (limit - h).enclose(128);
                out << "H1(Y_n) = " << h.to_string() << " ~ " << h.to_decimal(12) << "\n"
                    << "limit   = " << limit.to_string() << " ~ " << limit.to_decimal(12) << "\n"
                    << "gap in [" << mpq_get_d(gap.lo.get_mpq_t()) << ", " << mpq_get_d(gap.hi.get_mpq_t()) << "]\n";
            }
            return 0;
        }
        if (*verify_cmd) {
            SuiteOptions o;
            o.seed = seed;
            o.jobs = jobs;
            o.config = config;
            if (cases > 0) o.cases = cases;
            std::vector<std::string> names;
            if (suite == "all") {
                names = suite_names();
            } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
                names.push_back(suite);
            } else {
                err << "error: unknown suite '" << suite << "'\n";
                return 2;
            }
            std::vector<SuiteResult> results;
            bool ok = true;
            for (const auto& n : names) {
                results.push_back(run_suite(n, o));
                ok = ok && results.back().failures == 0;
            }
            const std::string text = make_report(results, seed).dump(2) + "\n";
            out << text;
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                if (!f) throw Error(ErrorCode::ParseError, "cannot write '" + out_path + "'");
                f << text;
            }
            return ok ? 0 : 1;
        }
    } catch (const Error& e) {
        err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 2;
}

}  // namespace entrolab
