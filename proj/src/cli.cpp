#include "endsym/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "endsym/continuants.hpp"
#include "endsym/report_format.hpp"

namespace endsym {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Output {
    Format format = Format::text;
    std::ostream& out;

    // Text and JSON renderings of one result; csv falls back to a usage error unless given.
    void emit(const std::string& text, const json& data, const std::optional<std::string>& csv = std::nullopt) {
        switch (format) {
            case Format::text: out << text; break;
            case Format::json: out << data.dump(2) << '\n'; break;
            case Format::csv:
                if (!csv) throw UsageError("csv output is not available for this subcommand");
                out << *csv;
                break;
        }
    }
};

Parity parse_parity(const std::string& s) { return s == "odd" ? Parity::odd : Parity::even; }

std::string join(const std::vector<Integer>& values, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += values[i].str();
    }
    return out;
}

json integers_json(const std::vector<Integer>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(integer_json(v));
    return out;
}

json pairs_json(const std::vector<std::pair<Integer, Integer>>& pairs) {
    json out = json::array();
    for (const auto& [a, b] : pairs) out.push_back({{"alpha", integer_json(a)}, {"beta", integer_json(b)}});
    return out;
}

std::string pairs_text(const std::vector<std::pair<Integer, Integer>>& pairs) {
    std::string out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (i) out += ',';
        out += pairs[i].first.str() + "/" + pairs[i].second.str();
    }
    return out;
}

// Index arguments arrive as strings so that negative values such as -1 are not taken for flags.
Index parse_index(const std::string& s) {
    Integer v = parse_integer(s);
    std::int64_t small = 0;
    if (!fits_int64(v, small)) throw DomainError("index out of range: " + s);
    return static_cast<Index>(small);
}

std::vector<Index> parse_indices(const std::string& s, std::size_t count) {
    std::vector<Index> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) out.push_back(parse_index(item));
    if (out.size() != count)
        throw UsageError("expected " + std::to_string(count) + " comma-separated indices, got '" + s + "'");
    return out;
}

json decomposition_json(const AsymmetryDecomposition& d) {
    json out = {{"outer", sequence_json(d.outer)}, {"c", integer_json(d.c)}, {"core", sequence_json(d.core)}};
    out["pivot"] = d.pivot ? integer_json(*d.pivot) : json(nullptr);
    out["symmetric"] = d.symmetric();
    return out;
}

std::string decomposition_text(const AsymmetryDecomposition& d) {
    std::ostringstream out;
    out << "outer: " << to_string(d.outer) << "\nc: " << d.c << "\ncore: " << to_string(d.core) << "\npivot: "
        << (d.pivot ? d.pivot->str() : "-") << '\n';
    return out.str();
}

json folded_json(const FoldedParams& p) {
    return {{"b", integer_json(p.b)},
            {"n", integer_json(p.n)},
            {"a", integer_json(p.a)},
            {"epsilon", p.epsilon},
            {"alpha", integer_json(p.alpha())},
            {"beta", integer_json(p.beta())}};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact continued-fraction, anticontinuant and quadratic-congruence toolkit", "endsym"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->envname("ENDSYM_FORMAT")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::function<int(Output&)> action;

    // expand
    std::string ex_a, ex_b, ex_parity;
    bool ex_inverse = false;
    auto* expand_cmd = app.add_subcommand("expand", "Continued-fraction expansion of A/B");
    expand_cmd->add_option("A", ex_a)->required();
    expand_cmd->add_option("B", ex_b)->required();
    expand_cmd->add_option("--parity", ex_parity, "Expansion with this length parity")
        ->check(CLI::IsMember({"even", "odd"}));
    expand_cmd->add_flag("--inverse", ex_inverse, "Predict the length parity from B and its inverse mod A");
    expand_cmd->callback([&] {
        action = [&](Output& o) {
            const Integer a = parse_integer(ex_a), b = parse_integer(ex_b);
            if (ex_inverse) {
                auto p = parity_by_inverse(a, b);
                std::ostringstream t;
                t << "u: " << p.u << "\nv: " << p.v << "\ninverse: " << p.v_inverse
                  << "\nsame_side: " << (p.same_side ? "true" : "false") << "\nparity: " << to_string(p.predicted_parity)
                  << '\n';
                o.emit(t.str(), {{"u", integer_json(p.u)},
                                 {"v", integer_json(p.v)},
                                 {"inverse", integer_json(p.v_inverse)},
                                 {"same_side", p.same_side},
                                 {"parity", std::string(to_string(p.predicted_parity))}});
                return exit_ok;
            }
            RationalPair pair(a, b);
            auto q = ex_parity.empty() ? expand(pair) : expand_with_parity(pair, parse_parity(ex_parity));
            o.emit(to_string(q) + "\n", {{"alpha", integer_json(a)}, {"beta", integer_json(b)}, {"expansion", sequence_json(q)}},
                   to_string(q) + "\n");
            return exit_ok;
        };
    });

    // continuant
    std::string co_seq, co_from, co_to;
    bool co_evaluate = false;
    std::optional<std::size_t> co_fib;
    auto* cont_cmd = app.add_subcommand("continuant", "Continuant of a sequence, its fraction, or a Fibonacci number");
    cont_cmd->add_option("SEQ", co_seq, "Comma-separated quotients");
    cont_cmd->add_option("--from", co_from, "First index of the range");
    cont_cmd->add_option("--to", co_to, "Last index of the range");
    cont_cmd->add_flag("--evaluate", co_evaluate, "Print the fraction alpha/beta");
    cont_cmd->add_option("--fibonacci", co_fib, "Print F_k instead");
    cont_cmd->callback([&] {
        action = [&](Output& o) {
            if (co_fib) {
                auto f = fibonacci(*co_fib);
                o.emit(f.str() + "\n", {{"k", *co_fib}, {"fibonacci", integer_json(f)}});
                return exit_ok;
            }
            if (co_seq.empty()) throw UsageError("continuant needs SEQ or --fibonacci");
            auto q = QuotientSequence::parse(co_seq);
            if (co_evaluate) {
                auto r = evaluate(q);
                o.emit(r.alpha().str() + "/" + r.beta().str() + "\n",
                       {{"alpha", integer_json(r.alpha())}, {"beta", integer_json(r.beta())}});
                return exit_ok;
            }
            Index i = 0, j = static_cast<Index>(q.size()) - 1;
            if (!co_from.empty()) i = parse_index(co_from);
            if (!co_to.empty()) j = parse_index(co_to);
            auto k = continuant_range(q, i, j);
            o.emit(k.str() + "\n", {{"i", i}, {"j", j}, {"continuant", integer_json(k)}});
            return exit_ok;
        };
    });

    // anticont
    std::string an_seq, an_from, an_to, an_euler;
    bool an_recursion = false;
    auto* anti_cmd = app.add_subcommand("anticont", "Anticontinuant of a sequence, or an Euler identity residual");
    anti_cmd->add_option("SEQ", an_seq, "Comma-separated quotients")->required();
    anti_cmd->add_option("--from", an_from, "First index of the range");
    anti_cmd->add_option("--to", an_to, "Last index of the range");
    anti_cmd->add_flag("--recursion", an_recursion, "Compute by peeling both ends");
    anti_cmd->add_option("--euler", an_euler, "Residual of Euler's identity at k,l,m,n");
    anti_cmd->callback([&] {
        action = [&](Output& o) {
            auto q = QuotientSequence::parse(an_seq);
            if (!an_euler.empty()) {
                auto idx = parse_indices(an_euler, 4);
                auto r = euler_residual(q, idx[0], idx[1], idx[2], idx[3]);
                o.emit(r.str() + "\n", {{"k", idx[0]}, {"l", idx[1]}, {"m", idx[2]}, {"n", idx[3]},
                                        {"residual", integer_json(r)}});
                return exit_ok;
            }
            Index i = 0, j = static_cast<Index>(q.size()) - 1;
            if (!an_from.empty()) i = parse_index(an_from);
            if (!an_to.empty()) j = parse_index(an_to);
            auto a = an_recursion ? anticontinuant_range_by_recursion(q, i, j) : anticontinuant_range(q, i, j);
            o.emit(a.str() + "\n", {{"i", i}, {"j", j}, {"anticontinuant", integer_json(a)}});
            return exit_ok;
        };
    });

    // type
    std::string ty_seq, ty_c, ty_core, ty_sigma = "even", ty_outer, ty_pivot;
    bool ty_value = false, ty_compose = false;
    auto* type_cmd = app.add_subcommand("type", "Asymmetry decomposition and type of a sequence");
    type_cmd->add_option("SEQ", ty_seq, "Comma-separated quotients");
    type_cmd->add_flag("--value", ty_value, "Value c K(x) - (-1)^sigma A(x) of the type given by --c/--core/--sigma");
    type_cmd->add_flag("--compose", ty_compose, "Rebuild a sequence from --outer/--c/--core/--pivot");
    type_cmd->add_option("--c", ty_c, "Marginal asymmetry");
    type_cmd->add_option("--core", ty_core, "Core sequence (empty for none)");
    type_cmd->add_option("--sigma", ty_sigma, "Depth parity")->check(CLI::IsMember({"even", "odd"}));
    type_cmd->add_option("--outer", ty_outer, "Symmetric outer prefix");
    type_cmd->add_option("--pivot", ty_pivot, "Pivot entry");
    type_cmd->callback([&] {
        action = [&](Output& o) {
            auto seq_or_empty = [](const std::string& s) {
                return s.empty() ? QuotientSequence{} : QuotientSequence::parse(s);
            };
            if (ty_value) {
                if (ty_c.empty()) throw UsageError("--value needs --c");
                ExtendedAsymmetryType t{parse_integer(ty_c), seq_or_empty(ty_core), parse_parity(ty_sigma)};
                auto v = type_value(t);
                o.emit(v.str() + "\n", {{"type", to_string(t)}, {"value", integer_json(v)}});
                return exit_ok;
            }
            if (ty_compose) {
                if (ty_c.empty()) throw UsageError("--compose needs --c");
                AsymmetryDecomposition d{seq_or_empty(ty_outer), parse_integer(ty_c), seq_or_empty(ty_core),
                                         std::nullopt};
                if (!ty_pivot.empty()) d.pivot = parse_integer(ty_pivot);
                auto q = compose(d);
                o.emit(to_string(q) + "\n", {{"sequence", sequence_json(q)}}, to_string(q) + "\n");
                return exit_ok;
            }
            if (ty_seq.empty()) throw UsageError("type needs SEQ, --value or --compose");
            auto q = QuotientSequence::parse(ty_seq);
            auto d = decompose(q);
            auto t = extended_type(q);
            json data = decomposition_json(d);
            data["type"] = t ? json(to_string(*t)) : json(nullptr);
            if (t) data["value"] = integer_json(type_value(*t));
            std::string text = decomposition_text(d);
            text += "type: " + (t ? to_string(*t) : std::string("symmetric")) + "\n";
            if (t) text += "value: " + type_value(*t).str() + "\n";
            o.emit(text, data);
            return exit_ok;
        };
    });

    // enumerate
    std::string en_n, en_parity = "both";
    auto* enum_cmd = app.add_subcommand("enumerate", "Every extended type with value n");
    enum_cmd->add_option("--n", en_n, "Target value")->required();
    enum_cmd->add_option("--parity", en_parity, "Core length parity")->check(CLI::IsMember({"even", "odd", "both"}));
    enum_cmd->callback([&] {
        action = [&](Output& o) {
            LambdaFilter f = en_parity == "even"  ? LambdaFilter::even
                             : en_parity == "odd" ? LambdaFilter::odd
                                                  : LambdaFilter::both;
            auto cat = enumerate_types(parse_integer(en_n), f);
            std::string text, csv = "c,core,sigma,family\n";
            for (const auto& t : cat.finite_types) {
                text += to_string(t) + "\n";
                csv += t.c.str() + "," + to_string(t.core, '.') + "," + std::string(to_string(t.sigma)) + ",0\n";
            }
            for (const auto& fam : cat.parametric_families) {
                text += to_string(fam) + " for every p >= 1\n";
                csv += fam.c.str() + "," + pattern_to_string(fam.pattern, '.') + "," +
                       std::string(to_string(fam.sigma)) + ",1\n";
            }
            o.emit(text, to_json(cat), csv);
            return exit_ok;
        };
    });

    // solve
    std::string so_n, so_alpha;
    int so_s = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Roots of x^2 + n x + (-1)^s modulo ALPHA");
    solve_cmd->add_option("--n", so_n)->required();
    solve_cmd->add_option("--s", so_s)->required()->check(CLI::IsMember({0, 1}));
    solve_cmd->add_option("ALPHA", so_alpha)->required();
    solve_cmd->callback([&] {
        action = [&](Output& o) {
            auto roots = solve_quadratic(CongruenceSpec::make(parse_integer(so_n), so_s), parse_integer(so_alpha));
            o.emit(join(roots) + "\n", {{"roots", integers_json(roots)}}, join(roots, "\n") + (roots.empty() ? "" : "\n"));
            return exit_ok;
        };
    });

    // exceptional
    std::string xc_n;
    int xc_s = 0;
    bool xc_true = false, xc_negated = false, xc_certs = false;
    std::string xc_limit = "64";
    auto* exc_cmd = app.add_subcommand("exceptional", "Exceptional moduli of x^2 + n x + (-1)^s");
    exc_cmd->add_option("--n", xc_n)->required();
    exc_cmd->add_option("--s", xc_s)->required()->check(CLI::IsMember({0, 1}));
    exc_cmd->add_flag("--certificates", xc_certs, "List the condition behind each modulus");
    exc_cmd->add_flag("--true-exceptions", xc_true, "List the pairs that no expansion matches");
    exc_cmd->add_flag("--negated", xc_negated, "With --true-exceptions, also solve for -n");
    exc_cmd->add_option("--scan-limit", xc_limit, "Largest modulus scanned when s = 0 and |n| = 2");
    exc_cmd->callback([&] {
        action = [&](Output& o) {
            auto spec = CongruenceSpec::make(parse_integer(xc_n), xc_s);
            if (xc_true) {
                auto pairs = true_exceptions(spec, xc_negated, parse_integer(xc_limit));
                std::string csv;
                for (const auto& [a, b] : pairs) csv += a.str() + "," + b.str() + "\n";
                o.emit(pairs_text(pairs) + "\n", {{"true_exceptions", pairs_json(pairs)}}, "alpha,beta\n" + csv);
                return exit_ok;
            }
            auto cands = exceptional_candidates(spec);
            std::vector<Integer> moduli;
            json data = json::array();
            std::string cert_text, csv = "modulus,condition,witness\n";
            for (const auto& m : cands) {
                moduli.push_back(m.modulus);
                json certs = json::array();
                cert_text += m.modulus.str() + ":";
                for (const auto& c : m.certificates) {
                    std::string w = c.witness ? c.witness->str() : "";
                    certs.push_back({{"condition", std::string(to_string(c.condition))},
                                     {"witness", c.witness ? integer_json(*c.witness) : json(nullptr)}});
                    cert_text += " " + std::string(to_string(c.condition)) + (w.empty() ? "" : "(" + w + ")");
                    csv += m.modulus.str() + "," + std::string(to_string(c.condition)) + "," + w + "\n";
                }
                cert_text += "\n";
                data.push_back({{"modulus", integer_json(m.modulus)}, {"certificates", certs}});
            }
            o.emit(xc_certs ? cert_text : join(moduli) + "\n", {{"candidates", data}}, csv);
            return exit_ok;
        };
    });

    // folded
    std::string fo_b, fo_n, fo_a;
    int fo_eps = 1;
    bool fo_normalize = false;
    auto* fold_cmd = app.add_subcommand("folded", "Expansion and form of alpha = b n^2, beta = b a n - eps");
    fold_cmd->add_option("B", fo_b)->required();
    fold_cmd->add_option("N", fo_n)->required();
    fold_cmd->add_option("A", fo_a)->required();
    fold_cmd->add_option("--eps", fo_eps, "+1 or -1")->check(CLI::IsMember({1, -1}));
    fold_cmd->add_flag("--normalize", fo_normalize, "Only print the normalized parameters");
    fold_cmd->callback([&] {
        action = [&](Output& o) {
            FoldedParams p{parse_integer(fo_b), parse_integer(fo_n), parse_integer(fo_a), fo_eps};
            auto np = folded_normalize(p);
            std::ostringstream t;
            t << "b: " << np.b << "\nn: " << np.n << "\na: " << np.a << "\neps: " << np.epsilon << "\nalpha: "
              << np.alpha() << "\nbeta: " << np.beta() << '\n';
            json data = {{"normalized", folded_json(np)}};
            if (!fo_normalize) {
                auto [q, form] = folded_expand_classify(np);
                t << "expansion: " << to_string(q) << "\nform: " << form.form
                  << "\nx: " << (form.x ? form.x->str() : "-") << "\npivot: " << form.pivot << '\n';
                data["expansion"] = sequence_json(q);
                data["form"] = form.form;
                data["x"] = form.x ? integer_json(*form.x) : json(nullptr);
                data["pivot"] = integer_json(form.pivot);
            }
            o.emit(t.str(), data);
            return exit_ok;
        };
    });

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "Mechanical verification sweeps");
    verify_cmd->require_subcommand(1);
    unsigned threads = 1;
    std::string vi_max = "500", vi_seed = "1";
    std::uint64_t vi_trials = 10000;
    auto* ident_cmd = verify_cmd->add_subcommand("identities", "Identity checks over all pairs and random sequences");
    ident_cmd->add_option("--max-alpha", vi_max);
    ident_cmd->add_option("--trials", vi_trials);
    ident_cmd->add_option("--seed", vi_seed);
    ident_cmd->add_option("--threads", threads, "0 = hardware concurrency");
    std::string vt_n, vt_alpha = "2000", vt_mode = "refined";
    int vt_s = 0;
    auto* thm_cmd = verify_cmd->add_subcommand("theorem", "Roots versus anticontinuants for every modulus");
    thm_cmd->add_option("--n", vt_n)->required();
    thm_cmd->add_option("--s", vt_s)->required()->check(CLI::IsMember({0, 1}));
    thm_cmd->add_option("--alpha-max", vt_alpha);
    thm_cmd->add_option("--mode", vt_mode)->check(CLI::IsMember({"refined", "coarse"}));
    thm_cmd->add_option("--threads", threads, "0 = hardware concurrency");

    auto emit_report = [](Output& o, const VerificationReport& r) {
        o.emit(report_text(r), to_json(r));
        return r.ok() ? exit_ok : exit_violation;
    };
    ident_cmd->callback([&] {
        action = [&](Output& o) {
            Integer seed = parse_integer(vi_seed);
            if (seed < 0 || seed > std::numeric_limits<std::uint64_t>::max()) throw DomainError("seed out of range");
            return emit_report(o, verify_identities(parse_integer(vi_max), vi_trials, seed.convert_to<std::uint64_t>(),
                                                    SweepOptions{threads}));
        };
    });
    thm_cmd->callback([&] {
        action = [&](Output& o) {
            auto spec = CongruenceSpec::make(parse_integer(vt_n), vt_s);
            return emit_report(o, verify_main_theorem(spec, parse_integer(vt_alpha),
                                                      vt_mode == "coarse" ? Mode::coarse : Mode::refined,
                                                      SweepOptions{threads}));
        };
    });

    // table
    std::string tb_max = "6";
    auto* table_cmd = app.add_subcommand("table", "Types and true exceptions for 1 <= n <= N");
    table_cmd->add_option("--n-max", tb_max);
    table_cmd->callback([&] {
        action = [&](Output& o) {
            auto doc = build_table(parse_integer(tb_max));
            o.emit(table_text(doc), to_json(doc), table_csv(doc));
            return exit_ok;
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }

    Output o{format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text, out};
    try {
        return action(o);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
}

}  // namespace endsym
