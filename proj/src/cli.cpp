#include "facta/cli.hpp"

#include "facta/classify.hpp"
#include "facta/errors.hpp"
#include "facta/factorization.hpp"
#include "facta/oracle.hpp"
#include "facta/parse.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <string>

namespace facta {

namespace {

using json = nlohmann::json; // std::map keys: canonical alphabetical order

struct cli_options {
    std::string monoid;
    std::string ring;
    std::string element;
    std::string prime;
    std::string bound;
    std::vector<std::string> polys;
    bool json_out = false;
    bool force_oracle = false;
};

/// One subcommand's answer: the plain-text body (newline-terminated) and
/// the pieces of the structured document.
struct rendered {
    std::string text;
    json result;
    std::optional<json> certificate;
    std::optional<json> witness;
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

oracle_config config_from_env() {
    oracle_config cfg;
    if (const char* s = std::getenv("FACTA_ORACLE_DEGREE_BOUND")) {
        std::string v(s);
        if (v.empty() ||
            v.find_first_not_of("0123456789") != std::string::npos || v == "0")
            throw domain_error(
                "FACTA_ORACLE_DEGREE_BOUND must be a positive integer, got '" +
                v + "'");
        cfg.degree_bound = std::stol(v);
    }
    return cfg;
}

rendered run_monoid_atoms(const cli_options& o) {
    auto M = parse_monoid(o.monoid);
    auto atoms = M.atoms();
    rendered r;
    r.result = json::array();
    if (atoms.empty()) {
        r.text = "(none)\n";
    } else {
        for (std::size_t i = 0; i < atoms.size(); ++i) {
            if (i)
                r.text += ' ';
            r.text += atoms[i].str();
        }
        r.text += '\n';
    }
    for (const rat& a : atoms)
        r.result.push_back(a.str());
    return r;
}

rendered run_monoid_member(const cli_options& o) {
    auto M = parse_monoid(o.monoid);
    rat x = rat::parse(o.element);
    bool in = M.member(x);
    rendered r;
    r.text = std::string(bool_str(in)) + "\n";
    r.result = json{{"member", in}};
    if (in && M.kind() == monoid_kind::fin_gen) {
        auto w = M.member_with_witness(x);
        if (w) {
            json mults = json::array();
            for (const Int& m : *w)
                mults.push_back(m.get_str());
            r.result["witness"] = std::move(mults);
        }
    }
    return r;
}

rendered run_monoid_classify(const cli_options& o) {
    auto M = parse_monoid(o.monoid);
    std::string field = o.ring.empty() ? "rat" : o.ring;
    algebra_report rep = classify_algebra(M, field);
    rendered r;
    r.text = std::string("euclidean: ") + bool_str(rep.euclidean) + "\n" +
             "pid: " + bool_str(rep.pid) + "\n" +          //
             "ufd: " + bool_str(rep.ufd) + "\n" +          //
             "hfd: " + bool_str(rep.hfd) + "\n" +          //
             "dedekind: " + bool_str(rep.dedekind) + "\n" + //
             "iso_N0: " + bool_str(rep.iso_N0) + "\n" +    //
             "decided by: " + rep.decided_by + "\n";
    if (!rep.note.empty())
        r.text += "note: " + rep.note + "\n";
    r.result = json{{"euclidean", rep.euclidean},
                    {"pid", rep.pid},
                    {"ufd", rep.ufd},
                    {"hfd", rep.hfd},
                    {"dedekind", rep.dedekind},
                    {"iso_N0", rep.iso_N0},
                    {"field", rep.field},
                    {"decided_by", rep.decided_by}};
    if (!rep.note.empty())
        r.result["note"] = rep.note;
    return r;
}

rendered run_fact_list(const cli_options& o) {
    auto M = parse_monoid(o.monoid);
    auto zs = factorizations(M, rat::parse(o.element));
    rendered r;
    r.result = json::array();
    for (const factorization& z : zs) {
        r.text += z.str() + "\n";
        r.result.push_back(z.str());
    }
    return r;
}

rendered run_fact_lengths(const cli_options& o) {
    auto M = parse_monoid(o.monoid);
    auto ls = length_set(M, rat::parse(o.element));
    rendered r;
    r.result = json::array();
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i)
            r.text += ' ';
        r.text += ls[i].get_str();
        r.result.push_back(ls[i].get_si());
    }
    r.text += '\n';
    return r;
}

rendered run_fact_hf(const cli_options& o, bool other_half) {
    auto M = parse_monoid(o.monoid);
    rendered r;
    if (o.bound.empty()) {
        bool v = other_half ? is_ohf(M) : is_hf(M);
        r.text = std::string(bool_str(v)) + "\n";
        r.result = json{{"method", "atom-count"}, {"value", v}};
        return r;
    }
    rat B = rat::parse(o.bound);
    bool v = other_half ? brute_check_ohf(M, B) : brute_check_hf(M, B);
    r.result = json{{"bound", o.bound}, {"method", "exhaustive"}, {"value", v}};
    if (v) {
        r.text = "true\n";
    } else {
        auto cex =
            other_half ? ohf_counterexample(M, B) : hf_counterexample(M, B);
        r.text = "false (counterexample: " + cex.value().str() + ")\n";
        r.result["counterexample"] = cex.value().str();
    }
    return r;
}

rendered run_fact_witness(const cli_options& o) {
    auto M = parse_monoid(o.monoid);
    ohf_witness_t w = ohf_witness(M);
    rendered r;
    r.text = "element: " + w.element.str() + "\nz1: " + w.z1.str() +
             "\nz2: " + w.z2.str() + "\n";
    r.result = json{{"element", w.element.str()},
                    {"z1", w.z1.str()},
                    {"z2", w.z2.str()}};
    return r;
}

poly_expr parse_single_poly(const cli_options& o) {
    auto ring = parse_ring(o.ring);
    auto M = parse_monoid(o.monoid);
    return parse_poly(o.polys.at(0), ring, M);
}

rendered run_ring_content(const cli_options& o) {
    Int c = content(parse_single_poly(o));
    rendered r;
    r.text = c.get_str() + "\n";
    r.result = c.get_str();
    return r;
}

rendered run_ring_primitive(const cli_options& o) {
    poly_expr f = parse_single_poly(o);
    bool prim = is_primitive(f);
    poly_expr pp = primitive_part(f);
    rendered r;
    r.text = pp.str() + "\n";
    r.result = json{{"is_primitive", prim}, {"primitive_part", pp.str()}};
    if (f.ring().kind() == ring_kind::integers)
        r.result["content"] = content(f).get_str();
    return r;
}

rendered run_ring_mul(const cli_options& o) {
    if (o.polys.size() < 2)
        throw domain_error("ring-mul: needs at least two --poly arguments");
    auto ring = parse_ring(o.ring);
    auto M = parse_monoid(o.monoid);
    poly_expr acc = parse_poly(o.polys[0], ring, M);
    for (std::size_t i = 1; i < o.polys.size(); ++i)
        acc = acc.mul(parse_poly(o.polys[i], ring, M));
    rendered r;
    r.text = acc.str() + "\n";
    r.result = acc.str();
    return r;
}

rendered run_ring_eisenstein(const cli_options& o) {
    poly_expr f = parse_single_poly(o);
    auto to_int = [](const std::string& text, const char* flag) {
        rat v = rat::parse(text);
        if (!v.is_integer())
            throw domain_error(std::string(flag) + " must be an integer, got " +
                               text);
        return v.num();
    };
    eisenstein_outcome e;
    if (!o.prime.empty()) {
        e = eisenstein_check(f, to_int(o.prime, "--prime"));
    } else {
        e = eisenstein_search(
            f, to_int(o.bound.empty() ? "100" : o.bound, "--bound"));
    }
    rendered r;
    if (e.applicable) {
        r.text = "certificate: p=" + e.prime.get_str() + " (irreducible)\n";
        r.result = json{{"applicable", true}, {"prime", e.prime.get_str()}};
        r.certificate = json{{"kind", "eisenstein"}, {"prime", e.prime.get_str()}};
    } else {
        r.text = "inapplicable: " + e.reason + "\n";
        r.result = json{{"applicable", false}, {"reason", e.reason}};
    }
    return r;
}

rendered render_verdict(const verdict& v) {
    rendered r;
    switch (v.kind()) {
    case verdict_kind::irreducible: {
        std::string cert;
        switch (v.certificate()) {
        case certificate_kind::eisenstein:
            cert = "eisenstein p=" + v.eisenstein_prime().get_str();
            r.certificate = json{{"kind", "eisenstein"},
                                 {"prime", v.eisenstein_prime().get_str()}};
            break;
        case certificate_kind::gauss_pipeline:
            cert = "gauss pipeline";
            r.certificate = json{{"kind", "gauss-pipeline"}};
            break;
        case certificate_kind::oracle_exhaustion:
            cert = "oracle exhaustion";
            r.certificate = json{{"kind", "oracle-exhaustion"}};
            break;
        }
        r.text = "irreducible (certificate: " + cert + ")\n";
        r.result = json{{"verdict", "irreducible"}};
        break;
    }
    case verdict_kind::reducible: {
        const auto& [g, h] = v.witness();
        r.text = "reducible: (" + g.str() + ") * (" + h.str() + ")\n";
        r.result = json{{"verdict", "reducible"}};
        r.witness = json::array({g.str(), h.str()});
        break;
    }
    case verdict_kind::unit:
        r.text = "unit\n";
        r.result = json{{"verdict", "unit"}};
        break;
    case verdict_kind::zero:
        r.text = "zero\n";
        r.result = json{{"verdict", "zero"}};
        break;
    case verdict_kind::inapplicable:
        r.text = "inapplicable: " + v.reason() + "\n";
        r.result = json{{"reason", v.reason()}, {"verdict", "inapplicable"}};
        break;
    }
    return r;
}

rendered run_ring_irreducible(const cli_options& o) {
    poly_expr f = parse_single_poly(o);
    oracle_config cfg = config_from_env();
    verdict v = [&] {
        if (f.ring().kind() != ring_kind::integers) {
            // field coefficients: constants are units, everything else is
            // an oracle question
            if (f.is_zero())
                return verdict::zero();
            if (f.is_constant())
                return verdict::unit();
            return decide_irreducible_in_fm(f, cfg);
        }
        if (o.force_oracle && !f.is_constant())
            return decide_irreducible_in_zm(f, cfg);
        // criteria first: a cheap Eisenstein certificate short-circuits
        // the oracle when one exists
        if (!f.is_zero() && !f.is_constant() && is_primitive(f)) {
            eisenstein_outcome e = eisenstein_search(f, Int(100));
            if (e.applicable)
                return verdict::irreducible_eisenstein(e.prime);
        }
        return gauss_irreducible_over_int(f, cfg);
    }();
    return render_verdict(v);
}

rendered run_ring_frobenius_root(const cli_options& o) {
    poly_expr f = parse_single_poly(o);
    frobenius_outcome out = frobenius_root(f);
    rendered r;
    if (out.root) {
        r.text = out.root->str() + "\n";
        r.result = json{{"root", out.root->str()}};
    } else {
        r.text = "inapplicable: root exponent " +
                 out.blocking_exponent.value().str() +
                 " not in the monoid\n";
        r.result =
            json{{"blocking_exponent", out.blocking_exponent.value().str()}};
    }
    return r;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact arithmetic in monoid rings with Puiseux exponents"};
    app.require_subcommand(1);
    cli_options o;

    auto add_common = [&](CLI::App* sub, bool need_element, bool need_ring,
                          bool multi_poly = false) {
        sub->add_option("--monoid", o.monoid, "monoid literal")->required();
        if (need_element)
            sub->add_option("--element", o.element, "monoid element")
                ->required();
        if (need_ring) {
            sub->add_option("--ring", o.ring, "coefficient ring")->required();
            sub->add_option("--poly", o.polys, "polynomial expression")
                ->required()
                ->expected(multi_poly ? -2 : 1);
        }
        sub->add_flag("--json", o.json_out, "structured output");
        return sub;
    };

    add_common(app.add_subcommand("monoid-atoms", "list the atoms"), false,
               false);
    add_common(app.add_subcommand("monoid-member", "membership test"), true,
               false);
    auto* classify_cmd = add_common(
        app.add_subcommand("monoid-classify",
                           "ring-theoretic classification of F[M]"),
        false, false);
    classify_cmd->add_option("--ring", o.ring, "field label (echoed)");

    add_common(app.add_subcommand("fact-list", "all factorizations into atoms"),
               true, false);
    add_common(app.add_subcommand("fact-lengths", "the set of lengths"), true,
               false);
    auto* hf_cmd = add_common(
        app.add_subcommand("fact-hf", "half-factoriality"), false, false);
    hf_cmd->add_option("--bound", o.bound, "exhaustive check up to bound");
    auto* ohf_cmd = add_common(
        app.add_subcommand("fact-ohf", "other-half-factoriality"), false,
        false);
    ohf_cmd->add_option("--bound", o.bound, "exhaustive check up to bound");
    add_common(app.add_subcommand(
                   "fact-witness",
                   "equal-length distinct factorizations (>= 3 atoms)"),
               false, false);

    add_common(app.add_subcommand("ring-content", "gcd of the coefficients"),
               false, true);
    add_common(app.add_subcommand("ring-primitive", "primitive part"), false,
               true);
    add_common(app.add_subcommand("ring-mul", "product of the arguments"),
               false, true, true);
    auto* eis_cmd = add_common(
        app.add_subcommand("ring-eisenstein", "Eisenstein criterion"), false,
        true);
    eis_cmd->add_option("--prime", o.prime, "check this prime only");
    eis_cmd->add_option("--bound", o.bound, "search primes up to bound");
    auto* irr_cmd = add_common(
        app.add_subcommand("ring-irreducible", "irreducibility decision"),
        false, true);
    irr_cmd->add_flag("--oracle", o.force_oracle,
                      "skip the criteria, use the exhaustive oracle");
    add_common(app.add_subcommand("ring-frobenius-root",
                                  "p-th root under Frobenius"),
               false, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    try {
        rendered r;
        if (name == "monoid-atoms")
            r = run_monoid_atoms(o);
        else if (name == "monoid-member")
            r = run_monoid_member(o);
        else if (name == "monoid-classify")
            r = run_monoid_classify(o);
        else if (name == "fact-list")
            r = run_fact_list(o);
        else if (name == "fact-lengths")
            r = run_fact_lengths(o);
        else if (name == "fact-hf")
            r = run_fact_hf(o, false);
        else if (name == "fact-ohf")
            r = run_fact_hf(o, true);
        else if (name == "fact-witness")
            r = run_fact_witness(o);
        else if (name == "ring-content")
            r = run_ring_content(o);
        else if (name == "ring-primitive")
            r = run_ring_primitive(o);
        else if (name == "ring-mul")
            r = run_ring_mul(o);
        else if (name == "ring-eisenstein")
            r = run_ring_eisenstein(o);
        else if (name == "ring-irreducible")
            r = run_ring_irreducible(o);
        else
            r = run_ring_frobenius_root(o);

        if (o.json_out) {
            json inputs;
            if (!o.monoid.empty())
                inputs["monoid"] = o.monoid;
            if (!o.ring.empty())
                inputs["ring"] = o.ring;
            else if (name == "monoid-classify")
                inputs["ring"] = "rat"; // the effective default label
            if (!o.element.empty())
                inputs["element"] = o.element;
            if (!o.prime.empty())
                inputs["prime"] = o.prime;
            if (!o.bound.empty())
                inputs["bound"] = o.bound;
            if (o.polys.size() == 1)
                inputs["poly"] = o.polys[0];
            else if (o.polys.size() > 1)
                inputs["poly"] = o.polys;
            if (o.force_oracle)
                inputs["oracle"] = true;
            json doc;
            doc["command"] = name;
            doc["inputs"] = std::move(inputs);
            doc["result"] = std::move(r.result);
            if (r.certificate)
                doc["certificate"] = std::move(*r.certificate);
            if (r.witness)
                doc["witness"] = std::move(*r.witness);
            out << doc.dump(2) << "\n";
        } else {
            out << r.text;
        }
        return 0;
    } catch (const oracle_scale_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace facta
