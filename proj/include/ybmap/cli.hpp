#pragma once

// Command-line front end. `run` is the whole program; tools/ybmap.cpp only
// forwards argv to it, which lets tests drive the CLI in-process.
//
// Exit codes: 0 all verdicts as expected, 1 a failure, 2 usage or parse
// error, 3 inconclusive (some sample ran out of pole resamples).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ybmap/catalog.hpp"
#include "ybmap/construct.hpp"
#include "ybmap/expr.hpp"
#include "ybmap/glmatrix.hpp"
#include "ybmap/lax.hpp"
#include "ybmap/reduce.hpp"
#include "ybmap/verify.hpp"

namespace ybmap::cli {

struct Options {
    std::string field = "fp:2305843009213693951";
    std::size_t samples = 200;
    std::uint64_t seed = 1;
    std::size_t zeta_points = 3;
    std::size_t jobs = 0;
    std::string format = "text";
    bool strict = true;

    std::string command;
    std::string check;   // verify: yb|3d|lax|invariance|involution|dynamical|symmetry
    std::string target;  // verify target
    std::string kind;    // construct kind
    std::string ternary, map, quasigroup, constraint, expect, symmetry, lax, reparam;
    std::size_t index = 1;
};

struct UsageError : Error {
    using Error::Error;
};

/// Reports plus anything printed before them.
struct Outcome {
    std::vector<VerificationReport> reports;
    std::vector<std::string> lines;
};

namespace detail {

inline bool is_file_target(const std::string& t) {
    return t.find('/') != std::string::npos || (t.size() > 3 && t.substr(t.size() - 3) == ".yb");
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

template <Field F>
struct Loaded {
    std::optional<YBMap<F>> map;
    std::optional<Ternary<F>> ternary;
    std::optional<CatalogEntry<F>> entry;
    std::optional<std::string> quasigroup;
};

template <Field F>
Loaded<F> load(const F& field, const std::string& target) {
    Loaded<F> l;
    if (is_file_target(target)) {
        const DefinitionFile def = parse_definition(read_file(target));
        l.quasigroup = def.quasigroup;
        if (def.kind == DefinitionFile::Kind::Ternary) {
            l.ternary = to_ternary(def, field, stem(target));
        } else {
            l.map = to_ybmap(def, field, stem(target));
        }
        return l;
    }
    auto e = lookup(field, target);
    l.map = e.map;
    l.ternary = e.ternary;
    if (!e.context.empty()) l.quasigroup = e.context;
    l.entry = std::move(e);
    return l;
}

template <Field F>
YBMap<F> need_map(const Loaded<F>& l, const std::string& target) {
    if (!l.map) throw UsageError("'" + target + "' is not a YB map");
    return *l.map;
}

template <Field F>
Ternary<F> need_ternary(const Loaded<F>& l, const std::string& target) {
    if (!l.ternary) throw UsageError("'" + target + "' is not a ternary system");
    return *l.ternary;
}

template <Field F>
std::string pick_quasigroup(const Options& o, const Loaded<F>& l, const std::string& what) {
    if (!o.quasigroup.empty()) return o.quasigroup;
    if (l.quasigroup) return *l.quasigroup;
    throw UsageError(what + " needs --quasigroup");
}

inline Verdict parse_expect(const std::string& s) {
    if (s == "yes") return Verdict::Pass;
    if (s == "no") return Verdict::Fail;
    throw UsageError("--expect must be yes or no");
}

template <Field F>
void add_equality(Outcome& out, VerificationReport rep, const std::string& identity, const std::string& note) {
    rep.identity = identity;
    rep.note = note;
    out.reports.push_back(std::move(rep));
}

// ---------------------------------------------------------------------------

template <Field F>
Outcome verify(const Options& o, const Context<F>& ctx) {
    const F& field = ctx.field;
    Outcome out;
    Loaded<F> l = load(field, o.target);
    const std::string note = l.entry ? l.entry->note : "";
    auto push = [&](VerificationReport r) {
        if (!note.empty() && r.note.empty()) r.note = note;
        out.reports.push_back(std::move(r));
    };

    if (o.check == "yb") {
        push(check_yb(need_map(l, o.target), ctx));
    } else if (o.check == "3d") {
        push(check_3d_consistency(need_ternary(l, o.target), ctx));
    } else if (o.check == "invariance") {
        const auto q = builtin_quasigroup(field, pick_quasigroup(o, l, "verify invariance"));
        push(check_invariance(need_map(l, o.target), q, ctx));
    } else if (o.check == "involution") {
        auto r = check_involution(need_map(l, o.target), ctx);
        if (!o.expect.empty()) {
            r.expected = parse_expect(o.expect);
        } else if (l.entry && l.entry->expect.involution) {
            r.expected = *l.entry->expect.involution ? Verdict::Pass : Verdict::Fail;
        }
        push(std::move(r));
    } else if (o.check == "symmetry") {
        if (o.symmetry.empty()) throw UsageError("verify symmetry needs --kind");
        const auto q = builtin_quasigroup(field, pick_quasigroup(o, l, "verify symmetry"));
        push(check_symmetry(need_ternary(l, o.target), parse_symmetry_kind(o.symmetry), q, ctx));
    } else if (o.check == "dynamical") {
        const Ternary<F> t = need_ternary(l, o.target);
        std::vector<std::string> qs;
        if (!o.quasigroup.empty()) {
            qs = {o.quasigroup};
        } else if (l.entry && !l.entry->expect.dynamical.empty()) {
            qs = l.entry->expect.dynamical;
        } else {
            qs = {pick_quasigroup(o, l, "verify dynamical")};
        }
        for (const auto& qn : qs) {
            auto d = dynamical_yb_from_ternary(t, builtin_quasigroup(field, qn), ctx, ConstructOptions{false}).object;
            push(check_dynamical_yb(d, ctx));
        }
    } else if (o.check == "lax") {
        LaxMatrix<F> L;
        YBMap<F> r;
        if (l.entry && l.entry->lax) {
            L = *l.entry->lax;
            r = o.map.empty() ? lookup_map(field, l.entry->expect.lax_map) : load(field, o.map).map.value();
        } else {
            r = need_map(l, o.target);
            std::string lax_name = o.lax;
            if (lax_name.empty()) {
                for (const auto& e : catalog_entries(field)) {
                    if (e.lax && e.expect.lax_map == o.target) lax_name = e.name;
                }
            }
            if (lax_name.empty()) throw UsageError("verify lax needs a Lax entry or --lax");
            L = lookup_lax(field, lax_name);
        }
        push(check_refactorization(L, r, ctx));
        push(check_strongness(L, r, ctx));
    } else {
        throw UsageError("unknown check '" + o.check + "'");
    }
    return out;
}

template <Field F>
Outcome construct(const Options& o, const Context<F>& ctx) {
    const F& field = ctx.field;
    Outcome out;
    const ConstructOptions copts{o.strict};

    if (o.kind == "inverse") {
        if (o.map.empty()) throw UsageError("construct inverse needs --map");
        Loaded<F> l = load(field, o.map);
        const std::string qn = pick_quasigroup(o, l, "construct inverse");
        const auto q = builtin_quasigroup(field, qn);
        auto built = ternary_from_yb(need_map(l, o.map), q, ctx, copts);
        for (auto& r : built.preconditions) out.reports.push_back(r);
        out.lines.push_back("built " + built.object.name);
        out.reports.push_back(check_3d_consistency(built.object, ctx));
        for (const auto& f : inverse_facts()) {
            if (f.map == o.map && f.quasigroup == q.name) {
                add_equality<F>(out, check_same_ternary(built.object, lookup_ternary(field, f.ternary), ctx),
                                "equals:" + f.ternary, "result coincides with catalog entry " + f.ternary);
            }
        }
        return out;
    }

    if (o.ternary.empty()) throw UsageError("construct " + o.kind + " needs --ternary");
    Loaded<F> l = load(field, o.ternary);
    const Ternary<F> t = need_ternary(l, o.ternary);

    if (o.kind == "dynamical") {
        const std::string qn = pick_quasigroup(o, l, "construct dynamical");
        auto built = dynamical_yb_from_ternary(t, builtin_quasigroup(field, qn), ctx, copts);
        for (auto& r : built.preconditions) out.reports.push_back(r);
        out.lines.push_back("built " + built.object.name);
        out.reports.push_back(check_dynamical_yb(built.object, ctx));
        return out;
    }

    const ConstructionKind kind = parse_construction_kind(o.kind);
    const std::string qn = o.quasigroup.empty() ? default_quasigroup(kind) : o.quasigroup;
    const auto q = builtin_quasigroup(field, qn);
    auto built = yb_from_ternary(t, kind, q, ctx, copts);
    for (auto& r : built.preconditions) out.reports.push_back(r);
    out.lines.push_back("built " + built.object.name);
    out.reports.push_back(check_yb(built.object, ctx));
    out.reports.push_back(roundtrip_check(t, kind, q, ctx));
    for (const auto& f : construction_facts()) {
        if (f.ternary == o.ternary && f.kind == kind && f.quasigroup == q.name) {
            add_equality<F>(out, check_same_map(built.object, lookup_map(field, f.map), ctx), "equals:" + f.map,
                            "result coincides with catalog entry " + f.map);
        }
    }
    return out;
}

template <Field F>
Outcome reduce(const Options& o, const Context<F>& ctx) {
    const F& field = ctx.field;
    Outcome out;
    if (o.map.empty() || o.constraint.empty()) throw UsageError("reduce needs --map and --constraint");
    Loaded<F> l = load(field, o.map);
    const YBMap<F> r = need_map(l, o.map);
    const auto f = parse_constraint(field, o.constraint, r.carrier.dim, o.index, r.param_arity);
    auto built = reduce_map(r, f, ctx, ConstructOptions{o.strict});
    if (built.preconditions.empty()) {
        out.reports.push_back(check_compatibility(r, f, ctx));
    } else {
        for (auto& p : built.preconditions) out.reports.push_back(p);
    }
    YBMap<F> small = built.object;
    out.lines.push_back("built " + small.name);

    std::optional<LaxMatrix<F>> small_lax;
    for (const auto& e : catalog_entries(field)) {
        if (e.lax && e.expect.lax_map == o.map) {
            small_lax = reduce_lax(*e.lax, r, f, ctx, ConstructOptions{false}).object;
        }
    }
    if (!o.reparam.empty()) {
        if (o.reparam != "homotopy") throw UsageError("--reparam supports only 'homotopy'");
        const auto g = homotopy_reparametrization(field, kHomotopyR);
        small = reparametrize(small, g, "reparametrized(" + small.name + ")");
        if (small_lax) small_lax = reparametrize(*small_lax, g, "reparametrized(" + small_lax->name + ")");
        out.lines.push_back(g.note);
    }
    out.reports.push_back(check_yb(small, ctx));
    if (small_lax) out.reports.push_back(check_refactorization(*small_lax, small, ctx));
    if (o.map == "case1_map" && o.index == 1 && o.constraint == "zero") {
        const std::string known = o.reparam.empty() ? "fourparam" : "mkdv_toda_homotopy";
        add_equality<F>(out, check_same_map(small, lookup_map(field, known), ctx), "equals:" + known,
                        "result coincides with catalog entry " + known);
    }
    return out;
}

template <Field F>
Outcome list(const F& field) {
    Outcome out;
    for (const auto& e : catalog_entries(field)) {
        std::string line = e.name + "  [" + to_string(e.kind) + ", params " + std::to_string(e.param_arity);
        if (!e.context.empty()) line += ", on " + e.context;
        line += "]  " + describe_flags(e);
        out.lines.push_back(line);
        out.lines.push_back("    " + e.note);
    }
    return out;
}

template <Field F>
Outcome dispatch(const Options& o, const F& field) {
    VerifyOptions vo;
    vo.samples = o.samples;
    vo.jobs = o.jobs;
    vo.zeta_points = o.zeta_points;
    const Context<F> ctx = make_context(field, o.seed, vo);
    if (o.command == "list") return list(field);
    if (o.command == "verify") return verify(o, ctx);
    if (o.command == "construct") return construct(o, ctx);
    if (o.command == "reduce") return reduce(o, ctx);
    if (o.command == "regress") return {run_all(ctx), {}};
    throw UsageError("missing subcommand");
}

inline bool acceptable(const VerificationReport& r) {
    return r.expected ? r.matches_expectation() : r.passed();
}

inline int exit_code(const std::vector<VerificationReport>& reports) {
    bool inconclusive = false;
    for (const auto& r : reports) {
        if (acceptable(r)) continue;
        if (r.verdict == Verdict::Inconclusive) {
            inconclusive = true;
        } else {
            return 1;
        }
    }
    return inconclusive ? 3 : 0;
}

inline void emit(const Options& o, const Outcome& res, std::ostream& out) {
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["command"] = o.command;
        j["field"] = o.field;
        j["seed"] = o.seed;
        j["samples"] = o.samples;
        j["messages"] = res.lines;
        auto arr = nlohmann::ordered_json::array();
        for (const auto& r : res.reports) arr.push_back(to_json(r));
        j["reports"] = arr;
        j["ok"] = exit_code(res.reports) == 0;
        out << j.dump(2) << "\n";
        return;
    }
    for (const auto& l : res.lines) out << l << "\n";
    if (!res.reports.empty()) {
        print_table(out, res.reports);
        out << "confidence: " << res.reports.front().confidence << "\n";
    }
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Yang-Baxter maps from 3D consistent ternary systems"};
    app.require_subcommand(1);
    auto globals = [&](CLI::App* a) {
        a->add_option("--field", o.field, "q or fp[:modulus]");
        a->add_option("--samples", o.samples, "samples per identity")->check(CLI::PositiveNumber);
        a->add_option("--seed", o.seed, "RNG seed");
        a->add_option("--zeta-points", o.zeta_points, "random spectral values per Lax check");
        a->add_option("--jobs", o.jobs, "worker threads (0: all cores)");
        a->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
        a->add_flag("--strict,!--no-strict", o.strict, "enforce construction preconditions");
    };
    globals(&app);

    auto* list = app.add_subcommand("list", "catalog entries and their expected properties");
    auto* verify = app.add_subcommand("verify", "run one verifier on a catalog entry or definition file");
    verify->add_option("check", o.check, "yb|3d|lax|invariance|involution|dynamical|symmetry")
        ->required()
        ->check(CLI::IsMember({"yb", "3d", "lax", "invariance", "involution", "dynamical", "symmetry"}));
    verify->add_option("target", o.target, "catalog name or .yb file")->required();
    verify->add_option("--quasigroup", o.quasigroup, "quasigroup for invariance, symmetry, dynamical");
    verify->add_option("--expect", o.expect, "expected involution verdict: yes|no");
    verify->add_option("--kind", o.symmetry, "symmetry kind: homogeneous|division|loop|abelian");
    verify->add_option("--lax", o.lax, "Lax matrix for `verify lax <map>`");
    verify->add_option("--map", o.map, "map for `verify lax <lax entry>`");

    auto* construct = app.add_subcommand("construct", "build a map or ternary system, then verify it");
    construct
        ->add_option("kind", o.kind, "group|abelian_additive|division|loop|abelian_general|dynamical|inverse")
        ->required();
    construct->add_option("--ternary", o.ternary, "source ternary system");
    construct->add_option("--map", o.map, "source map (inverse)");
    construct->add_option("--quasigroup", o.quasigroup, "structure to build on");

    auto* reduce = app.add_subcommand("reduce", "reduce a map through a compatible constraint");
    reduce->add_option("--map", o.map, "map to reduce")->required();
    reduce->add_option("--constraint", o.constraint, "zero | constant:<c> | expr:<expression>")->required();
    reduce->add_option("--index", o.index, "constrained coordinate (1-based)");
    reduce->add_option("--reparam", o.reparam, "apply `homotopy` reindexing to the result");

    auto* regress = app.add_subcommand("regress", "run every catalog expectation");
    for (auto* s : {list, verify, construct, reduce, regress}) {
        globals(s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    for (auto* s : app.get_subcommands()) o.command = s->get_name();

    try {
        Outcome res;
        if (o.field == "q") {
            res = detail::dispatch(o, RationalField{});
        } else if (o.field == "fp" || o.field.rfind("fp:", 0) == 0) {
            std::uint64_t p = kMersenne61;
            if (o.field.size() > 3) {
                const std::string digits = o.field.substr(3);
                if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 19) {
                    throw UsageError("bad modulus in --field " + o.field);
                }
                p = std::stoull(digits);
            }
            PrimeField f = [&] {
                try {
                    return PrimeField(p);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            res = detail::dispatch(o, f);
        } else {
            throw UsageError("--field must be q, fp or fp:<prime>");
        }
        detail::emit(o, res, out);
        return detail::exit_code(res.reports);
    } catch (const PreconditionFailed& e) {
        Outcome res;
        res.lines.push_back(e.what());
        res.reports = e.reports;
        detail::emit(o, res, out);
        return 1;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UndeclaredSymbol& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ArityMismatch& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownEntry& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const UnknownQuasigroup& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const IncompatibleStructure& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ybmap::cli
