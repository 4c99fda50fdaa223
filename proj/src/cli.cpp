#include "polymf/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <sstream>

#include "polymf/category.hpp"
#include "polymf/errors.hpp"
#include "polymf/laws.hpp"
#include "polymf/parse.hpp"
#include "polymf/serialize.hpp"

namespace polymf::cli {

namespace {

struct Options {
    std::string expr;
    std::vector<std::string> splits;
    bool monomial = false;
    std::string vars;
    std::string format = "text";
    std::string output;
    std::string method = "doolittle";
    std::string which = "first";
    bool pivot = false;
    bool disjoint = false;
    std::string file1;
    std::string file2;
    std::uint64_t seed = 1;
    std::size_t cases = 25;
    std::optional<std::size_t> only_case;
    unsigned threads = 0;
    std::string fault = "none";
};

/// A usage problem found after CLI11 accepted the arguments.
class UsageError : public Error {
public:
    using Error::Error;
};

ContextPtr context_for(const Options& o, const std::vector<std::string>& texts) {
    if (o.vars.empty()) return context_from_texts(texts);
    std::vector<std::string> names;
    std::stringstream ss(o.vars);
    for (std::string name; std::getline(ss, name, ',');) {
        name.erase(std::remove_if(name.begin(), name.end(), [](unsigned char c) { return std::isspace(c); }),
                   name.end());
        names.push_back(name);
    }
    return VariableContext::make(std::move(names));
}

std::string provenance_text(const std::optional<Provenance>& p) {
    if (!p) return "none";
    return to_string(p->method) + ", " + to_string(p->decomposed) + " factor, " +
           (p->pivoted ? "pivoted" : "no pivoting");
}

std::string vars_text(const ContextPtr& ctx) {
    std::string s;
    if (ctx) {
        for (const auto& n : ctx->names()) s += (s.empty() ? "" : ",") + n;
    }
    return s;
}

std::string mf2_text(const MF2& x) {
    std::ostringstream os;
    os << "MF2 of f = " << x.target().to_string() << "\n";
    os << "size: " << x.size() << "\n";
    os << "P =\n" << x.p().to_pretty_string("  ");
    os << "Q =\n" << x.q().to_pretty_string("  ");
    os << "certificate P*Q = f*I: PASS\n";
    return os.str();
}

std::string mf3_text(const MF3& x) {
    std::ostringstream os;
    os << "MF3 of f = " << x.target().to_string() << "\n";
    os << "size: " << x.size() << "\n";
    os << "vars: " << vars_text(context_of(x)) << "\n";
    os << "provenance: " << provenance_text(x.provenance()) << "\n";
    for (int k = 1; k <= 3; ++k) os << "A" << k << " =\n" << x.component(k).to_pretty_string("  ");
    os << "certificate A1*A2*A3 = f*I: PASS\n";
    return os.str();
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
    if (o.output.empty()) {
        out << text;
    } else {
        write_text_file(o.output, text);
    }
}

std::string render(const Options& o, const MF2& x) {
    return o.format == "json" ? dump_json(mf2_to_json(x)) : mf2_text(x);
}

std::string render(const Options& o, const MF3& x) {
    return o.format == "json" ? dump_json(mf3_to_json(x)) : mf3_text(x);
}

std::vector<TermSplit> parse_split_options(const Options& o, const ContextPtr& ctx) {
    std::vector<TermSplit> out;
    for (const auto& s : o.splits) {
        const auto colon = s.find(':');
        if (colon == std::string::npos) throw UsageError("split '" + s + "' must look like LEFT:RIGHT");
        out.push_back({parse_polynomial(s.substr(0, colon), ctx), parse_polynomial(s.substr(colon + 1), ctx)});
    }
    return out;
}

MF2 build_mf2(const Options& o) {
    std::vector<std::string> texts{o.expr};
    for (const auto& s : o.splits) texts.push_back(s.substr(0, s.find(':'))), texts.push_back(s.substr(s.find(':') + 1));
    const ContextPtr ctx = context_for(o, texts);
    const Polynomial f = parse_polynomial(o.expr, ctx);
    if (!o.splits.empty()) return standard_method(f, parse_split_options(o, ctx));
    if (o.monomial) return standard_method(f);
    return standard_method(f, splits_from_expression(o.expr, ctx));
}

MF3 build_mf3(const Options& o) {
    const MF2 x = build_mf2(o);
    const auto method = parse_lu_method(o.method);
    const auto which = parse_factor(o.which);
    if (!method) throw UsageError("unknown method '" + o.method + "' (expected doolittle or crout)");
    if (!which) throw UsageError("unknown factor '" + o.which + "' (expected first or second)");
    try {
        return promote(x, *which, *method, o.pivot);
    } catch (const SingularPivotError& e) {
        throw SingularPivotError(e.order());
    }
}

MF3 load_mf3(const std::string& path) {
    const Json j = read_json_file(path);
    if (detect_kind(j) != ArtifactKind::MF3) throw FormatError("'" + path + "' does not hold an MF3");
    return mf3_from_json(j);
}

int cmd_factor2(const Options& o, std::ostream& out) {
    emit(o, out, render(o, build_mf2(o)));
    return kSuccess;
}

int cmd_factor3(const Options& o, std::ostream& out) {
    emit(o, out, render(o, build_mf3(o)));
    return kSuccess;
}

int cmd_tensor3(const Options& o, std::ostream& out) {
    const MF3 x = load_mf3(o.file1);
    const MF3 y = load_mf3(o.file2);
    emit(o, out, render(o, mtp3(x, y, o.disjoint ? VariablePolicy::Disjoint : VariablePolicy::Shared)));
    return kSuccess;
}

std::string where(const CertificateReport& r) {
    return "entry (" + std::to_string(r.row) + ", " + std::to_string(r.col) + ") is " + r.actual.to_string() +
           ", expected " + r.expected.to_string();
}

int cmd_verify(const Options& o, std::ostream& out) {
    const std::filesystem::path path(o.file1);
    const Json j = read_json_file(path);
    std::ostringstream os;
    bool ok = true;
    switch (detect_kind(j)) {
        case ArtifactKind::MF2: {
            const RawMF2 r = raw_mf2_from_json(j);
            const CertificateReport rep = check_scalar_identity(r.p * r.q, r.f);
            ok = rep.ok;
            if (ok) {
                os << "PASS: MF2 of " << r.f.to_string() << ", size " << r.p.rows() << ", P*Q = f*I\n";
            } else {
                os << "FAIL: P*Q = f*I: " << where(rep) << "\n";
            }
            break;
        }
        case ArtifactKind::MF3: {
            const RawMF3 r = raw_mf3_from_json(j);
            const CertificateReport rep = check_triple(r.a1, r.a2, r.a3, r.f);
            ok = rep.ok;
            if (ok) {
                os << "PASS: MF3 of " << r.f.to_string() << ", size " << r.a1.rows() << ", A1*A2*A3 = f*I\n";
            } else {
                os << "FAIL: A1*A2*A3 = f*I: " << where(rep) << "\n";
            }
            break;
        }
        case ArtifactKind::Morphism: {
            const RawMorphism r = raw_morphism_from_json(j, path.parent_path());
            for (const auto* side : {&r.source, &r.target}) {
                const CertificateReport rep = check_triple(side->a1, side->a2, side->a3, side->f);
                if (!rep.ok) {
                    os << "FAIL: " << (side == &r.source ? "source" : "target") << " A1*A2*A3 = f*I: " << where(rep)
                       << "\n";
                    ok = false;
                    break;
                }
            }
            if (ok && r.f != r.source.f) {
                os << "FAIL: morphism polynomial " << r.f.to_string() << " differs from the source's "
                   << r.source.f.to_string() << "\n";
                ok = false;
            }
            if (ok) {
                const MF3 source = MF3::certify(r.source.a1, r.source.a2, r.source.a3, r.source.f);
                const MF3 target = MF3::certify(r.target.a1, r.target.a2, r.target.a3, r.target.f);
                const MorphismReport rep = check_morphism_equations(r.alpha, r.beta, r.delta, source, target);
                ok = rep.ok;
                if (ok) {
                    os << "PASS: morphism of " << r.f.to_string() << ", " << source.size() << " -> " << target.size()
                       << ", equations 1-3 hold\n";
                } else {
                    os << "FAIL: " << rep.message << "\n";
                }
            }
            break;
        }
    }
    out << os.str();
    return ok ? kSuccess : kFailure;
}

Json report_json(const laws::LawReport& r) {
    Json j;
    j["seed"] = r.seed;
    j["cases"] = r.cases;
    if (r.only_case) j["case"] = *r.only_case;
    Json suites = Json::array();
    for (const auto& s : r.suites) {
        Json e;
        e["name"] = s.name;
        e["passed"] = s.passed;
        e["failed"] = s.failed;
        if (s.first_failure) {
            e["first_failure"] = *s.first_failure;
            e["detail"] = s.detail;
        }
        suites.push_back(e);
    }
    j["suites"] = suites;
    j["result"] = r.ok() ? "PASS" : "FAIL";
    return j;
}

int cmd_laws(const Options& o, std::ostream& out) {
    laws::LawOptions lo;
    lo.seed = o.seed;
    lo.cases = o.cases;
    lo.only_case = o.only_case;
    lo.threads = o.threads;
    if (o.fault == "associativity") {
        lo.fault = laws::Fault::BreakAssociativity;
    } else if (o.fault == "shuffle") {
        lo.fault = laws::Fault::WrongShuffle;
    } else if (o.fault != "none") {
        throw UsageError("unknown fault '" + o.fault + "'");
    }
    const laws::LawReport report = laws::run_laws(lo);
    emit(o, out, o.format == "json" ? dump_json(report_json(report)) : report.to_text());
    return report.ok() ? kSuccess : kFailure;
}

int cmd_demo(std::ostream& out) {
    const auto ctx2 = VariableContext::make({"x", "y"});
    const auto ctx3 = VariableContext::make({"x", "y", "z"});
    const Polynomial f = parse_polynomial("x^2 + y^2", ctx2);
    const Polynomial g = parse_polynomial("x*y*z + z*x^2", ctx3);
    const MF2 xf = standard_method(f, splits_from_expression("x^2 + y^2", ctx2));
    const MF2 xg = standard_method(g, splits_from_expression("x*y*z + z*x^2", ctx3));
    out << "== factor2 x^2 + y^2\n" << mf2_text(xf) << "\n";
    const MF3 tf = promote(xf, Factor::First, LUMethod::Doolittle);
    out << "== factor3 x^2 + y^2 (doolittle, first)\n" << mf3_text(tf) << "\n";
    out << "== factor2 x*y*z + z*x^2\n" << mf2_text(xg) << "\n";
    const MF3 tg = promote(xg, Factor::First, LUMethod::Doolittle);
    out << "== factor3 x*y*z + z*x^2 (doolittle, first)\n" << mf3_text(tg) << "\n";
    const MF3 t = mtp3(tf, tg);
    out << "== tensor3\n" << mf3_text(t) << "\n";
    const PermutationMatrix s = commutativity_witness(tf, tg);
    const MF3 swapped = mtp3(tg, tf).embed(context_of(t));
    bool similar = true;
    for (int k = 1; k <= 3; ++k) similar = similar && swapped.component(k) == s.conjugate(t.component(k));
    out << "== commutativity: components of the swapped product are S-conjugate: " << (similar ? "PASS" : "FAIL")
        << "\n";
    return similar ? kSuccess : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Exact matrix factorizations of polynomials: 2- and 3-factor constructions and their tensor product",
                 "polymf3"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every verb");

    auto add_expr_options = [&](CLI::App* sub) {
        sub->add_option("expr", o.expr, "Polynomial expression, e.g. \"x*y + (x^2+y*z)*z\"")->required();
        sub->add_option("--split", o.splits, "Explicit summand LEFT:RIGHT (repeatable)");
        sub->add_flag("--monomial", o.monomial, "Split the expanded terms by the monomial rule");
        sub->add_option("--vars", o.vars, "Comma-separated variable order, e.g. x,y,z");
    };
    auto add_output_options = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("-o,--output", o.output, "Write the output to a file");
    };

    auto* factor2 = app.add_subcommand("factor2", "Matrix factorization (P, Q) by the standard method");
    add_expr_options(factor2);
    add_output_options(factor2);

    auto* factor3 = app.add_subcommand("factor3", "Three-factor factorization by LU promotion of factor2");
    add_expr_options(factor3);
    add_output_options(factor3);
    factor3->add_option("--method", o.method, "LU method")->check(CLI::IsMember({"doolittle", "crout"}));
    factor3->add_option("--which", o.which, "Factor to decompose")->check(CLI::IsMember({"first", "second"}));
    factor3->add_flag("--pivot", o.pivot, "Allow row exchanges on zero pivots");

    auto* tensor3 = app.add_subcommand("tensor3", "Multiplicative tensor product of two MF3 files");
    tensor3->add_option("file1", o.file1, "First MF3 JSON file")->required();
    tensor3->add_option("file2", o.file2, "Second MF3 JSON file")->required();
    tensor3->add_flag("--disjoint", o.disjoint, "Reject variables shared by both factorizations");
    add_output_options(tensor3);

    auto* verify = app.add_subcommand("verify", "Check an MF2, MF3 or morphism JSON file");
    verify->add_option("file", o.file1, "JSON file")->required();

    auto* laws = app.add_subcommand("laws", "Randomized checks of the tensor product laws");
    laws->add_option("--seed", o.seed, "Seed");
    laws->add_option("--cases", o.cases, "Number of cases");
    laws->add_option("--case", o.only_case, "Run only this case index");
    laws->add_option("--threads", o.threads, "Worker threads (0: all cores)");
    laws->add_option("--inject-fault", o.fault, "")->group("");
    add_output_options(laws);

    auto* demo = app.add_subcommand("demo", "Worked example: two three-factor factorizations and their product");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*factor2) return cmd_factor2(o, out);
        if (*factor3) return cmd_factor3(o, out);
        if (*tensor3) return cmd_tensor3(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*laws) return cmd_laws(o, out);
        if (*demo) return cmd_demo(out);
    } catch (const SingularPivotError& e) {
        err << "error: " << e.what() << "\n"
            << "hint: try --pivot, --which second or --method crout\n";
        return kFailure;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const ContextError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace polymf::cli
