#include "mdade/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mdade/burnside.hpp"
#include "mdade/context.hpp"
#include "mdade/dade.hpp"
#include "mdade/lambda_ring.hpp"
#include "mdade/mackey.hpp"
#include "mdade/verify.hpp"

namespace mdade {

namespace {

using json = nlohmann::ordered_json;

json matrix_json(const ExactMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.to_strings()) rows.push_back(row);
    return rows;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit_matrix_csv(const ExactMatrix& m, std::ostream& out) {
    for (const auto& row : m.to_strings()) {
        for (size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << csv_quote(row[j]);
        out << "\n";
    }
}

void emit_matrix_text(const ExactMatrix& m, std::ostream& out) {
    auto rows = m.to_strings();
    size_t width = 1;
    for (const auto& r : rows)
        for (const auto& v : r) width = std::max(width, v.size());
    for (const auto& r : rows) {
        for (const auto& v : r) out << std::string(width + 1 - v.size(), ' ') << v;
        out << "\n";
    }
}

std::string subgroup_label(const GroupContext& ctx, int idx) {
    std::ostringstream os;
    os << "H" << idx << "(|" << ctx.lat.subgroups[idx].size() << "|)";
    return os.str();
}

std::string sq_label(const GroupContext& ctx, int cls) {
    const Subquotient& r = ctx.sq().reps[cls];
    std::ostringstream os;
    os << "[H" << r.big << ",H" << r.small << "]";
    return os.str();
}

struct Options {
    std::string format = "text";
    std::string field = "Q";
    int max_order = 32;
    std::uint64_t seed = 1;
};

void emit(const json& j, const Options& opt, std::ostream& out,
          const std::function<void()>& text_renderer,
          const std::function<void()>& csv_renderer) {
    if (opt.format == "json")
        out << j.dump(2) << "\n";
    else if (opt.format == "csv")
        csv_renderer();
    else
        text_renderer();
}

int cmd_lattice(const std::string& spec, const Options& opt, std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    json j;
    j["group"] = ctx->name();
    j["order"] = ctx->order();
    json subs = json::array();
    for (int i = 0; i < int(ctx->lat.subgroups.size()); ++i) {
        json s;
        s["index"] = i;
        s["order"] = ctx->lat.subgroups[i].size();
        s["members"] = ctx->lat.subgroups[i].members;
        s["class"] = ctx->lat.class_of[i];
        s["normalizer"] = ctx->lat.normalizer_of[i];
        s["cyclic"] = bool(ctx->lat.cyclic[i]);
        subs.push_back(std::move(s));
    }
    j["subgroups"] = std::move(subs);
    json classes = json::array();
    for (int c = 0; c < ctx->lat.num_classes(); ++c) classes.push_back(ctx->lat.classes[c]);
    j["classes"] = std::move(classes);
    json sqs = json::array();
    for (int c = 0; c < ctx->sq().num_classes(); ++c) {
        json s;
        s["index"] = c;
        s["big"] = ctx->sq().reps[c].big;
        s["small"] = ctx->sq().reps[c].small;
        s["orbit_size"] = int(ctx->sq().classes[c].size());
        sqs.push_back(std::move(s));
    }
    j["subquotient_classes"] = std::move(sqs);

    emit(j, opt, out,
         [&] {
             out << ctx->name() << ": order " << ctx->order() << ", "
                 << ctx->lat.subgroups.size() << " subgroups in " << ctx->lat.num_classes()
                 << " classes, " << ctx->sq().num_classes() << " subquotient classes\n";
             for (int i = 0; i < int(ctx->lat.subgroups.size()); ++i) {
                 out << "  " << subgroup_label(*ctx, i) << " members=[";
                 const auto& m = ctx->lat.subgroups[i].members;
                 for (size_t k = 0; k < m.size(); ++k) out << (k ? " " : "") << m[k];
                 out << "] class=" << ctx->lat.class_of[i]
                     << " normalizer=H" << ctx->lat.normalizer_of[i]
                     << (ctx->lat.cyclic[i] ? " cyclic" : "") << "\n";
             }
             out << "subquotient classes:";
             for (int c = 0; c < ctx->sq().num_classes(); ++c)
                 out << " " << sq_label(*ctx, c);
             out << "\n";
         },
         [&] {
             out << "index,order,class,normalizer,cyclic\n";
             for (int i = 0; i < int(ctx->lat.subgroups.size()); ++i)
                 out << i << "," << ctx->lat.subgroups[i].size() << ","
                     << ctx->lat.class_of[i] << "," << ctx->lat.normalizer_of[i] << ","
                     << int(ctx->lat.cyclic[i]) << "\n";
         });
    return 0;
}

int cmd_marks(const std::string& spec, const Options& opt, std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    MarkTable t = mark_table(*ctx);
    json j;
    j["group"] = ctx->name();
    j["order"] = ctx->order();
    j["marks"] = matrix_json(t.m);
    emit(j, opt, out,
         [&] {
             out << "table of marks of " << ctx->name()
                 << " (rows [G/H], columns K, canonical class order)\n";
             emit_matrix_text(t.m, out);
         },
         [&] { emit_matrix_csv(t.m, out); });
    return 0;
}

int cmd_lambda(const std::string& spec, const Options& opt, int left, int right,
               std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    const int n = ctx->sq().num_classes();
    if (left < 0 || left >= n || right < 0 || right >= n)
        throw std::invalid_argument("lambda: class index out of range (have " +
                                    std::to_string(n) + " classes)");
    LambdaElement prod = lambda_mult(lambda_basis(*ctx, left), lambda_basis(*ctx, right));
    json j;
    j["group"] = ctx->name();
    j["left"] = sq_label(*ctx, left);
    j["right"] = sq_label(*ctx, right);
    json coords = json::array();
    for (int c = 0; c < n; ++c)
        if (prod.coords[c] != 0) {
            json term;
            term["class"] = c;
            term["label"] = sq_label(*ctx, c);
            term["coefficient"] = prod.coords[c].get_str();
            coords.push_back(std::move(term));
        }
    j["product"] = std::move(coords);
    emit(j, opt, out,
         [&] {
             out << sq_label(*ctx, left) << " * " << sq_label(*ctx, right) << " =";
             bool any = false;
             for (int c = 0; c < n; ++c)
                 if (prod.coords[c] != 0) {
                     out << (any ? " + " : " ") << prod.coords[c].get_str() << "*"
                         << sq_label(*ctx, c);
                     any = true;
                 }
             if (!any) out << " 0";
             out << "\n";
         },
         [&] {
             out << "class,label,coefficient\n";
             for (int c = 0; c < n; ++c)
                 if (prod.coords[c] != 0)
                     out << c << "," << sq_label(*ctx, c) << "," << prod.coords[c].get_str()
                         << "\n";
         });
    return 0;
}

int cmd_alpha(const std::string& spec, const Options& opt, std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    ExactMatrix a = alpha_matrix(*ctx);
    json j;
    j["group"] = ctx->name();
    j["rows"] = a.rows();
    j["cols"] = a.cols();
    j["rank"] = rank(a);
    j["alpha"] = matrix_json(a);
    emit(j, opt, out,
         [&] {
             out << "alpha of " << ctx->name() << ": " << a.rows() << "x" << a.cols()
                 << ", rank " << rank(a) << "\n";
             emit_matrix_text(a, out);
         },
         [&] { emit_matrix_csv(a, out); });
    return 0;
}

int cmd_linmu(const std::string& spec, const Options& opt, std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    ExactMatrix direct = lin_mu_direct(*ctx);
    ExactMatrix composed = lin_mu_via_alpha(*ctx);
    ExactMatrix diff = subtract(direct, composed);
    ExactMatrix ker = nullspace(composed);
    json j;
    j["group"] = ctx->name();
    j["direct"] = matrix_json(direct);
    j["via_alpha"] = matrix_json(composed);
    j["difference_zero"] = diff.is_zero();
    j["rank"] = rank(composed);
    j["kernel_dimension"] = ker.cols();
    j["kernel"] = matrix_json(ker);
    emit(j, opt, out,
         [&] {
             out << "Mackey linearization of " << ctx->name() << ": " << composed.rows()
                 << "x" << composed.cols() << ", rank " << rank(composed)
                 << ", kernel dimension " << ker.cols() << "\n";
             out << "routes agree: " << (diff.is_zero() ? "yes" : "NO") << "\n";
             if (ker.cols() > 0) {
                 out << "kernel basis (columns over subquotient classes):\n";
                 emit_matrix_text(ker, out);
             }
         },
         [&] { emit_matrix_csv(ker, out); });
    return 0;
}

int cmd_dade(const std::string& spec, const Options& opt, std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    int d = dmu_dim(*ctx);
    ExactMatrix u = underline_dmu(*ctx);
    MackeyDadeModel model = mackey_dade_model(ctx);
    json j;
    j["group"] = ctx->name();
    j["dmu_dim"] = d;
    json blocks = json::array();
    for (const auto& b : model.blocks) {
        json bj;
        bj["subgroup_class"] = b.class_index;
        bj["weyl_order"] = ctx->weyl(b.rep_subgroup).w->order();
        bj["dade_dim"] = int(b.nc_classes.size());
        blocks.push_back(std::move(bj));
    }
    j["blocks"] = std::move(blocks);
    j["underline_dim"] = u.cols();
    j["underline_basis"] = matrix_json(u);
    emit(j, opt, out,
         [&] {
             out << "QD_mu(" << ctx->name() << ") has dimension " << d << "\n";
             for (const auto& b : model.blocks)
                 out << "  block Q-class " << b.class_index << ": Weyl order "
                     << ctx->weyl(b.rep_subgroup).w->order() << ", Dade dimension "
                     << b.nc_classes.size() << "\n";
             out << "deflation-restriction core dimension: " << u.cols() << "\n";
             if (u.cols() > 0) emit_matrix_text(u, out);
         },
         [&] { emit_matrix_csv(u, out); });
    return 0;
}

int cmd_mackey(const std::string& spec, const Options& opt, std::ostream& out) {
    auto ctx = make_context(spec, opt.max_order);
    json j;
    j["group"] = ctx->name();
    bool small = ctx->order() <= 8;
    if (small) {
        MackeyAlgebra alg = build_algebra(ctx);
        j["algebra_dimension"] = alg.dim();
    } else {
        j["algebra_dimension"] = nullptr;
        j["note"] = "structure constants are computed only for order <= 8";
    }
    Field f = opt.field == "Fp" ? Field::Fp : Field::Q;
    long p = f == Field::Fp ? ctx->group.prime : 0;
    MackeyFunctor bu = burnside_functor(ctx, f, p);
    FunctorCheckReport rep = validate_functor(bu, opt.seed, small);
    j["field"] = opt.field;
    j["burnside_functor_relations"] = rep.ok;
    j["relation_checks"] = rep.checks;
    emit(j, opt, out,
         [&] {
             out << "Mackey algebra of " << ctx->name() << ": ";
             if (small)
                 out << "dimension " << j["algebra_dimension"].get<int>() << "\n";
             else
                 out << "(order > 8, structure constants skipped)\n";
             out << "Burnside functor relations over " << opt.field << ": "
                 << (rep.ok ? "pass" : "FAIL") << " (" << rep.checks << " identities)\n";
         },
         [&] {
             out << "group,algebra_dimension,relations_ok,relation_checks\n";
             out << ctx->name() << ","
                 << (small ? std::to_string(build_algebra(ctx).dim()) : std::string()) << ","
                 << int(rep.ok) << "," << rep.checks << "\n";
         });
    return 0;
}

json report_json(const VerificationReport& rep) {
    json j;
    j["group"] = rep.group;
    j["order"] = rep.order;
    json checks = json::array();
    for (const CheckResult& c : rep.checks) {
        json cj;
        cj["id"] = c.id;
        cj["theorem"] = c.theorem;
        cj["status"] = c.passed ? "pass" : "fail";
        cj["witness"] = c.witness;
        cj["millis"] = c.millis;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

int cmd_verify(std::vector<std::string> specs, const Options& opt, std::ostream& out) {
    std::sort(specs.begin(), specs.end());
    specs.erase(std::unique(specs.begin(), specs.end()), specs.end());
    std::vector<VerificationReport> reports;
    for (const std::string& s : specs)
        reports.push_back(run_catalog(s, opt.seed, opt.max_order));

    bool all = true;
    for (const auto& r : reports) all = all && r.all_passed();

    json j = json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    emit(reports.size() == 1 ? report_json(reports[0]) : j, opt, out,
         [&] {
             for (const auto& r : reports) {
                 out << r.group << " (order " << r.order << ")\n";
                 for (const CheckResult& c : r.checks)
                     out << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.id << " -- "
                         << c.theorem << " --" << c.witness << " (" << c.millis << " ms)\n";
             }
             out << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
         },
         [&] {
             out << "group,check,theorem,status,millis,witness\n";
             for (const auto& r : reports)
                 for (const CheckResult& c : r.checks)
                     out << csv_quote(r.group) << "," << c.id << "," << csv_quote(c.theorem)
                         << "," << (c.passed ? "pass" : "fail") << "," << c.millis << ","
                         << csv_quote(c.witness) << "\n";
         });
    return all ? 0 : 1;
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations with Mackey functors, subquotient rings and Dade groups"};
    app.require_subcommand(1);

    Options opt;
    std::string group;
    std::vector<std::string> groups;
    int left = 0, right = 0;

    auto add_common = [&](CLI::App* sub, bool multi_group) {
        if (multi_group)
            sub->add_option("--group", groups, "group spec (repeatable)")->required();
        else
            sub->add_option("--group", group, "group spec, e.g. C4, D8, C2xC2, He27")
                ->required();
        sub->add_option("--field", opt.field, "coefficient field for functor checks")
            ->check(CLI::IsMember({"Q", "Fp"}));
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--max-order", opt.max_order, "largest accepted group order");
        sub->add_option("--seed", opt.seed, "seed for randomized property checks");
    };

    CLI::App* lattice = app.add_subcommand("lattice", "subgroup and subquotient tables");
    add_common(lattice, false);
    CLI::App* marks = app.add_subcommand("marks", "table of marks");
    add_common(marks, false);
    CLI::App* lambda = app.add_subcommand("lambda", "product of two subquotient classes");
    add_common(lambda, false);
    lambda->add_option("--left", left, "left basis class index")->required();
    lambda->add_option("--right", right, "right basis class index")->required();
    CLI::App* alpha = app.add_subcommand("alpha", "the alpha matrix");
    add_common(alpha, false);
    CLI::App* linmu = app.add_subcommand("linmu", "both Mackey linearizations and the kernel");
    add_common(linmu, false);
    CLI::App* dade = app.add_subcommand("dade", "Mackey-Dade dimensions and the core basis");
    add_common(dade, false);
    CLI::App* mackey = app.add_subcommand("mackey", "Mackey algebra dimension and relations");
    add_common(mackey, false);
    CLI::App* verify = app.add_subcommand("verify", "run the whole verification catalog");
    add_common(verify, true);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (lattice->parsed()) return cmd_lattice(group, opt, out);
        if (marks->parsed()) return cmd_marks(group, opt, out);
        if (lambda->parsed()) return cmd_lambda(group, opt, left, right, out);
        if (alpha->parsed()) return cmd_alpha(group, opt, out);
        if (linmu->parsed()) return cmd_linmu(group, opt, out);
        if (dade->parsed()) return cmd_dade(group, opt, out);
        if (mackey->parsed()) return cmd_mackey(group, opt, out);
        if (verify->parsed()) return cmd_verify(groups, opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace mdade
