// Command-line front end: every subcommand wraps one library operation
// family and prints a single JSON document (stat prints JSON lines).
// Exit codes: 0 success, 1 verdict failure, 2 input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <skewsieve/skewsieve.hpp>

#include <iostream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace skewsieve;

namespace {

json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

json poly_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const Int& c : p.coeffs()) coeffs.push_back(int_json(c));
    return json{{"coeffs", coeffs}};
}

json tableau_rows_json(const SkewShape& shape, const std::vector<std::vector<int>>& rows) {
    json out = json::array();
    for (int r = 1; r <= shape.rows(); ++r) {
        json row = json::array();
        for (int c = shape.row_start(r); c <= shape.row_end(r); ++c)
            row.push_back(rows[r - 1][c - 1]);
        out.push_back(row);
    }
    return out;
}

json tuple_json(const TableauTuple& t) {
    json out = json::array();
    for (int e = 1; e <= t.entry_count(); ++e)
        out.push_back(json{{"shape", t.shapes[e - 1].to_string()},
                           {"rows", tableau_rows_json(t.shapes[e - 1], t.fill[e - 1])}});
    return out;
}

TableauTuple tuple_from_json(const json& spec) {
    TableauTuple t;
    for (const auto& entry : spec) {
        SkewShape shape = SkewShape::parse(entry.at("shape").get<std::string>());
        t.shapes.push_back(shape);
        std::vector<std::vector<int>> fill(shape.rows());
        const auto& rows = entry.at("rows");
        for (int r = 1; r <= shape.rows(); ++r) {
            fill[r - 1].assign(shape.row_end(r), 0);
            const auto& row = rows.at(r - 1);
            int i = 0;
            for (int c = shape.row_start(r); c <= shape.row_end(r); ++c)
                fill[r - 1][c - 1] = row.at(i++).get<int>();
        }
        t.fill.push_back(std::move(fill));
    }
    return t;
}

json bst_json(const BorderStripTableau& b) {
    return json{{"shape", b.shape.to_string()},
                {"rows", tableau_rows_json(b.shape, b.filling())},
                {"height", b.total_height()}};
}

json certificate_json(const CspCertificate& cert) {
    json values = json::object(), sums = json::object(), orbits = json::object();
    for (const auto& [d, v] : cert.values) values[std::to_string(d)] = int_json(v);
    for (const auto& [k, v] : cert.mobius_sums) sums[std::to_string(k)] = int_json(v);
    for (const auto& [k, v] : cert.orbit_counts) orbits[std::to_string(k)] = int_json(v);
    json out{{"order", cert.order},
             {"values", values},
             {"mobiusSums", sums},
             {"verdict", to_string(cert.verdict)}};
    if (cert.exists())
        out["orbitCounts"] = orbits;
    else
        out["witness"] = cert.witness;
    return out;
}

json report_json(const BoundReport& r) {
    return json{{"claim", r.claim},
                {"range", r.range},
                {"margin", r.margin},
                {"pass", r.pass},
                {"notes", r.notes}};
}

IntPolynomial poly_from_csv(const std::string& csv) {
    std::vector<Int> coeffs;
    std::string token;
    std::istringstream in(csv);
    while (std::getline(in, token, ',')) coeffs.emplace_back(token);
    return IntPolynomial(std::move(coeffs));
}

void emit(const json& doc) { std::cout << doc.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of border-strip tableaux and cyclic sieving"};
    app.require_subcommand(1);
    unsigned long seed = 0;
    int jobs = 1;
    app.add_option("--seed", seed, "reserved; all tie-breaking is deterministic");
    app.add_option("--jobs", jobs, "worker threads for verification sweeps");

    std::string shape_arg, nu_arg, type_arg, poly_arg, tuple_arg, claim_arg, rect_arg, hook_arg;
    int d_arg = 1, order_arg = 1, limit_arg = 10, n_arg = 1, r_arg = 1, index_arg = 0;
    int power_arg = -1, stretch_arg = 0;
    bool count_flag = false, list_flag = false;

    auto* core_cmd = app.add_subcommand("core", "d-core of a partition");
    core_cmd->add_option("shape", shape_arg)->required();
    core_cmd->add_option("--d", d_arg)->required();

    auto* quot_cmd = app.add_subcommand("quotient", "skew d-quotient");
    quot_cmd->add_option("shape", shape_arg)->required();
    quot_cmd->add_option("--d", d_arg)->required();

    auto* bst_cmd = app.add_subcommand("bst", "border-strip tableaux");
    bst_cmd->add_option("shape", shape_arg)->required();
    bst_cmd->add_option("--d", d_arg);
    bst_cmd->add_option("--type", type_arg, "strip sizes, e.g. 3,3,3,3");
    bst_cmd->add_flag("--count", count_flag);
    bst_cmd->add_flag("--list", list_flag);

    auto* lw_cmd = app.add_subcommand("littlewood", "Littlewood map and inverse");
    lw_cmd->add_option("shape", shape_arg)->required();
    lw_cmd->add_option("--d", d_arg)->required();
    lw_cmd->add_option("--index", index_arg, "which tableau of BST(shape,d) to map");
    lw_cmd->add_option("--from-tuple", tuple_arg, "JSON tuple; apply the inverse map");

    auto* char_cmd = app.add_subcommand("char", "skew character value");
    char_cmd->add_option("shape", shape_arg)->required();
    char_cmd->add_option("--nu", nu_arg)->required();

    auto* fd_cmd = app.add_subcommand("fakedeg", "fake-degree polynomial");
    fd_cmd->add_option("shape", shape_arg)->required();

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a polynomial at xi^d");
    eval_cmd->add_option("--poly", poly_arg, "coefficients, constant first")->required();
    eval_cmd->add_option("--order", order_arg)->required();
    eval_cmd->add_option("--d", d_arg)->required();

    auto* csp_cmd = app.add_subcommand("csp", "cyclic sieving certificates");
    csp_cmd->add_option("shape", shape_arg);
    csp_cmd->add_option("--power", power_arg, "tensor power m of the fake degree");
    csp_cmd->add_option("--stretched", stretch_arg, "order m of the stretched-shape action");
    csp_cmd->add_option("--rectangle", rect_arg, "a,b");
    csp_cmd->add_option("--hook", hook_arg, "a,n");
    csp_cmd->add_option("--poly", poly_arg, "explicit values via a polynomial");
    csp_cmd->add_option("--order", order_arg, "order for --poly");

    auto* verify_cmd = app.add_subcommand("verify", "bound verifications");
    verify_cmd
        ->add_option("--claim", claim_arg,
                     "lemma9-120 | main-bound | base-cases | multinomial | qsqrt")
        ->required();
    verify_cmd->add_option("--limit", limit_arg);

    auto* stat_cmd = app.add_subcommand("stat", "rotation-invariant statistic");
    stat_cmd->add_option("--n", n_arg)->required();

    auto* alt_cmd = app.add_subcommand("alt", "alternating tableaux");
    alt_cmd->add_option("--r", r_arg)->required();
    alt_cmd->add_option("--n", n_arg)->required();
    alt_cmd->add_flag("--count", count_flag);
    alt_cmd->add_flag("--list", list_flag);

    auto* rot_cmd = app.add_subcommand("rot-check", "rotation cyclic sieving check");
    rot_cmd->add_option("--n", n_arg)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (core_cmd->parsed()) {
            emit(core(Partition::parse(shape_arg), d_arg).to_string());
        } else if (quot_cmd->parsed()) {
            json out = json::array();
            for (const auto& e : skew_quotient(SkewShape::parse(shape_arg), d_arg).entries)
                out.push_back(e.to_string());
            emit(out);
        } else if (bst_cmd->parsed()) {
            SkewShape shape = SkewShape::parse(shape_arg);
            if (list_flag) {
                Partition type = type_arg.empty() ? uniform_type(shape.size(), d_arg)
                                                  : Partition::parse(type_arg);
                json out = json::array();
                for_each_bst(shape, type,
                             [&](const BorderStripTableau& b) { out.push_back(bst_json(b)); });
                emit(out);
            } else if (!type_arg.empty()) {
                Int total = 0;
                for_each_bst(shape, Partition::parse(type_arg),
                             [&](const BorderStripTableau&) { ++total; });
                emit(int_json(total));
            } else {
                emit(int_json(count_bst_uniform(shape, d_arg)));
            }
        } else if (lw_cmd->parsed()) {
            SkewShape shape = SkewShape::parse(shape_arg);
            if (!tuple_arg.empty()) {
                TableauTuple t = tuple_from_json(json::parse(tuple_arg));
                BorderStripTableau b = littlewood_inverse(t, shape, d_arg);
                emit(json{{"bst", bst_json(b)}, {"tuple", tuple_json(t)}});
            } else {
                int index = 0;
                json out;
                bool found = false;
                for_each_bst(shape, uniform_type(shape.size(), d_arg),
                             [&](const BorderStripTableau& b) {
                                 if (index++ == index_arg && !found) {
                                     out = json{{"bst", bst_json(b)},
                                                {"tuple", tuple_json(littlewood(b))}};
                                     found = true;
                                 }
                             });
                if (!found) throw Error("littlewood: index out of range");
                emit(out);
            }
        } else if (char_cmd->parsed()) {
            SkewShape shape = SkewShape::parse(shape_arg);
            Partition nu = Partition::parse(nu_arg);
            json out{{"shape", shape.to_string()},
                     {"nu", nu.parts()},
                     {"chi", int_json(mn_character(shape, nu))}};
            emit(out);
        } else if (fd_cmd->parsed()) {
            emit(poly_json(fake_degree(SkewShape::parse(shape_arg))));
        } else if (eval_cmd->parsed()) {
            CyclotomicValue v = reduce_at_root(poly_from_csv(poly_arg), order_arg, d_arg);
            if (v.is_integer())
                emit(json{{"value", int_json(v.as_integer())}});
            else
                emit(json{{"value", nullptr},
                          {"residue", poly_json(v.residue)},
                          {"order", v.order}});
        } else if (csp_cmd->parsed()) {
            CspCertificate cert;
            if (!poly_arg.empty()) {
                IntPolynomial p = poly_from_csv(poly_arg);
                std::map<long, Int> values;
                for (long d : divisors(order_arg)) values[d] = eval_at_root(p, order_arg, d);
                cert = aa_certificate(values, order_arg);
            } else if (!rect_arg.empty()) {
                Partition ab = Partition::parse(rect_arg);
                cert = rectangle_csp(ab.part(1), ab.part(2));
            } else if (!hook_arg.empty()) {
                auto comma = hook_arg.find(',');
                int a = std::stoi(hook_arg.substr(0, comma));
                int n = std::stoi(hook_arg.substr(comma + 1));
                bool ok = hook_csp(a, n);
                emit(json{{"a", a}, {"n", n}, {"csp", ok}});
                return ok ? 0 : 1;
            } else if (stretch_arg > 0) {
                cert = stretched_csp(SkewShape::parse(shape_arg), stretch_arg);
            } else {
                cert = csp_exists_power(SkewShape::parse(shape_arg),
                                        power_arg < 0 ? 1 : power_arg);
            }
            emit(certificate_json(cert));
            return cert.exists() ? 0 : 1;
        } else if (verify_cmd->parsed()) {
            BoundReport report;
            if (claim_arg == "lemma9-120") report = verify_lemma_9_120();
            else if (claim_arg == "main-bound") report = verify_main_bound(limit_arg, jobs);
            else if (claim_arg == "base-cases") report = verify_straight_base_cases();
            else if (claim_arg == "multinomial") report = verify_multinomial_lemmas(limit_arg);
            else if (claim_arg == "qsqrt") report = verify_q_bound(limit_arg >= 10 ? limit_arg : 200);
            else throw Error("unknown claim: " + claim_arg);
            emit(report_json(report));
            return report.pass ? 0 : 1;
        } else if (stat_cmd->parsed()) {
            StatisticTable table = synthesize_statistic(n_arg);
            for (const auto& [sigma, lambda] : table.assignment)
                emit(json{{"sigma", sigma.one_line()}, {"st", lambda.to_string()}});
        } else if (alt_cmd->parsed()) {
            if (list_flag) {
                json out = json::array();
                for_each_alternating(r_arg, n_arg, [&](const AlternatingTableau& a) {
                    out.push_back(a.staircases);
                });
                emit(out);
            } else {
                emit(int_json(count_alternating(r_arg, n_arg)));
            }
        } else if (rot_cmd->parsed()) {
            bool ok = rotation_csp_check(n_arg);
            emit(json{{"n", n_arg}, {"ok", ok}});
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
