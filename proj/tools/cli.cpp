#include "cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "diatomic/assembly.hpp"
#include "diatomic/derivative.hpp"
#include "diatomic/error.hpp"
#include "diatomic/matrix.hpp"
#include "diatomic/quadratic.hpp"
#include "diatomic/sdi.hpp"
#include "diatomic/text.hpp"

namespace diatomic::cli {

namespace {

using nlohmann::json;

// What a command produced, in each output mode it supports.
struct Output {
    std::string human;
    json object = json::object();
    std::string csv;
};

struct Options {
    bool json = false;
    bool csv = false;
};

FiniteDesign parse_finite(const std::string& text) {
    Design d = parse_design(text);
    if (auto* f = std::get_if<FiniteDesign>(&d)) return *f;
    throw Error(Errc::SyntaxError, "'" + text + "' is periodic; a finite design is required");
}

std::string join(const std::vector<Nat>& xs, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i].str();
    }
    return out;
}

json nat_array(const std::vector<Nat>& xs) {
    json arr = json::array();
    for (const Nat& x : xs) arr.push_back(x.str());
    return arr;
}

std::string ext_csv(const ExtRational& v) { return v.num().str() + "," + v.den().str(); }

std::string quotient_text(const std::optional<QuadSurd>& q) { return q ? q->to_string() : "inf"; }

const char* purity_name(Purity p) {
    switch (p) {
        case Purity::PureQuadratic: return "pure";
        case Purity::NonPureQuadratic: return "non-pure";
        case Purity::Rational: return "rational";
    }
    return "";
}

const char* verdict_name(DerivativeVerdict v) {
    return v == DerivativeVerdict::DivergesToInfinity ? "diverges-to-infinity" : "zero-if-differentiable";
}

json equation_json(const QuadIrr& q) {
    return {{"equation", q.equation_string()},
            {"coefficients", {q.a2().str(), Integer(-q.b1()).str(), Integer(-q.c0()).str()}},
            {"root", q.value().to_string()}};
}

Output stern_cmd(const std::vector<std::string>& pos, bool sdi_form) {
    Output o;
    if (sdi_form) {
        if (pos.size() != 2) throw Error(Errc::SyntaxError, "stern --sdi needs <n> <m>");
        Nat n = parse_nat(pos[0]);
        if (n > 1u << 20) throw Error(Errc::OutOfRange, "depth too large");
        SdiAddress addr{n.convert_to<std::size_t>(), parse_nat(pos[1])};
        Nat v = sdi(addr);
        o.human = v.str();
        o.object = {{"n", pos[0]}, {"m", addr.order.str()}, {"value", v.str()}};
    } else {
        if (pos.size() != 1) throw Error(Errc::SyntaxError, "stern needs exactly one index");
        Nat m = parse_nat(pos[0]);
        Nat v = stern(m);
        o.human = v.str();
        o.object = {{"m", m.str()}, {"value", v.str()}};
    }
    return o;
}

Output unary_design(const std::string& op, const std::string& text) {
    Output o;
    if (op == "from-ratio") {
        FiniteDesign d = assembly_inverse(parse_ext_rational(text));
        o.human = d.to_string();
        o.object = {{"ratio", parse_ext_rational(text).to_string()}, {"design", o.human}};
    } else if (op == "theta") {
        ThetaValue t = theta_of(parse_design(text));
        o.human = t.to_string();
        o.object = {{"design", to_string(parse_design(text))}, {"theta", o.human}};
    } else if (op == "of-theta") {
        ThetaValue t = parse_theta(text);
        o.human = to_string(design_of_theta(t));
        o.object = {{"theta", t.to_string()}, {"design", o.human}};
    } else if (op == "conj") {
        o.human = to_string(conjugate(parse_design(text)));
        o.object = {{"design", to_string(parse_design(text))}, {"conjugate", o.human}};
    } else if (op == "inv") {
        o.human = inverse_design(parse_finite(text)).to_string();
        o.object = {{"design", parse_finite(text).to_string()}, {"inverse", o.human}};
    } else if (op == "reduce") {
        o.human = reduce(parse_finite(text)).to_string();
        o.object = {{"design", parse_finite(text).to_string()}, {"reduced", o.human}};
    } else if (op == "runs") {
        RunLengths ks = runs(parse_finite(text));
        o.human = join(ks.values(), " ");
        o.object = {{"design", parse_finite(text).to_string()}, {"runs", nat_array(ks.values())}};
    }
    return o;
}

Output compose_cmd(const std::string& outer, const std::string& inner) {
    Output o;
    o.human = to_string(compose(parse_finite(outer), parse_design(inner)));
    o.object = {{"outer", outer}, {"inner", inner}, {"design", o.human}};
    return o;
}

Output matrix_cmd(const std::string& op, const std::string& arg, const std::string& x) {
    Output o;
    if (op == "of-design") {
        FiniteDesign d = parse_finite(arg);
        o.human = sdm(d).to_string();
        o.object = {{"design", d.to_string()}, {"matrix", o.human}};
    } else if (op == "to-design") {
        UniModMatrix m = parse_matrix(arg);
        o.human = design_of_matrix(m).to_string();
        o.object = {{"matrix", m.to_string()}, {"design", o.human}};
    } else {
        UniModMatrix m = parse_matrix(arg);
        ExtRational v = parse_ext_rational(x);
        o.human = apply_mobius(m, v).to_string();
        o.object = {{"matrix", m.to_string()}, {"x", v.to_string()}, {"value", o.human}};
    }
    return o;
}

Output assembly_eval(const std::string& text) {
    Output o;
    ThetaValue t = parse_theta(text);
    o.object = {{"theta", t.to_string()}};
    auto value = assembly_of_rational_theta(t);
    if (auto* r = std::get_if<ExtRational>(&value)) {
        o.human = r->to_string();
    } else {
        const QuadIrr& q = std::get<QuadIrr>(value);
        o.human = q.value().to_string();
        o.object["equation"] = q.equation_string();
    }
    o.object["value"] = o.human;
    return o;
}

Output assembly_inverse_cmd(const std::string& text) {
    Output o;
    ExtRational v = parse_ext_rational(text);
    FiniteDesign d = assembly_inverse(v);
    ThetaValue t = theta_of(d);
    o.human = d.to_string() + " theta=" + t.to_string();
    o.object = {{"value", v.to_string()}, {"design", d.to_string()}, {"theta", t.to_string()}};
    return o;
}

Output assembly_enclose_cmd(const std::string& bits, std::size_t n) {
    Output o;
    Enclosure e = assembly_enclose(bits, n);
    o.human = "[" + e.lo.to_string() + ", " + e.hi.to_string() + "]";
    o.object = {{"lo", e.lo.to_string()}, {"hi", e.hi.to_string()}, {"bits_used", e.bits_used}};
    return o;
}

Output assembly_qm_inverse(const std::string& text) {
    Output o;
    ThetaValue t = parse_theta(text);
    o.human = question_mark_inverse(t).to_string();
    o.object = {{"theta", t.to_string()}, {"value", o.human}};
    return o;
}

Output assembly_sample_cmd(std::size_t grid) {
    if (grid > 20) throw Error(Errc::OutOfRange, "grid exponent above 20");
    Output o;
    o.csv = "theta_num,theta_den,val_num,val_den\n";
    json rows = json::array();
    for (const auto& [t, v] : assembly_sample(grid)) {
        o.csv += t.num().str() + "," + t.den().str() + "," + ext_csv(v) + "\n";
        o.human += t.to_string() + " " + v.to_string() + "\n";
        rows.push_back({{"theta", t.to_string()}, {"value", v.to_string()}});
    }
    o.object = {{"grid", grid}, {"samples", rows}};
    return o;
}

Output quad_cmd(const std::string& op, const std::string& text) {
    Output o;
    if (op == "from-period") {
        QuadIrr q = quad_from_period(parse_finite(text));
        o.human = q.equation_string();
        o.object = equation_json(q);
        o.object["period"] = text;
    } else if (op == "sqrt") {
        PeriodicDesign d = periodic_design_of_sqrt(parse_ext_rational(text));
        QuadIrr q = quad_of_periodic(d);
        o.human = "period=" + d.to_string() + " equation: " + q.equation_string();
        o.object = equation_json(q);
        o.object["design"] = d.to_string();
        o.object["theta"] = theta_of(d).to_string();
    } else if (op == "classify") {
        FiniteDesign p = parse_finite(text);
        int type = classify_type(p);
        o.human = "type=" + std::to_string(type);
        o.object = {{"period", p.to_string()}, {"type", type}, {"conjugate_root_design", conjugate_root_design(p).to_string()}};
    } else {
        ThetaValue t = parse_theta(text);
        o.human = purity_name(purity_test(t));
        o.object = {{"theta", t.to_string()}, {"purity", o.human}};
    }
    return o;
}

Output deriv_scan(const std::string& text, const std::string& side_name, std::size_t jmax) {
    Output o;
    ThetaValue eta = parse_theta(text);
    Side side = side_name == "left" ? Side::Left : Side::Right;
    QuotientScan scan = quotient_scan(eta, side, jmax);
    o.csv = "j,quotient\n";
    json rows = json::array();
    for (const QuotientSample& s : scan.samples) {
        std::string q = quotient_text(s.quotient);
        o.csv += std::to_string(s.j) + "," + q + "\n";
        o.human += "j=" + std::to_string(s.j) + " quotient=" + q + "\n";
        rows.push_back({{"j", s.j}, {"quotient", q}});
    }
    o.object = {{"eta", eta.to_string()}, {"side", side_name}, {"samples", rows}};
    return o;
}

Output deriv_classify(const std::string& text) {
    Output o;
    ThetaValue eta = parse_theta(text);
    o.human = verdict_name(derivative_at_rational(eta));
    o.object = {{"eta", eta.to_string()}, {"verdict", o.human}};
    return o;
}

void emit(const Output& o, const Options& opts, std::ostream& out) {
    if (opts.json) {
        out << o.object.dump() << '\n';
    } else if (opts.csv && !o.csv.empty()) {
        out << o.csv;
    } else {
        out << o.human;
        if (o.human.empty() || o.human.back() != '\n') out << '\n';
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Stern diatomic arithmetic", "diatomic"};
    app.require_subcommand(1);
    Options opts;
    app.add_flag("--json", opts.json, "Print one JSON object");

    std::function<Output()> action;
    std::vector<std::string> pos;
    std::string a, b;

    auto* stern_app = app.add_subcommand("stern", "Stern numbers a_m, or [2^n:m] with --sdi");
    bool sdi_form = false;
    stern_app->add_flag("--sdi", sdi_form, "Read <n> <m> and print the diatomic integer");
    stern_app->add_option("args", pos)->required();
    stern_app->callback([&] { action = [&] { return stern_cmd(pos, sdi_form); }; });

    auto* design_app = app.add_subcommand("design", "Binary designs");
    design_app->require_subcommand(1);
    for (const char* op : {"from-ratio", "theta", "of-theta", "conj", "inv", "reduce", "runs"}) {
        std::string name = op;
        auto* sub = design_app->add_subcommand(name);
        sub->add_option("value", a)->required();
        sub->callback([&, name] { action = [&, name] { return unary_design(name, a); }; });
    }
    auto* compose_app = design_app->add_subcommand("compose", "Concatenate a finite design with another design");
    compose_app->add_option("outer", a)->required();
    compose_app->add_option("inner", b)->required();
    compose_app->callback([&] { action = [&] { return compose_cmd(a, b); }; });

    auto* matrix_app = app.add_subcommand("matrix", "Stern diatomic matrices");
    matrix_app->require_subcommand(1);
    for (const char* op : {"of-design", "to-design", "apply"}) {
        std::string name = op;
        auto* sub = matrix_app->add_subcommand(name);
        sub->add_option("arg", a)->required();
        if (name == "apply") sub->add_option("x", b)->required();
        sub->callback([&, name] { action = [&, name] { return matrix_cmd(name, a, b); }; });
    }

    auto* assembly_app = app.add_subcommand("assembly", "The assembly function");
    assembly_app->require_subcommand(1);
    std::size_t count = 0;
    auto* eval_app = assembly_app->add_subcommand("eval", "Value at a rational theta");
    eval_app->add_option("theta", a)->required();
    eval_app->callback([&] { action = [&] { return assembly_eval(a); }; });
    auto* inverse_app = assembly_app->add_subcommand("inverse", "Design and theta of a value");
    inverse_app->add_option("value", a)->required();
    inverse_app->callback([&] { action = [&] { return assembly_inverse_cmd(a); }; });
    auto* enclose_app = assembly_app->add_subcommand("enclose", "Bracket the value of a bit prefix");
    enclose_app->add_option("bits", a)->required();
    enclose_app->add_option("--n", count, "Number of bits to use")->required();
    enclose_app->callback([&] { action = [&] { return assembly_enclose_cmd(a, count); }; });
    auto* qm_app = assembly_app->add_subcommand("qm-inverse", "Inverse question mark function at a dyadic");
    qm_app->add_option("theta", a)->required();
    qm_app->callback([&] { action = [&] { return assembly_qm_inverse(a); }; });
    auto* sample_app = assembly_app->add_subcommand("sample", "Values on the grid k/2^grid");
    sample_app->add_option("--grid", count, "Grid exponent")->required();
    sample_app->add_flag("--csv", opts.csv, "Print CSV rows");
    sample_app->callback([&] { action = [&] { return assembly_sample_cmd(count); }; });

    auto* quad_app = app.add_subcommand("quad", "Quadratic irrationals from periodic designs");
    quad_app->require_subcommand(1);
    for (const char* op : {"from-period", "sqrt", "classify", "purity"}) {
        std::string name = op;
        auto* sub = quad_app->add_subcommand(name);
        sub->add_option("value", a)->required();
        sub->callback([&, name] { action = [&, name] { return quad_cmd(name, a); }; });
    }

    auto* deriv_app = app.add_subcommand("deriv", "Difference quotients at rationals");
    deriv_app->require_subcommand(1);
    std::string side = "right";
    std::size_t jmax = 10;
    auto* scan_app = deriv_app->add_subcommand("scan", "Quotients at steps 2^-j, j = 1..jmax");
    scan_app->add_option("eta", a)->required();
    scan_app->add_option("--side", side)->check(CLI::IsMember({"left", "right"}));
    scan_app->add_option("--jmax", jmax)->check(CLI::Range(1, 4096));
    scan_app->add_flag("--csv", opts.csv, "Print CSV rows");
    scan_app->callback([&] { action = [&] { return deriv_scan(a, side, jmax); }; });
    auto* classify_app = deriv_app->add_subcommand("classify", "Derivative verdict at a rational");
    classify_app->add_option("eta", a)->required();
    classify_app->callback([&] { action = [&] { return deriv_classify(a); }; });

    std::vector<const char*> argv{"diatomic"};
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        emit(action(), opts, out);
    } catch (const Error& e) {
        err << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace diatomic::cli
