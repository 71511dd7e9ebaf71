#include "tauforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "tauforge/bridge.hpp"
#include "tauforge/error.hpp"
#include "tauforge/fock.hpp"
#include "tauforge/hirota.hpp"
#include "tauforge/poly_io.hpp"
#include "tauforge/serialize.hpp"
#include "tauforge/tau.hpp"

namespace tauforge::cli {

using nlohmann::json;

namespace {

struct Globals {
    std::string format = "text";
    bool timing = false;
    std::uint64_t seed = 0;
    long max_degree = 64;
};

long max_degree_from_env() {
    const char* v = std::getenv("TAUFORGE_MAX_DEGREE");
    if (!v || !*v) return 64;
    std::string s(v);
    if (s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("TAUFORGE_MAX_DEGREE must be a nonnegative integer");
    return std::stol(s);
}

void check_degree(const Globals& g, long degree) {
    if (degree > g.max_degree)
        throw InvalidInput("weighted degree " + std::to_string(degree) + " exceeds TAUFORGE_MAX_DEGREE=" +
                           std::to_string(g.max_degree));
}

/// Inline JSON when the argument starts with '{' or '[', otherwise a file path.
json load_json(const std::string& arg) {
    std::string text;
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) throw InvalidInput("cannot read file '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error&) {
        throw InvalidInput("malformed JSON in '" + arg + "'");
    }
}

int parse_label(const std::string& key) {
    if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos)
        throw InvalidInput("shift label '" + key + "' must be a nonnegative integer");
    return std::stoi(key);
}

std::map<int, ShiftVector> load_shift_map(const std::string& arg) {
    std::map<int, ShiftVector> out;
    if (arg == "zero") return out;
    json j = load_json(arg);
    if (!j.is_object()) throw InvalidInput("shift file must be a JSON object from label to rational array");
    for (const auto& [k, v] : j.items()) out[parse_label(k)] = shift_from_json(v);
    return out;
}

std::vector<ShiftVector> column_shifts(const std::map<int, ShiftVector>& by_label, int m) {
    std::vector<ShiftVector> C(static_cast<std::size_t>(m));
    for (const auto& [label, c] : by_label) {
        if (label < 1 || label > m) throw InvalidInput("column label must lie in [1, " + std::to_string(m) + "]");
        C[static_cast<std::size_t>(label - 1)] = c;
    }
    return C;
}

ShiftVector parse_rational_list(const std::string& text) {
    ShiftVector c;
    if (text.empty()) return c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) c.entries.push_back(Rational::parse(item));
    return c;
}

ChargeVector parse_charge(const std::string& text) {
    ChargeVector c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput("malformed charge '" + text + "'");
        c.push_back(v);
    }
    if (c.empty()) throw InvalidInput("charge must list at least one entry");
    return c;
}

std::vector<HSpec> load_specs(const std::string& arg, int& components) {
    json j = load_json(arg);
    const json* list = &j;
    json single;
    if (j.is_object() && j.contains("M") && !j.contains("specs")) {
        // a lone generating function
        single = json::array({j});
        list = &single;
    } else if (j.is_object()) {
        if (!j.contains("specs")) throw InvalidInput("spec file needs a \"specs\" array");
        list = &j["specs"];
        components = j.value("components", 0);
    }
    if (!list->is_array()) throw InvalidInput("spec file needs a \"specs\" array");
    std::vector<HSpec> specs;
    for (const auto& s : *list) specs.push_back(hspec_from_json(s));
    if (!specs.empty()) {
        if (components && components != specs.front().components())
            throw InvalidInput("\"components\" does not match the generating functions");
        components = specs.front().components();
    }
    if (components < 1) throw InvalidInput("spec file needs \"components\" when \"specs\" is empty");
    return specs;
}

long specs_degree(const std::vector<HSpec>& specs) {
    long d = 0;
    for (const auto& h : specs) {
        long top = 0;
        for (const auto& t : h.terms) top = std::max<long>(top, t.degree);
        d += top;
    }
    return d;
}

Rational random_rational(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 11) - 5;
    long den = static_cast<long>(rng() % 4) + 1;
    return Rational(num, den);
}

std::vector<ShiftVector> random_column_shifts(const Partition& lambda, std::mt19937_64& rng) {
    std::vector<ShiftVector> C;
    for (int j = 1; j <= lambda.length(); ++j) {
        ShiftVector c;
        for (std::size_t k = 0; k < shift_length(lambda, j); ++k) c.entries.push_back(random_rational(rng));
        C.push_back(std::move(c));
    }
    return C;
}

void emit_poly(std::ostream& out, const Globals& g, const Poly& p, json extra = json::object()) {
    if (g.format == "json") {
        extra["poly"] = to_json(p);
        out << extra.dump() << "\n";
    } else {
        out << to_text(p) << "\n";
    }
}

void emit_collection(std::ostream& out, const Globals& g, const TauCollection& T) {
    if (g.format == "json")
        out << to_json(T).dump() << "\n";
    else
        out << to_text(T);
}

int emit_report(std::ostream& out, const Globals& g, const VerificationReport& r) {
    if (g.format == "json")
        out << to_json(r, g.timing).dump() << "\n";
    else
        out << to_text(r, g.timing);
    return r.pass ? kExitOk : kExitFail;
}

VerificationReport merged(std::string identity, std::vector<std::pair<std::string, json>> params,
                          std::vector<VerificationReport> parts) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    for (const auto& p : parts) {
        r.time_ms += p.time_ms;
        if (!p.pass && r.pass) {
            r.pass = false;
            r.obstruction = p.obstruction;
        }
    }
    r.parts = std::move(parts);
    return r;
}

struct Options {
    // schur
    int j = 0;
    int component = 1;
    // partitions and shifts
    std::string partition;
    std::string shifts = "zero";
    int n = 0;
    int max_size = -1;
    int trials = 5;
    // spec files
    std::string specs;
    std::string profile;
    std::string charge;
    std::string case_file;
    // akns
    int m1 = 1, m2 = 1, k = 1, p = -1;
    std::string b1 = "1", b2 = "1", c1, c2;
    // verify
    std::string what;
    int jj = 0;
    int j_max = -1;
    std::string poly;
    std::string n_parts;
};

AknsParams akns_params(const Options& o) {
    AknsParams P;
    P.m1 = o.m1;
    P.m2 = o.m2;
    P.k = o.k;
    P.b1 = Rational::parse(o.b1);
    P.b2 = Rational::parse(o.b2);
    P.c1 = parse_rational_list(o.c1);
    P.c2 = parse_rational_list(o.c2);
    P.validate();
    return P;
}

int cmd_schur(const Options& o, const Globals& g, std::ostream& out) {
    check_degree(g, o.j);
    Poly s = elementary_schur(o.j, o.component);
    if (o.component > 1) s = s.with_components(o.component);
    emit_poly(out, g, s, {{"j", o.j}, {"component", o.component}});
    return kExitOk;
}

int cmd_tau_kp(const Options& o, const Globals& g, std::ostream& out) {
    Partition lambda = Partition::parse(o.partition);
    check_degree(g, lambda.size());
    auto C = column_shifts(load_shift_map(o.shifts), lambda.length());
    emit_poly(out, g, tau_kp(lambda, C), {{"partition", to_json(lambda)}});
    return kExitOk;
}

int cmd_tau_mkp(const Options& o, const Globals& g, std::ostream& out) {
    int s = 0;
    auto specs = load_specs(o.specs, s);
    check_degree(g, specs_degree(specs));
    if (!o.charge.empty()) {
        ChargeVector ch = parse_charge(o.charge);
        emit_poly(out, g, tau_mkp_entry(specs, ch), {{"charge", ch}});
    } else {
        emit_collection(out, g, tau_mkp_collection(specs, s));
    }
    return kExitOk;
}

int cmd_tau_nkdv(const Options& o, const Globals& g, std::ostream& out) {
    Partition lambda = Partition::parse(o.partition);
    check_degree(g, lambda.size());
    emit_poly(out, g, tau_nkdv(lambda, o.n, load_shift_map(o.shifts)), {{"partition", to_json(lambda)}, {"n", o.n}});
    return kExitOk;
}

int cmd_tau_mnkdv(const Options& o, const Globals& g, std::ostream& out) {
    KdVProfile prof = profile_from_json(load_json(o.profile));
    check_degree(g, specs_degree(prof.specs));
    if (!o.charge.empty()) {
        ChargeVector ch = parse_charge(o.charge);
        emit_poly(out, g, tau_mnkdv_entry(prof, ch), {{"charge", ch}});
    } else {
        emit_collection(out, g, tau_mnkdv_collection(prof));
    }
    return kExitOk;
}

int cmd_akns(const Options& o, const Globals& g, std::ostream& out) {
    AknsParams P = akns_params(o);
    check_degree(g, static_cast<long>(P.k) * std::max(P.m1, P.m2));
    if (o.p >= 0)
        emit_poly(out, g, akns_tau(P, o.p), {{"charge", ChargeVector{o.p, P.k - o.p}}});
    else
        emit_collection(out, g, akns_collection(P));
    return kExitOk;
}

std::vector<int> j_range(int lo, int hi) {
    std::vector<int> js;
    for (int j = lo; j <= hi; ++j) js.push_back(j);
    return js;
}

int verify_kp(const Options& o, const Globals& g, std::ostream& out) {
    const int n = o.n == 0 ? 1 : o.n;
    if (!o.partition.empty()) {
        Partition lambda = Partition::parse(o.partition);
        check_degree(g, lambda.size());
        auto C = column_shifts(load_shift_map(o.shifts), lambda.length());
        auto r = hirota_kp_check(tau_kp(lambda, C), o.jj, n);
        r.params.insert(r.params.begin(), {"partition", lambda.to_string()});
        return emit_report(out, g, r);
    }
    if (o.max_size < 0) throw InvalidInput("verify kp needs --partition or --max-size");
    if (o.trials < 1) throw InvalidInput("--trials must be >= 1");
    check_degree(g, o.max_size);
    std::mt19937_64 rng(g.seed);
    std::vector<VerificationReport> parts;
    for (const auto& lambda : enumerate_partitions(o.max_size)) {
        for (int t = 0; t < o.trials; ++t) {
            auto r = hirota_kp_check(tau_kp(lambda, random_column_shifts(lambda, rng)), o.jj, n);
            r.params.insert(r.params.begin(), {{"partition", lambda.to_string()}, {"trial", t}});
            parts.push_back(std::move(r));
        }
    }
    return emit_report(out, g,
                       merged("kp_suite", {{"max_size", o.max_size}, {"trials", o.trials}, {"seed", g.seed}},
                              std::move(parts)));
}

int verify_nkdv(const Options& o, const Globals& g, std::ostream& out) {
    Partition lambda = Partition::parse(o.partition);
    check_degree(g, lambda.size());
    Poly tau = tau_nkdv(lambda, o.n, load_shift_map(o.shifts));
    std::vector<VerificationReport> parts;
    for (int j : j_range(0, o.j_max < 0 ? 2 : o.j_max)) parts.push_back(hirota_kp_check(tau, j, o.n));
    parts.push_back(reduction_check(tau, {o.n}, 3));
    return emit_report(out, g, merged("nkdv_suite", {{"partition", lambda.to_string()}, {"n", o.n}}, std::move(parts)));
}

int verify_mkp(const Options& o, const Globals& g, std::ostream& out) {
    int s = 0;
    auto specs = load_specs(o.specs, s);
    check_degree(g, specs_degree(specs));
    TauCollection T = tau_mkp_collection(specs, s);
    std::vector<int> ones(static_cast<std::size_t>(s), 1);
    return emit_report(out, g, verify_collection(T, ones, j_range(0, o.j_max < 0 ? 0 : o.j_max)));
}

int verify_mnkdv(const Options& o, const Globals& g, std::ostream& out) {
    KdVProfile prof = profile_from_json(load_json(o.profile));
    check_degree(g, specs_degree(prof.specs));
    TauCollection T = tau_mnkdv_collection(prof);
    std::vector<VerificationReport> parts;
    parts.push_back(verify_collection(T, prof.n_parts, j_range(0, o.j_max < 0 ? 1 : o.j_max)));
    for (const auto& [ch, p] : T.entries) {
        auto r = reduction_check(p, prof.n_parts, 3);
        r.params.insert(r.params.begin(), {"charge", ch});
        parts.push_back(std::move(r));
    }
    return emit_report(out, g, merged("mnkdv_suite", {{"n_parts", prof.n_parts}}, std::move(parts)));
}

int verify_akns(const Options& o, const Globals& g, std::ostream& out) {
    AknsParams P = akns_params(o);
    check_degree(g, static_cast<long>(P.k) * std::max(P.m1, P.m2));
    TauCollection T = akns_collection(P);
    VerificationReport r = o.p >= 0 ? akns_pde_check(T, {o.p, P.k - o.p}) : akns_family_check(T);
    r.params.insert(r.params.begin(), {{"m1", P.m1}, {"m2", P.m2}, {"k", P.k}});
    return emit_report(out, g, r);
}

int verify_reduction(const Options& o, const Globals& g, std::ostream& out) {
    if (o.poly.empty()) throw InvalidInput("verify reduction needs --poly");
    Poly p = parse_poly_text(o.poly);
    check_degree(g, p.weighted_degree());
    std::vector<int> parts;
    if (!o.n_parts.empty())
        parts = parse_charge(o.n_parts);
    else if (o.n > 0)
        parts = {o.n};
    else
        throw InvalidInput("verify reduction needs --n-parts or --n");
    return emit_report(out, g, reduction_check(p, parts, o.j_max < 0 ? 3 : o.j_max));
}

int cmd_verify(const Options& o, const Globals& g, std::ostream& out) {
    if (o.what == "kp") return verify_kp(o, g, out);
    if (o.what == "nkdv") return verify_nkdv(o, g, out);
    if (o.what == "mkp") return verify_mkp(o, g, out);
    if (o.what == "mnkdv") return verify_mnkdv(o, g, out);
    if (o.what == "akns") return verify_akns(o, g, out);
    if (o.what == "reduction") return verify_reduction(o, g, out);
    throw InvalidInput("unknown --what '" + o.what + "'");
}

/// Rows of (charge, closed form, oracle) for one oracle case file.
int cmd_oracle_compare(const Options& o, const Globals& g, std::ostream& out) {
    json c = load_json(o.case_file);
    if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string())
        throw InvalidInput("case file needs a \"kind\" of kp, mkp or mnkdv");
    std::string kind = c["kind"].get<std::string>();
    std::vector<std::tuple<ChargeVector, Poly, Poly>> rows;
    if (kind == "kp") {
        if (!c.contains("partition")) throw InvalidInput("kp case needs \"partition\"");
        Partition lambda = partition_from_json(c["partition"]);
        check_degree(g, lambda.size());
        std::map<int, ShiftVector> by_label;
        if (c.contains("shifts") && !(c["shifts"].is_string() && c["shifts"] == "zero")) {
            if (!c["shifts"].is_object()) throw InvalidInput("\"shifts\" must be \"zero\" or an object");
            for (const auto& [k, v] : c["shifts"].items()) by_label[parse_label(k)] = shift_from_json(v);
        }
        auto C = column_shifts(by_label, lambda.length());
        std::vector<GeneratorVector> fs;
        for (const auto& h : hspecs_from_partition(lambda, C)) fs.push_back(generator_from_hspec(h));
        ChargeVector ch{lambda.length()};
        rows.emplace_back(ch, tau_kp(lambda, C), oracle_tau(fs, ch));
    } else if (kind == "mkp") {
        int s = 0;
        auto specs = load_specs(c.dump(), s);
        check_degree(g, specs_degree(specs));
        std::vector<GeneratorVector> fs;
        for (const auto& h : specs) fs.push_back(generator_from_hspec(h));
        for (const auto& ch : charge_lattice(s, static_cast<int>(specs.size())))
            rows.emplace_back(ch, tau_mkp_entry(specs, ch), oracle_tau(fs, ch));
    } else if (kind == "mnkdv") {
        if (!c.contains("profile")) throw InvalidInput("mnkdv case needs \"profile\"");
        KdVProfile prof = profile_from_json(c["profile"]);
        check_degree(g, specs_degree(prof.specs));
        std::vector<GeneratorVector> fs;
        for (const auto& h : prof.specs) fs.push_back(generator_from_hspec(h));
        for (const auto& ch : charge_lattice(prof.components(), mnkdv_total(prof)))
            rows.emplace_back(ch, tau_mnkdv_entry(prof, ch), oracle_tau(fs, ch, prof.n_parts));
    } else {
        throw InvalidInput("unknown case kind '" + kind + "'");
    }
    bool all = true;
    json arr = json::array();
    for (const auto& [ch, closed, oracle] : rows) {
        bool eq = closed == oracle;
        all = all && eq;
        if (g.format == "json") {
            arr.push_back({{"charge", ch}, {"equal", eq}, {"closed_form", to_json(closed)}, {"oracle", to_json(oracle)}});
        } else {
            std::string label;
            for (std::size_t i = 0; i < ch.size(); ++i) label += (i ? "," : "") + std::to_string(ch[i]);
            out << (eq ? "EQUAL " : "DIFFER ") << label << ": " << to_text(closed);
            if (!eq) out << " | oracle: " << to_text(oracle);
            out << "\n";
        }
    }
    if (g.format == "json") out << json{{"kind", kind}, {"equal", all}, {"rows", arr}}.dump() << "\n";
    return all ? kExitOk : kExitFail;
}

int cmd_list_periodic(const Options& o, const Globals& g, std::ostream& out) {
    auto list = enumerate_n_periodic(o.n, o.max_size);
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& p : list) arr.push_back(to_json(p));
        out << json{{"n", o.n}, {"max_size", o.max_size}, {"partitions", arr}}.dump() << "\n";
    } else {
        for (const auto& p : list) out << p.to_string() << "\n";
    }
    return kExitOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Globals g;
    Options o;
    CLI::App app{"Polynomial tau-functions of KP-type hierarchies and their bilinear checks", "tauforge"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", g.timing, "Include timings in verification reports");
    app.add_option("--seed", g.seed, "Seed for randomized suites");

    std::function<int()> action;
    auto bind = [&](CLI::App* sub, int (*fn)(const Options&, const Globals&, std::ostream&)) {
        sub->callback([&, fn] { action = [&, fn] { return fn(o, g, out); }; });
    };

    auto* schur = app.add_subcommand("schur", "Elementary Schur polynomial s_j");
    schur->add_option("j", o.j, "Index")->required();
    schur->add_option("--component", o.component, "Component a")->check(CLI::Range(1, 255));
    bind(schur, cmd_schur);

    auto* kp = app.add_subcommand("tau-kp", "KP tau-function of a partition");
    kp->add_option("--partition", o.partition, "Parts, e.g. 2,1")->required();
    kp->add_option("--shifts", o.shifts, "Shift file, inline JSON, or 'zero'");
    bind(kp, cmd_tau_kp);

    auto* mkp = app.add_subcommand("tau-mkp", "Multicomponent KP tau collection");
    mkp->add_option("--specs", o.specs, "Generating-function file or inline JSON")->required();
    mkp->add_option("--charge", o.charge, "Single charge, e.g. 1,0");
    bind(mkp, cmd_tau_mkp);

    auto* nkdv = app.add_subcommand("tau-nkdv", "n-KdV tau-function of a periodic partition");
    nkdv->add_option("--partition", o.partition, "Parts, e.g. 2,1")->required();
    nkdv->add_option("--n", o.n, "Period n")->required();
    nkdv->add_option("--shifts", o.shifts, "Shift file by residue class, or 'zero'");
    bind(nkdv, cmd_tau_nkdv);

    auto* mnkdv = app.add_subcommand("tau-mnkdv", "Reduced multicomponent tau collection");
    mnkdv->add_option("--profile", o.profile, "Profile file or inline JSON")->required();
    mnkdv->add_option("--charge", o.charge, "Single charge");
    bind(mnkdv, cmd_tau_mnkdv);

    auto add_akns = [&](CLI::App* sub) {
        sub->add_option("--m1", o.m1, "Degree M1")->required();
        sub->add_option("--m2", o.m2, "Degree M2")->required();
        sub->add_option("--k", o.k, "Determinant size K")->required();
        sub->add_option("--p", o.p, "Block split p (single entry or base)");
        sub->add_option("--b1", o.b1, "Lead b1");
        sub->add_option("--b2", o.b2, "Lead b2");
        sub->add_option("--c1", o.c1, "Shift c1 as comma-separated rationals");
        sub->add_option("--c2", o.c2, "Shift c2 as comma-separated rationals");
    };
    auto* akns = app.add_subcommand("akns", "AKNS tau-functions");
    add_akns(akns);
    bind(akns, cmd_akns);

    auto* verify = app.add_subcommand("verify", "Run a bilinear or reduction check");
    verify->add_option("--what", o.what, "kp, mkp, nkdv, mnkdv, akns or reduction")
        ->required()
        ->check(CLI::IsMember({"kp", "mkp", "nkdv", "mnkdv", "akns", "reduction"}));
    verify->add_option("--partition", o.partition, "Parts");
    verify->add_option("--shifts", o.shifts, "Shift file or 'zero'");
    verify->add_option("--n", o.n, "Period n");
    verify->add_option("--j", o.jj, "Power index j for the kp check")->check(CLI::NonNegativeNumber);
    verify->add_option("--j-max", o.j_max, "Largest j checked")->check(CLI::NonNegativeNumber);
    verify->add_option("--max-size", o.max_size, "Suite over all partitions up to this size");
    verify->add_option("--trials", o.trials, "Random shift sets per partition in the suite");
    verify->add_option("--specs", o.specs, "Generating-function file");
    verify->add_option("--profile", o.profile, "Profile file");
    verify->add_option("--poly", o.poly, "Polynomial text for the reduction check");
    verify->add_option("--n-parts", o.n_parts, "Profile parts for the reduction check, e.g. 1,1");
    verify->add_option("--m1", o.m1, "Degree M1");
    verify->add_option("--m2", o.m2, "Degree M2");
    verify->add_option("--k", o.k, "Determinant size K");
    verify->add_option("--p", o.p, "AKNS base p");
    verify->add_option("--b1", o.b1, "Lead b1");
    verify->add_option("--b2", o.b2, "Lead b2");
    verify->add_option("--c1", o.c1, "Shift c1");
    verify->add_option("--c2", o.c2, "Shift c2");
    bind(verify, cmd_verify);

    auto* oracle = app.add_subcommand("oracle-compare", "Compare closed forms with the wedge-space oracle");
    oracle->add_option("--case", o.case_file, "Case file or inline JSON")->required();
    bind(oracle, cmd_oracle_compare);

    auto* periodic = app.add_subcommand("list-periodic", "List n-periodic partitions");
    periodic->add_option("--n", o.n, "Period n")->required();
    periodic->add_option("--max-size", o.max_size, "Largest size")->required();
    bind(periodic, cmd_list_periodic);

    std::vector<const char*> argv{"tauforge"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kExitOk;
        }
        std::string msg = e.what();
        for (auto& ch : msg)
            if (ch == '\n') ch = ' ';
        err << "error: " << msg << "\n";
        return kExitInvalid;
    }
    try {
        g.max_degree = max_degree_from_env();
        if (!action) throw InvalidInput("no subcommand given");
        return action();
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const json::exception& e) {
        err << "error: malformed JSON input: " << e.what() << "\n";
        return kExitInvalid;
    }
}

} // namespace tauforge::cli
