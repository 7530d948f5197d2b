#include "weakdual/cli.hpp"

#include "weakdual/acceptance.hpp"
#include "weakdual/case_json.hpp"
#include "weakdual/classical.hpp"
#include "weakdual/cones.hpp"
#include "weakdual/integrality.hpp"
#include "weakdual/lfactors.hpp"
#include "weakdual/period_engine.hpp"
#include "weakdual/sampling.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

namespace weakdual {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string case_name, pair = "ginzburg", space, format = "json", output, places_path, case_file, check = "tate";
    long trunc = 12, samples = 20, genus = 2, max_degree = 6, bound = 4, lo = -6, hi = 6, m = 0;
    std::uint64_t seed = default_seed();
    std::string satake, gm, chi, vt = "inf", chi_value = "1", alpha = "1", beta = "1", kind = "relevant", only;
    bool unreindexed = false;
};

QVector parse_list(const std::string& text)
{
    QVector out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_rational(item));
        } catch (const std::exception&) {
            throw UsageError("bad rational '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

Rational parse_one(const std::string& text)
{
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw UsageError("bad rational '" + text + "'");
    }
}

Json series_json(const HalfPowerSeries& s)
{
    Json j = Json::object();
    for (const auto& [n, c] : s.coeffs()) j[std::to_string(n)] = to_string(c);
    return j;
}

Json graded_json(const GradedSeries& s)
{
    Json a = Json::array();
    for (const auto& c : s.coeffs()) a.push_back(to_string(c));
    return a;
}

Json header(const std::string& command, const Options& o)
{
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["seed"] = o.seed;
    return j;
}

struct Report {
    Json json;
    std::vector<std::vector<std::string>> csv;  // first row is the header
    bool ok = true;
};

SatakePoint point_from_options(const CaseData& c, const Options& o)
{
    if (o.satake.empty()) return identity_point(c);
    SatakePoint s{parse_list(o.satake), std::nullopt, "cli"};
    if (!o.gm.empty()) s.gm = parse_one(o.gm);
    return s;
}

Report cmd_groups(const Options& o)
{
    Report r{header("groups", o), {{"case", "rank", "semisimple_rank", "dual", "a", "gamma", "gimel"}}, true};
    Json cases = Json::array();
    for (const auto& name : catalog_names()) {
        if (!o.case_name.empty() && name != o.case_name) continue;
        const CaseData& c = load_case(name);
        Json e;
        e["name"] = name;
        e["description"] = c.spec.description;
        e["rank"] = c.rank;
        e["semisimple_rank"] = c.semisimple_rank();
        e["dual_case"] = c.dual_case;
        e["rho"] = to_json(c.rho.coords());
        e["rho_check"] = to_json(c.rho_check.coords());
        std::vector<std::string> row{name, std::to_string(c.rank), std::to_string(c.semisimple_rank()), c.dual_case};
        if (c.constants) {
            const auto& k = *c.constants;
            e["constants"] = {{"a", to_string(k.a)},         {"gamma", to_string(k.gamma)},
                              {"gimel", to_string(k.gimel)}, {"epsilon", to_string(k.epsilon)},
                              {"dim_G", k.dim_G},            {"dim_U", k.dim_U},
                              {"discrepancy", to_string(k.discrepancy_exponent)}};
            row.insert(row.end(), {to_string(k.a), to_string(k.gamma), to_string(k.gimel)});
        } else {
            row.insert(row.end(), {"", "", ""});
        }
        if (!o.case_name.empty()) e["definition"] = case_spec_to_json(c.spec);
        cases.push_back(std::move(e));
        r.csv.push_back(std::move(row));
    }
    if (!o.case_name.empty() && cases.empty()) throw CatalogError("unknown case '" + o.case_name + "'");
    r.json["cases"] = std::move(cases);
    return r;
}

Report cmd_weights(const Options& o)
{
    if (o.case_name.empty()) throw UsageError("--case is required");
    const CaseData& c = load_case(o.case_name);
    Report r{header("weights", o), {{"degree", "weight"}}, true};
    r.json["case"] = c.name;
    r.json["kind"] = o.kind;
    r.json["max_degree"] = o.max_degree;
    Json by = Json::object();
    auto emit = [&](long d, const QVector& v) {
        by[std::to_string(d)].push_back(to_json(v));
        r.csv.push_back({std::to_string(d), to_string(v)});
    };
    if (o.kind == "relevant") {
        for (const auto& [d, ws] : enumerate_relevant(c, o.max_degree).by_degree) {
            by[std::to_string(d)] = Json::array();
            for (const auto& w : ws) emit(d, w.coords());
        }
    } else if (o.kind == "automorphic") {
        for (const auto& [d, xs] : enumerate_automorphic(c, o.max_degree).by_degree) {
            by[std::to_string(d)] = Json::array();
            for (const auto& x : xs) emit(d, x.coords());
        }
    } else {
        throw UsageError("--kind must be relevant or automorphic");
    }
    r.json["by_degree"] = std::move(by);
    return r;
}

Report series_report(const std::string& command, const Options& o, const GradedSeries& s)
{
    Report r{header(command, o), {{"degree", "coefficient"}}, true};
    r.json["space"] = o.space;
    r.json["trunc"] = o.trunc;
    r.json["coeffs"] = graded_json(s);
    for (long d = 0; d <= s.trunc(); ++d) r.csv.push_back({std::to_string(d), to_string(s[d])});
    return r;
}

Report cmd_hilbert(const Options& o)
{
    if (o.space.empty()) throw UsageError("--space is required");
    return series_report("hilbert", o, hilbert_series(spectral_space(o.space), o.trunc));
}

Report cmd_lfactor(const Options& o)
{
    if (o.space.empty()) throw UsageError("--space is required");
    const SpectralSpace sp = spectral_space(o.space);
    const SatakePoint s = point_from_options(*sp.group, o);
    Report r = series_report("lfactor", o, nonlinear_local_factor(sp, s, o.trunc));
    r.json["satake"] = satake_to_json(s);
    if (sp.kind != SpaceKind::relevant_cone && sp.kind != SpaceKind::rank_one_tensor) {
        const auto lin = linear_local_factor(standard_eigenvalues(sp, s), o.trunc);
        r.json["determinant_expansion"] = graded_json(lin);
        r.json["equal"] = lin == nonlinear_local_factor(sp, s, o.trunc);
        r.ok = r.json["equal"].get<bool>();
    }
    return r;
}

Valuation parse_vt(const std::string& text)
{
    if (text == "inf" || text == "infinity") return std::nullopt;
    try {
        std::size_t used = 0;
        const long v = std::stol(text, &used);
        if (used == text.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("bad valuation '" + text + "'");
}

Report cmd_integrality_check(const Options& o)
{
    if (o.case_name.empty() || o.chi.empty()) throw UsageError("--case and --chi are required");
    const CaseData& c = load_case(o.case_name);
    const CoweightVector chi(parse_list(o.chi));
    if (chi.size() != c.rank) throw UsageError("--chi needs " + std::to_string(c.rank) + " coordinates");
    const Valuation v = parse_vt(o.vt);
    const auto t = torus_integrality(c, chi);
    Report r{header("integrality check", o), {{"case", "chi", "v_t", "integral"}}, true};
    const bool integral = is_integral(c, {chi, v});
    r.json["case"] = c.name;
    r.json["chi"] = to_json(chi.coords());
    r.json["v_t"] = v ? Json(std::to_string(*v)) : Json("inf");
    r.json["torus_ok"] = t.torus_ok;
    r.json["min_v_t"] = to_string(t.min_v_t);
    r.json["integral"] = integral;
    r.csv.push_back({c.name, to_string(chi.coords()), v ? std::to_string(*v) : "inf", integral ? "1" : "0"});
    return r;
}

Report cmd_integrality_verify(const Options& o)
{
    const std::string name = o.case_name.empty() ? "ginzburg" : o.case_name;
    const auto rep = oracle_agreement_report(name, o.bound, o.lo, o.hi);
    Report r{header("integrality verify", o), {{"case", "grid_size", "integral_points", "disagreements"}}, true};
    r.json["case"] = rep.case_name;
    r.json["exponent_bound"] = rep.exponent_bound;
    r.json["v_t_range"] = {rep.v_t_lo, rep.v_t_hi, "inf"};
    r.json["grid_size"] = rep.grid_size;
    r.json["integral_points"] = rep.integral_points;
    Json dis = Json::array();
    for (const auto& d : rep.disagreements)
        dis.push_back({{"exponents", d.exponents},
                       {"v_t", d.v_t ? Json(std::to_string(*d.v_t)) : Json("inf")},
                       {"criterion", d.criterion},
                       {"oracle", d.oracle}});
    r.json["disagreements"] = std::move(dis);
    r.ok = rep.disagreements.empty();
    r.csv.push_back({rep.case_name, std::to_string(rep.grid_size), std::to_string(rep.integral_points),
                     std::to_string(rep.disagreements.size())});
    return r;
}

Json duality_json(const DualityReport& d)
{
    Json j;
    j["equal"] = d.equal;
    j["first_divergent_degree"] = d.first_divergent_degree ? Json(*d.first_divergent_degree) : Json(nullptr);
    Json degrees = Json::array();
    const long top = std::min(d.automorphic.trunc(), d.spectral.trunc());
    for (long n = 0; n <= top; ++n) {
        const Rational a = d.automorphic.coeff(n), s = d.spectral.coeff(n);
        degrees.push_back({{"degree", n}, {"automorphic", to_string(a)}, {"spectral", to_string(s)}, {"equal", a == s}});
    }
    j["degrees"] = std::move(degrees);
    return j;
}

Report cmd_match(const Options& o)
{
    if (o.samples < 1) throw UsageError("--samples must be at least 1");
    const CasePair p = case_pair(o.pair);
    Report r{header("match", o), {{"point", "degree", "automorphic", "spectral", "equal"}}, true};
    r.json["pair"] = p.name;
    r.json["automorphic_case"] = p.automorphic->name;
    r.json["spectral_case"] = p.spectral->name;
    r.json["trunc"] = o.trunc;
    Json points = Json::array();
    for (const auto& s : sample_satake_points(*p.spectral, static_cast<std::size_t>(o.samples), o.seed)) {
        const auto d = verify_local_duality(p, s, o.trunc);
        Json e = duality_json(d);
        e["satake"] = satake_to_json(s);
        if (o.unreindexed)
            for (long m = 0; m <= 2; ++m) e["reindexing_m" + std::to_string(m)] = verify_reindexing(*p.automorphic, s, m, o.trunc);
        for (const auto& deg : e["degrees"])
            r.csv.push_back({s.label, std::to_string(deg["degree"].get<long>()), deg["automorphic"], deg["spectral"],
                             deg["equal"].get<bool>() ? "1" : "0"});
        r.ok = r.ok && d.equal;
        if (o.unreindexed)
            for (long m = 0; m <= 2; ++m) r.ok = r.ok && e["reindexing_m" + std::to_string(m)].get<bool>();
        points.push_back(std::move(e));
    }
    r.json["points"] = std::move(points);
    r.json["all_equal"] = r.ok;
    return r;
}

std::vector<Place> read_places(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    if (!j.is_array()) throw UsageError("places file must hold an array");
    std::vector<Place> out;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("q") || !e["q"].is_number_integer() || !e.contains("satake"))
            throw UsageError("each place needs an integer 'q' and a 'satake' object");
        Place p{e["q"].get<long>(), satake_from_json(e["satake"])};
        if (p.satake.label.empty()) p.satake.label = "q=" + std::to_string(p.q);
        out.push_back(std::move(p));
    }
    return out;
}

Json ledger_json(const ExponentLedger& l)
{
    Json j;
    j["case"] = l.case_name;
    j["genus"] = l.genus;
    Json entries = Json::array();
    for (const auto& e : l.entries)
        entries.push_back({{"label", e.label},
                           {"side", e.automorphic ? "automorphic" : "spectral"},
                           {"exponent_of_q^(g-1)", to_string(e.exponent)}});
    j["entries"] = std::move(entries);
    j["total_q^(g-1)"] = to_string(l.total());
    j["q_power"] = to_string(l.q_power());
    j["delta_quarter_units"] = to_string(l.quarter_delta_units());
    return j;
}

Report cmd_identity(const Options& o)
{
    if (o.genus < 0) throw UsageError("--genus must be nonnegative");
    const CasePair p = case_pair(o.pair);
    const auto places = o.places_path.empty() ? std::vector<Place>{} : read_places(o.places_path);
    const auto g = assemble_global(p, o.genus, places, o.trunc);
    Report r{header("identity", o), {{"place", "q", "equal", "first_divergent_degree"}}, g.ok()};
    r.json["pair"] = g.pair;
    r.json["genus"] = g.genus;
    r.json["trunc"] = g.trunc;
    Json ps = Json::array();
    for (const auto& pr : g.places) {
        Json e = duality_json(pr.report);
        e["q"] = pr.q;
        e["label"] = pr.label;
        ps.push_back(std::move(e));
        r.csv.push_back({pr.label, std::to_string(pr.q), pr.report.equal ? "1" : "0",
                         pr.report.first_divergent_degree ? std::to_string(*pr.report.first_divergent_degree) : ""});
    }
    r.json["places"] = std::move(ps);
    r.json["ledger"] = ledger_json(g.ledger);
    r.json["central_character"] = {{"automorphic", g.central_character_token}, {"spectral", g.central_character_token}};
    r.json["all_places_match"] = g.all_places_match;
    r.json["discrepancy_matches"] = g.discrepancy_matches;
    return r;
}

Report cmd_classical(const Options& o)
{
    Report r{header("classical", o), {{"check", "equal"}}, true};
    r.json["check"] = o.check;
    if (o.check == "tate") {
        const Rational chi = parse_one(o.chi_value);
        const auto tate = tate_local_factor(chi, o.trunc);
        const auto lin = linear_local_factor({chi}, o.trunc);
        const auto line = nonlinear_local_factor(spectral_space("A1"), SatakePoint{{chi}, std::nullopt, "chi"}, o.trunc);
        r.json["coeffs"] = graded_json(tate);
        r.ok = tate == lin && tate == line;
    } else if (o.check == "hecke") {
        const GL2Satake s(parse_one(o.alpha), parse_one(o.beta));
        const auto v = hecke_local_factor(s, o.m, o.trunc);
        r.json["m"] = o.m;
        r.json["period_side"] = series_json(v.period_side);
        r.json["l_function_side"] = series_json(v.l_function_side);
        r.json["first_difference"] = v.first_difference ? Json(*v.first_difference) : Json(nullptr);
        r.ok = v.equal;
    } else if (o.check == "cs") {
        if (o.case_name.empty() || o.chi.empty()) throw UsageError("--case and --chi are required for cs");
        const CaseData& c = load_case(o.case_name);
        const CoweightVector chi(parse_list(o.chi));
        if (chi.size() != c.rank) throw UsageError("--chi needs " + std::to_string(c.rank) + " coordinates");
        const SatakePoint s = point_from_options(load_case(c.dual_case), o);
        const auto v = casselman_shalika_value(c, chi, s, o.m);
        r.json["value"] = to_string(v.value);
        r.json["u_exponent"] = v.u_exponent;
    } else if (o.check == "whittaker") {
        if (o.case_name.empty()) throw UsageError("--case is required for whittaker");
        const CaseData& c = load_case(o.case_name);
        r.json["beta_whitt"] = to_string(whittaker_beta(c, o.genus));
        r.json["delta_exponent"] = to_string(whittaker_delta_exponent(c));
        r.ok = whittaker_beta(c, o.genus) == -4 * Rational(o.genus - 1) * whittaker_delta_exponent(c);
    } else {
        throw UsageError("--check must be tate, hecke, cs or whittaker");
    }
    r.json["equal"] = r.ok;
    r.csv.push_back({o.check, r.ok ? "1" : "0"});
    return r;
}

Report cmd_acceptance(const Options& o)
{
    std::vector<int> ids;
    if (!o.only.empty())
        for (const auto& x : parse_list(o.only)) {
            if (!is_integer(x)) throw UsageError("--only takes criterion numbers");
            ids.push_back(static_cast<int>(to_long_exact(x)));
        }
    for (int id : ids)
        if (id < 1 || id > kCriterionCount) throw UsageError("no criterion " + std::to_string(id));
    Report r{header("acceptance", o), {{"criterion", "passed", "elapsed_ms", "detail"}}, true};
    Json rs = Json::array();
    for (const auto& c : run_acceptance(o.seed, ids)) {
        rs.push_back({{"id", c.id}, {"title", c.title}, {"passed", c.passed}, {"elapsed_ms", c.elapsed_ms}, {"detail", c.detail}});
        r.csv.push_back({std::to_string(c.id), c.passed ? "1" : "0", std::to_string(c.elapsed_ms), c.detail});
        r.ok = r.ok && c.passed;
    }
    r.json["criteria"] = std::move(rs);
    return r;
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

void write_report(const Report& r, const Options& o, std::ostream& out)
{
    std::ostringstream text;
    if (o.format == "csv") {
        for (const auto& row : r.csv) {
            for (std::size_t i = 0; i < row.size(); ++i) text << (i ? "," : "") << csv_escape(row[i]);
            text << '\n';
        }
    } else {
        text << r.json.dump(2) << '\n';
    }
    if (o.output.empty() || o.output == "-") {
        out << text.str();
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw UsageError("cannot write " + o.output);
    f << text.str();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Exact checks of weakly dual period pairs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    app.add_option("-o,--output", o.output, "output file (default stdout)");
    app.add_option("--case-file", o.case_file, "register an extra case from JSON")->check(CLI::ExistingFile);

    auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "sampling seed (env WEAKDUAL_SEED)"); };

    auto* groups = app.add_subcommand("groups", "list catalog cases");
    groups->add_option("--case", o.case_name, "show a single case with its full description");

    auto* weights = app.add_subcommand("weights", "enumerate weights by grading degree");
    weights->add_option("--case", o.case_name)->required();
    weights->add_option("--max-degree", o.max_degree)->check(CLI::NonNegativeNumber);
    weights->add_option("--kind", o.kind, "relevant or automorphic");

    auto* hilbert = app.add_subcommand("hilbert", "graded dimensions of a spectral space");
    hilbert->add_option("--space", o.space)->required();
    hilbert->add_option("--trunc", o.trunc)->check(CLI::NonNegativeNumber);

    auto* lfactor = app.add_subcommand("lfactor", "local factor at a Satake point");
    lfactor->add_option("--space", o.space)->required();
    lfactor->add_option("--trunc", o.trunc)->check(CLI::NonNegativeNumber);
    lfactor->add_option("--satake", o.satake, "comma-separated lattice-basis values");
    lfactor->add_option("--gm", o.gm, "Gm coordinate");

    auto* integ = app.add_subcommand("integrality", "integrality criterion");
    integ->require_subcommand(1);
    auto* icheck = integ->add_subcommand("check", "evaluate the criterion at one point");
    icheck->add_option("--case", o.case_name)->required();
    icheck->add_option("--chi", o.chi, "comma-separated coweight")->required();
    icheck->add_option("--vt", o.vt, "valuation of t or inf");
    auto* iverify = integ->add_subcommand("verify", "compare against the direct oracle on a grid");
    iverify->add_option("--case", o.case_name, "ginzburg or garrett");
    iverify->add_option("--bound", o.bound);
    iverify->add_option("--vt-lo", o.lo);
    iverify->add_option("--vt-hi", o.hi);

    auto* match = app.add_subcommand("match", "compare automorphic and spectral local factors");
    match->add_option("--pair", o.pair, "ginzburg, garrett or a case name");
    match->add_option("--trunc", o.trunc)->check(CLI::NonNegativeNumber);
    match->add_option("--samples", o.samples);
    match->add_flag("--unreindexed", o.unreindexed, "also check the sum before reindexing, m = 0, 1, 2");
    seed_opt(match);

    auto* identity = app.add_subcommand("identity", "assemble the global comparison");
    identity->add_option("--pair", o.pair);
    identity->add_option("--genus", o.genus);
    identity->add_option("--places", o.places_path)->check(CLI::ExistingFile);
    identity->add_option("--trunc", o.trunc)->check(CLI::NonNegativeNumber);

    auto* classical = app.add_subcommand("classical", "classical unramified identities");
    classical->add_option("--check", o.check, "tate, hecke, cs or whittaker");
    classical->add_option("--chi-value", o.chi_value);
    classical->add_option("--alpha", o.alpha);
    classical->add_option("--beta", o.beta);
    classical->add_option("--m", o.m)->check(CLI::NonNegativeNumber);
    classical->add_option("--trunc", o.trunc)->check(CLI::NonNegativeNumber);
    classical->add_option("--case", o.case_name);
    classical->add_option("--chi", o.chi);
    classical->add_option("--satake", o.satake);
    classical->add_option("--gm", o.gm);
    classical->add_option("--genus", o.genus);

    auto* acceptance = app.add_subcommand("acceptance", "run the acceptance suite");
    acceptance->add_option("--only", o.only, "comma-separated criterion numbers");
    seed_opt(acceptance);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << "run with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (!o.case_file.empty()) load_case_file(o.case_file);
        Report r;
        if (groups->parsed()) r = cmd_groups(o);
        else if (weights->parsed()) r = cmd_weights(o);
        else if (hilbert->parsed()) r = cmd_hilbert(o);
        else if (lfactor->parsed()) r = cmd_lfactor(o);
        else if (icheck->parsed()) r = cmd_integrality_check(o);
        else if (iverify->parsed()) r = cmd_integrality_verify(o);
        else if (match->parsed()) r = cmd_match(o);
        else if (identity->parsed()) r = cmd_identity(o);
        else if (classical->parsed()) r = cmd_classical(o);
        else r = cmd_acceptance(o);
        write_report(r, o, out);
        return r.ok ? kExitOk : kExitVerificationFailed;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
    } catch (const CatalogError& e) {
        err << "catalog error: " << e.what() << '\n';
    } catch (const DimensionError& e) {
        err << "dimension error: " << e.what() << '\n';
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << '\n';
    }
    return kExitUsage;
}

}  // namespace weakdual
