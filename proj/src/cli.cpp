#include "grasscohom/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iomanip>
#include <optional>
#include <sstream>

#include "grasscohom/criteria.hpp"
#include "grasscohom/sequences.hpp"
#include "grasscohom/verify.hpp"

namespace grc {

namespace {

using Json = nlohmann::ordered_json;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string big(const BigInt& v) { return v.get_str(); }

Json weight_json(const GLWeight& w) { return Json(w.vec()); }

Json document(const std::string& command, Json n, Json input)
{
    Json doc;
    doc["command"] = command;
    doc["n"] = std::move(n);
    doc["input"] = std::move(input);
    doc["result"] = Json::object();
    doc["witnesses"] = Json::array();
    return doc;
}

std::pair<int, int> parse_range(const std::string& text)
{
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            std::size_t used = 0;
            int v = std::stoi(text, &used);
            if (used != text.size())
                throw std::invalid_argument("range");
            return {v, v};
        }
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string left = text.substr(0, dots);
        const std::string right = text.substr(dots + 2);
        int a = std::stoi(left, &used_a);
        int b = std::stoi(right, &used_b);
        if (used_a != left.size() || used_b != right.size())
            throw std::invalid_argument("range");
        return {a, b};
    } catch (const std::exception&) {
        throw InputError("malformed range '" + text + "', expected a..b");
    }
}

void check_n(int n)
{
    if (n < 2)
        throw InputError("-n must be >= 2");
}

// ---------------------------------------------------------------------------
// Commands build a JSON document and an exit code; rendering is separate.

struct Outcome {
    Json doc;
    int code = kExitOk;
};

Outcome cmd_cohom(int n, const std::string& text, std::optional<int> twist_by)
{
    check_n(n);
    IrredSum s = bundle(text, n);
    if (twist_by)
        s = twist(s, *twist_by);
    Outcome o{document("cohom", n, {{"expr", text}, {"twist", twist_by ? Json(*twist_by) : Json(nullptr)}})};
    const CohomRecord rec = cohomology(s);
    Json& r = o.doc["result"];
    r["normalized"] = s.str();
    r["rank"] = big(rank(s));
    r["euler_characteristic"] = big(rec.euler_characteristic());
    r["cohomology"] = Json::array();
    for (int d = 0; d <= rec.top(); ++d) {
        const auto& slot = rec.degrees[static_cast<std::size_t>(d)];
        Json mods = Json::array();
        for (const auto& [w, m] : slot.modules)
            mods.push_back({{"weight", weight_json(w)}, {"mult", big(m)}});
        r["cohomology"].push_back({{"degree", d}, {"dim", big(slot.dim)}, {"modules", mods}});
        if (slot.dim != 0)
            o.doc["witnesses"].push_back({{"degree", d}, {"twist", twist_by.value_or(0)}, {"dim", big(slot.dim)}});
    }
    return o;
}

Outcome cmd_table(int n, const std::string& text, const std::string& range)
{
    check_n(n);
    const auto [a, b] = parse_range(range);
    if (a > b)
        throw InputError("empty range " + range);
    const IrredSum s = bundle(text, n);
    Outcome o{document("table", n, {{"expr", text}, {"range", {a, b}}})};
    Json& r = o.doc["result"];
    r["rows"] = Json::array();
    const int top = 2 * n - 2;
    for (int k = a; k <= b; ++k) {
        const CohomRecord rec = cohomology(twist(s, k));
        Json dims = Json::array();
        for (int d = 0; d <= top; ++d) {
            dims.push_back(big(rec.dim(d)));
            if (d > 0 && d < top && rec.dim(d) != 0)
                o.doc["witnesses"].push_back({{"degree", d}, {"twist", k}, {"dim", big(rec.dim(d))}});
        }
        r["rows"].push_back({{"twist", k}, {"h", dims}});
    }
    Json thresholds = {{"h0_nonzero_from", nullptr}, {"htop_nonzero_upto", nullptr}};
    if (!s.is_zero()) {
        thresholds["h0_nonzero_from"] = *hstar_nonzero(s, 0).all_from;
        thresholds["htop_nonzero_upto"] = *hstar_nonzero(s, top).all_upto;
    }
    r["thresholds"] = thresholds;
    return o;
}

Outcome cmd_reg(int n, const std::string& text)
{
    check_n(n);
    const IrredSum s = bundle(text, n);
    Outcome o{document("reg", n, {{"expr", text}})};
    const RegularityReport rep = is_g_regular(s);
    const auto value = g_reg(s);
    o.doc["result"] = {{"g_regular", rep.verdict}, {"g_reg", value ? Json(*value) : Json("-inf")}};
    for (const auto& v : rep.violations)
        o.doc["witnesses"].push_back({{"condition", v.condition},
                                      {"k", v.k},
                                      {"degree", v.degree},
                                      {"factor", sym_factor_name(v.sym_power)},
                                      {"twist", v.twist},
                                      {"dim", big(v.dim)}});
    o.code = rep.verdict ? kExitOk : kExitVerdictFalse;
    return o;
}

int parse_index(const std::string& criterion, std::size_t colon)
{
    try {
        std::size_t used = 0;
        const std::string tail = criterion.substr(colon + 1);
        int v = std::stoi(tail, &used);
        if (used != tail.size())
            throw std::invalid_argument("index");
        return v;
    } catch (const std::exception&) {
        throw InputError("bad criterion '" + criterion + "'");
    }
}

Outcome cmd_check(int n, const std::string& criterion, const std::string& text)
{
    check_n(n);
    const IrredSum s = bundle(text, n);
    Outcome o{document("check", n, {{"expr", text}, {"criterion", criterion}})};

    const auto colon = criterion.find(':');
    const std::string kind = criterion.substr(0, colon);
    std::vector<ConditionSpec> specs;
    std::string theorem;
    CriterionReport rep;
    try {
        if (kind == "eg") {
            std::optional<int> r;
            if (colon != std::string::npos)
                r = parse_index(criterion, colon);
            const BigInt rk = rank(s);
            const long rv = r ? *r : (rk.fits_sint_p() ? rk.get_si() : 0);
            if (rv <= 0)
                throw InputError("splitting criterion needs rank >= 1");
            specs = evans_griffith_conditions(n, static_cast<int>(rv));
            theorem = "evans-griffith";
        } else if (kind == "wedge" && colon != std::string::npos) {
            specs = wedge_summand_conditions(n, parse_index(criterion, colon));
            theorem = "wedge-summand";
        } else if (kind == "sym" && colon != std::string::npos) {
            specs = sym_summand_conditions(n, parse_index(criterion, colon));
            theorem = "sym-summand";
        } else if (kind == "mt" && colon == std::string::npos) {
            specs = mt_conditions(n);
            theorem = "direct-sum";
        } else if (kind == "qreg" && colon == std::string::npos) {
            rep = check_q_regular(s);
        } else {
            throw InputError("unknown criterion '" + criterion + "'");
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    if (kind != "qreg")
        rep = evaluate_conditions(theorem, specs, s);

    Json conds = Json::array();
    for (std::size_t i = 0; i < rep.conditions.size(); ++i) {
        const auto& c = rep.conditions[i];
        Json groups = Json::array();
        if (i < specs.size())
            for (const auto& g : specs[i].groups)
                groups.push_back(describe(g));
        else
            groups.push_back(c.label);
        conds.push_back({{"label", c.label},
                         {"kind", i < specs.size() && specs[i].nonvanishing ? "nonvanishing" : "vanishing"},
                         {"groups", groups},
                         {"satisfied", c.satisfied}});
        if (!c.satisfied)
            for (const auto& w : c.witnesses)
                o.doc["witnesses"].push_back({{"condition", c.label},
                                              {"degree", w.degree},
                                              {"twist", w.twist},
                                              {"factor", w.factor},
                                              {"dim", big(w.dim)}});
    }
    o.doc["result"] = {{"theorem", rep.theorem}, {"verdict", rep.verdict}, {"conditions", conds}};
    o.code = rep.verdict ? kExitOk : kExitVerdictFalse;
    return o;
}

Outcome cmd_seq(int n, const std::string& id, const std::optional<std::string>& tensor_text, int twist_by)
{
    check_n(n);
    TermList seq;
    try {
        seq = build_sequence(id, n);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::optional<IrredSum> factor;
    if (tensor_text)
        factor = bundle(*tensor_text, n);
    Outcome o{document("seq", n,
                       {{"id", id}, {"tensor", tensor_text ? Json(*tensor_text) : Json(nullptr)}, {"twist", twist_by}})};
    const ChiCheck chk = verify_chi_additivity(seq, factor, twist_by);
    Json terms = Json::array();
    for (std::size_t i = 0; i < seq.terms.size(); ++i)
        terms.push_back({{"index", i},
                         {"term", seq.terms[i].label},
                         {"coefficient", big(seq.terms[i].coefficient)},
                         {"rank", big(chk.ranks[i])},
                         {"chi", big(chk.chi[i])}});
    o.doc["result"] = {{"terms", terms},
                       {"rank_sum", big(chk.rank_sum)},
                       {"chi_sum", big(chk.chi_sum)},
                       {"additive", chk.additive}};
    o.code = chk.additive ? kExitOk : kExitVerdictFalse;
    return o;
}

Outcome cmd_verify(const std::string& range, bool mutate)
{
    const auto [lo, hi] = parse_range(range);
    if (lo < 2 || hi > 6 || lo > hi)
        throw InputError("verify-paper range must lie within 2..6");
    std::optional<testing::ScopedBottMutation> mutation;
    if (mutate)
        mutation.emplace();
    Outcome o{document("verify-paper", Json::array({lo, hi}), {{"range", range}})};
    int passed = 0;
    int failed = 0;
    Json claims = Json::array();
    for (const auto& c : verify_claims(lo, hi)) {
        claims.push_back({{"id", c.id}, {"n", c.n}, {"pass", c.pass}, {"statement", c.statement}, {"detail", c.detail}});
        if (c.pass) {
            ++passed;
        } else {
            ++failed;
            o.doc["witnesses"].push_back({{"id", c.id}, {"n", c.n}, {"detail", c.detail}});
        }
    }
    o.doc["result"] = {{"claims", claims}, {"passed", passed}, {"failed", failed}};
    o.code = failed == 0 ? kExitOk : kExitVerdictFalse;
    return o;
}

// ---------------------------------------------------------------------------
// Rendering

std::string as_text(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_null())
        return "-";
    return v.dump();
}

std::string weight_text(const Json& w)
{
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i)
        out += (i ? "," : "") + w[i].dump();
    return out + ")";
}

// H^d(E (x) F(t)), with the factor dropped when it is O.
std::string group_text(const Json& w)
{
    const std::string f = as_text(w["factor"]);
    const std::string t = "(" + w["twist"].dump() + ")";
    return "H^" + w["degree"].dump() + "(" + (f == "O" ? "E" + t : "E (x) " + f + t) + ")";
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

void render_text(const Json& doc, std::ostream& out)
{
    const std::string cmd = doc["command"];
    const Json& r = doc["result"];
    if (cmd == "cohom") {
        out << "G(1," << doc["n"] << ")  E = " << as_text(doc["input"]["expr"]);
        if (!doc["input"]["twist"].is_null())
            out << " twisted by " << doc["input"]["twist"];
        out << "\nrank " << as_text(r["rank"]) << ", chi " << as_text(r["euler_characteristic"]) << "\n";
        for (const auto& d : r["cohomology"]) {
            out << "h^" << d["degree"] << " = " << as_text(d["dim"]);
            for (const auto& m : d["modules"]) {
                out << "  ";
                if (as_text(m["mult"]) != "1")
                    out << as_text(m["mult"]) << "*";
                out << weight_text(m["weight"]);
            }
            out << "\n";
        }
    } else if (cmd == "table") {
        const int top = 2 * doc["n"].get<int>() - 2;
        out << std::setw(6) << "twist";
        for (int d = 0; d <= top; ++d)
            out << std::setw(10) << ("h^" + std::to_string(d));
        out << "\n";
        for (const auto& row : r["rows"]) {
            out << std::setw(6) << row["twist"].get<int>();
            for (const auto& v : row["h"])
                out << std::setw(10) << as_text(v);
            out << "\n";
        }
        const Json& t = r["thresholds"];
        if (!t["h0_nonzero_from"].is_null())
            out << "h^0 nonzero for every twist >= " << t["h0_nonzero_from"] << "\n";
        if (!t["htop_nonzero_upto"].is_null())
            out << "h^" << top << " nonzero for every twist <= " << t["htop_nonzero_upto"] << "\n";
    } else if (cmd == "reg") {
        out << "G-regular: " << (r["g_regular"].get<bool>() ? "yes" : "no") << "\n";
        out << "G-reg = " << as_text(r["g_reg"]) << "\n";
        for (const auto& w : doc["witnesses"])
            out << "violation (" << as_text(w["condition"]) << ") k=" << w["k"] << ": " << group_text(w) << " = " << as_text(w["dim"])
                << "\n";
    } else if (cmd == "check") {
        out << "criterion " << as_text(doc["input"]["criterion"]) << " (" << as_text(r["theorem"])
            << "): " << (r["verdict"].get<bool>() ? "PASS" : "FAIL") << "\n";
        for (const auto& c : r["conditions"]) {
            out << "  [" << (c["satisfied"].get<bool>() ? "ok" : "FAIL") << "] (" << as_text(c["label"]) << ") "
                << (as_text(c["kind"]) == "nonvanishing" ? "nonzero: " : "vanish: ");
            for (std::size_t i = 0; i < c["groups"].size(); ++i)
                out << (i ? ", " : "") << as_text(c["groups"][i]);
            out << "\n";
        }
        for (const auto& w : doc["witnesses"])
            out << "  witness (" << as_text(w["condition"]) << "): " << group_text(w) << " = " << as_text(w["dim"]) << "\n";
    } else if (cmd == "seq") {
        out << "sequence " << as_text(doc["input"]["id"]) << " on G(1," << doc["n"] << ")";
        if (!doc["input"]["tensor"].is_null())
            out << " tensored by " << as_text(doc["input"]["tensor"]);
        out << " twisted by " << doc["input"]["twist"] << "\n";
        for (const auto& t : r["terms"])
            out << "  " << t["index"] << ": " << as_text(t["coefficient"]) << " x " << as_text(t["term"])
                << "   rank " << as_text(t["rank"]) << "  chi " << as_text(t["chi"]) << "\n";
        out << "alternating rank sum " << as_text(r["rank_sum"]) << ", chi sum " << as_text(r["chi_sum"]) << ": "
            << (r["additive"].get<bool>() ? "exact" : "NOT additive") << "\n";
    } else if (cmd == "verify-paper") {
        for (const auto& c : r["claims"])
            out << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "  n=" << c["n"] << "  " << as_text(c["id"]) << ": "
                << as_text(c["statement"]) << (c["pass"].get<bool>() ? "" : "  -- " + as_text(c["detail"])) << "\n";
        out << r["passed"] << " passed, " << r["failed"] << " failed\n";
    }
}

void render_csv(const Json& doc, std::ostream& out)
{
    const std::string cmd = doc["command"];
    const Json& r = doc["result"];
    if (cmd == "cohom") {
        out << "degree,dim\n";
        for (const auto& d : r["cohomology"])
            out << d["degree"] << "," << as_text(d["dim"]) << "\n";
    } else if (cmd == "table") {
        const int top = 2 * doc["n"].get<int>() - 2;
        out << "twist";
        for (int d = 0; d <= top; ++d)
            out << ",h" << d;
        out << "\n";
        for (const auto& row : r["rows"]) {
            out << row["twist"];
            for (const auto& v : row["h"])
                out << "," << as_text(v);
            out << "\n";
        }
    } else if (cmd == "reg") {
        out << "g_regular,g_reg\n" << (r["g_regular"].get<bool>() ? "true" : "false") << "," << as_text(r["g_reg"])
            << "\n";
    } else if (cmd == "check") {
        out << "condition,satisfied,degree,twist,factor,dim\n";
        for (const auto& c : r["conditions"]) {
            bool any = false;
            for (const auto& w : doc["witnesses"]) {
                if (w["condition"] != c["label"])
                    continue;
                any = true;
                out << csv_field(as_text(c["label"])) << ",false," << w["degree"] << "," << w["twist"] << ","
                    << csv_field(as_text(w["factor"])) << "," << as_text(w["dim"]) << "\n";
            }
            if (!any)
                out << csv_field(as_text(c["label"])) << "," << (c["satisfied"].get<bool>() ? "true" : "false")
                    << ",,,,\n";
        }
    } else if (cmd == "seq") {
        out << "index,coefficient,term,rank,chi\n";
        for (const auto& t : r["terms"])
            out << t["index"] << "," << as_text(t["coefficient"]) << "," << csv_field(as_text(t["term"])) << ","
                << as_text(t["rank"]) << "," << as_text(t["chi"]) << "\n";
    } else if (cmd == "verify-paper") {
        out << "id,n,pass,detail\n";
        for (const auto& c : r["claims"])
            out << as_text(c["id"]) << "," << c["n"] << "," << (c["pass"].get<bool>() ? "true" : "false") << ","
                << csv_field(as_text(c["detail"])) << "\n";
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cohomology of homogeneous bundles on the Grassmannian of lines G(1,n)", "grasscohom"};
    app.require_subcommand(1);

    int n = 0;
    std::string format = "text";
    std::string expr;
    std::optional<int> twist_opt;
    int twist_val = 0;
    std::string range;
    std::string criterion;
    std::string seq_id;
    std::optional<std::string> tensor_text;
    std::string n_range;
    bool mutate = false;

    auto add_common = [&](CLI::App* sub, bool needs_expr) {
        sub->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json", "csv"}))
            ->capture_default_str();
        if (needs_expr)
            sub->add_option("expr", expr, "Bundle expression")->required();
    };

    auto* cohom = app.add_subcommand("cohom", "Cohomology of a bundle in every degree");
    cohom->add_option("-n", n, "Ambient projective space P^n")->required();
    cohom->add_option("--twist", twist_opt, "Twist by O(k)");
    add_common(cohom, true);

    auto* table = app.add_subcommand("table", "Cohomology table over a range of twists");
    table->add_option("-n", n, "Ambient projective space P^n")->required();
    table->add_option("--range", range, "Twist range a..b")->required();
    add_common(table, true);

    auto* reg = app.add_subcommand("reg", "G-regularity verdict and G-reg value");
    reg->add_option("-n", n, "Ambient projective space P^n")->required();
    add_common(reg, true);

    auto* check = app.add_subcommand("check", "Evaluate a cohomological criterion");
    check->add_option("-n", n, "Ambient projective space P^n")->required();
    check->add_option("--criterion", criterion, "eg[:r] | wedge:j | sym:j | mt | qreg")->required();
    add_common(check, true);

    auto* seq = app.add_subcommand("seq", "Build an exact sequence and certify chi additivity");
    seq->add_option("-n", n, "Ambient projective space P^n")->required();
    seq->add_option("--id", seq_id, "R:j | Rdual:j | koszul")->required();
    seq->add_option("--tensor", tensor_text, "Tensor every term by a bundle");
    seq->add_option("--twist", twist_val, "Twist every term by O(k)");
    add_common(seq, false);

    auto* verify = app.add_subcommand("verify-paper", "Run every machine-checkable claim");
    verify->add_option("-n", n_range, "n or a range lo..hi within 2..6")->required();
    verify->add_flag("--mutate-bott", mutate)->group("");
    add_common(verify, false);

    std::vector<std::string> argv_store{"grasscohom"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    Outcome o;
    try {
        if (*cohom)
            o = cmd_cohom(n, expr, twist_opt);
        else if (*table)
            o = cmd_table(n, expr, range);
        else if (*reg)
            o = cmd_reg(n, expr);
        else if (*check)
            o = cmd_check(n, criterion, expr);
        else if (*seq)
            o = cmd_seq(n, seq_id, tensor_text, twist_val);
        else
            o = cmd_verify(n_range, mutate);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }

    if (format == "json")
        out << o.doc.dump(2) << "\n";
    else if (format == "csv")
        render_csv(o.doc, out);
    else
        render_text(o.doc, out);
    return o.code;
}

} // namespace grc
