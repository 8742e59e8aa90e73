#include "frobenius/cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "frobenius/error.hpp"
#include "frobenius/families.hpp"
#include "frobenius/io.hpp"
#include "frobenius/semigroup.hpp"
#include "frobenius/stability.hpp"
#include "frobenius/synth.hpp"

namespace frobenius::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr Amount kDefaultSpan = 4;
constexpr Amount kSieveModulusCap = 5000;

template <class T>
std::string join(const std::vector<T>& values)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); i++) {
        os << (i ? "," : "") << values[i];
    }
    return os.str();
}

template <class T>
std::string optional_text(const std::optional<T>& v)
{
    if (!v) {
        return "none";
    }
    std::ostringstream os;
    os << std::boolalpha << *v;
    return os.str();
}

Amount require(const std::optional<Amount>& value, const char* flag)
{
    if (!value) {
        throw PreconditionError(std::string("missing required flag ") + flag);
    }
    return *value;
}

std::string count_text(Count c) { return c.representable() ? std::to_string(c.value()) : "-"; }

OutputMode mode_or(const Command& cmd, OutputMode fallback) { return cmd.output.value_or(fallback); }

int run_analyze(const Command& cmd, std::ostream& out)
{
    const StabilityProfile p = profile(CoinSystem::parse(cmd.denoms));
    if (mode_or(cmd, OutputMode::text) == OutputMode::structured) {
        out << serialize(p);
        return kExitOk;
    }
    out << "denoms: " << p.system.to_string() << '\n'
        << "c: " << p.c << '\n'
        << "forced_c2: " << std::boolalpha << p.forced_c2 << '\n'
        << "u: " << p.u << '\n'
        << "paper_threshold: " << p.paper_threshold << '\n'
        << "exact_threshold: " << p.exact_threshold << '\n'
        << "orderly: " << optional_text(p.orderly) << '\n'
        << "counterexample: " << optional_text(p.counterexample) << '\n'
        << "experimental: " << p.experimental << '\n';
    return kExitOk;
}

int run_table(const Command& cmd, std::ostream& out)
{
    const OptTable table = build_table(CoinSystem::parse(cmd.denoms), require(cmd.limit, "--limit"));
    const bool structured = mode_or(cmd, OutputMode::text) == OutputMode::structured;
    if (cmd.residue) {
        const ResidueView view = residue_view(table);
        if (structured) {
            out << serialize(view);
            return kExitOk;
        }
        // One line per residue class; each entry is amount=count.
        for (const auto& row : view) {
            for (std::size_t i = 0; i < row.size(); i++) {
                out << (i ? " " : "") << row[i].amount << '=' << count_text(row[i].count);
            }
            out << '\n';
        }
        return kExitOk;
    }
    if (structured) {
        out << serialize(table);
        return kExitOk;
    }
    // Values in rows of b_k, so row s holds O_B(s b_k), ..., O_B(s b_k + b_k - 1).
    const Amount width = table.system().largest();
    out << "denoms: " << table.system().to_string() << '\n' << "limit: " << table.limit() << '\n';
    for (Amount n = 0; n <= table.limit(); n++) {
        out << count_text(table[n]) << (n % width == width - 1 || n == table.limit() ? '\n' : ' ');
    }
    return kExitOk;
}

int run_ftq(const Command& cmd, std::ostream& out)
{
    const OptTable table = build_table(CoinSystem::parse(cmd.denoms), require(cmd.limit, "--limit"));
    const ResidueView view = residue_view(table);
    if (mode_or(cmd, OutputMode::text) == OutputMode::structured) {
        out << serialize(view);
    } else {
        out << render_residue_view(view);
    }
    return kExitOk;
}

CongruenceFormula formula_for(const CoinSystem& system, const Command& cmd)
{
    if (system.unit_leading()) {
        return synthesize(system);
    }
    return synthesize_general(system, cmd.span.value_or(kDefaultSpan));
}

void print_formula_text(const CongruenceFormula& f, std::ostream& out)
{
    std::vector<Amount> w;
    std::vector<Amount> r;
    for (const FormulaEntry& e : f.entries) {
        w.push_back(e.weight);
        r.push_back(e.representative);
    }
    out << "denoms: " << join(f.denoms) << '\n'
        << "modulus: " << f.modulus << '\n'
        << "offset: " << f.offset << '\n'
        << "path: " << to_string(f.path) << '\n'
        << "h_min_rule: " << f.h_min_rule << '\n'
        << "a_min_paper: " << f.a_min_paper << '\n'
        << "a_min_empirical: " << optional_text(f.a_min_empirical) << '\n'
        << "exceptional: " << (f.exceptional ? join(*f.exceptional) : std::string("none")) << '\n'
        << "W: " << join(w) << '\n'
        << "R: " << join(r) << '\n'
        << render_piecewise(f);
}

int run_formula(const Command& cmd, std::ostream& out)
{
    const CongruenceFormula f = formula_for(CoinSystem::parse(cmd.denoms), cmd);
    if (mode_or(cmd, OutputMode::structured) == OutputMode::structured) {
        out << serialize(f);
    } else {
        print_formula_text(f, out);
    }
    return kExitOk;
}

int run_frobenius(const Command& cmd, std::ostream& out)
{
    const CoinSystem system = CoinSystem::parse(cmd.denoms);
    const Amount a = require(cmd.a, "--a");
    const Amount h = require(cmd.h, "--h");
    const Amount d = require(cmd.d, "--d");
    const Instance instance(a, h, d, system);
    const Amount oracle = a <= kSieveModulusCap ? frobenius_cross_checked(instance.generators())
                                                : frobenius_oracle(instance);

    const CongruenceFormula f = formula_for(system, cmd);
    std::optional<Amount> by_formula;
    const Amount a_min = f.a_min_empirical && f.path == FormulaPath::general_b1 ? *f.a_min_empirical : f.a_min_paper;
    if (a >= a_min && h >= f.h_min(d)) {
        by_formula = evaluate(f, a, h, d, f.path == FormulaPath::general_b1 ? Bound::empirical : Bound::paper);
    }
    const bool agreement = !by_formula || *by_formula == oracle;
    std::vector<std::string> sources{"oracle"};
    if (by_formula) {
        sources.push_back("formula");
    }

    if (mode_or(cmd, OutputMode::text) == OutputMode::structured) {
        Json doc;
        doc["denoms"] = std::vector<Amount>(system.denoms().begin(), system.denoms().end());
        doc["a"] = a;
        doc["h"] = h;
        doc["d"] = d;
        doc["g"] = oracle;
        doc["oracle"] = oracle;
        doc["formula"] = by_formula ? Json(*by_formula) : Json(nullptr);
        doc["sources"] = sources;
        doc["agreement"] = agreement;
        out << doc.dump(2) << '\n';
    } else {
        out << "denoms: " << system.to_string() << '\n'
            << "a: " << a << '\n'
            << "h: " << h << '\n'
            << "d: " << d << '\n'
            << "g: " << oracle << '\n'
            << "oracle: " << oracle << '\n'
            << "formula: " << optional_text(by_formula) << '\n'
            << "sources: " << join(sources) << '\n'
            << "agreement: " << std::boolalpha << agreement << '\n';
    }
    return agreement ? kExitOk : kExitDisagreement;
}

int run_certify(const Command& cmd, std::ostream& out)
{
    const CoinSystem system = CoinSystem::parse(cmd.denoms);
    const Amount h = require(cmd.h, "--h");
    const Amount d = require(cmd.d, "--d");
    // b_1 > 1 formulas are certified here, so synthesis itself runs uncertified.
    const CongruenceFormula f = system.unit_leading() ? synthesize(system) : synthesize_general(system, 0);
    const Amount a_hi = cmd.a_hi.value_or(f.a_min_paper + cmd.span.value_or(kDefaultSpan) * f.modulus);
    const CertifyReport report = certify(f, h, d, a_hi);
    if (mode_or(cmd, OutputMode::text) == OutputMode::structured) {
        out << serialize(report);
        return kExitOk;
    }
    out << "h: " << report.h << '\n'
        << "d: " << report.d << '\n'
        << "a_hi: " << report.a_hi << '\n'
        << "a_min_empirical: " << report.a_min_empirical << '\n'
        << "exceptional: " << join(report.exceptional) << '\n'
        << "mismatches: " << join(report.mismatches) << '\n'
        << "checked: " << report.checked << '\n';
    return kExitOk;
}

FamilyFormula family_from(const Command& cmd)
{
    const FamilyId id = parse_family_id(cmd.family);
    switch (id) {
    case FamilyId::selmer_1k:
        return FamilyFormula::selmer(require(cmd.k, "--k"));
    case FamilyId::f_12b_b1:
        return FamilyFormula::one_two_b_b1(require(cmd.b, "--b"));
    case FamilyId::f_12b_b1_2b:
        return FamilyFormula::one_two_b_b1_2b(require(cmd.b, "--b"));
    case FamilyId::f_1b_2bm1:
        return FamilyFormula::one_b_2bm1(require(cmd.b, "--b"));
    case FamilyId::f_12k_k:
        return FamilyFormula::one_to_k_plus(require(cmd.k, "--k"), require(cmd.big_k, "--K"));
    case FamilyId::f_4_8_15_17:
        return FamilyFormula::four_8_15_17();
    default:
        return FamilyFormula::reference(id);
    }
}

int run_family(const Command& cmd, std::ostream& out)
{
    const FamilyFormula family = family_from(cmd);
    const bool structured = mode_or(cmd, OutputMode::text) == OutputMode::structured;
    if (cmd.a) {
        const Amount a = *cmd.a;
        const Amount h = require(cmd.h, "--h");
        const Amount d = require(cmd.d, "--d");
        const Amount value = family_eval(family, a, h, d);
        const Amount oracle = frobenius_oracle(Instance(a, h, d, family.system()));
        const bool agreement = value == oracle;
        if (structured) {
            Json doc;
            doc["family"] = to_string(family.id());
            doc["denoms"] = std::vector<Amount>(family.system().denoms().begin(), family.system().denoms().end());
            doc["a"] = a;
            doc["h"] = h;
            doc["d"] = d;
            doc["value"] = value;
            doc["oracle"] = oracle;
            doc["agreement"] = agreement;
            out << doc.dump(2) << '\n';
        } else {
            out << "family: " << to_string(family.id()) << '\n'
                << "denoms: " << family.system().to_string() << '\n'
                << "a: " << a << '\n'
                << "h: " << h << '\n'
                << "d: " << d << '\n'
                << "value: " << value << '\n'
                << "oracle: " << oracle << '\n'
                << "agreement: " << std::boolalpha << agreement << '\n';
        }
        return agreement ? kExitOk : kExitDisagreement;
    }

    FamilyGrid grid = FamilyGrid::periods(family, cmd.span.value_or(2), {require(cmd.d, "--d")});
    if (cmd.h) {
        grid.h_values = {*cmd.h};
        grid.h_relative = false;
    }
    const CrossCheckReport report = cross_check(family, grid);
    if (structured) {
        out << serialize(report);
    } else {
        out << "family: " << to_string(family.id()) << '\n'
            << "denoms: " << family.system().to_string() << '\n'
            << "points: " << report.points << '\n'
            << "in_domain: " << report.in_domain << '\n'
            << "synth_compared: " << report.synth_compared << '\n'
            << "mismatches: " << report.mismatches.size() << '\n';
        for (const CrossCheckMismatch& m : report.mismatches) {
            out << "  a=" << m.a << " h=" << m.h << " d=" << m.d << " family=" << m.family
                << " oracle=" << m.oracle << " synth=" << optional_text(m.synth) << '\n';
        }
    }
    return report.mismatches.empty() ? kExitOk : kExitDisagreement;
}

} // namespace

std::optional<Command> parse(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                             int& exit_code)
{
    CLI::App app{"Frobenius numbers of A(a) = (a, ha + dB) via optimal change-making tables"};
    // `--h` is a model parameter, so help is long-form only.
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    Command cmd;
    std::string output;

    const auto add_common = [&](CLI::App* sub, bool denoms) {
        if (denoms) {
            sub->add_option("denoms", cmd.denoms, "comma separated denominations, e.g. 1,11,14")->required();
        }
        sub->add_option("--output", output, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    };

    CLI::App* analyze = app.add_subcommand("analyze", "stability profile and orderliness");
    add_common(analyze, true);

    CLI::App* table = app.add_subcommand("table", "O_B(n) for n up to --limit");
    add_common(table, true);
    table->add_option("--limit", cmd.limit)->required();
    table->add_flag("--residue", cmd.residue, "group by n mod b_k");

    CLI::App* ftq = app.add_subcommand("ftq", "residue rows as t^w q^n tokens");
    add_common(ftq, true);
    ftq->add_option("--limit", cmd.limit)->required();

    CLI::App* formula = app.add_subcommand("formula", "synthesize the congruence-class formula");
    add_common(formula, true);
    formula->add_option("--span", cmd.span, "certification periods (b_1 > 1 only)");

    CLI::App* frob = app.add_subcommand("frobenius", "g(A(a)) by oracle and by formula");
    add_common(frob, true);
    frob->add_option("--a", cmd.a)->required();
    frob->add_option("--h", cmd.h)->required();
    frob->add_option("--d", cmd.d)->required();
    frob->add_option("--span", cmd.span);

    CLI::App* cert = app.add_subcommand("certify", "scan a in [2, a_hi] against the oracle");
    add_common(cert, true);
    cert->add_option("--h", cmd.h)->required();
    cert->add_option("--d", cmd.d)->required();
    cert->add_option("--a-hi", cmd.a_hi);
    cert->add_option("--span", cmd.span);

    CLI::App* fam = app.add_subcommand("family", "evaluate or cross-check a closed-form family");
    add_common(fam, false);
    fam->add_option("--family", cmd.family)->required();
    fam->add_option("--b", cmd.b);
    fam->add_option("--k", cmd.k);
    fam->add_option("--K", cmd.big_k);
    fam->add_option("--a", cmd.a);
    fam->add_option("--h", cmd.h);
    fam->add_option("--d", cmd.d);
    fam->add_option("--span", cmd.span, "periods to cross-check");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        exit_code = app.exit(e, out, err);
        if (exit_code != 0) {
            exit_code = kExitUsage;
        }
        return std::nullopt;
    }
    for (CLI::App* sub : app.get_subcommands()) {
        cmd.subcommand = sub->get_name();
    }
    if (output == "text") {
        cmd.output = OutputMode::text;
    } else if (output == "structured") {
        cmd.output = OutputMode::structured;
    }
    exit_code = kExitOk;
    return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err)
{
    try {
        if (cmd.subcommand == "analyze") {
            return run_analyze(cmd, out);
        }
        if (cmd.subcommand == "table") {
            return run_table(cmd, out);
        }
        if (cmd.subcommand == "ftq") {
            return run_ftq(cmd, out);
        }
        if (cmd.subcommand == "formula") {
            return run_formula(cmd, out);
        }
        if (cmd.subcommand == "frobenius") {
            return run_frobenius(cmd, out);
        }
        if (cmd.subcommand == "certify") {
            return run_certify(cmd, out);
        }
        if (cmd.subcommand == "family") {
            return run_family(cmd, out);
        }
        err << "error: unknown subcommand '" << cmd.subcommand << "'\n";
        return kExitUsage;
    } catch (const CertificationFailure& e) {
        err << "error: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const OracleMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kExitDisagreement;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    int code = kExitOk;
    const std::optional<Command> cmd = parse(args, out, err, code);
    if (!cmd) {
        return code;
    }
    return run(*cmd, out, err);
}

} // namespace frobenius::cli
