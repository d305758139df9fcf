#include "qram/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <string>
#include <vector>

#include "qram/generators.hpp"
#include "qram/identities.hpp"
#include "qram/json.hpp"
#include "qram/numeric.hpp"
#include "qram/symbolic.hpp"

namespace qram::cli {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct Options {
    std::string series;
    std::vector<std::string> identities;
    std::vector<std::string> values;
    bool all = false;
    std::string family;
    int index = 0;
    int order = 200;
    long nmax = 100;
    unsigned precision = 256;
    std::string format = "text";
    bool ascii = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& item : items) {
        if (!out.empty()) out += sep;
        out += item;
    }
    return out;
}

std::vector<std::string> identity_ids(std::optional<IdentityKind> kind = std::nullopt) {
    std::vector<std::string> ids;
    for (const auto& identity : registry())
        if (!kind || identity.kind == *kind) ids.push_back(identity.id);
    return ids;
}

std::vector<std::string> special_ids() {
    std::vector<std::string> ids;
    for (const auto& v : special_values()) ids.push_back(v.id);
    return ids;
}

const Identity& require_identity(const std::string& id, std::optional<IdentityKind> kind) {
    const Identity* identity = lookup(id);
    if (identity == nullptr || (kind && identity->kind != *kind))
        throw UsageError("unknown " + (kind ? std::string(to_string(*kind)) + " " : std::string()) + "identity '" +
                         id + "'; valid ids: " + join(identity_ids(kind), ", "));
    return *identity;
}

SeriesName require_series(const std::string& text) {
    if (text.empty()) throw UsageError("--series is required; accepted forms: " + join(series_name_patterns(), ", "));
    try {
        return parse_series_name(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void print_report_text(std::ostream& out, const VerifyReport& r) {
    out << (r.passed ? "pass  " : "FAIL  ") << r.id << "  " << r.statement << "  ["
        << (r.kind == IdentityKind::series ? "order " : "n <= ") << r.checked_up_to << "]\n";
    if (r.first_failure)
        out << "      first failure at n = " << r.first_failure->n << ": lhs " << r.first_failure->lhs << ", rhs "
            << r.first_failure->rhs << "\n";
}

int emit_reports(std::ostream& out, const Options& o, const std::vector<VerifyReport>& reports) {
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;
    if (json_output(o)) {
        out << nlohmann::json(reports).dump(2) << "\n";
    } else {
        for (const auto& r : reports) print_report_text(out, r);
        out << passed << "/" << reports.size() << " identities passed (registry holds " << registry().size()
            << ")\n";
    }
    return passed == reports.size() ? exit_ok : exit_failed;
}

int do_expand(std::ostream& out, const Options& o) {
    const SeriesName name = require_series(o.series);
    if (o.order < 0) throw UsageError("--order must be nonnegative");
    const Series s = generate(name, o.order);
    if (json_output(o)) {
        nlohmann::json j = s;
        j["series"] = to_string(name);
        out << j.dump(2) << "\n";
    } else {
        out << to_string(name) << " to order " << s.order() << ":\n";
        for (int n = 0; n <= s.order(); ++n) out << (n == 0 ? "" : " ") << s[n];
        out << "\n";
    }
    return exit_ok;
}

int do_verify(std::ostream& out, const Options& o, std::optional<IdentityKind> kind) {
    if (o.all == !o.identities.empty()) throw UsageError("give either --all or at least one --identity");
    std::vector<VerifyReport> reports;
    if (o.all) {
        for (const auto& identity : registry())
            if (!kind || identity.kind == *kind) reports.push_back(verify(identity, o.order, o.nmax));
    } else {
        for (const auto& id : o.identities) reports.push_back(verify(require_identity(id, kind), o.order, o.nmax));
    }
    return emit_reports(out, o, reports);
}

int do_eval(std::ostream& out, const Options& o) {
    if (o.all == !o.values.empty()) throw UsageError("give either --all or at least one --value");
    if (o.precision < 64) throw UsageError("--precision must be at least 64");
    std::vector<const SpecialValue*> targets;
    if (o.all) {
        for (const auto& v : special_values()) targets.push_back(&v);
    } else {
        for (const auto& id : o.values) {
            const SpecialValue* v = find_special(id);
            if (v == nullptr)
                throw UsageError("unknown special value '" + id + "'; valid ids: " + join(special_ids(), ", "));
            targets.push_back(v);
        }
    }
    std::vector<NumericReport> reports;
    for (const auto* v : targets) reports.push_back(check_special(*v, o.precision));
    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.passed ? 1 : 0;

    if (json_output(o)) {
        out << nlohmann::json(reports).dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < reports.size(); ++i) {
            const auto& r = reports[i];
            const auto& v = *targets[i];
            out << (r.passed ? "pass  " : "FAIL  ") << r.id << "  " << to_string(v.series) << "(" << v.point
                << ") = " << v.closed_form << "\n"
                << "      value " << r.series_value.str(30) << "  rel_err " << r.rel_err.str(3) << "  tol "
                << r.tolerance.str(3) << "  [" << r.precision_bits << " bits]\n";
            if (!r.note.empty()) out << "      note: " << r.note << "\n";
        }
        out << passed << "/" << reports.size() << " special values passed\n";
    }
    return passed == reports.size() ? exit_ok : exit_failed;
}

int do_derive(std::ostream& out, const Options& o) {
    if (o.family.empty() == o.series.empty()) throw UsageError("give either --family with --index, or --series phi_...");
    WeightedPoly p(Ring::classical);
    if (!o.family.empty()) {
        Family fam = Family::T;
        try {
            fam = family_from_string(o.family);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        if (o.index < 0) throw UsageError("--index must be nonnegative");
        p = ratio_poly(fam, o.index);
    } else {
        const SeriesName name = require_series(o.series);
        const auto* phi = std::get_if<names::Phi>(&name);
        if (phi == nullptr) throw UsageError("derive --series takes phi_<r>_<s> or phi_tilde_<r>_<s>");
        try {
            p = phi_poly(phi->variant, phi->r, phi->s);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    if (json_output(o)) {
        nlohmann::json j = p;
        j["text"] = p.str(PrettyStyle::ascii);
        out << j.dump(2) << "\n";
    } else {
        out << p.str(o.ascii ? PrettyStyle::ascii : PrettyStyle::unicode) << "\n";
    }
    return exit_ok;
}

int do_list(std::ostream& out, const Options& o) {
    if (json_output(o)) {
        nlohmann::json ids = nlohmann::json::array();
        for (const auto& identity : registry())
            ids.push_back({{"id", identity.id},
                           {"kind", to_string(identity.kind)},
                           {"statement", identity.statement},
                           {"domain", identity.kind == IdentityKind::convolution ? identity.domain.str() : ""}});
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : special_values())
            values.push_back({{"id", v.id},
                              {"series", to_string(v.series)},
                              {"point", v.point},
                              {"closed_form", v.closed_form}});
        out << nlohmann::json{{"identities", ids}, {"special_values", values}, {"series_names", series_name_patterns()}}
                   .dump(2)
            << "\n";
        return exit_ok;
    }
    out << "identities (" << registry().size() << "):\n";
    for (const auto& identity : registry()) {
        out << "  " << identity.id << "  " << identity.statement;
        if (identity.kind == IdentityKind::convolution) out << "  [" << identity.domain.str() << "]";
        out << "\n";
    }
    out << "special values (" << special_values().size() << "):\n";
    for (const auto& v : special_values())
        out << "  " << v.id << "  " << to_string(v.series) << "(" << v.point << ") = " << v.closed_form << "\n";
    out << "series names:\n";
    for (const auto& pattern : series_name_patterns()) out << "  " << pattern << "\n";
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-series engine: expansions, identity checks, special values"};
    app.name("qram");
    app.require_subcommand(1, 1);
    Options o;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* expand = app.add_subcommand("expand", "Print the coefficients of a named series");
    expand->add_option("--series", o.series, "Series name, e.g. T4, eps3, phi_tilde_2_7, hahnQ")->required();
    expand->add_option("--order", o.order, "Truncation order");
    add_format(expand);

    auto* verify_cmd = app.add_subcommand("verify", "Check registered identities");
    verify_cmd->add_option("--identity", o.identities, "Identity id (repeatable)");
    verify_cmd->add_flag("--all", o.all, "Check the whole registry");
    verify_cmd->add_option("--order", o.order, "Order for series identities");
    verify_cmd->add_option("--nmax", o.nmax, "Largest n for convolution identities");
    add_format(verify_cmd);

    auto* convolve = app.add_subcommand("convolve", "Check convolution identities against the enumeration oracle");
    convolve->add_option("--identity", o.identities, "Identity id (repeatable)");
    convolve->add_flag("--all", o.all, "Check every convolution identity");
    convolve->add_option("--nmax", o.nmax, "Largest n");
    add_format(convolve);

    auto* eval = app.add_subcommand("eval", "Compare special values with their closed forms");
    eval->add_option("--value", o.values, "Special value id (repeatable)");
    eval->add_flag("--all", o.all, "Check every special value");
    eval->add_option("--precision", o.precision, "Working precision in bits");
    add_format(eval);

    auto* derive_cmd = app.add_subcommand("derive", "Print a derived polynomial");
    derive_cmd->add_option("--family", o.family, "T, F, psi or eps");
    derive_cmd->add_option("--index", o.index, "Ratio index n");
    derive_cmd->add_option("--series", o.series, "phi_<r>_<s> or phi_tilde_<r>_<s>");
    derive_cmd->add_flag("--ascii", o.ascii, "Plain ASCII generator names");
    add_format(derive_cmd);

    auto* list = app.add_subcommand("list", "List identities, special values and series names");
    add_format(list);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*expand) return do_expand(out, o);
        if (*verify_cmd) return do_verify(out, o, std::nullopt);
        if (*convolve) return do_verify(out, o, IdentityKind::convolution);
        if (*eval) return do_eval(out, o);
        if (*derive_cmd) return do_derive(out, o);
        if (*list) return do_list(out, o);
    } catch (const UsageError& e) {
        err << "qram: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "qram: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "qram: " << e.what() << "\n";
        return exit_failed;
    }
    return exit_usage;
}

}  // namespace qram::cli
