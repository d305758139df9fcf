#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qram/cli.hpp"
#include "qram/divisor.hpp"
#include "qram/generators.hpp"
#include "qram/identities.hpp"
#include "qram/json.hpp"
#include "qram/numeric.hpp"
#include "qram/symbolic.hpp"

namespace py = pybind11;

namespace {

py::object fraction(const qram::Rational& r) {
    // Leaked on purpose: destroying it after interpreter shutdown aborts.
    static auto* Fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
    const auto as_int = [](const mpz_class& z) {
        return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
    };
    return (*Fraction)(as_int(r.numerator()), as_int(r.denominator()));
}

py::object to_python(const nlohmann::json& j) {
    static auto* loads = new py::object(py::module_::import("json").attr("loads"));
    return (*loads)(j.dump());
}

py::list coefficients(const qram::Series& s) {
    py::list out;
    for (const auto& c : s.coeffs()) out.append(fraction(c));
    return out;
}

qram::PrettyStyle style(bool ascii) { return ascii ? qram::PrettyStyle::ascii : qram::PrettyStyle::unicode; }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-series engine.";

    m.def("expand", [](const std::string& name, int order) {
        return coefficients(qram::generate(qram::parse_series_name(name), order));
    }, py::arg("name"), py::arg("order") = 200, "Coefficients q^0..q^order of a named series as Fractions.");

    m.def("ratio_poly", [](const std::string& family, int n, bool ascii) {
        return qram::ratio_poly(qram::family_from_string(family), n).str(style(ascii));
    }, py::arg("family"), py::arg("n"), py::arg("ascii") = false);

    m.def("phi_poly", [](const std::string& name, bool ascii) {
        const auto parsed = qram::parse_series_name(name);
        const auto* phi = std::get_if<qram::names::Phi>(&parsed);
        if (phi == nullptr) throw std::invalid_argument("expected phi_<r>_<s> or phi_tilde_<r>_<s>");
        return qram::phi_poly(phi->variant, phi->r, phi->s).str(style(ascii));
    }, py::arg("name"), py::arg("ascii") = false);

    m.def("divisor_sum", [](const std::string& kind, unsigned s, long n) {
        return fraction(qram::divisor_sum(qram::divisor_kind_from_string(kind), s, n));
    }, py::arg("kind"), py::arg("s"), py::arg("n"));

    m.def("convolution", [](const std::vector<std::pair<std::string, unsigned>>& terms, long n) {
        std::vector<qram::ConvolutionTerm> spec;
        for (const auto& [kind, s] : terms) spec.push_back({qram::divisor_kind_from_string(kind), s});
        return fraction(qram::convolution(spec, n));
    }, py::arg("terms"), py::arg("n"), "Sum over i_1 + ... + i_k = n of the product of divisor sums.");

    m.def("identities", [] {
        std::vector<std::string> ids;
        for (const auto& identity : qram::registry()) ids.push_back(identity.id);
        return ids;
    });

    m.def("verify", [](const std::string& id, int order, long nmax) {
        const qram::Identity* identity = qram::lookup(id);
        if (identity == nullptr) throw std::invalid_argument("unknown identity '" + id + "'");
        return to_python(qram::verify(*identity, order, nmax));
    }, py::arg("id"), py::arg("order") = 200, py::arg("nmax") = 100);

    m.def("verify_all", [](int order, long nmax) { return to_python(qram::verify_all(order, nmax)); },
          py::arg("order") = 200, py::arg("nmax") = 100);

    m.def("special_values", [] {
        std::vector<std::string> ids;
        for (const auto& v : qram::special_values()) ids.push_back(v.id);
        return ids;
    });

    m.def("check_special", [](const std::string& id, unsigned precision) {
        return to_python(qram::check_special(id, precision));
    }, py::arg("id"), py::arg("precision") = 256);

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"qram"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        const int code = qram::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Runs the command line in-process; returns (exit_code, stdout, stderr).");
}
