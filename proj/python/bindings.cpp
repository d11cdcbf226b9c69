#include "qzeta/cli.hpp"
#include "qzeta/error.hpp"
#include "qzeta/identities.hpp"
#include "qzeta/report.hpp"
#include "qzeta/series.hpp"
#include "qzeta/symbolic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace qzeta;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python wrapper turns
// them into fractions.Fraction.
py::dict enclosure_dict(const Enclosure& e)
{
    py::dict d;
    d["lo"] = e.lo().str();
    d["hi"] = e.hi().str();
    return d;
}

EvalOptions options(std::int64_t max_terms)
{
    EvalOptions opts;
    opts.max_terms = max_terms;
    return opts;
}

py::dict evaluation_dict(const Evaluation& e)
{
    py::dict d = enclosure_dict(e.value);
    d["truncation"] = e.truncation;
    return d;
}

py::dict report_dict(const VerificationReport& report)
{
    const Record rec = to_record(report);
    py::dict d;
    d["identity"] = rec.identity;
    d["s"] = rec.s;
    d["t"] = rec.t;
    d["q"] = rec.q ? py::object(py::str(rec.q->str())) : py::object(py::none());
    d["status"] = status_name(rec.status);
    d["lhs"] = enclosure_dict(rec.lhs);
    d["rhs"] = enclosure_dict(rec.rhs);
    d["width"] = rec.width.str();
    d["max_truncation"] = rec.max_truncation;
    return d;
}

IdentityInstance builder(const std::string& name, int s, int t)
{
    switch (parse_identity_name(name)) {
    case IdentityKind::EulerClassical: return euler_terms(s, t);
    case IdentityKind::QDecomposition: return q_euler_terms(s, t);
    case IdentityKind::QStuffle: return stuffle_terms(s, t);
    case IdentityKind::CrossCheck: break;
    }
    throw DomainError("cross has no term list of its own");
}

} // namespace

PYBIND11_MODULE(_qzeta, m)
{
    m.doc() = "Rigorous q-multiple zeta values and decomposition identities";
    m.attr("tool_version") = tool_version;

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<TruncationLimitError>(m, "TruncationLimitError", PyExc_RuntimeError);

    m.def("q_integer", [](long k, const std::string& q) { return q_integer(k, Rational::parse(q)).str(); },
          py::arg("k"), py::arg("q"));

    m.def(
        "zeta_q",
        [](const std::string& comp, const std::string& q, const std::string& tol, std::int64_t max_terms) {
            return evaluation_dict(evaluate_zeta_q(Composition::parse(comp), QParam(Rational::parse(q)),
                                                   parse_tolerance(tol), options(max_terms)));
        },
        py::arg("comp"), py::arg("q"), py::arg("tol") = "1e-10", py::arg("max_terms") = 1'000'000);

    m.def(
        "phi_q",
        [](int s, const std::string& q, const std::string& tol, std::int64_t max_terms) {
            return evaluation_dict(
                evaluate_phi_q(s, QParam(Rational::parse(q)), parse_tolerance(tol), options(max_terms)));
        },
        py::arg("s"), py::arg("q"), py::arg("tol") = "1e-10", py::arg("max_terms") = 1'000'000);

    m.def(
        "zeta_classical",
        [](const std::string& comp, const std::string& tol, std::int64_t max_terms) {
            return evaluation_dict(
                evaluate_zeta_classical(Composition::parse(comp), parse_tolerance(tol), options(max_terms)));
        },
        py::arg("comp"), py::arg("tol") = "1e-6", py::arg("max_terms") = 1'000'000);

    m.def(
        "zeta_q_bruteforce",
        [](const std::string& comp, const std::string& q, long N) {
            return zeta_q_bruteforce(Composition::parse(comp), QParam(Rational::parse(q)), N).str();
        },
        py::arg("comp"), py::arg("q"), py::arg("N"));

    m.def(
        "identity_terms",
        [](const std::string& name, int s, int t) {
            py::list out;
            for (const auto& term : builder(name, s, t).terms) {
                out.append(py::make_tuple(term.coeff.get_str(), term.eps_power, term.target.str()));
            }
            return out;
        },
        py::arg("identity"), py::arg("s"), py::arg("t"),
        "Right-hand side as (coefficient, power of 1-q, target) tuples.");

    m.def(
        "verify",
        [](const std::string& name, int s, int t, std::optional<std::string> q, const std::string& tol,
           std::int64_t max_terms) {
            const IdentityKind kind = parse_identity_name(name);
            const Rational tolerance = parse_tolerance(tol);
            std::optional<QParam> qp;
            if (q) {
                qp.emplace(Rational::parse(*q));
            }
            if (kind == IdentityKind::CrossCheck && !qp) {
                throw DomainError("cross requires q");
            }
            VerificationReport report;
            {
                py::gil_scoped_release release;
                report = kind == IdentityKind::CrossCheck
                    ? cross_check(s, t, *qp, tolerance, options(max_terms))
                    : evaluate_identity(builder(name, s, t), qp, tolerance, options(max_terms));
            }
            return report_dict(report);
        },
        py::arg("identity"), py::arg("s"), py::arg("t"), py::arg("q") = py::none(), py::arg("tol") = "1e-20",
        py::arg("max_terms") = 1'000'000);

    m.def("verify_lemma", py::overload_cast<int, int>(&verify_lemma), py::arg("s"), py::arg("t"),
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_operator", &verify_operator, py::arg("s"), py::arg("t"), py::call_guard<py::gil_scoped_release>());
    m.def("verify_q1_reduction", &verify_q1_reduction, py::arg("s"), py::arg("t"),
          py::call_guard<py::gil_scoped_release>());
    m.def("verify_parfrac", &verify_parfrac, py::arg("s"), py::arg("t"), py::call_guard<py::gil_scoped_release>());
    m.def("lemma_text", [](int s, int t) { return lemma_text(build_lemma(s, t)); }, py::arg("s"), py::arg("t"));

    m.def(
        "verify_proof_sums",
        [](int s, int t, const std::string& q, long N) {
            const ProofSumsReport r = verify_proof_sums(s, t, 0, 0, 1, QParam(Rational::parse(q)), N);
            py::dict d;
            d["S"] = py::make_tuple(r.S.target.str(), enclosure_dict(r.S.direct), r.S.consistent);
            d["T"] = py::make_tuple(r.T.target.str(), enclosure_dict(r.T.direct), r.T.consistent);
            d["consistent"] = r.consistent();
            return d;
        },
        py::arg("s"), py::arg("t"), py::arg("q"), py::arg("N"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
