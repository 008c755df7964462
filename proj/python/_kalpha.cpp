#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kalpha/natext.hpp"

namespace py = pybind11;
using namespace kalpha;

namespace {

FareyWord word_arg(const std::string& s) { return farey_word(BinaryWord(s)); }

py::dict qumterval_dict(const Qumterval& J) {
    py::dict d;
    d["word"] = J.word.str();
    d["S"] = cf_str(J.S);
    d["alpha_minus"] = J.alpha_minus.str();
    d["alpha_plus"] = J.alpha_plus.str();
    d["alpha_minus_float"] = J.alpha_minus.to_double();
    d["alpha_plus_float"] = J.alpha_plus.to_double();
    d["pseudocenter"] = J.pseudocenter.str();
    d["m0"] = J.m0;
    d["m1"] = J.m1;
    return d;
}

py::dict sample_dict(const EntropySample& s) {
    py::dict d;
    d["alpha"] = s.alpha.str();
    d["word"] = s.word.str();
    d["m0"] = s.m0;
    d["m1"] = s.m1;
    d["A"] = s.A.mid_double();
    d["h"] = s.h.mid_double();
    d["h_str"] = s.h.mid_str(30);
    d["err_bound"] = s.err_bound;
    return d;
}

}  // namespace

PYBIND11_MODULE(_kalpha, m) {
    m.doc() = "Exact K_alpha continued fractions: Farey words, qumtervals, matching and entropy";

    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ValueError);

    m.def("farey_list", [](int n) {
        std::vector<std::string> out;
        for (const auto& w : farey_list(n)) out.push_back(w.str());
        return out;
    }, py::arg("n"));
    m.def("word_from_rational", [](const std::string& r) { return word_from_rational(Rational::parse(r)).str(); });
    m.def("runlength", [](const std::string& w) {
        CFString s = runlength(BinaryWord(w));
        return std::vector<long>(s.begin(), s.end());
    });
    m.def("qumterval", [](const std::string& w) { return qumterval_dict(qumterval_of(word_arg(w))); });
    m.def("locate", [](const std::string& alpha) { return qumterval_dict(locate_qumterval(Rational::parse(alpha)).J); });
    m.def("bin_interval", [](const std::string& w) {
        BinInterval I = bin_interval(word_arg(w));
        return std::pair{I.a_minus.str(), I.a_plus.str()};
    });
    m.def("eb_member", [](const std::string& x) { return eb_membership(Rational::parse(x)); });
    m.def("phi", [](const std::string& x) { return phi_map(Rational::parse(x)).str(); });
    m.def("minkowski", [](const std::string& x) { return minkowski_q(QuadSurd::parse(x)).str(); });
    m.def("cardioid_angles", [](const std::string& r) {
        CardioidAngles c = cardioid_angles(Rational::parse(r));
        return std::pair{c.theta_minus.str(), c.theta_plus.str()};
    });
    m.def("matching_identity", [](const std::string& w) { return matching_matrices(word_arg(w)).identity_holds; });
    m.def("verify_matching", [](const std::string& w, const std::vector<std::string>& alphas) {
        std::vector<Rational> as;
        for (const auto& a : alphas) as.push_back(Rational::parse(a));
        return verify_matching(word_arg(w), as).all_exact;
    });
    m.def("orbit", [](const std::string& alpha, const std::string& x, std::size_t steps) {
        auto o = orbit(Rational::parse(alpha), Rational::parse(x), steps);
        std::vector<std::string> pts;
        for (const auto& p : o.points) pts.push_back(p.str());
        return pts;
    }, py::arg("alpha"), py::arg("x"), py::arg("steps"));
    m.def("entropy", [](const std::string& alpha) { return sample_dict(entropy_at(Rational::parse(alpha))); });
    m.def("entropy_curve", [](const std::string& from, const std::string& to, int samples, int workers) {
        py::list out;
        std::vector<EntropySample> rows;
        {
            py::gil_scoped_release release;
            rows = entropy_curve(Rational::parse(from), Rational::parse(to), samples, workers);
        }
        for (const auto& s : rows) out.append(sample_dict(s));
        return out;
    }, py::arg("from_"), py::arg("to"), py::arg("samples"), py::arg("workers") = 0);
    m.def("zeta_partial", [](double s, int depth) { return zeta_partial(s, depth); });
    m.def("lyapunov", &lyapunov_estimate, py::arg("alpha"), py::arg("steps"), py::arg("seed") = 1);
}
