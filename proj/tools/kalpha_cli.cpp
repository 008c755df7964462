// Command-line front end.  Exit codes: 0 success, 2 invalid input or usage,
// 1 internal failure (a violated invariant or a failed selftest).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kalpha/natext.hpp"
#include "selftest.hpp"

using namespace kalpha;

namespace {

struct Output {
    std::string path;
    void emit(const std::string& text) const {
        if (path.empty()) {
            std::cout << text;
            if (!text.empty() && text.back() != '\n') std::cout << "\n";
            return;
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot open " + path + " for writing");
        f << text;
        if (!text.empty() && text.back() != '\n') f << "\n";
    }
};

int decimals = 0;

std::string show(const Rational& v) { return decimals > 0 ? v.str() + " ~ " + to_decimal(v, decimals) : v.str(); }
std::string show(const QuadSurd& v) { return decimals > 0 ? v.str() + " ~ " + to_decimal(v, decimals) : v.str(); }

FareyWord word_arg(const std::string& s) { return farey_word(BinaryWord(s)); }

std::string join_words(const std::vector<FareyWord>& ws) {
    std::string out;
    for (const auto& w : ws) out += (out.empty() ? "" : " ") + w.str();
    return out;
}

std::string certificate_json(const MatchingReport& rep) {
    nlohmann::ordered_json j;
    const auto& c = rep.certificate;
    j["word"] = c.word.str();
    j["M"] = c.M.str();
    j["M_prime"] = c.M_prime.str();
    j["TM"] = (Mobius::T() * c.M).str();
    j["M_prime_STinvS"] = (c.M_prime * Mobius::S() * Mobius::T(-1) * Mobius::S()).str();
    j["identity_holds"] = c.identity_holds;
    j["m0"] = c.m0;
    j["m1"] = c.m1;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& a : rep.checks) {
        nlohmann::ordered_json r;
        r["alpha"] = a.alpha.str();
        r["inside"] = a.inside;
        r["matrices_equal"] = a.matrices_equal;
        r["orbits_match"] = a.orbits_match;
        r["lower_end"] = a.lower_end.str();
        r["upper_end"] = a.upper_end.str();
        arr.push_back(r);
    }
    j["alphas_checked"] = arr;
    j["all_exact"] = rep.all_exact;
    return j.dump(2);
}

template <class T>
std::string orbit_csv(const OrbitRecord<T>& o) {
    std::ostringstream os;
    os << "step,point_exact,point_decimal50,digit\n";
    for (std::size_t k = 0; k < o.points.size(); ++k) {
        os << k << "," << o.points[k].str() << "," << to_decimal(o.points[k], 50) << ",";
        if (k < o.digits.size()) os << o.digits[k].get_str();
        os << "\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the K_alpha family: Farey words, qumtervals, matching, entropy"};
    app.require_subcommand(1);
    Output out;
    int precision = 0;
    app.add_option("--out", out.path, "Write data output to this file instead of stdout");
    app.add_option("--decimals", decimals, "Append decimal approximations with this many digits")->check(CLI::Range(0, 1000));
    app.add_option("--precision", precision, "Working precision in bits (default $KALPHA_PRECISION_BITS or 128)")
        ->check(CLI::Range(64, 1 << 20));

    bool selftest = false;
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_flag("--selftest", selftest, "Run this module's invariant suite at small scale");
        sub->fallthrough();
        return sub;
    };

    // farey
    CLI::App* farey = add("farey", "Farey words and lists");
    int level = 2;
    std::string rational, word;
    CLI::App* farey_list_cmd = farey->add_subcommand("list", "Print the Farey list F_n");
    farey_list_cmd->add_option("--level", level)->check(CLI::Range(0, kFareyListCap));
    CLI::App* farey_word_cmd = farey->add_subcommand("word", "Print W_r and its data");
    farey_word_cmd->add_option("--rational", rational)->required();
    CLI::App* farey_factor_cmd = farey->add_subcommand("factor", "Standard factorization and cyclic extremes");
    farey_factor_cmd->add_option("--word", word)->required();

    // qumterval
    CLI::App* qum = add("qumterval", "Qumterval J_w of a word, the one containing alpha, or an atlas");
    std::string alpha_s, format = "text";
    int atlas = 0;
    qum->add_option("--word", word);
    qum->add_option("--alpha", alpha_s);
    qum->add_option("--atlas", atlas, "All words of length 2..n")->check(CLI::Range(2, 20));
    qum->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

    // ebif
    CLI::App* ebif = add("ebif", "Binary bifurcation set: membership, I_w, phi, Minkowski Q");
    std::string x_s;
    ebif->add_option("--word", word, "Print I_w");
    ebif->add_option("--member", x_s, "Decide x in E_B");
    std::string phi_s, q_s;
    ebif->add_option("--phi", phi_s, "Evaluate phi(x)");
    ebif->add_option("--minkowski", q_s, "Evaluate Q(x)");

    // cardioid
    CLI::App* card = add("cardioid", "External angles of the rays landing on the main cardioid");
    card->add_option("--rational", rational);

    // orbit
    CLI::App* orb = add("orbit", "Exact orbit of x under K_alpha");
    long steps = 10;
    orb->add_option("--alpha", alpha_s);
    orb->add_option("--x", x_s, "Start point (rational or surd); default alpha");
    orb->add_option("--steps", steps)->check(CLI::Range(0L, 1000000L));

    // match
    CLI::App* match = add("match", "Matching matrices and exact matching checks");
    CLI::App* match_verify = match->add_subcommand("verify", "Check matching for a word");
    std::vector<std::string> alphas;
    int per_side = 2;
    match_verify->add_option("--word", word)->required();
    match_verify->add_option("--alpha", alphas, "Parameters to test (default: pseudocenter plus samples)");
    match_verify->add_option("--per-side", per_side)->check(CLI::Range(0, 50));

    // attractor
    CLI::App* attr = add("attractor", "Natural-extension attractor");
    bool as_json = false;
    attr->add_option("--alpha", alpha_s);
    attr->add_option("--word", word, "Qumterval word (default: located)");
    attr->add_flag("--json", as_json);

    // entropy
    CLI::App* ent = add("entropy", "Entropy h(alpha)");
    CLI::App* ent_point = ent->add_subcommand("point", "h at one parameter");
    ent_point->add_option("--alpha", alpha_s)->required();
    CLI::App* ent_curve = ent->add_subcommand("curve", "h on a dyadic grid");
    std::string from_s = "1/20", to_s = "19/20";
    int samples = 200, workers = 0;
    ent_curve->add_option("--from", from_s);
    ent_curve->add_option("--to", to_s);
    ent_curve->add_option("--samples", samples)->check(CLI::Range(2, 1000000));
    ent_curve->add_option("--workers", workers)->check(CLI::Range(0, 1024));
    std::string curve_format = "csv";
    ent_curve->add_option("--format", curve_format)->check(CLI::IsMember({"csv", "json"}));

    // probe
    CLI::App* probe = add("probe", "Asymptotic, slope and Lyapunov probes");
    CLI::App* probe_asym = probe->add_subcommand("asymptotic", "h near 0 along RL = (N,1)");
    std::vector<long> Ns{100, 1000, 10000};
    probe_asym->add_option("--N", Ns)->check(CLI::Range(2L, 10000000L));
    CLI::App* probe_slope = probe->add_subcommand("slope", "Max qumterval slope near an endpoint");
    std::string side = "plus";
    int halvings = 8;
    probe_slope->add_option("--word", word)->required();
    probe_slope->add_option("--side", side)->check(CLI::IsMember({"plus", "minus"}));
    probe_slope->add_option("--halvings", halvings)->check(CLI::Range(0, 40));
    CLI::App* probe_lyap = probe->add_subcommand("lyapunov", "Monte Carlo Rohlin estimate vs exact h");
    std::size_t lsteps = 1000000;
    std::uint64_t seed = 1;
    probe_lyap->add_option("--alpha", alpha_s)->required();
    probe_lyap->add_option("--steps", lsteps);
    probe_lyap->add_option("--seed", seed);

    for (CLI::App* sub : app.get_subcommands({}))
        for (CLI::App* leaf : sub->get_subcommands({})) leaf->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    EntropyOptions eopt;
    eopt.precision = precision;
    CLI::App* cmd = app.get_subcommands().front();
    try {
        if (selftest) {
            std::ostringstream os;
            bool ok = selftest::for_command(cmd->get_name(), os);
            out.emit(os.str());
            return ok ? 0 : 1;
        }
        auto need = [](const std::string& v, const char* flag) {
            if (v.empty()) throw std::invalid_argument(std::string("missing ") + flag);
            return v;
        };

        if (cmd == farey) {
            if (farey_list_cmd->parsed()) {
                out.emit(join_words(farey_list(level)));
            } else if (farey_word_cmd->parsed()) {
                FareyWord w = word_from_rational(Rational::parse(rational));
                std::ostringstream os;
                os << "word " << w.str() << "\nrho " << w.rho.str() << "\nRL " << cf_str(runlength(w.word)) << "\n";
                if (!w.degenerate()) os << "mirror " << mirror(w).str() << "\n";
                out.emit(os.str());
            } else if (farey_factor_cmd->parsed()) {
                FareyWord w = word_arg(word);
                auto [a, b] = standard_factorization(w);
                CyclicExtremes c = cyclic_extremes(w);
                std::ostringstream os;
                os << "factorization " << a.str() << " " << b.str() << "\ncyclic_min " << c.min.str() << "\ncyclic_second "
                   << c.second_min.str() << "\ncyclic_max " << c.max.str() << "\n";
                out.emit(os.str());
            } else {
                throw std::invalid_argument("farey: choose list, word or factor");
            }
        } else if (cmd == qum) {
            if (atlas) {
                out.emit(format == "csv" ? atlas_csv(atlas) : atlas_json(atlas));
            } else {
                Qumterval J;
                std::string where;
                if (!word.empty()) {
                    J = qumterval_of(word_arg(word));
                } else {
                    Located L = locate_qumterval(Rational::parse(need(alpha_s, "--word, --alpha or --atlas")));
                    J = L.J;
                    where = "interior";
                }
                if (format == "json") {
                    nlohmann::ordered_json j;
                    j["word"] = J.word.str();
                    j["S"] = cf_str(J.S);
                    j["alpha_minus"] = J.alpha_minus.str();
                    j["alpha_plus"] = J.alpha_plus.str();
                    j["pseudocenter"] = J.pseudocenter.str();
                    j["m0"] = J.m0;
                    j["m1"] = J.m1;
                    if (!where.empty()) j["location"] = where;
                    out.emit(j.dump(2));
                } else {
                    std::ostringstream os;
                    os << "word " << J.word.str() << "\nS " << cf_str(J.S) << "\nalpha_minus " << show(J.alpha_minus)
                       << "\nalpha_plus " << show(J.alpha_plus) << "\npseudocenter " << show(J.pseudocenter) << "\nm0 "
                       << J.m0 << "\nm1 " << J.m1 << "\n";
                    if (!where.empty()) os << "location " << where << "\n";
                    out.emit(os.str());
                }
            }
        } else if (cmd == ebif) {
            std::ostringstream os;
            if (!word.empty()) {
                BinInterval I = bin_interval(word_arg(word));
                os << "a_minus " << show(I.a_minus) << "\na_plus " << show(I.a_plus) << "\nlength " << show(I.length()) << "\n";
            }
            if (!x_s.empty()) os << "member " << (eb_membership(Rational::parse(x_s)) ? "true" : "false") << "\n";
            if (!phi_s.empty()) os << "phi " << show(phi_map(Rational::parse(phi_s))) << "\n";
            if (!q_s.empty()) os << "Q " << show(minkowski_q(QuadSurd::parse(q_s))) << "\n";
            if (os.str().empty()) throw std::invalid_argument("ebif: give --word, --member, --phi or --minkowski");
            out.emit(os.str());
        } else if (cmd == card) {
            CardioidAngles c = cardioid_angles(Rational::parse(need(rational, "--rational")));
            out.emit("theta_minus " + show(c.theta_minus) + "\ntheta_plus " + show(c.theta_plus) + "\n");
        } else if (cmd == orb) {
            QuadSurd a = QuadSurd::parse(need(alpha_s, "--alpha"));
            QuadSurd x = x_s.empty() ? a : QuadSurd::parse(x_s);
            if (a.is_rational() && x.is_rational())
                out.emit(orbit_csv(orbit(a.rational_value(), x.rational_value(), static_cast<std::size_t>(steps))));
            else
                out.emit(orbit_csv(orbit(a, x, static_cast<std::size_t>(steps))));
        } else if (cmd == match) {
            if (!match_verify->parsed()) throw std::invalid_argument("match: choose verify");
            FareyWord w = word_arg(word);
            std::vector<Rational> as;
            for (const auto& s : alphas) as.push_back(Rational::parse(s));
            if (as.empty()) as = sample_alphas(qumterval_of(w), per_side);
            MatchingReport rep = verify_matching(w, as);
            out.emit(certificate_json(rep));
            if (!rep.certificate.identity_holds) return 1;
            for (const auto& c : rep.checks)
                if (!c.inside) return 2;
            return rep.all_exact ? 0 : 1;
        } else if (cmd == attr) {
            Rational a = Rational::parse(need(alpha_s, "--alpha"));
            FareyWord w = word.empty() ? locate_qumterval(a).J.word : word_arg(word);
            Attractor at = build_attractor(a, w);
            if (as_json) {
                out.emit(attractor_json(at));
            } else {
                std::ostringstream os;
                os << "word " << w.str() << "\ncorner_x " << show(at.corner_x) << "\ncorner_y " << show(at.corner_y)
                   << "\nrects " << at.rects.size() << "\n";
                for (const auto& r : at.rects)
                    os << "[" << r.x_lo.str() << ", " << r.x_hi.str() << "] x [" << r.y_lo.str() << ", " << r.y_hi.str()
                       << "]\n";
                Ball A = attractor_area(at, precision ? precision : default_precision());
                os << "A " << A.mid_str(30) << "\n";
                out.emit(os.str());
            }
        } else if (cmd == ent) {
            if (ent_point->parsed()) {
                EntropySample s = entropy_at(Rational::parse(alpha_s), eopt);
                out.emit(format == "json" ? entropy_json({s}) : entropy_csv({s}));
            } else if (ent_curve->parsed()) {
                auto rows = entropy_curve(Rational::parse(from_s), Rational::parse(to_s), samples, workers, eopt);
                out.emit(curve_format == "json" ? entropy_json(rows) : entropy_csv(rows));
            } else {
                throw std::invalid_argument("entropy: choose point or curve");
            }
        } else if (cmd == probe) {
            std::ostringstream os;
            if (probe_asym->parsed()) {
                os << "N,alpha,h,A,prediction,ratio,lower_bound_A\n";
                os.precision(12);
                for (const auto& r : asymptotic_probe(Ns))
                    os << r.N << "," << r.alpha.str() << "," << r.h << "," << r.A << "," << r.prediction << "," << r.ratio
                       << "," << r.lower_bound << "\n";
            } else if (probe_slope->parsed()) {
                Qumterval J = qumterval_of(word_arg(word));
                SlopeOptions o;
                o.halvings = halvings;
                os << "delta,candidates,max_slope,argmax_word\n";
                os.precision(12);
                for (const auto& r : slope_growth_probe(side == "plus" ? J.alpha_plus : J.alpha_minus, o))
                    os << r.delta.str() << "," << r.candidates << "," << r.max_slope << "," << r.argmax_word << "\n";
            } else if (probe_lyap->parsed()) {
                Rational a = Rational::parse(alpha_s);
                EntropySample s = entropy_at(a, eopt);
                double est = lyapunov_estimate(a.to_double(), lsteps, seed);
                os.precision(12);
                os << "alpha " << a.str() << "\nh " << s.h.mid_str(20) << "\nlyapunov " << est << "\nrelative_error "
                   << std::fabs(est - s.h.mid_double()) / s.h.mid_double() << "\n";
            } else {
                throw std::invalid_argument("probe: choose asymptotic, slope or lyapunov");
            }
            out.emit(os.str());
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
