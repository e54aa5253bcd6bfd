#include "phaselock/cli.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "phaselock/arith.hpp"
#include "phaselock/confrac.hpp"
#include "phaselock/dynamics.hpp"
#include "phaselock/hyperbolic.hpp"
#include "phaselock/output.hpp"
#include "phaselock/quantum.hpp"

namespace phaselock::cli {

namespace {

using output::ColumnarOutput;
using output::Format;

struct GlobalOpts {
    std::string out_path;
    std::string format = "csv";
    unsigned long long seed = kDefaultSeed;
    std::uint32_t table_limit = 1'000'000;

    Format fmt() const { return format == "json" ? Format::json : Format::csv; }
};

void emit(const GlobalOpts& g, const std::string& command,
          std::map<std::string, std::string> params, ColumnarOutput table) {
    table.metadata["command"] = command;
    table.metadata["version"] = kVersion;
    std::ostringstream cfg;
    for (const auto& [k, v] : params) cfg << k << "=" << v << " ";
    table.metadata["config"] = cfg.str();
    char hex[32];
    std::snprintf(hex, sizeof(hex), "%016llx",
                  static_cast<unsigned long long>(output::config_hash(command, params)));
    table.metadata["config_hash"] = hex;
    output::write_output(table, g.fmt(), g.out_path);
}

std::string num(double v) { return output::format_double(v); }

double mangoldt_reference(std::uint32_t q, const arith::ArithTable& table) {
    if (q < 2) return 0.0;
    const double lam = arith::mangoldt(q, table);
    return lam == 0.0 ? 0.0 : std::numbers::pi * lam / std::log(static_cast<double>(q));
}

// --------------------------------------------------------------------------
// subcommand handlers
// --------------------------------------------------------------------------

struct ArithOpts {
    std::string fn;
    std::uint32_t n = 1;
    std::uint32_t q = 1;
    std::uint32_t t = 1000;
    std::uint32_t residue = 0;
    std::uint32_t modulus = 1;
    std::uint32_t expansion_q = 50;
    std::int64_t n_signed = 0;
    bool n_signed_set = false;
};

void run_arith(const GlobalOpts& g, const ArithOpts& o) {
    const arith::ArithTable table(g.table_limit);
    ColumnarOutput out;
    std::map<std::string, std::string> params{{"fn", o.fn}};

    if (o.fn == "totient" || o.fn == "moebius" || o.fn == "mangoldt" || o.fn == "b") {
        params["n"] = std::to_string(o.n);
        double v = 0.0;
        if (o.fn == "totient") v = table.totient(o.n);
        else if (o.fn == "moebius") v = table.moebius(o.n);
        else if (o.fn == "mangoldt") v = arith::mangoldt(o.n, table);
        else v = arith::mangoldt_modified(o.n, table);
        out.header = {"n", "value"};
        out.add_row({static_cast<double>(o.n), v});
    } else if (o.fn == "mangoldt-general") {
        params["n"] = std::to_string(o.n);
        params["residue"] = std::to_string(o.residue);
        params["modulus"] = std::to_string(o.modulus);
        const arith::MangoldtSpec spec(o.residue, o.modulus);
        out.header = {"n", "residue", "modulus", "value"};
        out.add_row({static_cast<double>(o.n), static_cast<double>(spec.residue),
                     static_cast<double>(spec.modulus), arith::mangoldt_general(o.n, spec, table)});
    } else if (o.fn == "ramanujan") {
        const std::int64_t n = o.n_signed_set ? o.n_signed : static_cast<std::int64_t>(o.n);
        params["q"] = std::to_string(o.q);
        params["n"] = std::to_string(n);
        out.header = {"q", "n", "value"};
        out.add_row({static_cast<double>(o.q), static_cast<double>(n),
                     static_cast<double>(arith::ramanujan_sum(o.q, n, table))});
    } else if (o.fn == "mertens") {
        params["t"] = std::to_string(o.t);
        out.header = {"t", "value"};
        out.add_row({static_cast<double>(o.t), static_cast<double>(arith::mertens(o.t, table))});
    } else if (o.fn == "summatory-mangoldt" || o.fn == "summatory-b" ||
               o.fn == "summatory-moebius") {
        params["t"] = std::to_string(o.t);
        arith::SummatoryKind kind = arith::SummatoryKind::moebius;
        arith::MangoldtSpec spec;
        if (o.fn == "summatory-mangoldt") {
            kind = arith::SummatoryKind::mangoldt_general;
            spec = arith::MangoldtSpec(o.residue, o.modulus);
            params["residue"] = std::to_string(spec.residue);
            params["modulus"] = std::to_string(spec.modulus);
        } else if (o.fn == "summatory-b") {
            kind = arith::SummatoryKind::mangoldt_modified;
        }
        const auto r = arith::summatory_average(kind, o.t, table, spec);
        out.header = {"t", "average", "epsilon"};
        out.add_row({static_cast<double>(r.t), r.average, r.epsilon});
    } else if (o.fn == "ramanujan-expansion") {
        params["n"] = std::to_string(o.n);
        params["Q"] = std::to_string(o.expansion_q);
        const auto r = arith::ramanujan_expansion_partial(o.n, o.expansion_q, table);
        out.header = {"q", "partial_sum", "cesaro"};
        for (std::size_t i = 0; i < r.partial_sums.size(); ++i)
            out.add_row({static_cast<double>(i + 1), r.partial_sums[i], r.cesaro[i]});
    } else {
        throw parameter_error("arith: unknown --fn " + o.fn);
    }
    emit(g, "arith", std::move(params), std::move(out));
}

struct BasinOpts {
    double f0 = 1e7;
    double fc = 3e5;
    std::int64_t p = 1;
    std::int64_t q = 1;
    std::int64_t farey = 0;  // when > 0: all fractions of F_farey
    std::int64_t a_cut_override = 0;
};

void run_basins(const GlobalOpts& g, const BasinOpts& o) {
    ColumnarOutput out;
    out.header = {"p", "q", "a_cut", "nu1", "nu2", "width", "nu1_num", "nu1_den", "nu2_num",
                  "nu2_den"};
    std::vector<confrac::Convergent> fracs;
    if (o.farey > 0)
        fracs = confrac::farey_sequence(o.farey);
    else
        fracs.push_back({o.p, o.q});
    for (const auto& f : fracs) {
        const std::int64_t a_cut =
            o.a_cut_override > 0 ? o.a_cut_override : confrac::filter_quotient(o.f0, o.fc, f.q);
        if (a_cut < 1) continue;  // filtered out entirely
        const auto [lo, hi] = confrac::basin_edges(f, a_cut);
        out.add_row({static_cast<double>(f.p), static_cast<double>(f.q),
                     static_cast<double>(a_cut), lo.value(), hi.value(),
                     hi.value() - lo.value(), static_cast<double>(lo.num),
                     static_cast<double>(lo.den), static_cast<double>(hi.num),
                     static_cast<double>(hi.den)});
    }
    std::map<std::string, std::string> params{{"f0", num(o.f0)},
                                              {"fc", num(o.fc)},
                                              {"farey", std::to_string(o.farey)},
                                              {"p", std::to_string(o.p)},
                                              {"q", std::to_string(o.q)},
                                              {"a_cut", std::to_string(o.a_cut_override)}};
    emit(g, "basins", std::move(params), std::move(out));
}

struct StaircaseOpts {
    double c = 0.9;
    double omega_min = -0.16;
    double omega_max = 0.55;
    double omega_step = 1e-3;
    std::int64_t n_transient = 4096;
    std::int64_t n_iter = 32768;
    double plateau_tol = 1e-5;
    std::int64_t max_den = 16;
    std::string plateaus_out;
};

void run_staircase(const GlobalOpts& g, const StaircaseOpts& o) {
    if (o.c >= 1.0)
        std::cerr << "staircase: c >= 1, phase-locking zones may overlap\n";
    const auto grid = dynamics::linear_grid(o.omega_min, o.omega_max, o.omega_step);
    dynamics::StaircaseOptions sopt;
    sopt.n_transient = o.n_transient;
    sopt.n_iter = o.n_iter;
    sopt.plateau_tol = o.plateau_tol;
    sopt.max_denominator = o.max_den;
    const auto res = dynamics::staircase_scan(o.c, grid, sopt);

    ColumnarOutput out;
    out.header = {"omega", "nu"};
    for (std::size_t i = 0; i < res.omega.size(); ++i) out.add_row({res.omega[i], res.nu[i]});
    out.metadata["plateau_count"] = std::to_string(res.plateaus.size());
    out.metadata["overlap_regime"] = res.overlap_regime ? "1" : "0";

    std::map<std::string, std::string> params{
        {"c", num(o.c)},           {"omega_min", num(o.omega_min)},
        {"omega_max", num(o.omega_max)}, {"omega_step", num(o.omega_step)},
        {"n_transient", std::to_string(o.n_transient)}, {"n_iter", std::to_string(o.n_iter)},
        {"plateau_tol", num(o.plateau_tol)}, {"max_den", std::to_string(o.max_den)}};

    if (!o.plateaus_out.empty()) {
        ColumnarOutput pl;
        pl.header = {"p", "q", "omega_lo", "omega_hi", "width"};
        for (const auto& x : res.plateaus)
            pl.add_row({static_cast<double>(x.p), static_cast<double>(x.q), x.omega_lo, x.omega_hi,
                        x.width()});
        pl.metadata["command"] = "staircase-plateaus";
        pl.metadata["version"] = kVersion;
        output::write_output(pl, g.fmt(), o.plateaus_out);
    }
    emit(g, "staircase", std::move(params), std::move(out));
}

struct AdlerOpts {
    double gain = 1.0;
    double detuning = 0.0;
    double phi0 = 0.1;
    double t_end = 60.0;
    double tol = 1e-8;
    double omega0 = 0.0;
    std::int64_t target_p = 1;
    std::int64_t target_q = 1;
    double lowpass_tau = 0.0;
    std::vector<std::string> terms;
};

void run_adler(const GlobalOpts& g, const AdlerOpts& o) {
    ColumnarOutput out;
    out.header = {"t", "phi"};
    std::map<std::string, std::string> params{{"gain", num(o.gain)},
                                              {"detuning", num(o.detuning)},
                                              {"phi0", num(o.phi0)},
                                              {"t_end", num(o.t_end)},
                                              {"tol", num(o.tol)}};
    dynamics::Trajectory traj;
    if (o.terms.empty()) {
        traj = dynamics::adler_integrate({o.gain, o.detuning, o.phi0}, o.t_end, o.tol);
        out.metadata["locked"] = traj.locked ? "1" : "0";
        if (traj.locked) out.metadata["asymptotic_phase"] = num(traj.asymptotic_phase);
    } else {
        std::vector<dynamics::HarmonicTerm> terms;
        for (const auto& spec : o.terms) {
            dynamics::HarmonicTerm h;
            char comma;
            std::istringstream is(spec);
            if (!(is >> h.r >> comma >> h.s >> comma >> h.gain >> comma >> h.phase0))
                throw parameter_error("adler: --term expects r,s,gain,phase0");
            terms.push_back(h);
        }
        params["omega0"] = num(o.omega0);
        params["target"] = std::to_string(o.target_p) + "/" + std::to_string(o.target_q);
        params["terms"] = std::to_string(terms.size());
        params["lowpass_tau"] = num(o.lowpass_tau);
        traj = dynamics::harmonic_adler_integrate(o.omega0, {o.target_p, o.target_q}, terms,
                                                  o.detuning, o.phi0, o.t_end, o.tol,
                                                  o.lowpass_tau);
    }
    out.metadata["mean_rate"] = num(traj.mean_rate);
    for (std::size_t i = 0; i < traj.t.size(); ++i) out.add_row({traj.t[i], traj.phi[i]});
    emit(g, "adler", std::move(params), std::move(out));
}

struct PllOpts {
    double gain = 4.0;
    double detuning = 5.0;
    double jitter = 1e-3;
    std::size_t n = 10000;
    double gate = 1.0;
    std::string allan_out;
};

void run_pll(const GlobalOpts& g, const PllOpts& o) {
    const auto res = dynamics::pll_noise_experiment({o.gain, o.detuning, 0.0}, o.jitter, g.seed,
                                                    o.n, o.gate);
    ColumnarOutput out;
    out.header = {"index", "count"};
    for (std::size_t i = 0; i < res.counts.samples.size(); ++i)
        out.add_row({static_cast<double>(i), res.counts.samples[i]});
    out.metadata["sigma_input"] = num(res.sigma_input);
    out.metadata["sigma_output"] = num(res.sigma_output);
    out.metadata["sigma_ratio"] = num(res.sigma_ratio);
    out.metadata["predicted_ratio"] = num(res.predicted_ratio);

    if (!o.allan_out.empty()) {
        ColumnarOutput al;
        al.header = {"tau", "adev"};
        for (const auto& p : res.allan) al.add_row({p.tau, p.sigma});
        al.metadata["command"] = "pll-noise-allan";
        al.metadata["version"] = kVersion;
        output::write_output(al, g.fmt(), o.allan_out);
    }
    std::map<std::string, std::string> params{{"gain", num(o.gain)},   {"detuning", num(o.detuning)},
                                              {"jitter", num(o.jitter)}, {"n", std::to_string(o.n)},
                                              {"gate", num(o.gate)},   {"seed", std::to_string(g.seed)}};
    emit(g, "pll-noise", std::move(params), std::move(out));
}

struct ScatterOpts {
    double k_min = 0.5;
    double k_max = 30.0;
    double k_step = 0.1;
};

void run_scatter(const GlobalOpts& g, const ScatterOpts& o) {
    ColumnarOutput out;
    out.header = {"k", "s_re", "s_im", "abs_s", "route_diff"};
    for (double k : dynamics::linear_grid(o.k_min, o.k_max, o.k_step)) {
        const hyperbolic::Complex s(0.5, k);
        const auto S = hyperbolic::scattering_coefficient(s);
        const auto S2 = hyperbolic::scattering_coefficient_az(s);
        out.add_row({k, S.real(), S.imag(), std::abs(S), std::abs(S - S2)});
    }
    std::map<std::string, std::string> params{
        {"k_min", num(o.k_min)}, {"k_max", num(o.k_max)}, {"k_step", num(o.k_step)}};
    emit(g, "scatter", std::move(params), std::move(out));
}

struct EisensteinOpts {
    double nu = 0.0;
    double y = 1.0;
    double s_re = 2.0;
    double s_im = 0.0;
    std::int64_t qmax = 30;
};

void run_eisenstein(const GlobalOpts& g, const EisensteinOpts& o) {
    const hyperbolic::HalfPlanePoint z(o.nu, o.y);
    const hyperbolic::Complex s(o.s_re, o.s_im);
    ColumnarOutput out;
    out.header = {"Q", "value_re", "value_im", "increment"};
    double prev = 0.0;
    bool warned = false;
    for (std::int64_t Q = 1; Q <= o.qmax; ++Q) {
        const auto e = hyperbolic::eisenstein_partial(z, s, Q);
        warned = warned || e.conditionally_convergent;
        out.add_row({static_cast<double>(Q), e.value.real(), e.value.imag(),
                     Q == 1 ? 0.0 : std::abs(e.value) - prev});
        prev = std::abs(e.value);
    }
    out.metadata["conditionally_convergent"] = warned ? "1" : "0";
    std::map<std::string, std::string> params{{"nu", num(o.nu)},
                                              {"y", num(o.y)},
                                              {"s_re", num(o.s_re)},
                                              {"s_im", num(o.s_im)},
                                              {"qmax", std::to_string(o.qmax)}};
    emit(g, "eisenstein", std::move(params), std::move(out));
}

quantum::ExpectationKind parse_range(const std::string& r) {
    if (r == "paper") return quantum::ExpectationKind::paper_range;
    if (r == "full") return quantum::ExpectationKind::full_range;
    if (r == "spectral") return quantum::ExpectationKind::spectral;
    throw parameter_error("qphase: --range must be paper, full or spectral");
}

struct QphaseOpts {
    std::uint32_t qmax = 50;
    double beta = 1.0;
    std::string range = "paper";
};

void run_qphase(const GlobalOpts& g, const QphaseOpts& o) {
    const arith::ArithTable table(std::max<std::uint32_t>(o.qmax, 2));
    ColumnarOutput out;
    out.header = {"q", "expectation", "mangoldt_ref"};
    const auto kind = parse_range(o.range);
    for (std::uint32_t q = 1; q <= o.qmax; ++q)
        out.add_row({static_cast<double>(q), quantum::expectation_locked_phase(q, o.beta, kind),
                     mangoldt_reference(q, table)});
    std::map<std::string, std::string> params{
        {"qmax", std::to_string(o.qmax)}, {"beta", num(o.beta)}, {"range", o.range}};
    emit(g, "qphase", std::move(params), std::move(out));
}

struct KmsOpts {
    double beta = 3.0;
    std::uint32_t qmax = 50;
};

void run_kms(const GlobalOpts& g, const KmsOpts& o, const char* command = "kms") {
    const arith::ArithTable table(std::max<std::uint32_t>(o.qmax, 2));
    ColumnarOutput out;
    out.header = {"q", "kms", "mu_over_phi"};
    for (std::uint32_t q = 1; q <= o.qmax; ++q) {
        const auto k = quantum::kms_expectation(q, o.beta);
        out.add_row({static_cast<double>(q), k.value,
                     static_cast<double>(table.moebius(q)) / static_cast<double>(table.totient(q))});
    }
    std::map<std::string, std::string> params{{"beta", num(o.beta)},
                                              {"qmax", std::to_string(o.qmax)}};
    emit(g, command, std::move(params), std::move(out));
}

struct SpectrumOpts {
    std::string source = "eps-b";
    double alpha = 1.0;
    std::uint32_t tmax = 100000;
    std::size_t segment = 8192;
    double f_lo = 1e-4;
    double f_hi = 1e-2;
};

void run_spectrum(const GlobalOpts& g, const SpectrumOpts& o) {
    dynamics::TimeSeries series;
    series.dt = 1.0;
    std::map<std::string, std::string> params{{"source", o.source},
                                              {"tmax", std::to_string(o.tmax)},
                                              {"segment", std::to_string(o.segment)},
                                              {"f_lo", num(o.f_lo)},
                                              {"f_hi", num(o.f_hi)}};
    if (o.source == "synth") {
        params["alpha"] = num(o.alpha);
        params["seed"] = std::to_string(g.seed);
        series = dynamics::synth_power_law_noise(o.alpha, o.tmax, g.seed);
    } else {
        const arith::ArithTable table(o.tmax);
        arith::SummatoryKind kind;
        if (o.source == "eps-b") kind = arith::SummatoryKind::mangoldt_modified;
        else if (o.source == "eps-mangoldt") kind = arith::SummatoryKind::mangoldt_general;
        else if (o.source == "eps-moebius") kind = arith::SummatoryKind::moebius;
        else throw parameter_error("spectrum: unknown --source " + o.source);
        series.samples = arith::epsilon_series(kind, o.tmax, table);
    }
    dynamics::PsdOptions popt;
    popt.segment = o.segment;
    const auto est = dynamics::psd_estimate(series, o.f_lo, o.f_hi, popt);
    ColumnarOutput out;
    out.header = {"f", "psd"};
    for (std::size_t i = 0; i < est.frequency.size(); ++i)
        out.add_row({est.frequency[i], est.psd[i]});
    out.metadata["slope"] = num(est.slope);
    out.metadata["slope_stderr"] = num(est.slope_stderr);
    emit(g, "spectrum", std::move(params), std::move(out));
}

struct Fig2Opts {
    double k_min = 0.5;
    double k_max = 30.0;
    double k_step = 0.01;
};

void run_fig2(const GlobalOpts& g, const Fig2Opts& o) {
    const auto grid = dynamics::linear_grid(o.k_min, o.k_max, o.k_step);
    const auto samples = hyperbolic::scattering_phase(grid);
    ColumnarOutput out;
    out.header = {"k", "kappa", "kappa_prime", "kappa_exact"};
    for (const auto& s : samples) out.add_row({s.k, s.kappa, s.kappa_prime, s.kappa_exact});
    std::map<std::string, std::string> params{
        {"k_min", num(o.k_min)}, {"k_max", num(o.k_max)}, {"k_step", num(o.k_step)}};
    emit(g, "fig2", std::move(params), std::move(out));
}

struct Fig3Opts {
    std::uint32_t qmax = 50;
    double beta = -1.0;  // < 0: emit both beta = 1 and beta = 0 curves
    std::string range = "paper";
};

void run_fig3(const GlobalOpts& g, const Fig3Opts& o) {
    const arith::ArithTable table(std::max<std::uint32_t>(o.qmax, 2));
    const auto kind = parse_range(o.range);
    ColumnarOutput out;
    std::map<std::string, std::string> params{{"qmax", std::to_string(o.qmax)},
                                              {"range", o.range}};
    if (o.beta >= 0.0) {
        params["beta"] = num(o.beta);
        out.header = {"q", "expectation", "mangoldt_ref"};
        for (std::uint32_t q = 2; q <= o.qmax; ++q)
            out.add_row({static_cast<double>(q),
                         quantum::expectation_locked_phase(q, o.beta, kind),
                         mangoldt_reference(q, table)});
    } else {
        out.header = {"q", "expectation_beta1", "expectation_beta0", "mangoldt_ref"};
        for (std::uint32_t q = 2; q <= o.qmax; ++q)
            out.add_row({static_cast<double>(q),
                         quantum::expectation_locked_phase(q, 1.0, kind),
                         quantum::expectation_locked_phase(q, 0.0, kind),
                         mangoldt_reference(q, table)});
    }
    emit(g, "fig3", std::move(params), std::move(out));
}

struct Fig5Opts {
    std::uint32_t qmax = 50;
    double epsilon = 0.1;
};

void run_fig5(const GlobalOpts& g, const Fig5Opts& o) {
    const arith::ArithTable table(std::max<std::uint32_t>(o.qmax, 2));
    ColumnarOutput out;
    out.header = {"q", "kms", "mangoldt_ref"};
    for (std::uint32_t q = 1; q <= o.qmax; ++q) {
        const auto k = quantum::kms_expectation(q, 1.0 + o.epsilon);
        const double ref = -arith::mangoldt(q, table) * o.epsilon / static_cast<double>(q);
        out.add_row({static_cast<double>(q), k.value, ref});
    }
    std::map<std::string, std::string> params{{"qmax", std::to_string(o.qmax)},
                                              {"epsilon", num(o.epsilon)}};
    emit(g, "fig5", std::move(params), std::move(out));
}

}  // namespace

int run(int argc, const char* const* argv) {
    CLI::App app{"phase-locking numerics: PLL dynamics, continued fractions, modular scattering, "
                 "finite quantum phase operators"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--out", g.out_path, "output file (default: stdout)");
    app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", g.seed, "RNG seed for stochastic commands");
    app.add_option("--table-limit", g.table_limit, "sieve size for arithmetic tables");

    ArithOpts ao;
    auto* arith_cmd = app.add_subcommand("arith", "arithmetic functions");
    arith_cmd->add_option("--fn", ao.fn, "function name")->required();
    arith_cmd->add_option("--n", ao.n);
    arith_cmd->add_option("--n-signed", ao.n_signed)->each([&](const std::string&) {
        ao.n_signed_set = true;
    });
    arith_cmd->add_option("--q", ao.q);
    arith_cmd->add_option("--t", ao.t);
    arith_cmd->add_option("--residue", ao.residue);
    arith_cmd->add_option("--modulus", ao.modulus);
    arith_cmd->add_option("--Q", ao.expansion_q, "expansion truncation");

    BasinOpts bo;
    auto* basins_cmd = app.add_subcommand("basins", "locking-basin edges from the filter rule");
    basins_cmd->add_option("--f0", bo.f0, "reference frequency, Hz");
    basins_cmd->add_option("--fc", bo.fc, "low-pass cut-off, Hz");
    basins_cmd->add_option("--p", bo.p);
    basins_cmd->add_option("--q", bo.q);
    basins_cmd->add_option("--farey", bo.farey, "emit basins for every fraction of F_Q");
    basins_cmd->add_option("--a-cut", bo.a_cut_override, "override the filter cut");

    StaircaseOpts so;
    auto* stair_cmd = app.add_subcommand("staircase", "winding-number scan of the circle map");
    stair_cmd->add_option("--c", so.c, "coupling")->required();
    stair_cmd->add_option("--omega-min", so.omega_min);
    stair_cmd->add_option("--omega-max", so.omega_max);
    stair_cmd->add_option("--omega-step", so.omega_step);
    stair_cmd->add_option("--n-transient", so.n_transient);
    stair_cmd->add_option("--n-iter", so.n_iter);
    stair_cmd->add_option("--plateau-tol", so.plateau_tol);
    stair_cmd->add_option("--max-den", so.max_den);
    stair_cmd->add_option("--plateaus-out", so.plateaus_out, "write plateau table here");

    AdlerOpts dlo;
    auto* adler_cmd = app.add_subcommand("adler", "phase-difference dynamics");
    adler_cmd->add_option("--gain", dlo.gain);
    adler_cmd->add_option("--detuning", dlo.detuning);
    adler_cmd->add_option("--phi0", dlo.phi0);
    adler_cmd->add_option("--t-end", dlo.t_end);
    adler_cmd->add_option("--tol", dlo.tol);
    adler_cmd->add_option("--omega0", dlo.omega0, "carrier frequency (harmonic model)");
    adler_cmd->add_option("--target-p", dlo.target_p);
    adler_cmd->add_option("--target-q", dlo.target_q);
    adler_cmd->add_option("--lowpass-tau", dlo.lowpass_tau);
    adler_cmd->add_option("--term", dlo.terms, "harmonic term r,s,gain,phase0 (repeatable)");

    PllOpts po;
    auto* pll_cmd = app.add_subcommand("pll-noise", "counted-beat jitter experiment");
    pll_cmd->add_option("--gain", po.gain);
    pll_cmd->add_option("--detuning", po.detuning);
    pll_cmd->add_option("--jitter", po.jitter, "white jitter rms, rad/s");
    pll_cmd->add_option("--n", po.n, "number of gate counts");
    pll_cmd->add_option("--gate", po.gate, "gate interval, s");
    pll_cmd->add_option("--allan-out", po.allan_out);

    ScatterOpts sco;
    auto* scatter_cmd = app.add_subcommand("scatter", "critical-line scattering coefficient");
    scatter_cmd->add_option("--k-min", sco.k_min);
    scatter_cmd->add_option("--k-max", sco.k_max);
    scatter_cmd->add_option("--k-step", sco.k_step);

    EisensteinOpts eo;
    auto* eis_cmd = app.add_subcommand("eisenstein", "partial sums over coprime residues");
    eis_cmd->add_option("--nu", eo.nu);
    eis_cmd->add_option("--y", eo.y);
    eis_cmd->add_option("--s-re", eo.s_re);
    eis_cmd->add_option("--s-im", eo.s_im);
    eis_cmd->add_option("--qmax", eo.qmax);

    QphaseOpts qo;
    auto* qphase_cmd = app.add_subcommand("qphase", "locked-phase expectation scan");
    qphase_cmd->add_option("--qmax", qo.qmax);
    qphase_cmd->add_option("--beta", qo.beta);
    qphase_cmd->add_option("--range", qo.range, "paper, full or spectral");

    KmsOpts ko;
    auto* kms_cmd = app.add_subcommand("kms", "equilibrium phase expectation");
    kms_cmd->add_option("--beta", ko.beta)->required();
    kms_cmd->add_option("--qmax", ko.qmax);

    SpectrumOpts spo;
    auto* spec_cmd = app.add_subcommand("spectrum", "averaged periodogram and slope fit");
    spec_cmd->add_option("--source", spo.source, "eps-b, eps-mangoldt, eps-moebius or synth");
    spec_cmd->add_option("--alpha", spo.alpha, "exponent for synth");
    spec_cmd->add_option("--tmax", spo.tmax);
    spec_cmd->add_option("--segment", spo.segment);
    spec_cmd->add_option("--f-lo", spo.f_lo);
    spec_cmd->add_option("--f-hi", spo.f_hi);

    Fig2Opts f2o;
    auto* fig2_cmd = app.add_subcommand("fig2", "scattering phase curve");
    fig2_cmd->add_option("--k-min", f2o.k_min);
    fig2_cmd->add_option("--k-max", f2o.k_max);
    fig2_cmd->add_option("--k-step", f2o.k_step);

    Fig3Opts f3o;
    auto* fig3_cmd = app.add_subcommand("fig3", "locked-phase expectation curves");
    fig3_cmd->add_option("--qmax", f3o.qmax);
    fig3_cmd->add_option("--beta", f3o.beta, "single curve at this beta (default: both 1 and 0)");
    fig3_cmd->add_option("--range", f3o.range);

    KmsOpts f4o;  // fig4 is the beta = 3 slice
    auto* fig4_cmd = app.add_subcommand("fig4", "equilibrium expectation at beta = 3");
    fig4_cmd->add_option("--qmax", f4o.qmax);
    fig4_cmd->add_option("--beta", f4o.beta);

    Fig5Opts f5o;
    auto* fig5_cmd = app.add_subcommand("fig5", "critical equilibrium expectation");
    fig5_cmd->add_option("--qmax", f5o.qmax);
    fig5_cmd->add_option("--epsilon", f5o.epsilon);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (arith_cmd->parsed()) run_arith(g, ao);
        else if (basins_cmd->parsed()) run_basins(g, bo);
        else if (stair_cmd->parsed()) run_staircase(g, so);
        else if (adler_cmd->parsed()) run_adler(g, dlo);
        else if (pll_cmd->parsed()) run_pll(g, po);
        else if (scatter_cmd->parsed()) run_scatter(g, sco);
        else if (eis_cmd->parsed()) run_eisenstein(g, eo);
        else if (qphase_cmd->parsed()) run_qphase(g, qo);
        else if (kms_cmd->parsed()) run_kms(g, ko);
        else if (spec_cmd->parsed()) run_spectrum(g, spo);
        else if (fig2_cmd->parsed()) run_fig2(g, f2o);
        else if (fig3_cmd->parsed()) run_fig3(g, f3o);
        else if (fig4_cmd->parsed()) run_kms(g, f4o, "fig4");
        else if (fig5_cmd->parsed()) run_fig5(g, f5o);
    } catch (const parameter_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const numerical_error& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace phaselock::cli
