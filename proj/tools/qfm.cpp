// Copyright 2026 The qfmkit developers

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Batch front-end. Four subcommands (coefficients, expressibility,
// entanglement, evaluate) build a model from flags, run the analysis and
// write JSON or CSV with a reproducibility manifest embedded. Exit codes:
// 0 success, 2 flag/usage validation, 1 runtime failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qfm/coefficients.hpp"
#include "qfm/entanglement.hpp"
#include "qfm/expressibility.hpp"
#include "qfm/fourier_tree.hpp"
#include "qfm/model.hpp"
#include "qfm/parallel.hpp"
#include "qfm/serialize.hpp"
#include "qfm/spectrum.hpp"
#include "qfm/version.hpp"

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct CommonOpts {
    std::string ansatz;
    std::size_t qubits = 0;
    std::size_t layers = 1;
    std::string encoding = "x";
    std::string observable = "Z0";
    std::size_t samples = 1;
    std::uint64_t seed = 0;
    std::string output; // empty -> stdout
    std::string format; // json | csv
    unsigned threads = 1;
};

struct NoiseOpts {
    qfm::NoiseParams params;
    bool any_set = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts,
                std::size_t default_samples, const std::string& default_format) {
    opts.samples = default_samples;
    opts.format = default_format;
    cmd->add_option("--ansatz", opts.ansatz, "Circuit template name")
        ->required();
    cmd->add_option("--qubits", opts.qubits, "Number of qubits")->required();
    cmd->add_option("--layers", opts.layers, "Number of encoding layers L");
    cmd->add_option("--encoding", opts.encoding,
                    "Encoding axis: x|y|z or per-qubit list like x,y,z");
    cmd->add_option("--observable", opts.observable,
                    "Weighted Pauli string, e.g. Z0 or 0.5*Z0Z1");
    cmd->add_option("--samples", opts.samples, "Number of parameter samples");
    cmd->add_option("--seed", opts.seed, "RNG seed")->envname("QFM_SEED");
    cmd->add_option("--output", opts.output,
                    "Output file path (stdout when omitted)");
    cmd->add_option("--format", opts.format, "Output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", opts.threads,
                    "Worker threads for sample loops");
}

void add_noise(CLI::App* cmd, NoiseOpts& noise) {
    auto track = [&noise](CLI::Option* opt) {
        opt->each([&noise](const std::string&) { noise.any_set = true; });
    };
    track(cmd->add_option("--p-bf", noise.params.p_bf, "Per-gate bit flip"));
    track(cmd->add_option("--p-pf", noise.params.p_pf, "Per-gate phase flip"));
    track(cmd->add_option("--p-dp", noise.params.p_dp,
                          "Per-gate depolarising"));
    track(cmd->add_option("--p-ad", noise.params.p_ad,
                          "Amplitude damping at circuit end"));
    track(cmd->add_option("--p-pd", noise.params.p_pd,
                          "Phase damping at circuit end"));
    track(cmd->add_option("--p-me", noise.params.p_me,
                          "Measurement bit flip at circuit end"));
    track(cmd->add_option("--p-sp", noise.params.p_sp,
                          "State-preparation bit flip"));
    track(cmd->add_option("--t1", noise.params.t1, "Thermal relaxation T1"));
    track(cmd->add_option("--t2", noise.params.t2, "Thermal relaxation T2"));
    track(cmd->add_option("--t-factor", noise.params.t_factor,
                          "Gate duration for thermal relaxation"));
    track(cmd->add_option("--gate-error-mu", noise.params.gate_error_mu,
                          "Stddev of the coherent angle error"));
}

std::vector<qfm::PauliAxis> parse_encoding(const std::string& text) {
    std::vector<qfm::PauliAxis> axes;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "x" || tok == "X") {
            axes.push_back(qfm::PauliAxis::X);
        } else if (tok == "y" || tok == "Y") {
            axes.push_back(qfm::PauliAxis::Y);
        } else if (tok == "z" || tok == "Z") {
            axes.push_back(qfm::PauliAxis::Z);
        } else {
            throw UsageError("bad encoding axis: " + tok);
        }
    }
    if (axes.empty()) {
        throw UsageError("empty encoding axis list");
    }
    return axes;
}

struct ModelParts {
    qfm::ModelConfig config;
    qfm::CircuitIR ir;
};

ModelParts build_model(const CommonOpts& opts) {
    ModelParts parts;
    try {
        parts.config.ansatz.name = qfm::parse_ansatz_name(opts.ansatz);
        parts.config.ansatz.n_qubits = opts.qubits;
        parts.config.ansatz.n_layers = opts.layers;
        parts.config.encoding_axes = parse_encoding(opts.encoding);
        parts.config.observable = qfm::PauliString::parse(opts.observable);
        parts.config.seed = opts.seed;
        parts.ir = qfm::construct(parts.config);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
    return parts;
}

json make_manifest(const std::string& subcommand, const CommonOpts& opts,
                   const json& extra_config) {
    // Thread count and wall-clock duration are execution details: results
    // are independent of both, so neither belongs in the reproducibility
    // manifest (duration goes to stderr).
    json config{
        {"ansatz", opts.ansatz},
        {"qubits", opts.qubits},
        {"layers", opts.layers},
        {"encoding", opts.encoding},
        {"observable", opts.observable},
        {"samples", opts.samples},
        {"format", opts.format},
    };
    for (const auto& [key, value] : extra_config.items()) {
        config[key] = value;
    }
    return json{
        {"subcommand", subcommand},
        {"version", std::string(qfm::kVersion)},
        {"seed", opts.seed},
        {"config", std::move(config)},
    };
}

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.output.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') {
            std::cout << '\n';
        }
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + opts.output);
    }
    out << text;
}

std::string csv_manifest_line(const json& manifest) {
    return "# manifest: " + manifest.dump() + "\n";
}

// ---------------------------------------------------------------------------
// coefficients

struct CoefficientsOpts {
    std::string method = "both";
    std::string params_mode = "random";
};

int cmd_coefficients(const CommonOpts& common, const CoefficientsOpts& copts,
                     const NoiseOpts& noise) {
    const bool want_dft =
        copts.method == "dft" || copts.method == "both";
    const bool want_analytical =
        copts.method == "analytical" || copts.method == "both";
    std::optional<qfm::NoiseParams> noise_params;
    if (noise.any_set && !noise.params.is_noiseless()) {
        try {
            noise.params.validate();
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        noise_params = noise.params;
    }
    if (noise_params.has_value() && want_analytical) {
        throw UsageError(
            "the analytical engine is noiseless-only; use --method dft "
            "or drop the noise flags");
    }
    auto parts = build_model(common);

    const json manifest = make_manifest(
        "coefficients", common,
        json{{"method", copts.method},
             {"params", copts.params_mode},
             {"noise", qfm::to_json(noise.params)}});

    const qfm::RngStream rng(common.seed);
    const bool single_shot =
        copts.params_mode == "zero" || common.samples <= 1;

    const auto run_spectrum = [&](qfm::Spectrum::Method method,
                                  std::span<const double> params,
                                  qfm::RngStream* noise_rng) {
        if (method == qfm::Spectrum::Method::dft) {
            return qfm::dft_spectrum(parts.ir, params,
                                     parts.config.observable, noise_params,
                                     noise_rng);
        }
        return qfm::analytical_spectrum(parts.ir, params,
                                        parts.config.observable);
    };

    json payload;
    std::string csv;
    if (single_shot) {
        std::vector<double> params(parts.ir.param_count, 0.0);
        if (copts.params_mode == "random") {
            params = qfm::sample_parameters(parts.ir, 1, rng)[0];
        }
        qfm::RngStream noise_rng = rng.substream(0x6e6f697365ULL);
        std::optional<qfm::Spectrum> dft;
        std::optional<qfm::Spectrum> ana;
        if (want_dft) {
            dft = run_spectrum(qfm::Spectrum::Method::dft, params, &noise_rng);
        }
        if (want_analytical) {
            ana = run_spectrum(qfm::Spectrum::Method::analytical, params,
                               nullptr);
        }
        const auto& primary = want_analytical ? *ana : *dft;
        json support = json::array();
        for (std::size_t i = 0; i < primary.frequencies.size(); ++i) {
            if (std::abs(primary.coefficients[i]) > qfm::kSupportThreshold) {
                support.push_back(primary.frequencies[i]);
            }
        }
        if (copts.method == "both") {
            double max_disc = 0.0;
            json per_freq = json::array();
            for (std::size_t i = 0; i < dft->coefficients.size(); ++i) {
                const double d =
                    std::abs(dft->coefficients[i] - ana->coefficients[i]);
                per_freq.push_back(d);
                max_disc = std::max(max_disc, d);
            }
            payload = {{"dft", qfm::to_json(*dft)},
                       {"analytical", qfm::to_json(*ana)},
                       {"support", support},
                       {"max_discrepancy_per_frequency", per_freq},
                       {"max_discrepancy", max_disc}};
            std::ostringstream os;
            os << csv_manifest_line(manifest)
               << "omega,re_dft,im_dft,re_analytical,im_analytical,abs_diff\n";
            for (std::size_t i = 0; i < dft->frequencies.size(); ++i) {
                os << dft->frequencies[i] << ','
                   << format_double(dft->coefficients[i].real()) << ','
                   << format_double(dft->coefficients[i].imag()) << ','
                   << format_double(ana->coefficients[i].real()) << ','
                   << format_double(ana->coefficients[i].imag()) << ','
                   << format_double(std::abs(dft->coefficients[i] -
                                             ana->coefficients[i]))
                   << '\n';
            }
            csv = os.str();
        } else {
            payload = qfm::to_json(primary);
            payload["support"] = support;
            std::ostringstream os;
            os << csv_manifest_line(manifest) << "omega,re,im\n";
            for (std::size_t i = 0; i < primary.frequencies.size(); ++i) {
                os << primary.frequencies[i] << ','
                   << format_double(primary.coefficients[i].real()) << ','
                   << format_double(primary.coefficients[i].imag()) << '\n';
            }
            csv = os.str();
        }
    } else {
        // Sampled statistics: mean |c_w| per frequency per engine, and the
        // per-frequency max discrepancy when both engines run.
        const auto samples =
            qfm::sample_parameters(parts.ir, common.samples, rng);
        const std::size_t n_freq = 2 * qfm::max_frequency(parts.ir) + 1;
        std::vector<double> mean_dft(n_freq, 0.0);
        std::vector<double> mean_ana(n_freq, 0.0);
        std::vector<double> max_disc(n_freq, 0.0);
        std::vector<std::vector<double>> disc_per_sample(
            common.samples, std::vector<double>());
        std::vector<std::vector<double>> dft_mag(common.samples),
            ana_mag(common.samples);
        qfm::parallel_for(common.samples, common.threads, [&](std::size_t i) {
            qfm::RngStream noise_rng = rng.substream(1'000'003ULL + i);
            std::optional<qfm::Spectrum> dft;
            std::optional<qfm::Spectrum> ana;
            if (want_dft) {
                dft = run_spectrum(qfm::Spectrum::Method::dft, samples[i],
                                   &noise_rng);
                dft_mag[i].resize(n_freq);
                for (std::size_t f = 0; f < n_freq; ++f) {
                    dft_mag[i][f] = std::abs(dft->coefficients[f]);
                }
            }
            if (want_analytical) {
                ana = run_spectrum(qfm::Spectrum::Method::analytical,
                                   samples[i], nullptr);
                ana_mag[i].resize(n_freq);
                for (std::size_t f = 0; f < n_freq; ++f) {
                    ana_mag[i][f] = std::abs(ana->coefficients[f]);
                }
            }
            if (want_dft && want_analytical) {
                disc_per_sample[i].resize(n_freq);
                for (std::size_t f = 0; f < n_freq; ++f) {
                    disc_per_sample[i][f] =
                        std::abs(dft->coefficients[f] - ana->coefficients[f]);
                }
            }
        });
        std::vector<int> frequencies(n_freq);
        const int freq_max = static_cast<int>(qfm::max_frequency(parts.ir));
        for (std::size_t f = 0; f < n_freq; ++f) {
            frequencies[f] = -freq_max + static_cast<int>(f);
        }
        for (std::size_t i = 0; i < common.samples; ++i) {
            for (std::size_t f = 0; f < n_freq; ++f) {
                if (want_dft) {
                    mean_dft[f] += dft_mag[i][f];
                }
                if (want_analytical) {
                    mean_ana[f] += ana_mag[i][f];
                }
                if (!disc_per_sample[i].empty()) {
                    max_disc[f] = std::max(max_disc[f], disc_per_sample[i][f]);
                }
            }
        }
        const auto finish = [&](std::vector<double>& mean) {
            json support = json::array();
            double grand = 0.0;
            for (std::size_t f = 0; f < n_freq; ++f) {
                mean[f] /= static_cast<double>(common.samples);
                grand += mean[f];
                if (mean[f] > qfm::kSupportThreshold) {
                    support.push_back(frequencies[f]);
                }
            }
            return std::pair<json, double>(std::move(support),
                                           grand / static_cast<double>(n_freq));
        };
        payload = {{"frequencies", frequencies}};
        if (want_dft) {
            auto [support, grand] = finish(mean_dft);
            payload["dft"] = {{"mean_magnitudes", mean_dft},
                              {"grand_mean", grand},
                              {"support", support}};
        }
        if (want_analytical) {
            auto [support, grand] = finish(mean_ana);
            payload["analytical"] = {{"mean_magnitudes", mean_ana},
                                     {"grand_mean", grand},
                                     {"support", support}};
        }
        if (want_dft && want_analytical) {
            double overall = 0.0;
            for (double d : max_disc) {
                overall = std::max(overall, d);
            }
            payload["max_discrepancy_per_frequency"] = max_disc;
            payload["max_discrepancy"] = overall;
        }
        std::ostringstream os;
        os << csv_manifest_line(manifest) << "omega";
        if (want_dft) {
            os << ",mean_magnitude_dft";
        }
        if (want_analytical) {
            os << ",mean_magnitude_analytical";
        }
        if (want_dft && want_analytical) {
            os << ",max_discrepancy";
        }
        os << '\n';
        for (std::size_t f = 0; f < n_freq; ++f) {
            os << frequencies[f];
            if (want_dft) {
                os << ',' << format_double(mean_dft[f]);
            }
            if (want_analytical) {
                os << ',' << format_double(mean_ana[f]);
            }
            if (want_dft && want_analytical) {
                os << ',' << format_double(max_disc[f]);
            }
            os << '\n';
        }
        csv = os.str();
    }

    if (common.format == "csv") {
        write_output(common, csv);
    } else {
        json out = payload;
        out["manifest"] = manifest;
        write_output(common, out.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// expressibility

struct ExpressibilityOpts {
    std::size_t bins = 75;
    double x = 0.0;
};

int cmd_expressibility(const CommonOpts& common,
                       const ExpressibilityOpts& eopts) {
    if (common.samples < 2) {
        throw UsageError("expressibility needs --samples >= 2");
    }
    if (eopts.bins < 2) {
        throw UsageError("expressibility needs --bins >= 2");
    }
    auto parts = build_model(common);
    const qfm::RngStream rng(common.seed);
    const double kl = qfm::expressibility_kl(parts.ir, common.samples,
                                             eopts.bins, eopts.x, rng,
                                             common.threads);
    const json manifest = make_manifest(
        "expressibility", common,
        json{{"bins", eopts.bins}, {"x", eopts.x}});
    if (common.format == "csv") {
        std::ostringstream os;
        os << csv_manifest_line(manifest) << "n_samples,n_bins,kl_divergence\n"
           << common.samples << ',' << eopts.bins << ','
           << format_double(kl) << '\n';
        write_output(common, os.str());
    } else {
        json out{{"n_samples", common.samples},
                 {"n_bins", eopts.bins},
                 {"kl_divergence", kl},
                 {"manifest", manifest}};
        write_output(common, out.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// entanglement

struct EntanglementOpts {
    std::string method = "both";
    double x = 0.0;
};

int cmd_entanglement(const CommonOpts& common, const EntanglementOpts& eopts) {
    if (common.qubits < 2) {
        throw UsageError("entangling capability needs --qubits >= 2");
    }
    auto parts = build_model(common);
    const qfm::RngStream rng(common.seed);
    std::optional<qfm::EntanglementResult> mw;
    std::optional<qfm::EntanglementResult> bell;
    if (eopts.method == "meyer_wallach" || eopts.method == "both") {
        mw = qfm::meyer_wallach(parts.ir, common.samples, eopts.x, rng,
                                common.threads);
    }
    if (eopts.method == "bell" || eopts.method == "both") {
        bell = qfm::bell_entangling_capability(parts.ir, common.samples,
                                               eopts.x, rng, common.threads);
    }
    const json manifest = make_manifest(
        "entanglement", common,
        json{{"method", eopts.method}, {"x", eopts.x}});

    json out;
    std::ostringstream csv;
    csv << csv_manifest_line(manifest);
    if (eopts.method == "both") {
        double max_delta = 0.0;
        for (std::size_t i = 0; i < mw->q_per_sample.size(); ++i) {
            max_delta = std::max(
                max_delta,
                std::abs(mw->q_per_sample[i] - bell->q_per_sample[i]));
        }
        out = json{{"method", "both"},
                   {"meyer_wallach", qfm::to_json(*mw)},
                   {"bell", qfm::to_json(*bell)},
                   {"max_abs_delta_q", max_delta},
                   {"manifest", manifest}};
        csv << "sample,q_meyer_wallach,q_bell,abs_delta\n";
        for (std::size_t i = 0; i < mw->q_per_sample.size(); ++i) {
            csv << i << ',' << format_double(mw->q_per_sample[i]) << ','
                << format_double(bell->q_per_sample[i]) << ','
                << format_double(std::abs(mw->q_per_sample[i] -
                                          bell->q_per_sample[i]))
                << '\n';
        }
    } else {
        const auto& r = mw.has_value() ? *mw : *bell;
        out = qfm::to_json(r);
        out["manifest"] = manifest;
        csv << "sample,q\n";
        for (std::size_t i = 0; i < r.q_per_sample.size(); ++i) {
            csv << i << ',' << format_double(r.q_per_sample[i]) << '\n';
        }
    }
    if (common.format == "csv") {
        write_output(common, csv.str());
    } else {
        write_output(common, out.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateOpts {
    std::vector<double> x_values;
    std::string params_mode = "random";
};

int cmd_evaluate(const CommonOpts& common, const EvaluateOpts& eopts,
                 const NoiseOpts& noise) {
    if (eopts.x_values.empty()) {
        throw UsageError("evaluate needs at least one --x value");
    }
    std::optional<qfm::NoiseParams> noise_params;
    if (noise.any_set) {
        try {
            noise.params.validate();
        } catch (const std::exception& e) {
            throw UsageError(e.what());
        }
        noise_params = noise.params;
    }
    auto parts = build_model(common);
    const qfm::RngStream rng(common.seed);

    std::vector<std::vector<double>> param_sets;
    if (eopts.params_mode == "zero") {
        param_sets.assign(1, std::vector<double>(parts.ir.param_count, 0.0));
    } else {
        param_sets = qfm::sample_parameters(parts.ir, common.samples, rng);
    }

    std::vector<std::vector<double>> values(
        param_sets.size(), std::vector<double>(eopts.x_values.size()));
    qfm::parallel_for(param_sets.size(), common.threads, [&](std::size_t i) {
        for (std::size_t j = 0; j < eopts.x_values.size(); ++j) {
            qfm::RngStream sub = rng.substream(i).substream(j);
            values[i][j] =
                qfm::evaluate(parts.ir, param_sets[i], eopts.x_values[j],
                              parts.config.observable, noise_params, &sub);
        }
    });

    const json manifest = make_manifest(
        "evaluate", common,
        json{{"params", eopts.params_mode},
             {"x", eopts.x_values},
             {"noise", qfm::to_json(noise.params)}});

    if (common.format == "json") {
        json rows = json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = 0; j < eopts.x_values.size(); ++j) {
                rows.push_back({{"sample", i},
                                {"x", eopts.x_values[j]},
                                {"f", values[i][j]}});
            }
        }
        json out{{"rows", std::move(rows)}, {"manifest", manifest}};
        write_output(common, out.dump(2));
    } else {
        std::ostringstream os;
        os << csv_manifest_line(manifest) << "sample,x,f\n";
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = 0; j < eopts.x_values.size(); ++j) {
                os << i << ',' << format_double(eopts.x_values[j]) << ','
                   << format_double(values[i][j]) << '\n';
            }
        }
        write_output(common, os.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Fourier Model simulator and analysis toolkit"};
    app.require_subcommand(1);

    CommonOpts common_coeff, common_expr, common_ent, common_eval;
    CoefficientsOpts coeff_opts;
    ExpressibilityOpts expr_opts;
    EntanglementOpts ent_opts;
    EvaluateOpts eval_opts;
    NoiseOpts noise_coeff, noise_eval;

    CLI::App* coeff = app.add_subcommand(
        "coefficients", "Fourier spectrum by DFT and/or the analytical tree");
    add_common(coeff, common_coeff, 1, "json");
    coeff->add_option("--method", coeff_opts.method, "dft|analytical|both")
        ->check(CLI::IsMember({"dft", "analytical", "both"}));
    coeff->add_option("--params", coeff_opts.params_mode, "zero|random")
        ->check(CLI::IsMember({"zero", "random"}));
    add_noise(coeff, noise_coeff);

    CLI::App* expr = app.add_subcommand(
        "expressibility", "KL divergence against the Haar fidelity law");
    add_common(expr, common_expr, 5000, "json");
    expr->add_option("--bins", expr_opts.bins, "Histogram bins");
    expr->add_option("--x", expr_opts.x, "Fixed input during sampling");

    CLI::App* ent = app.add_subcommand(
        "entanglement", "Entangling capability (Meyer-Wallach / Bell)");
    add_common(ent, common_ent, 5000, "json");
    ent->add_option("--method", ent_opts.method, "meyer_wallach|bell|both")
        ->check(CLI::IsMember({"meyer_wallach", "bell", "both"}));
    ent->add_option("--x", ent_opts.x, "Fixed input during sampling");

    CLI::App* eval = app.add_subcommand(
        "evaluate", "Evaluate f(x), optionally under noise; CSV by default");
    add_common(eval, common_eval, 1, "csv");
    eval->add_option("--x", eval_opts.x_values, "Input value (repeatable)")
        ->required();
    eval->add_option("--params", eval_opts.params_mode, "zero|random")
        ->check(CLI::IsMember({"zero", "random"}));
    add_noise(eval, noise_eval);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto start = std::chrono::steady_clock::now();
    int rc = 0;
    std::string name;
    try {
        if (app.got_subcommand(coeff)) {
            name = "coefficients";
            rc = cmd_coefficients(common_coeff, coeff_opts, noise_coeff);
        } else if (app.got_subcommand(expr)) {
            name = "expressibility";
            rc = cmd_expressibility(common_expr, expr_opts);
        } else if (app.got_subcommand(ent)) {
            name = "entanglement";
            rc = cmd_entanglement(common_ent, ent_opts);
        } else if (app.got_subcommand(eval)) {
            name = "evaluate";
            rc = cmd_evaluate(common_eval, eval_opts, noise_eval);
        }
    } catch (const UsageError& e) {
        std::cerr << "qfm: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "qfm: " << e.what() << "\n";
        return 1;
    }
    const auto elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::cerr << "qfm " << name << ": done in " << format_double(elapsed)
              << "s\n";
    return rc;
}
