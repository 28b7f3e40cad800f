// Copyright 2026 The detmoments Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "detmoments/errors.hpp"
#include "detmoments/formulas.hpp"
#include "detmoments/inversion.hpp"
#include "detmoments/oracle.hpp"
#include "detmoments/parallel.hpp"
#include "detmoments/seqfit.hpp"
#include "detmoments/utility.hpp"
#include "detmoments/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

using namespace detmoments;
using nlohmann::json;

namespace {

constexpr int kExitVerify = 1;
constexpr int kExitPrecision = 2;
constexpr int kExitUsage = 64;

struct Globals {
    unsigned threads = 0;
    int digits = 10;
    std::string manifest;
};

struct MomentArgs {
    std::string scenario = "bures-2qubit";
    std::string alpha;
    std::string quantity = "ratio";
    long n = 1;
    std::string k = "0";
    bool paperLiteral = false;
};

struct VerifyArgs {
    std::string suite;
    bool paperLiteral = false;
    bool literal = false;
    bool full = false;
    bool json = false;
};

struct SepProbArgs {
    std::string source = "hybrid";
    std::string alpha = "1";
    std::string mode = "k-zero";
    long N = 10;
    long precisionBits = -1;
    std::vector<long> checkpoints;
};

struct DensityArgs {
    std::string source = "hybrid";
    std::string alpha = "1";
    std::string mode = "k-zero";
    long N = 200;
    long points = 1000;
    long precisionBits = -1;
    std::string output;
};

struct FitArgs {
    std::string input;
    int maxDegree = 12;
    long start = 0;
};

struct OracleArgs {
    std::string integrand = "normalization";
    double alpha = 0.5;
    long k = 0;
    double tol = 1e-8;
    std::vector<int> exponents{0, 0, 0, 8};
};

std::string sha256Hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr);
    std::ostringstream out;
    for (unsigned int i = 0; i < size; ++i) {
        out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return out.str();
}

struct ScenarioChoice {
    Scenario scenario;
    bool buresFamily = false;
};

ScenarioChoice resolveScenario(const std::string &name, const std::string &alphaText) {
    static const std::map<std::string, std::pair<std::string, std::string>> aliases = {
        {"bures-2qubit", {"bures", "1"}},       {"bures-2rebit", {"bures", "1/2"}},
        {"bures-2quaterbit", {"bures", "2"}},   {"bures", {"bures", ""}},
        {"hs-2qubit", {"hs", "1"}},             {"hs-2rebit", {"hs", "1/2"}},
        {"hs-2quaterbit", {"hs", "2"}},         {"hs", {"hs", ""}},
        {"hs-qubit-qutrit", {"qq", "1"}},       {"hs-rebit-retrit", {"qq", "1/2"}},
        {"qq", {"qq", ""}},
    };
    auto it = aliases.find(name);
    if (it == aliases.end()) {
        throw CLI::ValidationError("--scenario", "unknown scenario '" + name + "'");
    }
    std::string text = alphaText.empty() ? it->second.second : alphaText;
    if (text.empty()) {
        throw CLI::ValidationError("--alpha", "scenario '" + name + "' needs --alpha");
    }
    Rational alpha = parseRational(text);
    const std::string &family = it->second.first;
    if (family == "bures") {
        return {buresScenario(alpha), true};
    }
    if (family == "hs") {
        return {hsScenario(alpha), false};
    }
    return {qubitQutritScenario(alpha), false};
}

Rational ratioMoment(const ScenarioChoice &c, long n, const Rational &k, bool paperLiteral) {
    const Scenario &s = c.scenario;
    if (n == 0) {
        return 1;
    }
    if (s.family == Family::QubitQutrit) {
        if (n == 1) {
            return qqRatioN1(s.alpha, k);
        }
        throw NotAvailable("qubit-qutrit ratios are known for n <= 1");
    }
    if (!c.buresFamily) {
        return hsRatio(s.alpha, n, k);
    }
    if (n == 1) {
        return buresRatioN1(s.alpha, k);
    }
    if (n == 2 && s.alpha == ratio(1, 2)) {
        return buresRebitN2Ratio(k, paperLiteral ? N2Constant::PaperLiteral : N2Constant::Corrected);
    }
    throw NotAvailable("Bures ratios are known for n <= 1, and n = 2 at alpha = 1/2");
}

std::string runMoment(const MomentArgs &a, const Globals &g) {
    ScenarioChoice c = resolveScenario(a.scenario, a.alpha);
    Rational k = parseRational(a.k);
    Rational value;
    if (a.quantity == "ratio") {
        value = ratioMoment(c, a.n, k, a.paperLiteral);
    } else if (a.quantity == "det") {
        value = detMoment(c.scenario, k);
    } else if (a.quantity == "prefactor") {
        value = prefactor(c.scenario, a.n, k);
    } else if (a.quantity == "hybrid") {
        value = c.scenario.family == Family::QubitQutrit ? hybrid10F9(HybridVariant::QubitQutrit, c.scenario.alpha).evaluate(a.n, k)
                                                          : hybridMoment(c.scenario.alpha, a.n, k);
    } else {
        value = trialBuresRatio(c.scenario.alpha, a.n, k);
    }
    json j;
    j["scenario"] = a.scenario;
    j["alpha"] = toString(c.scenario.alpha);
    j["quantity"] = a.quantity;
    j["n"] = a.n;
    j["k"] = toString(k);
    j["exact"] = toString(value);
    j["decimal"] = toDecimal(value, g.digits);
    return j.dump(2) + "\n";
}

std::string runVerify(const VerifyArgs &a, int &status) {
    SuiteOptions opts{a.paperLiteral, a.literal, a.full};
    std::vector<std::string> names = a.suite == "all" ? suiteNames() : std::vector<std::string>{a.suite};
    std::string out;
    status = 0;
    for (const auto &name : names) {
        SuiteResult r = runSuite(name, opts);
        if (!r.passed()) {
            status = kExitVerify;
        }
        if (a.json) {
            out += r.toJson() + "\n";
            continue;
        }
        for (const auto &c : r.checks) {
            out += (c.passed ? "PASS " : "FAIL ") + name + "/" + c.name + " (" + std::to_string(c.points) + " points)";
            if (!c.passed) {
                out += ": " + c.detail;
            }
            out += "\n";
        }
        out += std::string(r.passed() ? "PASS " : "FAIL ") + name + "\n";
    }
    return out;
}

MomentSpec momentSpec(const std::string &source, const std::string &alpha, const std::string &mode) {
    MomentSpec spec;
    spec.source = source == "hybrid" ? MomentSource::Hybrid : source == "trial" ? MomentSource::Trial : MomentSource::HsEq6;
    spec.alpha = parseRational(alpha);
    spec.mode = mode == "balanced" ? MomentMode::Balanced : MomentMode::KZeroProxy;
    return spec;
}

std::string runSepProb(const SepProbArgs &a, const Globals &g, long &bitsUsed) {
    MomentSpec spec = momentSpec(a.source, a.alpha, a.mode);
    SepProbOptions opts;
    opts.precisionBits = a.precisionBits;
    opts.digits = g.digits;
    opts.checkpoints = a.checkpoints;
    std::vector<SepProbEstimate> path = separabilityProbabilityPath(spec, a.N, opts);
    const SepProbEstimate &last = path.back();
    bitsUsed = last.precisionBits;
    json j;
    j["source"] = a.source;
    j["alpha"] = toString(spec.alpha);
    j["mode"] = toString(spec.mode);
    j["N"] = last.N;
    j["precision_bits"] = last.precisionBits;
    j["estimate"] = last.value;
    j["stable"] = last.stable;
    if (path.size() > 1) {
        j["checkpoints"] = json::array();
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            j["checkpoints"].push_back({{"N", path[i].N}, {"estimate", path[i].value}});
        }
    }
    return j.dump(2) + "\n";
}

std::string runDensity(const DensityArgs &a, long &bitsUsed) {
    MomentSpec spec = momentSpec(a.source, a.alpha, a.mode);
    long bits = a.precisionBits;
    if (bits < 0) {
        bits = a.N <= kExactThreshold ? 0 : defaultPrecisionBits(a.N);
    }
    bitsUsed = bits;
    DensityApprox d = bits == 0 ? reconstruct(buildMoments(spec, a.N))
                                : reconstruct(buildMomentsFloat(spec, a.N, static_cast<mpfr_prec_t>(bits)));
    std::ostringstream out;
    out << "x,fhat\n" << std::setprecision(12);
    for (const auto &s : sampleDensity(d, a.points)) {
        out << s.x << ',' << s.fhat << '\n';
    }
    return out.str();
}

std::vector<SamplePoint> readSamples(const std::string &path, long start) {
    std::ifstream in(path);
    if (!in) {
        throw CLI::ValidationError("--input", "cannot open '" + path + "'");
    }
    json doc = json::parse(in);
    auto asRational = [](const json &v) {
        return v.is_string() ? parseRational(v.get<std::string>()) : Rational(v.get<long>());
    };
    json values = doc;
    if (doc.is_object()) {
        start = doc.value("start", start);
        values = doc.at("values");
    }
    std::vector<SamplePoint> samples;
    long k = start;
    for (const auto &v : values) {
        if (v.is_array()) {
            samples.emplace_back(v.at(0).get<long>(), asRational(v.at(1)));
        } else {
            samples.emplace_back(k++, asRational(v));
        }
    }
    return samples;
}

std::string runFit(const FitArgs &a) {
    RationalFunctionQ r = autoFit(readSamples(a.input, a.start), a.maxDegree);
    return r.toString() + "\n";
}

std::string runOracle(const OracleArgs &a) {
    QuadSpec spec{a.tol};
    if (a.integrand == "normalization") {
        return normalization(a.alpha, spec).toJson() + "\n";
    }
    if (a.integrand == "convention") {
        json j;
        j["convention"] = toString(detectConvention(a.alpha, spec));
        return j.dump() + "\n";
    }
    if (a.integrand == "monomial") {
        if (a.exponents.size() != 4) {
            throw CLI::ValidationError("--exponents", "four exponents are required");
        }
        std::array<int, 4> e{a.exponents[0], a.exponents[1], a.exponents[2], a.exponents[3]};
        return expectMonomial(e, a.k, a.alpha, spec).toJson() + "\n";
    }
    if (a.integrand == "pt-squared") {
        return expectPtSquared(a.k, spec).toJson() + "\n";
    }
    OracleResult first = expectFirstThree(a.k, spec);
    if (a.integrand == "first-three") {
        return first.toJson() + "\n";
    }
    OracleResult assembled = first;
    assembled.integrand = "assemble";
    assembled.value = assembleN2(a.k, first.value);
    return assembled.toJson() + "\n";
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact determinantal moments, separability-probability estimates and checks", "detmoments"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");
    app.config_formatter(std::make_shared<CLI::ConfigINI>());

    Globals g;
    app.add_option("--threads", g.threads, "Worker threads (0 = all cores)")->capture_default_str();
    app.add_option("--digits", g.digits, "Significant digits for decimal output")
        ->check(CLI::Range(1, 10000))
        ->capture_default_str();
    app.add_option("--manifest", g.manifest, "Write a JSON run manifest to this path");

    MomentArgs ma;
    auto *moment = app.add_subcommand("moment", "Exact moment ratio of a scenario");
    moment->add_option("--scenario", ma.scenario, "bures-2qubit, bures-2rebit, hs-2qubit, hs-qubit-qutrit, ...")
        ->capture_default_str();
    moment->add_option("--alpha", ma.alpha, "Override the scenario's alpha");
    moment->add_option("--quantity", ma.quantity, "ratio, det, prefactor, hybrid or trial")
        ->check(CLI::IsMember({"ratio", "det", "prefactor", "hybrid", "trial"}))
        ->capture_default_str();
    moment->add_option("--n", ma.n, "Power of the partial-transpose determinant")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    moment->add_option("--k", ma.k, "Power of the determinant (rational)")->capture_default_str();
    moment->add_flag("--paper-literal", ma.paperLiteral, "Use the printed n = 2 denominator constant");

    VerifyArgs va;
    auto *verify = app.add_subcommand("verify", "Run an exact identity suite");
    std::vector<std::string> suites = suiteNames();
    suites.push_back("all");
    verify->add_option("--suite", va.suite, "Suite name")->required()->check(CLI::IsMember(suites));
    verify->add_flag("--paper-literal", va.paperLiteral, "n2-rebit: printed denominator constant");
    verify->add_flag("--literal", va.literal, "Hybrid suites: compare with the plain binomial summation");
    verify->add_flag("--full", va.full, "Wider grids");
    verify->add_flag("--json", va.json, "JSON report");

    SepProbArgs sa;
    auto *sep = app.add_subcommand("sep-prob", "Separability probability by Legendre moment inversion");
    sep->add_option("--source", sa.source, "hybrid, trial or hs")
        ->check(CLI::IsMember({"hybrid", "trial", "hs"}))
        ->capture_default_str();
    sep->add_option("--alpha", sa.alpha)->capture_default_str();
    sep->add_option("--mode", sa.mode, "k-zero or balanced")
        ->check(CLI::IsMember({"k-zero", "balanced"}))
        ->capture_default_str();
    sep->add_option("--N", sa.N, "Number of moments")->check(CLI::PositiveNumber)->capture_default_str();
    sep->add_option("--precision-bits", sa.precisionBits, "0 = exact, negative = automatic")->capture_default_str();
    sep->add_option("--checkpoint", sa.checkpoints, "Also report the estimate truncated at this degree");

    DensityArgs da;
    auto *density = app.add_subcommand("density", "CSV samples of the reconstructed density");
    density->add_option("--source", da.source)->check(CLI::IsMember({"hybrid", "trial", "hs"}))->capture_default_str();
    density->add_option("--alpha", da.alpha)->capture_default_str();
    density->add_option("--mode", da.mode)->check(CLI::IsMember({"k-zero", "balanced"}))->capture_default_str();
    density->add_option("--N", da.N)->check(CLI::PositiveNumber)->capture_default_str();
    density->add_option("--points", da.points)->check(CLI::PositiveNumber)->capture_default_str();
    density->add_option("--precision-bits", da.precisionBits)->capture_default_str();
    density->add_option("--output,-o", da.output, "Write the CSV here instead of stdout");

    FitArgs fa;
    auto *fit = app.add_subcommand("fit", "Fit a rational function to an exact sequence");
    fit->add_option("--input", fa.input, "JSON array of values, [k, value] pairs, or {start, values}")
        ->required()
        ->check(CLI::ExistingFile);
    fit->add_option("--max-degree", fa.maxDegree, "Largest total degree tried")->capture_default_str();
    fit->add_option("--start", fa.start, "Index of the first value")->capture_default_str();

    OracleArgs oa;
    auto *oracle = app.add_subcommand("oracle", "Quadrature over the Bures eigenvalue measure");
    oracle->add_option("--integrand", oa.integrand)
        ->check(CLI::IsMember({"normalization", "convention", "monomial", "pt-squared", "first-three", "assemble"}))
        ->capture_default_str();
    oracle->add_option("--alpha", oa.alpha)->capture_default_str();
    oracle->add_option("--k", oa.k)->check(CLI::NonNegativeNumber)->capture_default_str();
    oracle->add_option("--tol", oa.tol, "Relative tolerance")->capture_default_str();
    oracle->add_option("--exponents", oa.exponents, "Four exponents for --integrand monomial")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    setThreadCount(g.threads);

    auto started = std::chrono::steady_clock::now();
    std::string output;
    int status = 0;
    long bits = 0;
    try {
        if (*moment) {
            output = runMoment(ma, g);
        } else if (*verify) {
            output = runVerify(va, status);
        } else if (*sep) {
            output = runSepProb(sa, g, bits);
        } else if (*density) {
            output = runDensity(da, bits);
        } else if (*fit) {
            output = runFit(fa);
        } else {
            output = runOracle(oa);
        }
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PrecisionInsufficient &e) {
        std::cerr << "precision insufficient: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const ToleranceNotMet &e) {
        std::cerr << "tolerance not met: " << e.what() << '\n';
        return kExitPrecision;
    } catch (const NoFit &e) {
        std::cerr << "no fit: " << e.what() << '\n';
        return kExitVerify;
    } catch (const AmbiguousFit &e) {
        std::cerr << "ambiguous fit: " << e.what() << '\n';
        return kExitVerify;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const json::exception &e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kExitUsage;
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

    if (*density && !da.output.empty()) {
        std::ofstream(da.output) << output;
    } else {
        std::cout << output;
    }

    if (!g.manifest.empty()) {
        json m;
        std::vector<std::string> args(argv, argv + argc);
        m["command_line"] = args;
        m["config"] = app.config_to_str(true, false);
        m["precision_bits"] = bits;
        m["duration_seconds"] = seconds;
        m["exit_status"] = status;
        m["output_sha256"] = sha256Hex(output);
        std::ofstream(g.manifest) << m.dump(2) << '\n';
    }
    std::cerr << "done in " << std::fixed << std::setprecision(3) << seconds << " s\n";
    return status;
}
