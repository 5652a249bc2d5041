// Copyright 2026 The qlin Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qlin/circuit.hpp"
#include "qlin/error.hpp"
#include "qlin/formats.hpp"
#include "qlin/maxcut.hpp"
#include "qlin/optimiser.hpp"
#include "qlin/protocols.hpp"
#include "qlin/qaoa.hpp"
#include "qlin/simulator.hpp"
#include "qlin/std_circuits.hpp"
#include "qlin/vqe.hpp"

namespace qlin::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An input file that could not be read. Reported like a parse failure.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::uint64_t seed = 0;
    bool seedGiven = false;
    std::size_t shots = 1024;
    std::string format = "text";
    std::string backend = "sim";

    std::string input;
    std::string output;
    std::size_t n = 0;
    std::size_t k = 50;
    std::size_t p = 1;
    std::size_t depth = 1;
    std::size_t nSamples = 1000;
    std::size_t maxIter = 0;
    bool maxIterGiven = false;
    std::string graph;
    std::string hamiltonian;

    bool json() const { return format == "json"; }
};

std::string load(const std::string &path) {
    try {
        return readTextFile(path);
    } catch (const QuantumError &e) {
        throw InputError(e.what());
    }
}

/// Stochastic commands need a seed in JSON mode so that output is reproducible.
std::uint64_t seedFor(const Config &config) {
    if (config.seedGiven) {
        return config.seed;
    }
    if (config.json()) {
        throw UsageError("--seed is required with --format json");
    }
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

std::unique_ptr<DeviceBackend> makeBackend(const Config &config, std::uint64_t seed) {
    if (config.backend == "sim") {
        return std::make_unique<SimulatorBackend>(seed);
    }
    throw UsageError("unknown backend '" + config.backend + "'");
}

std::string bitstring(const std::vector<bool> &bits) {
    std::string s;
    s.reserve(bits.size());
    for (bool b : bits) {
        s.push_back(b ? '1' : '0');
    }
    return s;
}

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

json circuitJson(const Circuit &c) {
    json gates = json::array();
    for (const GateApp &g : c.gates()) {
        if (const auto *h = std::get_if<Hadamard>(&g)) {
            gates.push_back({{"gate", "H"}, {"wire", h->wire}});
        } else if (const auto *ph = std::get_if<Phase>(&g)) {
            gates.push_back({{"gate", "P"}, {"angle", ph->angle}, {"wire", ph->wire}});
        } else {
            const auto &cx = std::get<ControlledNot>(g);
            gates.push_back({{"gate", "CNOT"}, {"control", cx.control}, {"target", cx.target}});
        }
    }
    return {{"qubits", c.arity()}, {"gates", gates}};
}

json statsJson(const Circuit &c) {
    const GateCounts counts = gateCounts(c);
    return {{"qubits", c.arity()}, {"depth", depth(c)},       {"H", counts.hadamard},
            {"P", counts.phase},   {"CNOT", counts.cnot},     {"total", counts.total()}};
}

std::string statsLine(const Circuit &c) {
    const GateCounts counts = gateCounts(c);
    return "depth " + std::to_string(depth(c)) + ", H " + std::to_string(counts.hadamard) + ", P " +
           std::to_string(counts.phase) + ", CNOT " + std::to_string(counts.cnot) + ", total " +
           std::to_string(counts.total());
}

void emit(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

void cmdSimulate(const Config &config, std::ostream &out) {
    if (config.shots == 0) {
        throw UsageError("--shots must be at least 1");
    }
    const Circuit circuit = parseCircuitAny(load(config.input));
    const std::uint64_t seed = seedFor(config);
    auto backend = makeBackend(config, seed);
    std::map<std::string, std::size_t> histogram;
    for (std::size_t shot = 0; shot < config.shots; ++shot) {
        auto program = newQubits(circuit.arity()).bind([&circuit](Qubits qs) {
            return applyCircuit(std::move(qs), circuit).bind([](Qubits done) { return measure(std::move(done)); });
        });
        ++histogram[bitstring(execute(*backend, std::move(program)))];
    }
    if (config.json()) {
        json j = json::object();
        for (const auto &[key, count] : histogram) {
            j[key] = count;
        }
        emit(out, j);
        return;
    }
    for (const auto &[key, count] : histogram) {
        out << (key.empty() ? "-" : key) << ' ' << count << ' '
            << fixed(static_cast<double>(count) / static_cast<double>(config.shots), 4) << '\n';
    }
}

void cmdQft(const Config &config, std::ostream &out) {
    const Circuit c = qft(config.n);
    if (config.json()) {
        emit(out, circuitJson(c));
    } else {
        out << toNativeText(c);
    }
}

void cmdDraw(const Config &config, std::ostream &out) {
    const Circuit c = parseCircuitAny(load(config.input));
    if (config.json()) {
        emit(out, {{"drawing", draw(c)}});
    } else {
        out << draw(c);
    }
}

void cmdExportQasm(const Config &config, std::ostream &out) {
    const Circuit c = parseCircuitAny(load(config.input));
    if (config.json()) {
        emit(out, {{"qasm", exportQasm(c)}});
    } else {
        out << exportQasm(c);
    }
}

void cmdOptimise(const Config &config, std::ostream &out) {
    const Circuit before = parseCircuitAny(load(config.input));
    const Circuit after = optimise(before);
    if (!config.output.empty()) {
        std::ofstream file(config.output);
        if (!file) {
            throw InputError("cannot write '" + config.output + "'");
        }
        file << toNativeText(after);
    }
    if (config.json()) {
        emit(out, {{"before", statsJson(before)}, {"after", statsJson(after)}, {"circuit", circuitJson(after)}});
    } else {
        out << "before: " << statsLine(before) << '\n' << "after:  " << statsLine(after) << '\n';
    }
}

void cmdStats(const Config &config, std::ostream &out) {
    const Circuit c = parseCircuitAny(load(config.input));
    if (config.json()) {
        emit(out, statsJson(c));
        return;
    }
    const GateCounts counts = gateCounts(c);
    out << "qubits " << c.arity() << '\n'
        << "depth " << depth(c) << '\n'
        << "H " << counts.hadamard << '\n'
        << "P " << counts.phase << '\n'
        << "CNOT " << counts.cnot << '\n'
        << "total " << counts.total() << '\n';
}

void cmdCoin(const Config &config, std::ostream &out) {
    auto backend = makeBackend(config, seedFor(config));
    const bool bit = coin(*backend);
    if (config.json()) {
        emit(out, {{"bit", bit ? 1 : 0}});
    } else {
        out << (bit ? 1 : 0) << '\n';
    }
}

void cmdRus(const Config &config, std::ostream &out) {
    RusOptions options;
    if (config.maxIterGiven) {
        if (config.maxIter == 0) {
            throw UsageError("--max-iter must be at least 1");
        }
        options.maxIterations = config.maxIter;
    }
    auto backend = makeBackend(config, seedFor(config));
    const RusOutcome outcome = runRus(*backend, exampleUPrime(), identity(1), options);
    if (config.json()) {
        emit(out, {{"bit", outcome.bit ? 1 : 0}, {"failures", outcome.failures}});
    } else {
        out << (outcome.bit ? 1 : 0) << '\n';
    }
}

void cmdVqe(const Config &config, std::ostream &out) {
    const Hamiltonian h = parseHamiltonian(load(config.hamiltonian));
    if (config.k == 0 || config.nSamples == 0) {
        throw UsageError("--k and --nsamples must be at least 1");
    }
    const std::uint64_t seed = seedFor(config);
    auto backend = makeBackend(config, seed);
    RandomSource random = RandomSource::derived(seed, 1);
    RandomSearch search;
    const VqeResult r = vqe(*backend, h, config.depth, config.k, config.nSamples, search, random);
    if (config.json()) {
        json history = json::array();
        for (const VqeRecord &rec : r.history) {
            history.push_back({{"params", rec.params}, {"energy", rec.energy}});
        }
        emit(out, {{"best_energy", r.bestEnergy}, {"best_params", r.bestParams}, {"history", history}});
        return;
    }
    out << "best energy " << fixed(r.bestEnergy, 6) << '\n' << "params";
    for (double a : r.bestParams) {
        out << ' ' << fixed(a, 6);
    }
    out << '\n';
}

void cmdQaoa(const Config &config, std::ostream &out) {
    const Graph g = parseGraph(load(config.graph));
    if (config.k == 0) {
        throw UsageError("--k must be at least 1");
    }
    const std::uint64_t seed = seedFor(config);
    auto backend = makeBackend(config, seed);
    RandomSource random = RandomSource::derived(seed, 1);
    RandomSearch search;
    const QaoaResult r = qaoa(*backend, config.k, config.p, g, search, random);
    if (config.json()) {
        json history = json::array();
        for (const QaoaRecord &rec : r.history) {
            history.push_back({{"betas", rec.params.betas},
                               {"gammas", rec.params.gammas},
                               {"cut", bitstring(rec.cut)},
                               {"value", cutValue(g, rec.cut)}});
        }
        emit(out, {{"cut", bitstring(r.cut)}, {"value", r.value}, {"history", history}});
        return;
    }
    out << "cut " << bitstring(r.cut) << '\n' << "value " << r.value << '\n';
}

std::string oneLine(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    while (!s.empty() && s.back() == ' ') {
        s.pop_back();
    }
    return s;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    Config config;
    CLI::App app{"Quantum circuits, simulation and variational algorithms.", "qlin"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--seed", config.seed, "Seed for every random choice (required with --format json)")
        ->each([&config](const std::string &) { config.seedGiven = true; });
    app.add_option("--shots", config.shots, "Number of shots for simulate")->capture_default_str();
    app.add_option("--format", config.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--backend", config.backend, "Device backend")
        ->check(CLI::IsMember({"sim"}))
        ->capture_default_str();

    auto fileCommand = [&](const char *name, const char *help) {
        CLI::App *sub = app.add_subcommand(name, help);
        sub->add_option("circuit", config.input, "Circuit file (native text or OpenQASM 2.0)")->required();
        return sub;
    };

    CLI::App *simulate = fileCommand("simulate", "Run a circuit from |0...0> and histogram the measured bitstrings");
    CLI::App *qftCmd = app.add_subcommand("qft", "Print the n-qubit Fourier transform circuit");
    qftCmd->add_option("--n", config.n, "Number of qubits")->required();
    CLI::App *drawCmd = fileCommand("draw", "Draw a circuit as ASCII art");
    CLI::App *qasm = fileCommand("export-qasm", "Print a circuit as OpenQASM 2.0");
    CLI::App *opt = fileCommand("optimise", "Peephole-optimise a circuit and print gate counts before and after");
    opt->add_option("-o,--output", config.output, "Write the optimised circuit here");
    CLI::App *stats = fileCommand("stats", "Print depth and gate counts");
    CLI::App *coinCmd = app.add_subcommand("coin", "Toss a quantum coin");
    CLI::App *rusCmd = app.add_subcommand("rus", "Run the repeat-until-success example");
    rusCmd->add_option("--max-iter", config.maxIter, "Give up after this many rounds")
        ->each([&config](const std::string &) { config.maxIterGiven = true; });
    CLI::App *vqeCmd = app.add_subcommand("vqe", "Variational eigensolver with random parameter search");
    vqeCmd->add_option("--ham", config.hamiltonian, "Hamiltonian file")->required();
    vqeCmd->add_option("--depth", config.depth, "Ansatz layers")->capture_default_str();
    vqeCmd->add_option("--k", config.k, "Optimiser iterations")->capture_default_str();
    vqeCmd->add_option("--nsamples", config.nSamples, "Shots per Pauli term")->capture_default_str();
    CLI::App *qaoaCmd = app.add_subcommand("qaoa", "QAOA for MAXCUT with random parameter search");
    qaoaCmd->add_option("--graph", config.graph, "Graph file")->required();
    qaoaCmd->add_option("--k", config.k, "Optimiser iterations")->capture_default_str();
    qaoaCmd->add_option("--p", config.p, "QAOA layers")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error[Usage]: " << oneLine(e.what()) << '\n';
        return kExitUsage;
    }

    try {
        if (simulate->parsed()) {
            cmdSimulate(config, out);
        } else if (qftCmd->parsed()) {
            cmdQft(config, out);
        } else if (drawCmd->parsed()) {
            cmdDraw(config, out);
        } else if (qasm->parsed()) {
            cmdExportQasm(config, out);
        } else if (opt->parsed()) {
            cmdOptimise(config, out);
        } else if (stats->parsed()) {
            cmdStats(config, out);
        } else if (coinCmd->parsed()) {
            cmdCoin(config, out);
        } else if (rusCmd->parsed()) {
            cmdRus(config, out);
        } else if (vqeCmd->parsed()) {
            cmdVqe(config, out);
        } else if (qaoaCmd->parsed()) {
            cmdQaoa(config, out);
        }
    } catch (const UsageError &e) {
        err << "error[Usage]: " << oneLine(e.what()) << '\n';
        return kExitUsage;
    } catch (const InputError &e) {
        err << "error[InvalidArgument]: " << oneLine(e.what()) << '\n';
        return kExitParse;
    } catch (const ParseError &e) {
        err << "error[ParseError]: " << oneLine(e.what()) << '\n';
        return kExitParse;
    } catch (const QuantumError &e) {
        err << "error[" << errorCodeName(e.code()) << "]: " << oneLine(e.what()) << '\n';
        return kExitRuntime;
    } catch (const std::exception &e) {
        err << "error[Internal]: " << oneLine(e.what()) << '\n';
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace qlin::cli
