#include "dnne/ann.hpp"
#include "dnne/chem.hpp"
#include "dnne/config.hpp"
#include "dnne/dataset.hpp"
#include "dnne/device.hpp"
#include "dnne/errors.hpp"
#include "dnne/fluidics.hpp"
#include "dnne/network_io.hpp"
#include "dnne/stochastic.hpp"
#include "dnne/trace.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace dnne;

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        values.push_back(std::stod(tok));
    return values;
}

std::vector<std::uint64_t> parse_csv_sizes(const std::string& text) {
    std::vector<std::uint64_t> values;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ','))
        values.push_back(std::stoull(tok));
    return values;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw IoError(path + ": cannot open for writing");
    out << text;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

chem::SampleMode sample_mode_from(const std::string& mode) {
    if (mode == "ideal") return chem::SampleMode::Ideal;
    if (mode == "sampled") return chem::SampleMode::Sampled;
    throw ArgumentError("mode must be ideal or sampled");
}

struct CommonState {
    std::string config_path;
    io::ExperimentConfig cfg;

    void load() {
        cfg = config_path.empty() ? io::default_config() : io::load_config(config_path);
    }
};

int run_gates(const std::string& gate_name, double x, bool have_y, double y,
              std::uint64_t bitstream_n, std::uint64_t seed) {
    auto gate = stoch::gate_from_name(gate_name);
    if (!gate)
        throw ArgumentError("unknown gate: " + gate_name);
    std::optional<Fraction> fy;
    if (have_y) fy = Fraction(y);
    const auto result = stoch::gate_eval(*gate, Fraction(x), fy);
    std::cout << result.value() << '\n';
    if (bitstream_n > 0) {
        const auto s1 = stoch::Bitstream::encode(Fraction(x), bitstream_n, seed);
        stoch::Bitstream out = [&] {
            if (stoch::is_unary(*gate)) return stoch::gate_apply(*gate, s1);
            const auto s2 =
                stoch::Bitstream::encode(Fraction(y), bitstream_n, seed + 1);
            return stoch::gate_apply(*gate, s1, &s2);
        }();
        std::cout << "bitstream_mean " << out.mean() << '\n';
    }
    return 0;
}

int run_multiply(const CommonState& st, double a, double b, const std::string& mode,
                 std::uint64_t molecules, std::uint64_t seed) {
    const auto m = sample_mode_from(mode);
    auto sol = chem::Solution::encode_fraction(Fraction(a), molecules, m, seed);
    const chem::EnzymeDose dose{b * static_cast<double>(molecules), false};
    sol = chem::nick_site_b(sol, dose, 1);
    const auto pool = chem::probe_readout(sol, st.cfg.error_model());
    std::cout << pool.fraction() << '\n';
    return 0;
}

int run_simulate_layer(const CommonState& st, const std::string& inputs_csv,
                       const std::string& weights_path, double theta,
                       const std::string& mode, std::uint64_t molecules,
                       std::uint64_t seed, const std::string& trace_path,
                       const std::string& fault) {
    const auto inputs = parse_csv_doubles(inputs_csv);
    if (inputs.empty())
        throw ArgumentError("need at least one input");
    std::vector<std::vector<double>> weights;
    if (!weights_path.empty()) {
        std::istringstream in(read_text(weights_path));
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            weights.push_back(parse_csv_doubles(line));
        }
    } else {
        weights.assign(inputs.size(), std::vector<double>(inputs.size(), 1.0));
    }

    fluid::FaultInjection faults;
    if (fault == "skip-valve")
        faults.skip_step = std::make_tuple(0, 0, 3);
    else if (fault == "double-occupy")
        faults.double_occupy = std::make_pair(0, 0);
    else if (fault == "swap-merge")
        faults.swap_merge_phases = true;
    else if (!fault.empty())
        throw ArgumentError("unknown fault: " + fault);

    auto activation = st.cfg.activation();
    activation.threshold = theta;
    const auto run = fluid::simulate_layer(inputs, weights, {activation}, molecules,
                                           sample_mode_from(mode), seed,
                                           st.cfg.device.timing, st.cfg.error_model(),
                                           faults);
    for (std::size_t i = 0; i < run.pre_activation.size(); ++i)
        std::cout << "row " << i << " pre " << run.pre_activation[i] << " out "
                  << run.output[i] << '\n';
    if (!trace_path.empty())
        write_text(trace_path, run.trace.to_text());
    return 0;
}

int run_explore(const CommonState& st, bool paper, const std::string& layers_csv,
                bool exact_areas, const std::string& out_path) {
    std::vector<device::ExploreConfig> configs;
    if (paper) {
        configs = device::paper_configs();
        for (auto& c : configs) c.timing = st.cfg.device.timing;
    } else {
        device::ExploreConfig c;
        c.name = "custom";
        c.cells_per_side = st.cfg.device.cells_per_side;
        c.timing = st.cfg.device.timing;
        configs.push_back(c);
    }
    const auto layers = parse_csv_sizes(layers_csv);
    const auto rows = device::explore(configs, layers, exact_areas);
    const auto csv = device::explore_csv(rows);
    if (out_path.empty())
        std::cout << csv;
    else
        write_text(out_path, csv);
    return 0;
}

int run_train(const CommonState& st, const std::string& out_path,
              const std::string& images, const std::string& labels) {
    io::Dataset loaded;
    const io::Dataset* ds;
    if (images.empty()) {
        ds = &io::builtin_digits();
    } else {
        loaded = io::load_idx(images, labels);
        ds = &loaded;
    }
    const auto split =
        io::split_indices(ds->count, st.cfg.train.holdout_fraction, st.cfg.train.seed);
    std::vector<std::size_t> sizes(st.cfg.train.layer_sizes.begin(),
                                   st.cfg.train.layer_sizes.end());
    const auto net = ann::train(*ds, split.train, sizes, st.cfg.hyperparams(),
                                st.cfg.train.seed);
    const double acc = ann::evaluate_accuracy(net, *ds, split.test);
    ann::QuantizeOptions qo;
    qo.output_readout = st.cfg.network.output_readout == "fraction"
                            ? ann::OutputReadout::Fraction
                            : ann::OutputReadout::Step;
    const auto spec = ann::quantize(net, qo);
    if (!out_path.empty())
        io::save_network(spec, out_path);
    std::cout << "holdout_accuracy " << acc << '\n';
    std::cout << "min_weight " << net.min_weight() << '\n';
    if (!out_path.empty())
        std::cout << "saved " << out_path << '\n';
    return 0;
}

ann::ExecOptions exec_options(const CommonState& st, const std::string& mode,
                              std::uint64_t molecules, std::uint64_t seed) {
    ann::ExecOptions opts;
    auto m = ann::mode_from_name(mode);
    if (!m)
        throw ArgumentError("unknown mode: " + mode);
    opts.mode = *m;
    opts.molecules = molecules;
    opts.seed = seed;
    opts.err = st.cfg.error_model();
    opts.output_cap = st.cfg.chemistry.output_cap;
    return opts;
}

int run_infer(const CommonState& st, const std::string& network_path,
              const std::string& input_csv, int sample, const std::string& mode,
              std::uint64_t molecules, std::uint64_t seed,
              const std::string& trace_path) {
    const auto net = io::load_network(network_path);
    std::vector<double> input;
    if (!input_csv.empty()) {
        input = parse_csv_doubles(input_csv);
    } else {
        const auto& ds = io::builtin_digits();
        if (sample < 0 || static_cast<std::size_t>(sample) >= ds.count)
            throw ArgumentError("sample index out of range");
        input = ds.image_vec(static_cast<std::size_t>(sample));
    }
    auto opts = exec_options(st, mode, molecules, seed);
    opts.capture_traces = !trace_path.empty();
    const auto result = ann::infer(net, input, opts, st.cfg.device);
    std::cout << "predicted " << result.predicted << '\n';
    std::cout << "outputs";
    for (double o : result.outputs) std::cout << ' ' << o;
    std::cout << '\n';
    std::cout << "latency_hours " << result.latency_hours << '\n';
    for (std::size_t l = 0; l < result.layer_latency_hours.size(); ++l)
        std::cout << "layer " << l << " latency_hours "
                  << result.layer_latency_hours[l] << '\n';
    if (!trace_path.empty() && !result.traces.empty())
        write_text(trace_path, result.traces.front().to_text());
    return 0;
}

int run_compare(const CommonState& st, const std::string& network_path,
                const std::string& modes_csv, std::uint64_t samples,
                std::uint64_t molecules, std::uint64_t seed,
                const std::string& out_path) {
    const auto net = io::load_network(network_path);
    std::vector<ann::Mode> modes;
    {
        std::stringstream ss(modes_csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            auto m = ann::mode_from_name(tok);
            if (!m)
                throw ArgumentError("unknown mode: " + tok);
            modes.push_back(*m);
        }
    }
    const auto& ds = io::builtin_digits();
    const auto split =
        io::split_indices(ds.count, st.cfg.train.holdout_fraction, st.cfg.train.seed);
    std::vector<std::size_t> indices(
        split.test.begin(),
        split.test.begin() +
            static_cast<std::ptrdiff_t>(std::min<std::size_t>(samples, split.test.size())));
    auto base = exec_options(st, "ideal", molecules, seed);
    const auto rows = ann::compare_modes(net, ds, indices, modes, base);
    const auto csv = ann::compare_csv(rows);
    if (out_path.empty())
        std::cout << csv;
    else
        write_text(out_path, csv);
    return 0;
}

int run_trace_validate(const std::string& trace_path) {
    const auto trace = fluid::Trace::from_text(read_text(trace_path));
    if (const auto v = fluid::validate_trace(trace)) {
        std::cout << "violation " << v->rule << ": " << v->detail << '\n';
        return 1;
    }
    std::cout << "ok " << trace.events.size() << " events\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator for stochastic computation on nicked DNA and the "
                 "microfluidic neural engine built on it"};
    app.require_subcommand(1);

    CommonState st;
    app.add_option("--config", st.config_path, "experiment configuration (JSON)");

    // gates
    std::string gate_name;
    double gx = 0.0, gy = 0.0;
    std::uint64_t g_n = 0, g_seed = 7;
    auto* gates = app.add_subcommand("gates", "evaluate a stochastic gate");
    gates->add_option("--gate", gate_name, "NOT|AND|OR|NAND|NOR|XOR|XNOR")->required();
    gates->add_option("--x", gx, "first input in [0,1]")->required();
    auto* gy_opt = gates->add_option("--y", gy, "second input in [0,1]");
    gates->add_option("--bitstream", g_n, "also sample a bitstream of this length");
    gates->add_option("--seed", g_seed, "bitstream seed");

    // multiply
    double ma = 0.0, mb = 0.0;
    std::string m_mode = "ideal";
    std::uint64_t m_molecules = 0, m_seed = 0;
    auto* multiply = app.add_subcommand("multiply",
                                        "encode, nick and read out a product a*b");
    multiply->add_option("--a", ma, "multiplicand in [0,1]")->required();
    multiply->add_option("--b", mb, "multiplier in [0,1]")->required();
    multiply->add_option("--mode", m_mode, "ideal|sampled");
    auto* m_mol_opt = multiply->add_option("--molecules", m_molecules, "strands per droplet");
    auto* m_seed_opt = multiply->add_option("--seed", m_seed, "sampled-mode seed");

    // simulate-layer
    std::string sl_inputs, sl_weights, sl_mode = "ideal", sl_trace, sl_fault;
    double sl_theta = 0.0;
    std::uint64_t sl_molecules = 0, sl_seed = 0;
    auto* simlayer = app.add_subcommand("simulate-layer",
                                        "run one layer through the microfluidic array");
    simlayer->add_option("--inputs", sl_inputs, "comma-separated inputs in [0,1]")
        ->required();
    simlayer->add_option("--weights-csv", sl_weights,
                         "file with one comma-separated weight row per line "
                         "(default: all-ones square)");
    auto* sl_theta_opt =
        simlayer->add_option("--theta", sl_theta, "activation threshold");
    simlayer->add_option("--mode", sl_mode, "ideal|sampled");
    auto* sl_mol_opt =
        simlayer->add_option("--molecules", sl_molecules, "strands per droplet");
    auto* sl_seed_opt = simlayer->add_option("--seed", sl_seed, "sampled-mode seed");
    simlayer->add_option("--trace", sl_trace, "write the event log here");
    simlayer->add_option("--fault", sl_fault,
                         "inject a protocol fault: skip-valve|double-occupy|swap-merge");

    // explore
    bool ex_paper = false, ex_exact = false;
    std::string ex_layers = "784,784,10", ex_out;
    auto* explore = app.add_subcommand("explore", "design-space sweep (CSV)");
    explore->add_flag("--paper-configs", ex_paper,
                      "use the four published design points");
    explore->add_option("--layers", ex_layers, "network layer sizes");
    explore->add_flag("--exact-areas", ex_exact,
                      "use exact per-cell area coefficients instead of the "
                      "published rounded ones");
    explore->add_option("--out", ex_out, "write CSV here instead of stdout");

    // train
    std::string tr_out, tr_images, tr_labels;
    auto* train = app.add_subcommand("train", "train the float reference network");
    train->add_option("--out", tr_out, "save the quantized network here");
    train->add_option("--images", tr_images, "IDX image file (default: builtin 8x8)");
    train->add_option("--labels", tr_labels, "IDX label file");

    // infer
    std::string in_network, in_input, in_mode = "ideal", in_trace;
    int in_sample = 0;
    std::uint64_t in_molecules = 0, in_seed = 0;
    auto* infer = app.add_subcommand("infer", "run one input through a network");
    infer->add_option("--network", in_network, "network spec file")->required();
    infer->add_option("--input", in_input, "comma-separated input vector");
    infer->add_option("--sample", in_sample, "builtin corpus sample index");
    infer->add_option("--mode", in_mode, "float|ideal|sampled|fluidics");
    auto* in_mol_opt = infer->add_option("--molecules", in_molecules, "strands per droplet");
    auto* in_seed_opt = infer->add_option("--seed", in_seed, "stochastic seed");
    infer->add_option("--trace", in_trace, "write the first layer event log here");

    // compare
    std::string cp_network, cp_modes = "float,ideal", cp_out;
    std::uint64_t cp_samples = 200, cp_molecules = 0, cp_seed = 0;
    auto* compare = app.add_subcommand("compare", "agreement report between modes");
    compare->add_option("--network", cp_network, "network spec file")->required();
    compare->add_option("--modes", cp_modes, "comma-separated execution modes");
    compare->add_option("--samples", cp_samples, "held-out samples to use");
    auto* cp_mol_opt =
        compare->add_option("--molecules", cp_molecules, "strands per droplet");
    auto* cp_seed_opt = compare->add_option("--seed", cp_seed, "stochastic seed");
    compare->add_option("--out", cp_out, "write CSV here instead of stdout");

    // trace-validate
    std::string tv_trace;
    auto* tracevalidate =
        app.add_subcommand("trace-validate", "check an event log against the "
                                             "protocol grammars");
    tracevalidate->add_option("--trace", tv_trace, "event log file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        st.load();
        const auto or_config = [](std::uint64_t flag_value, const CLI::Option* opt,
                                  std::uint64_t config_value) {
            return opt->count() > 0 ? flag_value : config_value;
        };
        if (gates->parsed())
            return run_gates(gate_name, gx, gy_opt->count() > 0, gy, g_n, g_seed);
        if (multiply->parsed())
            return run_multiply(st, ma, mb, m_mode,
                                or_config(m_molecules, m_mol_opt, st.cfg.chemistry.molecules),
                                or_config(m_seed, m_seed_opt, st.cfg.chemistry.seed));
        if (simlayer->parsed())
            return run_simulate_layer(
                st, sl_inputs, sl_weights,
                sl_theta_opt->count() > 0 ? sl_theta : st.cfg.chemistry.threshold,
                sl_mode, or_config(sl_molecules, sl_mol_opt, st.cfg.chemistry.molecules),
                or_config(sl_seed, sl_seed_opt, st.cfg.chemistry.seed), sl_trace,
                sl_fault);
        if (explore->parsed())
            return run_explore(st, ex_paper, ex_layers, ex_exact, ex_out);
        if (train->parsed())
            return run_train(st, tr_out, tr_images, tr_labels);
        if (infer->parsed())
            return run_infer(st, in_network, in_input, in_sample, in_mode,
                             or_config(in_molecules, in_mol_opt, st.cfg.chemistry.molecules),
                             or_config(in_seed, in_seed_opt, st.cfg.chemistry.seed),
                             in_trace);
        if (compare->parsed())
            return run_compare(st, cp_network, cp_modes, cp_samples,
                               or_config(cp_molecules, cp_mol_opt, st.cfg.chemistry.molecules),
                               or_config(cp_seed, cp_seed_opt, st.cfg.chemistry.seed),
                               cp_out);
        if (tracevalidate->parsed())
            return run_trace_validate(tv_trace);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
