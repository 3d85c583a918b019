#include "dnne/network_io.hpp"

#include "dnne/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

namespace dnne::io {

namespace {

std::string fmt(double v) {
    std::array<char, 32> buf;
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), ptr);
}

double parse_double(const std::string& tok, const char* what) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FormatError(std::string("bad ") + what + ": " + tok);
    return v;
}

} // namespace

std::string network_to_text(const ann::NetworkSpec& net) {
    net.validate();
    std::ostringstream out;
    out << "dnne-network 1\n";
    out << "output_readout "
        << (net.output_readout == ann::OutputReadout::Step ? "step" : "fraction")
        << '\n';
    out << "sizes";
    for (auto s : net.layer_sizes) out << ' ' << s;
    out << '\n';
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        const auto& layer = net.layers[l];
        out << "layer " << l << " rows " << layer.weights.rows << " cols "
            << layer.weights.cols << '\n';
        out << "scale " << fmt(layer.scale) << '\n';
        out << "thresholds";
        for (double t : layer.thresholds) out << ' ' << fmt(t);
        out << '\n';
        for (std::size_t r = 0; r < layer.weights.rows; ++r) {
            out << "w";
            for (std::size_t c = 0; c < layer.weights.cols; ++c)
                out << ' ' << fmt(layer.weights.at(r, c));
            out << '\n';
        }
    }
    return out.str();
}

ann::NetworkSpec network_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string magic;
    int version = 0;
    if (!(in >> magic >> version) || magic != "dnne-network")
        throw FormatError("not a dnne-network file");
    if (version != 1)
        throw FormatError("unsupported network format version " +
                          std::to_string(version));

    ann::NetworkSpec net;
    std::string key;
    if (!(in >> key) || key != "output_readout")
        throw FormatError("expected output_readout");
    std::string readout;
    in >> readout;
    if (readout == "step")
        net.output_readout = ann::OutputReadout::Step;
    else if (readout == "fraction")
        net.output_readout = ann::OutputReadout::Fraction;
    else
        throw FormatError("unknown output readout: " + readout);

    if (!(in >> key) || key != "sizes")
        throw FormatError("expected sizes");
    {
        std::string rest;
        std::getline(in, rest);
        std::istringstream ss(rest);
        std::size_t s;
        while (ss >> s) net.layer_sizes.push_back(s);
    }
    if (net.layer_sizes.size() < 2)
        throw FormatError("network needs at least two layer sizes");

    for (std::size_t l = 0; l + 1 < net.layer_sizes.size(); ++l) {
        std::size_t index = 0, rows = 0, cols = 0;
        std::string kw_rows, kw_cols;
        if (!(in >> key >> index >> kw_rows >> rows >> kw_cols >> cols) ||
            key != "layer" || kw_rows != "rows" || kw_cols != "cols")
            throw FormatError("expected layer header for layer " + std::to_string(l));
        if (index != l)
            throw FormatError("layer headers out of order");
        ann::QuantizedLayer layer;
        layer.weights = ann::Matrix(rows, cols);
        std::string tok;
        if (!(in >> key >> tok) || key != "scale")
            throw FormatError("expected scale for layer " + std::to_string(l));
        layer.scale = parse_double(tok, "scale");
        if (!(in >> key) || key != "thresholds")
            throw FormatError("expected thresholds for layer " + std::to_string(l));
        layer.thresholds.resize(rows);
        for (auto& t : layer.thresholds) {
            if (!(in >> tok)) throw FormatError("missing threshold value");
            t = parse_double(tok, "threshold");
        }
        for (std::size_t r = 0; r < rows; ++r) {
            if (!(in >> key) || key != "w")
                throw FormatError("expected weight row " + std::to_string(r));
            for (std::size_t c = 0; c < cols; ++c) {
                if (!(in >> tok)) throw FormatError("missing weight value");
                layer.weights.at(r, c) = parse_double(tok, "weight");
            }
        }
        net.layers.push_back(std::move(layer));
    }
    net.validate();
    return net;
}

void save_network(const ann::NetworkSpec& net, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw IoError(path + ": cannot open for writing");
    out << network_to_text(net);
    if (!out)
        throw IoError(path + ": write failed");
}

ann::NetworkSpec load_network(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError(path + ": cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return network_from_text(ss.str());
}

} // namespace dnne::io
