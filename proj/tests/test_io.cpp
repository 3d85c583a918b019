#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dnne/config.hpp"
#include "dnne/dataset.hpp"
#include "dnne/network_io.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <unistd.h>

using namespace dnne;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("dnne_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_bytes(const std::string& path, const std::vector<unsigned char>& bytes) {
    std::ofstream out(path, std::ios::binary);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
}

void push_u32_be(std::vector<unsigned char>& v, std::uint32_t x) {
    v.push_back(static_cast<unsigned char>(x >> 24));
    v.push_back(static_cast<unsigned char>(x >> 16));
    v.push_back(static_cast<unsigned char>(x >> 8));
    v.push_back(static_cast<unsigned char>(x));
}

} // namespace

TEST_CASE("IDX loader recovers a hand-built fixture exactly") {
    TempDir tmp;
    // Two 2x2 images with known bytes.
    std::vector<unsigned char> img;
    push_u32_be(img, 0x00000803);
    push_u32_be(img, 2);
    push_u32_be(img, 2);
    push_u32_be(img, 2);
    const unsigned char pixels[8] = {0, 51, 102, 153, 204, 255, 10, 20};
    img.insert(img.end(), pixels, pixels + 8);
    std::vector<unsigned char> lab;
    push_u32_be(lab, 0x00000801);
    push_u32_be(lab, 2);
    lab.push_back(7);
    lab.push_back(3);
    write_bytes(tmp.file("img.idx"), img);
    write_bytes(tmp.file("lab.idx"), lab);

    const auto ds = io::load_idx(tmp.file("img.idx"), tmp.file("lab.idx"));
    CHECK(ds.count == 2);
    CHECK(ds.dim == 4);
    for (int i = 0; i < 8; ++i)
        CHECK(ds.images[static_cast<std::size_t>(i)] == pixels[i] / 255.0);
    CHECK(ds.labels[0] == 7);
    CHECK(ds.labels[1] == 3);
}

TEST_CASE("IDX loader rejects bad magic, count mismatch, truncation") {
    TempDir tmp;
    std::vector<unsigned char> img;
    push_u32_be(img, 0xdeadbeef);
    push_u32_be(img, 1);
    push_u32_be(img, 1);
    push_u32_be(img, 1);
    img.push_back(0);
    std::vector<unsigned char> lab;
    push_u32_be(lab, 0x00000801);
    push_u32_be(lab, 1);
    lab.push_back(0);
    write_bytes(tmp.file("bad_magic.idx"), img);
    write_bytes(tmp.file("lab.idx"), lab);
    CHECK_THROWS_AS(io::load_idx(tmp.file("bad_magic.idx"), tmp.file("lab.idx")),
                    FormatError);

    img[0] = 0x00;
    img[1] = 0x00;
    img[2] = 0x08;
    img[3] = 0x03;
    write_bytes(tmp.file("img.idx"), img);
    std::vector<unsigned char> lab2;
    push_u32_be(lab2, 0x00000801);
    push_u32_be(lab2, 2); // claims two labels for one image
    lab2.push_back(0);
    lab2.push_back(1);
    write_bytes(tmp.file("lab2.idx"), lab2);
    CHECK_THROWS_AS(io::load_idx(tmp.file("img.idx"), tmp.file("lab2.idx")),
                    ConsistencyError);

    // Truncated image payload.
    std::vector<unsigned char> img3;
    push_u32_be(img3, 0x00000803);
    push_u32_be(img3, 2);
    push_u32_be(img3, 2);
    push_u32_be(img3, 2);
    img3.push_back(1); // 1 of 8 pixel bytes
    write_bytes(tmp.file("img3.idx"), img3);
    std::vector<unsigned char> lab3;
    push_u32_be(lab3, 0x00000801);
    push_u32_be(lab3, 2);
    lab3.push_back(0);
    lab3.push_back(1);
    write_bytes(tmp.file("lab3.idx"), lab3);
    CHECK_THROWS_AS(io::load_idx(tmp.file("img3.idx"), tmp.file("lab3.idx")), IoError);

    CHECK_THROWS_AS(io::load_idx(tmp.file("missing.idx"), tmp.file("lab.idx")), IoError);
}

TEST_CASE("IDX round-trip through save_idx") {
    TempDir tmp;
    io::Dataset ds;
    ds.count = 3;
    ds.dim = 4;
    ds.images = {0,         1.0 / 255, 2.0 / 255, 3.0 / 255, 10.0 / 255, 20.0 / 255,
                 30.0 / 255, 1.0,       0.5,       0,         0,          1.0};
    ds.labels = {1, 2, 3};
    io::save_idx(ds, 2, 2, tmp.file("img.idx"), tmp.file("lab.idx"));
    const auto back = io::load_idx(tmp.file("img.idx"), tmp.file("lab.idx"));
    CHECK(back.count == ds.count);
    CHECK(back.labels == ds.labels);
    for (std::size_t i = 0; i < ds.images.size(); ++i)
        CHECK(std::abs(back.images[i] - ds.images[i]) <= 0.5 / 255);
}

TEST_CASE("builtin corpus shape and ranges") {
    const auto& ds = io::builtin_digits();
    CHECK(ds.count == 1797);
    CHECK(ds.dim == 64);
    double mx = 0.0;
    for (double v : ds.images) {
        CHECK(v >= 0.0);
        CHECK(v <= 1.0);
        mx = std::max(mx, v);
    }
    CHECK(mx == 1.0);
    int counts[10] = {0};
    for (int l : ds.labels) {
        REQUIRE(l >= 0);
        REQUIRE(l <= 9);
        ++counts[l];
    }
    for (int c : counts) CHECK(c > 100); // every class well represented
}

TEST_CASE("train/test split is deterministic, disjoint and covering") {
    const auto a = io::split_indices(100, 0.2, 42);
    const auto b = io::split_indices(100, 0.2, 42);
    CHECK(a.train == b.train);
    CHECK(a.test == b.test);
    CHECK(a.test.size() == 20);
    CHECK(a.train.size() == 80);
    std::vector<bool> seen(100, false);
    for (auto i : a.train) seen[i] = true;
    for (auto i : a.test) {
        CHECK(!seen[i]); // disjoint
        seen[i] = true;
    }
    for (bool s : seen) CHECK(s);

    const auto c = io::split_indices(100, 0.2, 43);
    CHECK(a.test != c.test);
}

TEST_CASE("network text round-trip is bit-exact") {
    Rng rng(8);
    ann::FloatNetwork fnet;
    ann::FloatLayer l1;
    l1.weights = ann::Matrix(5, 7);
    for (auto& w : l1.weights.data) w = rng.next_double();
    l1.thresholds.resize(5);
    for (auto& t : l1.thresholds) t = rng.uniform(0.05, 1.5);
    fnet.layers.push_back(l1);
    ann::FloatLayer l2;
    l2.weights = ann::Matrix(3, 5);
    for (auto& w : l2.weights.data) w = rng.next_double();
    l2.thresholds.resize(3);
    for (auto& t : l2.thresholds) t = rng.uniform(0.05, 1.0);
    fnet.layers.push_back(l2);
    const auto net = ann::quantize(fnet);

    const auto text = io::network_to_text(net);
    const auto back = io::network_from_text(text);
    REQUIRE(back.layers.size() == net.layers.size());
    CHECK(back.layer_sizes == net.layer_sizes);
    CHECK(back.output_readout == net.output_readout);
    for (std::size_t l = 0; l < net.layers.size(); ++l) {
        CHECK(back.layers[l].scale == net.layers[l].scale); // bitwise
        CHECK(back.layers[l].weights.data == net.layers[l].weights.data);
        CHECK(back.layers[l].thresholds == net.layers[l].thresholds);
    }
    // Idempotent serialization.
    CHECK(io::network_to_text(back) == text);

    TempDir tmp;
    io::save_network(net, tmp.file("net.txt"));
    const auto loaded = io::load_network(tmp.file("net.txt"));
    CHECK(io::network_to_text(loaded) == text);

    CHECK_THROWS_AS(io::network_from_text("dnne-network 2\n"), FormatError);
    CHECK_THROWS_AS(io::network_from_text("nope"), FormatError);
}

TEST_CASE("experiment config: defaults, parsing, field-path errors") {
    const auto cfg = io::default_config();
    CHECK_NOTHROW(cfg.validate());

    const auto text = io::config_to_json_text(cfg);
    const auto parsed = io::config_from_json_text(text);
    CHECK(parsed.chemistry.molecules == cfg.chemistry.molecules);
    CHECK(parsed.device.timing.nick_s == cfg.device.timing.nick_s);

    // Out-of-range fields are rejected with their path in the message.
    try {
        io::config_from_json_text(R"({"chemistry": {"efficiency": 0.0}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("chemistry.efficiency") != std::string::npos);
    }
    try {
        io::config_from_json_text(R"({"device": {"cells_per_side": 0}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("device.cells_per_side") != std::string::npos);
    }
    try {
        io::config_from_json_text(R"({"run": {"mode": "quantum"}})");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("run.mode") != std::string::npos);
    }
    CHECK_THROWS_AS(io::config_from_json_text("{invalid"), ConfigError);
    CHECK_THROWS_AS(io::config_from_json_text(R"({"format_version": 9})"), ConfigError);
}
