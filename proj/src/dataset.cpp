#include "dnne/dataset.hpp"

#include "dnne/errors.hpp"
#include "dnne/rng.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>

namespace dnne::io {

namespace detail {
extern const int kDigitsCount;
extern const int kDigitsDim;
extern const char* const kDigitsPixels;
extern const char* const kDigitsLabels;
} // namespace detail

namespace {

constexpr std::uint32_t kImagesMagic = 0x00000803;
constexpr std::uint32_t kLabelsMagic = 0x00000801;

std::uint32_t read_u32_be(std::istream& in, const std::string& path) {
    unsigned char b[4];
    if (!in.read(reinterpret_cast<char*>(b), 4))
        throw IoError(path + ": truncated header");
    return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
           (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

void write_u32_be(std::ostream& out, std::uint32_t v) {
    const unsigned char b[4] = {
        static_cast<unsigned char>(v >> 24), static_cast<unsigned char>(v >> 16),
        static_cast<unsigned char>(v >> 8), static_cast<unsigned char>(v)};
    out.write(reinterpret_cast<const char*>(b), 4);
}

} // namespace

Dataset load_idx(const std::string& images_path, const std::string& labels_path) {
    std::ifstream img(images_path, std::ios::binary);
    if (!img)
        throw IoError(images_path + ": cannot open");
    std::ifstream lab(labels_path, std::ios::binary);
    if (!lab)
        throw IoError(labels_path + ": cannot open");

    const auto img_magic = read_u32_be(img, images_path);
    if (img_magic != kImagesMagic)
        throw FormatError(images_path + ": bad magic (expected 0x00000803)");
    const auto n_images = read_u32_be(img, images_path);
    const auto rows = read_u32_be(img, images_path);
    const auto cols = read_u32_be(img, images_path);

    const auto lab_magic = read_u32_be(lab, labels_path);
    if (lab_magic != kLabelsMagic)
        throw FormatError(labels_path + ": bad magic (expected 0x00000801)");
    const auto n_labels = read_u32_be(lab, labels_path);

    if (n_images != n_labels)
        throw ConsistencyError("image/label count mismatch: " +
                               std::to_string(n_images) + " vs " +
                               std::to_string(n_labels));

    Dataset ds;
    ds.count = n_images;
    ds.dim = static_cast<std::size_t>(rows) * cols;
    ds.images.resize(ds.count * ds.dim);
    ds.labels.resize(ds.count);

    std::vector<unsigned char> buf(ds.dim);
    for (std::size_t i = 0; i < ds.count; ++i) {
        if (!img.read(reinterpret_cast<char*>(buf.data()),
                      static_cast<std::streamsize>(buf.size())))
            throw IoError(images_path + ": truncated at image " + std::to_string(i));
        for (std::size_t j = 0; j < ds.dim; ++j)
            ds.images[i * ds.dim + j] = buf[j] / 255.0;
        char c;
        if (!lab.get(c))
            throw IoError(labels_path + ": truncated at label " + std::to_string(i));
        ds.labels[i] = static_cast<unsigned char>(c);
    }
    return ds;
}

void save_idx(const Dataset& ds, std::size_t image_rows, std::size_t image_cols,
              const std::string& images_path, const std::string& labels_path) {
    if (image_rows * image_cols != ds.dim)
        throw ArgumentError("image shape does not match dataset dim");
    std::ofstream img(images_path, std::ios::binary);
    if (!img)
        throw IoError(images_path + ": cannot open for writing");
    write_u32_be(img, kImagesMagic);
    write_u32_be(img, static_cast<std::uint32_t>(ds.count));
    write_u32_be(img, static_cast<std::uint32_t>(image_rows));
    write_u32_be(img, static_cast<std::uint32_t>(image_cols));
    for (double v : ds.images)
        img.put(static_cast<char>(static_cast<unsigned char>(v * 255.0 + 0.5)));

    std::ofstream lab(labels_path, std::ios::binary);
    if (!lab)
        throw IoError(labels_path + ": cannot open for writing");
    write_u32_be(lab, kLabelsMagic);
    write_u32_be(lab, static_cast<std::uint32_t>(ds.count));
    for (int l : ds.labels)
        lab.put(static_cast<char>(static_cast<unsigned char>(l)));
}

const Dataset& builtin_digits() {
    static const Dataset ds = [] {
        Dataset d;
        d.count = static_cast<std::size_t>(detail::kDigitsCount);
        d.dim = static_cast<std::size_t>(detail::kDigitsDim);
        d.images.resize(d.count * d.dim);
        d.labels.resize(d.count);
        const char* p = detail::kDigitsPixels;
        for (std::size_t i = 0; i < d.count * d.dim; ++i) {
            const char c = p[i];
            const int v = c <= '9' ? c - '0' : c - 'A' + 10;
            d.images[i] = v / 16.0;
        }
        const char* l = detail::kDigitsLabels;
        for (std::size_t i = 0; i < d.count; ++i)
            d.labels[i] = l[i] - '0';
        return d;
    }();
    return ds;
}

Split split_indices(std::size_t count, double holdout_fraction, std::uint64_t seed) {
    if (!(holdout_fraction > 0.0 && holdout_fraction < 1.0))
        throw ArgumentError("holdout_fraction must be in (0,1)");
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Rng rng(seed);
    // Fisher-Yates with our portable generator (std::shuffle is
    // implementation-defined).
    for (std::size_t i = count; i > 1; --i) {
        const auto j = static_cast<std::size_t>(rng.next_below(i));
        std::swap(order[i - 1], order[j]);
    }
    const auto n_test = static_cast<std::size_t>(count * holdout_fraction);
    Split s;
    s.test.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n_test));
    s.train.assign(order.begin() + static_cast<std::ptrdiff_t>(n_test), order.end());
    return s;
}

} // namespace dnne::io
