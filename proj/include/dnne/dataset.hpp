#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dnne::io {

/// An image/label dataset with pixels normalized to [0,1].
struct Dataset {
    std::size_t count = 0;
    std::size_t dim = 0;                // pixels per image
    std::vector<double> images;         // row-major, count x dim
    std::vector<int> labels;            // 0..9

    const double* image(std::size_t i) const { return images.data() + i * dim; }
    std::vector<double> image_vec(std::size_t i) const {
        return {image(i), image(i) + dim};
    }
};

/// Load an IDX image/label file pair (the MNIST container format):
/// magic 0x00000803 for images, 0x00000801 for labels, big-endian dims,
/// one byte per pixel scaled to [0,1] by /255.
Dataset load_idx(const std::string& images_path, const std::string& labels_path);

/// Write a dataset back out as an IDX pair (used by tests and fixtures).
void save_idx(const Dataset& ds, std::size_t image_rows, std::size_t image_cols,
              const std::string& images_path, const std::string& labels_path);

/// The embedded 8x8 handwritten-digit corpus (1797 samples, 64 features,
/// ink levels scaled to [0,1] by /16).
const Dataset& builtin_digits();

/// Deterministic shuffled train/test split.
struct Split {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};
Split split_indices(std::size_t count, double holdout_fraction, std::uint64_t seed);

} // namespace dnne::io
