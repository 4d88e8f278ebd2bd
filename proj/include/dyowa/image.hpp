#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dyowa/aggregate.hpp"
#include "dyowa/errors.hpp"

namespace dyowa {

// Grayscale raster with pixels normalized to [0,1]. Keeps the original
// integer bit-depth maximum so files can be written back losslessly.
class GrayImage {
public:
    // Validates: positive dimensions, pixel count rows*cols, pixels in [0,1],
    // max_value >= 1.
    GrayImage(std::size_t rows, std::size_t cols, std::vector<double> pixels,
              int max_value);

    static GrayImage filled(std::size_t rows, std::size_t cols, double value,
                            int max_value);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int max_value() const { return max_value_; }

    double at(std::size_t r, std::size_t c) const {
        return pixels_[r * cols_ + c];
    }
    std::span<const double> pixels() const { return pixels_; }

    bool same_pixels(const GrayImage& other) const;

private:
    std::size_t rows_, cols_;
    std::vector<double> pixels_;  // row-major
    int max_value_;
};

// Row-major k x k tiling of an image.
struct BlockGrid {
    std::size_t block_size = 0;
    std::size_t block_rows = 0;
    std::size_t block_cols = 0;
    std::vector<std::vector<double>> tiles;  // each tile row-major, k*k values
    int max_value = 1;
};

// Seeded Gaussian noise; sigma is a fraction of the normalized dynamic range
// (sigma = 0.10 on [0,1] pixels corresponds to 25.5 gray levels at 8 bits).
struct NoiseSpec {
    double sigma;
    std::uint64_t seed;

    NoiseSpec(double sigma, std::uint64_t seed);
};

enum class ConvolutionRule { h, cowa, arith };

// pixel = raw / max_value. Raw samples outside [0, max_value] are a format
// error.
GrayImage normalize(std::size_t rows, std::size_t cols,
                    std::span<const int> raw, int max_value);

// Integer raster: round-half-up(pixel * max_value), clamped to
// [0, max_value]. Row-major.
std::vector<int> denormalize(const GrayImage& img);

// Tiles the image into k x k blocks. Without `crop`, k must divide both
// dimensions; with it, bottom/right remainders are dropped.
BlockGrid partition(const GrayImage& img, std::size_t k, bool crop = false);

// Reassembles a partition into the image it came from.
GrayImage assemble(const BlockGrid& grid);

// One output pixel per tile: the aggregator applied to the tile flattened
// row-major. The aggregator must accept arity k*k.
GrayImage reduce(const GrayImage& img, std::size_t k, const Aggregator& agg,
                 bool crop = false);

// Enlarges by cloning every pixel into a k x k tile.
GrayImage magnify(const GrayImage& img, std::size_t k);

// Sliding-window filter: each output pixel aggregates the window x window
// neighborhood (flattened row-major, borders replicated). Rule h uses the
// median-deviation weights of the neighborhood, cowa applies the centered
// weights to the descending sort, arith is the plain mean.
GrayImage convolve_dyowa(const GrayImage& img, std::size_t window,
                         ConvolutionRule rule);

// Adds clamped Gaussian noise. The deviate at (i,j) depends only on
// (seed, i, j), so results are bit-identical under any evaluation order.
GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec);

}  // namespace dyowa
