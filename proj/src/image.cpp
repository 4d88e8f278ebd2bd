#include "dyowa/image.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dyowa/rng.hpp"

namespace dyowa {

namespace {

// Normal deviate at stream position `counter` for `seed`: Box-Muller over
// two SplitMix64 values. u1 is kept away from 0 so the log is finite.
double counter_normal(std::uint64_t seed, std::uint64_t counter) {
    const std::uint64_t a = counter_value(seed, 2 * counter);
    const std::uint64_t b = counter_value(seed, 2 * counter + 1);
    const double u1 = (static_cast<double>(a >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = static_cast<double>(b >> 11) * 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

void check_block_divides(const GrayImage& img, std::size_t k, bool crop) {
    if (k == 0) throw UsageError("block size must be >= 1");
    if (crop) {
        if (img.rows() < k || img.cols() < k) {
            std::ostringstream os;
            os << "image " << img.rows() << "x" << img.cols()
               << " smaller than block size " << k;
            throw DimensionError(os.str());
        }
        return;
    }
    if (img.rows() % k != 0 || img.cols() % k != 0) {
        std::ostringstream os;
        os << "block size " << k << " does not divide image dimensions "
           << img.rows() << "x" << img.cols()
           << " (pass crop to drop the remainder)";
        throw DimensionError(os.str());
    }
}

}  // namespace

GrayImage::GrayImage(std::size_t rows, std::size_t cols,
                     std::vector<double> pixels, int max_value)
    : rows_(rows), cols_(cols), pixels_(std::move(pixels)),
      max_value_(max_value) {
    if (rows_ == 0 || cols_ == 0) {
        throw DimensionError("GrayImage: dimensions must be positive");
    }
    if (pixels_.size() != rows_ * cols_) {
        std::ostringstream os;
        os << "GrayImage: " << pixels_.size() << " pixels for " << rows_ << "x"
           << cols_;
        throw DimensionError(os.str());
    }
    if (max_value_ < 1) {
        throw FormatError("GrayImage: max_value must be >= 1");
    }
    for (double p : pixels_) {
        if (!(p >= 0.0 && p <= 1.0)) {
            std::ostringstream os;
            os << "GrayImage: pixel value " << p << " outside [0,1]";
            throw FormatError(os.str());
        }
    }
}

GrayImage GrayImage::filled(std::size_t rows, std::size_t cols, double value,
                            int max_value) {
    return GrayImage(rows, cols, std::vector<double>(rows * cols, value),
                     max_value);
}

bool GrayImage::same_pixels(const GrayImage& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ &&
           pixels_ == other.pixels_;
}

NoiseSpec::NoiseSpec(double sigma, std::uint64_t seed)
    : sigma(sigma), seed(seed) {
    if (!(sigma > 0.0 && sigma <= 1.0)) {
        throw UsageError("NoiseSpec: sigma must be in (0,1]");
    }
}

GrayImage normalize(std::size_t rows, std::size_t cols,
                    std::span<const int> raw, int max_value) {
    if (max_value < 1) throw FormatError("normalize: max_value must be >= 1");
    if (raw.size() != rows * cols) {
        std::ostringstream os;
        os << "normalize: " << raw.size() << " samples for " << rows << "x"
           << cols;
        throw DimensionError(os.str());
    }
    std::vector<double> pixels(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] < 0 || raw[i] > max_value) {
            std::ostringstream os;
            os << "normalize: sample " << i << " = " << raw[i]
               << " outside [0, " << max_value << "]";
            throw FormatError(os.str());
        }
        pixels[i] = static_cast<double>(raw[i]) / max_value;
    }
    return GrayImage(rows, cols, std::move(pixels), max_value);
}

std::vector<int> denormalize(const GrayImage& img) {
    std::vector<int> out(img.rows() * img.cols());
    const double max = img.max_value();
    auto pixels = img.pixels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double scaled = std::floor(pixels[i] * max + 0.5);  // half-up
        out[i] = static_cast<int>(std::clamp(scaled, 0.0, max));
    }
    return out;
}

BlockGrid partition(const GrayImage& img, std::size_t k, bool crop) {
    check_block_divides(img, k, crop);
    BlockGrid grid;
    grid.block_size = k;
    grid.block_rows = img.rows() / k;
    grid.block_cols = img.cols() / k;
    grid.max_value = img.max_value();
    grid.tiles.reserve(grid.block_rows * grid.block_cols);
    for (std::size_t bi = 0; bi < grid.block_rows; ++bi) {
        for (std::size_t bj = 0; bj < grid.block_cols; ++bj) {
            std::vector<double> tile;
            tile.reserve(k * k);
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = 0; c < k; ++c) {
                    tile.push_back(img.at(bi * k + r, bj * k + c));
                }
            }
            grid.tiles.push_back(std::move(tile));
        }
    }
    return grid;
}

GrayImage assemble(const BlockGrid& grid) {
    const std::size_t k = grid.block_size;
    const std::size_t rows = grid.block_rows * k;
    const std::size_t cols = grid.block_cols * k;
    std::vector<double> pixels(rows * cols);
    for (std::size_t bi = 0; bi < grid.block_rows; ++bi) {
        for (std::size_t bj = 0; bj < grid.block_cols; ++bj) {
            const auto& tile = grid.tiles[bi * grid.block_cols + bj];
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = 0; c < k; ++c) {
                    pixels[(bi * k + r) * cols + bj * k + c] = tile[r * k + c];
                }
            }
        }
    }
    return GrayImage(rows, cols, std::move(pixels), grid.max_value);
}

GrayImage reduce(const GrayImage& img, std::size_t k, const Aggregator& agg,
                 bool crop) {
    check_block_divides(img, k, crop);
    if (agg.arity && *agg.arity != k * k) {
        std::ostringstream os;
        os << "reduce: aggregator '" << agg.name << "' has arity "
           << *agg.arity << ", tiles have " << k * k << " pixels";
        throw ArityError(os.str());
    }
    const std::size_t block_rows = img.rows() / k;
    const std::size_t block_cols = img.cols() / k;
    std::vector<double> out(block_rows * block_cols);
    std::vector<double> tile(k * k);
    for (std::size_t bi = 0; bi < block_rows; ++bi) {
        for (std::size_t bj = 0; bj < block_cols; ++bj) {
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = 0; c < k; ++c) {
                    tile[r * k + c] = img.at(bi * k + r, bj * k + c);
                }
            }
            out[bi * block_cols + bj] = agg(UnitVector(tile));
        }
    }
    return GrayImage(block_rows, block_cols, std::move(out), img.max_value());
}

GrayImage magnify(const GrayImage& img, std::size_t k) {
    if (k == 0) throw UsageError("magnify: factor must be >= 1");
    const std::size_t rows = img.rows() * k;
    const std::size_t cols = img.cols() * k;
    std::vector<double> pixels(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            pixels[r * cols + c] = img.at(r / k, c / k);
        }
    }
    return GrayImage(rows, cols, std::move(pixels), img.max_value());
}

GrayImage convolve_dyowa(const GrayImage& img, std::size_t window,
                         ConvolutionRule rule) {
    if (window < 3 || window % 2 == 0) {
        std::ostringstream os;
        os << "convolution window must be odd and >= 3, got " << window;
        throw UsageError(os.str());
    }
    if (window > img.rows() || window > img.cols()) {
        std::ostringstream os;
        os << "convolution window " << window << " exceeds image "
           << img.rows() << "x" << img.cols();
        throw UsageError(os.str());
    }
    const std::ptrdiff_t half = static_cast<std::ptrdiff_t>(window / 2);
    const std::ptrdiff_t rows = static_cast<std::ptrdiff_t>(img.rows());
    const std::ptrdiff_t cols = static_cast<std::ptrdiff_t>(img.cols());

    std::vector<double> cowa_w;
    if (rule == ConvolutionRule::cowa) {
        cowa_w = cowa_weights(window * window).values();
    }

    std::vector<double> out(img.rows() * img.cols());
    std::vector<double> nbhd(window * window);
    std::vector<double> scratch, weights;
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
        for (std::ptrdiff_t j = 0; j < cols; ++j) {
            std::size_t idx = 0;
            for (std::ptrdiff_t di = -half; di <= half; ++di) {
                const auto r = std::clamp<std::ptrdiff_t>(i + di, 0, rows - 1);
                for (std::ptrdiff_t dj = -half; dj <= half; ++dj) {
                    const auto c =
                        std::clamp<std::ptrdiff_t>(j + dj, 0, cols - 1);
                    nbhd[idx++] = img.at(static_cast<std::size_t>(r),
                                         static_cast<std::size_t>(c));
                }
            }
            double value = 0.0;
            switch (rule) {
                case ConvolutionRule::h:
                    value = detail::h_on(nbhd, scratch, weights);
                    break;
                case ConvolutionRule::cowa:
                    scratch.assign(nbhd.begin(), nbhd.end());
                    std::sort(scratch.begin(), scratch.end(),
                              std::greater<>());
                    value = detail::owa_on_sorted_desc(scratch, cowa_w);
                    break;
                case ConvolutionRule::arith:
                    value = detail::arith_on(nbhd);
                    break;
            }
            out[static_cast<std::size_t>(i) * img.cols() +
                static_cast<std::size_t>(j)] = value;
        }
    }
    return GrayImage(img.rows(), img.cols(), std::move(out), img.max_value());
}

GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec) {
    std::vector<double> out(img.rows() * img.cols());
    auto pixels = img.pixels();
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double g = spec.sigma * counter_normal(spec.seed, i);
        out[i] = std::clamp(pixels[i] + g, 0.0, 1.0);
    }
    return GrayImage(img.rows(), img.cols(), std::move(out), img.max_value());
}

}  // namespace dyowa
