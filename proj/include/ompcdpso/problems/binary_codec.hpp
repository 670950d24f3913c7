#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "../core.hpp"

namespace ompcdpso {

// Plain (non-Gray) fixed-point binary encoding of a box-bounded real vector.
// Each dimension takes `bits_per_dim` genes, most significant bit first, and
// code v maps affinely onto lower + v * (upper - lower) / (2^B - 1).
class BinaryCodec {
public:
    BinaryCodec(unsigned bits_per_dim, std::vector<double> lower, std::vector<double> upper)
        : bits_(bits_per_dim), lower_(std::move(lower)), upper_(std::move(upper))
    {
        if (bits_ < 2 || bits_ > 52)
            throw std::invalid_argument("BinaryCodec: bits_per_dim must lie in [2, 52]");
        if (lower_.empty() || lower_.size() != upper_.size())
            throw std::invalid_argument("BinaryCodec: lower/upper must be non-empty and equal length");
        for (std::size_t d = 0; d < lower_.size(); ++d)
            if (!(lower_[d] < upper_[d]))
                throw std::invalid_argument("BinaryCodec: lower must be below upper");
        levels_ = static_cast<double>((std::uint64_t{1} << bits_) - 1);
    }

    unsigned bits_per_dim() const { return bits_; }
    std::size_t n_dims() const { return lower_.size(); }
    std::size_t genome_length() const { return bits_ * lower_.size(); }
    std::uint64_t max_code() const { return (std::uint64_t{1} << bits_) - 1; }

    double value_of(std::size_t dim, std::uint64_t code) const
    {
        const double v = lower_[dim] + static_cast<double>(code) * (upper_[dim] - lower_[dim]) / levels_;
        // Guard the upper endpoint against rounding past the box.
        return std::min(v, upper_[dim]);
    }

    void decode_into(const Genome& g, std::vector<double>& out) const
    {
        if (g.size() != genome_length())
            throw std::invalid_argument("BinaryCodec::decode: genome length mismatch");
        out.resize(n_dims());
        for (std::size_t d = 0; d < n_dims(); ++d) {
            std::uint64_t code = 0;
            for (unsigned b = 0; b < bits_; ++b) {
                const Gene bit = g[d * bits_ + b];
                if (bit > 1)
                    throw std::invalid_argument("BinaryCodec::decode: genome is not binary");
                code = (code << 1) | bit;
            }
            out[d] = value_of(d, code);
        }
    }

    std::vector<double> decode(const Genome& g) const
    {
        std::vector<double> out;
        decode_into(g, out);
        return out;
    }

    // Nearest grid code per dimension (values are clamped into the box).
    Genome encode(std::span<const double> x) const
    {
        if (x.size() != n_dims())
            throw std::invalid_argument("BinaryCodec::encode: dimension mismatch");
        Genome g(genome_length(), 0);
        for (std::size_t d = 0; d < n_dims(); ++d) {
            const double t = (x[d] - lower_[d]) / (upper_[d] - lower_[d]);
            const double clamped = std::clamp(t, 0.0, 1.0);
            const auto code = static_cast<std::uint64_t>(std::llround(clamped * levels_));
            for (unsigned b = 0; b < bits_; ++b)
                g[d * bits_ + b] = static_cast<Gene>((code >> (bits_ - 1 - b)) & 1U);
        }
        return g;
    }

private:
    unsigned bits_;
    std::vector<double> lower_;
    std::vector<double> upper_;
    double levels_ = 0.0;
};

} // namespace ompcdpso
