#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include "distillab/mlp.hpp"

namespace distillab {

/// Snapshot of a model at the end of a training epoch.
struct Checkpoint {
    int epoch = 1;  // 1-based
    MlpModel model;
    std::optional<double> dev_metric;
    std::uint64_t seed = 0;  // rng label of the run that produced it
};

/// File format: a JSON envelope with fields magic="DISTILL-LAB-CKPT",
/// version=1, spec, epoch, dev_metric, seed, weights, biases, crc32.
/// Parameters are stored as decimal strings at 17 significant digits, so a
/// round-trip is bit-exact. The crc32 covers the payload fields.
void save_checkpoint(const Checkpoint& ckpt, const std::filesystem::path& path);

/// Throws IntegrityError on a bad magic or checksum and VersionError on an
/// unsupported format version.
Checkpoint load_checkpoint(const std::filesystem::path& path);

/// CRC-32 (IEEE) of a byte string.
std::uint32_t crc32(const std::string& bytes);

/// %.17g rendering used for all persisted reals.
std::string format_double(double v);
double parse_double(const std::string& s);

}  // namespace distillab
