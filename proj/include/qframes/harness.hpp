#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qframes/frames.hpp"
#include "qframes/qmatrix.hpp"
#include "qframes/qvector.hpp"

namespace qframes {

/// Deterministic 64-bit generator for the randomized certification suite:
/// xoshiro256++ seeded through SplitMix64, with normal draws produced by the
/// Box-Muller transform of uniform bits. Identical streams on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream for one (entry, trial) cell: a SplitMix64 pass over
    /// seed, entry and trial derives the stream seed, so serial and parallel
    /// execution draw identical numbers.
    static Rng for_trial(std::uint64_t seed, std::uint64_t entry, std::uint64_t trial);

    std::uint64_t next_u64();
    double uniform(); ///< in [0, 1)
    double normal();  ///< standard normal

private:
    std::uint64_t state_[4];
    bool has_spare_ = false;
    double spare_ = 0.0;
};

Quaternion gen_quaternion(Rng& rng);
QVector gen_vector(Rng& rng, std::size_t n);
QMatrix gen_matrix(Rng& rng, std::size_t rows, std::size_t cols);
FrameSystem gen_frame(Rng& rng, std::size_t n, std::size_t m);

struct KFrameInstance {
    FrameSystem frame;
    QMatrix op; ///< K = T X0 for a random X0, so R(K) lies inside R(T)
};

KFrameInstance gen_kframe_instance(Rng& rng, std::size_t n, std::size_t m);

struct GenConfig {
    std::uint64_t seed = 0;
    std::size_t n1 = 4;
    std::size_t n2 = 4;
    std::size_t m = 8;
    std::size_t trials = 100;
    double tol = 1e-8;
    std::size_t threads = 1;
    /// Sensitivity control: perturb one canonical dual vector by 1e-3 inside
    /// the reconstruction entry, which must then fail.
    bool inject_fault = false;
};

struct SuiteEntry {
    std::string id;
    std::string anchor; ///< the certified property, stated as mathematics
    std::size_t trials = 0;
    std::size_t passes = 0;
    double worst_residual = 0.0;
    std::optional<std::string> witness; ///< first failing trial, when any
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    double tolerance = 0.0;
    bool overall = false;
    std::vector<SuiteEntry> entries;
};

/// Runs every certification entry cfg.trials times on independently seeded
/// instances. Negative controls (rejections that must happen) count as passes
/// when the rejection occurs. Failures are data, not errors.
SuiteReport run_suite(const GenConfig& cfg);

} // namespace qframes
