#pragma once

#include <string>
#include <vector>

#include "chaingeo/geom.hpp"

namespace chaingeo {

/// CB: two touching circles of radius a on the baseline with a chain of n
/// congruent circles in the gap between them.
/// CA: one circle of radius a on the baseline touching the two end circles
/// of a chain of n congruent circles from above.
enum class ChainKind { CB, CA };

const char* to_string(ChainKind kind);

/// A fully built chain configuration in the frame where the baseline is
/// y = 0 and the figure is symmetric about x = 0.
///
/// `outer` holds the two radius-a circles (left, right) for CB and the single
/// circle for CA. `chain` lists the congruent circles left to right.
/// C is where the first chain circle touches the left (or only) outer circle,
/// B where the last chain circle touches the right (or only) outer circle, and
/// A is the foot of B on the baseline. d = |AB| and bc = |BC|.
struct ChainConfig {
    ChainKind kind = ChainKind::CB;
    unsigned n = 0;
    QNum a;
    QNum b;
    std::vector<Circle> outer;
    std::vector<Circle> chain;
    Point A;
    Point B;
    Point C;
    QNum d;
    QNum bc;

    Radicand radicand() const { return a.radicand(); }

    friend bool operator==(const ChainConfig&, const ChainConfig&) = default;
};

/// The square ABCD with DA on the baseline, C on the left and B on the right
/// outer circle of CB. `rejected_side` is the other root of the placement
/// equation (the square that does not fit between the circles).
struct SquareResult {
    QNum side;
    QNum rejected_side;
    Point A;
    Point B;
    Point C;
    Point D;
};

struct VerificationEntry {
    std::string name;
    bool holds = false;
};

struct VerificationReport {
    std::vector<VerificationEntry> entries;
    /// Conjunction of all entries; true for an empty report.
    bool overall() const;
    void add(std::string name, bool holds) { entries.push_back({std::move(name), holds}); }
};

/// Chain radius b = a / (sqrt(n) + 1)^2 in Q(sqrt n). A rational `a` is
/// promoted to radicand n.
QNum chain_radius_cb(unsigned n, const QNum& a);

ChainConfig build_cb(unsigned n, const QNum& a);

/// Chain radius b = 4a / (n - 1)^2, requires n >= 2.
QNum chain_radius_ca(unsigned n, const QNum& a);

ChainConfig build_ca(unsigned n, const QNum& a);

/// Incircle of the curvilinear triangle between the two outer circles of CB
/// and the baseline: center (0, a/4), radius a/4.
Circle incircle_delta(const QNum& a);

SquareResult square_in_delta(const QNum& a);

/// The root of the CB height equation that the construction discards:
/// d = 2a / (1 + (1 - sqrt n)^2).
QNum rejected_height_cb(unsigned n, const QNum& a);

/// Evaluates every tangency and every identity of the configuration exactly.
/// Failures are recorded, never thrown.
VerificationReport verify_config(const ChainConfig& cfg);

} // namespace chaingeo
