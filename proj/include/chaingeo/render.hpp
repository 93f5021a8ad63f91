#pragma once

#include <string>

#include "chaingeo/config.hpp"

namespace chaingeo {

struct RenderOptions {
    int width_px = 800;
    /// Blank border on each side, as a fraction of the figure width; in (0, 1/2).
    Rational margin_fraction{1, 20};
    bool show_labels = true;
    /// Problem square overlay, only valid for CB(1).
    bool show_square = false;
    /// Digits after the decimal point for every printed coordinate, 2..12.
    int decimals = 6;
};

/// Standalone SVG 1.1 document of the configuration.
///
/// Geometry is emitted in model coordinates inside a group whose transform
/// flips the y axis, so every circle's cx/cy/r are the model values printed
/// with `decimals` fixed digits. Output depends only on the arguments.
/// Throws ParameterError for invalid options or a square overlay on anything
/// but CB(1).
std::string render_svg(const ChainConfig& cfg, const RenderOptions& opts = {});

/// Aligned plain-text table, one PASS/FAIL line per entry and a final
/// "OVERALL PASS" / "OVERALL FAIL" line.
std::string render_report(const VerificationReport& report);

/// Fixed-point decimal text, locale independent, never in exponent form.
std::string format_fixed(double value, int decimals);

} // namespace chaingeo
