#pragma once

#include <string>
#include <vector>

#include "pistego/metrics.hpp"

namespace pistego {

/// "inf" for infinity, otherwise the shortest round-trippable decimal.
std::string format_machine(double value);
/// Two decimals; "∞" for infinity.
std::string format_human(double value);

/// Object with width, height, bits_embedded, bpp and a "channels" array of
/// {channel, mse, psnr_db}. Infinite PSNR is the string "inf".
std::string report_to_json(const StegoReport& report);
/// Header: channel,mse,psnr_db,bpp,bits_embedded,width,height; one row per channel.
std::string report_to_csv(const StegoReport& report);
/// Aligned text table: one row, Red/Green/Blue MSE+PSNR columns, then BPP.
std::string report_to_text(const StegoReport& report, const std::string& row_label);

}  // namespace pistego

namespace pistego::detail {

/// First column left-aligned, the rest right-aligned.
std::string align_table(const std::vector<std::vector<std::string>>& rows);

}  // namespace pistego::detail
