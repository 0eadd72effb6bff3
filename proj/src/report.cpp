/**********
 *   Copyright 2026 The gnpvlc authors
 *
 *   Licensed under the Apache License, Version 2.0 (the "License");
 *   you may not use this file except in compliance with the License.
 *   You may obtain a copy of the License at
 *
 *       http://www.apache.org/licenses/LICENSE-2.0
 *
 *   Unless required by applicable law or agreed to in writing, software
 *   distributed under the License is distributed on an "AS IS" BASIS,
 *   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *   See the License for the specific language governing permissions and
 *   limitations under the License.
\**********/
#include "gnpvlc/report.hpp"

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gnpvlc {

std::string format_double(double v) {
    std::array<char, 40> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

namespace {

uint32_t rol(uint32_t x, int n) { return (x << n) | (x >> (32 - n)); }

std::string join_row(const std::vector<double>& vals) {
    std::string row;
    for (size_t i = 0; i < vals.size(); ++i) {
        if (i) row += ',';
        row += format_double(vals[i]);
    }
    row += '\n';
    return row;
}

}  // namespace

std::string sha1_hex(std::string_view data) {
    uint32_t h[5] = {0x67452301u, 0xEFCDAB89u, 0x98BADCFEu, 0x10325476u, 0xC3D2E1F0u};

    const uint64_t bit_len = static_cast<uint64_t>(data.size()) * 8;
    std::string msg(data);
    msg += static_cast<char>(0x80);
    while (msg.size() % 64 != 56) msg += '\0';
    for (int i = 7; i >= 0; --i) msg += static_cast<char>((bit_len >> (8 * i)) & 0xFF);

    for (size_t chunk = 0; chunk < msg.size(); chunk += 64) {
        uint32_t w[80];
        for (int i = 0; i < 16; ++i) {
            w[i] = (static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i])) << 24) |
                   (static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i + 1])) << 16) |
                   (static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i + 2])) << 8) |
                   static_cast<uint32_t>(static_cast<unsigned char>(msg[chunk + 4 * i + 3]));
        }
        for (int i = 16; i < 80; ++i) w[i] = rol(w[i - 3] ^ w[i - 8] ^ w[i - 14] ^ w[i - 16], 1);

        uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4];
        for (int i = 0; i < 80; ++i) {
            uint32_t f, k;
            if (i < 20) {
                f = (b & c) | (~b & d);
                k = 0x5A827999u;
            } else if (i < 40) {
                f = b ^ c ^ d;
                k = 0x6ED9EBA1u;
            } else if (i < 60) {
                f = (b & c) | (b & d) | (c & d);
                k = 0x8F1BBCDCu;
            } else {
                f = b ^ c ^ d;
                k = 0xCA62C1D6u;
            }
            const uint32_t tmp = rol(a, 5) + f + e + k + w[i];
            e = d;
            d = c;
            c = rol(b, 30);
            b = a;
            a = tmp;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d; h[4] += e;
    }

    std::array<char, 41> out{};
    std::snprintf(out.data(), out.size(), "%08x%08x%08x%08x%08x", h[0], h[1], h[2], h[3], h[4]);
    return out.data();
}

std::string to_csv(const HeatmapResult& r) {
    std::string csv;
    csv += "# schema: gnpvlc.heatmap.v1\n";
    csv += "# units: x m, y m, sinr linear, rate bit/s/Hz\n";
    csv += "x,y,sinr_bob,sinr_eve,rate_bob,rate_eve,secrecy_rate\n";
    for (const auto& c : r.cells)
        csv += join_row({c.x, c.y, c.sinr_bob, c.sinr_eve, c.rate_bob, c.rate_eve, c.secrecy});
    return csv;
}

std::string to_csv(const GapHistogram& r) {
    std::string csv;
    csv += "# schema: gnpvlc.gap_hist.v1\n";
    csv += "# units: gap bit/s/Hz, count samples\n";
    csv += "bin_lo,bin_hi,count\n";
    for (size_t i = 0; i < r.bin_counts.size(); ++i) {
        const double lo = r.bin_lo + static_cast<double>(i) * r.bin_width;
        csv += format_double(lo);
        csv += ',';
        csv += format_double(lo + r.bin_width);
        csv += ',';
        csv += std::to_string(r.bin_counts[i]);
        csv += '\n';
    }
    return csv;
}

std::string gap_samples_csv(const GapHistogram& r) {
    std::string csv;
    csv += "# schema: gnpvlc.gap_samples.v1\n";
    csv += "# units: x m, y m, angle_diff rad, rates bit/s/Hz\n";
    csv += "x,y,angle_diff_rad,rs_suboptimal,rs_iterative,gap\n";
    for (const auto& s : r.samples)
        csv += join_row({s.x, s.y, s.angle_diff_rad, s.rs_suboptimal, s.rs_iterative, s.gap});
    return csv;
}

std::string to_csv(const BobSweepResult& r) {
    std::string csv;
    csv += "# schema: gnpvlc.bob_sweep.v1\n";
    csv += "# units: x m, rates bit/s/Hz\n";
    csv += "x,rs_sub_eve_zero,rs_sub_eve_bob,rs_opt_eve_zero,rs_opt_eve_bob\n";
    for (const auto& row : r.rows)
        csv += join_row({row.x, row.rs_sub_eve_zero, row.rs_sub_eve_bob, row.rs_opt_eve_zero,
                         row.rs_opt_eve_bob});
    return csv;
}

std::string to_csv(const SerSweepResult& r) {
    std::string csv;
    csv += "# schema: gnpvlc.ser.v1\n";
    csv += "# units: eve position m, p_tx dBm, ser dimensionless\n";
    csv += "eve_x,eve_y,eve_z,p_tx_dbm,ser_bob,ser_eve\n";
    for (const auto& row : r.rows)
        csv += join_row({row.eve.x, row.eve.y, row.eve.z, row.p_tx_dbm, row.ser_bob, row.ser_eve});
    return csv;
}

std::string to_csv(const MultiEveResult& r) {
    std::string csv;
    csv += "# schema: gnpvlc.multi_eve.v1\n";
    csv += "# units: x m, y m, sinr linear, rate bit/s/Hz\n";
    csv += "x,y,sinr_bob,sinr_eve_max,rate_bob,rate_eve_max,secrecy_rate\n";
    for (const auto& c : r.cells)
        csv += join_row({c.x, c.y, c.sinr_bob, c.sinr_eve, c.rate_bob, c.rate_eve, c.secrecy});
    return csv;
}

std::string run_manifest(const std::string& subcommand, const ExperimentConfig& cfg,
                         const std::string& csv_name, const std::string& csv_sha1,
                         size_t rows) {
    nlohmann::json j;
    j["schema"] = "gnpvlc.manifest.v1";
    j["subcommand"] = subcommand;
    j["seed"] = cfg.seed;
    j["threads"] = cfg.threads;
    j["scheme"] = to_string(cfg.scheme);
    j["config"] = nlohmann::json::parse(cfg.to_json_text());
    j["output"] = {{"csv", csv_name}, {"sha1", csv_sha1}, {"rows", rows}};
    return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace gnpvlc
