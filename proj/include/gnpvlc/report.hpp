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
#ifndef GNPVLC_REPORT_HPP
#define GNPVLC_REPORT_HPP

#include <string>
#include <string_view>

#include "gnpvlc/experiment.hpp"

namespace gnpvlc {

/// Shortest round-trippable decimal representation of a double ("%.17g").
std::string format_double(double v);

/// SHA-1 of a byte string, lowercase hex. Used as the content hash in run
/// manifests.
std::string sha1_hex(std::string_view data);

// CSV serialization. Every format starts with a '# schema:' line, a '# units:'
// line, and a column header; numeric cells are emitted with full precision so
// reruns are byte-comparable.
std::string to_csv(const HeatmapResult& r);
std::string to_csv(const GapHistogram& r);       ///< binned histogram
std::string gap_samples_csv(const GapHistogram& r);
std::string to_csv(const BobSweepResult& r);
std::string to_csv(const SerSweepResult& r);
std::string to_csv(const MultiEveResult& r);

/// JSON run manifest: subcommand, seed/threads/scheme, full config echo, and
/// the CSV content hash.
std::string run_manifest(const std::string& subcommand, const ExperimentConfig& cfg,
                         const std::string& csv_name, const std::string& csv_sha1,
                         size_t rows);

void write_text_file(const std::string& path, std::string_view content);

}  // namespace gnpvlc

#endif
